#include "catlim/chain_complex.hpp"

#include <algorithm>
#include <sstream>

namespace catlim {

namespace {

std::string dim_str(Index r, Index c) {
    std::ostringstream os;
    os << r << "x" << c;
    return os.str();
}

}  // namespace

ChainComplex ChainComplex::make(int lo, std::vector<Index> ranks, std::vector<IMat> boundaries) {
    if (boundaries.size() != ranks.size())
        throw StructureError("ChainComplex: need one boundary per degree");
    const int n = static_cast<int>(ranks.size());
    for (int k = 0; k < n; ++k) {
        Index rows = k == 0 ? 0 : ranks[k - 1];
        Index want_rows = rows, want_cols = ranks[k];
        IMat& b = boundaries[k];
        if (b.rows() == 0 && b.cols() == 0)
            b = IMat::Zero(want_rows, want_cols);
        if (b.rows() != want_rows || b.cols() != want_cols)
            throw StructureError("ChainComplex: boundary in degree " + std::to_string(lo + k) +
                                 " is " + dim_str(b.rows(), b.cols()) + ", expected " +
                                 dim_str(want_rows, want_cols));
    }
    for (int k = 0; k + 1 < n; ++k) {
        if (!is_zero_matrix<Int>(boundaries[k] * boundaries[k + 1]))
            throw StructureError("ChainComplex: d∘d != 0 between degrees " +
                                 std::to_string(lo + k + 1) + " and " + std::to_string(lo + k - 1));
    }
    // Canonicalize: trim zero ranks at both ends.
    int a = 0, b = n;
    while (a < b && ranks[a] == 0) ++a;
    while (b > a && ranks[b - 1] == 0) --b;
    ChainComplex c;
    c.lo_ = lo + a;
    c.ranks_.assign(ranks.begin() + a, ranks.begin() + b);
    c.boundaries_.assign(boundaries.begin() + a, boundaries.begin() + b);
    if (!c.boundaries_.empty())
        c.boundaries_[0] = IMat::Zero(0, c.ranks_[0]);  // nothing below the window
    return c;
}

ChainComplex ChainComplex::concentrated(int degree, Index r) {
    if (r == 0) return ChainComplex();
    return make(degree, {r}, {IMat::Zero(0, r)});
}

Index ChainComplex::rank(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return ranks_[static_cast<size_t>(n - lo_)];
}

IMat ChainComplex::boundary(int n) const {
    if (n < lo_ || n > hi()) return IMat::Zero(rank(n - 1), rank(n));
    return boundaries_[static_cast<size_t>(n - lo_)];
}

Index ChainComplex::total_rank() const {
    Index t = 0;
    for (Index r : ranks_) t += r;
    return t;
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (int n = lo(); n <= hi(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(rank(n));
    return chi;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.lo_ != b.lo_ || a.ranks_ != b.ranks_) return false;
    for (size_t k = 0; k < a.boundaries_.size(); ++k)
        if (a.boundaries_[k] != b.boundaries_[k]) return false;
    return true;
}

ChainMap ChainMap::make(ChainComplex source, ChainComplex target, int lo, std::vector<IMat> matrices) {
    ChainMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.lo_ = lo;
    f.mats_ = std::move(matrices);
    for (size_t k = 0; k < f.mats_.size(); ++k) {
        int n = lo + static_cast<int>(k);
        IMat& m = f.mats_[k];
        if (m.rows() == 0 && m.cols() == 0) m = IMat::Zero(f.target_.rank(n), f.source_.rank(n));
        if (m.rows() != f.target_.rank(n) || m.cols() != f.source_.rank(n))
            throw StructureError("ChainMap: component in degree " + std::to_string(n) +
                                 " is " + dim_str(m.rows(), m.cols()));
    }
    // Outside the provided window the map must be forced zero by the ranks.
    int def_lo = lo, def_hi = lo + static_cast<int>(f.mats_.size()) - 1;
    int span_lo = std::min(f.source_.lo(), f.target_.lo());
    int span_hi = std::max(f.source_.hi(), f.target_.hi());
    for (int n = span_lo; n <= span_hi; ++n) {
        if (n >= def_lo && n <= def_hi) continue;
        if (f.source_.rank(n) != 0 && f.target_.rank(n) != 0)
            throw StructureError("ChainMap: missing component in degree " + std::to_string(n));
    }
    for (int n = span_lo; n <= span_hi + 1; ++n) {
        IMat lhs = f.target_.boundary(n) * f.matrix(n);
        IMat rhs = f.matrix(n - 1) * f.source_.boundary(n);
        if (lhs != rhs)
            throw StructureError("ChainMap: does not commute with boundaries in degree " +
                                 std::to_string(n));
    }
    return f;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::vector<IMat> mats;
    for (int n = c.lo(); n <= c.hi(); ++n)
        mats.push_back(IMat::Identity(c.rank(n), c.rank(n)));
    return make(c, c, c.lo(), std::move(mats));
}

ChainMap ChainMap::zero(ChainComplex source, ChainComplex target) {
    int lo = std::min(source.lo(), target.lo());
    int hi = std::max(source.hi(), target.hi());
    std::vector<IMat> mats;
    for (int n = lo; n <= hi; ++n) mats.push_back(IMat::Zero(target.rank(n), source.rank(n)));
    return make(std::move(source), std::move(target), lo, std::move(mats));
}

IMat ChainMap::matrix(int n) const {
    int k = n - lo_;
    if (k < 0 || k >= static_cast<int>(mats_.size()))
        return IMat::Zero(target_.rank(n), source_.rank(n));
    return mats_[static_cast<size_t>(k)];
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target_ == g.source_))
        throw StructureError("compose: chain maps not composable");
    int lo = std::min(f.source_.lo(), g.target_.lo());
    int hi = std::max(f.source_.hi(), g.target_.hi());
    std::vector<IMat> mats;
    for (int n = lo; n <= hi; ++n) mats.push_back(g.matrix(n) * f.matrix(n));
    return ChainMap::make(f.source_, g.target_, lo, std::move(mats));
}

std::string HomologyGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

HomologyPresentation homology_presentation(const ChainComplex& c, int n) {
    HomologyPresentation p;
    p.cycles = kernel_basis<Int>(c.boundary(n));
    IMat next = c.boundary(n + 1);
    auto sol = solve_exact<Int>(p.cycles, next);
    if (!sol)
        throw StructureError("homology_presentation: boundaries are not cycles (d∘d != 0?)");
    p.relations = *sol;
    return p;
}

HomologyGroup HomologyPresentation::group() const {
    HomologyGroup h;
    auto s = smith_normal_form<Int>(relations);
    h.betti = cycles.cols() - s.rank;
    for (const Int& d : s.invariant_factors())
        if (d > Int(1)) h.torsion.push_back(d);
    return h;
}

HomologyGroup homology(const ChainComplex& c, int n) {
    if (c.rank(n) == 0) return HomologyGroup{};
    return homology_presentation(c, n).group();
}

std::map<int, HomologyGroup> homology_table(const ChainComplex& c) {
    std::map<int, HomologyGroup> t;
    for (int n = c.lo(); n <= c.hi(); ++n) t[n] = homology(c, n);
    return t;
}

std::string Connectivity::str() const { return infinite ? "+inf" : std::to_string(value); }

Connectivity connectivity_of(const ChainComplex& c) {
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (!homology(c, n).trivial()) return Connectivity{false, n - 1};
    return Connectivity{true, 0};
}

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& a = f.source();
    const ChainComplex& b = f.target();
    if (a.is_zero() && b.is_zero()) return ChainComplex();
    int lo = std::min(a.lo() + 1, b.lo());
    int hi = std::max(a.hi() + 1, b.hi());
    std::vector<Index> ranks;
    std::vector<IMat> bd;
    for (int n = lo; n <= hi; ++n) {
        Index ra = a.rank(n - 1), rb = b.rank(n);
        ranks.push_back(ra + rb);
        IMat m = IMat::Zero(a.rank(n - 2) + b.rank(n - 1), ra + rb);
        m.topLeftCorner(a.rank(n - 2), ra) = -a.boundary(n - 1);
        m.bottomLeftCorner(b.rank(n - 1), ra) = f.matrix(n - 1);
        m.bottomRightCorner(b.rank(n - 1), rb) = b.boundary(n);
        bd.push_back(std::move(m));
    }
    return ChainComplex::make(lo, std::move(ranks), std::move(bd));
}

FiberResult homotopy_fiber(const ChainMap& f) {
    const ChainComplex& a = f.source();
    const ChainComplex& b = f.target();
    int lo = std::min(a.lo(), b.lo() - 1);
    int hi = std::max(a.hi(), b.hi() - 1);
    std::vector<Index> ranks;
    std::vector<IMat> bd;
    std::vector<IMat> proj;
    for (int n = lo; n <= hi; ++n) {
        Index ra = a.rank(n), rb = b.rank(n + 1);
        ranks.push_back(ra + rb);
        IMat m = IMat::Zero(a.rank(n - 1) + b.rank(n), ra + rb);
        m.topLeftCorner(a.rank(n - 1), ra) = a.boundary(n);
        m.bottomLeftCorner(b.rank(n), ra) = -f.matrix(n);
        m.bottomRightCorner(b.rank(n), rb) = -b.boundary(n + 1);
        bd.push_back(std::move(m));
        IMat p = IMat::Zero(a.rank(n), ra + rb);
        p.leftCols(ra) = IMat::Identity(ra, ra);
        proj.push_back(std::move(p));
    }
    FiberResult r;
    r.complex = ChainComplex::make(lo, std::move(ranks), std::move(bd));
    r.projection = ChainMap::make(r.complex, a, lo, std::move(proj));
    return r;
}

InducedMapFacts induced_homology_map_facts(const ChainMap& f, int n) {
    HomologyPresentation pa = homology_presentation(f.source(), n);
    HomologyPresentation pb = homology_presentation(f.target(), n);
    auto g = solve_exact<Int>(pb.cycles, f.matrix(n) * pa.cycles);
    if (!g) throw StructureError("induced map: image of a cycle is not a cycle");

    InducedMapFacts facts;

    // Surjective iff coker[G | relations_B] vanishes.
    const Index zb = pb.cycles.cols();
    IMat aug(zb, g->cols() + pb.relations.cols());
    aug.leftCols(g->cols()) = *g;
    aug.rightCols(pb.relations.cols()) = pb.relations;
    auto s = smith_normal_form<Int>(aug);
    facts.surjective = s.rank == zb;
    if (facts.surjective)
        for (Index i = 0; i < s.rank; ++i)
            if (!(s.D(i, i) == Int(1))) facts.surjective = false;

    // Injective iff every x with G x ∈ im(relations_B) already lies in
    // im(relations_A). Solutions (x, y) of G x = relations_B y project onto
    // the candidate x-lattice.
    const Index za = pa.cycles.cols();
    IMat sys(zb, za + pb.relations.cols());
    sys.leftCols(za) = *g;
    sys.rightCols(pb.relations.cols()) = -pb.relations;
    IMat null_space = kernel_basis<Int>(sys);
    IMat candidates = null_space.topRows(za);
    facts.injective = solve_exact<Int>(pa.relations, candidates).has_value();
    return facts;
}

bool induced_map_vanishes(const ChainMap& f, int n) {
    HomologyPresentation pa = homology_presentation(f.source(), n);
    HomologyPresentation pb = homology_presentation(f.target(), n);
    auto g = solve_exact<Int>(pb.cycles, f.matrix(n) * pa.cycles);
    if (!g) throw StructureError("induced map: image of a cycle is not a cycle");
    // Zero iff the image of every generator is a boundary.
    return solve_exact<Int>(pb.relations, *g).has_value();
}

QuasiIsoReport quasi_iso_check(const ChainMap& f, int lo, int hi) {
    QuasiIsoReport rep;
    for (int n = lo; n <= hi; ++n) {
        auto facts = induced_homology_map_facts(f, n);
        DegreeCheck d{n, facts.injective && facts.surjective, ""};
        if (!d.pass) {
            d.detail = std::string(facts.injective ? "" : "not injective") +
                       (!facts.injective && !facts.surjective ? ", " : "") +
                       (facts.surjective ? "" : "not surjective");
            rep.pass = false;
        }
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

QuasiIsoReport homology_iso_check(const ChainComplex& a, const ChainComplex& b, int lo, int hi) {
    QuasiIsoReport rep;
    for (int n = lo; n <= hi; ++n) {
        HomologyGroup ha = homology(a, n), hb = homology(b, n);
        DegreeCheck d{n, ha == hb, ""};
        if (!d.pass) {
            d.detail = ha.str() + " vs " + hb.str();
            rep.pass = false;
        }
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<Index> ranks;
    std::vector<IMat> bd;
    for (int n = lo; n <= hi; ++n) {
        ranks.push_back(a.rank(n) + b.rank(n));
        IMat m = IMat::Zero(a.rank(n - 1) + b.rank(n - 1), a.rank(n) + b.rank(n));
        m.topLeftCorner(a.rank(n - 1), a.rank(n)) = a.boundary(n);
        m.bottomRightCorner(b.rank(n - 1), b.rank(n)) = b.boundary(n);
        bd.push_back(std::move(m));
    }
    return ChainComplex::make(lo, std::move(ranks), std::move(bd));
}

ChainComplex shift(const ChainComplex& c, int k) {
    if (c.is_zero()) return c;
    std::vector<Index> ranks;
    std::vector<IMat> bd;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        ranks.push_back(c.rank(n));
        bd.push_back(c.boundary(n));
    }
    return ChainComplex::make(c.lo() + k, std::move(ranks), std::move(bd));
}

}  // namespace catlim
