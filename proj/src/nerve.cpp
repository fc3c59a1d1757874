#include "catlim/nerve.hpp"

#include <algorithm>
#include <sstream>

namespace catlim {

int Nerve::top_dim() const {
    for (int d = static_cast<int>(by_dim_.size()) - 1; d >= 0; --d)
        if (!by_dim_[static_cast<size_t>(d)].empty()) return d;
    return -1;  // empty category
}

Index Nerve::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return 0;
    return static_cast<Index>(by_dim_[static_cast<size_t>(dim)].size());
}

const Simplex& Nerve::simplex(int dim, Index k) const {
    return by_dim_[static_cast<size_t>(dim)][static_cast<size_t>(k)];
}

ObjId Nerve::target_object(int dim, Index k) const {
    const Simplex& s = simplex(dim, k);
    return s.arrows.empty() ? s.base : base_.morphism(s.arrows.back()).tgt;
}

std::optional<Index> Nerve::index_of(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d >= static_cast<int>(lookup_.size())) return std::nullopt;
    auto it = lookup_[static_cast<size_t>(d)].find(s);
    if (it == lookup_[static_cast<size_t>(d)].end()) return std::nullopt;
    return it->second;
}

std::size_t Nerve::total_count() const {
    std::size_t t = 0;
    for (const auto& v : by_dim_) t += v.size();
    return t;
}

std::string Nerve::label(int dim, Index k) const {
    const Simplex& s = simplex(dim, k);
    std::string out = base_.object_label(s.base);
    for (MorId a : s.arrows) {
        out += '<';
        out += base_.object_label(base_.morphism(a).tgt);
    }
    return out;
}

Nerve nerve(const FinCategory& c, int cap, const Limits& limits) {
    if (cap < 0) throw StructureError("nerve: cap must be non-negative");
    Nerve n;
    n.base_ = c;
    n.cap_ = cap;
    n.by_dim_.resize(static_cast<size_t>(cap) + 1);
    n.lookup_.resize(static_cast<size_t>(cap) + 1);

    std::size_t total = 0;
    auto push = [&](int dim, Simplex s) {
        if (++total > limits.max_simplices)
            throw CapacityError("nerve: simplex count exceeds limit of " +
                                std::to_string(limits.max_simplices));
        auto& v = n.by_dim_[static_cast<size_t>(dim)];
        n.lookup_[static_cast<size_t>(dim)].emplace(s, static_cast<Index>(v.size()));
        v.push_back(std::move(s));
    };

    for (ObjId x = 0; x < c.object_count(); ++x) push(0, Simplex{x, {}});

    std::vector<std::vector<MorId>> out_arrows(static_cast<size_t>(c.object_count()));
    for (MorId f = 0; f < c.morphism_count(); ++f)
        if (!c.morphism(f).is_identity)
            out_arrows[static_cast<size_t>(c.morphism(f).src)].push_back(f);

    for (int d = 1; d <= cap; ++d) {
        for (const Simplex& prev : n.by_dim_[static_cast<size_t>(d - 1)]) {
            ObjId tail = prev.arrows.empty() ? prev.base : c.morphism(prev.arrows.back()).tgt;
            for (MorId f : out_arrows[static_cast<size_t>(tail)]) {
                Simplex s = prev;
                s.arrows.push_back(f);
                push(d, std::move(s));
            }
        }
    }
    return n;
}

std::string NerveDimension::str() const { return finite ? std::to_string(dim) : "infinite"; }

NerveDimension nerve_dimension(const FinCategory& c) {
    const size_t n = static_cast<size_t>(c.object_count());
    std::vector<std::vector<ObjId>> adj(n);
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        const Morphism& m = c.morphism(f);
        if (!m.is_identity) adj[static_cast<size_t>(m.src)].push_back(m.tgt);
    }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // Cycle detection with a witness path.
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<ObjId> stack;
    NerveDimension result;
    std::function<bool(ObjId)> dfs = [&](ObjId x) -> bool {
        color[static_cast<size_t>(x)] = 1;
        stack.push_back(x);
        for (ObjId y : adj[static_cast<size_t>(x)]) {
            if (color[static_cast<size_t>(y)] == 1) {
                auto it = std::find(stack.begin(), stack.end(), y);
                result.cycle.assign(it, stack.end());
                return true;
            }
            if (color[static_cast<size_t>(y)] == 0 && dfs(y)) return true;
        }
        stack.pop_back();
        color[static_cast<size_t>(x)] = 2;
        return false;
    };
    for (ObjId x = 0; x < c.object_count(); ++x)
        if (color[static_cast<size_t>(x)] == 0 && dfs(x)) {
            result.finite = false;
            return result;
        }

    // Longest path in the DAG by depth-first memoization.
    std::vector<int> longest(n, -1);
    std::function<int(ObjId)> lp = [&](ObjId x) -> int {
        int& memo = longest[static_cast<size_t>(x)];
        if (memo >= 0) return memo;
        int best = 0;
        for (ObjId y : adj[static_cast<size_t>(x)]) best = std::max(best, 1 + lp(y));
        return memo = best;
    };
    int best = 0;
    for (ObjId x = 0; x < c.object_count(); ++x) best = std::max(best, lp(x));
    result.dim = best;
    return result;
}

bool DegreeTable::all_finite() const {
    for (const auto& d : degree)
        if (!d) return false;
    return true;
}

int DegreeTable::max_degree() const {
    int best = 0;
    for (const auto& d : degree) best = std::max(best, d.value());
    return best;
}

DegreeTable degree_table(const FinCategory& c) {
    DegreeTable t;
    for (ObjId i = 0; i < c.object_count(); ++i) {
        NerveDimension nd = nerve_dimension(over_category(c, i).cat);
        t.degree.push_back(nd.finite ? std::optional<int>(nd.dim) : std::nullopt);
    }
    return t;
}

ReedyReport is_directed_reedy(const FinCategory& c) {
    DegreeTable t = degree_table(c);
    if (!t.all_finite())
        throw StructureError("is_directed_reedy: some over category has an infinite-dimensional nerve");
    ReedyReport rep;
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        const Morphism& m = c.morphism(f);
        if (m.is_identity) continue;
        if (!(*t.degree[static_cast<size_t>(m.src)] < *t.degree[static_cast<size_t>(m.tgt)])) {
            rep.ok = false;
            rep.witness = f;
            return rep;
        }
    }
    return rep;
}

ChainComplex nerve_chain_complex(const Nerve& n, bool reduced) {
    const FinCategory& c = n.base();
    const int top = n.top_dim();
    const int lo = reduced ? -1 : 0;
    std::vector<Index> ranks;
    std::vector<IMat> bd;
    if (reduced) {
        ranks.push_back(1);
        bd.push_back(IMat());
    }
    for (int d = 0; d <= top; ++d) {
        ranks.push_back(n.count(d));
        IMat m = IMat::Zero(d == 0 ? (reduced ? 1 : 0) : n.count(d - 1), n.count(d));
        if (d == 0 && reduced) {
            for (Index k = 0; k < n.count(0); ++k) m(0, k) = 1;  // augmentation
        }
        if (d >= 1) {
            for (Index k = 0; k < n.count(d); ++k) {
                const Simplex& s = n.simplex(d, k);
                for (int j = 0; j <= d; ++j) {
                    Simplex face;
                    if (j == 0) {
                        face.arrows.assign(s.arrows.begin() + 1, s.arrows.end());
                        face.base = c.morphism(s.arrows.front()).tgt;
                    } else if (j == d) {
                        face.arrows.assign(s.arrows.begin(), s.arrows.end() - 1);
                        face.base = s.base;
                    } else {
                        MorId comp = c.compose(s.arrows[static_cast<size_t>(j)],
                                               s.arrows[static_cast<size_t>(j - 1)]);
                        if (comp == kNoMorphism)
                            throw StructureError("nerve_chain_complex: missing composite");
                        if (c.morphism(comp).is_identity) continue;  // degenerate face
                        face = s;
                        face.arrows.erase(face.arrows.begin() + j);
                        face.arrows[static_cast<size_t>(j - 1)] = comp;
                    }
                    auto idx = n.index_of(face);
                    if (!idx)
                        throw StructureError("nerve_chain_complex: face not enumerated (cap too small?)");
                    m(*idx, k) += Int(j % 2 == 0 ? 1 : -1);
                }
            }
        }
        bd.push_back(std::move(m));
    }
    if (ranks.empty()) return ChainComplex();
    return ChainComplex::make(lo, std::move(ranks), std::move(bd));
}

ChainComplex nerve_chain_complex(const FinCategory& c, int cap, bool reduced, const Limits& limits) {
    NerveDimension nd = nerve_dimension(c);
    if (!nd.finite) throw CapacityError("nerve_chain_complex: nerve is infinite dimensional");
    if (nd.dim > cap)
        throw CapacityError("nerve_chain_complex: nerve dimension " + std::to_string(nd.dim) +
                            " exceeds cap " + std::to_string(cap));
    return nerve_chain_complex(nerve(c, nd.dim, limits), reduced);
}

ChainMap induced_nerve_chain_map(const FinFunctor& f, int cap, bool reduced, const Limits& limits) {
    NerveDimension nds = nerve_dimension(f.source());
    NerveDimension ndt = nerve_dimension(f.target());
    if (!nds.finite || !ndt.finite)
        throw CapacityError("induced_nerve_chain_map: infinite dimensional nerve");
    if (nds.dim > cap || ndt.dim > cap)
        throw CapacityError("induced_nerve_chain_map: nerve dimension exceeds cap");
    Nerve ns = nerve(f.source(), nds.dim, limits);
    Nerve nt = nerve(f.target(), ndt.dim, limits);
    ChainComplex cs = nerve_chain_complex(ns, reduced);
    ChainComplex ct = nerve_chain_complex(nt, reduced);

    int lo = reduced ? -1 : 0;
    std::vector<IMat> mats;
    if (reduced) mats.push_back(IMat::Identity(1, 1));
    for (int d = 0; d <= ns.top_dim(); ++d) {
        IMat m = IMat::Zero(ct.rank(d), cs.rank(d));
        for (Index k = 0; k < ns.count(d); ++k) {
            const Simplex& s = ns.simplex(d, k);
            Simplex image;
            image.base = f.on_object(s.base);
            bool degenerate = false;
            for (MorId a : s.arrows) {
                MorId fa = f.on_morphism(a);
                if (f.target().morphism(fa).is_identity) {
                    degenerate = true;
                    break;
                }
                image.arrows.push_back(fa);
            }
            if (degenerate) continue;
            auto idx = nt.index_of(image);
            if (!idx) throw StructureError("induced_nerve_chain_map: image simplex not enumerated");
            m(*idx, k) = 1;
        }
        mats.push_back(std::move(m));
    }
    return ChainMap::make(std::move(cs), std::move(ct), lo, std::move(mats));
}

std::vector<std::vector<std::string>> nerve_labels(const Nerve& n) {
    std::vector<std::vector<std::string>> out;
    for (int d = 0; d <= n.top_dim(); ++d) {
        std::vector<std::string> level;
        for (Index k = 0; k < n.count(d); ++k) level.push_back(n.label(d, k));
        out.push_back(std::move(level));
    }
    return out;
}

}  // namespace catlim
