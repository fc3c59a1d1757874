#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here is test-only and stays independent of the library paths it checks.

#include "catlim/chain_complex.hpp"
#include "catlim/fincat.hpp"
#include "catlim/holim.hpp"
#include "catlim/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace catlim::testing {

/// Deterministic RNG with portable bounded draws (std distributions are not
/// specified bit-for-bit across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long long uniform(long long lo, long long hi) {  // inclusive bounds
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(eng_() % span);
    }

    bool chance(double p) { return static_cast<double>(eng_() >> 11) / 9007199254740992.0 < p; }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<size_t>(uniform(0, static_cast<long long>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 eng_;
};

inline IMat random_matrix(Rng& rng, Index rows, Index cols, long long lo, long long hi) {
    IMat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = Int(rng.uniform(lo, hi));
    return m;
}

/// Random unimodular matrix together with its exact inverse, built from an
/// elementary-operation script applied forwards and backwards.
struct UnimodularPair {
    IMat P, Pinv;
};

inline UnimodularPair random_unimodular(Rng& rng, Index n, int steps = 12) {
    UnimodularPair u{IMat::Identity(n, n), IMat::Identity(n, n)};
    if (n < 1) return u;
    for (int s = 0; s < steps; ++s) {
        Index i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        switch (rng.uniform(0, 2)) {
            case 0: {
                if (i == j) break;
                Int c = Int(rng.uniform(-2, 2));
                u.P.row(i) += u.P.row(j) * c;      // E * P
                u.Pinv.col(j) -= u.Pinv.col(i) * c;  // Pinv * E^{-1}
                break;
            }
            case 1:
                u.P.row(i).swap(u.P.row(j));
                u.Pinv.col(i).swap(u.Pinv.col(j));
                break;
            default:
                u.P.row(i) *= Int(-1);
                u.Pinv.col(i) *= Int(-1);
        }
    }
    return u;
}

/// Independent invariant-factor oracle: d_1*...*d_k equals the gcd of all
/// k x k minors. Exponential in size; keep matrices small.
inline std::vector<Int> invariant_factors_by_minor_gcd(const IMat& a) {
    const Index m = a.rows(), n = a.cols();
    std::vector<Int> out;
    Int prev(1);
    for (Index k = 1; k <= std::min(m, n); ++k) {
        Int g(0);
        std::vector<Index> ri(k), ci(k);
        // enumerate k-subsets of rows and columns
        std::vector<Index> rsel(k);
        for (Index i = 0; i < k; ++i) rsel[i] = i;
        bool rows_done = false;
        while (!rows_done) {
            std::vector<Index> csel(k);
            for (Index i = 0; i < k; ++i) csel[i] = i;
            bool cols_done = false;
            while (!cols_done) {
                IMat minor(k, k);
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j) minor(i, j) = a(rsel[i], csel[j]);
                g = gcd(g, determinant<Int>(minor));
                // advance column subset
                Index t = k;
                while (t > 0 && csel[t - 1] == n - k + t - 1) --t;
                if (t == 0) {
                    cols_done = true;
                } else {
                    ++csel[t - 1];
                    for (Index q = t; q < k; ++q) csel[q] = csel[q - 1] + 1;
                }
            }
            Index t = k;
            while (t > 0 && rsel[t - 1] == m - k + t - 1) --t;
            if (t == 0) {
                rows_done = true;
            } else {
                ++rsel[t - 1];
                for (Index q = t; q < k; ++q) rsel[q] = rsel[q - 1] + 1;
            }
        }
        if (g == Int(0)) break;  // rank reached
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Invariant factors of ⊕ Z/d_i, computed through the minor-gcd oracle on a
/// diagonal matrix so expected torsion lists compare canonically.
inline std::vector<Int> normalize_torsion(const std::vector<Int>& orders) {
    std::vector<Int> keep;
    for (const Int& d : orders)
        if (d > Int(1)) keep.push_back(d);
    if (keep.size() <= 1) return keep;
    IMat diag = IMat::Zero(static_cast<Index>(keep.size()), static_cast<Index>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) diag(static_cast<Index>(i), static_cast<Index>(i)) = keep[i];
    std::vector<Int> inv = invariant_factors_by_minor_gcd(diag);
    std::vector<Int> out;
    for (const Int& d : inv)
        if (d > Int(1)) out.push_back(d);
    return out;
}

/// Random bounded complex assembled from elementary pieces (free generators
/// and two-term d-multiplication pairs), then scrambled degreewise by
/// unimodular changes of basis. Homology is known by construction.
struct RandomComplex {
    ChainComplex complex;
    std::map<int, HomologyGroup> expected;  // trivial degrees omitted
};

inline RandomComplex random_complex(Rng& rng, int deg_lo, int deg_hi, Index max_rank_per_degree,
                                    bool scramble = true) {
    const int span = deg_hi - deg_lo + 1;
    std::vector<Index> ranks(static_cast<size_t>(span), 0);
    struct Pair {
        int top_deg;
        Index top_idx, bot_idx;
        Int d;
    };
    std::vector<Pair> pairs;
    std::map<int, HomologyGroup> expected;

    auto room = [&](int deg) {
        return deg >= deg_lo && deg <= deg_hi && ranks[static_cast<size_t>(deg - deg_lo)] < max_rank_per_degree;
    };

    int budget = static_cast<int>(rng.uniform(1, std::max<long long>(2, span * 2)));
    for (int c = 0; c < budget; ++c) {
        int deg = static_cast<int>(rng.uniform(deg_lo, deg_hi));
        if (rng.chance(0.45) && room(deg) && room(deg - 1)) {
            Int d = Int(rng.uniform(0, 3));
            Pair p;
            p.top_deg = deg;
            p.top_idx = ranks[static_cast<size_t>(deg - deg_lo)]++;
            p.bot_idx = ranks[static_cast<size_t>(deg - 1 - deg_lo)]++;
            p.d = d;
            pairs.push_back(p);
            if (d == Int(0)) {
                expected[deg].betti++;
                expected[deg - 1].betti++;
            } else if (d > Int(1)) {
                expected[deg - 1].torsion.push_back(d);
            }
        } else if (room(deg)) {
            ranks[static_cast<size_t>(deg - deg_lo)]++;
            expected[deg].betti++;
        }
    }

    std::vector<IMat> bd;
    for (int k = 0; k < span; ++k) {
        Index rows = k == 0 ? 0 : ranks[static_cast<size_t>(k - 1)];
        bd.push_back(IMat::Zero(rows, ranks[static_cast<size_t>(k)]));
    }
    for (const Pair& p : pairs)
        if (!(p.d == Int(0)))
            bd[static_cast<size_t>(p.top_deg - deg_lo)](p.bot_idx, p.top_idx) = p.d;

    if (scramble) {
        std::vector<UnimodularPair> base;
        for (Index r : ranks) base.push_back(random_unimodular(rng, r));
        for (int k = 0; k < span; ++k) {
            Index rows = k == 0 ? 0 : ranks[static_cast<size_t>(k - 1)];
            if (rows == 0) continue;
            bd[static_cast<size_t>(k)] =
                base[static_cast<size_t>(k - 1)].P * bd[static_cast<size_t>(k)] * base[static_cast<size_t>(k)].Pinv;
        }
    }

    RandomComplex out;
    out.complex = ChainComplex::make(deg_lo, std::move(ranks), std::move(bd));
    for (auto& [deg, h] : expected) h.torsion = normalize_torsion(h.torsion);
    out.expected = std::move(expected);
    return out;
}

inline HomologyGroup expected_group(const RandomComplex& rc, int n) {
    auto it = rc.expected.find(n);
    return it == rc.expected.end() ? HomologyGroup{} : it->second;
}

/// Random poset category: edges i -> j only for i < j, then transitive closure.
inline FinCategory random_poset(Rng& rng, int n_objects, double edge_prob,
                                bool force_top = false) {
    std::vector<std::string> labels;
    for (int i = 0; i < n_objects; ++i) labels.push_back("o" + std::to_string(i));
    std::vector<std::pair<ObjId, ObjId>> rels;
    for (int i = 0; i < n_objects; ++i)
        for (int j = i + 1; j < n_objects; ++j)
            if (rng.chance(edge_prob)) rels.emplace_back(i, j);
    if (force_top && n_objects > 0)
        for (int i = 0; i + 1 < n_objects; ++i) rels.emplace_back(i, n_objects - 1);
    return poset_from_relations(labels, rels);
}

/// Inclusion of the full subposet on a random nonempty object subset.
inline FinFunctor random_subposet_inclusion(Rng& rng, const FinCategory& j) {
    std::vector<ObjId> keep;
    for (ObjId x = 0; x < j.object_count(); ++x)
        if (rng.chance(0.55)) keep.push_back(x);
    if (keep.empty()) keep.push_back(static_cast<ObjId>(rng.uniform(0, j.object_count() - 1)));
    std::vector<std::string> labels;
    for (ObjId x : keep) labels.push_back("s" + j.object_label(x));
    std::vector<std::pair<ObjId, ObjId>> rels;
    for (size_t p = 0; p < keep.size(); ++p)
        for (size_t q = 0; q < keep.size(); ++q)
            if (p != q && !j.hom(keep[p], keep[q]).empty())
                rels.emplace_back(static_cast<ObjId>(p), static_cast<ObjId>(q));
    FinCategory sub = poset_from_relations(labels, rels);
    return poset_functor(sub, j, keep);
}

/// Random monotone map between random posets; rejection sampling with a
/// constant-map fallback (always monotone).
inline FinFunctor random_poset_functor(Rng& rng, const FinCategory& i, const FinCategory& j,
                                       int attempts = 30) {
    for (int t = 0; t < attempts; ++t) {
        std::vector<ObjId> om;
        for (ObjId x = 0; x < i.object_count(); ++x)
            om.push_back(static_cast<ObjId>(rng.uniform(0, j.object_count() - 1)));
        try {
            return poset_functor(i, j, om);
        } catch (const StructureError&) {
            continue;
        }
    }
    ObjId at = static_cast<ObjId>(rng.uniform(0, j.object_count() - 1));
    return poset_functor(i, j, std::vector<ObjId>(static_cast<size_t>(i.object_count()), at));
}

/// Random diagram of chain complexes over a poset shape, assembled from cells
/// with order-theoretic supports:
///   - "inclusion" cells are born at an anchor and stay alive upwards, the
///     maps include them;
///   - "projection" cells live below an anchor and die together with their
///     boundary partner, the maps drop them.
/// Two-cell pieces carry a boundary coefficient. Functoriality holds by
/// construction; per-vertex homology is known exactly. A final degreewise
/// unimodular conjugation scrambles all matrices.
struct DiagramPiece {
    bool down = false;        // projection-style support
    bool paired = false;
    int top_deg = 0;
    ObjId top_anchor = 0;
    ObjId bot_anchor = 0;     // pairs only
    Int coeff = Int(0);       // pairs only
};

struct RandomDiagram {
    Diagram diagram;
    std::vector<std::map<int, HomologyGroup>> expected;  // per vertex
};

inline RandomDiagram random_diagram(Rng& rng, const FinCategory& shape, int deg_lo, int deg_hi,
                                    Index max_rank_per_degree, bool scramble = true) {
    const ObjId n_obj = shape.object_count();
    std::vector<DiagramPiece> pieces;
    std::map<int, Index> cells_per_degree;

    auto room = [&](int d) {
        return d >= deg_lo && d <= deg_hi && cells_per_degree[d] < max_rank_per_degree;
    };
    int budget = static_cast<int>(rng.uniform(1, 2 + (deg_hi - deg_lo + 1)));
    for (int t = 0; t < budget && n_obj > 0; ++t) {
        DiagramPiece p;
        p.down = rng.chance(0.35);
        p.top_anchor = static_cast<ObjId>(rng.uniform(0, n_obj - 1));
        if (rng.chance(0.6)) {
            p.paired = true;
            p.top_deg = static_cast<int>(rng.uniform(deg_lo + 1, deg_hi));
            if (!room(p.top_deg) || !room(p.top_deg - 1)) continue;
            p.coeff = Int(rng.uniform(0, 3));
            if (p.down) {
                p.bot_anchor = p.top_anchor;  // projection pairs die together
            } else {
                std::vector<ObjId> below;
                for (ObjId x = 0; x < n_obj; ++x)
                    if (!shape.hom(x, p.top_anchor).empty()) below.push_back(x);
                p.bot_anchor = below[static_cast<size_t>(rng.uniform(
                    0, static_cast<long long>(below.size()) - 1))];
            }
            cells_per_degree[p.top_deg]++;
            cells_per_degree[p.top_deg - 1]++;
        } else {
            p.top_deg = static_cast<int>(rng.uniform(deg_lo, deg_hi));
            if (!room(p.top_deg)) continue;
            cells_per_degree[p.top_deg]++;
        }
        pieces.push_back(p);
    }

    auto alive = [&](const DiagramPiece& p, ObjId anchor, ObjId at) {
        return p.down ? !shape.hom(at, anchor).empty() : !shape.hom(anchor, at).empty();
    };

    // Cell layout per (vertex, degree): pieces in order, top before bottom.
    struct CellRef {
        size_t piece;
        bool top;
    };
    auto cells_at = [&](ObjId i, int d) {
        std::vector<CellRef> out;
        for (size_t t = 0; t < pieces.size(); ++t) {
            const DiagramPiece& p = pieces[t];
            if (p.top_deg == d && alive(p, p.top_anchor, i)) out.push_back({t, true});
            if (p.paired && p.top_deg - 1 == d && alive(p, p.bot_anchor, i))
                out.push_back({t, false});
        }
        return out;
    };

    std::vector<ChainComplex> vertices;
    std::vector<std::map<int, HomologyGroup>> expected(static_cast<size_t>(n_obj));
    int span = deg_hi - deg_lo + 2;
    for (ObjId i = 0; i < n_obj; ++i) {
        std::vector<Index> ranks;
        std::vector<IMat> bds;
        for (int d = deg_lo - 1; d < deg_lo - 1 + span; ++d) {
            auto cur = cells_at(i, d);
            auto below = cells_at(i, d - 1);
            ranks.push_back(static_cast<Index>(cur.size()));
            IMat m = IMat::Zero(static_cast<Index>(below.size()), static_cast<Index>(cur.size()));
            for (size_t cidx = 0; cidx < cur.size(); ++cidx) {
                if (!cur[cidx].top || !pieces[cur[cidx].piece].paired) continue;
                for (size_t ridx = 0; ridx < below.size(); ++ridx)
                    if (below[ridx].piece == cur[cidx].piece && !below[ridx].top)
                        m(static_cast<Index>(ridx), static_cast<Index>(cidx)) =
                            pieces[cur[cidx].piece].coeff;
            }
            bds.push_back(std::move(m));
        }
        vertices.push_back(ChainComplex::make(deg_lo - 1, std::move(ranks), std::move(bds)));

        // Expected homology at this vertex.
        std::map<int, HomologyGroup> hx;
        std::map<int, std::vector<Int>> torsion;
        for (const DiagramPiece& p : pieces) {
            bool top_alive = alive(p, p.top_anchor, i);
            if (!p.paired) {
                if (top_alive) hx[p.top_deg].betti++;
                continue;
            }
            bool bot_alive = alive(p, p.bot_anchor, i);
            if (top_alive) {
                if (p.coeff == Int(0)) {
                    hx[p.top_deg].betti++;
                    hx[p.top_deg - 1].betti++;
                } else if (abs(p.coeff) > Int(1)) {
                    torsion[p.top_deg - 1].push_back(abs(p.coeff));
                }
            } else if (bot_alive) {
                hx[p.top_deg - 1].betti++;
            }
        }
        for (auto& [d, tor] : torsion) hx[d].torsion = normalize_torsion(tor);
        for (auto it = hx.begin(); it != hx.end();) {
            if (it->second.trivial()) it = hx.erase(it);
            else ++it;
        }
        expected[static_cast<size_t>(i)] = std::move(hx);
    }

    std::map<MorId, ChainMap> edges;
    for (MorId f = 0; f < shape.morphism_count(); ++f) {
        const Morphism& mor = shape.morphism(f);
        if (mor.is_identity) continue;
        std::vector<IMat> mats;
        for (int d = deg_lo - 1; d < deg_lo - 1 + span; ++d) {
            auto src_cells = cells_at(mor.src, d);
            auto tgt_cells = cells_at(mor.tgt, d);
            IMat m = IMat::Zero(static_cast<Index>(tgt_cells.size()),
                                static_cast<Index>(src_cells.size()));
            for (size_t cidx = 0; cidx < src_cells.size(); ++cidx)
                for (size_t ridx = 0; ridx < tgt_cells.size(); ++ridx)
                    if (src_cells[cidx].piece == tgt_cells[ridx].piece &&
                        src_cells[cidx].top == tgt_cells[ridx].top)
                        m(static_cast<Index>(ridx), static_cast<Index>(cidx)) = 1;
            mats.push_back(std::move(m));
        }
        edges.emplace(f, ChainMap::make(vertices[static_cast<size_t>(mor.src)],
                                        vertices[static_cast<size_t>(mor.tgt)], deg_lo - 1,
                                        std::move(mats)));
    }

    if (scramble) {
        // Conjugate every vertex by degreewise unimodular matrices.
        std::vector<std::map<int, UnimodularPair>> bases(static_cast<size_t>(n_obj));
        for (ObjId i = 0; i < n_obj; ++i)
            for (int d = deg_lo - 2; d <= deg_hi + 1; ++d)
                bases[static_cast<size_t>(i)].emplace(
                    d, random_unimodular(rng, vertices[static_cast<size_t>(i)].rank(d)));
        std::vector<ChainComplex> sv;
        for (ObjId i = 0; i < n_obj; ++i) {
            std::vector<Index> ranks;
            std::vector<IMat> bds;
            const ChainComplex& x = vertices[static_cast<size_t>(i)];
            for (int d = deg_lo - 1; d <= deg_hi + 1; ++d) {
                ranks.push_back(x.rank(d));
                bds.push_back(IMat(bases[static_cast<size_t>(i)].at(d - 1).P * x.boundary(d) *
                                   bases[static_cast<size_t>(i)].at(d).Pinv));
            }
            sv.push_back(ChainComplex::make(deg_lo - 1, std::move(ranks), std::move(bds)));
        }
        std::map<MorId, ChainMap> se;
        for (auto& [f, e] : edges) {
            const Morphism& mor = shape.morphism(f);
            std::vector<IMat> mats;
            for (int d = deg_lo - 1; d <= deg_hi + 1; ++d)
                mats.push_back(IMat(bases[static_cast<size_t>(mor.tgt)].at(d).P * e.matrix(d) *
                                    bases[static_cast<size_t>(mor.src)].at(d).Pinv));
            se.emplace(f, ChainMap::make(sv[static_cast<size_t>(mor.src)],
                                         sv[static_cast<size_t>(mor.tgt)], deg_lo - 1,
                                         std::move(mats)));
        }
        vertices = std::move(sv);
        edges = std::move(se);
    }

    RandomDiagram out;
    out.diagram = Diagram::make(shape, std::move(vertices), std::move(edges));
    out.expected = std::move(expected);
    return out;
}

/// Test-only oracle: the totalization of the unnormalized cosimplicial
/// replacement (all composable strings, identities included), brutally
/// truncated at column cap. Trustworthy wherever the truncated columns cannot
/// reach the vertex degrees.
inline ChainComplex unnormalized_total(const Diagram& d, int column_cap) {
    const FinCategory& c = d.shape();
    struct Str {
        ObjId base;
        std::vector<MorId> arrows;  // identities allowed
    };
    std::vector<std::vector<Str>> strings(static_cast<size_t>(column_cap) + 1);
    for (ObjId x = 0; x < c.object_count(); ++x) strings[0].push_back({x, {}});
    for (int s = 1; s <= column_cap; ++s)
        for (const Str& prev : strings[static_cast<size_t>(s - 1)]) {
            ObjId tail = prev.arrows.empty() ? prev.base
                                             : c.morphism(prev.arrows.back()).tgt;
            for (MorId f = 0; f < c.morphism_count(); ++f)
                if (c.morphism(f).src == tail) {
                    Str ext = prev;
                    ext.arrows.push_back(f);
                    strings[static_cast<size_t>(s)].push_back(std::move(ext));
                }
        }
    auto index_of = [&](const Str& q) -> Index {
        const auto& level = strings[q.arrows.size()];
        for (size_t t = 0; t < level.size(); ++t)
            if (level[t].base == q.base && level[t].arrows == q.arrows)
                return static_cast<Index>(t);
        throw StructureError("unnormalized_total: string not enumerated");
    };
    auto tgt_of = [&](const Str& q) {
        return q.arrows.empty() ? q.base : c.morphism(q.arrows.back()).tgt;
    };

    int vlo = d.vertices_lo(), vhi = d.vertices_hi();
    int w_lo = vlo - column_cap, w_hi = vhi;
    struct Gen {
        int s;
        Index str;
        Index basis;
    };
    std::vector<std::vector<Gen>> gens;
    for (int n = w_lo; n <= w_hi; ++n) {
        std::vector<Gen> level;
        for (int s = 0; s <= column_cap; ++s)
            for (size_t k = 0; k < strings[static_cast<size_t>(s)].size(); ++k) {
                const ChainComplex& x = d.vertex(tgt_of(strings[static_cast<size_t>(s)][k]));
                for (Index e = 0; e < x.rank(n + s); ++e)
                    level.push_back(Gen{s, static_cast<Index>(k), e});
            }
        gens.push_back(std::move(level));
    }
    auto offset = [&](int lv, int s, Index str_idx) -> Index {
        const auto& level = gens[static_cast<size_t>(lv)];
        for (size_t t = 0; t < level.size(); ++t)
            if (level[t].s == s && level[t].str == str_idx) return static_cast<Index>(t);
        return -1;
    };

    std::vector<Index> ranks;
    std::vector<IMat> bds;
    for (size_t lv = 0; lv < gens.size(); ++lv) {
        int n = w_lo + static_cast<int>(lv);
        ranks.push_back(static_cast<Index>(gens[lv].size()));
        Index rows = lv == 0 ? 0 : static_cast<Index>(gens[lv - 1].size());
        IMat m = IMat::Zero(rows, static_cast<Index>(gens[lv].size()));
        if (lv == 0) {
            bds.push_back(std::move(m));
            continue;
        }
        // Internal part.
        for (size_t col = 0; col < gens[lv].size(); ++col) {
            const Gen& g = gens[lv][col];
            const ChainComplex& x = d.vertex(tgt_of(strings[static_cast<size_t>(g.s)][static_cast<size_t>(g.str)]));
            IMat bx = x.boundary(n + g.s);
            if (bx.rows() == 0) continue;
            Index row0 = offset(static_cast<int>(lv) - 1, g.s, g.str);
            if (row0 < 0) continue;
            Int sign(g.s % 2 == 0 ? 1 : -1);
            for (Index r = 0; r < bx.rows(); ++r)
                if (!bx(r, g.basis).is_zero()) m(row0 + r, static_cast<Index>(col)) += sign * bx(r, g.basis);
        }
        // Cosimplicial part: rows at column degree s read faces (no collapse).
        for (size_t row = 0; row < gens[lv - 1].size(); ++row) {
            const Gen& rg = gens[lv - 1][row];
            if (rg.s == 0 || rg.s > column_cap) continue;
            const Str& sigma = strings[static_cast<size_t>(rg.s)][static_cast<size_t>(rg.str)];
            for (int j = 0; j <= rg.s; ++j) {
                Str face;
                if (j == 0) {
                    face.base = c.morphism(sigma.arrows.front()).tgt;
                    face.arrows.assign(sigma.arrows.begin() + 1, sigma.arrows.end());
                } else if (j == rg.s) {
                    face.base = sigma.base;
                    face.arrows.assign(sigma.arrows.begin(), sigma.arrows.end() - 1);
                } else {
                    MorId comp = c.compose(sigma.arrows[static_cast<size_t>(j)],
                                           sigma.arrows[static_cast<size_t>(j - 1)]);
                    face = sigma;
                    face.arrows.erase(face.arrows.begin() + j);
                    face.arrows[static_cast<size_t>(j - 1)] = comp;
                }
                Index col0 = offset(static_cast<int>(lv), rg.s - 1, index_of(face));
                if (col0 < 0) continue;
                Int sign(j % 2 == 0 ? 1 : -1);
                if (j < rg.s) {
                    m(static_cast<Index>(row), col0 + rg.basis) += sign;
                } else {
                    const ChainMap& last = d.edge(sigma.arrows.back());
                    IMat lm = last.matrix(n + rg.s - 1);
                    for (Index e = 0; e < lm.cols(); ++e)
                        if (!lm(rg.basis, e).is_zero())
                            m(static_cast<Index>(row), col0 + e) += sign * lm(rg.basis, e);
                }
            }
        }
        bds.push_back(std::move(m));
    }
    return ChainComplex::make(w_lo, std::move(ranks), std::move(bds));
}

/// The worked example: the inclusion of the punctured square into the
/// punctured cube that fixes + and adds the element 2 to the other subsets.
inline FinFunctor sect2_inclusion() {
    FinCategory p01 = powerset_poset(1, true);
    FinCategory p02 = powerset_poset(2, true);
    auto at = [&](const FinCategory& c, const std::string& l) { return *c.object_by_label(l); };
    std::vector<ObjId> om(3);
    om[static_cast<size_t>(at(p01, "+"))] = at(p02, "+");
    om[static_cast<size_t>(at(p01, "1"))] = at(p02, "12");
    om[static_cast<size_t>(at(p01, "+1"))] = at(p02, "+12");
    return poset_functor(p01, p02, om);
}

}  // namespace catlim::testing
