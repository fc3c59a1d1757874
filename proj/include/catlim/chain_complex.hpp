#pragma once

#include "catlim/matrix.hpp"
#include "catlim/snf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catlim {

/// Bounded chain complex of finitely generated free Z-modules. Degrees may be
/// negative. Outside the support window every module is zero.
class ChainComplex {
public:
    ChainComplex() = default;  // the zero complex

    /// ranks[k] is the rank in degree lo+k; boundaries[k] the matrix of
    /// d_{lo+k} : C_{lo+k} -> C_{lo+k-1}. Shapes and d∘d = 0 are enforced.
    static ChainComplex make(int lo, std::vector<Index> ranks, std::vector<IMat> boundaries);

    /// Free rank-r module concentrated in a single degree.
    static ChainComplex concentrated(int degree, Index r);

    bool is_zero() const { return ranks_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    Index rank(int n) const;
    /// d_n : C_n -> C_{n-1}, sized rank(n-1) x rank(n).
    IMat boundary(int n) const;

    Index total_rank() const;
    long long euler_characteristic() const;

    friend bool operator==(const ChainComplex&, const ChainComplex&);

private:
    int lo_ = 0;
    std::vector<Index> ranks_;
    std::vector<IMat> boundaries_;  // boundaries_[k] = d_{lo_+k}
};

/// Degree-preserving map of chain complexes; commutation with the boundaries
/// is checked at construction.
class ChainMap {
public:
    ChainMap() = default;

    static ChainMap make(ChainComplex source, ChainComplex target, int lo, std::vector<IMat> matrices);
    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(ChainComplex source, ChainComplex target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    /// Component in degree n, sized target.rank(n) x source.rank(n).
    IMat matrix(int n) const;

    friend ChainMap compose(const ChainMap& g, const ChainMap& f);  // g ∘ f

private:
    ChainComplex source_, target_;
    int lo_ = 0;
    std::vector<IMat> mats_;
};

/// Isomorphism type of a finitely generated abelian group: free rank plus the
/// invariant factors > 1 in divisibility order.
struct HomologyGroup {
    Index betti = 0;
    std::vector<Int> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
    std::string str() const;
};

HomologyGroup homology(const ChainComplex& c, int n);

/// Homology in every degree of the support window (trivial outside).
std::map<int, HomologyGroup> homology_table(const ChainComplex& c);

/// H_n presented as cycles modulo boundaries: `cycles` is a basis of ker d_n
/// (columns, in chain coordinates), `relations` expresses im d_{n+1} in that
/// basis. H_n = coker(relations).
struct HomologyPresentation {
    IMat cycles;
    IMat relations;
    HomologyGroup group() const;
};

HomologyPresentation homology_presentation(const ChainComplex& c, int n);

/// Largest n with H_k = 0 for all k <= n; +infinity for an acyclic complex.
struct Connectivity {
    bool infinite = false;
    int value = 0;
    std::string str() const;
    friend bool operator==(const Connectivity&, const Connectivity&) = default;
};

Connectivity connectivity_of(const ChainComplex& c);

/// Mapping cone: cone(f)_n = A_{n-1} ⊕ B_n, d(a,b) = (-da, db + f a).
ChainComplex cone(const ChainMap& f);

/// Strict homotopy fiber: fib(f)_n = A_n ⊕ B_{n+1}, d(a,b) = (da, -db - f a),
/// with the projection to the source.
struct FiberResult {
    ChainComplex complex;
    ChainMap projection;
};
FiberResult homotopy_fiber(const ChainMap& f);

struct DegreeCheck {
    int degree;
    bool pass;
    std::string detail;
};

struct QuasiIsoReport {
    bool pass = true;
    std::vector<DegreeCheck> degrees;
};

/// Decides per degree whether H_n(f) is an isomorphism, computing the induced
/// map on homology through the presentations.
QuasiIsoReport quasi_iso_check(const ChainMap& f, int lo, int hi);

/// Compares isomorphism types only; makes sense for unrelated complexes.
QuasiIsoReport homology_iso_check(const ChainComplex& a, const ChainComplex& b, int lo, int hi);

/// Whether the induced map H_n(f) is injective/surjective.
struct InducedMapFacts {
    bool injective = false;
    bool surjective = false;
};
InducedMapFacts induced_homology_map_facts(const ChainMap& f, int n);

/// The induced map H_n(f) is zero.
bool induced_map_vanishes(const ChainMap& f, int n);

/// Direct sum, test and generator convenience.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Shift: (shift(c,k))_n = c_{n-k}, boundary unchanged up to reindexing.
ChainComplex shift(const ChainComplex& c, int k);

}  // namespace catlim
