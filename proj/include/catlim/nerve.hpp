#pragma once

#include "catlim/chain_complex.hpp"
#include "catlim/fincat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catlim {

struct Limits {
    std::size_t max_simplices = 500000;
};

/// A nondegenerate simplex of the nerve: a composable string of non-identity
/// morphisms. Vertices are the empty string based at an object.
struct Simplex {
    ObjId base = 0;                // source object of the string
    std::vector<MorId> arrows;     // none of them identities

    int dim() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Nondegenerate simplices of the nerve of a finite category, enumerated per
/// dimension up to a cap, with deterministic ordering and index lookup.
class Nerve {
public:
    const FinCategory& base() const { return base_; }
    int cap() const { return cap_; }
    /// Highest dimension that actually has simplices.
    int top_dim() const;
    Index count(int dim) const;
    const Simplex& simplex(int dim, Index k) const;
    ObjId target_object(int dim, Index k) const;
    std::optional<Index> index_of(const Simplex& s) const;
    std::size_t total_count() const;
    /// Chain label, e.g. "a<b<c" for a 2-simplex through those objects.
    std::string label(int dim, Index k) const;

private:
    friend Nerve nerve(const FinCategory&, int, const Limits&);
    FinCategory base_;
    int cap_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, Index>> lookup_;
};

Nerve nerve(const FinCategory& c, int cap, const Limits& limits = {});

/// Dimension of the nerve: the longest composable string of non-identity
/// morphisms. Infinite exactly when the non-identity digraph has a cycle; the
/// witness lists the objects on one.
struct NerveDimension {
    bool finite = true;
    int dim = 0;
    std::vector<ObjId> cycle;
    std::string str() const;
};

NerveDimension nerve_dimension(const FinCategory& c);

/// deg(i) = dim N(C/i); entries may be infinite.
struct DegreeTable {
    std::vector<std::optional<int>> degree;  // nullopt = infinite
    bool all_finite() const;
    int max_degree() const;  // only valid when all_finite()
};

DegreeTable degree_table(const FinCategory& c);

/// deg(src) < deg(tgt) for every non-identity morphism. Throws StructureError
/// when some degree is infinite.
struct ReedyReport {
    bool ok = true;
    MorId witness = kNoMorphism;
};

ReedyReport is_directed_reedy(const FinCategory& c);

/// Normalized chains: degree k free on nondegenerate k-simplices, faces with
/// identity composites dropped. With `reduced`, the augmentation Z sits in
/// degree -1.
ChainComplex nerve_chain_complex(const Nerve& n, bool reduced);
ChainComplex nerve_chain_complex(const FinCategory& c, int cap, bool reduced,
                                 const Limits& limits = {});

/// Chain map N(F) on normalized chains: a simplex maps to its image string,
/// or to zero when the image contains an identity.
ChainMap induced_nerve_chain_map(const FinFunctor& f, int cap, bool reduced,
                                 const Limits& limits = {});

/// Row/column labels for the boundary matrices, for the text export.
std::vector<std::vector<std::string>> nerve_labels(const Nerve& n);

}  // namespace catlim
