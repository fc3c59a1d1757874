#pragma once

#include "catlim/chain_complex.hpp"
#include "catlim/fincat.hpp"
#include "catlim/groth.hpp"
#include "catlim/nerve.hpp"
#include "catlim/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace catlim {

/// A diagram of chain complexes over a finite shape, with optional declared
/// homological connectivity per object. Functoriality and annotations are
/// verified at construction.
class Diagram {
public:
    /// `edges` carries the non-identity morphisms; identity edges are filled in.
    static Diagram make(FinCategory shape, std::vector<ChainComplex> vertices,
                        std::map<MorId, ChainMap> edges,
                        std::map<ObjId, Connectivity> conn = {});

    const FinCategory& shape() const { return shape_; }
    const ChainComplex& vertex(ObjId i) const { return vertices_[static_cast<size_t>(i)]; }
    const ChainMap& edge(MorId f) const { return edges_[static_cast<size_t>(f)]; }
    const std::map<ObjId, Connectivity>& conn() const { return conn_; }

    /// Declared connectivity when annotated, otherwise computed from homology.
    Connectivity connectivity_at(ObjId i) const;

    int vertices_lo() const;
    int vertices_hi() const;

private:
    FinCategory shape_;
    std::vector<ChainComplex> vertices_;
    std::vector<ChainMap> edges_;
    std::map<ObjId, Connectivity> conn_;
};

/// min over objects of conn(i) - deg(i); +infinity over the empty shape.
struct BoundValue {
    bool plus_infinite = false;
    long long value = 0;
    std::string str() const;
    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

/// Throws StructureError (naming a witness cycle) when some over category has
/// an infinite-dimensional nerve; requires a connectivity entry per object.
BoundValue connectivity_bound(const FinCategory& shape, const std::map<ObjId, Connectivity>& conn);

/// Bound of a diagram, with absent annotations computed from homology.
BoundValue connectivity_bound(const Diagram& d);

/// Homotopy-limit model: the total complex of the normalized cosimplicial
/// replacement. A generator in total degree n is a pair (σ, e) of a
/// nondegenerate s-simplex σ of the shape's nerve and a basis element e of
/// the vertex complex at the last object of σ in internal degree n + s.
struct TotalComplex {
    struct Gen {
        int s;
        Index simplex;
        Index basis;
    };

    ChainComplex complex;
    Nerve shape_nerve;
    int lo = 0;                           // degree of gens[0]
    std::vector<std::vector<Gen>> gens;   // aligned with complex degrees

    Index rank(int n) const;
    const std::vector<Gen>& generators(int n) const;
    /// Column offset of the (s, simplex) block in degree n; -1 when absent.
    Index block_offset(int n, int s, Index simplex) const;
};

TotalComplex total_complex(const Diagram& d, const Limits& limits = {});

/// X ∘ F: the diagram on the source of F with vertices X_{F(i)}.
Diagram pullback_diagram(const FinFunctor& f, const Diagram& d);

/// Restriction along F: I -> J on totalizations, reading the component at σ
/// from F(σ) and zero when F(σ) is degenerate.
struct Restriction {
    TotalComplex total_source;    // Tot over the target shape of F
    TotalComplex total_pullback;  // Tot over the source shape of F
    ChainMap map;
};

Restriction restriction_map(const FinFunctor& f, const Diagram& d, const Limits& limits = {});

/// The extension of a diagram on J over the cofiber category of F: vertices
/// X_j and X_{F(i)}, the zero complex at *, star maps acting by zero.
struct Extension {
    CofiberData cofiber;
    Diagram diagram;
};

Extension extend_over_cofiber(const FinFunctor& f, const Diagram& d);

/// Connectivity-bound verification: H_k(Tot) must vanish for k <= bound.
struct BoundReport {
    BoundValue bound;
    std::map<int, HomologyGroup> tot_homology;
    std::optional<int> first_nonzero;
    CheckReport checks;
    bool pass() const { return checks.pass(); }
    std::string to_text() const;
};

BoundReport verify_connectivity_bound(const Diagram& d, const Limits& limits = {});

/// Fiber-comparison verification: the canonical map from the totalization
/// over the cofiber category to the homotopy fiber of the restriction map is
/// a homology isomorphism in degrees -range..range.
struct FiberReport {
    CheckReport checks;
    std::map<int, HomologyGroup> cofiber_tot_homology;
    std::map<int, HomologyGroup> fiber_homology;
    bool pass() const { return checks.pass(); }
    std::string to_text() const;
};

FiberReport verify_fiber_comparison(const FinFunctor& f, const Diagram& d, int range,
                                    const Limits& limits = {});

/// The pieces of the comparison, exposed for tests: φ = (ι*, h) into the
/// strict homotopy fiber of F*, where h is the prism/cone null-homotopy with
/// dh + hd = -(F* ∘ ι*).
struct FiberComparison {
    Extension extension;
    TotalComplex total_cofiber;   // Tot over hoc F
    Restriction along_f;          // Tot_J -> Tot_I
    ChainMap iota_restriction;    // Tot_hoc -> Tot_J
    std::vector<IMat> homotopy;   // h_n : Tot_hoc(n) -> Tot_I(n+1)
    int homotopy_lo = 0;
    FiberResult fiber;            // fiber(F*) with projection
    ChainMap comparison;          // φ : Tot_hoc -> fiber(F*)
    IMat homotopy_matrix(int n) const;
};

FiberComparison fiber_comparison(const FinFunctor& f, const Diagram& d, const Limits& limits = {});

}  // namespace catlim
