#pragma once

#include "catlim/fincat.hpp"
#include "catlim/nerve.hpp"
#include "catlim/report.hpp"

#include <utility>
#include <vector>

namespace catlim {

/// A functor from a finite shape into finite categories: one fiber per shape
/// object, one action functor per shape morphism (identities included).
struct CatDiagram {
    FinCategory shape;
    std::vector<FinCategory> fiber;
    std::vector<FinFunctor> action;
};

/// Strict functoriality of the fiber assignment, checked exhaustively.
ValidationReport validate_cat_diagram(const CatDiagram& d);

/// Grothendieck construction with reversed arrows:
/// hom((k,x),(l,y)) = ⊔_{γ: l→k} hom_{Φ(k)}(x, Φ(γ)(y)), composed by
/// (γ₂,g) ∘ (γ₁,f) = (γ₁∘γ₂, Φ(γ₁)(g)∘f).
struct GrothendieckResult {
    FinCategory total;
    FinFunctor projection;                             // total -> opposite(shape)
    std::vector<std::pair<ObjId, ObjId>> object_of;    // total object -> (shape k, fiber x)
    std::vector<std::pair<MorId, MorId>> morphism_of;  // total morphism -> (γ, f)

    ObjId total_object(ObjId shape_obj, ObjId fiber_obj) const;
    MorId total_morphism(ObjId src, ObjId tgt, MorId gamma, MorId f) const;
};

GrothendieckResult grothendieck(const CatDiagram& d);

/// The cofiber category of F: I -> J: the Grothendieck construction of the
/// span * <- I -> J over the punctured square, with the inclusions of J (full)
/// and I, the added terminal-fiber object *, and decode tables for every
/// morphism.
struct CofiberData {
    enum class Kind { FromJ, FromI, Cross, Star };
    struct MorInfo {
        Kind kind;
        MorId underlying;  // in J for FromJ/Cross, in I for FromI, -1 for Star
    };

    FinCategory cofiber;
    FinFunctor iota;   // J -> cofiber, full and faithful
    FinFunctor kappa;  // I -> cofiber, faithful
    FinFunctor functor;  // the original F: I -> J
    ObjId star = 0;
    std::vector<MorInfo> morphism_info;  // per cofiber morphism
    std::vector<ObjId> i_object_of;      // cofiber object -> I object or -1
    std::vector<ObjId> j_object_of;      // cofiber object -> J object or -1

    /// Canonical morphism ιF(i) -> κ(i) given by the identity of F(i).
    MorId eta(ObjId i) const;
    /// The unique morphism * -> κ(i).
    MorId star_map(ObjId i) const;
    /// The morphism ι(j) -> κ(i) corresponding to u: j -> F(i) in J.
    MorId cross(MorId u, ObjId i) const;
};

CofiberData cofiber_category(const FinFunctor& f);

/// Structural facts from the construction: ι full and faithful, κ faithful,
/// hom(ι j, κ i) in bijection with hom_J(j, F i), exactly one * -> κ(i), no
/// morphisms into * or from I-objects back into J, and naturality of the
/// canonical transformation ιF ⇒ κ.
CheckReport cofiber_structure_check(const CofiberData& c);

/// Reduced homology of N(cofiber) against the algebraic mapping cone of N(F),
/// compared as isomorphism types in degrees -1..range.
CheckReport cofiber_model_check(const FinFunctor& f, int range, const Limits& limits = {});

/// Over-category identities of the cofiber: (hoc F)/ι(j) ≅ J/j, (hoc F)/* is
/// terminal, and H̃(N((hoc F)/κ(i))) ≅ H̃(cone(N(I/i) -> N(J/F(i)))).
CheckReport cofiber_over_category_checks(const FinFunctor& f, int range, const Limits& limits = {});

/// The functor I/i -> J/F(i) induced on over categories.
FinFunctor over_category_image(const FinFunctor& f, ObjId i, const OverCategory& over_i,
                               const OverCategory& over_fi);

}  // namespace catlim
