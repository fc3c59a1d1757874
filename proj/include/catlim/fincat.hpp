#pragma once

#include "catlim/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catlim {

using ObjId = std::int32_t;
using MorId = std::int32_t;

inline constexpr MorId kNoMorphism = -1;

struct Morphism {
    std::string name;
    ObjId src = 0;
    ObjId tgt = 0;
    bool is_identity = false;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Finite category stored as total tables: an indexed object set, an indexed
/// morphism set (identities included), and a dense composition table.
/// Values are immutable once built; all operations return new categories.
class FinCategory {
public:
    Index object_count() const { return static_cast<Index>(objects_.size()); }
    Index morphism_count() const { return static_cast<Index>(morphisms_.size()); }

    const std::string& object_label(ObjId x) const { return objects_[static_cast<size_t>(x)]; }
    const Morphism& morphism(MorId f) const { return morphisms_[static_cast<size_t>(f)]; }
    MorId identity(ObjId x) const { return identity_[static_cast<size_t>(x)]; }

    /// g ∘ f, or kNoMorphism when the table has no entry.
    MorId compose(MorId g, MorId f) const {
        return table_[static_cast<size_t>(g) * morphisms_.size() + static_cast<size_t>(f)];
    }

    std::vector<MorId> hom(ObjId x, ObjId y) const;
    std::optional<ObjId> object_by_label(const std::string& label) const;
    std::optional<MorId> morphism_by_name(const std::string& name) const;
    Index non_identity_count() const;

    friend bool operator==(const FinCategory&, const FinCategory&) = default;

private:
    friend class FinCategoryBuilder;
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identity_;
    std::vector<MorId> table_;  // morphism_count^2, kNoMorphism = undefined
};

/// Assembles a category. Identities and their neutral composites are added
/// automatically; set_composite may override any entry, so invalid tables can
/// be built on purpose and fed to validate_category.
class FinCategoryBuilder {
public:
    ObjId add_object(std::string label);
    MorId add_morphism(std::string name, ObjId src, ObjId tgt);
    void set_composite(MorId g, MorId f, MorId gf);

    /// Structural assembly only; axiom violations survive into the result.
    FinCategory build_raw();
    /// Assembly plus axiom validation; throws StructureError on violations.
    FinCategory build();

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::tuple<MorId, MorId, MorId>> composites_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
    std::string to_text() const;
};

/// Checks the category axioms: typing of the composition table, identity
/// neutrality, associativity on every composable triple.
ValidationReport validate_category(const FinCategory& c);

/// Poset category of subsets of {+, 1, ..., n}; punctured drops the empty set.
FinCategory powerset_poset(int n, bool punctured);

/// Category freely generated by relations x <= y under reflexive-transitive
/// closure. Accepts any preorder; at most one morphism between two objects.
FinCategory poset_from_relations(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<ObjId, ObjId>>& relations);

/// a -> b <- c.
FinCategory pullback_shape();
/// a -> b.
FinCategory arrow_shape();
FinCategory discrete_category(int k);
FinCategory terminal_category();

class FinFunctor {
public:
    FinFunctor() = default;
    static FinFunctor make(FinCategory source, FinCategory target, std::vector<ObjId> object_map,
                           std::vector<MorId> morphism_map);
    static FinFunctor identity(const FinCategory& c);
    /// The unique functor into the one-object category.
    static FinFunctor constant(const FinCategory& source, const FinCategory& target, ObjId at);

    const FinCategory& source() const { return source_; }
    const FinCategory& target() const { return target_; }
    ObjId on_object(ObjId x) const { return object_map_[static_cast<size_t>(x)]; }
    MorId on_morphism(MorId f) const { return morphism_map_[static_cast<size_t>(f)]; }
    const std::vector<ObjId>& object_map() const { return object_map_; }
    const std::vector<MorId>& morphism_map() const { return morphism_map_; }

    friend bool operator==(const FinFunctor&, const FinFunctor&) = default;

private:
    FinCategory source_, target_;
    std::vector<ObjId> object_map_;
    std::vector<MorId> morphism_map_;
};

/// Identity/composition preservation, itemized per failure.
ValidationReport validate_functor(const FinFunctor& f);

FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

/// Over category C/i: objects are morphisms into i, morphisms are commuting
/// triangles; ships with the forgetful functor to C.
struct OverCategory {
    FinCategory cat;
    FinFunctor forgetful;
    std::vector<MorId> object_morphism;  // over-object -> the morphism a: j -> i
};
OverCategory over_category(const FinCategory& c, ObjId i);

/// Comma category F/j for F: I -> J: objects are pairs (i, u: F(i) -> j).
struct CommaCategory {
    FinCategory cat;
    FinFunctor projection;  // to the source of F
    std::vector<std::pair<ObjId, MorId>> object_pair;
};
CommaCategory comma_category(const FinFunctor& f, ObjId j);

FinCategory opposite(const FinCategory& c);

/// Exhaustive isomorphism search with hom-profile pruning. Categories with
/// more than max_objects objects are rejected with CapacityError.
std::optional<FinFunctor> find_isomorphism(const FinCategory& a, const FinCategory& b,
                                           Index max_objects = 10);

/// At most one morphism between any two objects and no 2-cycles.
bool is_poset(const FinCategory& c);

/// Same category, new object labels (identity morphism names follow).
FinCategory with_object_labels(const FinCategory& c, const std::vector<std::string>& labels);

/// Monotone map between poset categories from its object map alone; the
/// morphism map is forced. Throws StructureError when not monotone.
FinFunctor poset_functor(const FinCategory& source, const FinCategory& target,
                         const std::vector<ObjId>& object_map);

}  // namespace catlim
