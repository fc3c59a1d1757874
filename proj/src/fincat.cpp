#include "catlim/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace catlim {

std::vector<MorId> FinCategory::hom(ObjId x, ObjId y) const {
    std::vector<MorId> out;
    for (MorId f = 0; f < morphism_count(); ++f)
        if (morphisms_[static_cast<size_t>(f)].src == x && morphisms_[static_cast<size_t>(f)].tgt == y)
            out.push_back(f);
    return out;
}

std::optional<ObjId> FinCategory::object_by_label(const std::string& label) const {
    for (ObjId x = 0; x < object_count(); ++x)
        if (objects_[static_cast<size_t>(x)] == label) return x;
    return std::nullopt;
}

std::optional<MorId> FinCategory::morphism_by_name(const std::string& name) const {
    for (MorId f = 0; f < morphism_count(); ++f)
        if (morphisms_[static_cast<size_t>(f)].name == name) return f;
    return std::nullopt;
}

Index FinCategory::non_identity_count() const {
    Index n = 0;
    for (const Morphism& m : morphisms_)
        if (!m.is_identity) ++n;
    return n;
}

ObjId FinCategoryBuilder::add_object(std::string label) {
    objects_.push_back(std::move(label));
    return static_cast<ObjId>(objects_.size() - 1);
}

MorId FinCategoryBuilder::add_morphism(std::string name, ObjId src, ObjId tgt) {
    if (src < 0 || tgt < 0 || static_cast<size_t>(src) >= objects_.size() ||
        static_cast<size_t>(tgt) >= objects_.size())
        throw StructureError("add_morphism: object index out of range");
    morphisms_.push_back(Morphism{std::move(name), src, tgt, false});
    return static_cast<MorId>(morphisms_.size() - 1);
}

void FinCategoryBuilder::set_composite(MorId g, MorId f, MorId gf) {
    composites_.emplace_back(g, f, gf);
}

FinCategory FinCategoryBuilder::build_raw() {
    FinCategory c;
    c.objects_ = objects_;
    c.morphisms_ = morphisms_;
    const MorId explicit_count = static_cast<MorId>(morphisms_.size());
    for (size_t x = 0; x < objects_.size(); ++x) {
        c.identity_.push_back(static_cast<MorId>(c.morphisms_.size()));
        c.morphisms_.push_back(
            Morphism{"id:" + objects_[x], static_cast<ObjId>(x), static_cast<ObjId>(x), true});
    }
    const size_t m = c.morphisms_.size();
    c.table_.assign(m * m, kNoMorphism);
    auto at = [&](MorId g, MorId f) -> MorId& {
        return c.table_[static_cast<size_t>(g) * m + static_cast<size_t>(f)];
    };
    // Identity composites first; explicit entries may overwrite them.
    for (MorId f = 0; f < static_cast<MorId>(m); ++f) {
        const Morphism& mf = c.morphisms_[static_cast<size_t>(f)];
        at(c.identity_[static_cast<size_t>(mf.tgt)], f) = f;
        at(f, c.identity_[static_cast<size_t>(mf.src)]) = f;
    }
    for (auto [g, f, gf] : composites_) {
        if (g < 0 || f < 0 || gf < 0 || g >= explicit_count || f >= explicit_count ||
            static_cast<size_t>(gf) >= m)
            throw StructureError("set_composite: morphism index out of range");
        at(g, f) = gf;
    }
    return c;
}

FinCategory FinCategoryBuilder::build() {
    FinCategory c = build_raw();
    ValidationReport rep = validate_category(c);
    if (!rep.ok) throw StructureError("category axioms violated:\n" + rep.to_text());
    return c;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    if (ok) {
        os << "valid\n";
    } else {
        for (const std::string& s : issues) os << "violation: " << s << "\n";
    }
    return os.str();
}

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.issues.push_back(s);
    };
    const MorId m = c.morphism_count();

    for (ObjId x = 0; x < c.object_count(); ++x) {
        MorId e = c.identity(x);
        const Morphism& me = c.morphism(e);
        if (!me.is_identity || me.src != x || me.tgt != x)
            fail("identity of object " + c.object_label(x) + " is malformed");
    }

    for (MorId g = 0; g < m; ++g) {
        for (MorId f = 0; f < m; ++f) {
            const Morphism& mf = c.morphism(f);
            const Morphism& mg = c.morphism(g);
            MorId gf = c.compose(g, f);
            bool composable = mf.tgt == mg.src;
            if (!composable && gf != kNoMorphism)
                fail("typing: table entry for non-composable pair (" + mg.name + ", " + mf.name + ")");
            if (composable && gf == kNoMorphism)
                fail("typing: missing composite for (" + mg.name + " after " + mf.name + ")");
            if (composable && gf != kNoMorphism) {
                const Morphism& mgf = c.morphism(gf);
                if (mgf.src != mf.src || mgf.tgt != mg.tgt)
                    fail("typing: composite " + mgf.name + " of (" + mg.name + " after " + mf.name +
                         ") has wrong source or target");
            }
        }
    }

    for (MorId f = 0; f < m; ++f) {
        const Morphism& mf = c.morphism(f);
        MorId left = c.compose(c.identity(mf.tgt), f);
        MorId right = c.compose(f, c.identity(mf.src));
        if (left != f) fail("identity not left-neutral on " + mf.name);
        if (right != f) fail("identity not right-neutral on " + mf.name);
    }

    if (rep.ok) {  // associativity only meaningful on a well-typed table
        for (MorId h = 0; h < m; ++h)
            for (MorId g = 0; g < m; ++g) {
                if (c.morphism(g).tgt != c.morphism(h).src) continue;
                MorId hg = c.compose(h, g);
                for (MorId f = 0; f < m; ++f) {
                    if (c.morphism(f).tgt != c.morphism(g).src) continue;
                    MorId gf = c.compose(g, f);
                    if (hg == kNoMorphism || gf == kNoMorphism) continue;
                    if (c.compose(hg, f) != c.compose(h, gf))
                        fail("associativity fails on (" + c.morphism(h).name + ", " +
                             c.morphism(g).name + ", " + c.morphism(f).name + ")");
                }
            }
    }
    return rep;
}

namespace {

std::string subset_label(unsigned mask) {
    if (mask == 0) return "{}";
    std::string s;
    if (mask & 1u) s += '+';
    for (unsigned b = 1; b < 32; ++b)
        if (mask & (1u << b)) s += std::to_string(b);
    return s;
}

}  // namespace

FinCategory powerset_poset(int n, bool punctured) {
    if (n < 0) throw StructureError("powerset_poset: n must be non-negative");
    if (n > 10) throw CapacityError("powerset_poset: n larger than 10 is not supported");
    std::vector<unsigned> masks;
    for (unsigned mask = punctured ? 1 : 0; mask < (1u << (n + 1)); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::string> labels;
    for (unsigned mk : masks) labels.push_back(subset_label(mk));
    std::vector<std::pair<ObjId, ObjId>> rels;
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = 0; j < masks.size(); ++j)
            if (i != j && (masks[i] & masks[j]) == masks[i])
                rels.emplace_back(static_cast<ObjId>(i), static_cast<ObjId>(j));
    return poset_from_relations(labels, rels);
}

FinCategory poset_from_relations(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<ObjId, ObjId>>& relations) {
    const size_t n = labels.size();
    std::vector<char> le(n * n, 0);
    for (size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || static_cast<size_t>(a) >= n || static_cast<size_t>(b) >= n)
            throw StructureError("poset_from_relations: index out of range");
        le[static_cast<size_t>(a) * n + static_cast<size_t>(b)] = 1;
    }
    for (size_t k = 0; k < n; ++k)  // Warshall closure
        for (size_t i = 0; i < n; ++i)
            if (le[i * n + k])
                for (size_t j = 0; j < n; ++j)
                    if (le[k * n + j]) le[i * n + j] = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (le[i * n + j] && le[j * n + i])
                throw StructureError("poset_from_relations: relation has a cycle through " +
                                     labels[i] + " and " + labels[j]);

    FinCategoryBuilder b;
    for (const std::string& l : labels) b.add_object(l);
    std::vector<MorId> arrow(n * n, kNoMorphism);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && le[i * n + j])
                arrow[i * n + j] = b.add_morphism(labels[i] + "<" + labels[j],
                                                  static_cast<ObjId>(i), static_cast<ObjId>(j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j || arrow[i * n + j] == kNoMorphism) continue;
            for (size_t k = 0; k < n; ++k) {
                if (j == k || i == k || arrow[j * n + k] == kNoMorphism) continue;
                b.set_composite(arrow[j * n + k], arrow[i * n + j], arrow[i * n + k]);
            }
        }
    return b.build();
}

FinCategory pullback_shape() {
    return poset_from_relations({"a", "b", "c"}, {{0, 1}, {2, 1}});
}

FinCategory arrow_shape() { return poset_from_relations({"a", "b"}, {{0, 1}}); }

FinCategory discrete_category(int k) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i));
    return poset_from_relations(labels, {});
}

FinCategory terminal_category() { return poset_from_relations({"*"}, {}); }

FinFunctor FinFunctor::make(FinCategory source, FinCategory target, std::vector<ObjId> object_map,
                            std::vector<MorId> morphism_map) {
    if (static_cast<Index>(object_map.size()) != source.object_count() ||
        static_cast<Index>(morphism_map.size()) != source.morphism_count())
        throw StructureError("FinFunctor: map sizes do not match the source category");
    for (ObjId x : object_map)
        if (x < 0 || x >= target.object_count())
            throw StructureError("FinFunctor: object index out of range");
    for (MorId f : morphism_map)
        if (f < 0 || f >= target.morphism_count())
            throw StructureError("FinFunctor: morphism index out of range");
    FinFunctor F;
    F.source_ = std::move(source);
    F.target_ = std::move(target);
    F.object_map_ = std::move(object_map);
    F.morphism_map_ = std::move(morphism_map);
    return F;
}

FinFunctor FinFunctor::identity(const FinCategory& c) {
    std::vector<ObjId> om(static_cast<size_t>(c.object_count()));
    std::vector<MorId> mm(static_cast<size_t>(c.morphism_count()));
    for (size_t i = 0; i < om.size(); ++i) om[i] = static_cast<ObjId>(i);
    for (size_t i = 0; i < mm.size(); ++i) mm[i] = static_cast<MorId>(i);
    return make(c, c, std::move(om), std::move(mm));
}

FinFunctor FinFunctor::constant(const FinCategory& source, const FinCategory& target, ObjId at) {
    std::vector<ObjId> om(static_cast<size_t>(source.object_count()), at);
    std::vector<MorId> mm(static_cast<size_t>(source.morphism_count()), target.identity(at));
    return make(source, target, std::move(om), std::move(mm));
}

ValidationReport validate_functor(const FinFunctor& F) {
    ValidationReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.issues.push_back(s);
    };
    const FinCategory& s = F.source();
    const FinCategory& t = F.target();
    for (MorId f = 0; f < s.morphism_count(); ++f) {
        const Morphism& mf = s.morphism(f);
        const Morphism& im = t.morphism(F.on_morphism(f));
        if (im.src != F.on_object(mf.src) || im.tgt != F.on_object(mf.tgt))
            fail("source/target not preserved on " + mf.name);
    }
    for (ObjId x = 0; x < s.object_count(); ++x)
        if (F.on_morphism(s.identity(x)) != t.identity(F.on_object(x)))
            fail("identity of " + s.object_label(x) + " not preserved");
    for (MorId g = 0; g < s.morphism_count(); ++g)
        for (MorId f = 0; f < s.morphism_count(); ++f) {
            MorId gf = s.compose(g, f);
            if (gf == kNoMorphism) continue;
            MorId lhs = F.on_morphism(gf);
            MorId rhs = t.compose(F.on_morphism(g), F.on_morphism(f));
            if (lhs != rhs)
                fail("composition not preserved on (" + s.morphism(g).name + ", " +
                     s.morphism(f).name + ")");
        }
    return rep;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
    if (!(f.target() == g.source())) throw StructureError("compose: functors not composable");
    std::vector<ObjId> om;
    std::vector<MorId> mm;
    for (ObjId x = 0; x < f.source().object_count(); ++x) om.push_back(g.on_object(f.on_object(x)));
    for (MorId m = 0; m < f.source().morphism_count(); ++m)
        mm.push_back(g.on_morphism(f.on_morphism(m)));
    return FinFunctor::make(f.source(), g.target(), std::move(om), std::move(mm));
}

namespace {

// Shared scaffold for over and comma categories: given a list of "objects"
// (indices carrying an underlying morphism test), build the category of
// commuting triangles over a base category.
struct TriangleCategory {
    FinCategory cat;
    std::vector<MorId> underlying;  // per non-identity morphism of cat
};

TriangleCategory triangle_category(
    const FinCategory& base, const std::vector<std::string>& labels,
    const std::function<std::vector<std::pair<MorId, bool>>(size_t, size_t)>& arrows_between) {
    struct Tri {
        ObjId from, to;
        MorId g;
    };
    std::vector<Tri> tris;
    std::map<std::pair<ObjId, ObjId>, std::map<MorId, MorId>> arrow;
    for (size_t p = 0; p < labels.size(); ++p)
        for (size_t q = 0; q < labels.size(); ++q)
            for (auto [g, keep] : arrows_between(p, q)) {
                if (!keep) continue;
                arrow[{static_cast<ObjId>(p), static_cast<ObjId>(q)}][g] =
                    static_cast<MorId>(tris.size());
                tris.push_back(Tri{static_cast<ObjId>(p), static_cast<ObjId>(q), g});
            }

    FinCategoryBuilder b;
    for (const std::string& l : labels) b.add_object(l);
    for (size_t t = 0; t < tris.size(); ++t)
        b.add_morphism(base.morphism(tris[t].g).name + "|" + std::to_string(tris[t].from) + ">" +
                           std::to_string(tris[t].to),
                       tris[t].from, tris[t].to);
    const MorId explicit_count = static_cast<MorId>(tris.size());
    auto identity_id = [&](ObjId x) { return explicit_count + x; };
    for (size_t p = 0; p < tris.size(); ++p)
        for (size_t q = 0; q < tris.size(); ++q) {
            if (tris[p].to != tris[q].from) continue;
            MorId comp = base.compose(tris[q].g, tris[p].g);
            if (comp == kNoMorphism) continue;
            MorId target = kNoMorphism;
            if (base.morphism(comp).is_identity && tris[p].from == tris[q].to) {
                target = identity_id(tris[p].from);
            } else {
                auto it = arrow.find({tris[p].from, tris[q].to});
                if (it != arrow.end()) {
                    auto jt = it->second.find(comp);
                    if (jt != it->second.end()) target = jt->second;
                }
            }
            if (target != kNoMorphism)
                b.set_composite(static_cast<MorId>(q), static_cast<MorId>(p), target);
        }
    TriangleCategory out;
    out.cat = b.build_raw();
    ValidationReport rep = validate_category(out.cat);
    if (!rep.ok)
        throw StructureError("triangle category is invalid:\n" + rep.to_text());
    for (const Tri& t : tris) out.underlying.push_back(t.g);
    return out;
}

}  // namespace

OverCategory over_category(const FinCategory& c, ObjId i) {
    if (i < 0 || i >= c.object_count()) throw StructureError("over_category: object out of range");
    OverCategory out;
    for (MorId a = 0; a < c.morphism_count(); ++a)
        if (c.morphism(a).tgt == i) out.object_morphism.push_back(a);

    std::vector<std::string> labels;
    for (MorId a : out.object_morphism) labels.push_back(c.morphism(a).name);

    auto arrows = [&](size_t p, size_t q) {
        std::vector<std::pair<MorId, bool>> res;
        MorId a = out.object_morphism[p];
        MorId a2 = out.object_morphism[q];
        for (MorId g : c.hom(c.morphism(a).src, c.morphism(a2).src)) {
            bool commutes = c.compose(a2, g) == a;
            bool skip_identity = c.morphism(g).is_identity && p == q;
            res.emplace_back(g, commutes && !skip_identity);
        }
        return res;
    };
    TriangleCategory tc = triangle_category(c, labels, arrows);
    out.cat = tc.cat;

    std::vector<ObjId> om;
    for (MorId a : out.object_morphism) om.push_back(c.morphism(a).src);
    std::vector<MorId> mm(static_cast<size_t>(out.cat.morphism_count()), kNoMorphism);
    for (size_t t = 0; t < tc.underlying.size(); ++t) mm[t] = tc.underlying[t];
    for (size_t k = 0; k < out.object_morphism.size(); ++k)
        mm[static_cast<size_t>(out.cat.identity(static_cast<ObjId>(k)))] =
            c.identity(c.morphism(out.object_morphism[k]).src);
    out.forgetful = FinFunctor::make(out.cat, c, std::move(om), std::move(mm));
    return out;
}

CommaCategory comma_category(const FinFunctor& F, ObjId j) {
    const FinCategory& I = F.source();
    const FinCategory& J = F.target();
    if (j < 0 || j >= J.object_count()) throw StructureError("comma_category: object out of range");
    CommaCategory out;
    std::vector<std::string> labels;
    for (ObjId i = 0; i < I.object_count(); ++i)
        for (MorId u : J.hom(F.on_object(i), j)) {
            labels.push_back("(" + I.object_label(i) + "," + J.morphism(u).name + ")");
            out.object_pair.emplace_back(i, u);
        }
    auto arrows = [&](size_t p, size_t q) {
        std::vector<std::pair<MorId, bool>> res;
        auto [i1, u1] = out.object_pair[p];
        auto [i2, u2] = out.object_pair[q];
        for (MorId g : I.hom(i1, i2)) {
            bool commutes = J.compose(u2, F.on_morphism(g)) == u1;
            bool skip_identity = I.morphism(g).is_identity && p == q;
            res.emplace_back(g, commutes && !skip_identity);
        }
        return res;
    };
    TriangleCategory tc = triangle_category(I, labels, arrows);
    out.cat = tc.cat;

    std::vector<ObjId> om;
    for (auto& [i, u] : out.object_pair) om.push_back(i);
    std::vector<MorId> mm(static_cast<size_t>(out.cat.morphism_count()), kNoMorphism);
    for (size_t t = 0; t < tc.underlying.size(); ++t) mm[t] = tc.underlying[t];
    for (size_t k = 0; k < out.object_pair.size(); ++k)
        mm[static_cast<size_t>(out.cat.identity(static_cast<ObjId>(k)))] =
            I.identity(out.object_pair[k].first);
    out.projection = FinFunctor::make(out.cat, I, std::move(om), std::move(mm));
    return out;
}

FinCategory opposite(const FinCategory& c) {
    // The builder lays out non-identities first and then one identity per
    // object, so opposite ids can be computed up front: non-identities keep
    // their relative order, identity of x sits at (#non-identities) + x.
    const MorId explicit_count = static_cast<MorId>(c.non_identity_count());
    std::vector<MorId> to_op(static_cast<size_t>(c.morphism_count()), kNoMorphism);
    MorId next = 0;
    for (MorId f = 0; f < c.morphism_count(); ++f)
        if (!c.morphism(f).is_identity) to_op[static_cast<size_t>(f)] = next++;
    for (ObjId x = 0; x < c.object_count(); ++x)
        to_op[static_cast<size_t>(c.identity(x))] = explicit_count + x;

    FinCategoryBuilder b;
    for (ObjId x = 0; x < c.object_count(); ++x) b.add_object(c.object_label(x));
    for (MorId f = 0; f < c.morphism_count(); ++f)
        if (!c.morphism(f).is_identity)
            b.add_morphism(c.morphism(f).name, c.morphism(f).tgt, c.morphism(f).src);
    for (MorId g = 0; g < c.morphism_count(); ++g)
        for (MorId f = 0; f < c.morphism_count(); ++f) {
            MorId fg = c.compose(f, g);
            if (fg == kNoMorphism) continue;
            if (c.morphism(g).is_identity || c.morphism(f).is_identity) continue;
            b.set_composite(to_op[static_cast<size_t>(g)], to_op[static_cast<size_t>(f)],
                            to_op[static_cast<size_t>(fg)]);
        }
    return b.build_raw();
}

namespace {

std::vector<std::vector<Index>> hom_card(const FinCategory& c) {
    size_t n = static_cast<size_t>(c.object_count());
    std::vector<std::vector<Index>> h(n, std::vector<Index>(n, 0));
    for (MorId f = 0; f < c.morphism_count(); ++f)
        h[static_cast<size_t>(c.morphism(f).src)][static_cast<size_t>(c.morphism(f).tgt)]++;
    return h;
}

bool morphism_level_iso(const FinCategory& a, const FinCategory& b, const std::vector<ObjId>& phi,
                        std::vector<MorId>& mm) {
    const MorId m = a.morphism_count();
    mm.assign(static_cast<size_t>(m), kNoMorphism);
    std::vector<std::vector<MorId>> buckets_a, buckets_b;
    for (ObjId x = 0; x < a.object_count(); ++x)
        for (ObjId y = 0; y < a.object_count(); ++y) {
            auto ha = a.hom(x, y);
            auto hb = b.hom(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]);
            if (ha.size() != hb.size()) return false;
            if (ha.empty()) continue;
            buckets_a.push_back(std::move(ha));
            buckets_b.push_back(std::move(hb));
        }
    auto final_check = [&]() {
        for (ObjId x = 0; x < a.object_count(); ++x)
            if (mm[static_cast<size_t>(a.identity(x))] != b.identity(phi[static_cast<size_t>(x)]))
                return false;
        for (MorId g = 0; g < m; ++g)
            for (MorId f = 0; f < m; ++f) {
                MorId gf = a.compose(g, f);
                MorId im = b.compose(mm[static_cast<size_t>(g)], mm[static_cast<size_t>(f)]);
                if ((gf == kNoMorphism) != (im == kNoMorphism)) return false;
                if (gf != kNoMorphism && mm[static_cast<size_t>(gf)] != im) return false;
            }
        return true;
    };
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == buckets_a.size()) return final_check();
        std::vector<size_t> perm(buckets_a[k].size());
        for (size_t t = 0; t < perm.size(); ++t) perm[t] = t;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t t = 0; t < perm.size(); ++t)
                mm[static_cast<size_t>(buckets_a[k][t])] = buckets_b[k][perm[t]];
            if (rec(k + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    return rec(0);
}

}  // namespace

std::optional<FinFunctor> find_isomorphism(const FinCategory& a, const FinCategory& b,
                                           Index max_objects) {
    if (a.object_count() > max_objects || b.object_count() > max_objects)
        throw CapacityError("find_isomorphism: category exceeds " + std::to_string(max_objects) +
                            " objects");
    if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count())
        return std::nullopt;
    const size_t n = static_cast<size_t>(a.object_count());
    auto ha = hom_card(a), hb = hom_card(b);

    auto profile = [&](const std::vector<std::vector<Index>>& h, size_t x) {
        std::vector<Index> out, in;
        for (size_t y = 0; y < n; ++y) {
            out.push_back(h[x][y]);
            in.push_back(h[y][x]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        out.insert(out.end(), in.begin(), in.end());
        out.push_back(h[x][x]);
        return out;
    };
    std::vector<std::vector<Index>> pa, pb;
    for (size_t x = 0; x < n; ++x) {
        pa.push_back(profile(ha, x));
        pb.push_back(profile(hb, x));
    }

    std::vector<ObjId> phi(n, -1);
    std::vector<bool> used(n, false);
    std::vector<MorId> mm;

    auto consistent = [&](size_t x, size_t y) {
        if (pa[x] != pb[y]) return false;
        for (size_t q = 0; q < x; ++q) {
            size_t w = static_cast<size_t>(phi[q]);
            if (ha[x][q] != hb[y][w] || ha[q][x] != hb[w][y]) return false;
        }
        return true;
    };

    std::function<bool(size_t)> assign = [&](size_t x) -> bool {
        if (x == n) return morphism_level_iso(a, b, phi, mm);
        for (size_t y = 0; y < n; ++y) {
            if (used[y] || !consistent(x, y)) continue;
            phi[x] = static_cast<ObjId>(y);
            used[y] = true;
            if (assign(x + 1)) return true;
            used[y] = false;
            phi[x] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return FinFunctor::make(a, b, phi, mm);
}

bool is_poset(const FinCategory& c) {
    for (ObjId x = 0; x < c.object_count(); ++x)
        for (ObjId y = 0; y < c.object_count(); ++y) {
            size_t k = c.hom(x, y).size();
            if (x == y && k != 1) return false;
            if (x != y && k > 1) return false;
            if (x != y && k == 1 && !c.hom(y, x).empty()) return false;
        }
    return true;
}

FinCategory with_object_labels(const FinCategory& c, const std::vector<std::string>& labels) {
    if (static_cast<Index>(labels.size()) != c.object_count())
        throw StructureError("with_object_labels: wrong number of labels");
    const MorId explicit_count = static_cast<MorId>(c.non_identity_count());
    std::vector<MorId> remap(static_cast<size_t>(c.morphism_count()), kNoMorphism);
    MorId next = 0;
    for (MorId f = 0; f < c.morphism_count(); ++f)
        if (!c.morphism(f).is_identity) remap[static_cast<size_t>(f)] = next++;
    for (ObjId x = 0; x < c.object_count(); ++x)
        remap[static_cast<size_t>(c.identity(x))] = explicit_count + x;

    FinCategoryBuilder b;
    for (const std::string& l : labels) b.add_object(l);
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        const Morphism& m = c.morphism(f);
        if (!m.is_identity) b.add_morphism(m.name, m.src, m.tgt);
    }
    for (MorId g = 0; g < c.morphism_count(); ++g)
        for (MorId f = 0; f < c.morphism_count(); ++f) {
            if (c.morphism(g).is_identity || c.morphism(f).is_identity) continue;
            MorId gf = c.compose(g, f);
            if (gf == kNoMorphism) continue;
            b.set_composite(remap[static_cast<size_t>(g)], remap[static_cast<size_t>(f)],
                            remap[static_cast<size_t>(gf)]);
        }
    return b.build_raw();
}

FinFunctor poset_functor(const FinCategory& source, const FinCategory& target,
                         const std::vector<ObjId>& object_map) {
    if (static_cast<Index>(object_map.size()) != source.object_count())
        throw StructureError("poset_functor: object map has wrong size");
    std::vector<MorId> mm(static_cast<size_t>(source.morphism_count()), kNoMorphism);
    for (MorId f = 0; f < source.morphism_count(); ++f) {
        const Morphism& m = source.morphism(f);
        ObjId fx = object_map[static_cast<size_t>(m.src)];
        ObjId fy = object_map[static_cast<size_t>(m.tgt)];
        if (m.is_identity || fx == fy) {
            mm[static_cast<size_t>(f)] = target.identity(fx);
            continue;
        }
        auto h = target.hom(fx, fy);
        if (h.empty()) throw StructureError("poset_functor: map is not monotone on " + m.name);
        mm[static_cast<size_t>(f)] = h.front();
    }
    return FinFunctor::make(source, target, object_map, std::move(mm));
}

}  // namespace catlim
