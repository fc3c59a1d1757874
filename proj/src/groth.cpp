#include "catlim/groth.hpp"

#include "catlim/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace catlim {

ValidationReport validate_cat_diagram(const CatDiagram& d) {
    ValidationReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.issues.push_back(s);
    };
    const FinCategory& k = d.shape;
    if (static_cast<Index>(d.fiber.size()) != k.object_count() ||
        static_cast<Index>(d.action.size()) != k.morphism_count()) {
        fail("fiber/action tables do not match the shape");
        return rep;
    }
    for (MorId g = 0; g < k.morphism_count(); ++g) {
        const FinFunctor& act = d.action[static_cast<size_t>(g)];
        const Morphism& m = k.morphism(g);
        if (!(act.source() == d.fiber[static_cast<size_t>(m.src)]) ||
            !(act.target() == d.fiber[static_cast<size_t>(m.tgt)]))
            fail("action of " + m.name + " has wrong source or target fiber");
        else if (!validate_functor(act).ok)
            fail("action of " + m.name + " is not a functor");
    }
    if (!rep.ok) return rep;
    for (ObjId x = 0; x < k.object_count(); ++x)
        if (!(d.action[static_cast<size_t>(k.identity(x))] ==
              FinFunctor::identity(d.fiber[static_cast<size_t>(x)])))
            fail("action of id:" + k.object_label(x) + " is not the identity functor");
    for (MorId g = 0; g < k.morphism_count(); ++g)
        for (MorId f = 0; f < k.morphism_count(); ++f) {
            MorId gf = k.compose(g, f);
            if (gf == kNoMorphism) continue;
            FinFunctor lhs = d.action[static_cast<size_t>(gf)];
            FinFunctor rhs = compose(d.action[static_cast<size_t>(g)], d.action[static_cast<size_t>(f)]);
            if (!(lhs.object_map() == rhs.object_map() && lhs.morphism_map() == rhs.morphism_map()))
                fail("action is not functorial on (" + k.morphism(g).name + ", " +
                     k.morphism(f).name + ")");
        }
    return rep;
}

ObjId GrothendieckResult::total_object(ObjId shape_obj, ObjId fiber_obj) const {
    for (size_t t = 0; t < object_of.size(); ++t)
        if (object_of[t].first == shape_obj && object_of[t].second == fiber_obj)
            return static_cast<ObjId>(t);
    throw StructureError("total_object: no such object");
}

MorId GrothendieckResult::total_morphism(ObjId src, ObjId tgt, MorId gamma, MorId f) const {
    for (MorId m = 0; m < total.morphism_count(); ++m) {
        const Morphism& mm = total.morphism(m);
        if (mm.src == src && mm.tgt == tgt && morphism_of[static_cast<size_t>(m)].first == gamma &&
            morphism_of[static_cast<size_t>(m)].second == f)
            return m;
    }
    throw StructureError("total_morphism: no such morphism");
}

GrothendieckResult grothendieck(const CatDiagram& d) {
    ValidationReport rep = validate_cat_diagram(d);
    if (!rep.ok) throw StructureError("grothendieck: invalid diagram of categories:\n" + rep.to_text());
    const FinCategory& shape = d.shape;

    GrothendieckResult out;
    std::vector<std::string> labels;
    for (ObjId k = 0; k < shape.object_count(); ++k) {
        const FinCategory& fib = d.fiber[static_cast<size_t>(k)];
        for (ObjId x = 0; x < fib.object_count(); ++x) {
            out.object_of.emplace_back(k, x);
            labels.push_back(shape.object_label(k) + ":" + fib.object_label(x));
        }
    }
    const ObjId n_total = static_cast<ObjId>(out.object_of.size());
    auto obj_index = [&](ObjId k, ObjId x) {
        for (ObjId t = 0; t < n_total; ++t)
            if (out.object_of[static_cast<size_t>(t)] == std::make_pair(k, x)) return t;
        throw StructureError("grothendieck: object lookup failed");
    };

    // Morphisms (k,x) -> (l,y): pairs (γ: l -> k, f: x -> Φ(γ)(y)).
    struct TotalMor {
        ObjId src, tgt;
        MorId gamma, f;
    };
    std::vector<TotalMor> mors;
    std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> index;
    for (ObjId s = 0; s < n_total; ++s) {
        auto [k, x] = out.object_of[static_cast<size_t>(s)];
        for (ObjId t = 0; t < n_total; ++t) {
            auto [l, y] = out.object_of[static_cast<size_t>(t)];
            for (MorId gamma : shape.hom(l, k)) {
                const FinFunctor& act = d.action[static_cast<size_t>(gamma)];
                ObjId gy = act.on_object(y);
                for (MorId f : d.fiber[static_cast<size_t>(k)].hom(x, gy)) {
                    bool is_id = shape.morphism(gamma).is_identity &&
                                 d.fiber[static_cast<size_t>(k)].morphism(f).is_identity;
                    if (is_id) continue;  // identities come from the builder
                    index[{s, t, gamma, f}] = static_cast<MorId>(mors.size());
                    mors.push_back(TotalMor{s, t, gamma, f});
                }
            }
        }
    }

    FinCategoryBuilder b;
    for (const std::string& l : labels) b.add_object(l);
    for (const TotalMor& m : mors) {
        const std::string gname = shape.morphism(m.gamma).name;
        const std::string fname =
            d.fiber[static_cast<size_t>(out.object_of[static_cast<size_t>(m.src)].first)]
                .morphism(m.f)
                .name;
        std::ostringstream name;
        name << "(" << gname << ";" << fname << "):" << m.src << ">" << m.tgt;
        b.add_morphism(name.str(), m.src, m.tgt);
    }
    const MorId explicit_count = static_cast<MorId>(mors.size());
    auto identity_id = [&](ObjId t) { return explicit_count + t; };

    // (γ₂,g) ∘ (γ₁,f) = (γ₁∘γ₂, Φ(γ₁)(g)∘f), with Φ(γ₁): Φ(l) -> Φ(k).
    auto compose_pairs = [&](const TotalMor& u, const TotalMor& v) -> std::pair<MorId, MorId> {
        ObjId k = out.object_of[static_cast<size_t>(u.src)].first;
        MorId gamma = shape.compose(u.gamma, v.gamma);
        if (gamma == kNoMorphism) throw StructureError("grothendieck: shape composite missing");
        const FinFunctor& act1 = d.action[static_cast<size_t>(u.gamma)];
        MorId g_in_k = act1.on_morphism(v.f);
        MorId f2 = d.fiber[static_cast<size_t>(k)].compose(g_in_k, u.f);
        if (f2 == kNoMorphism) throw StructureError("grothendieck: fiber composite missing");
        return {gamma, f2};
    };
    for (MorId p = 0; p < explicit_count; ++p)
        for (MorId q = 0; q < explicit_count; ++q) {
            const TotalMor& u = mors[static_cast<size_t>(p)];
            const TotalMor& v = mors[static_cast<size_t>(q)];
            if (u.tgt != v.src) continue;
            auto [gamma, f] = compose_pairs(u, v);
            ObjId k = out.object_of[static_cast<size_t>(u.src)].first;
            bool comp_is_id = shape.morphism(gamma).is_identity &&
                              d.fiber[static_cast<size_t>(k)].morphism(f).is_identity;
            MorId target;
            if (comp_is_id) {
                target = identity_id(u.src);
            } else {
                auto it = index.find({u.src, v.tgt, gamma, f});
                if (it == index.end())
                    throw StructureError("grothendieck: composite pair not enumerated");
                target = it->second;
            }
            b.set_composite(q, p, target);
        }

    out.total = b.build_raw();
    ValidationReport tot_rep = validate_category(out.total);
    if (!tot_rep.ok)
        throw StructureError("grothendieck: construction produced an invalid category:\n" +
                             tot_rep.to_text());

    for (const TotalMor& m : mors) out.morphism_of.emplace_back(m.gamma, m.f);
    for (ObjId t = 0; t < n_total; ++t) {
        auto [k, x] = out.object_of[static_cast<size_t>(t)];
        out.morphism_of.emplace_back(shape.identity(k),
                                     d.fiber[static_cast<size_t>(k)].identity(x));
    }

    // Projection: with the reversed-arrow convention a morphism over γ: l -> k
    // runs (k,x) -> (l,y), so the projection is a functor into the opposite of
    // the shape. Our builder layout makes morphism ids in opposite(shape)
    // coincide with those of shape.
    std::vector<ObjId> om;
    for (auto& [k, x] : out.object_of) om.push_back(k);
    std::vector<MorId> mm;
    for (auto& [gamma, f] : out.morphism_of) mm.push_back(gamma);
    out.projection = FinFunctor::make(out.total, opposite(shape), std::move(om), std::move(mm));
    ValidationReport proj_rep = validate_functor(out.projection);
    if (!proj_rep.ok)
        throw StructureError("grothendieck: projection is not a functor:\n" + proj_rep.to_text());
    (void)obj_index;
    return out;
}

MorId CofiberData::eta(ObjId i) const {
    return cross(functor.target().identity(functor.on_object(i)), i);
}

MorId CofiberData::star_map(ObjId i) const {
    for (MorId m = 0; m < cofiber.morphism_count(); ++m)
        if (morphism_info[static_cast<size_t>(m)].kind == Kind::Star &&
            !cofiber.morphism(m).is_identity && cofiber.morphism(m).src == star &&
            i_object_of[static_cast<size_t>(cofiber.morphism(m).tgt)] == i)
            return m;
    throw StructureError("star_map: morphism not found");
}

MorId CofiberData::cross(MorId u, ObjId i) const {
    for (MorId m = 0; m < cofiber.morphism_count(); ++m) {
        const MorInfo& info = morphism_info[static_cast<size_t>(m)];
        if (info.kind == Kind::Cross && info.underlying == u &&
            i_object_of[static_cast<size_t>(cofiber.morphism(m).tgt)] == i)
            return m;
    }
    throw StructureError("cross: morphism not found");
}

CofiberData cofiber_category(const FinFunctor& f) {
    const FinCategory& I = f.source();
    const FinCategory& J = f.target();
    // Span shape: apex carries I, the legs carry * and J.
    FinCategory span = poset_from_relations({"i", "*", "j"}, {{0, 1}, {0, 2}});
    ObjId apex = 0, left = 1, right = 2;

    CatDiagram d;
    d.shape = span;
    d.fiber = {I, terminal_category(), J};
    d.action.resize(static_cast<size_t>(span.morphism_count()));
    MorId to_left = span.hom(apex, left).front();
    MorId to_right = span.hom(apex, right).front();
    d.action[static_cast<size_t>(to_left)] = FinFunctor::constant(I, d.fiber[1], 0);
    d.action[static_cast<size_t>(to_right)] = f;
    d.action[static_cast<size_t>(span.identity(apex))] = FinFunctor::identity(I);
    d.action[static_cast<size_t>(span.identity(left))] = FinFunctor::identity(d.fiber[1]);
    d.action[static_cast<size_t>(span.identity(right))] = FinFunctor::identity(J);

    GrothendieckResult g = grothendieck(d);

    CofiberData out;
    out.functor = f;
    std::vector<std::string> labels;
    for (auto& [k, x] : g.object_of) {
        out.i_object_of.push_back(k == apex ? x : -1);
        out.j_object_of.push_back(k == right ? x : -1);
        if (k == apex)
            labels.push_back("i:" + I.object_label(x));
        else if (k == right)
            labels.push_back("j:" + J.object_label(x));
        else
            labels.push_back("*");
    }
    out.cofiber = with_object_labels(g.total, labels);
    out.star = g.total_object(left, 0);

    for (MorId m = 0; m < out.cofiber.morphism_count(); ++m) {
        auto [gamma, ff] = g.morphism_of[static_cast<size_t>(m)];
        CofiberData::MorInfo info{};
        if (gamma == span.identity(right)) {
            info.kind = CofiberData::Kind::FromJ;
            info.underlying = ff;
        } else if (gamma == span.identity(apex)) {
            info.kind = CofiberData::Kind::FromI;
            info.underlying = ff;
        } else if (gamma == to_right) {
            info.kind = CofiberData::Kind::Cross;
            info.underlying = ff;
        } else {  // to_left or the star identity
            info.kind = CofiberData::Kind::Star;
            info.underlying = kNoMorphism;
        }
        out.morphism_info.push_back(info);
    }

    // ι: J -> cofiber and κ: I -> cofiber.
    std::vector<ObjId> iom, kom;
    for (ObjId j = 0; j < J.object_count(); ++j) iom.push_back(g.total_object(right, j));
    for (ObjId i = 0; i < I.object_count(); ++i) kom.push_back(g.total_object(apex, i));
    std::vector<MorId> imm(static_cast<size_t>(J.morphism_count()));
    std::vector<MorId> kmm(static_cast<size_t>(I.morphism_count()));
    for (MorId u = 0; u < J.morphism_count(); ++u) {
        const Morphism& mu = J.morphism(u);
        imm[static_cast<size_t>(u)] =
            mu.is_identity ? out.cofiber.identity(iom[static_cast<size_t>(mu.src)])
                           : g.total_morphism(iom[static_cast<size_t>(mu.src)],
                                              iom[static_cast<size_t>(mu.tgt)],
                                              span.identity(right), u);
    }
    for (MorId u = 0; u < I.morphism_count(); ++u) {
        const Morphism& mu = I.morphism(u);
        kmm[static_cast<size_t>(u)] =
            mu.is_identity ? out.cofiber.identity(kom[static_cast<size_t>(mu.src)])
                           : g.total_morphism(kom[static_cast<size_t>(mu.src)],
                                              kom[static_cast<size_t>(mu.tgt)],
                                              span.identity(apex), u);
    }
    out.iota = FinFunctor::make(J, out.cofiber, std::move(iom), std::move(imm));
    out.kappa = FinFunctor::make(I, out.cofiber, std::move(kom), std::move(kmm));
    return out;
}

CheckReport cofiber_structure_check(const CofiberData& c) {
    CheckReport rep;
    const FinCategory& I = c.functor.source();
    const FinCategory& J = c.functor.target();
    const FinCategory& H = c.cofiber;

    rep.add(validate_category(H).ok, "cofiber category satisfies the axioms");
    rep.add(validate_functor(c.iota).ok, "iota is a functor");
    rep.add(validate_functor(c.kappa).ok, "kappa is a functor");
    rep.add(H.object_count() == I.object_count() + J.object_count() + 1,
            "object count is |I| + |J| + 1");

    // ι full and faithful: hom_J(j,j') maps bijectively onto hom_H(ι j, ι j').
    bool ff = true;
    for (ObjId a = 0; a < J.object_count(); ++a)
        for (ObjId b = 0; b < J.object_count(); ++b) {
            auto hj = J.hom(a, b);
            auto hh = H.hom(c.iota.on_object(a), c.iota.on_object(b));
            if (hj.size() != hh.size()) ff = false;
            std::vector<MorId> image;
            for (MorId u : hj) image.push_back(c.iota.on_morphism(u));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() != hj.size()) ff = false;
        }
    rep.add(ff, "iota is full and faithful");

    bool faithful = true;
    for (ObjId a = 0; a < I.object_count(); ++a)
        for (ObjId b = 0; b < I.object_count(); ++b) {
            auto hi = I.hom(a, b);
            std::vector<MorId> image;
            for (MorId u : hi) image.push_back(c.kappa.on_morphism(u));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() != hi.size()) faithful = false;
        }
    rep.add(faithful, "kappa is faithful");

    // hom_H(ι j, κ i) is in bijection with hom_J(j, F i).
    bool hom_ok = true;
    for (ObjId j = 0; j < J.object_count(); ++j)
        for (ObjId i = 0; i < I.object_count(); ++i) {
            auto hh = H.hom(c.iota.on_object(j), c.kappa.on_object(i));
            auto hj = J.hom(j, c.functor.on_object(i));
            if (hh.size() != hj.size()) hom_ok = false;
            for (MorId m : hh) {
                const auto& info = c.morphism_info[static_cast<size_t>(m)];
                if (info.kind != CofiberData::Kind::Cross) hom_ok = false;
                else if (std::find(hj.begin(), hj.end(), info.underlying) == hj.end()) hom_ok = false;
            }
        }
    rep.add(hom_ok, "hom(j, i) agrees with hom_J(j, F i) for every pair");

    bool star_ok = true;
    for (ObjId i = 0; i < I.object_count(); ++i)
        if (H.hom(c.star, c.kappa.on_object(i)).size() != 1) star_ok = false;
    for (ObjId j = 0; j < J.object_count(); ++j) {
        if (!H.hom(c.star, c.iota.on_object(j)).empty()) star_ok = false;
        if (!H.hom(c.iota.on_object(j), c.star).empty()) star_ok = false;
    }
    for (ObjId i = 0; i < I.object_count(); ++i)
        if (!H.hom(c.kappa.on_object(i), c.star).empty()) star_ok = false;
    rep.add(star_ok, "exactly one morphism * -> i per I-object and none through J");

    // Naturality of the canonical transformation ιF ⇒ κ.
    bool natural = true;
    for (MorId u = 0; u < I.morphism_count(); ++u) {
        const Morphism& mu = I.morphism(u);
        if (mu.is_identity) continue;
        MorId lhs = H.compose(c.kappa.on_morphism(u), c.eta(mu.src));
        MorId rhs = H.compose(c.eta(mu.tgt), c.iota.on_morphism(c.functor.on_morphism(u)));
        if (lhs == kNoMorphism || lhs != rhs) natural = false;
    }
    rep.add(natural, "canonical transformation iota∘F => kappa is natural");
    return rep;
}

CheckReport cofiber_model_check(const FinFunctor& f, int range, const Limits& limits) {
    CheckReport rep;
    CofiberData c = cofiber_category(f);
    int cap = std::max(
        {nerve_dimension(c.cofiber).dim, nerve_dimension(f.source()).dim,
         nerve_dimension(f.target()).dim});
    ChainComplex hoc_chains = nerve_chain_complex(c.cofiber, cap, true, limits);
    ChainMap nf = induced_nerve_chain_map(f, cap, true, limits);
    ChainComplex cone_nf = cone(nf);
    for (int n = -1; n <= range; ++n) {
        HomologyGroup a = homology(hoc_chains, n);
        HomologyGroup b = homology(cone_nf, n);
        std::ostringstream os;
        os << "degree " << n << ": H(N hoc F) = " << a.str() << ", H(cone NF) = " << b.str();
        rep.add(a == b, os.str());
    }
    return rep;
}

FinFunctor over_category_image(const FinFunctor& f, ObjId i, const OverCategory& over_i,
                               const OverCategory& over_fi) {
    const FinCategory& I = f.source();
    ObjId fi = f.on_object(i);
    (void)fi;
    auto target_index = [&](MorId a_in_j) {
        for (size_t t = 0; t < over_fi.object_morphism.size(); ++t)
            if (over_fi.object_morphism[t] == a_in_j) return static_cast<ObjId>(t);
        throw StructureError("over_category_image: image object not found");
    };
    std::vector<ObjId> om;
    for (MorId a : over_i.object_morphism) om.push_back(target_index(f.on_morphism(a)));
    std::vector<MorId> mm(static_cast<size_t>(over_i.cat.morphism_count()), kNoMorphism);
    for (MorId m = 0; m < over_i.cat.morphism_count(); ++m) {
        const Morphism& mor = over_i.cat.morphism(m);
        ObjId ps = om[static_cast<size_t>(mor.src)];
        ObjId pt = om[static_cast<size_t>(mor.tgt)];
        if (mor.is_identity) {
            mm[static_cast<size_t>(m)] = over_fi.cat.identity(ps);
            continue;
        }
        MorId g = over_i.forgetful.on_morphism(m);
        MorId fg = f.on_morphism(g);
        if (f.target().morphism(fg).is_identity && ps == pt) {
            mm[static_cast<size_t>(m)] = over_fi.cat.identity(ps);
            continue;
        }
        MorId found = kNoMorphism;
        for (MorId cand : over_fi.cat.hom(ps, pt))
            if (over_fi.forgetful.on_morphism(cand) == fg) found = cand;
        if (found == kNoMorphism)
            throw StructureError("over_category_image: image morphism not found");
        mm[static_cast<size_t>(m)] = found;
    }
    (void)I;
    return FinFunctor::make(over_i.cat, over_fi.cat, std::move(om), std::move(mm));
}

CheckReport cofiber_over_category_checks(const FinFunctor& f, int range, const Limits& limits) {
    CheckReport rep;
    CofiberData c = cofiber_category(f);
    const FinCategory& I = f.source();
    const FinCategory& J = f.target();

    for (ObjId j = 0; j < J.object_count(); ++j) {
        OverCategory lhs = over_category(c.cofiber, c.iota.on_object(j));
        OverCategory rhs = over_category(J, j);
        bool ok = false;
        if (lhs.cat.object_count() == rhs.cat.object_count()) {
            auto iso = find_isomorphism(lhs.cat, rhs.cat,
                                        std::max<Index>(10, lhs.cat.object_count()));
            ok = iso.has_value();
        }
        rep.add(ok, "(hoc F)/" + J.object_label(j) + " is isomorphic to J/" + J.object_label(j));
    }

    OverCategory star_over = over_category(c.cofiber, c.star);
    rep.add(star_over.cat.object_count() == 1 && star_over.cat.morphism_count() == 1,
            "(hoc F)/* is the terminal category");

    for (ObjId i = 0; i < I.object_count(); ++i) {
        OverCategory over_i = over_category(I, i);
        OverCategory over_fi = over_category(J, f.on_object(i));
        FinFunctor fi = over_category_image(f, i, over_i, over_fi);
        int cap = std::max({nerve_dimension(over_i.cat).dim, nerve_dimension(over_fi.cat).dim});
        ChainMap nf = induced_nerve_chain_map(fi, cap, true, limits);
        ChainComplex cone_nf = cone(nf);

        OverCategory hoc_over = over_category(c.cofiber, c.kappa.on_object(i));
        ChainComplex lhs = nerve_chain_complex(
            hoc_over.cat, nerve_dimension(hoc_over.cat).dim, true, limits);
        bool ok = true;
        std::string detail;
        for (int n = -1; n <= range; ++n) {
            HomologyGroup a = homology(lhs, n);
            HomologyGroup b = homology(cone_nf, n);
            if (!(a == b)) {
                ok = false;
                detail = " (degree " + std::to_string(n) + ": " + a.str() + " vs " + b.str() + ")";
            }
        }
        rep.add(ok, "H(N (hoc F)/" + I.object_label(i) + ") matches H(cone(N I/i -> N J/F(i)))" +
                        detail);
    }
    return rep;
}

}  // namespace catlim
