#include "loopalg/serialize.hpp"

namespace loopalg {

json scalar_to_json(const Scalar& c) {
    switch (c.tag()) {
        case RingTag::Integers: return json{{"Z", c.as_integer().str()}};
        case RingTag::Rationals: {
            const BigRat& q = c.as_rational();
            return json{{"Q", numerator(q).str() + "/" + denominator(q).str()}};
        }
        case RingTag::GF2: return json{{"F2", c.as_bit()}};
    }
    throw std::logic_error("bad ring tag");
}

Scalar scalar_from_json(const json& j) {
    if (j.contains("Z")) return Scalar::integer(BigInt(j.at("Z").get<std::string>()));
    if (j.contains("Q")) {
        std::string s = j.at("Q").get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Scalar::rational(BigRat(BigInt(s)));
        return Scalar::rational(BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))));
    }
    if (j.contains("F2")) return Scalar::gf2(j.at("F2").get<int>());
    throw std::invalid_argument("scalar JSON must carry one of Z, Q, F2");
}

json monomial_to_json(const GradedAlgebra& A, const Monomial& m) {
    json j = json::object();
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        if (m.exp[i] > 0) j[A.gen(i).name] = m.exp[i];
    return j;
}

Monomial monomial_from_json(const GradedAlgebra& A, const json& j) {
    Monomial m(A.size());
    for (const auto& [name, e] : j.items()) {
        auto i = A.index_of(name);
        if (!i) throw std::invalid_argument("unknown generator in monomial: " + name);
        m.exp[*i] = e.get<std::uint32_t>();
    }
    return m;
}

json element_to_json(const GradedAlgebra& A, const Element& e) {
    json j = json::array();
    for (const auto& [m, c] : e.terms)
        j.push_back(json{{"monomial", monomial_to_json(A, m)}, {"coeff", scalar_to_json(c)}});
    return j;
}

Element element_from_json(const GradedAlgebra& A, const json& j) {
    Element e;
    for (const auto& t : j)
        add_term(A, e, monomial_from_json(A, t.at("monomial")), scalar_from_json(t.at("coeff")));
    return e;
}

json algebra_to_json(const PresentedAlgebra& A) {
    const GradedAlgebra& G = A.algebra();
    json gens = json::array();
    for (const auto& g : G.generators())
        gens.push_back(json{{"name", g.name},
                            {"degree", g.degree},
                            {"kind", g.kind == GenKind::Exterior ? "exterior" : "polynomial"}});
    json rewrites = json::array();
    for (const auto& r : A.rewrites())
        rewrites.push_back(
            json{{"lhs", monomial_to_json(G, r.lhs)}, {"rhs", element_to_json(G, r.rhs)}});
    json torsions = json::array();
    for (const auto& t : A.torsions())
        torsions.push_back(json{{"modulus", t.modulus}, {"pattern", G.gen(t.pattern).name}});
    return json{{"ring", to_string(G.ring())},
                {"generators", gens},
                {"rewrites", rewrites},
                {"torsions", torsions}};
}

PresentedAlgebra algebra_from_json(const json& j) {
    RingTag ring = ring_tag_from_string(j.at("ring").get<std::string>());
    std::vector<GeneratorSpec> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<long>(),
                        g.at("kind").get<std::string>() == "exterior" ? GenKind::Exterior
                                                                      : GenKind::Polynomial});
    GradedAlgebra G(ring, gens);
    std::vector<RewriteRule> rewrites;
    for (const auto& r : j.at("rewrites"))
        rewrites.push_back(
            {monomial_from_json(G, r.at("lhs")), element_from_json(G, r.at("rhs"))});
    std::vector<TorsionRule> torsions;
    for (const auto& t : j.at("torsions")) {
        auto idx = G.index_of(t.at("pattern").get<std::string>());
        if (!idx) throw std::invalid_argument("unknown torsion pattern generator");
        torsions.push_back({t.at("modulus").get<std::uint64_t>(), *idx});
    }
    return PresentedAlgebra(G, rewrites, torsions);
}

namespace {

json tensor_to_json(const GradedAlgebra& A, const TensorSquareElement& t) {
    json j = json::array();
    for (const auto& [k, c] : t.terms)
        j.push_back(json{{"left", monomial_to_json(A, k.first)},
                         {"right", monomial_to_json(A, k.second)},
                         {"coeff", scalar_to_json(c)}});
    return j;
}

TensorSquareElement tensor_from_json(const GradedAlgebra& A, const json& j) {
    TensorSquareElement t;
    for (const auto& term : j)
        add_term(A, t, monomial_from_json(A, term.at("left")),
                 monomial_from_json(A, term.at("right")), scalar_from_json(term.at("coeff")));
    return t;
}

json prim_vector_to_json(const PrimitiveBasis& P, const PrimVector& v) {
    json j = json::object();
    for (const auto& [i, c] : v) j[P.items[i].name] = scalar_to_json(c);
    return j;
}

PrimVector prim_vector_from_json(const PrimitiveBasis& P, const json& j) {
    PrimVector v;
    for (const auto& [name, c] : j.items()) {
        auto i = P.index_of(name);
        if (!i) throw std::invalid_argument("unknown primitive: " + name);
        add_coord(v, *i, scalar_from_json(c));
    }
    return v;
}

json derivation_to_json(const Derivation& d) {
    const GradedAlgebra& G = d.owner->algebra();
    json values = json::object();
    for (std::size_t i = 0; i < G.size(); ++i)
        values[G.gen(i).name] = element_to_json(G, d.values_on_generators[i]);
    return json{{"degree", d.degree}, {"values", values}};
}

Derivation derivation_from_json(const PresentedAlgebra& owner, const json& j) {
    const GradedAlgebra& G = owner.algebra();
    Derivation d{&owner, j.at("degree").get<long>(), std::vector<Element>(G.size())};
    for (std::size_t i = 0; i < G.size(); ++i)
        d.values_on_generators[i] = element_from_json(G, j.at("values").at(G.gen(i).name));
    return d;
}

}  // namespace

json model_to_json(const LoopModel& M) {
    const GradedAlgebra& GO = M.omega->algebra();
    json coproduct = json::object(), counit = json::object(), suspension = json::object();
    for (std::size_t i = 0; i < GO.size(); ++i) {
        coproduct[GO.gen(i).name] = tensor_to_json(GO, M.hopf.coproduct_on_generators[i]);
        counit[GO.gen(i).name] = scalar_to_json(M.hopf.counit_on_generators[i]);
        suspension[GO.gen(i).name] =
            prim_vector_to_json(*M.primitives, M.suspension.values_on_generators[i]);
    }
    json primitives = json::array();
    for (const auto& p : M.primitives->items) {
        json pj{{"name", p.name}, {"degree", p.degree}};
        if (p.torsion) pj["torsion"] = *p.torsion;
        primitives.push_back(pj);
    }
    json actions = json::array();
    for (std::size_t p = 0; p < M.primitive_actions.size(); ++p) {
        json a = derivation_to_json(M.primitive_actions[p]);
        a["primitive"] = M.primitives->items[p].name;
        actions.push_back(a);
    }
    json partials = json::array();
    for (std::size_t k = 0; k < M.closed_form_partials.size(); ++k) {
        json d = derivation_to_json(M.closed_form_partials[k]);
        d["primitive"] = M.primitives->items[M.partial_primitive[k]].name;
        partials.push_back(d);
    }
    return json{{"name", M.name},
                {"dim_group", M.dim_group},
                {"omega", algebra_to_json(*M.omega)},
                {"base", algebra_to_json(*M.base)},
                {"primitives", primitives},
                {"coproduct", coproduct},
                {"counit", counit},
                {"suspension", suspension},
                {"actions", actions},
                {"partials", partials}};
}

LoopModel model_from_json(const json& j) {
    LoopModel M;
    M.name = j.at("name").get<std::string>();
    M.dim_group = j.at("dim_group").get<unsigned>();
    M.omega = std::make_unique<PresentedAlgebra>(algebra_from_json(j.at("omega")));
    M.base = std::make_unique<PresentedAlgebra>(algebra_from_json(j.at("base")));
    M.primitives = std::make_unique<PrimitiveBasis>();
    for (const auto& p : j.at("primitives")) {
        PrimitiveBasis::Primitive item{p.at("name").get<std::string>(),
                                       p.at("degree").get<long>(), std::nullopt};
        if (p.contains("torsion")) item.torsion = p.at("torsion").get<std::uint64_t>();
        M.primitives->items.push_back(item);
    }
    const GradedAlgebra& GO = M.omega->algebra();
    M.hopf.owner = M.omega.get();
    M.suspension = {M.omega.get(), M.primitives.get(), {}};
    for (std::size_t i = 0; i < GO.size(); ++i) {
        const std::string& name = GO.gen(i).name;
        M.hopf.coproduct_on_generators.push_back(
            tensor_from_json(GO, j.at("coproduct").at(name)));
        M.hopf.counit_on_generators.push_back(scalar_from_json(j.at("counit").at(name)));
        M.suspension.values_on_generators.push_back(
            prim_vector_from_json(*M.primitives, j.at("suspension").at(name)));
    }
    for (const auto& a : j.at("actions"))
        M.primitive_actions.push_back(derivation_from_json(*M.base, a));
    for (const auto& d : j.at("partials")) {
        M.closed_form_partials.push_back(derivation_from_json(*M.omega, d));
        auto p = M.primitives->index_of(d.at("primitive").get<std::string>());
        if (!p) throw std::invalid_argument("unknown primitive in derivation table");
        M.partial_primitive.push_back(*p);
    }
    return M;
}

json loop_element_to_json(const LoopModel& M, const LoopElement& e) {
    json j = json::array();
    for (const auto& [k, c] : e.terms)
        j.push_back(json{{"loop", monomial_to_json(M.omega->algebra(), k.first)},
                         {"base", monomial_to_json(M.base->algebra(), k.second)},
                         {"coeff", scalar_to_json(c)}});
    return j;
}

LoopElement loop_element_from_json(const LoopModel& M, const json& j) {
    LoopElement e;
    for (const auto& t : j)
        loop_add_term(M, e, monomial_from_json(M.omega->algebra(), t.at("loop")),
                      monomial_from_json(M.base->algebra(), t.at("base")),
                      scalar_from_json(t.at("coeff")));
    return e;
}

}  // namespace loopalg
