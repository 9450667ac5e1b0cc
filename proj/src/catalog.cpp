#include "loopalg/catalog.hpp"

#include <memory>

namespace loopalg {

namespace {

Monomial mono(const GradedAlgebra& A,
              std::initializer_list<std::pair<const char*, std::uint32_t>> factors) {
    Monomial m(A.size());
    for (const auto& [name, e] : factors) {
        auto i = A.index_of(name);
        if (!i) throw std::logic_error(std::string("unknown generator ") + name);
        m.exp[*i] += e;
    }
    return m;
}

TensorSquareElement grouplike(const GradedAlgebra& A, std::size_t i) {
    TensorSquareElement t;
    add_term(A, t, generator_monomial(A, i), generator_monomial(A, i), Scalar::one(A.ring()));
    return t;
}

TensorSquareElement primitive_coproduct(const GradedAlgebra& A, std::size_t i) {
    TensorSquareElement t;
    add_term(A, t, generator_monomial(A, i), unit_monomial(A), Scalar::one(A.ring()));
    add_term(A, t, unit_monomial(A), generator_monomial(A, i), Scalar::one(A.ring()));
    return t;
}

std::uint32_t least_power_of_two(long factor, long bound) {
    std::uint32_t r = 1;
    while (factor * static_cast<long>(r) < bound) r *= 2;
    return r;
}

// Model-level invariants beyond what PresentedAlgebra itself enforces.
void validate_model(const LoopModel& M) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    if (GB.ring() != ring) throw ValidationError(M.name + ": factor rings disagree");

    for (std::size_t i = 0; i < GO.size(); ++i)
        if (GO.gen(i).degree < 0 || GO.gen(i).degree % 2 != 0)
            throw ValidationError(M.name + ": loop-side generator " + GO.gen(i).name +
                                  " must sit in even non-negative degree");
    for (std::size_t i = 0; i < GB.size(); ++i)
        if (GB.gen(i).degree > 0)
            throw ValidationError(M.name + ": base generator " + GB.gen(i).name +
                                  " must sit in non-positive degree");

    if (M.hopf.owner != M.omega.get() || M.suspension.owner != M.omega.get() ||
        M.suspension.primitives != M.primitives.get())
        throw ValidationError(M.name + ": structure maps wired to the wrong algebra");
    if (M.hopf.coproduct_on_generators.size() != GO.size() ||
        M.hopf.counit_on_generators.size() != GO.size() ||
        M.suspension.values_on_generators.size() != GO.size())
        throw ValidationError(M.name + ": structure map tables have the wrong arity");

    // Counit axiom (eps (x) id) D = id = (id (x) eps) D on generators.
    for (std::size_t i = 0; i < GO.size(); ++i) {
        Element left, right;
        for (const auto& [k, c] : M.hopf.coproduct_on_generators[i].terms) {
            add_term(GO, left, k.second,
                     c * counit(M.hopf, make_element(GO, k.first, Scalar::one(ring))));
            add_term(GO, right, k.first,
                     c * counit(M.hopf, make_element(GO, k.second, Scalar::one(ring))));
        }
        Element g = gen_element(GO, i);
        if (!sub(GO, left, g).is_zero() || !sub(GO, right, g).is_zero())
            throw ValidationError(M.name + ": counit axiom fails on " + GO.gen(i).name);
    }

    // Suspension raises degree by exactly 1.
    for (std::size_t i = 0; i < GO.size(); ++i)
        for (const auto& [p, c] : M.suspension.values_on_generators[i])
            if (M.primitives->items[p].degree != GO.gen(i).degree + 1)
                throw ValidationError(M.name + ": suspension of " + GO.gen(i).name +
                                      " lands in the wrong degree");

    // One base action per primitive, of the primitive's degree.
    if (M.primitive_actions.size() != M.primitives->items.size())
        throw ValidationError(M.name + ": primitive action table has the wrong arity");
    for (std::size_t p = 0; p < M.primitive_actions.size(); ++p) {
        const Derivation& d = M.primitive_actions[p];
        if (d.owner != M.base.get() || d.degree != M.primitives->items[p].degree ||
            d.values_on_generators.size() != GB.size())
            throw ValidationError(M.name + ": action of " + M.primitives->items[p].name +
                                  " is miswired");
        for (std::size_t i = 0; i < GB.size(); ++i) {
            auto dv = degree_of(GB, d.values_on_generators[i]);
            if (dv && *dv != GB.gen(i).degree + d.degree)
                throw ValidationError(M.name + ": action of " + M.primitives->items[p].name +
                                      " is not homogeneous on " + GB.gen(i).name);
        }
    }

    if (M.closed_form_partials.size() != M.partial_primitive.size())
        throw ValidationError(M.name + ": loop-side derivation table has the wrong arity");
    for (std::size_t k = 0; k < M.closed_form_partials.size(); ++k) {
        const Derivation& d = M.closed_form_partials[k];
        std::size_t p = M.partial_primitive[k];
        if (d.owner != M.omega.get() || p >= M.primitives->items.size() ||
            d.degree != -M.primitives->items[p].degree + 1 ||
            d.values_on_generators.size() != GO.size())
            throw ValidationError(M.name + ": loop-side derivation " + std::to_string(k) +
                                  " is miswired");
        for (std::size_t i = 0; i < GO.size(); ++i) {
            auto dv = degree_of(GO, d.values_on_generators[i]);
            if (dv && *dv != GO.gen(i).degree + d.degree)
                throw ValidationError(M.name + ": loop-side derivation " + std::to_string(k) +
                                      " is not homogeneous on " + GO.gen(i).name);
        }
    }

    WellDefinednessReport wd = check_welldefined(M.hopf, M.suspension);
    if (!wd.ok()) throw ValidationError(M.name + ": " + wd.failures.front());
}

LoopModel build_circle() {
    RingTag ring = RingTag::Integers;
    LoopModel M;
    M.name = "Circle_Z";
    M.dim_group = 1;

    GradedAlgebra GO(ring, {{"x", 0, GenKind::Polynomial}, {"xinv", 0, GenKind::Polynomial}});
    std::vector<RewriteRule> orules{{mono(GO, {{"x", 1}, {"xinv", 1}}), unit_element(GO)}};
    M.omega = std::make_unique<PresentedAlgebra>(GO, orules);

    GradedAlgebra GB(ring, {{"a", -1, GenKind::Exterior}});
    M.base = std::make_unique<PresentedAlgebra>(GB, std::vector<RewriteRule>{});

    M.primitives = std::make_unique<PrimitiveBasis>();
    M.primitives->items = {{"[S1]", 1, std::nullopt}};

    M.hopf = {M.omega.get(),
              {grouplike(GO, 0), grouplike(GO, 1)},
              {Scalar::one(ring), Scalar::one(ring)}};
    M.suspension = {M.omega.get(), M.primitives.get(),
                    {{{0, Scalar::one(ring)}}, {{0, -Scalar::one(ring)}}}};

    M.primitive_actions = {{M.base.get(), 1, {unit_element(GB)}}};

    // Delta(x^i (x) a) = i x^i (x) 1 means the loop-side derivation fixes x
    // and negates xinv.
    M.closed_form_partials = {
        {M.omega.get(), 0, {gen_element(GO, 0), scale(GO, -Scalar::one(ring), gen_element(GO, 1))}}};
    M.partial_primitive = {0};
    return M;
}

LoopModel build_s3() {
    RingTag ring = RingTag::Integers;
    LoopModel M;
    M.name = "S3_Z";
    M.dim_group = 3;

    GradedAlgebra GO(ring, {{"u", 2, GenKind::Polynomial}});
    M.omega = std::make_unique<PresentedAlgebra>(GO, std::vector<RewriteRule>{});

    GradedAlgebra GB(ring, {{"a", -3, GenKind::Exterior}});
    M.base = std::make_unique<PresentedAlgebra>(GB, std::vector<RewriteRule>{});

    M.primitives = std::make_unique<PrimitiveBasis>();
    M.primitives->items = {{"[S3]", 3, std::nullopt}};

    M.hopf = {M.omega.get(), {primitive_coproduct(GO, 0)}, {Scalar::zero(ring)}};
    M.suspension = {M.omega.get(), M.primitives.get(), {{{0, Scalar::one(ring)}}}};

    M.primitive_actions = {{M.base.get(), 3, {unit_element(GB)}}};
    M.closed_form_partials = {{M.omega.get(), -2, {unit_element(GO)}}};
    M.partial_primitive = {0};
    return M;
}

LoopModel build_rp3(RingTag ring) {
    LoopModel M;
    M.name = ring == RingTag::Integers ? "RP3_Z" : "RP3_Q";
    M.dim_group = 3;

    GradedAlgebra GO(ring, {{"u", 2, GenKind::Polynomial}, {"v", 0, GenKind::Polynomial}});
    std::vector<RewriteRule> orules{{mono(GO, {{"v", 2}}), unit_element(GO)}};
    M.omega = std::make_unique<PresentedAlgebra>(GO, orules);

    if (ring == RingTag::Integers) {
        GradedAlgebra GB(ring, {{"a", -3, GenKind::Exterior}, {"b", -2, GenKind::Exterior}});
        std::vector<RewriteRule> brules{{mono(GB, {{"a", 1}, {"b", 1}}), zero_element()}};
        std::vector<TorsionRule> btorsion{{2, *GB.index_of("b")}};
        M.base = std::make_unique<PresentedAlgebra>(GB, brules, btorsion);

        M.primitives = std::make_unique<PrimitiveBasis>();
        M.primitives->items = {{"rho", 1, std::uint64_t{2}}, {"[RP3]", 3, std::nullopt}};

        M.suspension = {M.omega.get(), M.primitives.get(),
                        {{{1, Scalar::from_int(ring, 2)}}, {{0, Scalar::one(ring)}}}};
        M.primitive_actions = {
            {M.base.get(), 1, {gen_element(GB, 1), zero_element()}},   // rho: a -> b
            {M.base.get(), 3, {unit_element(GB), zero_element()}}};    // [RP3]: a -> 1
        // rho is 2-torsion, so Delta has no derivation-sum form over Z.
    } else {
        GradedAlgebra GB(ring, {{"a", -3, GenKind::Exterior}});
        M.base = std::make_unique<PresentedAlgebra>(GB, std::vector<RewriteRule>{});

        M.primitives = std::make_unique<PrimitiveBasis>();
        M.primitives->items = {{"[RP3]", 3, std::nullopt}};

        M.suspension = {M.omega.get(), M.primitives.get(),
                        {{{0, Scalar::from_int(ring, 2)}}, {}}};
        M.primitive_actions = {{M.base.get(), 3, {unit_element(GB)}}};
        M.closed_form_partials = {
            {M.omega.get(), -2,
             {scale(GO, Scalar::from_int(ring, 2), unit_element(GO)), zero_element()}}};
        M.partial_primitive = {0};
    }

    M.hopf = {M.omega.get(), {primitive_coproduct(GO, 0), grouplike(GO, 1)},
              {Scalar::zero(ring), Scalar::one(ring)}};
    return M;
}

LoopModel build_so_q(unsigned m, bool even) {
    RingTag ring = RingTag::Rationals;
    LoopModel M;
    M.name = (even ? "SO_even_Q(" : "SO_odd_Q(") + std::to_string(m) + ")";
    M.dim_group = even ? (m + 1) * (2 * m + 1) : m * (2 * m + 1);

    std::vector<GeneratorSpec> ogens;
    for (unsigned i = 0; i < 2 * m; ++i)
        ogens.push_back({"alpha" + std::to_string(i), 2L * i, GenKind::Polynomial});
    if (even) ogens.push_back({"eps", 2L * m, GenKind::Polynomial});
    GradedAlgebra GO(ring, ogens);

    std::vector<RewriteRule> orules;
    orules.push_back({generator_monomial(GO, 0, 2), unit_element(GO)});
    for (unsigned i = 1; i + 1 <= m; ++i) {
        Element rhs;
        for (unsigned k = 1; k <= i; ++k) {
            Monomial t(GO.size());
            t.exp[i - k] += 1;
            t.exp[i + k] += 1;
            add_term(GO, rhs, t, Scalar::from_int(ring, k % 2 == 1 ? 2 : -2));
        }
        orules.push_back({generator_monomial(GO, i, 2), rhs});
    }
    M.omega = std::make_unique<PresentedAlgebra>(GO, orules);

    std::vector<GeneratorSpec> bgens;
    for (unsigned i = 1; i <= m; ++i)
        bgens.push_back({"beta" + std::to_string(4 * i - 1), -(4L * i - 1), GenKind::Exterior});
    if (even) bgens.push_back({"gamma" + std::to_string(2 * m + 1), -(2L * m + 1), GenKind::Exterior});
    GradedAlgebra GB(ring, bgens);
    M.base = std::make_unique<PresentedAlgebra>(GB, std::vector<RewriteRule>{});

    M.primitives = std::make_unique<PrimitiveBasis>();
    for (unsigned i = 1; i <= m; ++i)
        M.primitives->items.push_back({"a" + std::to_string(4 * i - 1), 4L * i - 1, std::nullopt});
    if (even)
        M.primitives->items.push_back({"b" + std::to_string(2 * m + 1), 2L * m + 1, std::nullopt});

    M.hopf.owner = M.omega.get();
    for (unsigned i = 0; i < 2 * m; ++i) {
        TensorSquareElement t;
        for (unsigned j = 0; j <= i; ++j)
            add_term(GO, t, generator_monomial(GO, i - j), generator_monomial(GO, j),
                     Scalar::one(ring));
        M.hopf.coproduct_on_generators.push_back(t);
        M.hopf.counit_on_generators.push_back(i == 0 ? Scalar::one(ring) : Scalar::zero(ring));
    }
    if (even) {
        M.hopf.coproduct_on_generators.push_back(primitive_coproduct(GO, 2 * m));
        M.hopf.counit_on_generators.push_back(Scalar::zero(ring));
    }

    M.suspension = {M.omega.get(), M.primitives.get(), {}};
    for (unsigned i = 0; i < 2 * m; ++i) {
        PrimVector v;
        if (i % 2 == 1) v.emplace((i - 1) / 2, Scalar::one(ring));
        M.suspension.values_on_generators.push_back(v);
    }
    if (even) M.suspension.values_on_generators.push_back({{m, Scalar::one(ring)}});

    for (unsigned i = 1; i <= m; ++i) {
        Derivation d{M.base.get(), 4L * i - 1, std::vector<Element>(GB.size(), zero_element())};
        d.values_on_generators[i - 1] = unit_element(GB);
        M.primitive_actions.push_back(std::move(d));
    }
    if (even) {
        Derivation d{M.base.get(), 2L * m + 1, std::vector<Element>(GB.size(), zero_element())};
        d.values_on_generators[m] = unit_element(GB);
        M.primitive_actions.push_back(std::move(d));
    }

    for (unsigned i = 1; i <= m; ++i) {
        Derivation d{M.omega.get(), -(4L * i) + 2, std::vector<Element>(GO.size(), zero_element())};
        for (unsigned j = 2 * i - 1; j < 2 * m; ++j)
            d.values_on_generators[j] = gen_element(GO, j - (2 * i - 1));
        M.closed_form_partials.push_back(std::move(d));
        M.partial_primitive.push_back(i - 1);
    }
    if (even) {
        Derivation d{M.omega.get(), -2L * m, std::vector<Element>(GO.size(), zero_element())};
        d.values_on_generators[2 * m] = unit_element(GO);
        M.closed_form_partials.push_back(std::move(d));
        M.partial_primitive.push_back(m);
    }
    return M;
}

LoopModel build_so_f2(unsigned m, bool even) {
    RingTag ring = RingTag::GF2;
    LoopModel M;
    M.name = (even ? "SO_even_F2(" : "SO_odd_F2(") + std::to_string(m) + ")";
    M.dim_group = even ? (m + 1) * (2 * m + 1) : m * (2 * m + 1);

    unsigned na = even ? m + 1 : m;  // a_0..a_{na-1}
    std::vector<GeneratorSpec> ogens;
    for (unsigned i = 0; i < na; ++i)
        ogens.push_back({"a" + std::to_string(i), 2L * i, GenKind::Polynomial});
    for (unsigned i = 0; i < m; ++i)
        ogens.push_back({"b" + std::to_string(i), 2L * m + 2L * i, GenKind::Polynomial});
    GradedAlgebra GO(ring, ogens);
    auto a_idx = [&](unsigned i) { return i; };
    auto b_idx = [&](unsigned i) { return na + i; };

    std::vector<RewriteRule> orules;
    orules.push_back({generator_monomial(GO, a_idx(0), 2), unit_element(GO)});
    for (unsigned i = 1; i + 1 <= m; ++i) {
        Element rhs;
        if (2 * i >= m) {
            for (unsigned k = 0; k <= 2 * i - m; ++k) {
                Monomial t(GO.size());
                t.exp[b_idx(2 * i - m - k)] += 1;
                t.exp[a_idx(k)] += 1;
                add_term(GO, rhs, t, Scalar::one(ring));
            }
        }
        orules.push_back({generator_monomial(GO, a_idx(i), 2), rhs});
    }
    M.omega = std::make_unique<PresentedAlgebra>(GO, orules);

    unsigned nc = even ? m + 1 : m;  // c_1, c_3, ..., one per primitive
    long cap_bound = even ? 2L * m + 2 : 2L * m + 1;
    std::vector<GeneratorSpec> bgens;
    for (unsigned i = 1; i <= nc; ++i)
        bgens.push_back({"c" + std::to_string(2 * i - 1), -(2L * i - 1), GenKind::Polynomial});
    GradedAlgebra GB(ring, bgens);
    std::vector<RewriteRule> brules;
    for (unsigned i = 1; i <= nc; ++i)
        brules.push_back(
            {generator_monomial(GB, i - 1, least_power_of_two(2L * i - 1, cap_bound)),
             zero_element()});
    M.base = std::make_unique<PresentedAlgebra>(GB, brules);

    M.primitives = std::make_unique<PrimitiveBasis>();
    for (unsigned i = 1; i <= nc; ++i)
        M.primitives->items.push_back({"q" + std::to_string(2 * i - 1), 2L * i - 1, std::nullopt});

    M.hopf.owner = M.omega.get();
    M.hopf.coproduct_on_generators.resize(GO.size());
    M.hopf.counit_on_generators.assign(GO.size(), Scalar::zero(ring));
    M.hopf.counit_on_generators[a_idx(0)] = Scalar::one(ring);
    for (unsigned i = 0; i < na; ++i) {
        TensorSquareElement t;
        for (unsigned j = 0; j <= i; ++j)
            add_term(GO, t, generator_monomial(GO, a_idx(i - j)), generator_monomial(GO, a_idx(j)),
                     Scalar::one(ring));
        M.hopf.coproduct_on_generators[a_idx(i)] = t;
    }
    for (unsigned i = 0; i < m; ++i) {
        TensorSquareElement t;
        for (unsigned j = 0; j <= i; ++j) {
            add_term(GO, t, generator_monomial(GO, b_idx(i - j)), generator_monomial(GO, a_idx(j)),
                     Scalar::one(ring));
            add_term(GO, t, generator_monomial(GO, a_idx(j)), generator_monomial(GO, b_idx(i - j)),
                     Scalar::one(ring));
        }
        M.hopf.coproduct_on_generators[b_idx(i)] = t;
    }

    M.suspension = {M.omega.get(), M.primitives.get(),
                    std::vector<PrimVector>(GO.size(), PrimVector{})};
    for (unsigned i = 0; i < na; ++i)
        M.suspension.values_on_generators[a_idx(i)] = {{i, Scalar::one(ring)}};

    for (unsigned i = 1; i <= nc; ++i) {
        Derivation d{M.base.get(), 2L * i - 1, std::vector<Element>(GB.size(), zero_element())};
        d.values_on_generators[i - 1] = unit_element(GB);
        M.primitive_actions.push_back(std::move(d));
    }

    for (unsigned i = 1; i <= nc; ++i) {
        Derivation d{M.omega.get(), -(2L * i) + 2, std::vector<Element>(GO.size(), zero_element())};
        for (unsigned j = i - 1; j < na; ++j)
            d.values_on_generators[a_idx(j)] = gen_element(GO, a_idx(j - i + 1));
        for (unsigned j = i - 1; j < m; ++j)
            d.values_on_generators[b_idx(j)] = gen_element(GO, b_idx(j - i + 1));
        M.closed_form_partials.push_back(std::move(d));
        M.partial_primitive.push_back(i - 1);
    }
    return M;
}

}  // namespace

std::string to_string(const ModelId& id) {
    switch (id.family) {
        case ModelFamily::Circle_Z: return "Circle_Z";
        case ModelFamily::S3_Z: return "S3_Z";
        case ModelFamily::RP3_Z: return "RP3_Z";
        case ModelFamily::RP3_Q: return "RP3_Q";
        case ModelFamily::SO_odd_Q: return "SO_odd_Q(" + std::to_string(id.m) + ")";
        case ModelFamily::SO_even_Q: return "SO_even_Q(" + std::to_string(id.m) + ")";
        case ModelFamily::SO_odd_F2: return "SO_odd_F2(" + std::to_string(id.m) + ")";
        case ModelFamily::SO_even_F2: return "SO_even_F2(" + std::to_string(id.m) + ")";
    }
    throw std::logic_error("bad model family");
}

ModelId parse_model_id(const std::string& name, unsigned rank_limit) {
    if (name == "Circle_Z") return {ModelFamily::Circle_Z, 0};
    if (name == "S3_Z") return {ModelFamily::S3_Z, 0};
    if (name == "RP3_Z") return {ModelFamily::RP3_Z, 0};
    if (name == "RP3_Q") return {ModelFamily::RP3_Q, 0};
    auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
        std::string fam = name.substr(0, open);
        std::string arg = name.substr(open + 1, name.size() - open - 2);
        unsigned m = 0;
        try {
            m = static_cast<unsigned>(std::stoul(arg));
        } catch (...) {
            throw std::invalid_argument("bad rank in model name: " + name);
        }
        if (m < 1 || m > rank_limit)
            throw std::invalid_argument("model rank must lie in [1, " +
                                        std::to_string(rank_limit) + "]: " + name);
        if (fam == "SO_odd_Q") return {ModelFamily::SO_odd_Q, m};
        if (fam == "SO_even_Q") return {ModelFamily::SO_even_Q, m};
        if (fam == "SO_odd_F2") return {ModelFamily::SO_odd_F2, m};
        if (fam == "SO_even_F2") return {ModelFamily::SO_even_F2, m};
    }
    throw std::invalid_argument("unknown model: " + name);
}

LoopModel build(const ModelId& id, unsigned rank_limit) {
    LoopModel M;
    switch (id.family) {
        case ModelFamily::Circle_Z: M = build_circle(); break;
        case ModelFamily::S3_Z: M = build_s3(); break;
        case ModelFamily::RP3_Z: M = build_rp3(RingTag::Integers); break;
        case ModelFamily::RP3_Q: M = build_rp3(RingTag::Rationals); break;
        default:
            if (id.m < 1 || id.m > rank_limit)
                throw std::invalid_argument("model rank must lie in [1, " +
                                            std::to_string(rank_limit) + "]");
            switch (id.family) {
                case ModelFamily::SO_odd_Q: M = build_so_q(id.m, false); break;
                case ModelFamily::SO_even_Q: M = build_so_q(id.m, true); break;
                case ModelFamily::SO_odd_F2: M = build_so_f2(id.m, false); break;
                case ModelFamily::SO_even_F2: M = build_so_f2(id.m, true); break;
                default: throw std::logic_error("bad model family");
            }
    }
    validate_model(M);
    return M;
}

std::vector<ModelId> standard_catalog(unsigned max_m) {
    std::vector<ModelId> out{{ModelFamily::Circle_Z, 0}, {ModelFamily::S3_Z, 0},
                             {ModelFamily::RP3_Z, 0}};
    for (unsigned m = 1; m <= max_m; ++m)
        for (auto fam : {ModelFamily::SO_odd_Q, ModelFamily::SO_even_Q, ModelFamily::SO_odd_F2,
                         ModelFamily::SO_even_F2})
            out.push_back({fam, m});
    return out;
}

namespace {

std::vector<GoldenEntry> golden_circle(const LoopModel& M) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    std::vector<GoldenEntry> out;
    for (int i = -8; i <= 8; ++i) {
        Monomial xi = i >= 0 ? generator_monomial(GO, 0, static_cast<std::uint32_t>(i))
                             : generator_monomial(GO, 1, static_cast<std::uint32_t>(-i));
        out.push_back({loop_make(M, xi, generator_monomial(GB, 0), Scalar::one(ring)),
                       loop_make(M, xi, unit_monomial(GB), Scalar::from_int(ring, i))});
        out.push_back({loop_make(M, xi, unit_monomial(GB), Scalar::one(ring)), {}});
    }
    return out;
}

std::vector<GoldenEntry> golden_s3(const LoopModel& M) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    std::vector<GoldenEntry> out;
    for (unsigned i = 0; i <= 8; ++i) {
        LoopElement expected;
        if (i > 0)
            expected = loop_make(M, generator_monomial(GO, 0, i - 1), unit_monomial(GB),
                                 Scalar::from_int(ring, i));
        out.push_back({loop_make(M, generator_monomial(GO, 0, i), generator_monomial(GB, 0),
                                 Scalar::one(ring)),
                       expected});
        out.push_back(
            {loop_make(M, generator_monomial(GO, 0, i), unit_monomial(GB), Scalar::one(ring)), {}});
    }
    return out;
}

std::vector<GoldenEntry> golden_rp3(const LoopModel& M) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    std::vector<GoldenEntry> out;
    for (unsigned i = 0; i <= 8; ++i) {
        for (unsigned j = 0; j <= 1; ++j) {
            Monomial uv(GO.size());
            uv.exp[0] = i;
            uv.exp[1] = j;
            LoopElement expected;
            if (i > 0) {
                Monomial u1 = uv;
                u1.exp[0] -= 1;
                loop_add_term(M, expected, u1, unit_monomial(GB), Scalar::from_int(ring, 2 * i));
            }
            if (j > 0 && GB.index_of("b"))
                loop_add_term(M, expected, uv, generator_monomial(GB, *GB.index_of("b")),
                              Scalar::from_int(ring, j));
            out.push_back(
                {loop_make(M, uv, generator_monomial(GB, *GB.index_of("a")), Scalar::one(ring)),
                 expected});
            if (GB.index_of("b"))
                out.push_back({loop_make(M, uv, generator_monomial(GB, *GB.index_of("b")),
                                         Scalar::one(ring)),
                               {}});
            out.push_back({loop_make(M, uv, unit_monomial(GB), Scalar::one(ring)), {}});
        }
    }
    return out;
}

std::vector<GoldenEntry> golden_so_q(const LoopModel& M, unsigned m, bool even) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    std::vector<GoldenEntry> out;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 0; j < 2 * m; ++j) {
            LoopElement expected;
            if (j >= 2 * i - 1)
                expected = loop_make(M, generator_monomial(GO, j - (2 * i - 1)),
                                     unit_monomial(GB), Scalar::one(ring));
            out.push_back({loop_make(M, generator_monomial(GO, j), generator_monomial(GB, i - 1),
                                     Scalar::one(ring)),
                           expected});
        }
        if (even)
            out.push_back({loop_make(M, generator_monomial(GO, 2 * m),
                                     generator_monomial(GB, i - 1), Scalar::one(ring)),
                           {}});
    }
    if (even) {
        out.push_back({loop_make(M, generator_monomial(GO, 2 * m), generator_monomial(GB, m),
                                 Scalar::one(ring)),
                       loop_make(M, unit_monomial(GO), unit_monomial(GB), Scalar::one(ring))});
        for (unsigned j = 0; j < 2 * m; ++j)
            out.push_back({loop_make(M, generator_monomial(GO, j), generator_monomial(GB, m),
                                     Scalar::one(ring)),
                           {}});
    }
    return out;
}

std::vector<GoldenEntry> golden_so_f2(const LoopModel& M, unsigned m, bool even) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    unsigned na = even ? m + 1 : m;
    unsigned nc = even ? m + 1 : m;
    std::vector<GoldenEntry> out;
    for (unsigned i = 1; i <= nc; ++i) {
        for (unsigned j = 0; j < na; ++j) {
            LoopElement expected;
            if (j + 1 >= i)
                expected = loop_make(M, generator_monomial(GO, j - i + 1), unit_monomial(GB),
                                     Scalar::one(ring));
            out.push_back({loop_make(M, generator_monomial(GO, j), generator_monomial(GB, i - 1),
                                     Scalar::one(ring)),
                           expected});
        }
        for (unsigned j = 0; j < m; ++j) {
            LoopElement expected;
            if (j + 1 >= i)
                expected = loop_make(M, generator_monomial(GO, na + j - i + 1), unit_monomial(GB),
                                     Scalar::one(ring));
            out.push_back({loop_make(M, generator_monomial(GO, na + j),
                                     generator_monomial(GB, i - 1), Scalar::one(ring)),
                           expected});
        }
    }
    return out;
}

}  // namespace

std::vector<GoldenEntry> golden_delta_table(const ModelId& id, const LoopModel& M) {
    switch (id.family) {
        case ModelFamily::Circle_Z: return golden_circle(M);
        case ModelFamily::S3_Z: return golden_s3(M);
        case ModelFamily::RP3_Z:
        case ModelFamily::RP3_Q: return golden_rp3(M);
        case ModelFamily::SO_odd_Q: return golden_so_q(M, id.m, false);
        case ModelFamily::SO_even_Q: return golden_so_q(M, id.m, true);
        case ModelFamily::SO_odd_F2: return golden_so_f2(M, id.m, false);
        case ModelFamily::SO_even_F2: return golden_so_f2(M, id.m, true);
    }
    throw std::logic_error("bad model family");
}

}  // namespace loopalg
