#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bihom/duality.hpp"
#include "bihom/error.hpp"
#include "bihom/generators.hpp"
#include "bihom/module.hpp"

using namespace bihom;

namespace {

Matrix mat(std::size_t rows, std::size_t cols, std::vector<long> entries) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(entries[i * cols + j]);
    return m;
}

Vec vec(std::vector<long> entries) {
    Vec v;
    for (long e : entries) v.push_back(Rational(e));
    return v;
}

FDBiHomAlgebra make_e1() {
    return FDBiHomAlgebra(2, {}, mat(2, 4, {1, 0, 0, 0, 0, 3, 2, 0}), mat(2, 2, {1, 0, 0, 2}),
                          mat(2, 2, {1, 0, 0, 3}));
}

FDBiHomAlgebra zero_algebra(std::size_t n) {
    return FDBiHomAlgebra(n, {}, Matrix(n, n * n), Matrix::identity(n), Matrix::identity(n));
}

// Zero multiplication on K^2 with a singular beta; still a valid algebra.
FDBiHomAlgebra singular_beta_algebra() {
    return FDBiHomAlgebra(2, {}, Matrix(2, 4), Matrix::identity(2), mat(2, 2, {1, 0, 0, 0}));
}

const CheckResult& find_check(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    throw std::runtime_error("no check named " + name);
}

IdealHandle zero_ideal(const FDBiHomAlgebra& a) {
    return make_ideal(a, Subspace(a.dim()));
}

IdealHandle span_e1_ideal(const FDBiHomAlgebra& a) {
    return make_ideal(a, Subspace::span(2, Matrix::from_rows({vec({0, 1})}, 2)));
}

} // namespace

TEST_CASE("zero action module validates") {
    FDBiHomModule m(zero_algebra(2), 3, {}, Matrix(3, 6), Matrix::identity(3),
                    Matrix::identity(3));
    ValidationReport r = validate_module(m);
    CHECK(r.all_passed());
    CHECK(r.checks.size() == 4);
    CHECK(r.checks[0].name == "twist-commutation");
    CHECK(r.checks[1].name == "bihom-associativity");
    CHECK(r.checks[2].name == "kappa-multiplicativity");
    CHECK(r.checks[3].name == "tau-multiplicativity");
}

TEST_CASE("regular module validates and mirrors the algebra") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);
    CHECK(m.dim_m() == 2);
    CHECK(m.rho() == a.mu());
    CHECK(m.kappa() == a.alpha());
    CHECK(m.tau() == a.beta());
    CHECK(m.basis_labels() == a.basis_labels());
    CHECK(m.r(0, 1, 1) == Rational(3));
    CHECK(m.r(1, 0, 1) == Rational(2));
    CHECK(m.act(vec({0, 1}), vec({1, 0})) == vec({0, 2}));
    CHECK(validate_module(m).all_passed());
}

TEST_CASE("regular module verdict tracks the algebra verdict on mutants") {
    Matrix mu = mat(2, 4, {1, 0, 0, 0, 0, 3, 2, 0});
    Matrix alpha = mat(2, 2, {1, 0, 0, 2});
    Matrix beta = mat(2, 2, {1, 0, 0, 3});

    auto check_both = [](const FDBiHomAlgebra& a) {
        bool alg = validate_algebra(a).all_passed();
        bool mod = validate_module(regular_module(a)).all_passed();
        CHECK(alg == mod);
        return alg;
    };

    CHECK(check_both(FDBiHomAlgebra(2, {}, mu, alpha, beta)));

    auto mutate_mu = [&](std::size_t row, std::size_t col, long value) {
        Matrix m = mu;
        m.at(row, col) = Rational(value);
        return FDBiHomAlgebra(2, {}, m, alpha, beta);
    };
    CHECK_FALSE(check_both(mutate_mu(1, 1, 4)));
    CHECK_FALSE(check_both(mutate_mu(0, 0, 2)));
    CHECK_FALSE(check_both(mutate_mu(1, 2, 1)));
    CHECK_FALSE(check_both(mutate_mu(1, 3, 1)));
    CHECK_FALSE(check_both(FDBiHomAlgebra(2, {}, mu, mat(2, 2, {1, 0, 0, 1}), beta)));
    CHECK_FALSE(check_both(FDBiHomAlgebra(2, {}, mu, alpha, mat(2, 2, {1, 0, 0, 0}))));
}

TEST_CASE("kappa exchange failure carries a pointwise witness") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m(a, 2, a.basis_labels(), a.mu(), Matrix::identity(2), a.beta());
    ValidationReport r = validate_module(m);
    CHECK_FALSE(r.all_passed());
    const CheckResult& c = find_check(r, "kappa-multiplicativity");
    CHECK_FALSE(c.passed);
    CHECK(c.witness.find("(m,g)=(e0,e1)") != std::string::npos);
    CHECK(c.witness.find("6*e1") != std::string::npos);
    CHECK(c.witness.find("3*e1") != std::string::npos);
}

TEST_CASE("tau exchange failure is detected") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m(a, 2, {}, a.mu(), a.alpha(), Matrix::identity(2));
    ValidationReport r = validate_module(m);
    CHECK_FALSE(find_check(r, "tau-multiplicativity").passed);
}

TEST_CASE("module twist commutation is checked") {
    FDBiHomModule m(zero_algebra(2), 2, {}, Matrix(2, 4), mat(2, 2, {0, 1, 1, 0}),
                    mat(2, 2, {1, 0, 0, 2}));
    ValidationReport r = validate_module(m);
    CHECK_FALSE(find_check(r, "twist-commutation").passed);
    CHECK(find_check(r, "bihom-associativity").passed);
    CHECK(find_check(r, "kappa-multiplicativity").passed);
    CHECK(find_check(r, "tau-multiplicativity").passed);
}

TEST_CASE("module shape errors") {
    FDBiHomAlgebra a = make_e1();
    CHECK_THROWS_AS(FDBiHomModule(a, 2, {}, Matrix(2, 3), Matrix::identity(2),
                                  Matrix::identity(2)),
                    InputError);
    CHECK_THROWS_AS(FDBiHomModule(a, 2, {}, Matrix(2, 4), Matrix(3, 3), Matrix::identity(2)),
                    InputError);
    CHECK_THROWS_AS(FDBiHomModule(a, 2, {"only"}, Matrix(2, 4), Matrix::identity(2),
                                  Matrix::identity(2)),
                    InputError);
}

TEST_CASE("zero coaction comodule validates") {
    FDBiHomCoalgebra c = dual_coalgebra(make_e1());
    FDBiHomComodule a(c, 3, {}, Matrix(6, 3), Matrix::identity(3), Matrix::identity(3));
    ValidationReport r = validate_comodule(a);
    CHECK(r.all_passed());
    CHECK(r.checks.size() == 4);
    CHECK(r.checks[0].name == "twist-commutation");
    CHECK(r.checks[1].name == "bihom-coassociativity");
    CHECK(r.checks[2].name == "omega-comultiplicativity");
    CHECK(r.checks[3].name == "theta-comultiplicativity");
}

TEST_CASE("dual comodule of the regular module") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);
    FDBiHomComodule d = dual_comodule(m);

    CHECK(d.coalgebra().same_structure(dual_coalgebra(a)));
    CHECK(d.dim_a() == 2);
    CHECK(d.basis_labels() == std::vector<std::string>{"e0*", "e1*"});
    // coaction mirrors the dual comultiplication
    CHECK(d.gamma() == dual_coalgebra(a).delta());
    CHECK(d.g(1, 0, 1) == Rational(3));
    CHECK(d.g(1, 1, 0) == Rational(2));
    CHECK(d.omega() == mat(2, 2, {1, 0, 0, 3}));
    CHECK(d.theta() == mat(2, 2, {1, 0, 0, 2}));
    CHECK(validate_comodule(d).all_passed());

    // pairing identity on all triples
    for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t j = 0; j < 2; ++j) CHECK(d.g(q, p, j) == m.r(p, j, q));
}

TEST_CASE("classical dual comodule has identity twists") {
    FDBiHomAlgebra dual_numbers(2, {}, mat(2, 4, {1, 0, 0, 0, 0, 1, 1, 0}), Matrix::identity(2),
                                Matrix::identity(2));
    FDBiHomComodule d = dual_comodule(regular_module(dual_numbers));
    CHECK(d.omega() == Matrix::identity(2));
    CHECK(d.theta() == Matrix::identity(2));
    CHECK(d.gamma() == mat(4, 2, {1, 0, 0, 1, 0, 1, 0, 0}));
    CHECK(validate_comodule(d).all_passed());
}

TEST_CASE("dual comodule refuses an invalid module") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule broken(a, 2, {}, a.mu(), Matrix::identity(2), a.beta());
    CHECK_THROWS_AS(dual_comodule(broken), ContractError);
}

TEST_CASE("perturbed omega fails comodule validation") {
    FDBiHomComodule d = dual_comodule(regular_module(make_e1()));
    FDBiHomComodule bad(d.coalgebra(), d.dim_a(), d.basis_labels(), d.gamma(),
                        mat(2, 2, {1, 0, 0, 4}), d.theta());
    ValidationReport r = validate_comodule(bad);
    CHECK_FALSE(r.all_passed());
    CHECK_FALSE(find_check(r, "omega-comultiplicativity").passed);
}

TEST_CASE("module morphism validation") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);

    ValidationReport id = validate_module_morphism({m, m, Matrix::identity(2)});
    CHECK(id.all_passed());
    CHECK(id.checks.size() == 3);
    CHECK(id.checks[0].name == "action-compatibility");
    CHECK(id.checks[1].name == "kappa-intertwining");
    CHECK(id.checks[2].name == "tau-intertwining");

    CHECK(validate_module_morphism({m, m, Matrix(2, 2)}).all_passed());
    CHECK(validate_module_morphism({m, m, Matrix::identity(2).scaled(Rational(2))}).all_passed());

    // kappa itself is not a module morphism: it trades the action for a twisted one
    ValidationReport bad = validate_module_morphism({m, m, a.alpha()});
    CHECK_FALSE(bad.all_passed());
    const CheckResult& c = find_check(bad, "action-compatibility");
    CHECK_FALSE(c.passed);
    CHECK(c.witness.find("(m,g)=(e0,e1)") != std::string::npos);

    FDBiHomModule other = regular_module(zero_algebra(2));
    CHECK_THROWS_AS(validate_module_morphism({m, other, Matrix::identity(2)}), InputError);
    CHECK_THROWS_AS(validate_module_morphism({m, m, Matrix(3, 2)}), InputError);
}

TEST_CASE("comodule morphism validation") {
    FDBiHomModule m = regular_module(make_e1());
    FDBiHomComodule d = dual_comodule(m);

    ValidationReport id = validate_comodule_morphism({d, d, Matrix::identity(2)});
    CHECK(id.all_passed());
    CHECK(id.checks.size() == 3);
    CHECK(id.checks[0].name == "coaction-compatibility");
    CHECK(id.checks[1].name == "omega-intertwining");
    CHECK(id.checks[2].name == "theta-intertwining");

    CHECK(validate_comodule_morphism({d, d, Matrix(2, 2)}).all_passed());

    // transposing a validated module morphism gives a comodule morphism
    Matrix two = Matrix::identity(2).scaled(Rational(2));
    REQUIRE(validate_module_morphism({m, m, two}).all_passed());
    CHECK(validate_comodule_morphism({d, d, two.transpose()}).all_passed());

    // transposing a non-morphism fails the dual check as well
    Matrix alpha = m.algebra().alpha();
    REQUIRE_FALSE(validate_module_morphism({m, m, alpha}).all_passed());
    ValidationReport bad = validate_comodule_morphism({d, d, alpha.transpose()});
    CHECK_FALSE(find_check(bad, "coaction-compatibility").passed);

    CHECK_THROWS_AS(validate_comodule_morphism({d, d, Matrix(3, 2)}), InputError);
}

TEST_CASE("product submodule") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);

    CHECK(product_submodule(m, zero_ideal(a)).dim() == 0);

    IdealHandle j = span_e1_ideal(a);
    Subspace mj = product_submodule(m, j);
    CHECK(mj.dim() == 1);
    CHECK(mj.contains(vec({0, 1})));

    IdealHandle full = make_ideal(a, Subspace::full(2));
    Subspace image = product_submodule(m, full);
    CHECK(image == Subspace::full(2));

    // stability under both module twists
    for (const Subspace& s : {mj, image})
        for (std::size_t t = 0; t < s.dim(); ++t) {
            CHECK(s.contains(m.kappa().apply(s.basis().row(t))));
            CHECK(s.contains(m.tau().apply(s.basis().row(t))));
        }
}

TEST_CASE("module functional wrapping") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);

    ModuleSweedlerFunctional xi = module_sweedler_wrap(m, vec({0, 1}), zero_ideal(a));
    CHECK(xi.coeffs == vec({0, 1}));

    ModuleSweedlerFunctional e0 = module_sweedler_wrap(m, vec({1, 0}), span_e1_ideal(a));
    CHECK(e0.witness.subspace.dim() == 1);

    CHECK_THROWS_WITH_AS(module_sweedler_wrap(m, vec({0, 1}), span_e1_ideal(a)),
                         doctest::Contains("e1"), PreconditionError);
    CHECK_THROWS_AS(module_sweedler_wrap(m, vec({1}), zero_ideal(a)), InputError);

    IdealHandle loose{a, Subspace::span(2, Matrix::from_rows({vec({0, 1})}, 2)), false, false, 1};
    CHECK_THROWS_AS(module_sweedler_wrap(m, vec({1, 0}), loose), ContractError);

    CHECK_THROWS_AS(module_sweedler_wrap(regular_module(zero_algebra(2)), vec({1, 0}),
                                         zero_ideal(a)),
                    InputError);
}

TEST_CASE("module functional addition") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);

    ModuleSweedlerFunctional e0 = module_sweedler_wrap(m, vec({1, 0}), span_e1_ideal(a));
    ModuleSweedlerFunctional e1 = module_sweedler_wrap(m, vec({0, 1}), zero_ideal(a));

    ModuleSweedlerFunctional sum = module_sweedler_add(e0, e1);
    CHECK(sum.coeffs == vec({1, 1}));
    CHECK(sum.witness.subspace.dim() == 0);

    ModuleSweedlerFunctional zero = module_sweedler_add(
        e0, module_sweedler_wrap(m, vec({-1, 0}), span_e1_ideal(a)));
    CHECK(vec_is_zero(zero.coeffs));
    CHECK(zero.witness.subspace.dim() == 1);

    CHECK_THROWS_AS(module_sweedler_add(e0, module_sweedler_wrap(regular_module(zero_algebra(2)),
                                                                 vec({1, 0}),
                                                                 zero_ideal(zero_algebra(2)))),
                    InputError);
}

TEST_CASE("module coaction on a certified functional") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);

    SUBCASE("zero functional gives the empty sum") {
        ModuleSweedlerCoaction d =
            module_sweedler_coaction(module_sweedler_wrap(m, vec({0, 0}), zero_ideal(a)));
        CHECK(d.pairs.empty());
        CHECK(vec_is_zero(d.tensor_form));
    }

    SUBCASE("coaction on e1* mirrors the dual comodule") {
        ModuleSweedlerFunctional xi = module_sweedler_wrap(m, vec({0, 1}), zero_ideal(a));
        ModuleSweedlerCoaction d = module_sweedler_coaction(xi);
        CHECK(d.pairs.size() == 2);
        CHECK(d.tensor_form == dual_comodule(m).gamma().col(1));

        for (const auto& [left, right] : d.pairs) {
            CHECK(left.witness.subspace.dim() == 0);
            CHECK(right.witness.subspace.dim() == 0);
        }

        // pairing oracle over all basis pairs
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t j = 0; j < 2; ++j) {
                Rational lhs;
                for (const auto& [left, right] : d.pairs)
                    lhs = lhs + left.coeffs[p] * right.coeffs[j];
                CHECK(lhs == dot(xi.coeffs, m.act(m.basis_vec(p), a.basis_vec(j))));
            }
    }

    SUBCASE("one-dimensional quotients for e0* with a span witness") {
        ModuleSweedlerFunctional xi = module_sweedler_wrap(m, vec({1, 0}), span_e1_ideal(a));
        ModuleSweedlerCoaction d = module_sweedler_coaction(xi);
        REQUIRE(d.pairs.size() == 1);
        CHECK(d.pairs[0].first.coeffs == vec({1, 0}));
        CHECK(d.pairs[0].second.coeffs == vec({1, 0}));
        CHECK(d.pairs[0].first.witness.subspace.dim() == 1);
        CHECK(d.tensor_form == tensor(vec({1, 0}), vec({1, 0})));

        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t j = 0; j < 2; ++j) {
                Rational lhs = d.pairs[0].first.coeffs[p] * d.pairs[0].second.coeffs[j];
                CHECK(lhs == dot(xi.coeffs, m.act(m.basis_vec(p), a.basis_vec(j))));
            }
    }

    SUBCASE("singular beta is rejected up front") {
        FDBiHomAlgebra s = singular_beta_algebra();
        REQUIRE(validate_algebra(s).all_passed());
        ModuleSweedlerFunctional xi =
            module_sweedler_wrap(regular_module(s), vec({1, 0}), zero_ideal(s));
        CHECK_THROWS_WITH_AS(module_sweedler_coaction(xi), doctest::Contains("not surjective"),
                             PreconditionError);
    }

    SUBCASE("uncertified witness is a contract violation") {
        IdealHandle loose{a, Subspace(2), false, false, 2};
        ModuleSweedlerFunctional xi{m, vec({0, 1}), loose};
        CHECK_THROWS_AS(module_sweedler_coaction(xi), ContractError);
    }
}

TEST_CASE("module functional pullback") {
    FDBiHomAlgebra a = make_e1();
    FDBiHomModule m = regular_module(a);
    ModuleSweedlerFunctional xi = module_sweedler_wrap(m, vec({0, 1}), zero_ideal(a));

    SUBCASE("identity keeps the functional") {
        ModuleSweedlerFunctional back =
            dual_module_morphism({m, m, Matrix::identity(2)}, xi);
        CHECK(back.coeffs == xi.coeffs);
        CHECK(back.witness.subspace == xi.witness.subspace);
    }

    SUBCASE("zero map yields the zero functional") {
        IdealHandle full = make_ideal(a, Subspace::full(2));
        ModuleSweedlerFunctional top = module_sweedler_wrap(m, vec({0, 0}), full);
        ModuleSweedlerFunctional back = dual_module_morphism({m, m, Matrix(2, 2)}, top);
        CHECK(vec_is_zero(back.coeffs));
        CHECK(back.witness.subspace == Subspace::full(2));
    }

    SUBCASE("scalar morphism doubles the coefficients") {
        Matrix two = Matrix::identity(2).scaled(Rational(2));
        ModuleSweedlerFunctional back = dual_module_morphism({m, m, two}, xi);
        CHECK(back.coeffs == vec({0, 2}));
        CHECK(back.witness.subspace.dim() == 0);
    }

    SUBCASE("non-morphisms are rejected") {
        CHECK_THROWS_AS(dual_module_morphism({m, m, a.alpha()}, xi), ContractError);
    }

    SUBCASE("singular beta is rejected") {
        FDBiHomAlgebra s = singular_beta_algebra();
        FDBiHomModule sm = regular_module(s);
        ModuleSweedlerFunctional sxi = module_sweedler_wrap(sm, vec({1, 0}), zero_ideal(s));
        CHECK_THROWS_AS(dual_module_morphism({sm, sm, Matrix::identity(2)}, sxi),
                        PreconditionError);
    }
}

TEST_CASE("random twisted algebras give valid regular modules and dual comodules") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        FDBiHomAlgebra a = random_bihom_algebra(rng, 4);
        FDBiHomModule m = regular_module(a);
        REQUIRE(validate_module(m).all_passed());
        FDBiHomComodule d = dual_comodule(m);
        REQUIRE(validate_comodule(d).all_passed());
        for (std::size_t q = 0; q < a.dim(); ++q)
            for (std::size_t p = 0; p < a.dim(); ++p)
                for (std::size_t j = 0; j < a.dim(); ++j) REQUIRE(d.g(q, p, j) == m.r(p, j, q));
    }
}
