#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bihom/error.hpp"
#include "bihom/poly.hpp"

using namespace bihom;

namespace {

Matrix mat(std::size_t rows, std::size_t cols, std::vector<long> entries) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(entries[i * cols + j]);
    return m;
}

PolyBiHomAlgebra scalar_alg(long a, long b) {
    return PolyBiHomAlgebra(1, mat(1, 1, {a}), mat(1, 1, {b}));
}

// upper-triangular pair that mixes variables; the products commute
PolyBiHomAlgebra mixing_alg() {
    return PolyBiHomAlgebra(2, mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {1, 2, 0, 1}));
}

DualFunctional d(const MultiIndex& n, long c = 1) {
    DualFunctional f;
    f.add_term(n, Rational(c));
    return f;
}

} // namespace

TEST_CASE("multi-index helpers") {
    CHECK(total_degree({}) == 0);
    CHECK(total_degree({1, 2, 0}) == 3);
    CHECK(add_indices({1, 0}, {2, 3}) == MultiIndex{3, 3});
    CHECK_THROWS_AS(add_indices({1}, {1, 2}), InputError);
    CHECK(index_str({1, 0}) == "(1,0)");
    CHECK(monomial_str({0, 0}) == "1");
    CHECK(monomial_str({2, 1}) == "x^(2,1)");
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_up_to(2, 2).size() == 6);
    CHECK(monomials_of_degree(2, 2).size() == 3);
    CHECK(monomials_of_degree(1, 2) == std::vector<MultiIndex>{{2}});
    CHECK(monomials_up_to(1, 0) == std::vector<MultiIndex>{{0}});
    CHECK(monomials_up_to(3, 4).size() == 35);
}

TEST_CASE("sparse polynomial arithmetic") {
    Poly p = Poly::monomial({1, 0}, Rational(2));
    p.add_term({0, 1}, Rational(1));
    p.add_term({1, 0}, Rational(-2));
    CHECK(p.terms().size() == 1);
    CHECK(p.coeff({0, 1}) == Rational(1));
    CHECK(p.coeff({1, 0}).is_zero());

    Poly q = Poly::monomial({0, 1}) * Poly::monomial({1, 1}, Rational(3));
    CHECK(q.coeff({1, 2}) == Rational(3));

    Poly lin;
    lin.add_term({1, 0}, Rational(1));
    lin.add_term({0, 1}, Rational(1));
    Poly sq = lin * lin;
    CHECK(sq.coeff({2, 0}) == Rational(1));
    CHECK(sq.coeff({1, 1}) == Rational(2));
    CHECK(sq.coeff({0, 2}) == Rational(1));
    CHECK(sq.coeff_sum() == Rational(4));

    CHECK(poly_str(Poly()) == "0");
    CHECK(poly_str(Poly::monomial({3}, Rational(8))) == "8*x^(3)");
    CHECK(poly_str(sq) == "x^(0,2) + 2*x^(1,1) + x^(2,0)");
}

TEST_CASE("functional evaluation") {
    DualFunctional f = d({2}, 3);
    f.add_term({0}, Rational(1));
    Poly p = Poly::monomial({2}, Rational(5));
    p.add_term({0}, Rational(7));
    CHECK(evaluate(f, p) == Rational(22));
    CHECK(functional_str(f) == "d(0) + 3*d(2)");
    CHECK(functional_str(DualFunctional{}) == "0");
}

TEST_CASE("algebra construction enforces commutation") {
    CHECK_THROWS_AS(PolyBiHomAlgebra(2, mat(1, 1, {1}), mat(2, 2, {1, 0, 0, 1})), InputError);
    CHECK_THROWS_AS(PolyBiHomAlgebra(2, mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {1, 0, 1, 1})),
                    PreconditionError);
    CHECK(mixing_alg().a() * mixing_alg().b() == mixing_alg().b() * mixing_alg().a());
}

TEST_CASE("twist expansion") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);
    CHECK(twist_apply(s, PolyTwist::A, {0}) == Poly::monomial({0}));
    CHECK(twist_apply(s, PolyTwist::A, {3}) == Poly::monomial({3}, Rational(8)));
    CHECK(twist_apply(s, PolyTwist::B, {2}) == Poly::monomial({2}, Rational(9)));

    PolyBiHomAlgebra m = mixing_alg();
    Poly x2 = twist_apply(m, PolyTwist::A, {0, 1});
    CHECK(x2.coeff({1, 0}) == Rational(1));
    CHECK(x2.coeff({0, 1}) == Rational(1));
    CHECK(x2.terms().size() == 2);

    // multinomial coefficient from a square of a two-variable form
    Poly sq = twist_apply(m, PolyTwist::A, {0, 2});
    CHECK(sq.coeff({2, 0}) == Rational(1));
    CHECK(sq.coeff({1, 1}) == Rational(2));
    CHECK(sq.coeff({0, 2}) == Rational(1));

    CHECK_THROWS_AS(twist_apply(m, PolyTwist::A, {1}), InputError);
}

TEST_CASE("twist expansion agrees with repeated multiplication") {
    std::mt19937_64 rng(771020);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<std::size_t> expo(0, 3);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t r = 1 + iter % 3;
        Matrix a(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) a.at(i, j) = Rational(entry(rng));
        PolyBiHomAlgebra alg(r, a, Matrix::identity(r));
        MultiIndex m(r);
        for (std::size_t i = 0; i < r; ++i) m[i] = expo(rng);
        Poly fast = twist_apply(alg, PolyTwist::A, m);
        Poly slow = twist_apply_by_powers(alg, PolyTwist::A, m);
        REQUIRE(fast == slow);
        for (const auto& [p, c] : fast.terms()) REQUIRE(total_degree(p) == total_degree(m));
    }
}

TEST_CASE("coefficient sums multiply across columns") {
    std::mt19937_64 rng(880304);
    std::uniform_int_distribution<long> entry(-2, 3);
    std::uniform_int_distribution<std::size_t> expo(0, 3);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t r = 1 + iter % 3;
        Matrix a(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) a.at(i, j) = Rational(entry(rng));
        PolyBiHomAlgebra alg(r, a, Matrix::identity(r));
        MultiIndex m(r);
        for (std::size_t i = 0; i < r; ++i) m[i] = expo(rng);

        Rational expected(1);
        for (std::size_t k = 0; k < r; ++k) {
            Rational column_sum;
            for (std::size_t l = 0; l < r; ++l) column_sum += a.at(l, k);
            expected *= column_sum.pow(m[k]);
        }
        REQUIRE(twist_apply(alg, PolyTwist::A, m).coeff_sum() == expected);
    }
}

TEST_CASE("twisted product") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);
    CHECK(twisted_product(s, {0}, {0}) == Poly::monomial({0}));
    CHECK(twisted_product(s, {1}, {1}) == Poly::monomial({2}, Rational(6)));
    CHECK(twisted_product(s, {2}, {1}) == Poly::monomial({3}, Rational(12)));

    PolyBiHomAlgebra m = mixing_alg();
    Poly p = twisted_product(m, {1, 1}, {0, 2});
    for (const auto& [w, c] : p.terms()) CHECK(total_degree(w) == 4);

    // bilinear extension agrees with the monomial product
    Poly u = Poly::monomial({1, 0}, Rational(2));
    u.add_term({0, 1}, Rational(1));
    Poly v = Poly::monomial({1, 1}, Rational(3));
    Poly direct = twisted_multiply(m, u, v);
    Poly expected;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            Poly part = twisted_product(m, a, b);
            for (const auto& [w, c] : part.terms()) expected.add_term(w, ca * cb * c);
        }
    CHECK(direct == expected);
}

TEST_CASE("cofinite monomial ideals") {
    CofiniteMonomialIdeal t0 = CofiniteMonomialIdeal::total_degree(2, 0);
    CHECK(t0.member({0, 0}));
    CHECK(t0.complement().empty());

    CofiniteMonomialIdeal t3 = CofiniteMonomialIdeal::total_degree(2, 3);
    CHECK_FALSE(t3.member({1, 1}));
    CHECK(t3.member({2, 1}));
    CHECK(t3.complement().size() == 6);
    CHECK(t3.str() == "TotalDegree(3)");

    CofiniteMonomialIdeal st = CofiniteMonomialIdeal::staircase({2, 2});
    CHECK(st.member({0, 3}));
    CHECK(st.member({2, 0}));
    CHECK_FALSE(st.member({1, 1}));
    CHECK(st.complement().size() == 4);
    CHECK(st.str() == "Staircase(2,2)");

    CofiniteMonomialIdeal whole = CofiniteMonomialIdeal::staircase({0, 3});
    CHECK(whole.member({0, 0}));
    CHECK(whole.complement().empty());

    CHECK_THROWS_AS(t3.member({1}), InputError);
    CHECK_THROWS_AS(t3.bounds(), InputError);
    CHECK_THROWS_AS(st.degree(), InputError);
}

TEST_CASE("total-degree ideals absorb the twisted product") {
    BoundedReport r1 = ideal_absorption_check(scalar_alg(2, 3),
                                              CofiniteMonomialIdeal::total_degree(1, 3), 8);
    CHECK(r1.degree_bound == 8);
    CHECK(r1.report.all_passed());
    CHECK(r1.report.checks.size() == 4);
    CHECK(r1.report.checks[0].name == "left-absorption");
    CHECK(r1.report.checks[1].name == "right-absorption");
    CHECK(r1.report.checks[2].name == "alpha-closure");
    CHECK(r1.report.checks[3].name == "beta-closure");

    BoundedReport r2 = ideal_absorption_check(mixing_alg(),
                                              CofiniteMonomialIdeal::total_degree(2, 2), 6);
    CHECK(r2.report.all_passed());
}

TEST_CASE("staircase absorption outcomes") {
    // diagonal case: monomials map to monomials
    CHECK(ideal_absorption_check(scalar_alg(2, 3), CofiniteMonomialIdeal::staircase({2}), 8)
              .report.all_passed());

    // variable-mixing substitution that still respects the staircase
    PolyBiHomAlgebra shear(2, mat(2, 2, {1, 1, 0, 1}), Matrix::identity(2));
    CHECK(ideal_absorption_check(shear, CofiniteMonomialIdeal::staircase({1, 3}), 6)
              .report.all_passed());

    // swapping the variables escapes an asymmetric staircase
    PolyBiHomAlgebra swap(2, mat(2, 2, {0, 1, 1, 0}), Matrix::identity(2));
    BoundedReport bad =
        ideal_absorption_check(swap, CofiniteMonomialIdeal::staircase({1, 5}), 6);
    CHECK_FALSE(bad.report.all_passed());
    const CheckResult* alpha_check = nullptr;
    for (const auto& c : bad.report.checks)
        if (c.name == "alpha-closure") alpha_check = &c;
    REQUIRE(alpha_check != nullptr);
    CHECK_FALSE(alpha_check->passed);
    CHECK(alpha_check->witness.find("x^(1,0)") != std::string::npos);
    CHECK(alpha_check->witness.find("x^(0,1)") != std::string::npos);

    CHECK_THROWS_AS(ideal_absorption_check(scalar_alg(2, 3),
                                           CofiniteMonomialIdeal::staircase({1, 1}), 4),
                    InputError);
}

TEST_CASE("dual twists of coordinate functionals") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);
    CHECK(mu_on_dual(s, d({0})) == d({0}));
    for (long i = 0; i < 5; ++i) {
        MultiIndex n{static_cast<std::size_t>(i)};
        CHECK(mu_on_dual(s, d(n)) == d(n, 1L << i));
        CHECK(eta_on_dual(s, d(n)).coeff(n) == Rational(3).pow(static_cast<unsigned long>(i)));
    }

    PolyBiHomAlgebra m = mixing_alg();
    DualFunctional pulled = mu_on_dual(m, d({1, 0}));
    CHECK(pulled.coeff({1, 0}) == Rational(1));
    CHECK(pulled.coeff({0, 1}) == Rational(1));
    CHECK(pulled.terms.size() == 2);

    // linearity
    DualFunctional f = d({1}, 2);
    f.add_term({2}, Rational(1));
    DualFunctional lhs = mu_on_dual(s, f);
    CHECK(lhs.coeff({1}) == Rational(4));
    CHECK(lhs.coeff({2}) == Rational(4));

    // equal substitutions collapse the two dual twists
    PolyBiHomAlgebra same(2, mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {1, 1, 0, 1}));
    for (const auto& n : monomials_up_to(2, 3))
        CHECK(mu_on_dual(same, d(n)) == eta_on_dual(same, d(n)));
}

TEST_CASE("comultiplication of coordinate functionals") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);

    auto zero = delta_dual(s, {0});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].first == d({0}));
    CHECK(zero[0].second == d({0}));

    auto two = delta_dual(s, {2});
    REQUIRE(two.size() == 3);
    CHECK(two[0].first == d({0}));
    CHECK(two[0].second == d({2}, 9));
    CHECK(two[1].first == d({1}, 2));
    CHECK(two[1].second == d({1}, 3));
    CHECK(two[2].first == d({2}, 4));
    CHECK(two[2].second == d({0}));

    // tensor coefficients 9, 6, 4
    auto tensor_coeff = [&](const MultiIndex& i, const MultiIndex& j) {
        Rational c;
        for (const auto& [l, r] : two) c += l.coeff(i) * r.coeff(j);
        return c;
    };
    CHECK(tensor_coeff({0}, {2}) == Rational(9));
    CHECK(tensor_coeff({1}, {1}) == Rational(6));
    CHECK(tensor_coeff({2}, {0}) == Rational(4));

    // classical specialization: unit coefficients on every splitting
    PolyBiHomAlgebra classical = scalar_alg(1, 1);
    auto cl = delta_dual(classical, {3});
    REQUIRE(cl.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(cl[i].first == d({i}));
        CHECK(cl[i].second == d({3 - i}));
    }

    CHECK(delta_dual(mixing_alg(), {1, 2}).size() == 6);
}

TEST_CASE("pairing check") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);

    BoundedReport n0 = pairing_check(s, {0}, 4);
    CHECK(n0.degree_bound == 4);
    CHECK(n0.report.all_passed());

    CHECK(pairing_check(s, {2}, 6).report.all_passed());

    // hand value at m = k = (1): x*x = 6x^2
    auto pairs = delta_dual(s, {2});
    Rational at11;
    for (const auto& [l, r] : pairs) at11 += l.coeff({1}) * r.coeff({1});
    CHECK(at11 == Rational(6));
    CHECK(twisted_product(s, {1}, {1}).coeff({2}) == Rational(6));

    CHECK(pairing_check(mixing_alg(), {1, 1}, 5).report.all_passed());
}

TEST_CASE("coassociativity check") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);
    CHECK(coassoc_check(s, {0}, 4).report.all_passed());
    CHECK(coassoc_check(s, {3}, 6).report.all_passed());
    CHECK(coassoc_check(mixing_alg(), {1, 1}, 5).report.all_passed());
}

TEST_CASE("finite dual membership") {
    PolyBiHomAlgebra s = scalar_alg(2, 3);

    FiniteDualMembership yes =
        functional_in_finite_dual(s, d({0}), CofiniteMonomialIdeal::total_degree(1, 1), 6);
    CHECK(yes.in_finite_dual);
    CHECK(yes.degree_bound == 6);
    CHECK(yes.report.all_passed());

    FiniteDualMembership no =
        functional_in_finite_dual(s, d({2}), CofiniteMonomialIdeal::total_degree(1, 2), 6);
    CHECK_FALSE(no.in_finite_dual);
    CHECK(no.report.checks[0].witness.find("x^(2)") != std::string::npos);

    DualFunctional f = d({1});
    f.add_term({0}, Rational(1));
    CHECK(functional_in_finite_dual(s, f, CofiniteMonomialIdeal::staircase({2}), 6)
              .in_finite_dual);

    PolyBiHomAlgebra swap(2, mat(2, 2, {0, 1, 1, 0}), Matrix::identity(2));
    CHECK_THROWS_AS(functional_in_finite_dual(swap, d({0, 0}),
                                              CofiniteMonomialIdeal::staircase({1, 5}), 6),
                    ContractError);
}
