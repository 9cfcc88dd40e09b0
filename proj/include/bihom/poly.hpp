#ifndef BIHOM_POLY_HPP
#define BIHOM_POLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Exponent vector of a monomial in r variables.
using MultiIndex = std::vector<std::size_t>;

std::size_t total_degree(const MultiIndex& m);
MultiIndex add_indices(const MultiIndex& a, const MultiIndex& b);
std::string index_str(const MultiIndex& m);    // "(1,0)"
std::string monomial_str(const MultiIndex& m); // "x^(1,0)", "1" for the zero index

/// All exponent vectors with total degree <= bound, resp. == degree.
std::vector<MultiIndex> monomials_up_to(std::size_t vars, std::size_t bound);
std::vector<MultiIndex> monomials_of_degree(std::size_t vars, std::size_t degree);

/// Sparse polynomial with rational coefficients; zero coefficients are
/// never stored.
class Poly {
public:
    Poly() = default;
    static Poly monomial(const MultiIndex& m, const Rational& c = Rational(1));

    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    Rational coeff(const MultiIndex& m) const;
    void add_term(const MultiIndex& m, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    /// Sum of all coefficients: the value at x_1 = ... = x_r = 1.
    Rational coeff_sum() const;

    bool operator==(const Poly&) const = default;

private:
    std::map<MultiIndex, Rational> terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
std::string poly_str(const Poly& p);

/// Finitely supported combination of the coordinate functionals d_n
/// (d_n reads off the coefficient of x^n).
struct DualFunctional {
    std::map<MultiIndex, Rational> terms;

    Rational coeff(const MultiIndex& n) const;
    void add_term(const MultiIndex& n, const Rational& c);
    bool is_zero() const { return terms.empty(); }

    bool operator==(const DualFunctional&) const = default;
};

Rational evaluate(const DualFunctional& f, const Poly& p);
std::string functional_str(const DualFunctional& f);

/// Polynomial algebra in r variables with the product twisted by a pair of
/// commuting linear substitutions: column k of A (resp. B) lists the
/// coefficients of the image of x_{k+1}.
class PolyBiHomAlgebra {
public:
    PolyBiHomAlgebra(std::size_t vars, Matrix a, Matrix b);

    std::size_t vars() const { return vars_; }
    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }

private:
    std::size_t vars_;
    Matrix a_;
    Matrix b_;
};

enum class PolyTwist { A, B };

/// Image of x^m under the chosen substitution, expanded with exact
/// multinomial coefficients over exponent matrices with prescribed column
/// sums. Every term has total degree |m|.
Poly twist_apply(const PolyBiHomAlgebra& alg, PolyTwist which, const MultiIndex& m);

/// Same image computed by repeated multiplication of the linear forms; an
/// independent route used to cross-check the multinomial expansion.
Poly twist_apply_by_powers(const PolyBiHomAlgebra& alg, PolyTwist which, const MultiIndex& m);

/// Linear extension of twist_apply to polynomials.
Poly twist_apply_poly(const PolyBiHomAlgebra& alg, PolyTwist which, const Poly& p);

/// The twisted product x^m * x^n: the ordinary product of the two twist
/// images. Every term has total degree |m| + |n|.
Poly twisted_product(const PolyBiHomAlgebra& alg, const MultiIndex& m, const MultiIndex& n);

/// Bilinear extension of the twisted product.
Poly twisted_multiply(const PolyBiHomAlgebra& alg, const Poly& p, const Poly& q);

/// Monomial ideal with finite monomial complement: either all monomials of
/// total degree >= d, or all monomials with some exponent reaching its
/// staircase bound.
class CofiniteMonomialIdeal {
public:
    enum class Kind { TotalDegree, Staircase };

    static CofiniteMonomialIdeal total_degree(std::size_t vars, std::size_t degree);
    static CofiniteMonomialIdeal staircase(MultiIndex bounds);

    Kind kind() const { return kind_; }
    std::size_t vars() const { return vars_; }
    std::size_t degree() const;        // TotalDegree only
    const MultiIndex& bounds() const;  // Staircase only

    bool member(const MultiIndex& n) const;
    /// The finitely many monomials outside the ideal.
    std::vector<MultiIndex> complement() const;
    std::string str() const;

    bool operator==(const CofiniteMonomialIdeal&) const = default;

private:
    CofiniteMonomialIdeal(Kind kind, std::size_t vars, std::size_t degree, MultiIndex bounds);

    Kind kind_;
    std::size_t vars_;
    std::size_t degree_;
    MultiIndex bounds_;
};

/// A report together with the degree bound it was computed under; results
/// below the bound are exact.
struct BoundedReport {
    std::size_t degree_bound;
    ValidationReport report;
};

/// Absorption of the ideal under the twisted product from both sides and
/// stability under both substitutions, exhaustively on monomials up to the
/// bound. TotalDegree ideals always pass; Staircase ideals can fail when a
/// substitution mixes variables, and the report then carries a witness.
BoundedReport ideal_absorption_check(const PolyBiHomAlgebra& alg,
                                     const CofiniteMonomialIdeal& spec,
                                     std::size_t degree_bound);

/// Precomposition of a functional with the first (resp. second)
/// substitution. Only indices of equal total degree contribute, so the
/// result is again finitely supported.
DualFunctional mu_on_dual(const PolyBiHomAlgebra& alg, const DualFunctional& f);
DualFunctional eta_on_dual(const PolyBiHomAlgebra& alg, const DualFunctional& f);

/// Comultiplication of the coordinate functional d_n: one summand
/// (mu(d_i), eta(d_j)) for every componentwise splitting i + j = n.
std::vector<std::pair<DualFunctional, DualFunctional>> delta_dual(const PolyBiHomAlgebra& alg,
                                                                  const MultiIndex& n);

/// Checks that delta_dual(n) is dual to the twisted product: the pair sum
/// at (x^m, x^k) must match the coefficient of x^n in x^m * x^k, for all
/// monomial pairs up to the bound.
BoundedReport pairing_check(const PolyBiHomAlgebra& alg, const MultiIndex& n,
                            std::size_t degree_bound);

/// Checks the twisted coassociativity of delta_dual through the evaluation
/// pairing: d_n(alpha(x^a)*(x^b*x^c)) = d_n((x^a*x^b)*beta(x^c)) for all
/// monomial triples up to the bound.
BoundedReport coassoc_check(const PolyBiHomAlgebra& alg, const MultiIndex& n,
                            std::size_t degree_bound);

/// Membership of a functional in the finite dual certified by the given
/// ideal: the ideal must pass ideal_absorption_check at the bound, and the
/// functional must then kill it, which for coordinate-functional
/// combinations means its support avoids the ideal.
struct FiniteDualMembership {
    bool in_finite_dual;
    std::size_t degree_bound;
    ValidationReport report;
};

FiniteDualMembership functional_in_finite_dual(const PolyBiHomAlgebra& alg,
                                               const DualFunctional& f,
                                               const CofiniteMonomialIdeal& spec,
                                               std::size_t degree_bound);

} // namespace bihom

#endif
