#ifndef BIHOM_ALGEBRA_HPP
#define BIHOM_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/report.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

std::vector<std::string> default_labels(std::size_t n);
std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b);

/// Finite-dimensional algebra with two twisting endomorphisms. The product
/// is stored as a linear map mu : K^(n^2) -> K^n on the lexicographic tensor
/// basis, so column i*n+j holds the product of basis vectors i and j.
/// Construction only checks shapes; the axioms are a separate validation.
class FDBiHomAlgebra {
public:
    FDBiHomAlgebra(std::size_t dim, std::vector<std::string> basis_labels,
                   Matrix mu, Matrix alpha, Matrix beta);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Matrix& mu() const { return mu_; }
    const Matrix& alpha() const { return alpha_; }
    const Matrix& beta() const { return beta_; }

    /// Structure constant: coefficient of e_k in the product e_i e_j.
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return mu_.at(k, i * dim_ + j);
    }

    Vec product(const Vec& u, const Vec& v) const { return mu_.apply(tensor(u, v)); }
    Vec basis_vec(std::size_t i) const;

    /// Structural equality ignoring basis labels.
    bool same_structure(const FDBiHomAlgebra& o) const {
        return dim_ == o.dim_ && mu_ == o.mu_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }

    bool operator==(const FDBiHomAlgebra&) const = default;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    Matrix mu_;    // dim x dim^2
    Matrix alpha_; // dim x dim
    Matrix beta_;  // dim x dim
};

/// Exhaustive axiom check: twist commutation, the twisted associativity law
/// alpha(g)(hk) = (gh)beta(k) on all basis triples, and multiplicativity of
/// both twists on all basis pairs.
ValidationReport validate_algebra(const FDBiHomAlgebra& a);

struct AlgebraMorphism {
    FDBiHomAlgebra source;
    FDBiHomAlgebra target;
    Matrix map; // target.dim x source.dim

    bool operator==(const AlgebraMorphism&) const = default;
};

ValidationReport validate_morphism(const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const FDBiHomAlgebra& a);
/// g after f; the inner structures must agree.
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

/// Twist an associative product into a BiHom product: the new multiplication
/// is core(alpha(g), beta(h)) with alpha, beta kept as the twisting maps.
/// The core must be associative and alpha, beta commuting endomorphisms of
/// it; violations raise PreconditionError with a witness.
FDBiHomAlgebra yau_twist(const Matrix& assoc_mu, const Matrix& alpha, const Matrix& beta,
                         std::vector<std::string> basis_labels = {});

/// A subspace certified as a two-sided ideal closed under both twists.
struct IdealHandle {
    FDBiHomAlgebra algebra;
    Subspace subspace;
    bool absorbing = false;
    bool twist_closed = false;
    std::size_t codim = 0;
};

/// Absorption (e_i v and v e_i land in s) and closure under alpha and beta,
/// checked on basis vectors; witnesses name the offending product.
ValidationReport check_ideal(const FDBiHomAlgebra& a, const Subspace& s);

/// check_ideal, then certify; throws PreconditionError on the first failure.
IdealHandle make_ideal(const FDBiHomAlgebra& a, const Subspace& s);

/// Smallest twist-closed two-sided ideal containing the generators, by
/// iterating one-step closures until the dimension stabilizes.
IdealHandle ideal_closure(const FDBiHomAlgebra& a, const std::vector<Vec>& generators);

IdealHandle intersect_ideals(const IdealHandle& j, const IdealHandle& h);

/// {v : f(v) in j}, computed as the kernel of (quotient projection) o f.
IdealHandle preimage_ideal(const AlgebraMorphism& f, const IdealHandle& j);

struct QuotientAlgebra {
    FDBiHomAlgebra algebra;
    AlgebraMorphism projection; // the canonical surjection
    QuotientData data;
};

/// Push mu, alpha, beta through the quotient by a certified ideal. Quotient
/// basis labels are the surviving source labels in brackets.
QuotientAlgebra quotient_algebra(const FDBiHomAlgebra& a, const IdealHandle& j);

/// The unique fbar with fbar o pi = f, for surjective pi with ker(pi)
/// contained in ker(f); otherwise PreconditionError naming a kernel vector
/// that f fails to kill.
AlgebraMorphism factor_through_quotient(const AlgebraMorphism& f, const AlgebraMorphism& pi);

} // namespace bihom

#endif
