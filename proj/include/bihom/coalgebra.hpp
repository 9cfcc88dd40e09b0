#ifndef BIHOM_COALGEBRA_HPP
#define BIHOM_COALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Finite-dimensional coalgebra with two twisting endomorphisms. The
/// comultiplication is a linear map delta : K^n -> K^(n^2) on the
/// lexicographic tensor basis: row j*n+k of column i is the coefficient of
/// e_j⊗e_k in delta(e_i). Construction only checks shapes.
class FDBiHomCoalgebra {
public:
    FDBiHomCoalgebra(std::size_t dim, std::vector<std::string> basis_labels,
                     Matrix delta, Matrix psi, Matrix phi);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Matrix& delta() const { return delta_; }
    const Matrix& psi() const { return psi_; }
    const Matrix& phi() const { return phi_; }

    /// Co-structure constant: coefficient of e_j⊗e_k in delta(e_i).
    const Rational& d(std::size_t i, std::size_t j, std::size_t k) const {
        return delta_.at(j * dim_ + k, i);
    }

    bool same_structure(const FDBiHomCoalgebra& o) const {
        return dim_ == o.dim_ && delta_ == o.delta_ && psi_ == o.psi_ && phi_ == o.phi_;
    }

    bool operator==(const FDBiHomCoalgebra&) const = default;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    Matrix delta_; // dim^2 x dim
    Matrix psi_;   // dim x dim
    Matrix phi_;   // dim x dim
};

/// Twist commutation, the twisted coassociativity law
/// (phi⊗delta)delta = (delta⊗psi)delta, and comultiplicativity of both
/// twists, all as exact identities of matrices with witnesses on failure.
ValidationReport validate_coalgebra(const FDBiHomCoalgebra& c);

struct CoalgebraMorphism {
    FDBiHomCoalgebra source;
    FDBiHomCoalgebra target;
    Matrix map; // target.dim x source.dim

    bool operator==(const CoalgebraMorphism&) const = default;
};

ValidationReport validate_coalgebra_morphism(const CoalgebraMorphism& g);

} // namespace bihom

#endif
