#ifndef BIHOM_MODULE_HPP
#define BIHOM_MODULE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/coalgebra.hpp"
#include "bihom/duality.hpp"
#include "bihom/matrix.hpp"
#include "bihom/report.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

/// Right module over a twisted algebra, with its own pair of commuting
/// twists. The action is a linear map rho : M⊗G -> M on the lexicographic
/// tensor basis (module factor first): column p*dim_g + j holds the action
/// of e_j on m_p. Construction only checks shapes.
class FDBiHomModule {
public:
    FDBiHomModule(FDBiHomAlgebra algebra, std::size_t dim_m,
                  std::vector<std::string> basis_labels, Matrix rho, Matrix kappa, Matrix tau);

    const FDBiHomAlgebra& algebra() const { return algebra_; }
    std::size_t dim_m() const { return dim_m_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Matrix& rho() const { return rho_; }
    const Matrix& kappa() const { return kappa_; }
    const Matrix& tau() const { return tau_; }

    /// Action constant: coefficient of m_q in the action of e_j on m_p.
    const Rational& r(std::size_t p, std::size_t j, std::size_t q) const {
        return rho_.at(q, p * algebra_.dim() + j);
    }

    Vec act(const Vec& m, const Vec& g) const { return rho_.apply(tensor(m, g)); }
    Vec basis_vec(std::size_t p) const;

    bool same_structure(const FDBiHomModule& o) const {
        return dim_m_ == o.dim_m_ && rho_ == o.rho_ && kappa_ == o.kappa_ && tau_ == o.tau_ &&
               algebra_.same_structure(o.algebra_);
    }

    bool operator==(const FDBiHomModule&) const = default;

private:
    FDBiHomAlgebra algebra_;
    std::size_t dim_m_;
    std::vector<std::string> labels_;
    Matrix rho_;   // dim_m x (dim_m * dim_g)
    Matrix kappa_; // dim_m x dim_m
    Matrix tau_;   // dim_m x dim_m
};

/// Twist commutation, the twisted action-associativity law
/// (m g) beta(h) = kappa(m) (g h), and the two action-twist exchange laws,
/// exhaustively on basis tuples.
ValidationReport validate_module(const FDBiHomModule& m);

/// The algebra acting on itself: rho = mu, kappa = alpha, tau = beta.
FDBiHomModule regular_module(const FDBiHomAlgebra& a);

/// Right comodule over a twisted coalgebra: the coaction is a linear map
/// gamma : A -> A⊗C (comodule factor first), with twists omega, theta on A.
class FDBiHomComodule {
public:
    FDBiHomComodule(FDBiHomCoalgebra coalgebra, std::size_t dim_a,
                    std::vector<std::string> basis_labels, Matrix gamma, Matrix omega,
                    Matrix theta);

    const FDBiHomCoalgebra& coalgebra() const { return coalgebra_; }
    std::size_t dim_a() const { return dim_a_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Matrix& gamma() const { return gamma_; }
    const Matrix& omega() const { return omega_; }
    const Matrix& theta() const { return theta_; }

    /// Coaction constant: coefficient of a_q⊗c_k in the coaction on a_p.
    const Rational& g(std::size_t p, std::size_t q, std::size_t k) const {
        return gamma_.at(q * coalgebra_.dim() + k, p);
    }

    bool same_structure(const FDBiHomComodule& o) const {
        return dim_a_ == o.dim_a_ && gamma_ == o.gamma_ && omega_ == o.omega_ &&
               theta_ == o.theta_ && coalgebra_.same_structure(o.coalgebra_);
    }

    bool operator==(const FDBiHomComodule&) const = default;

private:
    FDBiHomCoalgebra coalgebra_;
    std::size_t dim_a_;
    std::vector<std::string> labels_;
    Matrix gamma_; // (dim_a * dim_c) x dim_a
    Matrix omega_; // dim_a x dim_a
    Matrix theta_; // dim_a x dim_a
};

ValidationReport validate_comodule(const FDBiHomComodule& a);

struct ModuleMorphism {
    FDBiHomModule source;
    FDBiHomModule target;
    Matrix map; // target.dim_m x source.dim_m
};

/// Action compatibility sigma(m g) = sigma(m) g plus intertwining with both
/// module twists; the two modules must share a base algebra.
ValidationReport validate_module_morphism(const ModuleMorphism& s);

struct ComoduleMorphism {
    FDBiHomComodule source;
    FDBiHomComodule target;
    Matrix map; // target.dim_a x source.dim_a
};

ValidationReport validate_comodule_morphism(const ComoduleMorphism& f);

/// Dual of a validated module over a validated algebra: a comodule over the
/// dual coalgebra whose coaction is the index-transpose of the action, with
/// twists swapped (omega from tau, theta from kappa).
FDBiHomComodule dual_comodule(const FDBiHomModule& m);

/// Span of all action values m_p * v with v running over the ideal's basis.
Subspace product_submodule(const FDBiHomModule& m, const IdealHandle& j);

/// A functional on the module certified by an algebra ideal: it must
/// annihilate the product submodule of its witness.
struct ModuleSweedlerFunctional {
    FDBiHomModule mod;
    Vec coeffs;
    IdealHandle witness;
};

ModuleSweedlerFunctional module_sweedler_wrap(const FDBiHomModule& m, const Vec& coeffs,
                                              const IdealHandle& j);

ModuleSweedlerFunctional module_sweedler_add(const ModuleSweedlerFunctional& x,
                                             const ModuleSweedlerFunctional& y);

/// Coaction on a certified module functional, through the simultaneous
/// quotients of the module by M*J and the algebra by J. Requires the base
/// algebra's beta to be surjective (full rank): that is what pushes
/// (M*J)*G back into M*J and makes the transported coaction well defined.
struct ModuleSweedlerCoaction {
    std::vector<std::pair<ModuleSweedlerFunctional, SweedlerFunctional>> pairs;
    Vec tensor_form; // length dim_m * dim_g
};

ModuleSweedlerCoaction module_sweedler_coaction(const ModuleSweedlerFunctional& xi);

/// Pull a certified module functional back along a validated module
/// morphism; the witness ideal is unchanged.
ModuleSweedlerFunctional dual_module_morphism(const ModuleMorphism& sigma,
                                              const ModuleSweedlerFunctional& xi);

} // namespace bihom

#endif
