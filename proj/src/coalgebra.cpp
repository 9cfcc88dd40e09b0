#include "bihom/coalgebra.hpp"

#include <utility>

#include "bihom/algebra.hpp"
#include "bihom/error.hpp"

namespace bihom {

FDBiHomCoalgebra::FDBiHomCoalgebra(std::size_t dim, std::vector<std::string> basis_labels,
                                   Matrix delta, Matrix psi, Matrix phi)
    : dim_(dim),
      labels_(std::move(basis_labels)),
      delta_(std::move(delta)),
      psi_(std::move(psi)),
      phi_(std::move(phi)) {
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_)
        throw InputError("coalgebra: " + std::to_string(labels_.size()) +
                         " labels for dimension " + std::to_string(dim_));
    if (delta_.rows() != dim_ * dim_ || delta_.cols() != dim_)
        throw InputError("coalgebra: delta must be dim^2 x dim");
    if (psi_.rows() != dim_ || psi_.cols() != dim_)
        throw InputError("coalgebra: psi must be dim x dim");
    if (phi_.rows() != dim_ || phi_.cols() != dim_)
        throw InputError("coalgebra: phi must be dim x dim");
}

namespace {

/// Per-column comparison of two maps out of the coalgebra, yielding a
/// witness naming the basis element and both images.
CheckResult compare_maps(const std::string& name, const Matrix& lhs, const Matrix& rhs,
                         const std::vector<std::string>& domain_labels,
                         const std::vector<std::string>& image_labels,
                         const std::string& lhs_name, const std::string& rhs_name) {
    if (lhs == rhs) return {name, true, ""};
    for (std::size_t i = 0; i < lhs.cols(); ++i)
        if (lhs.col(i) != rhs.col(i))
            return {name, false,
                    "at " + domain_labels[i] + ": " + lhs_name + " = " +
                        format_combination(lhs.col(i), image_labels) + " but " + rhs_name + " = " +
                        format_combination(rhs.col(i), image_labels)};
    return {name, false, "maps differ"};
}

} // namespace

ValidationReport validate_coalgebra(const FDBiHomCoalgebra& c) {
    ValidationReport r;
    const auto& L = c.basis_labels();
    auto L2 = tensor_labels(L, L);
    auto L3 = tensor_labels(L2, L);

    r.checks.push_back(compare_maps("twist-commutation", c.psi() * c.phi(), c.phi() * c.psi(), L,
                                    L, "psi(phi(.))", "phi(psi(.))"));
    r.checks.push_back(compare_maps("bihom-coassociativity",
                                    kronecker(c.phi(), c.delta()) * c.delta(),
                                    kronecker(c.delta(), c.psi()) * c.delta(), L, L3,
                                    "(phi⊗delta)delta", "(delta⊗psi)delta"));
    r.checks.push_back(compare_maps("psi-comultiplicativity", c.delta() * c.psi(),
                                    kronecker(c.psi(), c.psi()) * c.delta(), L, L2, "delta(psi(.))",
                                    "(psi⊗psi)delta"));
    r.checks.push_back(compare_maps("phi-comultiplicativity", c.delta() * c.phi(),
                                    kronecker(c.phi(), c.phi()) * c.delta(), L, L2, "delta(phi(.))",
                                    "(phi⊗phi)delta"));
    return r;
}

ValidationReport validate_coalgebra_morphism(const CoalgebraMorphism& g) {
    if (g.map.rows() != g.target.dim() || g.map.cols() != g.source.dim())
        throw InputError("coalgebra morphism: map must be target.dim x source.dim");
    ValidationReport r;
    const auto& SL = g.source.basis_labels();
    const auto& TL = g.target.basis_labels();
    auto TL2 = tensor_labels(TL, TL);

    r.checks.push_back(compare_maps("comultiplicativity", kronecker(g.map, g.map) * g.source.delta(),
                                    g.target.delta() * g.map, SL, TL2, "(g⊗g)delta", "delta'(g(.))"));
    r.checks.push_back(compare_maps("psi-intertwining", g.map * g.source.psi(),
                                    g.target.psi() * g.map, SL, TL, "g(psi(.))", "psi'(g(.))"));
    r.checks.push_back(compare_maps("phi-intertwining", g.map * g.source.phi(),
                                    g.target.phi() * g.map, SL, TL, "g(phi(.))", "phi'(g(.))"));
    return r;
}

} // namespace bihom
