#include "bihom/duality.hpp"

#include "bihom/error.hpp"

namespace bihom {

namespace {

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(l + "*");
    return out;
}

void require_valid_algebra(const FDBiHomAlgebra& a, const std::string& where) {
    if (auto f = validate_algebra(a).first_failure())
        throw ContractError(where + ": algebra is not valid (" + f->name + ": " + f->witness +
                            ")");
}

void require_certified(const IdealHandle& j, const std::string& where) {
    if (!j.absorbing || !j.twist_closed)
        throw ContractError(where + ": ideal handle is not certified");
}

void require_annihilation(const Vec& coeffs, const IdealHandle& j, const std::string& where,
                          bool contract) {
    for (std::size_t t = 0; t < j.subspace.dim(); ++t) {
        Vec v = j.subspace.basis().row(t);
        if (!dot(coeffs, v).is_zero()) {
            std::string msg = where + ": functional does not annihilate the witness vector " +
                              format_combination(v, j.algebra.basis_labels());
            if (contract) throw ContractError(msg);
            throw PreconditionError(msg);
        }
    }
}

} // namespace

FDBiHomCoalgebra dual_coalgebra(const FDBiHomAlgebra& a) {
    require_valid_algebra(a, "dual coalgebra");
    return FDBiHomCoalgebra(a.dim(), dual_labels(a.basis_labels()), a.mu().transpose(),
                            a.beta().transpose(), a.alpha().transpose());
}

CoalgebraMorphism dual_algebra_morphism(const AlgebraMorphism& f) {
    if (f.map.rows() != f.target.dim() || f.map.cols() != f.source.dim())
        throw InputError("dual morphism: map must be target.dim x source.dim");
    return CoalgebraMorphism{dual_coalgebra(f.target), dual_coalgebra(f.source),
                             f.map.transpose()};
}

TensorQuotientKernel tensor_quotient_kernel(std::size_t dim_a, std::size_t dim_b,
                                            const Subspace& i, const Subspace& j) {
    if (i.ambient_dim() != dim_a || j.ambient_dim() != dim_b)
        throw InputError("tensor quotient kernel: subspace ambient dimensions do not match");

    QuotientData qa = quotient(i);
    QuotientData qb = quotient(j);
    Subspace kernel = kernel_basis(kronecker(qa.projection, qb.projection));

    std::size_t nn = dim_a * dim_b;
    std::vector<Vec> full_tensor_j;
    for (std::size_t p = 0; p < dim_a; ++p)
        for (std::size_t t = 0; t < j.dim(); ++t) {
            Vec e(dim_a);
            e[p] = Rational(1);
            full_tensor_j.push_back(tensor(e, j.basis().row(t)));
        }
    std::vector<Vec> i_tensor_full;
    for (std::size_t t = 0; t < i.dim(); ++t)
        for (std::size_t p = 0; p < dim_b; ++p) {
            Vec e(dim_b);
            e[p] = Rational(1);
            i_tensor_full.push_back(tensor(i.basis().row(t), e));
        }
    Subspace sum = subspace_sum(Subspace::span(nn, Matrix::from_rows(full_tensor_j, nn)),
                                Subspace::span(nn, Matrix::from_rows(i_tensor_full, nn)));

    ValidationReport report;
    if (kernel == sum) {
        report.checks.push_back({"kernel-decomposition", true, ""});
    } else {
        report.checks.push_back(
            {"kernel-decomposition", false,
             "kernel has dimension " + std::to_string(kernel.dim()) +
                 " but the two-sided tensor sum has dimension " + std::to_string(sum.dim())});
    }
    std::size_t quotient_dim = nn - kernel.dim();
    std::size_t expected = i.codim() * j.codim();
    if (quotient_dim == expected) {
        report.checks.push_back({"quotient-dimension", true, ""});
    } else {
        report.checks.push_back({"quotient-dimension", false,
                                 "quotient dimension " + std::to_string(quotient_dim) +
                                     " differs from codimension product " +
                                     std::to_string(expected)});
    }
    return {kernel, report};
}

SweedlerFunctional sweedler_wrap(const FDBiHomAlgebra& a, const Vec& coeffs,
                                 const IdealHandle& j) {
    if (coeffs.size() != a.dim())
        throw InputError("functional: coefficient count does not match the algebra dimension");
    if (!j.algebra.same_structure(a))
        throw InputError("functional: witness ideal belongs to a different algebra");
    require_certified(j, "functional");
    require_annihilation(coeffs, j, "functional", false);
    return SweedlerFunctional{a, coeffs, j};
}

SweedlerFunctional sweedler_add(const SweedlerFunctional& f, const SweedlerFunctional& g) {
    if (!f.algebra.same_structure(g.algebra))
        throw InputError("functional sum: different algebras");
    IdealHandle meet = intersect_ideals(f.witness, g.witness);
    return sweedler_wrap(f.algebra, vec_add(f.coeffs, g.coeffs), meet);
}

SweedlerDelta sweedler_delta(const SweedlerFunctional& f) {
    require_certified(f.witness, "comultiplication");
    require_annihilation(f.coeffs, f.witness, "comultiplication", true);

    const FDBiHomAlgebra& a = f.algebra;
    std::size_t n = a.dim();
    QuotientData qd = quotient(f.witness.subspace);
    const Matrix& p = qd.projection;
    const Matrix& s = qd.section;
    std::size_t q = qd.codim();

    // descend the functional and the product to the quotient
    Vec fbar = s.transpose().apply(f.coeffs);
    Matrix mu_bar = p * a.mu() * kronecker(s, s);
    // coefficient of the (i,j) dual tensor basis element of the quotient
    Vec k = mu_bar.transpose().apply(fbar);

    SweedlerDelta out;
    out.tensor_form = Vec(n * n);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const Rational& kij = k[i * q + j];
            if (kij.is_zero()) continue;
            Vec left = vec_scale(kij, p.row(i));
            Vec right = p.row(j);
            out.pairs.emplace_back(sweedler_wrap(a, left, f.witness),
                                   sweedler_wrap(a, right, f.witness));
            out.tensor_form = vec_add(out.tensor_form, tensor(left, right));
        }
    return out;
}

SweedlerFunctional sweedler_twist(const SweedlerFunctional& f, TwistChoice which) {
    const Matrix& m = which == TwistChoice::Alpha ? f.algebra.alpha() : f.algebra.beta();
    return sweedler_wrap(f.algebra, m.transpose().apply(f.coeffs), f.witness);
}

SweedlerFunctional sweedler_dual_morphism(const AlgebraMorphism& f, const SweedlerFunctional& b) {
    if (!b.algebra.same_structure(f.target))
        throw InputError("functional pullback: functional does not live on the morphism target");
    if (auto fail = validate_morphism(f).first_failure())
        throw ContractError("functional pullback: map is not a morphism (" + fail->name + ": " +
                            fail->witness + ")");
    IdealHandle witness = preimage_ideal(f, b.witness);
    return sweedler_wrap(f.source, f.map.transpose().apply(b.coeffs), witness);
}

} // namespace bihom
