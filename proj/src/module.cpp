#include "bihom/module.hpp"

#include <utility>

#include "bihom/error.hpp"

namespace bihom {

namespace {

std::vector<std::string> module_labels(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back("m" + std::to_string(i));
    return v;
}

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

void require_certified(const IdealHandle& j, const std::string& where) {
    if (!j.absorbing || !j.twist_closed)
        throw ContractError(where + ": ideal handle is not certified");
}

void require_surjective_beta(const FDBiHomAlgebra& a, const std::string& where) {
    std::size_t r = rank(a.beta());
    if (r != a.dim())
        throw PreconditionError(
            where + ": beta of the base algebra is not surjective (rank " + std::to_string(r) +
            " of " + std::to_string(a.dim()) +
            "); without surjectivity the action need not push M*J*G back into M*J");
}

/// Annihilation of the product submodule M*J of the witness, recomputed
/// from the ideal. Failures name the offending submodule basis vector.
void require_submodule_annihilation(const FDBiHomModule& m, const Vec& coeffs,
                                    const IdealHandle& j, const std::string& where,
                                    bool contract) {
    Subspace mj = product_submodule(m, j);
    for (std::size_t t = 0; t < mj.dim(); ++t) {
        Vec v = mj.basis().row(t);
        if (!dot(coeffs, v).is_zero()) {
            std::string msg = where + ": functional does not annihilate the product-submodule "
                                      "vector " +
                              format_combination(v, m.basis_labels());
            if (contract) throw ContractError(msg);
            throw PreconditionError(msg);
        }
    }
}

} // namespace

FDBiHomModule::FDBiHomModule(FDBiHomAlgebra algebra, std::size_t dim_m,
                             std::vector<std::string> basis_labels, Matrix rho, Matrix kappa,
                             Matrix tau)
    : algebra_(std::move(algebra)),
      dim_m_(dim_m),
      labels_(std::move(basis_labels)),
      rho_(std::move(rho)),
      kappa_(std::move(kappa)),
      tau_(std::move(tau)) {
    if (labels_.empty()) labels_ = module_labels(dim_m_);
    if (labels_.size() != dim_m_)
        throw InputError("module: " + std::to_string(labels_.size()) + " labels for dimension " +
                         std::to_string(dim_m_));
    if (rho_.rows() != dim_m_ || rho_.cols() != dim_m_ * algebra_.dim())
        throw InputError("module: rho must be dim_m x (dim_m*dim_g)");
    if (kappa_.rows() != dim_m_ || kappa_.cols() != dim_m_)
        throw InputError("module: kappa must be dim_m x dim_m");
    if (tau_.rows() != dim_m_ || tau_.cols() != dim_m_)
        throw InputError("module: tau must be dim_m x dim_m");
}

Vec FDBiHomModule::basis_vec(std::size_t p) const {
    Vec v(dim_m_);
    v[p] = Rational(1);
    return v;
}

ValidationReport validate_module(const FDBiHomModule& m) {
    ValidationReport r;
    const FDBiHomAlgebra& a = m.algebra();
    const auto& ML = m.basis_labels();
    const auto& GL = a.basis_labels();
    std::size_t dm = m.dim_m();
    std::size_t n = a.dim();

    r.checks.push_back(compare_maps("twist-commutation", m.kappa() * m.tau(),
                                    m.tau() * m.kappa(), ML, ML, "kappa(tau(.))",
                                    "tau(kappa(.))"));

    CheckResult assoc{"bihom-associativity", true, ""};
    for (std::size_t p = 0; p < dm && assoc.passed; ++p)
        for (std::size_t j = 0; j < n && assoc.passed; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = m.act(m.act(m.basis_vec(p), a.basis_vec(j)), a.beta().col(k));
                Vec rhs = m.act(m.kappa().col(p), a.product(a.basis_vec(j), a.basis_vec(k)));
                if (lhs != rhs) {
                    assoc.passed = false;
                    assoc.witness = "(m,g,h)=(" + ML[p] + "," + GL[j] + "," + GL[k] +
                                    "): (m*g)*beta(h) = " + format_combination(lhs, ML) +
                                    " but kappa(m)*(g*h) = " + format_combination(rhs, ML);
                    break;
                }
            }
    r.checks.push_back(assoc);

    auto exchange = [&](const Matrix& mod_twist, const Matrix& alg_twist, const std::string& name,
                        const std::string& mod_name, const std::string& alg_name) {
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t j = 0; j < n; ++j) {
                Vec lhs = m.act(mod_twist.col(p), alg_twist.col(j));
                Vec rhs = mod_twist.apply(m.act(m.basis_vec(p), a.basis_vec(j)));
                if (lhs != rhs)
                    return CheckResult{name, false,
                                       "(m,g)=(" + ML[p] + "," + GL[j] + "): " + mod_name + "(m)*" +
                                           alg_name + "(g) = " + format_combination(lhs, ML) +
                                           " but " + mod_name +
                                           "(m*g) = " + format_combination(rhs, ML)};
            }
        return CheckResult{name, true, ""};
    };
    r.checks.push_back(exchange(m.kappa(), a.alpha(), "kappa-multiplicativity", "kappa", "alpha"));
    r.checks.push_back(exchange(m.tau(), a.beta(), "tau-multiplicativity", "tau", "beta"));
    return r;
}

FDBiHomModule regular_module(const FDBiHomAlgebra& a) {
    return FDBiHomModule(a, a.dim(), a.basis_labels(), a.mu(), a.alpha(), a.beta());
}

FDBiHomComodule::FDBiHomComodule(FDBiHomCoalgebra coalgebra, std::size_t dim_a,
                                 std::vector<std::string> basis_labels, Matrix gamma, Matrix omega,
                                 Matrix theta)
    : coalgebra_(std::move(coalgebra)),
      dim_a_(dim_a),
      labels_(std::move(basis_labels)),
      gamma_(std::move(gamma)),
      omega_(std::move(omega)),
      theta_(std::move(theta)) {
    if (labels_.empty()) labels_ = module_labels(dim_a_);
    if (labels_.size() != dim_a_)
        throw InputError("comodule: " + std::to_string(labels_.size()) +
                         " labels for dimension " + std::to_string(dim_a_));
    if (gamma_.rows() != dim_a_ * coalgebra_.dim() || gamma_.cols() != dim_a_)
        throw InputError("comodule: gamma must be (dim_a*dim_c) x dim_a");
    if (omega_.rows() != dim_a_ || omega_.cols() != dim_a_)
        throw InputError("comodule: omega must be dim_a x dim_a");
    if (theta_.rows() != dim_a_ || theta_.cols() != dim_a_)
        throw InputError("comodule: theta must be dim_a x dim_a");
}

ValidationReport validate_comodule(const FDBiHomComodule& a) {
    ValidationReport r;
    const FDBiHomCoalgebra& c = a.coalgebra();
    const auto& AL = a.basis_labels();
    const auto& CL = c.basis_labels();
    auto AC = tensor_labels(AL, CL);
    auto ACC = tensor_labels(AC, CL);

    r.checks.push_back(compare_maps("twist-commutation", a.omega() * a.theta(),
                                    a.theta() * a.omega(), AL, AL, "omega(theta(.))",
                                    "theta(omega(.))"));
    r.checks.push_back(compare_maps("bihom-coassociativity",
                                    kronecker(a.gamma(), c.psi()) * a.gamma(),
                                    kronecker(a.theta(), c.delta()) * a.gamma(), AL, ACC,
                                    "(gamma⊗psi)gamma", "(theta⊗delta)gamma"));
    r.checks.push_back(compare_maps("omega-comultiplicativity",
                                    kronecker(a.omega(), c.psi()) * a.gamma(),
                                    a.gamma() * a.omega(), AL, AC, "(omega⊗psi)gamma",
                                    "gamma(omega(.))"));
    r.checks.push_back(compare_maps("theta-comultiplicativity",
                                    kronecker(a.theta(), c.phi()) * a.gamma(),
                                    a.gamma() * a.theta(), AL, AC, "(theta⊗phi)gamma",
                                    "gamma(theta(.))"));
    return r;
}

ValidationReport validate_module_morphism(const ModuleMorphism& s) {
    if (!s.source.algebra().same_structure(s.target.algebra()))
        throw InputError("module morphism: the modules have different base algebras");
    if (s.map.rows() != s.target.dim_m() || s.map.cols() != s.source.dim_m())
        throw InputError("module morphism: map must be target.dim_m x source.dim_m");
    ValidationReport r;
    const FDBiHomAlgebra& a = s.source.algebra();
    const auto& SL = s.source.basis_labels();
    const auto& TL = s.target.basis_labels();

    CheckResult act{"action-compatibility", true, ""};
    for (std::size_t p = 0; p < s.source.dim_m() && act.passed; ++p)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = s.map.apply(s.source.act(s.source.basis_vec(p), a.basis_vec(j)));
            Vec rhs = s.target.act(s.map.col(p), a.basis_vec(j));
            if (lhs != rhs) {
                act.passed = false;
                act.witness = "(m,g)=(" + SL[p] + "," + a.basis_labels()[j] +
                              "): sigma(m*g) = " + format_combination(lhs, TL) +
                              " but sigma(m)*g = " + format_combination(rhs, TL);
                break;
            }
        }
    r.checks.push_back(act);

    r.checks.push_back(compare_maps("kappa-intertwining", s.map * s.source.kappa(),
                                    s.target.kappa() * s.map, SL, TL, "sigma(kappa(.))",
                                    "kappa'(sigma(.))"));
    r.checks.push_back(compare_maps("tau-intertwining", s.map * s.source.tau(),
                                    s.target.tau() * s.map, SL, TL, "sigma(tau(.))",
                                    "tau'(sigma(.))"));
    return r;
}

ValidationReport validate_comodule_morphism(const ComoduleMorphism& f) {
    if (!f.source.coalgebra().same_structure(f.target.coalgebra()))
        throw InputError("comodule morphism: the comodules have different base coalgebras");
    if (f.map.rows() != f.target.dim_a() || f.map.cols() != f.source.dim_a())
        throw InputError("comodule morphism: map must be target.dim_a x source.dim_a");
    ValidationReport r;
    const FDBiHomCoalgebra& c = f.source.coalgebra();
    const auto& SL = f.source.basis_labels();
    const auto& TL = f.target.basis_labels();
    auto TC = tensor_labels(TL, c.basis_labels());

    r.checks.push_back(compare_maps("coaction-compatibility",
                                    f.target.gamma() * f.map,
                                    kronecker(f.map, Matrix::identity(c.dim())) * f.source.gamma(),
                                    SL, TC, "gamma'(f(.))", "(f⊗id)gamma"));
    r.checks.push_back(compare_maps("omega-intertwining", f.map * f.source.omega(),
                                    f.target.omega() * f.map, SL, TL, "f(omega(.))",
                                    "omega'(f(.))"));
    r.checks.push_back(compare_maps("theta-intertwining", f.map * f.source.theta(),
                                    f.target.theta() * f.map, SL, TL, "f(theta(.))",
                                    "theta'(f(.))"));
    return r;
}

FDBiHomComodule dual_comodule(const FDBiHomModule& m) {
    if (auto fail = validate_module(m).first_failure())
        throw ContractError("dual comodule: module is not valid (" + fail->name + ": " +
                            fail->witness + ")");
    FDBiHomCoalgebra c = dual_coalgebra(m.algebra());
    std::vector<std::string> labels;
    labels.reserve(m.dim_m());
    for (const auto& l : m.basis_labels()) labels.push_back(l + "*");
    return FDBiHomComodule(std::move(c), m.dim_m(), std::move(labels), m.rho().transpose(),
                           m.tau().transpose(), m.kappa().transpose());
}

Subspace product_submodule(const FDBiHomModule& m, const IdealHandle& j) {
    std::vector<Vec> products;
    for (std::size_t p = 0; p < m.dim_m(); ++p)
        for (std::size_t t = 0; t < j.subspace.dim(); ++t)
            products.push_back(m.act(m.basis_vec(p), j.subspace.basis().row(t)));
    return Subspace::span(m.dim_m(), Matrix::from_rows(products, m.dim_m()));
}

ModuleSweedlerFunctional module_sweedler_wrap(const FDBiHomModule& m, const Vec& coeffs,
                                              const IdealHandle& j) {
    if (coeffs.size() != m.dim_m())
        throw InputError("module functional: coefficient count does not match the module "
                         "dimension");
    if (!j.algebra.same_structure(m.algebra()))
        throw InputError("module functional: witness ideal belongs to a different algebra");
    require_certified(j, "module functional");
    require_submodule_annihilation(m, coeffs, j, "module functional", false);
    return ModuleSweedlerFunctional{m, coeffs, j};
}

ModuleSweedlerFunctional module_sweedler_add(const ModuleSweedlerFunctional& x,
                                             const ModuleSweedlerFunctional& y) {
    if (!x.mod.same_structure(y.mod))
        throw InputError("module functional sum: different modules");
    IdealHandle meet = intersect_ideals(x.witness, y.witness);
    return module_sweedler_wrap(x.mod, vec_add(x.coeffs, y.coeffs), meet);
}

ModuleSweedlerCoaction module_sweedler_coaction(const ModuleSweedlerFunctional& xi) {
    const FDBiHomModule& m = xi.mod;
    const FDBiHomAlgebra& a = m.algebra();
    require_surjective_beta(a, "coaction");
    require_certified(xi.witness, "coaction");
    require_submodule_annihilation(m, xi.coeffs, xi.witness, "coaction", true);

    std::size_t dm = m.dim_m();
    std::size_t n = a.dim();
    QuotientData qm = quotient(product_submodule(m, xi.witness));
    QuotientData qg = quotient(xi.witness.subspace);
    std::size_t rows_m = qm.codim();
    std::size_t rows_g = qg.codim();

    // descend the functional and the action to the pair of quotients
    Vec xibar = qm.section.transpose().apply(xi.coeffs);
    Matrix rho_bar = qm.projection * m.rho() * kronecker(qm.section, qg.section);
    Vec k = rho_bar.transpose().apply(xibar);

    ModuleSweedlerCoaction out;
    out.tensor_form = Vec(dm * n);
    for (std::size_t i = 0; i < rows_m; ++i)
        for (std::size_t j = 0; j < rows_g; ++j) {
            const Rational& kij = k[i * rows_g + j];
            if (kij.is_zero()) continue;
            Vec left = vec_scale(kij, qm.projection.row(i));
            Vec right = qg.projection.row(j);
            out.pairs.emplace_back(module_sweedler_wrap(m, left, xi.witness),
                                   sweedler_wrap(a, right, xi.witness));
            out.tensor_form = vec_add(out.tensor_form, tensor(left, right));
        }
    return out;
}

ModuleSweedlerFunctional dual_module_morphism(const ModuleMorphism& sigma,
                                              const ModuleSweedlerFunctional& xi) {
    if (!xi.mod.same_structure(sigma.target))
        throw InputError("module functional pullback: functional does not live on the morphism "
                         "target");
    require_surjective_beta(sigma.source.algebra(), "module functional pullback");
    if (auto fail = validate_module_morphism(sigma).first_failure())
        throw ContractError("module functional pullback: map is not a module morphism (" +
                            fail->name + ": " + fail->witness + ")");
    return module_sweedler_wrap(sigma.source, sigma.map.transpose().apply(xi.coeffs), xi.witness);
}

} // namespace bihom
