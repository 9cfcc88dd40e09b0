#include "bihom/algebra.hpp"

#include <utility>

#include "bihom/error.hpp"

namespace bihom {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back("e" + std::to_string(i));
    return v;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
    std::vector<std::string> v;
    v.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) v.push_back(x + "⊗" + y);
    return v;
}

FDBiHomAlgebra::FDBiHomAlgebra(std::size_t dim, std::vector<std::string> basis_labels,
                               Matrix mu, Matrix alpha, Matrix beta)
    : dim_(dim),
      labels_(std::move(basis_labels)),
      mu_(std::move(mu)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_)
        throw InputError("algebra: " + std::to_string(labels_.size()) + " labels for dimension " +
                         std::to_string(dim_));
    if (mu_.rows() != dim_ || mu_.cols() != dim_ * dim_)
        throw InputError("algebra: mu must be dim x dim^2");
    if (alpha_.rows() != dim_ || alpha_.cols() != dim_)
        throw InputError("algebra: alpha must be dim x dim");
    if (beta_.rows() != dim_ || beta_.cols() != dim_)
        throw InputError("algebra: beta must be dim x dim");
}

Vec FDBiHomAlgebra::basis_vec(std::size_t i) const {
    Vec v(dim_);
    v[i] = Rational(1);
    return v;
}

namespace {

std::string pair_witness(const FDBiHomAlgebra& a, std::size_t i, std::size_t j,
                         const std::string& lhs_name, const Vec& lhs,
                         const std::string& rhs_name, const Vec& rhs) {
    const auto& L = a.basis_labels();
    return "(g,h)=(" + L[i] + "," + L[j] + "): " + lhs_name + " = " +
           format_combination(lhs, L) + " but " + rhs_name + " = " + format_combination(rhs, L);
}

CheckResult check_twist_commutation(const std::string& first, const std::string& second,
                                    const Matrix& f, const Matrix& s,
                                    const std::vector<std::string>& labels) {
    Matrix fs = f * s;
    Matrix sf = s * f;
    if (fs == sf) return {"twist-commutation", true, ""};
    for (std::size_t j = 0; j < f.cols(); ++j) {
        if (fs.col(j) != sf.col(j)) {
            std::string w = "at " + labels[j] + ": " + first + "(" + second + "(" + labels[j] +
                            ")) = " + format_combination(fs.col(j), labels) + " but " + second +
                            "(" + first + "(" + labels[j] +
                            ")) = " + format_combination(sf.col(j), labels);
            return {"twist-commutation", false, w};
        }
    }
    return {"twist-commutation", false, "twists do not commute"};
}

/// Multiplicativity of an endomorphism m against the product mu, with the
/// check named `name` and the map called `map_name` in witnesses.
CheckResult check_endomorphism(const FDBiHomAlgebra& a, const Matrix& m, const std::string& name,
                               const std::string& map_name) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = m.apply(a.product(a.basis_vec(i), a.basis_vec(j)));
            Vec rhs = a.product(m.col(i), m.col(j));
            if (lhs != rhs)
                return {name, false,
                        pair_witness(a, i, j, map_name + "(g*h)", lhs,
                                     map_name + "(g)*" + map_name + "(h)", rhs)};
        }
    return {name, true, ""};
}

} // namespace

ValidationReport validate_algebra(const FDBiHomAlgebra& a) {
    ValidationReport r;
    const auto& L = a.basis_labels();
    std::size_t n = a.dim();

    r.checks.push_back(check_twist_commutation("alpha", "beta", a.alpha(), a.beta(), L));

    CheckResult assoc{"bihom-associativity", true, ""};
    for (std::size_t i = 0; i < n && assoc.passed; ++i)
        for (std::size_t j = 0; j < n && assoc.passed; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.product(a.alpha().col(i), a.product(a.basis_vec(j), a.basis_vec(k)));
                Vec rhs = a.product(a.product(a.basis_vec(i), a.basis_vec(j)), a.beta().col(k));
                if (lhs != rhs) {
                    assoc.passed = false;
                    assoc.witness = "(g,h,k)=(" + L[i] + "," + L[j] + "," + L[k] +
                                    "): alpha(g)*(h*k) = " + format_combination(lhs, L) +
                                    " but (g*h)*beta(k) = " + format_combination(rhs, L);
                    break;
                }
            }
    r.checks.push_back(assoc);

    r.checks.push_back(check_endomorphism(a, a.alpha(), "alpha-multiplicativity", "alpha"));
    r.checks.push_back(check_endomorphism(a, a.beta(), "beta-multiplicativity", "beta"));
    return r;
}

ValidationReport validate_morphism(const AlgebraMorphism& f) {
    if (f.map.rows() != f.target.dim() || f.map.cols() != f.source.dim())
        throw InputError("morphism: map must be target.dim x source.dim");
    ValidationReport r;
    const auto& SL = f.source.basis_labels();
    const auto& TL = f.target.basis_labels();
    std::size_t n = f.source.dim();

    CheckResult mult{"multiplicativity", true, ""};
    for (std::size_t i = 0; i < n && mult.passed; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = f.map.apply(f.source.product(f.source.basis_vec(i), f.source.basis_vec(j)));
            Vec rhs = f.target.product(f.map.col(i), f.map.col(j));
            if (lhs != rhs) {
                mult.passed = false;
                mult.witness = "(g,h)=(" + SL[i] + "," + SL[j] +
                               "): f(g*h) = " + format_combination(lhs, TL) +
                               " but f(g)*f(h) = " + format_combination(rhs, TL);
                break;
            }
        }
    r.checks.push_back(mult);

    auto intertwine = [&](const std::string& name, const Matrix& src_twist,
                          const Matrix& tgt_twist, const std::string& map_name) {
        Matrix lhs = f.map * src_twist;
        Matrix rhs = tgt_twist * f.map;
        if (lhs == rhs) {
            r.checks.push_back({name, true, ""});
            return;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (lhs.col(j) != rhs.col(j)) {
                r.checks.push_back({name, false,
                                    "at " + SL[j] + ": f(" + map_name + "(" + SL[j] +
                                        ")) = " + format_combination(lhs.col(j), TL) + " but " +
                                        map_name + "'(f(" + SL[j] +
                                        ")) = " + format_combination(rhs.col(j), TL)});
                return;
            }
    };
    intertwine("alpha-intertwining", f.source.alpha(), f.target.alpha(), "alpha");
    intertwine("beta-intertwining", f.source.beta(), f.target.beta(), "beta");
    return r;
}

AlgebraMorphism identity_morphism(const FDBiHomAlgebra& a) {
    return {a, a, Matrix::identity(a.dim())};
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (!g.source.same_structure(f.target))
        throw InputError("compose: inner algebras differ");
    return {f.source, g.target, g.map * f.map};
}

FDBiHomAlgebra yau_twist(const Matrix& assoc_mu, const Matrix& alpha, const Matrix& beta,
                         std::vector<std::string> basis_labels) {
    std::size_t n = assoc_mu.rows();
    if (alpha.rows() != n || alpha.cols() != n || beta.rows() != n || beta.cols() != n)
        throw InputError("twist: alpha and beta must be dim x dim");
    FDBiHomAlgebra core(n, basis_labels.empty() ? default_labels(n) : basis_labels, assoc_mu,
                        Matrix::identity(n), Matrix::identity(n));
    const auto& L = core.basis_labels();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = core.product(core.product(core.basis_vec(i), core.basis_vec(j)),
                                       core.basis_vec(k));
                Vec rhs = core.product(core.basis_vec(i),
                                       core.product(core.basis_vec(j), core.basis_vec(k)));
                if (lhs != rhs)
                    throw PreconditionError(
                        "core-associativity fails at (g,h,k)=(" + L[i] + "," + L[j] + "," + L[k] +
                        "): (g*h)*k = " + format_combination(lhs, L) +
                        " but g*(h*k) = " + format_combination(rhs, L));
            }

    CheckResult ca = check_endomorphism(core, alpha, "alpha-endomorphism", "alpha");
    if (!ca.passed) throw PreconditionError(ca.name + " fails: " + ca.witness);
    CheckResult cb = check_endomorphism(core, beta, "beta-endomorphism", "beta");
    if (!cb.passed) throw PreconditionError(cb.name + " fails: " + cb.witness);

    if (alpha * beta != beta * alpha)
        throw PreconditionError("twist-commutation fails: alpha and beta do not commute");

    return FDBiHomAlgebra(n, L, assoc_mu * kronecker(alpha, beta), alpha, beta);
}

ValidationReport check_ideal(const FDBiHomAlgebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim())
        throw InputError("ideal check: subspace ambient dimension does not match the algebra");
    ValidationReport r;
    const auto& L = a.basis_labels();

    auto absorb = [&](bool left) {
        std::string name = left ? "left-absorption" : "right-absorption";
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t t = 0; t < s.dim(); ++t) {
                Vec v = s.basis().row(t);
                Vec p = left ? a.product(a.basis_vec(i), v) : a.product(v, a.basis_vec(i));
                if (!s.contains(p)) {
                    std::string prod = left ? L[i] + "*(" + format_combination(v, L) + ")"
                                            : "(" + format_combination(v, L) + ")*" + L[i];
                    return CheckResult{name, false,
                                       prod + " = " + format_combination(p, L) +
                                           " is outside the subspace"};
                }
            }
        return CheckResult{name, true, ""};
    };
    r.checks.push_back(absorb(true));
    r.checks.push_back(absorb(false));

    auto closure = [&](const Matrix& m, const std::string& name, const std::string& map_name) {
        for (std::size_t t = 0; t < s.dim(); ++t) {
            Vec v = s.basis().row(t);
            Vec image = m.apply(v);
            if (!s.contains(image))
                return CheckResult{name, false,
                                   map_name + "(" + format_combination(v, L) + ") = " +
                                       format_combination(image, L) + " is outside the subspace"};
        }
        return CheckResult{name, true, ""};
    };
    r.checks.push_back(closure(a.alpha(), "alpha-closure", "alpha"));
    r.checks.push_back(closure(a.beta(), "beta-closure", "beta"));
    return r;
}

IdealHandle make_ideal(const FDBiHomAlgebra& a, const Subspace& s) {
    ValidationReport r = check_ideal(a, s);
    if (auto f = r.first_failure())
        throw PreconditionError("not an ideal: " + f->name + ": " + f->witness);
    return IdealHandle{a, s, true, true, a.dim() - s.dim()};
}

IdealHandle ideal_closure(const FDBiHomAlgebra& a, const std::vector<Vec>& generators) {
    Subspace current = Subspace::span(a.dim(), Matrix::from_rows(generators, a.dim()));
    for (std::size_t pass = 0; pass <= a.dim(); ++pass) {
        std::vector<Vec> next;
        for (std::size_t t = 0; t < current.dim(); ++t) {
            Vec v = current.basis().row(t);
            next.push_back(v);
            for (std::size_t i = 0; i < a.dim(); ++i) {
                next.push_back(a.product(a.basis_vec(i), v));
                next.push_back(a.product(v, a.basis_vec(i)));
            }
            next.push_back(a.alpha().apply(v));
            next.push_back(a.beta().apply(v));
        }
        Subspace grown = Subspace::span(a.dim(), Matrix::from_rows(next, a.dim()));
        if (grown.dim() == current.dim()) break;
        current = grown;
    }
    return make_ideal(a, current);
}

IdealHandle intersect_ideals(const IdealHandle& j, const IdealHandle& h) {
    if (!j.algebra.same_structure(h.algebra))
        throw InputError("ideal intersection: different parent algebras");
    return make_ideal(j.algebra, intersect(j.subspace, h.subspace));
}

IdealHandle preimage_ideal(const AlgebraMorphism& f, const IdealHandle& j) {
    if (!j.algebra.same_structure(f.target))
        throw InputError("ideal preimage: ideal does not live in the morphism target");
    if (!j.absorbing || !j.twist_closed)
        throw ContractError("ideal preimage: ideal handle is not certified");
    if (auto fail = validate_morphism(f).first_failure())
        throw ContractError("ideal preimage: map is not a morphism (" + fail->name + ": " +
                            fail->witness + ")");
    QuotientData qd = quotient(j.subspace);
    Subspace pre = kernel_basis(qd.projection * f.map);
    return make_ideal(f.source, pre);
}

QuotientAlgebra quotient_algebra(const FDBiHomAlgebra& a, const IdealHandle& j) {
    if (!j.algebra.same_structure(a))
        throw InputError("quotient: ideal belongs to a different algebra");
    if (!j.absorbing || !j.twist_closed)
        throw ContractError("quotient: ideal handle is not certified");

    QuotientData qd = quotient(j.subspace);
    const Matrix& p = qd.projection;
    const Matrix& s = qd.section;
    std::size_t q = qd.codim();

    // Section columns are standard basis vectors at the complement positions,
    // so each quotient basis vector inherits one surviving source label.
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < q; ++t) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!s.at(i, t).is_zero()) idx = i;
        labels.push_back("[" + a.basis_labels()[idx] + "]");
    }

    FDBiHomAlgebra qa(q, labels, p * a.mu() * kronecker(s, s), p * a.alpha() * s,
                      p * a.beta() * s);
    AlgebraMorphism pi{a, qa, p};
    return QuotientAlgebra{qa, pi, qd};
}

AlgebraMorphism factor_through_quotient(const AlgebraMorphism& f, const AlgebraMorphism& pi) {
    if (!f.source.same_structure(pi.source))
        throw InputError("factorization: morphisms have different sources");

    Subspace ker_pi = kernel_basis(pi.map);
    for (std::size_t t = 0; t < ker_pi.dim(); ++t) {
        Vec v = ker_pi.basis().row(t);
        if (!vec_is_zero(f.map.apply(v)))
            throw PreconditionError("factorization: kernel vector " +
                                    format_combination(v, f.source.basis_labels()) +
                                    " of the projection is not killed by the map");
    }

    auto r = right_inverse(pi.map);
    if (!r) throw PreconditionError("factorization: the projection is not surjective");
    return AlgebraMorphism{pi.target, f.target, f.map * *r};
}

} // namespace bihom
