#include "bihom/poly.hpp"

#include <optional>
#include <utility>

#include "bihom/error.hpp"

namespace bihom {

std::size_t total_degree(const MultiIndex& m) {
    std::size_t d = 0;
    for (std::size_t e : m) d += e;
    return d;
}

MultiIndex add_indices(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw InputError("multi-index sum: lengths differ");
    MultiIndex out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::string index_str(const MultiIndex& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

std::string monomial_str(const MultiIndex& m) {
    if (total_degree(m) == 0) return "1";
    return "x^" + index_str(m);
}

namespace {

void enumerate_bounded(std::size_t vars, std::size_t bound, std::size_t pos, MultiIndex& current,
                       std::vector<MultiIndex>& out, bool exact) {
    if (pos == vars) {
        if (!exact || bound == 0) out.push_back(current);
        return;
    }
    for (std::size_t t = 0; t <= bound; ++t) {
        current[pos] = t;
        enumerate_bounded(vars, bound - t, pos + 1, current, out, exact);
    }
    current[pos] = 0;
}

} // namespace

std::vector<MultiIndex> monomials_up_to(std::size_t vars, std::size_t bound) {
    std::vector<MultiIndex> out;
    MultiIndex current(vars, 0);
    enumerate_bounded(vars, bound, 0, current, out, false);
    return out;
}

std::vector<MultiIndex> monomials_of_degree(std::size_t vars, std::size_t degree) {
    std::vector<MultiIndex> out;
    MultiIndex current(vars, 0);
    enumerate_bounded(vars, degree, 0, current, out, true);
    return out;
}

Poly Poly::monomial(const MultiIndex& m, const Rational& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

Rational Poly::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void Poly::add_term(const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Poly::coeff_sum() const {
    Rational s;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [m, cm] : a.terms())
        for (const auto& [n, cn] : b.terms()) out.add_term(add_indices(m, n), cm * cn);
    return out;
}

namespace {

std::string term_str(const Rational& c, const std::string& unit_name) {
    if (c == Rational(1)) return unit_name;
    if (c == Rational(-1)) return "-" + unit_name;
    return c.str() + "*" + unit_name;
}

template <typename Terms, typename Name>
std::string combination_str(const Terms& terms, Name name) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        if (!s.empty()) s += c > Rational(0) ? " + " : " - ";
        else if (c < Rational(0)) s += "-";
        Rational mag = c < Rational(0) ? -c : c;
        s += term_str(mag, name(m));
    }
    return s;
}

} // namespace

std::string poly_str(const Poly& p) {
    return combination_str(p.terms(), [](const MultiIndex& m) { return monomial_str(m); });
}

Rational DualFunctional::coeff(const MultiIndex& n) const {
    auto it = terms.find(n);
    return it == terms.end() ? Rational() : it->second;
}

void DualFunctional::add_term(const MultiIndex& n, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Rational evaluate(const DualFunctional& f, const Poly& p) {
    Rational s;
    for (const auto& [n, c] : f.terms) s += c * p.coeff(n);
    return s;
}

std::string functional_str(const DualFunctional& f) {
    return combination_str(f.terms, [](const MultiIndex& n) { return "d" + index_str(n); });
}

PolyBiHomAlgebra::PolyBiHomAlgebra(std::size_t vars, Matrix a, Matrix b)
    : vars_(vars), a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != vars_ || a_.cols() != vars_ || b_.rows() != vars_ || b_.cols() != vars_)
        throw InputError("polynomial algebra: substitution matrices must be r x r");
    if (a_ * b_ != b_ * a_)
        throw PreconditionError("polynomial algebra: the substitution matrices do not commute");
}

namespace {

void expand_columns(const Matrix& p, std::size_t vars, const MultiIndex& m, std::size_t k,
                    const Rational& coeff, MultiIndex& expo, Poly& out);

/// Distribute the remaining exponent of column k over the variables from l
/// on; partial carries the product of p_lk^t / t! factors chosen so far.
void spread_column(const Matrix& p, std::size_t vars, const MultiIndex& m, std::size_t k,
                   std::size_t l, std::size_t remaining, const Rational& partial,
                   MultiIndex& expo, Poly& out) {
    if (l == vars) {
        if (remaining == 0) expand_columns(p, vars, m, k + 1, partial, expo, out);
        return;
    }
    Rational term = partial;
    for (std::size_t t = 0; t <= remaining; ++t) {
        if (t > 0) {
            if (p.at(l, k).is_zero()) break;
            term = term * p.at(l, k) / Rational(static_cast<long>(t));
        }
        expo[l] += t;
        spread_column(p, vars, m, k, l + 1, remaining - t, term, expo, out);
        expo[l] -= t;
    }
}

void expand_columns(const Matrix& p, std::size_t vars, const MultiIndex& m, std::size_t k,
                    const Rational& coeff, MultiIndex& expo, Poly& out) {
    if (k == vars) {
        out.add_term(expo, coeff);
        return;
    }
    spread_column(p, vars, m, k, 0, m[k], coeff * factorial(static_cast<unsigned>(m[k])), expo,
                  out);
}

const Matrix& pick(const PolyBiHomAlgebra& alg, PolyTwist which) {
    return which == PolyTwist::A ? alg.a() : alg.b();
}

void require_index(const PolyBiHomAlgebra& alg, const MultiIndex& m) {
    if (m.size() != alg.vars())
        throw InputError("multi-index has " + std::to_string(m.size()) + " entries for " +
                         std::to_string(alg.vars()) + " variables");
}

} // namespace

Poly twist_apply(const PolyBiHomAlgebra& alg, PolyTwist which, const MultiIndex& m) {
    require_index(alg, m);
    Poly out;
    MultiIndex expo(alg.vars(), 0);
    expand_columns(pick(alg, which), alg.vars(), m, 0, Rational(1), expo, out);
    return out;
}

Poly twist_apply_by_powers(const PolyBiHomAlgebra& alg, PolyTwist which, const MultiIndex& m) {
    require_index(alg, m);
    const Matrix& p = pick(alg, which);
    Poly out = Poly::monomial(MultiIndex(alg.vars(), 0));
    for (std::size_t k = 0; k < alg.vars(); ++k) {
        Poly linear;
        for (std::size_t l = 0; l < alg.vars(); ++l) {
            MultiIndex e(alg.vars(), 0);
            e[l] = 1;
            linear.add_term(e, p.at(l, k));
        }
        for (std::size_t t = 0; t < m[k]; ++t) out = out * linear;
    }
    return out;
}

Poly twist_apply_poly(const PolyBiHomAlgebra& alg, PolyTwist which, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Poly image = twist_apply(alg, which, m);
        for (const auto& [n, d] : image.terms()) out.add_term(n, c * d);
    }
    return out;
}

Poly twisted_product(const PolyBiHomAlgebra& alg, const MultiIndex& m, const MultiIndex& n) {
    return twist_apply(alg, PolyTwist::A, m) * twist_apply(alg, PolyTwist::B, n);
}

Poly twisted_multiply(const PolyBiHomAlgebra& alg, const Poly& p, const Poly& q) {
    return twist_apply_poly(alg, PolyTwist::A, p) * twist_apply_poly(alg, PolyTwist::B, q);
}

CofiniteMonomialIdeal::CofiniteMonomialIdeal(Kind kind, std::size_t vars, std::size_t degree,
                                             MultiIndex bounds)
    : kind_(kind), vars_(vars), degree_(degree), bounds_(std::move(bounds)) {}

CofiniteMonomialIdeal CofiniteMonomialIdeal::total_degree(std::size_t vars, std::size_t degree) {
    return CofiniteMonomialIdeal(Kind::TotalDegree, vars, degree, MultiIndex());
}

CofiniteMonomialIdeal CofiniteMonomialIdeal::staircase(MultiIndex bounds) {
    std::size_t vars = bounds.size();
    return CofiniteMonomialIdeal(Kind::Staircase, vars, 0, std::move(bounds));
}

std::size_t CofiniteMonomialIdeal::degree() const {
    if (kind_ != Kind::TotalDegree) throw InputError("ideal: no degree on a staircase ideal");
    return degree_;
}

const MultiIndex& CofiniteMonomialIdeal::bounds() const {
    if (kind_ != Kind::Staircase) throw InputError("ideal: no bounds on a total-degree ideal");
    return bounds_;
}

bool CofiniteMonomialIdeal::member(const MultiIndex& n) const {
    if (n.size() != vars_)
        throw InputError("ideal membership: multi-index has " + std::to_string(n.size()) +
                         " entries for " + std::to_string(vars_) + " variables");
    if (kind_ == Kind::TotalDegree) return bihom::total_degree(n) >= degree_;
    for (std::size_t i = 0; i < vars_; ++i)
        if (n[i] >= bounds_[i]) return true;
    return false;
}

std::vector<MultiIndex> CofiniteMonomialIdeal::complement() const {
    std::vector<MultiIndex> out;
    if (kind_ == Kind::TotalDegree) {
        if (degree_ == 0) return out;
        return monomials_up_to(vars_, degree_ - 1);
    }
    // box of exponents strictly below every staircase bound
    for (std::size_t i = 0; i < vars_; ++i)
        if (bounds_[i] == 0) return out;
    MultiIndex current(vars_, 0);
    while (true) {
        out.push_back(current);
        std::size_t pos = 0;
        while (pos < vars_) {
            if (++current[pos] < bounds_[pos]) break;
            current[pos] = 0;
            ++pos;
        }
        if (pos == vars_) break;
    }
    return out;
}

std::string CofiniteMonomialIdeal::str() const {
    if (kind_ == Kind::TotalDegree) return "TotalDegree(" + std::to_string(degree_) + ")";
    std::string s = "Staircase(";
    for (std::size_t i = 0; i < vars_; ++i) {
        if (i) s += ",";
        s += std::to_string(bounds_[i]);
    }
    return s + ")";
}

namespace {

/// First term of p outside the ideal, if any.
std::optional<MultiIndex> escaped_term(const Poly& p, const CofiniteMonomialIdeal& spec) {
    for (const auto& [n, c] : p.terms())
        if (!spec.member(n)) return n;
    return std::nullopt;
}

} // namespace

BoundedReport ideal_absorption_check(const PolyBiHomAlgebra& alg,
                                     const CofiniteMonomialIdeal& spec,
                                     std::size_t degree_bound) {
    if (spec.vars() != alg.vars())
        throw InputError("absorption check: ideal and algebra have different variable counts");

    ValidationReport r;
    std::vector<MultiIndex> all = monomials_up_to(alg.vars(), degree_bound);
    std::vector<MultiIndex> members;
    for (const auto& m : all)
        if (spec.member(m)) members.push_back(m);

    auto absorb = [&](bool member_on_right) {
        std::string name = member_on_right ? "left-absorption" : "right-absorption";
        for (const auto& v : members)
            for (const auto& m : all) {
                if (total_degree(v) + total_degree(m) > degree_bound) continue;
                Poly p = member_on_right ? twisted_product(alg, m, v)
                                         : twisted_product(alg, v, m);
                std::optional<MultiIndex> out = escaped_term(p, spec);
                if (out) {
                    std::string prod = member_on_right
                                           ? monomial_str(m) + "*" + monomial_str(v)
                                           : monomial_str(v) + "*" + monomial_str(m);
                    return CheckResult{name, false,
                                       prod + " contains " + monomial_str(*out) +
                                           " outside the ideal"};
                }
            }
        return CheckResult{name, true, ""};
    };
    r.checks.push_back(absorb(true));
    r.checks.push_back(absorb(false));

    auto closure = [&](PolyTwist which, const std::string& name, const std::string& map_name) {
        for (const auto& v : members) {
            std::optional<MultiIndex> out = escaped_term(twist_apply(alg, which, v), spec);
            if (out)
                return CheckResult{name, false,
                                   map_name + "(" + monomial_str(v) + ") contains " +
                                       monomial_str(*out) + " outside the ideal"};
        }
        return CheckResult{name, true, ""};
    };
    r.checks.push_back(closure(PolyTwist::A, "alpha-closure", "alpha"));
    r.checks.push_back(closure(PolyTwist::B, "beta-closure", "beta"));

    return BoundedReport{degree_bound, std::move(r)};
}

namespace {

DualFunctional dual_twist(const PolyBiHomAlgebra& alg, PolyTwist which,
                          const DualFunctional& f) {
    DualFunctional out;
    for (const auto& [n, c] : f.terms)
        for (const auto& m : monomials_of_degree(alg.vars(), total_degree(n))) {
            Rational a = twist_apply(alg, which, m).coeff(n);
            if (!a.is_zero()) out.add_term(m, c * a);
        }
    return out;
}

} // namespace

DualFunctional mu_on_dual(const PolyBiHomAlgebra& alg, const DualFunctional& f) {
    return dual_twist(alg, PolyTwist::A, f);
}

DualFunctional eta_on_dual(const PolyBiHomAlgebra& alg, const DualFunctional& f) {
    return dual_twist(alg, PolyTwist::B, f);
}

std::vector<std::pair<DualFunctional, DualFunctional>> delta_dual(const PolyBiHomAlgebra& alg,
                                                                  const MultiIndex& n) {
    require_index(alg, n);
    std::vector<std::pair<DualFunctional, DualFunctional>> out;
    MultiIndex i(n.size(), 0);
    while (true) {
        MultiIndex j(n.size());
        for (std::size_t k = 0; k < n.size(); ++k) j[k] = n[k] - i[k];
        DualFunctional di, dj;
        di.add_term(i, Rational(1));
        dj.add_term(j, Rational(1));
        out.emplace_back(mu_on_dual(alg, di), eta_on_dual(alg, dj));

        std::size_t pos = 0;
        while (pos < n.size()) {
            if (++i[pos] <= n[pos]) break;
            i[pos] = 0;
            ++pos;
        }
        if (pos == n.size()) break;
    }
    return out;
}

BoundedReport pairing_check(const PolyBiHomAlgebra& alg, const MultiIndex& n,
                            std::size_t degree_bound) {
    require_index(alg, n);
    auto pairs = delta_dual(alg, n);

    CheckResult c{"pairing", true, ""};
    std::vector<MultiIndex> all = monomials_up_to(alg.vars(), degree_bound);
    for (const auto& m : all) {
        for (const auto& k : all) {
            if (total_degree(m) + total_degree(k) > degree_bound) continue;
            Rational lhs;
            for (const auto& [left, right] : pairs) lhs += left.coeff(m) * right.coeff(k);
            Rational rhs = twisted_product(alg, m, k).coeff(n);
            if (lhs != rhs) {
                c.passed = false;
                c.witness = "at (" + monomial_str(m) + "," + monomial_str(k) +
                            "): comultiplication side = " + lhs.str() +
                            " but product side = " + rhs.str();
                break;
            }
        }
        if (!c.passed) break;
    }

    ValidationReport r;
    r.checks.push_back(c);
    return BoundedReport{degree_bound, std::move(r)};
}

BoundedReport coassoc_check(const PolyBiHomAlgebra& alg, const MultiIndex& n,
                            std::size_t degree_bound) {
    require_index(alg, n);

    CheckResult c{"coassociativity-pairing", true, ""};
    std::vector<MultiIndex> all = monomials_up_to(alg.vars(), degree_bound);
    for (const auto& a : all) {
        for (const auto& b : all) {
            for (const auto& k : all) {
                if (total_degree(a) + total_degree(b) + total_degree(k) > degree_bound) continue;
                Poly lhs = twisted_multiply(alg, twist_apply(alg, PolyTwist::A, a),
                                            twisted_product(alg, b, k));
                Poly rhs = twisted_multiply(alg, twisted_product(alg, a, b),
                                            twist_apply(alg, PolyTwist::B, k));
                Rational lv = lhs.coeff(n);
                Rational rv = rhs.coeff(n);
                if (lv != rv) {
                    c.passed = false;
                    c.witness = "at (" + monomial_str(a) + "," + monomial_str(b) + "," +
                                monomial_str(k) + "): alpha(x^a)*(x^b*x^c) pairs to " + lv.str() +
                                " but (x^a*x^b)*beta(x^c) pairs to " + rv.str();
                    break;
                }
            }
            if (!c.passed) break;
        }
        if (!c.passed) break;
    }

    ValidationReport r;
    r.checks.push_back(c);
    return BoundedReport{degree_bound, std::move(r)};
}

FiniteDualMembership functional_in_finite_dual(const PolyBiHomAlgebra& alg,
                                               const DualFunctional& f,
                                               const CofiniteMonomialIdeal& spec,
                                               std::size_t degree_bound) {
    BoundedReport absorption = ideal_absorption_check(alg, spec, degree_bound);
    if (auto fail = absorption.report.first_failure())
        throw ContractError("finite dual membership: " + spec.str() +
                            " is not certified as an ideal at bound " +
                            std::to_string(degree_bound) + " (" + fail->name + ": " +
                            fail->witness + ")");

    CheckResult c{"support-outside-ideal", true, ""};
    for (const auto& [n, coeff] : f.terms)
        if (spec.member(n)) {
            c.passed = false;
            c.witness = "the support monomial " + monomial_str(n) + " lies in " + spec.str();
            break;
        }

    FiniteDualMembership out;
    out.in_finite_dual = c.passed;
    out.degree_bound = degree_bound;
    out.report.checks.push_back(c);
    return out;
}

} // namespace bihom
