#include "bihom/rational.hpp"

#include <ostream>

#include "bihom/error.hpp"

namespace bihom {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw InputError("cannot parse rational '" + text + "'");
    if (v.get_den() == 0)
        throw InputError("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return value_.get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(unsigned long b) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), b);
    mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), b);
    r.canonicalize();
    return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(unsigned n) {
    Rational f(1);
    for (unsigned i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
    return f;
}

} // namespace bihom
