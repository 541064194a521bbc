#include "amice/rational.hpp"

#include <cctype>

namespace amice {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_text(text)) throw schema_error("unparsable rational: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw schema_error("unparsable rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw schema_error("zero denominator in '" + text + "'");
    return make_rational(Integer(num), d);
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string integer_string(const Integer& n) { return n.get_str(); }

Integer parse_integer(const std::string& text) {
    if (!valid_integer_text(text)) throw schema_error("unparsable integer: '" + text + "'");
    return Integer(text);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& top, unsigned long k) {
    if (k == 0) return 1;
    Integer num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= top - static_cast<long>(i);
    Integer r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return r;
}

Integer trinomial(unsigned long i, unsigned long j, unsigned long k) {
    Integer r = factorial(i + j + k);
    Integer d = factorial(i) * factorial(j) * factorial(k);
    Integer q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp > 0) return Rational(0);
        throw domain_error("0 raised to a negative power");
    }
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return exp > 0 ? make_rational(num, den) : make_rational(den, num);
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

unsigned long padic_valuation_int(const Integer& n, unsigned long p) {
    if (n == 0) throw domain_error("valuation of zero");
    Integer rest, prime(p);
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
}

long padic_valuation_rat(const Rational& q, unsigned long p) {
    if (q == 0) throw domain_error("valuation of zero");
    return static_cast<long>(padic_valuation_int(q.get_num(), p)) -
           static_cast<long>(padic_valuation_int(q.get_den(), p));
}

std::vector<std::pair<Integer, unsigned long>> factorize(Integer n) {
    if (n <= 0) throw domain_error("factorize expects a positive integer");
    std::vector<std::pair<Integer, unsigned long>> out;
    auto strip = [&](const Integer& p) {
        if (n % p != 0) return;
        Integer rest;
        unsigned long e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        n = rest;
        out.emplace_back(p, e);
    };
    strip(2);
    for (Integer p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

NormValue::NormValue(Rational v) : finite_(true), value_(std::move(v)) {
    if (value_ < 0) throw domain_error("norm values are nonnegative");
}

NormValue NormValue::infinity() {
    NormValue v;
    v.finite_ = false;
    return v;
}

const Rational& NormValue::value() const {
    if (!finite_) throw domain_error("infinite norm value has no finite representation");
    return value_;
}

NormValue NormValue::operator+(const NormValue& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return NormValue(value_ + o.value_);
}

NormValue NormValue::operator*(const NormValue& o) const {
    // 0 * inf is never formed by the norms in scope; treat it as inf-absorbing.
    if (!finite_ || !o.finite_) return infinity();
    return NormValue(value_ * o.value_);
}

bool NormValue::operator==(const NormValue& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
}

bool NormValue::operator<(const NormValue& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return value_ < o.value_;
}

bool NormValue::operator<=(const NormValue& o) const { return *this < o || *this == o; }

std::string NormValue::str() const { return finite_ ? rational_string(value_) : "inf"; }

NormValue pow_norm(const NormValue& base, unsigned long exp) {
    if (exp == 0) return NormValue(Rational(1));
    if (!base.is_finite()) return NormValue::infinity();
    return NormValue(pow_rational(base.value(), static_cast<long>(exp)));
}

} // namespace amice
