#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "amice/errors.hpp"

namespace amice {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading '-'). Throws schema_error on bad input.
Rational parse_rational(const std::string& text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string rational_string(const Rational& q);
std::string integer_string(const Integer& n);

Integer parse_integer(const std::string& text);

Integer factorial(unsigned long n);

/// binom(top, k) for an arbitrary integer top, via the falling factorial.
Integer binomial(const Integer& top, unsigned long k);

/// n! / (i! j! k!) with i + j + k = n.
Integer trinomial(unsigned long i, unsigned long j, unsigned long k);

/// base^exp for integer exp (negative allowed; base must be nonzero then).
Rational pow_rational(const Rational& base, long exp);

Integer pow_integer(const Integer& base, unsigned long exp);

/// Multiplicity of p in n; n must be nonzero.
unsigned long padic_valuation_int(const Integer& n, unsigned long p);

/// v_p of a nonzero rational (negative when p divides the denominator).
long padic_valuation_rat(const Rational& q, unsigned long p);

/// Prime factorization by trial division, as (prime, exponent) pairs. n must be positive.
std::vector<std::pair<Integer, unsigned long>> factorize(Integer n);

/// Exact value in [0, +inf]; the codomain of every norm computation.
class NormValue {
public:
    NormValue() : finite_(true), value_(0) {}
    NormValue(Rational v);     // NOLINT: implicit by design
    NormValue(long v) : NormValue(Rational(v)) {}

    static NormValue infinity();

    bool is_finite() const { return finite_; }
    /// Throws domain_error when infinite.
    const Rational& value() const;

    NormValue operator+(const NormValue& o) const;
    NormValue operator*(const NormValue& o) const;

    bool operator==(const NormValue& o) const;
    bool operator!=(const NormValue& o) const { return !(*this == o); }
    bool operator<(const NormValue& o) const;
    bool operator<=(const NormValue& o) const;
    bool operator>(const NormValue& o) const { return o < *this; }
    bool operator>=(const NormValue& o) const { return o <= *this; }

    friend NormValue max(const NormValue& a, const NormValue& b) { return a < b ? b : a; }

    std::string str() const;

private:
    bool finite_;
    Rational value_;
};

NormValue pow_norm(const NormValue& base, unsigned long exp);

} // namespace amice
