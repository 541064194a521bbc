#include "amice/coefficients.hpp"

#include <algorithm>

namespace amice {

namespace {

bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Integer prime_power(unsigned long p, long e) {
    if (e < 0) throw domain_error("negative prime power exponent");
    return pow_integer(Integer(p), static_cast<unsigned long>(e));
}

} // namespace

CoefficientModel CoefficientModel::padic_rational(unsigned long p) {
    if (!is_prime_ul(p)) throw domain_error("Qp requires a prime, got " + std::to_string(p));
    return {ModelKind::PAdicRational, p, 0};
}

CoefficientModel CoefficientModel::truncated_zp(unsigned long p, unsigned long prec) {
    if (!is_prime_ul(p)) throw domain_error("Zp requires a prime, got " + std::to_string(p));
    if (prec == 0) throw domain_error("Zp requires positive precision");
    return {ModelKind::TruncatedZp, p, prec};
}

CoefficientModel CoefficientModel::parse(const std::string& name) {
    if (name == "Z-trivial") return trivial_int();
    if (name == "Q-na") return sup_rational();
    if (name == "Q-arch") return arch_rational();
    auto parse_ul = [&](const std::string& s) -> unsigned long {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw schema_error("bad number '" + s + "' in model name '" + name + "'");
        }
    };
    if (name.rfind("Qp:", 0) == 0) return padic_rational(parse_ul(name.substr(3)));
    if (name.rfind("Zp:", 0) == 0) {
        const std::string rest = name.substr(3);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw schema_error("model '" + name + "' needs Zp:<p>:<prec>");
        return truncated_zp(parse_ul(rest.substr(0, colon)), parse_ul(rest.substr(colon + 1)));
    }
    throw schema_error("unknown coefficient model '" + name + "'");
}

std::string CoefficientModel::name() const {
    switch (kind) {
        case ModelKind::TrivialInt: return "Z-trivial";
        case ModelKind::SupRational: return "Q-na";
        case ModelKind::PAdicRational: return "Qp:" + std::to_string(prime);
        case ModelKind::ArchRational: return "Q-arch";
        case ModelKind::TruncatedZp:
            return "Zp:" + std::to_string(prime) + ":" + std::to_string(precision);
    }
    return "?";
}

// --- p-adic arithmetic -----------------------------------------------------

namespace {

void require_zp(const CoefficientModel& model) {
    if (model.kind != ModelKind::TruncatedZp) throw domain_error("operation requires a Zp model");
}

/// Builds a normalized value from an integer congruence: n known mod p^abs_prec.
PadicValue padic_normalize(const CoefficientModel& model, const Integer& n, long abs_prec) {
    PadicValue out;
    if (abs_prec <= 0) {
        out.zero = true;
        out.val = abs_prec;
        return out;
    }
    Integer mod = prime_power(model.prime, abs_prec);
    Integer r = n % mod;
    if (r < 0) r += mod;
    if (r == 0) {
        out.zero = true;
        out.val = abs_prec;
        return out;
    }
    const unsigned long v = padic_valuation_int(r, model.prime);
    out.zero = false;
    out.val = static_cast<long>(v);
    out.rel = static_cast<unsigned long>(abs_prec - out.val);
    if (out.rel > model.precision) {
        out.rel = model.precision;
    }
    Integer unit;
    mpz_divexact(unit.get_mpz_t(), r.get_mpz_t(), prime_power(model.prime, out.val).get_mpz_t());
    out.unit = unit % prime_power(model.prime, static_cast<long>(out.rel));
    return out;
}

/// As above, for a value p^shift * n (shift may be negative, for Qp scalars).
PadicValue padic_normalize_shifted(const CoefficientModel& model, const Integer& n, long shift,
                                   long abs_prec) {
    PadicValue out = padic_normalize(model, n, abs_prec - shift);
    out.val += shift;
    return out;
}

} // namespace

PadicValue padic_zero(const CoefficientModel& model) {
    require_zp(model);
    PadicValue z;
    z.zero = true;
    z.val = static_cast<long>(model.precision);
    return z;
}

PadicValue padic_from_integer(const CoefficientModel& model, const Integer& n) {
    require_zp(model);
    if (n == 0) return padic_zero(model);
    const unsigned long v = padic_valuation_int(n, model.prime);
    PadicValue out;
    out.zero = false;
    out.val = static_cast<long>(v);
    out.rel = model.precision;
    Integer unit;
    mpz_divexact(unit.get_mpz_t(), n.get_mpz_t(), prime_power(model.prime, out.val).get_mpz_t());
    Integer mod = prime_power(model.prime, static_cast<long>(out.rel));
    out.unit = unit % mod;
    if (out.unit < 0) out.unit += mod;
    return out;
}

PadicValue padic_from_rational(const CoefficientModel& model, const Rational& q) {
    require_zp(model);
    if (q == 0) return padic_zero(model);
    PadicValue n = padic_from_integer(model, q.get_num());
    return padic_div_integer(model, n, q.get_den());
}

PadicValue padic_add(const CoefficientModel& model, const PadicValue& a, const PadicValue& b) {
    require_zp(model);
    if (a.zero && b.zero) {
        PadicValue z;
        z.zero = true;
        z.val = std::min(a.val, b.val);
        return z;
    }
    if (a.zero)
        return padic_normalize_shifted(model, b.unit, b.val, std::min(b.abs_precision(), a.val));
    if (b.zero)
        return padic_normalize_shifted(model, a.unit, a.val, std::min(a.abs_precision(), b.val));
    const long v0 = std::min(a.val, b.val);
    const long m = std::min(a.abs_precision(), b.abs_precision());
    Integer rep = prime_power(model.prime, a.val - v0) * a.unit +
                  prime_power(model.prime, b.val - v0) * b.unit;
    return padic_normalize_shifted(model, rep, v0, m);
}

PadicValue padic_neg(const CoefficientModel& model, const PadicValue& a) {
    require_zp(model);
    if (a.zero) return a;
    PadicValue out = a;
    out.unit = prime_power(model.prime, static_cast<long>(a.rel)) - a.unit;
    return out;
}

PadicValue padic_sub(const CoefficientModel& model, const PadicValue& a, const PadicValue& b) {
    return padic_add(model, a, padic_neg(model, b));
}

PadicValue padic_mul(const CoefficientModel& model, const PadicValue& a, const PadicValue& b) {
    require_zp(model);
    if (a.zero || b.zero) {
        PadicValue z;
        z.zero = true;
        // p^m Zp times p^v u lies in p^(m+v) Zp.
        z.val = std::min<long>(a.val + b.val, static_cast<long>(model.precision) * 2);
        return z;
    }
    PadicValue out;
    out.zero = false;
    out.val = a.val + b.val;
    out.rel = std::min({a.rel, b.rel, model.precision});
    Integer mod = prime_power(model.prime, static_cast<long>(out.rel));
    out.unit = (a.unit * b.unit) % mod;
    return out;
}

PadicValue padic_div_integer(const CoefficientModel& model, const PadicValue& a, const Integer& d) {
    require_zp(model);
    if (d == 0) throw domain_error("division by zero");
    const unsigned long t = padic_valuation_int(d, model.prime);
    if (a.zero) {
        PadicValue z = a;
        z.val -= static_cast<long>(t);
        return z;
    }
    Integer du;
    mpz_divexact(du.get_mpz_t(), d.get_mpz_t(), prime_power(model.prime, static_cast<long>(t)).get_mpz_t());
    PadicValue out = a;
    out.val -= static_cast<long>(t);
    Integer mod = prime_power(model.prime, static_cast<long>(a.rel));
    Integer inv;
    Integer dm = du % mod;
    if (dm < 0) dm += mod;
    if (mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw domain_error("unit inversion failed");
    out.unit = (a.unit * inv) % mod;
    return out;
}

Integer padic_residue(const CoefficientModel& model, const PadicValue& a, long m) {
    require_zp(model);
    if (m <= 0) return 0;
    if (a.abs_precision() < m)
        throw precision_error("residue mod p^" + std::to_string(m) + " exceeds known precision p^" +
                              std::to_string(a.abs_precision()));
    if (a.zero || a.val >= m) return 0;
    if (a.val < 0)
        throw domain_error("residue of a value with negative valuation");
    Integer rep = prime_power(model.prime, a.val) * a.unit;
    return rep % prime_power(model.prime, m);
}

bool padic_equal(const CoefficientModel& model, const PadicValue& a, const PadicValue& b) {
    return padic_sub(model, a, b).zero;
}

// --- model-tagged element operations --------------------------------------

void require_carrier(const CoefficientModel& model, const RingElement& a) {
    const bool ok = (model.integer_carrier() && std::holds_alternative<Integer>(a)) ||
                    (model.rational_carrier() && std::holds_alternative<Rational>(a)) ||
                    (model.padic_carrier() && std::holds_alternative<PadicValue>(a));
    if (!ok) throw domain_error("element does not belong to the carrier of " + model.name());
}

RingElement re_zero(const CoefficientModel& model) {
    if (model.integer_carrier()) return Integer(0);
    if (model.rational_carrier()) return Rational(0);
    return padic_zero(model);
}

RingElement re_one(const CoefficientModel& model) { return re_from_integer(model, 1); }

RingElement re_from_integer(const CoefficientModel& model, const Integer& n) {
    if (model.integer_carrier()) return n;
    if (model.rational_carrier()) return Rational(n);
    return padic_from_integer(model, n);
}

RingElement re_from_rational(const CoefficientModel& model, const Rational& q) {
    if (model.integer_carrier()) {
        if (q.get_den() != 1)
            throw domain_error("non-integral value " + rational_string(q) + " in " + model.name());
        return q.get_num();
    }
    if (model.rational_carrier()) return q;
    PadicValue v = padic_from_rational(model, q);
    if (!v.zero && v.val < 0)
        throw domain_error("rational " + rational_string(q) + " does not lie in Zp for p = " +
                           std::to_string(model.prime));
    return v;
}

RingElement re_add(const CoefficientModel& model, const RingElement& a, const RingElement& b) {
    require_carrier(model, a);
    require_carrier(model, b);
    if (model.integer_carrier()) return Integer(std::get<Integer>(a) + std::get<Integer>(b));
    if (model.rational_carrier()) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    return padic_add(model, std::get<PadicValue>(a), std::get<PadicValue>(b));
}

RingElement re_sub(const CoefficientModel& model, const RingElement& a, const RingElement& b) {
    return re_add(model, a, re_neg(model, b));
}

RingElement re_mul(const CoefficientModel& model, const RingElement& a, const RingElement& b) {
    require_carrier(model, a);
    require_carrier(model, b);
    if (model.integer_carrier()) return Integer(std::get<Integer>(a) * std::get<Integer>(b));
    if (model.rational_carrier()) return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    return padic_mul(model, std::get<PadicValue>(a), std::get<PadicValue>(b));
}

RingElement re_neg(const CoefficientModel& model, const RingElement& a) {
    require_carrier(model, a);
    if (model.integer_carrier()) return Integer(-std::get<Integer>(a));
    if (model.rational_carrier()) return Rational(-std::get<Rational>(a));
    return padic_neg(model, std::get<PadicValue>(a));
}

bool re_is_zero(const CoefficientModel& model, const RingElement& a) {
    require_carrier(model, a);
    if (model.integer_carrier()) return std::get<Integer>(a) == 0;
    if (model.rational_carrier()) return std::get<Rational>(a) == 0;
    return std::get<PadicValue>(a).zero;
}

bool re_equal(const CoefficientModel& model, const RingElement& a, const RingElement& b) {
    require_carrier(model, a);
    require_carrier(model, b);
    if (model.integer_carrier()) return std::get<Integer>(a) == std::get<Integer>(b);
    if (model.rational_carrier()) return std::get<Rational>(a) == std::get<Rational>(b);
    return padic_equal(model, std::get<PadicValue>(a), std::get<PadicValue>(b));
}

std::string re_to_string(const CoefficientModel& model, const RingElement& a) {
    require_carrier(model, a);
    if (model.integer_carrier()) return integer_string(std::get<Integer>(a));
    if (model.rational_carrier()) return rational_string(std::get<Rational>(a));
    const PadicValue& v = std::get<PadicValue>(a);
    const long m = std::min<long>(v.abs_precision(), static_cast<long>(model.precision));
    return integer_string(padic_residue(model, v, m));
}

RingElement re_parse(const CoefficientModel& model, const std::string& text) {
    if (model.integer_carrier()) return parse_integer(text);
    return re_from_rational(model, parse_rational(text));
}

// --- norms ------------------------------------------------------------------

namespace {

NormValue sup_rational_norm(const Rational& q) {
    if (q == 0) return NormValue(Rational(0));
    // sup over the trivial norm and all |.|_p; only denominator primes exceed 1.
    NormValue best{Rational(1)};
    for (const auto& [p, e] : factorize(q.get_den())) {
        best = max(best, NormValue(Rational(pow_integer(p, e))));
    }
    return best;
}

} // namespace

NormValue norm(const CoefficientModel& model, const RingElement& x) {
    require_carrier(model, x);
    switch (model.kind) {
        case ModelKind::TrivialInt:
            return std::get<Integer>(x) == 0 ? NormValue(Rational(0)) : NormValue(Rational(1));
        case ModelKind::SupRational:
            return sup_rational_norm(std::get<Rational>(x));
        case ModelKind::PAdicRational: {
            const Rational& q = std::get<Rational>(x);
            if (q == 0) return NormValue(Rational(0));
            const long v = padic_valuation_rat(q, model.prime);
            return NormValue(pow_rational(Rational(static_cast<long>(model.prime)), -v));
        }
        case ModelKind::ArchRational: {
            Rational q = std::get<Rational>(x);
            return NormValue(q < 0 ? Rational(-q) : q);
        }
        case ModelKind::TruncatedZp: {
            const PadicValue& v = std::get<PadicValue>(x);
            if (v.zero) return NormValue(Rational(0));
            return NormValue(pow_rational(Rational(static_cast<long>(model.prime)), -v.val));
        }
    }
    throw domain_error("unreachable model kind");
}

// --- morphisms ---------------------------------------------------------------

RingMorphism RingMorphism::int_to_zp(unsigned long p, unsigned long prec) {
    return {MorphismKind::IntToZp, CoefficientModel::trivial_int(),
            CoefficientModel::truncated_zp(p, prec)};
}

RingMorphism RingMorphism::qna_to_qp(unsigned long p) {
    return {MorphismKind::QnaToQp, CoefficientModel::sup_rational(),
            CoefficientModel::padic_rational(p)};
}

RingMorphism RingMorphism::int_to_q() {
    return {MorphismKind::IntToQ, CoefficientModel::trivial_int(), CoefficientModel::sup_rational()};
}

RingMorphism RingMorphism::identity(const CoefficientModel& m) {
    return {MorphismKind::Identity, m, m};
}

RingMorphism RingMorphism::parse(const std::string& spec) {
    auto parse_ul = [&](const std::string& s) -> unsigned long {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw schema_error("bad number '" + s + "' in morphism '" + spec + "'");
        }
    };
    if (spec == "IntToQ") return int_to_q();
    if (spec.rfind("IntToZp:", 0) == 0) {
        const std::string rest = spec.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw schema_error("morphism '" + spec + "' needs IntToZp:<p>:<prec>");
        return int_to_zp(parse_ul(rest.substr(0, colon)), parse_ul(rest.substr(colon + 1)));
    }
    if (spec.rfind("QnaToQp:", 0) == 0) return qna_to_qp(parse_ul(spec.substr(8)));
    if (spec.rfind("Identity:", 0) == 0) return identity(CoefficientModel::parse(spec.substr(9)));
    throw schema_error("unknown morphism '" + spec + "'");
}

std::string RingMorphism::name() const {
    switch (kind) {
        case MorphismKind::IntToZp:
            return "IntToZp:" + std::to_string(target.prime) + ":" + std::to_string(target.precision);
        case MorphismKind::QnaToQp: return "QnaToQp:" + std::to_string(target.prime);
        case MorphismKind::IntToQ: return "IntToQ";
        case MorphismKind::Identity: return "Identity:" + source.name();
    }
    return "?";
}

RingElement apply_morphism(const RingMorphism& m, const RingElement& x) {
    require_carrier(m.source, x);
    switch (m.kind) {
        case MorphismKind::Identity: return x;
        case MorphismKind::IntToZp: return padic_from_integer(m.target, std::get<Integer>(x));
        case MorphismKind::QnaToQp: return x; // same carrier, new norm
        case MorphismKind::IntToQ: return Rational(std::get<Integer>(x));
    }
    throw domain_error("unreachable morphism kind");
}

// --- axiom checks ------------------------------------------------------------

AxiomReport check_ring_axioms(const CoefficientModel& model, const std::vector<RingElement>& samples) {
    if (samples.empty()) throw domain_error("check_ring_axioms needs at least one sample");
    AxiomReport report;
    report.ultrametric_checked = model.nonarchimedean();

    const NormValue one_norm = norm(model, re_one(model));
    ++report.checks;
    if (!(one_norm <= NormValue(Rational(1))))
        report.violations.push_back("norm(1) = " + one_norm.str() + " exceeds 1");

    ++report.checks;
    if (!(norm(model, re_zero(model)) == NormValue(Rational(0))))
        report.violations.push_back("norm(0) != 0");

    for (const RingElement& x : samples) {
        ++report.checks;
        const bool zero_norm = norm(model, x) == NormValue(Rational(0));
        if (zero_norm != re_is_zero(model, x))
            report.violations.push_back("norm(x) = 0 does not match x = 0 for x = " +
                                        re_to_string(model, x));
    }

    for (const RingElement& x : samples) {
        for (const RingElement& y : samples) {
            const NormValue nx = norm(model, x);
            const NormValue ny = norm(model, y);
            ++report.checks;
            const NormValue nprod = norm(model, re_mul(model, x, y));
            if (!(nprod <= nx * ny))
                report.violations.push_back("submultiplicativity fails at x = " + re_to_string(model, x) +
                                            ", y = " + re_to_string(model, y));
            ++report.checks;
            const NormValue nsum = norm(model, re_add(model, x, y));
            if (model.nonarchimedean()) {
                if (!(nsum <= max(nx, ny)))
                    report.violations.push_back("ultrametric inequality fails at x = " +
                                                re_to_string(model, x) + ", y = " + re_to_string(model, y));
            } else {
                if (!(nsum <= nx + ny))
                    report.violations.push_back("triangle inequality fails at x = " +
                                                re_to_string(model, x) + ", y = " + re_to_string(model, y));
            }
        }
    }
    return report;
}

} // namespace amice
