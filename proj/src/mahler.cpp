#include "amice/mahler.hpp"

#include <algorithm>

namespace amice {

namespace {

void require_basis(const TruncatedSeries& f, BasisTag tag, const char* op) {
    if (f.basis != tag)
        throw domain_error(std::string(op) + " expects the " + basis_string(tag) + " basis, got " +
                           basis_string(f.basis));
}

TailDescriptor zero_tail(std::size_t start) { return TailDescriptor{start, 0, 0, true}; }

} // namespace

FunctionTable table_from_integers(const CoefficientModel& model, const std::vector<long>& values) {
    FunctionTable t;
    t.model = model;
    t.values.reserve(values.size());
    for (long v : values) t.values.push_back(re_from_integer(model, Integer(v)));
    return t;
}

FunctionTable fdiff_table(const FunctionTable& t) {
    if (t.values.size() < 2)
        throw domain_error("fdiff_table needs at least two values");
    FunctionTable out;
    out.model = t.model;
    out.values.reserve(t.values.size() - 1);
    for (std::size_t n = 0; n + 1 < t.values.size(); ++n)
        out.values.push_back(re_sub(t.model, t.values[n + 1], t.values[n]));
    return out;
}

TruncatedSeries fdiff_series(const TruncatedSeries& f) {
    require_basis(f, BasisTag::Mahler, "fdiff_series");
    TruncatedSeries out;
    out.model = f.model;
    out.basis = BasisTag::Mahler;
    if (f.order() > 0)
        out.coeffs.assign(f.coeffs.begin() + 1, f.coeffs.end());
    if (f.tail) {
        TailDescriptor t = *f.tail;
        t.start = t.start == 0 ? 0 : t.start - 1;
        t.bound = f.tail->bound * f.tail->ratio; // |a_{n+1}| <= C r^{n+1} = (C r) r^n
        out.tail = t;
    }
    return out;
}

RingElement fdiff_k_at_zero(const FunctionTable& t, std::size_t k) {
    if (k >= t.values.size())
        throw insufficient_data_error("k-th difference at zero needs k+1 = " + std::to_string(k + 1) +
                                      " values, table has " + std::to_string(t.values.size()));
    RingElement acc = re_zero(t.model);
    for (std::size_t i = 0; i <= k; ++i) {
        Integer c = binomial(Integer(k), i);
        if ((k - i) % 2 == 1) c = -c;
        acc = re_add(t.model, acc, re_mul(t.model, re_from_integer(t.model, c), t.values[i]));
    }
    return acc;
}

TruncatedSeries mahler_expand(const FunctionTable& t) {
    if (t.values.empty()) throw domain_error("mahler_expand needs a nonempty table");
    // Difference triangle: row k holds Delta^k f at the surviving points.
    std::vector<RingElement> row = t.values;
    std::vector<RingElement> coeffs;
    coeffs.reserve(t.values.size());
    coeffs.push_back(row[0]);
    for (std::size_t k = 1; k < t.values.size(); ++k) {
        for (std::size_t n = 0; n + k < t.values.size(); ++n)
            row[n] = re_sub(t.model, row[n + 1], row[n]);
        row.pop_back();
        coeffs.push_back(row[0]);
    }
    return polynomial(t.model, BasisTag::Mahler, std::move(coeffs));
}

RingElement evaluate(const TruncatedSeries& f, unsigned long n) {
    require_basis(f, BasisTag::Mahler, "evaluate");
    if (!f.finitely_supported() && n >= f.order())
        throw insufficient_data_error("evaluation at " + std::to_string(n) +
                                      " needs truncation order > n (or finite support)");
    RingElement acc = re_zero(f.model);
    const std::size_t top = std::min<std::size_t>(f.order(), n + 1);
    for (std::size_t k = 0; k < top; ++k) {
        if (re_is_zero(f.model, f.coeffs[k])) continue;
        const Integer b = binomial(Integer(n), k);
        acc = re_add(f.model, acc, re_mul(f.model, f.coeffs[k], re_from_integer(f.model, b)));
    }
    return acc;
}

Integer TransformMatrix::entry(std::size_t i, std::size_t j) const {
    if (i >= size || j >= size) throw domain_error("transform index out of range");
    if (i > j) return 0;
    Integer b = binomial(Integer(j), i);
    if (inverse && (j - i) % 2 == 1) b = -b;
    return b;
}

std::vector<RingElement> binomial_transform(const CoefficientModel& model,
                                            const std::vector<RingElement>& v,
                                            TransformDirection direction) {
    const TransformMatrix m = direction == TransformDirection::Forward
                                  ? TransformMatrix::forward(v.size())
                                  : TransformMatrix::inverse_of(v.size());
    std::vector<RingElement> out(v.size(), re_zero(model));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j)
            out[i] = re_add(model, out[i], re_mul(model, re_from_integer(model, m.entry(i, j)), v[j]));
    return out;
}

namespace {

/// Transpose transforms: w_l = sum_{k<=l} binom(l,k) v_k (signed when `inverse`).
std::vector<RingElement> transpose_transform(const CoefficientModel& model,
                                             const std::vector<RingElement>& v, bool inverse) {
    std::vector<RingElement> out(v.size(), re_zero(model));
    for (std::size_t l = 0; l < v.size(); ++l)
        for (std::size_t k = 0; k <= l; ++k) {
            Integer b = binomial(Integer(l), k);
            if (inverse && (l - k) % 2 == 1) b = -b;
            out[l] = re_add(model, out[l], re_mul(model, re_from_integer(model, b), v[k]));
        }
    return out;
}

/// Envelope tail for a conversion whose true support is unbounded:
/// non-archimedean norms of the outputs stay below the max input norm, while
/// archimedean ones grow at most like (sum of inputs) * 2^n.
TailDescriptor envelope_tail(const CoefficientModel& model, const std::vector<RingElement>& in) {
    Rational acc = 0;
    const bool sum_mode = !model.nonarchimedean();
    for (const RingElement& c : in) {
        const Rational v = norm(model, c).value();
        acc = sum_mode ? acc + v : std::max(acc, v);
    }
    TailDescriptor t;
    t.start = 0;
    t.bound = acc;
    t.ratio = sum_mode ? Rational(2) : Rational(1);
    return t;
}

} // namespace

TruncatedSeries change_basis(const TruncatedSeries& f, BasisTag to) {
    if (side_of(f.basis) != side_of(to))
        throw domain_error("cross-side conversion " + basis_string(f.basis) + " -> " +
                           basis_string(to) + " is the pairing's job, not a basis change");
    if (f.basis == to) return f;

    TruncatedSeries out;
    out.model = f.model;
    out.basis = to;
    if (side_of(to) == HopfSide::Series) {
        // Triangular, support-preserving in both directions.
        out.coeffs = binomial_transform(f.model, f.coeffs,
                                        to == BasisTag::Monomial ? TransformDirection::Forward
                                                                 : TransformDirection::Inverse);
        if (f.finitely_supported()) out.tail = zero_tail(out.coeffs.size());
        return out;
    }
    // Mahler <-> Indicator: transpose pair; the true expansions have unbounded
    // support, so finite inputs get a certified envelope tail.
    out.coeffs = transpose_transform(f.model, f.coeffs, /*inverse=*/to == BasisTag::Mahler);
    if (f.finitely_supported()) {
        if (series_degree(f)) {
            out.tail = envelope_tail(f.model, f.coeffs);
        } else {
            out.tail = zero_tail(out.coeffs.size());
        }
    }
    return out;
}

MahlerClassification classify_membership(const TruncatedSeries& f) {
    require_basis(f, BasisTag::Mahler, "classify_membership");
    MahlerClassification out;
    if (f.finitely_supported()) {
        out.kind = MahlerClassification::Kind::Polynomial;
        out.radius = NormValue::infinity();
        return out;
    }
    if (!f.tail) {
        out.kind = MahlerClassification::Kind::Undecidable;
        out.radius = NormValue(Rational(0));
        return out;
    }
    if (f.tail->ratio == 0) {
        out.kind = MahlerClassification::Kind::Polynomial;
        out.radius = NormValue::infinity();
        return out;
    }
    // |a_n| <= C r^n makes |a_n| rho^n vanish for every rho < 1/r.
    out.kind = MahlerClassification::Kind::CertifiedRadius;
    out.radius = NormValue(Rational(1) / f.tail->ratio);
    return out;
}

RingElement padic_evaluate(const TruncatedSeries& f, const PadicValue& a,
                           unsigned long target_precision) {
    require_basis(f, BasisTag::Mahler, "padic_evaluate");
    if (f.model.kind != ModelKind::PAdicRational && f.model.kind != ModelKind::TruncatedZp)
        throw domain_error("padic_evaluate needs a p-adic coefficient model");
    if (!a.zero && a.val < 0) throw domain_error("evaluation point must lie in Zp");
    const unsigned long p = f.model.prime;

    std::size_t terms = f.order();
    if (!f.finitely_supported()) {
        if (!f.tail) throw certificate_error("padic_evaluate needs a tail certificate");
        const Rational target = pow_rational(Rational(static_cast<long>(p)),
                                             -static_cast<long>(target_precision));
        if (f.tail->ratio >= 1 && f.tail->bound > target)
            throw certificate_error("tail certificate cannot reach p^-" +
                                    std::to_string(target_precision));
        Rational running = f.tail->bound;
        std::size_t K = 0;
        while (running > target) {
            running *= f.tail->ratio;
            ++K;
        }
        if (K > f.order()) {
            // Name the precision the stored data does support: largest m with
            // C r^order <= p^-m.
            Rational reach = f.tail->bound;
            for (std::size_t i = 0; i < f.order(); ++i) reach *= f.tail->ratio;
            long achievable = 0;
            Rational unit = 1;
            const Rational invp = Rational(1) / Rational(static_cast<long>(p));
            while (reach <= unit * invp) {
                unit *= invp;
                ++achievable;
            }
            throw precision_error("certificate supports precision " + std::to_string(achievable) +
                                  " at this truncation order, not " + std::to_string(target_precision));
        }
        terms = K;
    }

    // The working Zp model needs enough digits that coefficients of negative
    // valuation (allowed over Qp) still leave target_precision certified.
    long depth = 0;
    if (f.model.kind == ModelKind::PAdicRational) {
        for (std::size_t k = 0; k < terms; ++k) {
            const Rational& q = std::get<Rational>(f.coeffs[k]);
            if (q != 0) depth = std::max(depth, -padic_valuation_rat(q, p));
        }
    }
    const CoefficientModel work = CoefficientModel::truncated_zp(
        p, target_precision + static_cast<unsigned long>(depth) + 2);

    PadicValue acc = padic_zero(work);
    PadicValue binom_val = padic_from_integer(work, 1);
    PadicValue point = a;
    point.rel = std::min<unsigned long>(a.rel == 0 ? work.precision : a.rel, work.precision);
    for (std::size_t k = 0; k < terms; ++k) {
        if (k > 0) {
            const PadicValue shift =
                padic_from_integer(work, Integer(static_cast<long>(k - 1)));
            binom_val = padic_mul(work, binom_val, padic_sub(work, point, shift));
            binom_val = padic_div_integer(work, binom_val, Integer(static_cast<long>(k)));
        }
        PadicValue ck;
        if (f.model.kind == ModelKind::TruncatedZp) {
            ck = std::get<PadicValue>(f.coeffs[k]);
        } else {
            const Rational& q = std::get<Rational>(f.coeffs[k]);
            if (q == 0) continue;
            ck = padic_from_rational(work, q);
        }
        acc = padic_add(work, acc, padic_mul(work, binom_val, ck));
    }
    if (f.model.kind == ModelKind::TruncatedZp) return acc;
    // Report the value over Qp as its canonical representative p^val * unit at
    // the certified absolute precision.
    const long m = std::min<long>(acc.abs_precision(), static_cast<long>(target_precision));
    if (acc.zero || acc.val >= m) return Rational(0);
    const Integer mod = pow_integer(Integer(p), static_cast<unsigned long>(m - acc.val));
    const Rational scale = pow_rational(Rational(static_cast<long>(p)), acc.val);
    return Rational(Rational(acc.unit % mod) * scale);
}

} // namespace amice
