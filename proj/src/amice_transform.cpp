#include "amice/amice_transform.hpp"

#include <algorithm>

namespace amice {

namespace {

NormValue tail_product_bound(const CoefficientModel& model, const TailDescriptor& a,
                             const TailDescriptor& b, std::size_t from) {
    const Rational q = a.ratio * b.ratio;
    if (q >= 1)
        throw domain_error("pairing undefined: tail certificate product diverges (ratio " +
                           rational_string(q) + ")");
    const Rational head = a.bound * b.bound * pow_rational(q, static_cast<long>(from));
    if (model.nonarchimedean()) return NormValue(head);
    return NormValue(head / (Rational(1) - q));
}

} // namespace

PairingResult pairing(const TruncatedSeries& xi, const TruncatedSeries& f) {
    if (!(xi.model == f.model))
        throw domain_error("pairing needs a common model, got " + xi.model.name() + " and " +
                           f.model.name());
    if (xi.basis != BasisTag::Monomial || f.basis != BasisTag::Mahler)
        throw domain_error("pairing takes a monomial series against a Mahler series");

    const CoefficientModel& model = xi.model;
    PairingResult out{re_zero(model), NormValue{Rational(0)}};

    auto overlap_sum = [&](std::size_t upto) {
        RingElement acc = re_zero(model);
        for (std::size_t n = 0; n < upto; ++n) {
            const RingElement a = n < xi.order() ? xi.coeffs[n] : re_zero(model);
            const RingElement b = n < f.order() ? f.coeffs[n] : re_zero(model);
            acc = re_add(model, acc, re_mul(model, a, b));
        }
        return acc;
    };

    if (xi.finitely_supported() || f.finitely_supported()) {
        const TruncatedSeries& fin = xi.finitely_supported() ? xi : f;
        const TruncatedSeries& other = xi.finitely_supported() ? f : xi;
        const auto deg = series_degree(fin);
        if (!deg) return out; // zero against anything
        if (other.finitely_supported() || *deg < other.order()) {
            out.value = overlap_sum(std::min(*deg + 1, std::max(xi.order(), f.order())));
            return out;
        }
        // The finite side reaches past the other's stored window: certified
        // remainder from the other's tail over the missing indices.
        if (!other.tail)
            throw insufficient_data_error(
                "pairing needs coefficients up to " + std::to_string(*deg) +
                ", stored order is " + std::to_string(other.order()) + " with no certificate");
        out.value = overlap_sum(other.order());
        NormValue rem{Rational(0)};
        const bool sum_mode = !model.nonarchimedean();
        for (std::size_t n = other.order(); n <= *deg; ++n) {
            const NormValue t = norm(model, fin.coeffs[n]) *
                                NormValue(other.tail->bound *
                                          pow_rational(other.tail->ratio, static_cast<long>(n)));
            rem = sum_mode ? rem + t : max(rem, t);
        }
        out.truncation_bound = rem;
        return out;
    }

    if (!xi.tail || !f.tail)
        throw domain_error("pairing needs a finitely supported side or two tail certificates");
    const std::size_t K = std::min(xi.order(), f.order());
    out.truncation_bound = tail_product_bound(model, *xi.tail, *f.tail, K);
    out.value = overlap_sum(K);
    return out;
}

Distribution amice_transform(const CoefficientModel& model, std::vector<RingElement> moments) {
    return polynomial(model, BasisTag::Monomial, std::move(moments));
}

StirlingCache::StirlingCache(std::size_t max_n) {
    rows_.resize(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows_[n].assign(n + 1, Integer(0));
        if (n == 0) {
            rows_[0][0] = 1;
            continue;
        }
        for (std::size_t k = 1; k <= n; ++k) {
            // S(n,k) = k S(n-1,k) + S(n-1,k-1)
            Integer v = rows_[n - 1][k - 1];
            if (k <= n - 1) v += Integer(static_cast<long>(k)) * rows_[n - 1][k];
            rows_[n][k] = v;
        }
    }
}

const Integer& StirlingCache::value(std::size_t n, std::size_t k) const {
    static const Integer zero{};
    if (n >= rows_.size()) throw domain_error("Stirling cache too small");
    if (k > n) return zero;
    return rows_[n][k];
}

RingElement power_moment(const Distribution& mu, std::size_t n) {
    if (mu.basis != BasisTag::Monomial)
        throw domain_error("power_moment expects the transform (monomial) representation");
    if (mu.order() <= n && !mu.finitely_supported())
        throw insufficient_data_error("power moment " + std::to_string(n) + " needs " +
                                      std::to_string(n + 1) + " moments, stored order is " +
                                      std::to_string(mu.order()));
    const StirlingCache stirling(n);
    RingElement acc = re_zero(mu.model);
    for (std::size_t k = 0; k <= n && k < mu.order(); ++k) {
        const Integer c = stirling.value(n, k) * factorial(k);
        acc = re_add(mu.model, acc, re_mul(mu.model, re_from_integer(mu.model, c), mu.coeffs[k]));
    }
    return acc;
}

Distribution kubota_leopoldt(std::size_t N, const CoefficientModel& model) {
    if (N < 1) throw domain_error("kubota_leopoldt needs order >= 1");
    if (!model.rational_carrier())
        throw domain_error("kubota_leopoldt needs a rational coefficient model");
    std::vector<RingElement> cs;
    cs.reserve(N);
    for (std::size_t n = 0; n < N; ++n) {
        Rational mu_n = make_rational(1, Integer(static_cast<long>(n + 1)));
        if (n % 2 == 1) mu_n = -mu_n;
        cs.push_back(mu_n);
    }
    TailDescriptor t;
    t.start = 0;
    if (model.nonarchimedean()) {
        // |(-1)^n/(n+1)| can reach n+1 in the sup norms; n+1 <= 2*2^n.
        t.bound = 2;
        t.ratio = 2;
    } else {
        t.bound = 1;
        t.ratio = 1;
    }
    return make_series(model, BasisTag::Monomial, std::move(cs), t);
}

Rational bernoulli(std::size_t n) {
    if (n < 1) throw domain_error("bernoulli is defined here for n >= 1");
    const Distribution mu = kubota_leopoldt(n + 1);
    return std::get<Rational>(power_moment(mu, n));
}

TruncatedSeries base_change_series(const TruncatedSeries& f, const RingMorphism& m) {
    if (!(f.model == m.source))
        throw domain_error("series over " + f.model.name() + " cannot be base-changed along " +
                           m.name());
    TruncatedSeries out;
    out.model = m.target;
    out.basis = f.basis;
    out.coeffs.reserve(f.order());
    for (const RingElement& c : f.coeffs) out.coeffs.push_back(apply_morphism(m, c));
    if (f.tail) {
        TailDescriptor t = *f.tail;
        // The canonical morphisms are contracting, so the bound transports;
        // equality need not.
        t.exact = t.bound == 0;
        out.tail = t;
    }
    return out;
}

BaseChangeReport base_change_commutes(const TruncatedSeries& xi, const TruncatedSeries& f,
                                      const RingMorphism& m) {
    if (!xi.finitely_supported() || !f.finitely_supported())
        throw domain_error("base_change_commutes expects finite-support inputs");
    BaseChangeReport report;
    report.mapped_pairing = apply_morphism(m, pairing(xi, f).value);
    report.pairing_of_mapped =
        pairing(base_change_series(xi, m), base_change_series(f, m)).value;
    report.equal = re_equal(m.target, report.mapped_pairing, report.pairing_of_mapped);
    return report;
}

} // namespace amice
