#include "amice/series.hpp"

#include <algorithm>

namespace amice {

std::string basis_string(BasisTag b) {
    switch (b) {
        case BasisTag::Monomial: return "monomial";
        case BasisTag::Mahler: return "mahler";
        case BasisTag::GroupLike: return "grouplike";
        case BasisTag::Indicator: return "indicator";
    }
    return "?";
}

BasisTag parse_basis(const std::string& name) {
    if (name == "monomial") return BasisTag::Monomial;
    if (name == "mahler") return BasisTag::Mahler;
    if (name == "grouplike") return BasisTag::GroupLike;
    if (name == "indicator") return BasisTag::Indicator;
    throw schema_error("unknown basis '" + name + "'");
}

HopfSide side_of(BasisTag b) {
    return b == BasisTag::Monomial || b == BasisTag::GroupLike ? HopfSide::Series
                                                               : HopfSide::Functions;
}

namespace {

TailDescriptor zero_tail(std::size_t start) {
    TailDescriptor t;
    t.start = start;
    t.bound = 0;
    t.ratio = 0;
    t.exact = true;
    return t;
}

void require_basis(const TruncatedSeries& f, BasisTag tag, const char* op) {
    if (f.basis != tag)
        throw domain_error(std::string(op) + " expects the " + basis_string(tag) + " basis, got " +
                           basis_string(f.basis));
}

void require_same_model(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.model == b.model))
        throw domain_error("model mismatch: " + a.model.name() + " vs " + b.model.name());
}

} // namespace

TruncatedSeries polynomial(const CoefficientModel& model, BasisTag basis,
                           std::vector<RingElement> coeffs, std::size_t order) {
    for (const RingElement& c : coeffs) require_carrier(model, c);
    TruncatedSeries f;
    f.model = model;
    f.basis = basis;
    f.coeffs = std::move(coeffs);
    while (f.coeffs.size() < order) f.coeffs.push_back(re_zero(model));
    f.tail = zero_tail(f.coeffs.size());
    return f;
}

TruncatedSeries polynomial_int(const CoefficientModel& model, BasisTag basis,
                               const std::vector<long>& coeffs, std::size_t order) {
    std::vector<RingElement> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.push_back(re_from_integer(model, Integer(c)));
    return polynomial(model, basis, std::move(cs), order);
}

TruncatedSeries make_series(const CoefficientModel& model, BasisTag basis,
                            std::vector<RingElement> coeffs, std::optional<TailDescriptor> tail) {
    for (const RingElement& c : coeffs) require_carrier(model, c);
    if (tail) {
        if (tail->bound < 0 || tail->ratio < 0) throw domain_error("tail certificate must be nonnegative");
        // Check the certificate on the stored overlap, where it is checkable.
        for (std::size_t n = std::min(tail->start, coeffs.size()); n < coeffs.size(); ++n) {
            const NormValue bound{tail->bound * pow_rational(tail->ratio, static_cast<long>(n))};
            const NormValue actual = norm(model, coeffs[n]);
            const bool fits = tail->exact ? actual == bound : actual <= bound;
            if (!fits)
                throw certificate_error("tail certificate fails at stored index " + std::to_string(n));
        }
    }
    TruncatedSeries f;
    f.model = model;
    f.basis = basis;
    f.coeffs = std::move(coeffs);
    f.tail = std::move(tail);
    return f;
}

TruncatedSeries basis_element(const CoefficientModel& model, BasisTag basis, std::size_t n,
                              std::size_t order) {
    if (order <= n) order = n + 1;
    std::vector<RingElement> cs(order, re_zero(model));
    cs[n] = re_one(model);
    return polynomial(model, basis, std::move(cs));
}

RingElement series_coeff(const TruncatedSeries& f, std::size_t n) {
    if (n < f.coeffs.size()) return f.coeffs[n];
    if (f.finitely_supported()) return re_zero(f.model);
    throw insufficient_data_error("coefficient " + std::to_string(n) +
                                  " lies beyond truncation order " + std::to_string(f.order()));
}

std::optional<std::size_t> series_degree(const TruncatedSeries& f) {
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        if (!re_is_zero(f.model, f.coeffs[i])) return i;
    return std::nullopt;
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.model == b.model) || a.basis != b.basis) return false;
    const std::size_t n = std::max(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i) {
        const RingElement ca = i < a.order() ? a.coeffs[i] : re_zero(a.model);
        const RingElement cb = i < b.order() ? b.coeffs[i] : re_zero(b.model);
        if (i >= a.order() && !a.finitely_supported()) return false;
        if (i >= b.order() && !b.finitely_supported()) return false;
        if (!re_equal(a.model, ca, cb)) return false;
    }
    return true;
}

TruncatedSeries pad_to(const TruncatedSeries& f, std::size_t order) {
    if (!f.finitely_supported() && order > f.order())
        throw domain_error("cannot pad a series that is not finitely supported");
    TruncatedSeries g = f;
    while (g.coeffs.size() < order) g.coeffs.push_back(re_zero(f.model));
    if (g.tail) g.tail->start = std::max(g.tail->start, std::size_t{0});
    return g;
}

TruncatedSeries add(const TruncatedSeries& F, const TruncatedSeries& G) {
    require_same_model(F, G);
    if (F.basis != G.basis) throw domain_error("basis mismatch in add");
    const bool both_poly = F.finitely_supported() && G.finitely_supported();
    const std::size_t n = both_poly ? std::max(F.order(), G.order()) : std::min(F.order(), G.order());
    std::vector<RingElement> cs;
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RingElement a = i < F.order() ? F.coeffs[i] : re_zero(F.model);
        const RingElement b = i < G.order() ? G.coeffs[i] : re_zero(G.model);
        cs.push_back(re_add(F.model, a, b));
    }
    TruncatedSeries out;
    out.model = F.model;
    out.basis = F.basis;
    out.coeffs = std::move(cs);
    if (both_poly) out.tail = zero_tail(out.coeffs.size());
    return out;
}

TruncatedSeries scale(const TruncatedSeries& F, const RingElement& c) {
    TruncatedSeries out = F;
    for (RingElement& a : out.coeffs) a = re_mul(F.model, a, c);
    if (out.tail && out.tail->bound != 0) {
        out.tail->bound = out.tail->bound * norm(F.model, c).value();
        out.tail->exact = false;
    }
    return out;
}

namespace {

/// Sum of coefficient norms (archimedean) or their max (non-archimedean),
/// as a crude one-step envelope for clipped products.
Rational coeff_envelope(const TruncatedSeries& f) {
    const bool sum_mode = !f.model.nonarchimedean();
    Rational acc = 0;
    for (const RingElement& c : f.coeffs) {
        const Rational v = norm(f.model, c).value();
        acc = sum_mode ? acc + v : std::max(acc, v);
    }
    return acc;
}

} // namespace

TruncatedSeries multiply(const TruncatedSeries& F, const TruncatedSeries& G) {
    require_same_model(F, G);
    require_basis(F, BasisTag::Monomial, "multiply");
    require_basis(G, BasisTag::Monomial, "multiply");
    const std::size_t n = std::min(F.order(), G.order());
    std::vector<RingElement> cs(n, re_zero(F.model));
    for (std::size_t i = 0; i < std::min(F.order(), n); ++i) {
        if (re_is_zero(F.model, F.coeffs[i])) continue;
        for (std::size_t j = 0; i + j < n && j < G.order(); ++j)
            cs[i + j] = re_add(F.model, cs[i + j], re_mul(F.model, F.coeffs[i], G.coeffs[j]));
    }
    TruncatedSeries out;
    out.model = F.model;
    out.basis = BasisTag::Monomial;
    out.coeffs = std::move(cs);
    if (F.finitely_supported() && G.finitely_supported()) {
        const auto df = series_degree(F);
        const auto dg = series_degree(G);
        if (!df || !dg || *df + *dg < n) {
            out.tail = zero_tail(n);
        } else {
            // Clipped polynomial product: bounded, zero beyond the true degree.
            TailDescriptor t;
            t.start = n;
            t.bound = coeff_envelope(F) * coeff_envelope(G);
            t.ratio = 1;
            out.tail = t;
        }
    }
    return out;
}

TruncatedSeries compose(const TruncatedSeries& F, const TruncatedSeries& G) {
    require_same_model(F, G);
    require_basis(F, BasisTag::Monomial, "compose");
    require_basis(G, BasisTag::Monomial, "compose");
    if (G.order() == 0 || !re_is_zero(G.model, G.coeffs[0]))
        throw domain_error("compose requires the inner series to have zero constant term");
    const std::size_t n = std::min(F.order(), G.order());
    TruncatedSeries result = polynomial(F.model, BasisTag::Monomial, {}, n);
    if (n == 0) return result;

    TruncatedSeries g = G;
    g.coeffs.resize(n, re_zero(G.model)); // mod s^n view of the inner series
    g.tail.reset();

    TruncatedSeries power = polynomial(F.model, BasisTag::Monomial, {re_one(F.model)}, n);
    power.tail.reset();
    result.coeffs[0] = F.coeffs[0];
    for (std::size_t k = 1; k < F.order() && k < n; ++k) {
        power = multiply(power, g);
        power.tail.reset();
        if (re_is_zero(F.model, F.coeffs[k])) continue;
        for (std::size_t i = 0; i < n; ++i)
            result.coeffs[i] = re_add(F.model, result.coeffs[i],
                                      re_mul(F.model, F.coeffs[k], power.coeffs[i]));
    }

    if (F.finitely_supported() && G.finitely_supported()) {
        const auto df = series_degree(F);
        const auto dg = series_degree(G);
        const std::size_t true_deg = (df && dg) ? *df * *dg : 0;
        if (!df || !dg || true_deg < n) {
            result.tail = zero_tail(n);
            return result;
        }
    }
    result.tail.reset();
    return result;
}

TruncatedSeries geometric_inverse(const CoefficientModel& model, std::size_t N) {
    if (N < 1) throw domain_error("geometric_inverse needs order >= 1");
    std::vector<RingElement> cs(N, re_zero(model));
    RingElement sign = re_neg(model, re_one(model));
    for (std::size_t n = 1; n < N; ++n) {
        cs[n] = sign;
        sign = re_neg(model, sign);
    }
    TailDescriptor t;
    t.start = 1;
    t.bound = 1;
    t.ratio = 1;
    t.exact = true; // |(-1)^n| = 1 in every model here
    return make_series(model, BasisTag::Monomial, std::move(cs), t);
}

NormValue ps_norm(const TruncatedSeries& F, const Rational& rho) {
    require_basis(F, BasisTag::Monomial, "ps_norm");
    if (rho <= 0) throw domain_error("ps_norm needs rho > 0");
    return weighted_l1_norm(F.model, F.coeffs, F.tail, Weight::geometric(rho));
}

NormValue bs_norm(const TruncatedSeries& f, const Rational& rho) {
    require_basis(f, BasisTag::Mahler, "bs_norm");
    if (rho <= 0) throw domain_error("bs_norm needs rho > 0");
    return weighted_linf_norm(f.model, f.coeffs, f.tail, Weight::geometric(rho));
}

void BiTruncatedSeries::add_entry(std::size_t i, std::size_t j, const RingElement& c) {
    if (i >= order || j >= order)
        throw domain_error("tensor entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside the truncation square");
    auto key = std::make_pair(i, j);
    auto it = entries.find(key);
    if (it == entries.end()) {
        if (!re_is_zero(model, c)) entries.emplace(key, c);
        return;
    }
    it->second = re_add(model, it->second, c);
    if (re_is_zero(model, it->second)) entries.erase(it);
}

RingElement BiTruncatedSeries::entry(std::size_t i, std::size_t j) const {
    auto it = entries.find(std::make_pair(i, j));
    return it == entries.end() ? re_zero(model) : it->second;
}

bool bi_equal(const BiTruncatedSeries& a, const BiTruncatedSeries& b) {
    if (!(a.model == b.model)) return false;
    for (const auto& [k, v] : a.entries)
        if (!re_equal(a.model, v, b.entry(k.first, k.second))) return false;
    for (const auto& [k, v] : b.entries)
        if (!re_equal(b.model, v, a.entry(k.first, k.second))) return false;
    return true;
}

BiTruncatedSeries outer_product(const TruncatedSeries& F, const TruncatedSeries& G, std::size_t N) {
    require_same_model(F, G);
    BiTruncatedSeries T;
    T.model = F.model;
    T.order = N;
    for (std::size_t i = 0; i < F.order() && i < N; ++i) {
        if (re_is_zero(F.model, F.coeffs[i])) continue;
        for (std::size_t j = 0; j < G.order() && j < N; ++j)
            T.add_entry(i, j, re_mul(F.model, F.coeffs[i], G.coeffs[j]));
    }
    return T;
}

NormValue tensor_norm(const BiTruncatedSeries& T, const Rational& rho1, const Rational& rho2) {
    if (rho1 <= 0 || rho2 <= 0) throw domain_error("tensor_norm needs positive radii");
    const bool sum_mode = !T.model.nonarchimedean();
    NormValue acc{Rational(0)};
    for (const auto& [k, v] : T.entries) {
        const NormValue t = norm(T.model, v) *
                            NormValue(pow_rational(rho1, static_cast<long>(k.first)) *
                                      pow_rational(rho2, static_cast<long>(k.second)));
        acc = sum_mode ? acc + t : max(acc, t);
    }
    return acc;
}

} // namespace amice
