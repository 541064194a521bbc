#include "amice/hopf.hpp"

#include <array>
#include <map>

namespace amice {

namespace {

void require_basis(const TruncatedSeries& f, BasisTag tag, const char* op) {
    if (f.basis != tag)
        throw domain_error(std::string(op) + " expects the " + basis_string(tag) + " basis, got " +
                           basis_string(f.basis));
}

} // namespace

BiTruncatedSeries comultiply(const TruncatedSeries& F, std::size_t N) {
    require_basis(F, BasisTag::Monomial, "comultiply");
    BiTruncatedSeries T;
    T.model = F.model;
    T.order = N;
    for (std::size_t n = 0; n < F.order(); ++n) {
        if (re_is_zero(F.model, F.coeffs[n])) continue;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                const std::size_t k = n - i - j;
                const std::size_t u = i + k;
                const std::size_t v = j + k;
                if (u >= N || v >= N) continue;
                const RingElement c = re_mul(
                    F.model, F.coeffs[n], re_from_integer(F.model, trinomial(i, j, k)));
                T.add_entry(u, v, c);
            }
        }
    }
    return T;
}

RingElement counit(const TruncatedSeries& F) {
    require_basis(F, BasisTag::Monomial, "counit");
    return F.order() == 0 ? re_zero(F.model) : F.coeffs[0];
}

TruncatedSeries antipode(const TruncatedSeries& F, std::size_t N) {
    require_basis(F, BasisTag::Monomial, "antipode");
    const TruncatedSeries base =
        F.finitely_supported() && F.order() < N ? pad_to(F, N) : F;
    return compose(base, geometric_inverse(F.model, N));
}

CertifiedAntipode antipode_on_disk(const TruncatedSeries& F, const Rational& rho) {
    if (!F.model.nonarchimedean())
        throw domain_error("the normed antipode exists only over non-archimedean models");
    if (rho > 1) throw domain_error("the normed antipode needs rho <= 1");
    CertifiedAntipode out{antipode(F, F.order()), ps_norm(F, rho), NormValue{Rational(0)}};
    out.output_norm = ps_norm(out.series, rho);
    return out;
}

namespace {

using TripleKey = std::array<std::size_t, 3>;
using TripleTensor = std::map<TripleKey, RingElement>;

void triple_add(const CoefficientModel& model, TripleTensor& t, const TripleKey& k,
                const RingElement& c) {
    auto it = t.find(k);
    if (it == t.end()) {
        if (!re_is_zero(model, c)) t.emplace(k, c);
        return;
    }
    it->second = re_add(model, it->second, c);
    if (re_is_zero(model, it->second)) t.erase(it);
}

/// Applies Delta to one slot of each entry of a two-tensor, producing a three-tensor.
TripleTensor expand_slot(const CoefficientModel& model, const BiTruncatedSeries& T,
                         bool first_slot, std::size_t N) {
    TripleTensor out;
    for (const auto& [key, c] : T.entries) {
        const std::size_t expand = first_slot ? key.first : key.second;
        const std::size_t keep = first_slot ? key.second : key.first;
        const BiTruncatedSeries d =
            comultiply(basis_element(model, BasisTag::Monomial, expand, expand + 1), N);
        for (const auto& [dkey, dc] : d.entries) {
            const TripleKey k = first_slot
                                    ? TripleKey{dkey.first, dkey.second, keep}
                                    : TripleKey{keep, dkey.first, dkey.second};
            triple_add(model, out, k, re_mul(model, c, dc));
        }
    }
    return out;
}

bool triple_equal(const CoefficientModel& model, const TripleTensor& a, const TripleTensor& b,
                  TripleKey* where) {
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        const RingElement other = it == b.end() ? re_zero(model) : it->second;
        if (!re_equal(model, v, other)) {
            if (where) *where = k;
            return false;
        }
    }
    for (const auto& [k, v] : b) {
        if (a.find(k) == a.end() && !re_is_zero(model, v)) {
            if (where) *where = k;
            return false;
        }
    }
    return true;
}

std::string key_string(const TripleKey& k) {
    return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

} // namespace

HopfAxiomReport verify_hopf_axioms(const CoefficientModel& model, std::size_t N) {
    if (N < 1) throw domain_error("verify_hopf_axioms needs order >= 1");
    HopfAxiomReport report;
    report.coassociative = true;
    report.counital = true;
    report.antipodal = true;

    for (std::size_t n = 0; n < N && report.coassociative && report.counital; ++n) {
        const TruncatedSeries sn = basis_element(model, BasisTag::Monomial, n, N);
        const BiTruncatedSeries d = comultiply(sn, N);

        TripleKey bad{};
        const TripleTensor left = expand_slot(model, d, true, N);
        const TripleTensor right = expand_slot(model, d, false, N);
        if (!triple_equal(model, left, right, &bad)) {
            report.coassociative = false;
            report.first_failure = "coassociativity fails on s^" + std::to_string(n) +
                                   " at coefficient " + key_string(bad);
            break;
        }

        // (eps (x) id) Delta = id = (id (x) eps) Delta, read off the 0-slices.
        for (std::size_t v = 0; v < N && report.counital; ++v) {
            const RingElement want = v == n ? re_one(model) : re_zero(model);
            if (!re_equal(model, d.entry(0, v), want) || !re_equal(model, d.entry(v, 0), want)) {
                report.counital = false;
                report.first_failure = "counit law fails on s^" + std::to_string(n) +
                                       " at index " + std::to_string(v);
            }
        }
    }

    const TruncatedSeries one = polynomial_int(model, BasisTag::Monomial, {1}, N);
    for (std::size_t m = 0; N >= 2 && m + 2 <= N && report.antipodal; ++m) {
        // Group-like vector (1+s)^m: both sides of the antipode law reduce to
        // the finite products (1+s)^{-m} (1+s)^m and (1+s)^m (1+s)^{-m}.
        const TruncatedSeries gm = grouplike_from_exponent(model, re_from_integer(model, Integer(m)), N);
        const TruncatedSeries am = antipode(gm, N);
        if (!series_equal(multiply(am, gm), one) || !series_equal(multiply(gm, am), one)) {
            report.antipodal = false;
            report.first_failure = "antipode law fails on (1+s)^" + std::to_string(m);
        }
    }
    return report;
}

TruncatedSeries mahler_product(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!(f.model == g.model))
        throw domain_error("model mismatch: " + f.model.name() + " vs " + g.model.name());
    require_basis(f, BasisTag::Mahler, "mahler_product");
    require_basis(g, BasisTag::Mahler, "mahler_product");

    const bool both_poly = f.finitely_supported() && g.finitely_supported();
    std::size_t out_order;
    if (both_poly) {
        const auto df = series_degree(f);
        const auto dg = series_degree(g);
        out_order = (df && dg) ? *df + *dg + 1 : 1;
    } else {
        // Coefficient l only involves input indices <= l, so the product is
        // exact up to the common truncation order.
        out_order = std::min(f.order(), g.order());
    }

    std::vector<RingElement> cs(out_order, re_zero(f.model));
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (re_is_zero(f.model, f.coeffs[n])) continue;
        for (std::size_t k = 0; k < g.order(); ++k) {
            if (re_is_zero(g.model, g.coeffs[k])) continue;
            const RingElement ab = re_mul(f.model, f.coeffs[n], g.coeffs[k]);
            const std::size_t lo = std::max(n, k);
            for (std::size_t l = lo; l <= n + k && l < out_order; ++l) {
                // binom(l,n) * binom(n, l-k) is the structure constant on binom(x,l).
                const Integer c = binomial(Integer(l), n) * binomial(Integer(n), l - k);
                cs[l] = re_add(f.model, cs[l], re_mul(f.model, ab, re_from_integer(f.model, c)));
            }
        }
    }
    TruncatedSeries out;
    out.model = f.model;
    out.basis = BasisTag::Mahler;
    out.coeffs = std::move(cs);
    if (both_poly) {
        TailDescriptor t;
        t.start = out_order;
        t.bound = 0;
        t.ratio = 0;
        t.exact = true;
        out.tail = t;
    }
    return out;
}

BiTruncatedSeries mahler_comultiply(const TruncatedSeries& f, std::size_t N) {
    require_basis(f, BasisTag::Mahler, "mahler_comultiply");
    BiTruncatedSeries T;
    T.model = f.model;
    T.order = N;
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (re_is_zero(f.model, f.coeffs[n])) continue;
        for (std::size_t i = 0; i <= n; ++i) {
            const std::size_t j = n - i;
            if (i >= N || j >= N) continue;
            T.add_entry(i, j, f.coeffs[n]);
        }
    }
    return T;
}

std::vector<RingElement> mahler_antipode(const TruncatedSeries& f,
                                         const std::vector<unsigned long>& points,
                                         std::optional<unsigned long> precision) {
    require_basis(f, BasisTag::Mahler, "mahler_antipode");
    std::size_t terms = f.order();
    if (!f.finitely_supported()) {
        if (f.model.kind != ModelKind::PAdicRational && f.model.kind != ModelKind::TruncatedZp)
            throw certificate_error(
                "mahler_antipode of a non-polynomial needs a p-adic model with a decay certificate");
        if (!f.tail)
            throw certificate_error("mahler_antipode of a non-polynomial needs a tail certificate");
        if (!precision)
            precision = f.model.kind == ModelKind::TruncatedZp ? f.model.precision : 1;
        // |binom(-n,k)|_p <= 1, so the remainder past K is bounded by C r^K;
        // find K with C r^K <= p^{-precision}.
        const Rational target =
            pow_rational(Rational(static_cast<long>(f.model.prime)), -static_cast<long>(*precision));
        Rational bound = f.tail->bound;
        if (f.tail->ratio >= 1 && bound > target)
            throw certificate_error("tail certificate does not converge at the requested precision");
        std::size_t K = 0;
        Rational running = f.tail->bound;
        while (running > target) {
            running *= f.tail->ratio;
            ++K;
        }
        if (K > f.order())
            throw certificate_error(
                "tail certificate reaches p^-" + std::to_string(*precision) + " only after index " +
                std::to_string(K) + ", beyond truncation order " + std::to_string(f.order()));
        terms = K;
    }

    std::vector<RingElement> out;
    out.reserve(points.size());
    for (unsigned long n : points) {
        RingElement acc = re_zero(f.model);
        for (std::size_t k = 0; k < terms; ++k) {
            const Integer b = binomial(-Integer(n), k);
            acc = re_add(f.model, acc, re_mul(f.model, f.coeffs[k], re_from_integer(f.model, b)));
        }
        out.push_back(acc);
    }
    return out;
}

namespace {

/// Where comultiply of the stored window agrees with Delta of the element.
bool in_valid_region(const TruncatedSeries& F, std::size_t u, std::size_t v) {
    if (F.finitely_supported()) return true;
    return u + v < F.order();
}

} // namespace

bool is_grouplike(const TruncatedSeries& F, std::size_t N) {
    require_basis(F, BasisTag::Monomial, "is_grouplike");
    if (F.order() == 0 || !re_equal(F.model, F.coeffs[0], re_one(F.model))) return false;
    const std::size_t M = std::min(N, F.order());
    const BiTruncatedSeries d = comultiply(F, M);
    const BiTruncatedSeries sq = outer_product(F, F, M);
    for (std::size_t u = 0; u < M; ++u)
        for (std::size_t v = 0; v < M; ++v) {
            if (!in_valid_region(F, u, v)) continue;
            if (!re_equal(F.model, d.entry(u, v), sq.entry(u, v))) return false;
        }
    return true;
}

TruncatedSeries grouplike_from_exponent(const CoefficientModel& model, const RingElement& a,
                                        std::size_t N) {
    require_carrier(model, a);
    if (N == 0) throw domain_error("grouplike_from_exponent needs order >= 1");
    std::vector<RingElement> cs;
    cs.reserve(N);

    if (model.padic_carrier()) {
        const PadicValue& av = std::get<PadicValue>(a);
        if (!av.zero && av.val < 0) throw domain_error("exponent must lie in Zp");
        RingElement c = re_one(model);
        cs.push_back(c);
        for (std::size_t n = 1; n < N; ++n) {
            const RingElement factor =
                re_sub(model, a, re_from_integer(model, Integer(static_cast<long>(n - 1))));
            c = re_mul(model, c, factor);
            c = padic_div_integer(model, std::get<PadicValue>(c), Integer(static_cast<long>(n)));
            const PadicValue& cv = std::get<PadicValue>(c);
            if (!cv.zero && cv.val < 0)
                throw precision_error("binomial coefficient at s^" + std::to_string(n) +
                                      " left Zp; input precision exhausted");
            if (cv.abs_precision() <= 0)
                throw precision_error("coefficient of s^" + std::to_string(n) +
                                      " is ill-determined at working precision");
            cs.push_back(c);
        }
        TailDescriptor t;
        t.start = 0;
        t.bound = 1;
        t.ratio = 1;
        return make_series(model, BasisTag::Monomial, std::move(cs), t);
    }

    if (!std::holds_alternative<Integer>(a) &&
        !(std::holds_alternative<Rational>(a) && std::get<Rational>(a).get_den() == 1))
        throw domain_error("grouplike exponent must be an integer or a truncated p-adic");
    const Integer ai =
        std::holds_alternative<Integer>(a) ? std::get<Integer>(a) : std::get<Rational>(a).get_num();

    for (std::size_t n = 0; n < N; ++n) cs.push_back(re_from_integer(model, binomial(ai, n)));

    std::optional<TailDescriptor> tail;
    if (ai >= 0 && ai < static_cast<long>(N)) {
        TailDescriptor t;
        t.start = N;
        t.bound = 0;
        t.ratio = 0;
        t.exact = true;
        tail = t;
    } else if (model.nonarchimedean()) {
        tail = TailDescriptor{0, 1, 1, false}; // integer coefficients have norm <= 1
    } else if (ai >= 0) {
        // Clipped binomial row: bounded by its largest remaining entry, zero past a.
        Rational big = 0;
        for (Integer n = N; n <= ai; ++n) {
            const Integer b = abs(binomial(ai, n.get_ui()));
            if (Rational(b) > big) big = Rational(b);
        }
        tail = TailDescriptor{N, big, 1, false};
    } else {
        // |binom(a,n)| = binom(n+|a|-1, |a|-1) <= 2^{n+|a|-1}.
        const unsigned long m = Integer(-ai).get_ui();
        tail = TailDescriptor{0, Rational(pow_integer(2, m == 0 ? 0 : m - 1)), Rational(2), false};
    }
    return make_series(model, BasisTag::Monomial, std::move(cs), tail);
}

DeltaNormReport delta_norm_bound_check(std::size_t n, const Rational& rho,
                                       const CoefficientModel& model) {
    if (rho <= 0) throw domain_error("delta_norm_bound_check needs rho > 0");
    const TruncatedSeries sn = basis_element(model, BasisTag::Monomial, n, n + 1);
    const BiTruncatedSeries d = comultiply(sn, n + 1);
    DeltaNormReport report;
    report.computed = tensor_norm(d, rho, rho);
    if (model.nonarchimedean() && rho <= 1) {
        report.equality_expected = true;
        report.bound = pow_norm(NormValue(rho), n);
        report.satisfied = report.computed == report.bound;
    } else {
        report.equality_expected = false;
        report.bound = pow_norm(NormValue(Rational(2) * rho + rho * rho), n);
        report.satisfied = report.computed <= report.bound;
    }
    return report;
}

} // namespace amice
