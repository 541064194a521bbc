#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amice/amice_transform.hpp"
#include "amice/hopf.hpp"

using namespace amice;

namespace {

const CoefficientModel Z = CoefficientModel::trivial_int();
const CoefficientModel QNA = CoefficientModel::sup_rational();

// Independent oracle: B_0 = 1 and sum_{k=0}^{n} binom(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_recurrence_oracle(std::size_t max_n) {
    std::vector<Rational> B{Rational(1)};
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += Rational(binomial(Integer(n + 1), k)) * B[k];
        B.push_back(-acc / Rational(Integer(n + 1)));
    }
    return B;
}

// Documented alternative oracle: coefficients of t/(e^t - 1) via power-series
// reciprocal of sum_k t^k/(k+1)!, then B_n = n! [t^n].
std::vector<Rational> bernoulli_egf_oracle(std::size_t max_n) {
    std::vector<Rational> denom(max_n + 1);
    for (std::size_t k = 0; k <= max_n; ++k)
        denom[k] = make_rational(1, factorial(k + 1));
    std::vector<Rational> inv(max_n + 1);
    inv[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += denom[k] * inv[n - k];
        inv[n] = -acc;
    }
    std::vector<Rational> B(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) B[n] = inv[n] * Rational(factorial(n));
    return B;
}

RingElement pair_value(const TruncatedSeries& xi, const TruncatedSeries& f) {
    const PairingResult r = pairing(xi, f);
    REQUIRE(r.truncation_bound == NormValue{Rational(0)});
    return r.value;
}

// <X, Y> over the tensor square: monomial-side entries against Mahler-side entries.
RingElement pair_tensor(const BiTruncatedSeries& X, const BiTruncatedSeries& Y) {
    RingElement acc = re_zero(X.model);
    for (const auto& [k, c] : X.entries)
        acc = re_add(X.model, acc, re_mul(X.model, c, Y.entry(k.first, k.second)));
    return acc;
}

TruncatedSeries random_poly(std::mt19937& rng, BasisTag basis, std::size_t max_deg) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<std::size_t> deg(0, max_deg);
    std::vector<long> cs(deg(rng) + 1);
    for (long& c : cs) c = coeff(rng);
    return polynomial_int(Z, basis, cs);
}

} // namespace

TEST_CASE("dual bases pair to the identity matrix") {
    for (std::size_t n = 0; n <= 32; ++n)
        for (std::size_t k = 0; k <= 32; ++k) {
            const RingElement v = pair_value(basis_element(Z, BasisTag::Monomial, n, n + 1),
                                             basis_element(Z, BasisTag::Mahler, k, k + 1));
            CHECK(std::get<Integer>(v) == (n == k ? 1 : 0));
        }
}

TEST_CASE("pairing against a group-like vector is evaluation") {
    const TruncatedSeries g2 = grouplike_from_exponent(Z, re_from_integer(Z, Integer(2)), 12);
    std::mt19937 rng(3);
    for (int rep = 0; rep < 25; ++rep) {
        const TruncatedSeries f = random_poly(rng, BasisTag::Mahler, 8);
        CHECK(re_equal(Z, pair_value(g2, f), evaluate(f, 2)));
    }
    CHECK(std::get<Integer>(pair_value(polynomial_int(Z, BasisTag::Monomial, {1, 1}),
                                       basis_element(Z, BasisTag::Mahler, 1, 2))) == 1);
}

TEST_CASE("pairing validates its inputs") {
    const TruncatedSeries xi = polynomial_int(Z, BasisTag::Monomial, {1});
    const TruncatedSeries f = basis_element(Z, BasisTag::Mahler, 0, 1);
    CHECK_THROWS_AS(pairing(f, f), domain_error);   // wrong basis on the left
    CHECK_THROWS_AS(pairing(xi, xi), domain_error); // wrong basis on the right
    CHECK_THROWS_AS(pairing(xi, polynomial_int(QNA, BasisTag::Mahler, {1})), domain_error);

    // divergent certificate product: no value asserted
    const TruncatedSeries wide1 = make_series(Z, BasisTag::Monomial, {re_one(Z)},
                                              TailDescriptor{0, Rational(1), Rational(1), false});
    const TruncatedSeries wide2 = make_series(Z, BasisTag::Mahler, {re_one(Z)},
                                              TailDescriptor{0, Rational(1), Rational(2), false});
    CHECK_THROWS_AS(pairing(wide1, wide2), domain_error);

    // summable certificate product: value with a remainder bound
    const TruncatedSeries half = make_series(
        Z, BasisTag::Mahler, {re_one(Z)}, TailDescriptor{0, Rational(1), make_rational(1, 3), false});
    const PairingResult r = pairing(wide1, half);
    CHECK(r.truncation_bound == NormValue{make_rational(1, 3)});
}

TEST_CASE("amice transform bookkeeping") {
    const Distribution dirac0 = amice_transform(Z, {re_one(Z)});
    std::mt19937 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        const TruncatedSeries f = random_poly(rng, BasisTag::Mahler, 6);
        CHECK(re_equal(Z, pair_value(dirac0, f), evaluate(f, 0)));
    }

    const Distribution empty = amice_transform(Z, {});
    CHECK(empty.order() == 0);
    CHECK(empty.finitely_supported());

    // moments binom(a, n) assemble the group-like (1+s)^a
    const std::size_t N = 10;
    std::vector<RingElement> moments;
    for (std::size_t n = 0; n < N; ++n) moments.push_back(re_from_integer(Z, binomial(Integer(7), n)));
    const Distribution dirac7 = amice_transform(Z, std::move(moments));
    const TruncatedSeries g7 = grouplike_from_exponent(Z, re_from_integer(Z, Integer(7)), N);
    for (std::size_t i = 0; i < N; ++i) CHECK(re_equal(Z, dirac7.coeffs[i], g7.coeffs[i]));
}

TEST_CASE("Stirling cache satisfies its recurrence and the power-sum identity") {
    const StirlingCache S(12);
    CHECK(S.value(0, 0) == 1);
    CHECK(S.value(4, 2) == 7);
    CHECK(S.value(5, 3) == 25);
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(S.value(n, k) ==
                  Integer(static_cast<long>(k)) * S.value(n - 1, k) + S.value(n - 1, k - 1));

    // x^n = sum_k S(n,k) k! binom(x,k), checked pointwise at x = 0..n
    for (std::size_t n = 0; n <= 12; ++n)
        for (unsigned long x = 0; x <= n; ++x) {
            Integer rhs = 0;
            for (std::size_t k = 0; k <= n; ++k)
                rhs += S.value(n, k) * factorial(k) * binomial(Integer(x), k);
            CHECK(rhs == pow_integer(Integer(x), n));
        }
}

TEST_CASE("power moments of Dirac measures are pure powers") {
    for (long a = -10; a <= 10; ++a) {
        const Distribution mu = grouplike_from_exponent(Z, re_from_integer(Z, Integer(a)), 12);
        for (std::size_t n = 0; n <= 10; ++n)
            CHECK(std::get<Integer>(power_moment(mu, n)) == pow_integer(Integer(a), n));
    }
    // moments past the stored order are only an error when the distribution
    // genuinely continues (a polynomial one has known zero moments)
    CHECK_THROWS_AS(power_moment(kubota_leopoldt(2), 3), insufficient_data_error);
    CHECK(std::get<Rational>(power_moment(amice_transform(QNA, {re_one(QNA)}), 3)) == 0);
}

TEST_CASE("Kubota-Leopoldt coefficients and norm growth") {
    const Distribution mu = kubota_leopoldt(8);
    CHECK(std::get<Rational>(mu.coeffs[0]) == 1);
    CHECK(std::get<Rational>(mu.coeffs[1]) == make_rational(-1, 2));
    CHECK(std::get<Rational>(mu.coeffs[2]) == make_rational(1, 3));

    // |mu_n| <= n + 1 in the sup norm
    for (std::size_t n = 0; n < mu.order(); ++n)
        CHECK(norm(QNA, mu.coeffs[n]) <= NormValue{Rational(Integer(n + 1))});

    CHECK(std::get<Rational>(power_moment(kubota_leopoldt(3), 2)) == make_rational(1, 6));
    CHECK_THROWS_AS(kubota_leopoldt(0), domain_error);
    CHECK_THROWS_AS(kubota_leopoldt(3, Z), domain_error);
}

TEST_CASE("Bernoulli numbers against the recurrence oracle") {
    const auto oracle = bernoulli_recurrence_oracle(20);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(bernoulli(n) == oracle[n]);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(0), domain_error);
}

TEST_CASE("the two Bernoulli oracles agree with each other") {
    const auto rec = bernoulli_recurrence_oracle(16);
    const auto egf = bernoulli_egf_oracle(16);
    for (std::size_t n = 0; n <= 16; ++n) CHECK(rec[n] == egf[n]);
}

TEST_CASE("duality adjunction: multiplication against the Mahler coproduct") {
    std::mt19937 rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        TruncatedSeries F = random_poly(rng, BasisTag::Monomial, 8);
        TruncatedSeries G = random_poly(rng, BasisTag::Monomial, 8);
        TruncatedSeries f = random_poly(rng, BasisTag::Mahler, 8);
        const std::size_t N = 20;
        F = pad_to(F, N);
        G = pad_to(G, N);
        const RingElement lhs = pair_value(multiply(F, G), f);
        const RingElement rhs = pair_tensor(outer_product(F, G, N), mahler_comultiply(f, N));
        CHECK(re_equal(Z, lhs, rhs));
    }
}

TEST_CASE("duality adjunction: comultiplication against the Mahler product") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 100; ++rep) {
        const TruncatedSeries F = pad_to(random_poly(rng, BasisTag::Monomial, 8), 20);
        const TruncatedSeries f = random_poly(rng, BasisTag::Mahler, 8);
        const TruncatedSeries g = random_poly(rng, BasisTag::Mahler, 8);
        const std::size_t N = 20;
        const RingElement lhs = pair_tensor(comultiply(F, N), outer_product(f, g, N));
        const RingElement rhs = pair_value(F, mahler_product(f, g));
        CHECK(re_equal(Z, lhs, rhs));
    }
}

TEST_CASE("Dirac consistency including negative points via the reflection") {
    std::mt19937 rng(43);
    for (long a = -10; a <= 10; ++a) {
        const TruncatedSeries ga = grouplike_from_exponent(Z, re_from_integer(Z, Integer(a)), 24);
        for (int rep = 0; rep < 10; ++rep) {
            const TruncatedSeries f = random_poly(rng, BasisTag::Mahler, 8);
            const RingElement got = pair_value(ga, f);
            RingElement want;
            if (a >= 0) {
                want = evaluate(f, static_cast<unsigned long>(a));
            } else {
                want = mahler_antipode(f, {static_cast<unsigned long>(-a)}).front();
            }
            CHECK(re_equal(Z, got, want));
        }
    }
}

TEST_CASE("base change transports series and commutes with the pairing") {
    const auto m = RingMorphism::int_to_zp(5, 4);
    const TruncatedSeries xi = grouplike_from_exponent(Z, re_from_integer(Z, Integer(3)), 6);
    const TruncatedSeries f = basis_element(Z, BasisTag::Mahler, 2, 3);
    const BaseChangeReport r = base_change_commutes(xi, f, m);
    CHECK(r.equal);
    // f(3) = binom(3,2) = 3 on both routes
    CHECK(padic_residue(m.target, std::get<PadicValue>(r.mapped_pairing), 4) == 3);

    const TruncatedSeries zero = polynomial_int(Z, BasisTag::Monomial, {});
    const TruncatedSeries fz = basis_element(Z, BasisTag::Mahler, 1, 2);
    CHECK(base_change_commutes(zero, fz, m).equal);

    const TruncatedSeries id_f = base_change_series(f, RingMorphism::identity(Z));
    CHECK(series_equal(id_f, f));

    CHECK_THROWS_AS(base_change_series(polynomial_int(QNA, BasisTag::Mahler, {1}), m), domain_error);
}

TEST_CASE("base change commutes on random pairs for several primes") {
    std::mt19937 rng(44);
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        const auto m = RingMorphism::int_to_zp(p, 6);
        for (int rep = 0; rep < 100; ++rep) {
            const TruncatedSeries xi = random_poly(rng, BasisTag::Monomial, 6);
            const TruncatedSeries f = random_poly(rng, BasisTag::Mahler, 6);
            CHECK(base_change_commutes(xi, f, m).equal);
        }
    }
}

TEST_CASE("base change of the log series reaches the p-adic bound") {
    // coefficients (-1)^{n+1}/n for n >= 1: after the move to Qp their norms
    // are p^{v_p(n)} <= n
    const auto m = RingMorphism::qna_to_qp(3);
    std::vector<RingElement> cs{re_zero(QNA)};
    for (long n = 1; n < 12; ++n) {
        Rational c = make_rational(1, n);
        if (n % 2 == 0) c = -c;
        cs.push_back(re_from_rational(QNA, c));
    }
    const TruncatedSeries log_series = polynomial(QNA, BasisTag::Monomial, std::move(cs));
    const TruncatedSeries over_qp = base_change_series(log_series, m);
    for (std::size_t n = 1; n < over_qp.order(); ++n) {
        CHECK(norm(m.target, over_qp.coeffs[n]) <= NormValue{Rational(Integer(n))});
        CHECK(norm(m.target, over_qp.coeffs[n]) <= norm(m.source, log_series.coeffs[n]));
    }
}
