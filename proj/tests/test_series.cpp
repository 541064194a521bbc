#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amice/series.hpp"

using namespace amice;

namespace {

const CoefficientModel Z = CoefficientModel::trivial_int();
const CoefficientModel QA = CoefficientModel::arch_rational();

TruncatedSeries poly(const CoefficientModel& m, const std::vector<long>& cs, std::size_t order = 0) {
    return polynomial_int(m, BasisTag::Monomial, cs, order);
}

std::vector<long> int_coeffs(const TruncatedSeries& f) {
    std::vector<long> out;
    for (const auto& c : f.coeffs) out.push_back(std::get<Integer>(c).get_si());
    return out;
}

TruncatedSeries random_poly(std::mt19937& rng, std::size_t max_deg, std::size_t order) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<std::size_t> deg(0, max_deg);
    std::vector<long> cs(deg(rng) + 1);
    for (long& c : cs) c = coeff(rng);
    return poly(Z, cs, order);
}

} // namespace

TEST_CASE("multiplication basics") {
    const TruncatedSeries one_plus_s = poly(Z, {1, 1}, 4);
    const TruncatedSeries sq = multiply(one_plus_s, one_plus_s);
    CHECK(int_coeffs(sq) == std::vector<long>{1, 2, 1, 0});
    CHECK(sq.finitely_supported());

    const TruncatedSeries s2 = basis_element(Z, BasisTag::Monomial, 2, 8);
    const TruncatedSeries s3 = basis_element(Z, BasisTag::Monomial, 3, 8);
    CHECK(int_coeffs(multiply(s2, s3)) == std::vector<long>{0, 0, 0, 0, 0, 1, 0, 0});

    CHECK_THROWS_AS(multiply(one_plus_s, polynomial_int(Z, BasisTag::Mahler, {1})), domain_error);
    CHECK_THROWS_AS(multiply(one_plus_s, poly(QA, {1})), domain_error);
}

TEST_CASE("telescoping against a certified geometric series") {
    // sum s^n times (1 - s) is 1 mod s^N
    const std::size_t N = 12;
    std::vector<RingElement> ones(N, re_one(Z));
    const TruncatedSeries geo = make_series(Z, BasisTag::Monomial, std::move(ones),
                                            TailDescriptor{0, Rational(1), Rational(1), true});
    const TruncatedSeries result = multiply(geo, poly(Z, {1, -1}, N));
    CHECK(int_coeffs(result) == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(!result.finitely_supported()); // truncated product of an infinite series makes no claim
}

TEST_CASE("clipped polynomial products carry an honest bound instead of a zero tail") {
    const TruncatedSeries f = poly(QA, {1, 1}, 2);
    const TruncatedSeries clipped = multiply(f, f); // true degree 2, order 2
    CHECK(!clipped.finitely_supported());
    REQUIRE(clipped.tail.has_value());
    CHECK(clipped.tail->bound == 4); // (1+1)*(1+1) in the archimedean envelope

    const TruncatedSeries g = poly(Z, {1, 1}, 2);
    const TruncatedSeries clipped_na = multiply(g, g);
    REQUIRE(clipped_na.tail.has_value());
    CHECK(clipped_na.tail->bound == 1); // max-norm envelope under the trivial norm
}

TEST_CASE("composition basics") {
    const TruncatedSeries s = basis_element(Z, BasisTag::Monomial, 1, 6);
    const TruncatedSeries g = poly(Z, {0, 2, 0, -1}, 6);
    CHECK(series_equal(compose(s, g), g)); // F = s is the identity

    // F = s^2, G = -s + s^2: (-s + s^2)^2 = s^2 - 2 s^3 + s^4
    const TruncatedSeries f2 = basis_element(Z, BasisTag::Monomial, 2, 5);
    const TruncatedSeries inner = poly(Z, {0, -1, 1}, 5);
    CHECK(int_coeffs(compose(f2, inner)) == std::vector<long>{0, 0, 1, -2, 1});

    CHECK_THROWS_AS(compose(f2, poly(Z, {1, 1}, 5)), domain_error); // nonzero constant term
}

TEST_CASE("composition associativity on random polynomials") {
    std::mt19937 rng(31);
    const std::size_t N = 10;
    for (int rep = 0; rep < 25; ++rep) {
        TruncatedSeries f = random_poly(rng, 4, N);
        TruncatedSeries g = random_poly(rng, 4, N);
        TruncatedSeries h = random_poly(rng, 4, N);
        g.coeffs[0] = re_zero(Z);
        h.coeffs[0] = re_zero(Z);
        const TruncatedSeries lhs = compose(compose(f, g), h);
        const TruncatedSeries rhs = compose(f, compose(g, h));
        for (std::size_t i = 0; i < N; ++i)
            CHECK(re_equal(Z, lhs.coeffs[i], rhs.coeffs[i]));
    }
}

TEST_CASE("multiplication is associative and commutative at matched order") {
    std::mt19937 rng(32);
    const std::size_t N = 9;
    for (int rep = 0; rep < 40; ++rep) {
        const TruncatedSeries f = random_poly(rng, 6, N);
        const TruncatedSeries g = random_poly(rng, 6, N);
        const TruncatedSeries h = random_poly(rng, 6, N);
        const TruncatedSeries ab = multiply(f, g);
        const TruncatedSeries ba = multiply(g, f);
        for (std::size_t i = 0; i < std::min(ab.order(), ba.order()); ++i)
            CHECK(re_equal(Z, ab.coeffs[i], ba.coeffs[i]));
        const TruncatedSeries l = multiply(multiply(f, g), h);
        const TruncatedSeries r = multiply(f, multiply(g, h));
        for (std::size_t i = 0; i < std::min(l.order(), r.order()); ++i)
            CHECK(re_equal(Z, l.coeffs[i], r.coeffs[i]));
    }
}

TEST_CASE("geometric inverse") {
    const TruncatedSeries a = geometric_inverse(Z, 3);
    CHECK(int_coeffs(a) == std::vector<long>{0, -1, 1});
    REQUIRE(a.tail.has_value());
    CHECK(a.tail->exact);

    // defining property: (1 + alpha(s)) (1 + s) = 1 mod s^N
    const std::size_t N = 10;
    const TruncatedSeries lhs =
        multiply(add(poly(Z, {1}, N), geometric_inverse(Z, N)), poly(Z, {1, 1}, N));
    std::vector<long> expected(N, 0);
    expected[0] = 1;
    CHECK(int_coeffs(lhs) == expected);

    // ps-norm of the inverse over a trivial-norm ring at rho = 1/2
    CHECK(ps_norm(geometric_inverse(Z, 8), make_rational(1, 2)) == NormValue{make_rational(1, 2)});

    CHECK_THROWS_AS(geometric_inverse(Z, 0), domain_error);
}

TEST_CASE("the antipode substitution is an involution") {
    const std::size_t N = 12;
    const TruncatedSeries alpha = geometric_inverse(Z, N);
    const TruncatedSeries twice = compose(alpha, alpha);
    std::vector<long> expected(N, 0);
    expected[1] = 1;
    CHECK(int_coeffs(twice) == expected);
}

TEST_CASE("ps norm examples") {
    const TruncatedSeries s = basis_element(Z, BasisTag::Monomial, 1, 4);
    CHECK(ps_norm(s, make_rational(2, 3)) == NormValue{make_rational(2, 3)});
    CHECK(ps_norm(poly(Z, {0, 0, 0}), Rational(1)) == NormValue{Rational(0)});

    const TruncatedSeries f = poly(QA, {1, 1}, 2);
    CHECK(ps_norm(f, make_rational(1, 2)) == NormValue{make_rational(3, 2)});
    CHECK(ps_norm(poly(Z, {1, 1}, 2), make_rational(1, 2)) == NormValue{Rational(1)});

    CHECK_THROWS_AS(ps_norm(polynomial_int(Z, BasisTag::Mahler, {1}), Rational(1)), domain_error);
}

TEST_CASE("bs norm examples") {
    const TruncatedSeries b2 = basis_element(Z, BasisTag::Mahler, 2, 4);
    CHECK(bs_norm(b2, Rational(3)) == NormValue{Rational(9)});
    CHECK(bs_norm(polynomial_int(Z, BasisTag::Mahler, {0, 0}), Rational(5)) == NormValue{Rational(0)});

    // coefficients p^n over Qp at rho = 1: sup p^-n 1^n attained at n = 0
    const auto q3 = CoefficientModel::padic_rational(3);
    std::vector<RingElement> cs;
    for (int n = 0; n < 5; ++n) cs.push_back(re_from_rational(q3, pow_rational(Rational(3), n)));
    const TruncatedSeries f = make_series(
        q3, BasisTag::Mahler, std::move(cs),
        TailDescriptor{0, Rational(1), make_rational(1, 3), true});
    CHECK(bs_norm(f, Rational(1)) == NormValue{Rational(1)});
}

TEST_CASE("submultiplicativity of the ps norm") {
    std::mt19937 rng(77);
    for (const Rational& rho : {make_rational(1, 2), Rational(1), Rational(2)}) {
        for (int rep = 0; rep < 30; ++rep) {
            // order large enough that the product is exact, so the comparison is too
            const TruncatedSeries f = random_poly(rng, 5, 12);
            const TruncatedSeries g = random_poly(rng, 5, 12);
            CHECK(ps_norm(multiply(f, g), rho) <= ps_norm(f, rho) * ps_norm(g, rho));
        }
    }
}

TEST_CASE("tensor squares and their norms") {
    BiTruncatedSeries T;
    T.model = QA;
    T.order = 4;
    T.add_entry(1, 0, re_one(QA));
    T.add_entry(0, 1, re_one(QA));
    T.add_entry(1, 1, re_one(QA));
    const Rational rho = make_rational(1, 2);
    // archimedean: 2 rho + rho^2
    CHECK(tensor_norm(T, rho, rho) == NormValue{make_rational(5, 4)});

    BiTruncatedSeries Tz;
    Tz.model = Z;
    Tz.order = 4;
    Tz.add_entry(1, 0, re_one(Z));
    Tz.add_entry(0, 1, re_one(Z));
    Tz.add_entry(1, 1, re_one(Z));
    CHECK(tensor_norm(Tz, rho, rho) == NormValue{rho}); // sup{rho, rho^2} = rho

    const BiTruncatedSeries empty{Z, 4, {}};
    CHECK(tensor_norm(empty, Rational(1), Rational(1)) == NormValue{Rational(0)});

    // entries cancel back to zero and disappear
    BiTruncatedSeries C;
    C.model = Z;
    C.order = 2;
    C.add_entry(0, 0, re_one(Z));
    C.add_entry(0, 0, re_neg(Z, re_one(Z)));
    CHECK(C.entries.empty());
    CHECK_THROWS_AS(C.add_entry(5, 0, re_one(Z)), domain_error);
}

TEST_CASE("outer products populate the square") {
    const TruncatedSeries f = poly(Z, {1, 2}, 3);
    const BiTruncatedSeries sq = outer_product(f, f, 3);
    CHECK(std::get<Integer>(sq.entry(0, 0)) == 1);
    CHECK(std::get<Integer>(sq.entry(1, 0)) == 2);
    CHECK(std::get<Integer>(sq.entry(1, 1)) == 4);
    CHECK(std::get<Integer>(sq.entry(2, 2)) == 0);
}

TEST_CASE("series coefficient access respects tails") {
    const TruncatedSeries p = poly(Z, {1, 2}, 2);
    CHECK(std::get<Integer>(series_coeff(p, 10)) == 0); // polynomial: known zero

    const TruncatedSeries g = geometric_inverse(Z, 4);
    CHECK_THROWS_AS(series_coeff(g, 10), insufficient_data_error);

    CHECK_THROWS_AS(pad_to(g, 8), domain_error);
    CHECK(pad_to(p, 5).order() == 5);
}

TEST_CASE("tail certificates are checked on the stored overlap") {
    std::vector<RingElement> cs{re_one(Z), re_from_integer(Z, Integer(7))};
    CHECK_THROWS_AS(
        make_series(Z, BasisTag::Monomial, cs, TailDescriptor{0, make_rational(1, 2), Rational(1), false}),
        certificate_error);
    // |7| = 1 under the trivial norm, so C = 1 passes
    const TruncatedSeries ok =
        make_series(Z, BasisTag::Monomial, cs, TailDescriptor{0, Rational(1), Rational(1), false});
    CHECK(ok.order() == 2);
}
