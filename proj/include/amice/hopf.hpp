#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amice/series.hpp"

namespace amice {

/**
 * Comultiplication on the series side: s^n maps to (s(x)1 + 1(x)s + s(x)s)^n,
 * with trinomial coefficients, truncated to the square [0,N)^2. Entries at
 * positions (u,v) with u+v >= order() of a non-polynomial input depend on
 * clipped coefficients; see grouplike_valid_region.
 */
BiTruncatedSeries comultiply(const TruncatedSeries& F, std::size_t N);

/// Counit: the constant coefficient.
RingElement counit(const TruncatedSeries& F);

/// Formal antipode: substitution of (1+s)^{-1} - 1, truncated at N. Any model.
TruncatedSeries antipode(const TruncatedSeries& F, std::size_t N);

/**
 * Norm-certified antipode on the rho-disk; only non-archimedean models carry
 * it (and only for rho <= 1). Returns the series with the certified bound
 * ps_norm(result, rho) <= ps_norm(F, rho).
 */
struct CertifiedAntipode {
    TruncatedSeries series;
    NormValue input_norm;
    NormValue output_norm;
};
CertifiedAntipode antipode_on_disk(const TruncatedSeries& F, const Rational& rho);

struct HopfAxiomReport {
    bool coassociative = false;
    bool counital = false;
    bool antipodal = false;
    std::string first_failure;
    bool ok() const { return coassociative && counital && antipodal; }
};

/**
 * Exact coefficient-level verification at truncation order N: coassociativity
 * and the counit laws on the basis s^n (n < N), the antipode law on the
 * group-like vectors (1+s)^m (m <= N-2), where both sides are finite exact
 * computations.
 */
HopfAxiomReport verify_hopf_axioms(const CoefficientModel& model, std::size_t N);

/// Product on the Mahler side (the dual of comultiplication), exact.
TruncatedSeries mahler_product(const TruncatedSeries& f, const TruncatedSeries& g);

/// Coproduct on the Mahler side: binom(x,n) -> sum_{i+j=n} binom(x,i)(x)binom(x,j).
BiTruncatedSeries mahler_comultiply(const TruncatedSeries& f, std::size_t N);

/**
 * Values f(-n) of the Mahler-side antipode at the requested points, via
 * f(-n) = sum_k binom(-n,k) a_k. Exact for finite support; for a tail-certified
 * p-adic series the sum runs until the certified remainder drops below
 * p^{-precision}.
 */
std::vector<RingElement> mahler_antipode(const TruncatedSeries& f,
                                         const std::vector<unsigned long>& points,
                                         std::optional<unsigned long> precision = std::nullopt);

/**
 * F(0) = 1 and Delta(F) = F (x) F, compared on the region where both sides
 * are exact: the full square for polynomials, {u + v < order} otherwise.
 */
bool is_grouplike(const TruncatedSeries& F, std::size_t N);

/// (1+s)^a = sum binom(a,n) s^n for an integer or truncated p-adic exponent.
TruncatedSeries grouplike_from_exponent(const CoefficientModel& model, const RingElement& a,
                                        std::size_t N);

struct DeltaNormReport {
    NormValue computed;
    NormValue bound;
    bool equality_expected = false;
    bool satisfied = false;
};

/**
 * Computes tensor_norm(Delta(s^n)) at radius rho and checks it against the
 * radius bound: (2 rho + rho^2)^n archimedean, equality with rho^n in the
 * non-archimedean case when rho <= 1.
 */
DeltaNormReport delta_norm_bound_check(std::size_t n, const Rational& rho,
                                       const CoefficientModel& model);

} // namespace amice
