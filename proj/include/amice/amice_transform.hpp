#pragma once

#include <cstddef>
#include <vector>

#include "amice/mahler.hpp"
#include "amice/series.hpp"

namespace amice {

/**
 * A distribution, identified with its transform: the monomial series whose
 * n-th coefficient is the moment against binom(x,n). The pairing below is the
 * single bridge between the two sides.
 */
using Distribution = TruncatedSeries;

struct PairingResult {
    RingElement value;
    /// Certified bound on the truncation error; zero when the value is exact.
    NormValue truncation_bound;
};

/**
 * The duality pairing <xi, f> = sum_n xi_n a_n between a monomial series and
 * a Mahler series over the same model. Exact when one side is finitely
 * supported inside the other's stored window; otherwise the certified tails
 * must have summable product (their ratio product below 1), and the result
 * carries the remainder bound. A divergent certificate product is an error:
 * no value is asserted outside the dual pair.
 */
PairingResult pairing(const TruncatedSeries& xi, const TruncatedSeries& f);

/// Bookkeeping constructor of the moment dictionary: moments -> monomial series.
Distribution amice_transform(const CoefficientModel& model, std::vector<RingElement> moments);

/// Triangular table of Stirling numbers of the second kind, S(n,k).
class StirlingCache {
public:
    explicit StirlingCache(std::size_t max_n);
    const Integer& value(std::size_t n, std::size_t k) const;
    std::size_t limit() const { return rows_.size(); }

private:
    std::vector<std::vector<Integer>> rows_;
};

/**
 * Power moment int x^n dmu from the Mahler moments, through
 * x^n = sum_k S(n,k) k! binom(x,k). Needs truncation order > n.
 */
RingElement power_moment(const Distribution& mu, std::size_t n);

/**
 * The distribution with transform log(1+s)/s: coefficients (-1)^n/(n+1),
 * with a certified tail (|mu_n| <= 1 archimedean; <= 2*2^n in the
 * non-archimedean sup norms, where |1/(n+1)| can reach n+1).
 */
Distribution kubota_leopoldt(std::size_t N,
                             const CoefficientModel& model = CoefficientModel::sup_rational());

/// n-th Bernoulli number as the n-th power moment of the distribution above
/// (B_1 = -1/2 convention); n >= 1.
Rational bernoulli(std::size_t n);

/// Coefficientwise transport along a bounded ring morphism; tags preserved,
/// tail certificates carried over (as bounds; contraction can break equality).
TruncatedSeries base_change_series(const TruncatedSeries& f, const RingMorphism& m);

struct BaseChangeReport {
    bool equal = false;
    RingElement mapped_pairing;     // morphism applied to <xi, f>
    RingElement pairing_of_mapped;  // <m(xi), m(f)> over the target
};

/// Checks that base change carries the pairing to the pairing, exactly.
BaseChangeReport base_change_commutes(const TruncatedSeries& xi, const TruncatedSeries& f,
                                      const RingMorphism& m);

} // namespace amice
