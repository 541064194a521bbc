#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amice/coefficients.hpp"
#include "amice/rational.hpp"

namespace amice {

/**
 * Positive weight sequence with exact evaluation: an explicit prefix followed
 * by a geometric continuation. A pure geometric weight has empty prefix and
 * value ratio^n.
 */
struct Weight {
    std::vector<Rational> prefix;
    Rational ratio;

    static Weight geometric(const Rational& r);
    static Weight table(std::vector<Rational> prefix, const Rational& r);

    Rational eval(std::size_t n) const;
    /// Least n0 with eval(n) = eval(n0) * ratio^(n - n0) for all n >= n0.
    std::size_t stable_index() const;
    /// Pointwise reciprocal weight.
    Weight inverted() const;
};

/// Increasing family of weights housing the Koethe data.
struct WeightMatrix {
    std::vector<Weight> rows;
    bool na = false;
};

/// There is n0 with lo(n) < hi(n) for all n >= n0 (decided in closed form).
bool eventually_dominates(const Weight& lo, const Weight& hi);

/// Strict chain rho_0 < rho_1 < ...; throws precondition_error on violation.
void validate_matrix(const WeightMatrix& W);

/**
 * Certificate |a_n| <= C * r^n for all n >= start; with `exact` set it asserts
 * equality, which is what makes divergence evidence possible. bound == 0
 * certifies that every coefficient from `start` on vanishes.
 */
struct TailDescriptor {
    std::size_t start = 0;
    Rational bound;
    Rational ratio;
    bool exact = false;
};

/// Exact value of sum_n sigma(n)/rho(n), or +inf when divergent.
NormValue ratio_sum(const Weight& sigma, const Weight& rho);

/// Partial sum over n < terms: the test handle for the closed form.
Rational ratio_sum_partial(const Weight& sigma, const Weight& rho, std::size_t terms);

/**
 * Nuclearity of the inclusion l1(rho) -> l1(sigma). Requires sup sigma/rho
 * finite; throws precondition_error("...not even bounded...") otherwise.
 * Archimedean: summable ratio; non-archimedean: ratio tends to zero.
 */
bool is_nuclear_inclusion(const Weight& sigma, const Weight& rho, bool na);

/// Every consecutive inclusion of the matrix is nuclear.
bool is_nuclear_matrix(const WeightMatrix& W);

/**
 * Weighted l1-type norm of a certified sequence: exact sum (archimedean) or
 * supremum (non-archimedean) over the stored prefix, plus the closed-form
 * geometric tail bound. Exact when no tail is present; a certified upper
 * bound otherwise. A tail whose ratio meets the weight ratio at >= 1 yields
 * +inf (returned, not an error).
 */
NormValue weighted_l1_norm(const CoefficientModel& model, const std::vector<RingElement>& coeffs,
                           const std::optional<TailDescriptor>& tail, const Weight& rho);

/// Weighted sup norm (the contracting-product norm).
NormValue weighted_linf_norm(const CoefficientModel& model, const std::vector<RingElement>& coeffs,
                             const std::optional<TailDescriptor>& tail, const Weight& rho);

enum class SpaceKind { Lambda, Kappa };
enum class MembershipForm { Summable, Bounded };
enum class Verdict { Member, NonMember, Undecidable };

struct MemberReport {
    Verdict verdict = Verdict::Undecidable;
    std::optional<std::size_t> witness;
    std::string detail;
};

std::string verdict_string(Verdict v);

/**
 * Membership in lambda (condition for every row) or kappa (condition for some
 * row, with inverted weights; witness = least such row). `form` selects the
 * summable-sequence condition or the bounded-sequence condition; when the
 * matrix is nuclear the two agree. Member/NonMember are only reported when
 * the certificate decides them; otherwise Undecidable.
 */
MemberReport membership(const CoefficientModel& model, const std::vector<RingElement>& coeffs,
                        const std::optional<TailDescriptor>& tail, const WeightMatrix& W,
                        SpaceKind space, MembershipForm form = MembershipForm::Summable);

} // namespace amice
