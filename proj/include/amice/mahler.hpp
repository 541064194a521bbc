#pragma once

#include <cstddef>
#include <vector>

#include "amice/series.hpp"

namespace amice {

/// Finite list of values f(0), f(1), ..., f(M).
struct FunctionTable {
    CoefficientModel model;
    std::vector<RingElement> values;
};

FunctionTable table_from_integers(const CoefficientModel& model, const std::vector<long>& values);

/// Forward differences: (Delta f)(n) = f(n+1) - f(n); shortens the table by one.
FunctionTable fdiff_table(const FunctionTable& t);

/// Finite difference on Mahler series: coefficient shift a_n -> a_{n+1}.
TruncatedSeries fdiff_series(const TruncatedSeries& f);

/// Delta^k f(0) = sum_i (-1)^{k-i} binom(k,i) f(i); needs k <= M.
RingElement fdiff_k_at_zero(const FunctionTable& t, std::size_t k);

/// Mahler expansion of a table: order M+1 polynomial with a_n = Delta^n f(0).
TruncatedSeries mahler_expand(const FunctionTable& t);

/// f(n) = sum_{k<=n} a_k binom(n,k); exact when the support is stored.
RingElement evaluate(const TruncatedSeries& f, unsigned long n);

enum class TransformDirection { Forward, Inverse };

/**
 * The triangular binomial-transform matrix binom(j,i), or its signed inverse
 * (-1)^{j-i} binom(j,i); the pair multiplies to the identity at every size.
 */
struct TransformMatrix {
    std::size_t size = 0;
    bool inverse = false;

    Integer entry(std::size_t i, std::size_t j) const;
    static TransformMatrix forward(std::size_t n) { return {n, false}; }
    static TransformMatrix inverse_of(std::size_t n) { return {n, true}; }
};

/// Exact matrix-vector product with the transform (or its inverse).
std::vector<RingElement> binomial_transform(const CoefficientModel& model,
                                            const std::vector<RingElement>& v,
                                            TransformDirection direction);

/**
 * Basis conversion within one side of the duality:
 * Monomial <-> GroupLike and Mahler <-> Indicator. Cross-side requests are
 * rejected; that pairing is not a change of basis.
 */
TruncatedSeries change_basis(const TruncatedSeries& f, BasisTag to);

struct MahlerClassification {
    enum class Kind { Polynomial, CertifiedRadius, Undecidable };
    Kind kind = Kind::Undecidable;
    /// Membership certified for every sigma below this radius (+inf for polynomials).
    NormValue radius;
};

MahlerClassification classify_membership(const TruncatedSeries& f);

/**
 * Value of a Mahler series at a truncated p-adic point, summed until the
 * certified tail drops below p^{-target_precision}. Uses |binom(a,k)|_p <= 1.
 */
RingElement padic_evaluate(const TruncatedSeries& f, const PadicValue& a,
                           unsigned long target_precision);

} // namespace amice
