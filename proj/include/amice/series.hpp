#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "amice/coefficients.hpp"
#include "amice/weights.hpp"

namespace amice {

/// Coefficient bases: {s^n}, {binom(x,n)}, {(1+s)^n}, {indicator of n}.
enum class BasisTag { Monomial, Mahler, GroupLike, Indicator };

std::string basis_string(BasisTag b);
BasisTag parse_basis(const std::string& name);

/// The two sides of the dual pair; structure maps dispatch on matching sides.
enum class HopfSide { Series, Functions };
HopfSide side_of(BasisTag b);

/**
 * Truncated series in a tagged basis. Coefficients c_0..c_{N-1} are exact;
 * the optional tail certifies everything from index N on. Without a tail the
 * element makes no claim beyond its truncation order; a zero-bound tail says
 * the element is a polynomial of degree < N.
 */
struct TruncatedSeries {
    CoefficientModel model;
    BasisTag basis = BasisTag::Monomial;
    std::vector<RingElement> coeffs;
    std::optional<TailDescriptor> tail;

    std::size_t order() const { return coeffs.size(); }
    bool finitely_supported() const { return tail && tail->bound == 0; }
};

/// Polynomial constructor: pads with zeros to `order` and attaches the zero tail.
TruncatedSeries polynomial(const CoefficientModel& model, BasisTag basis,
                           std::vector<RingElement> coeffs, std::size_t order = 0);

/// Polynomial from small integer coefficients (test and CLI convenience).
TruncatedSeries polynomial_int(const CoefficientModel& model, BasisTag basis,
                               const std::vector<long>& coeffs, std::size_t order = 0);

TruncatedSeries make_series(const CoefficientModel& model, BasisTag basis,
                            std::vector<RingElement> coeffs, std::optional<TailDescriptor> tail);

/// Basis element (monomial s^n / binom(x,n) / ...) as an order-N polynomial.
TruncatedSeries basis_element(const CoefficientModel& model, BasisTag basis, std::size_t n,
                              std::size_t order);

RingElement series_coeff(const TruncatedSeries& f, std::size_t n);
/// Largest index with nonzero coefficient, if any (stored window only).
std::optional<std::size_t> series_degree(const TruncatedSeries& f);
bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

/// Zero-padded copy of a finitely supported series (identity on the element).
TruncatedSeries pad_to(const TruncatedSeries& f, std::size_t order);

TruncatedSeries add(const TruncatedSeries& F, const TruncatedSeries& G);
TruncatedSeries scale(const TruncatedSeries& F, const RingElement& c);

/// Cauchy product at order min(N_F, N_G); monomial basis only.
TruncatedSeries multiply(const TruncatedSeries& F, const TruncatedSeries& G);

/// F(G(s)) at order min(N_F, N_G); G must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& F, const TruncatedSeries& G);

/// (1+s)^{-1} - 1 = sum_{n>=1} (-1)^n s^n, truncated at N, with its exact tail.
TruncatedSeries geometric_inverse(const CoefficientModel& model, std::size_t N);

/// Norm in the ps-grading with weights rho^n (monomial basis).
NormValue ps_norm(const TruncatedSeries& F, const Rational& rho);

/// Norm in the bs-grading with weights rho^n (Mahler basis, sup form).
NormValue bs_norm(const TruncatedSeries& f, const Rational& rho);

/// Finitely supported element of the tensor square, sparse on pairs (i, j).
struct BiTruncatedSeries {
    CoefficientModel model;
    std::size_t order = 0; // exclusive support bound in each variable
    std::map<std::pair<std::size_t, std::size_t>, RingElement> entries;

    void add_entry(std::size_t i, std::size_t j, const RingElement& c);
    RingElement entry(std::size_t i, std::size_t j) const;
};

bool bi_equal(const BiTruncatedSeries& a, const BiTruncatedSeries& b);

/// Outer product F (x) G on the truncation square.
BiTruncatedSeries outer_product(const TruncatedSeries& F, const TruncatedSeries& G, std::size_t N);

/// Projective tensor norm on the weighted square: exact on this representation.
NormValue tensor_norm(const BiTruncatedSeries& T, const Rational& rho1, const Rational& rho2);

} // namespace amice
