#pragma once

#include <string>
#include <variant>
#include <vector>

#include "amice/rational.hpp"

namespace amice {

enum class ModelKind { TrivialInt, SupRational, PAdicRational, ArchRational, TruncatedZp };

/**
 * A coefficient ring bundled with its norm.
 *
 * The five models:
 *   Z-trivial   integers, trivial norm (1 on nonzero)
 *   Q-na        rationals, sup over the trivial and all p-adic norms
 *   Qp:<p>      rationals with the p-adic norm
 *   Q-arch      rationals with the usual absolute value
 *   Zp:<p>:<k>  truncated p-adic integers at relative precision k
 */
struct CoefficientModel {
    ModelKind kind = ModelKind::TrivialInt;
    unsigned long prime = 0;      // PAdicRational, TruncatedZp
    unsigned long precision = 0;  // TruncatedZp

    bool nonarchimedean() const { return kind != ModelKind::ArchRational; }
    bool integer_carrier() const { return kind == ModelKind::TrivialInt; }
    bool padic_carrier() const { return kind == ModelKind::TruncatedZp; }
    bool rational_carrier() const { return !integer_carrier() && !padic_carrier(); }

    static CoefficientModel trivial_int() { return {ModelKind::TrivialInt, 0, 0}; }
    static CoefficientModel sup_rational() { return {ModelKind::SupRational, 0, 0}; }
    static CoefficientModel padic_rational(unsigned long p);
    static CoefficientModel arch_rational() { return {ModelKind::ArchRational, 0, 0}; }
    static CoefficientModel truncated_zp(unsigned long p, unsigned long prec);

    /// "Z-trivial", "Q-na", "Qp:5", "Q-arch", "Zp:3:4". Throws schema_error.
    static CoefficientModel parse(const std::string& name);
    std::string name() const;

    bool operator==(const CoefficientModel&) const = default;
};

/**
 * Truncated p-adic integer, capped-relative representation: p^val * unit with
 * unit known modulo p^rel. A zero marker means the element is indistinguishable
 * from 0 below absolute precision `val`.
 */
struct PadicValue {
    bool zero = true;
    long val = 0;          // valuation; for the zero marker, the known-zero absolute precision
    Integer unit = 0;      // in [1, p^rel), coprime to p
    unsigned long rel = 0; // relative precision of the unit

    long abs_precision() const { return zero ? val : val + static_cast<long>(rel); }
};

using RingElement = std::variant<Integer, Rational, PadicValue>;

// --- p-adic arithmetic -----------------------------------------------------

PadicValue padic_zero(const CoefficientModel& model);
PadicValue padic_from_integer(const CoefficientModel& model, const Integer& n);
/// Embeds a rational with p-coprime reduced denominator (element of Z_(p)).
PadicValue padic_from_rational(const CoefficientModel& model, const Rational& q);
PadicValue padic_add(const CoefficientModel& model, const PadicValue& a, const PadicValue& b);
PadicValue padic_neg(const CoefficientModel& model, const PadicValue& a);
PadicValue padic_sub(const CoefficientModel& model, const PadicValue& a, const PadicValue& b);
PadicValue padic_mul(const CoefficientModel& model, const PadicValue& a, const PadicValue& b);
/// Division by a nonzero exact integer; the valuation may go negative.
PadicValue padic_div_integer(const CoefficientModel& model, const PadicValue& a, const Integer& d);
/// Canonical representative of a mod p^m; requires abs_precision() >= m.
Integer padic_residue(const CoefficientModel& model, const PadicValue& a, long m);
bool padic_equal(const CoefficientModel& model, const PadicValue& a, const PadicValue& b);

// --- model-tagged element operations --------------------------------------

RingElement re_zero(const CoefficientModel& model);
RingElement re_one(const CoefficientModel& model);
RingElement re_from_integer(const CoefficientModel& model, const Integer& n);
RingElement re_from_rational(const CoefficientModel& model, const Rational& q);
RingElement re_add(const CoefficientModel& model, const RingElement& a, const RingElement& b);
RingElement re_sub(const CoefficientModel& model, const RingElement& a, const RingElement& b);
RingElement re_mul(const CoefficientModel& model, const RingElement& a, const RingElement& b);
RingElement re_neg(const CoefficientModel& model, const RingElement& a);
bool re_is_zero(const CoefficientModel& model, const RingElement& a);
bool re_equal(const CoefficientModel& model, const RingElement& a, const RingElement& b);
std::string re_to_string(const CoefficientModel& model, const RingElement& a);
RingElement re_parse(const CoefficientModel& model, const std::string& text);

/// Throws domain_error unless the element lies in the model's carrier.
void require_carrier(const CoefficientModel& model, const RingElement& a);

/// The model's norm; exact, no floating point anywhere.
NormValue norm(const CoefficientModel& model, const RingElement& x);

// --- ring morphisms --------------------------------------------------------

enum class MorphismKind { IntToZp, QnaToQp, IntToQ, Identity };

struct RingMorphism {
    MorphismKind kind = MorphismKind::Identity;
    CoefficientModel source;
    CoefficientModel target;

    static RingMorphism int_to_zp(unsigned long p, unsigned long prec);
    static RingMorphism qna_to_qp(unsigned long p);
    static RingMorphism int_to_q();
    static RingMorphism identity(const CoefficientModel& m);

    /// "IntToZp:3:4", "QnaToQp:5", "IntToQ", "Identity:Q-arch".
    static RingMorphism parse(const std::string& spec);
    std::string name() const;
};

RingElement apply_morphism(const RingMorphism& m, const RingElement& x);

// --- axiom checks ----------------------------------------------------------

struct AxiomReport {
    std::vector<std::string> violations;
    std::size_t checks = 0;
    bool ultrametric_checked = false;
    bool ok() const { return violations.empty(); }
};

/// Property harness for the norm axioms over the supplied samples.
AxiomReport check_ring_axioms(const CoefficientModel& model, const std::vector<RingElement>& samples);

} // namespace amice
