#include "amice/weights.hpp"

#include <algorithm>

namespace amice {

Weight Weight::geometric(const Rational& r) {
    if (r <= 0) throw domain_error("weight ratio must be positive");
    Weight w;
    w.ratio = r;
    return w;
}

Weight Weight::table(std::vector<Rational> prefix, const Rational& r) {
    if (r <= 0) throw domain_error("weight ratio must be positive");
    for (const Rational& v : prefix)
        if (v <= 0) throw domain_error("weight values must be positive");
    Weight w;
    w.prefix = std::move(prefix);
    w.ratio = r;
    return w;
}

Rational Weight::eval(std::size_t n) const {
    if (prefix.empty()) return pow_rational(ratio, static_cast<long>(n));
    if (n < prefix.size()) return prefix[n];
    return prefix.back() * pow_rational(ratio, static_cast<long>(n - prefix.size() + 1));
}

std::size_t Weight::stable_index() const { return prefix.empty() ? 0 : prefix.size() - 1; }

Weight Weight::inverted() const {
    Weight w;
    w.ratio = Rational(1) / ratio;
    w.prefix.reserve(prefix.size());
    for (const Rational& v : prefix) w.prefix.push_back(Rational(1) / v);
    return w;
}

bool eventually_dominates(const Weight& lo, const Weight& hi) {
    const std::size_t K = std::max(lo.stable_index(), hi.stable_index());
    if (lo.ratio < hi.ratio) return true;
    if (lo.ratio > hi.ratio) return false;
    return lo.eval(K) < hi.eval(K);
}

void validate_matrix(const WeightMatrix& W) {
    if (W.rows.empty()) throw precondition_error("weight matrix needs at least one row");
    for (std::size_t j = 0; j + 1 < W.rows.size(); ++j) {
        if (!eventually_dominates(W.rows[j], W.rows[j + 1]))
            throw precondition_error("weight matrix row " + std::to_string(j) +
                                     " does not eventually dominate row " + std::to_string(j + 1) +
                                     " strictly");
    }
}

NormValue ratio_sum(const Weight& sigma, const Weight& rho) {
    const std::size_t K = std::max(sigma.stable_index(), rho.stable_index());
    Rational prefix_sum = 0;
    for (std::size_t n = 0; n < K; ++n) prefix_sum += sigma.eval(n) / rho.eval(n);
    const Rational q = sigma.ratio / rho.ratio;
    if (q >= 1) return NormValue::infinity();
    const Rational head = sigma.eval(K) / rho.eval(K);
    return NormValue(prefix_sum + head / (Rational(1) - q));
}

Rational ratio_sum_partial(const Weight& sigma, const Weight& rho, std::size_t terms) {
    Rational s = 0;
    for (std::size_t n = 0; n < terms; ++n) s += sigma.eval(n) / rho.eval(n);
    return s;
}

bool is_nuclear_inclusion(const Weight& sigma, const Weight& rho, bool na) {
    const Rational q = sigma.ratio / rho.ratio;
    if (q > 1)
        throw precondition_error(
            "inclusion ill-defined: sup sigma(n)/rho(n) is infinite (not even bounded, as opposed "
            "to bounded but not nuclear)");
    if (na) {
        // sigma(n)/rho(n) = A q^n eventually with A > 0; tends to zero iff q < 1.
        return q < 1;
    }
    return ratio_sum(sigma, rho).is_finite();
}

bool is_nuclear_matrix(const WeightMatrix& W) {
    if (W.rows.size() < 2) return !W.rows.empty();
    for (std::size_t j = 0; j + 1 < W.rows.size(); ++j)
        if (!is_nuclear_inclusion(W.rows[j], W.rows[j + 1], W.na)) return false;
    return true;
}

namespace {

/// Tail contribution from index `from` on: sum mode gives the exact geometric
/// closed form, sup mode the attained supremum of the bound.
NormValue tail_contribution(bool sum_mode, const TailDescriptor& tail, const Weight& rho,
                            std::size_t from) {
    if (tail.bound == 0) return NormValue(Rational(0));
    const std::size_t start = std::max(tail.start, from);
    const std::size_t K = std::max(start, rho.stable_index());
    const Rational q = tail.ratio * rho.ratio;

    auto term = [&](std::size_t n) -> Rational {
        return tail.bound * pow_rational(tail.ratio, static_cast<long>(n)) * rho.eval(n);
    };

    if (sum_mode) {
        if (q >= 1) return NormValue::infinity();
        Rational s = 0;
        for (std::size_t n = start; n < K; ++n) s += term(n);
        return NormValue(s + term(K) / (Rational(1) - q));
    }
    if (q > 1) return NormValue::infinity();
    NormValue best{Rational(0)};
    for (std::size_t n = start; n < K; ++n) best = max(best, NormValue(term(n)));
    return max(best, NormValue(term(K)));
}

} // namespace

NormValue weighted_l1_norm(const CoefficientModel& model, const std::vector<RingElement>& coeffs,
                           const std::optional<TailDescriptor>& tail, const Weight& rho) {
    const bool sum_mode = !model.nonarchimedean();
    NormValue acc{Rational(0)};
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const NormValue t = norm(model, coeffs[n]) * NormValue(rho.eval(n));
        acc = sum_mode ? acc + t : max(acc, t);
    }
    if (tail) {
        const NormValue t = tail_contribution(sum_mode, *tail, rho, coeffs.size());
        acc = sum_mode ? acc + t : max(acc, t);
    }
    return acc;
}

NormValue weighted_linf_norm(const CoefficientModel& model, const std::vector<RingElement>& coeffs,
                             const std::optional<TailDescriptor>& tail, const Weight& rho) {
    NormValue acc{Rational(0)};
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        acc = max(acc, norm(model, coeffs[n]) * NormValue(rho.eval(n)));
    if (tail) acc = max(acc, tail_contribution(false, *tail, rho, coeffs.size()));
    return acc;
}

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::Member: return "member";
        case Verdict::NonMember: return "non-member";
        case Verdict::Undecidable: return "undecidable-with-given-certificate";
    }
    return "?";
}

namespace {

enum class RowStatus { Ok, Fail, Unknown };

RowStatus row_condition(MembershipForm form, const std::optional<TailDescriptor>& tail,
                        const Weight& w) {
    if (!tail || tail->bound == 0) return RowStatus::Ok; // finite support
    const Rational q = tail->ratio * w.ratio;
    if (form == MembershipForm::Bounded) {
        if (q <= 1) return RowStatus::Ok;
        return tail->exact ? RowStatus::Fail : RowStatus::Unknown;
    }
    // Summable (or vanishing, in the non-archimedean reading): both need q < 1,
    // and an exact geometric tail with q >= 1 certifies failure.
    if (q < 1) return RowStatus::Ok;
    return tail->exact ? RowStatus::Fail : RowStatus::Unknown;
}

} // namespace

MemberReport membership(const CoefficientModel& model, const std::vector<RingElement>& coeffs,
                        const std::optional<TailDescriptor>& tail, const WeightMatrix& W,
                        SpaceKind space, MembershipForm form) {
    if (W.na != model.nonarchimedean())
        throw precondition_error("weight matrix na flag disagrees with the coefficient model");
    validate_matrix(W);
    for (const RingElement& c : coeffs) require_carrier(model, c);

    MemberReport report;
    if (space == SpaceKind::Lambda) {
        std::optional<std::size_t> first_unknown;
        for (std::size_t j = 0; j < W.rows.size(); ++j) {
            switch (row_condition(form, tail, W.rows[j])) {
                case RowStatus::Fail:
                    report.verdict = Verdict::NonMember;
                    report.witness = j;
                    report.detail = "exact tail diverges against row " + std::to_string(j);
                    return report;
                case RowStatus::Unknown:
                    if (!first_unknown) first_unknown = j;
                    break;
                case RowStatus::Ok: break;
            }
        }
        if (first_unknown) {
            report.verdict = Verdict::Undecidable;
            report.witness = first_unknown;
            report.detail = "certificate cannot settle row " + std::to_string(*first_unknown);
        } else {
            report.verdict = Verdict::Member;
            report.detail = "all rows certified";
        }
        return report;
    }

    // Kappa: condition with inverted weights, witness = least good row.
    std::optional<std::size_t> first_unknown;
    bool all_fail = true;
    for (std::size_t j = 0; j < W.rows.size(); ++j) {
        switch (row_condition(form, tail, W.rows[j].inverted())) {
            case RowStatus::Ok:
                report.verdict = Verdict::Member;
                report.witness = j;
                report.detail = "row " + std::to_string(j) + " certified";
                return report;
            case RowStatus::Unknown:
                all_fail = false;
                if (!first_unknown) first_unknown = j;
                break;
            case RowStatus::Fail: break;
        }
    }
    if (all_fail) {
        report.verdict = Verdict::NonMember;
        report.detail = "exact tail diverges against every row";
    } else {
        report.verdict = Verdict::Undecidable;
        report.witness = first_unknown;
        report.detail = "certificate cannot settle row " + std::to_string(*first_unknown);
    }
    return report;
}

} // namespace amice
