// Command-line front end: every subcommand reads JSON files (or inline flags),
// prints one deterministic JSON object on stdout, and exits 0 on success,
// 1 on a domain error, 2 on a schema error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "amice/amice_transform.hpp"
#include "amice/hopf.hpp"
#include "amice/json_io.hpp"
#include "amice/mahler.hpp"
#include "amice/series.hpp"
#include "amice/weights.hpp"

namespace {

using namespace amice;

std::size_t max_order_cap() {
    const char* env = std::getenv("AMICE_KIT_MAX_ORDER");
    if (!env) return 256;
    try {
        const long v = std::stol(env);
        if (v < 1) throw std::invalid_argument("nonpositive");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw schema_error("AMICE_KIT_MAX_ORDER must be a positive integer");
    }
}

void enforce_cap(std::size_t order) {
    const std::size_t cap = max_order_cap();
    if (order > cap)
        throw domain_error("truncation order " + std::to_string(order) + " exceeds the cap " +
                           std::to_string(cap) + " (AMICE_KIT_MAX_ORDER)");
}

TruncatedSeries load_series(const std::string& path) {
    TruncatedSeries f = series_from_json(load_json_file(path));
    enforce_cap(f.order());
    return f;
}

struct Options {
    bool pretty = false;
};

void emit(const Options& opt, const Json& j) { std::cout << dump_json(j, opt.pretty) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Amice-duality toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--pretty", opt.pretty, "indent the JSON output");

    Json out;

    // norm: element norm in a model, or a series norm in the ps/bs grading
    auto* norm_cmd = app.add_subcommand("norm", "norm of an element or of a series");
    std::string norm_model, norm_value, norm_series, norm_rho;
    norm_cmd->add_option("--model", norm_model, "coefficient model name");
    norm_cmd->add_option("--value", norm_value, "element to measure");
    norm_cmd->add_option("--series", norm_series, "series JSON file");
    norm_cmd->add_option("--rho", norm_rho, "radius for the series grading");
    norm_cmd->callback([&] {
        if (!norm_series.empty()) {
            if (norm_rho.empty()) throw domain_error("series norm needs --rho");
            const TruncatedSeries f = load_series(norm_series);
            const Rational rho = parse_rational(norm_rho);
            const NormValue v = f.basis == BasisTag::Mahler ? bs_norm(f, rho) : ps_norm(f, rho);
            out["norm"] = v.str();
            out["grading"] = f.basis == BasisTag::Mahler ? "bs" : "ps";
            return;
        }
        if (norm_model.empty() || norm_value.empty())
            throw domain_error("norm needs --model and --value, or --series and --rho");
        const CoefficientModel model = CoefficientModel::parse(norm_model);
        out["norm"] = norm(model, re_parse(model, norm_value)).str();
    });

    auto* nuclearity_cmd = app.add_subcommand("nuclearity", "nuclearity of a weight matrix");
    std::string nuc_matrix;
    nuclearity_cmd->add_option("--matrix", nuc_matrix, "matrix JSON file")->required();
    nuclearity_cmd->callback([&] {
        const WeightMatrix W = matrix_from_json(load_json_file(nuc_matrix));
        out["nuclear"] = is_nuclear_matrix(W);
        out["rows"] = W.rows.size();
    });

    auto* member_cmd = app.add_subcommand("membership", "sequence-space membership");
    std::string mem_series, mem_matrix, mem_space = "lambda", mem_form = "l1";
    member_cmd->add_option("--series", mem_series, "series JSON file")->required();
    member_cmd->add_option("--matrix", mem_matrix, "matrix JSON file")->required();
    member_cmd->add_option("--space", mem_space, "lambda or kappa");
    member_cmd->add_option("--form", mem_form, "l1 or linf condition");
    member_cmd->callback([&] {
        const TruncatedSeries f = load_series(mem_series);
        const WeightMatrix W = matrix_from_json(load_json_file(mem_matrix));
        SpaceKind space;
        if (mem_space == "lambda") space = SpaceKind::Lambda;
        else if (mem_space == "kappa") space = SpaceKind::Kappa;
        else throw schema_error("--space must be lambda or kappa");
        MembershipForm form;
        if (mem_form == "l1") form = MembershipForm::Summable;
        else if (mem_form == "linf") form = MembershipForm::Bounded;
        else throw schema_error("--form must be l1 or linf");
        out = member_report_to_json(membership(f.model, f.coeffs, f.tail, W, space, form));
    });

    auto* expand_cmd = app.add_subcommand("mahler-expand", "Mahler expansion of a value table");
    std::string exp_table;
    expand_cmd->add_option("--table", exp_table, "table JSON file")->required();
    expand_cmd->callback([&] {
        const FunctionTable t = table_from_json(load_json_file(exp_table));
        enforce_cap(t.values.size());
        out = series_to_json(mahler_expand(t));
    });

    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a Mahler series at a natural number");
    std::string eval_series;
    unsigned long eval_n = 0;
    eval_cmd->add_option("--series", eval_series, "series JSON file")->required();
    eval_cmd->add_option("--n", eval_n, "evaluation point")->required();
    eval_cmd->callback([&] {
        const TruncatedSeries f = load_series(eval_series);
        out["value"] = re_to_string(f.model, evaluate(f, eval_n));
    });

    auto* pair_cmd = app.add_subcommand("pairing", "duality pairing of a series and a function");
    std::string pair_xi, pair_f;
    pair_cmd->add_option("--xi", pair_xi, "monomial series JSON file")->required();
    pair_cmd->add_option("--f", pair_f, "Mahler series JSON file")->required();
    pair_cmd->callback([&] {
        const TruncatedSeries xi = load_series(pair_xi);
        const TruncatedSeries f = load_series(pair_f);
        const PairingResult r = pairing(xi, f);
        out["value"] = re_to_string(xi.model, r.value);
        out["truncation_bound"] = r.truncation_bound.str();
    });

    auto* hopf_cmd = app.add_subcommand("hopf-verify", "verify the Hopf axioms at an order");
    std::string hopf_model = "Z-trivial";
    std::size_t hopf_order = 8;
    hopf_cmd->add_option("--model", hopf_model, "coefficient model name");
    hopf_cmd->add_option("--order", hopf_order, "truncation order");
    hopf_cmd->callback([&] {
        enforce_cap(hopf_order);
        const HopfAxiomReport r =
            verify_hopf_axioms(CoefficientModel::parse(hopf_model), hopf_order);
        out["coassoc"] = r.coassociative ? "pass" : "fail";
        out["counit"] = r.counital ? "pass" : "fail";
        out["antipode"] = r.antipodal ? "pass" : "fail";
        if (!r.ok()) out["first_failure"] = r.first_failure;
    });

    auto* amice_cmd = app.add_subcommand("amice", "distribution from its Mahler moments");
    std::string amice_moments;
    amice_cmd->add_option("--moments", amice_moments, "moments JSON file")->required();
    amice_cmd->callback([&] {
        const Json j = load_json_file(amice_moments);
        const CoefficientModel model = CoefficientModel::parse(
            j.contains("model") && j["model"].is_string() ? j["model"].get<std::string>() : "Q-arch");
        if (!j.contains("moments") || !j["moments"].is_array())
            throw schema_error("moments: missing array field 'moments'");
        std::vector<RingElement> ms;
        for (std::size_t i = 0; i < j["moments"].size(); ++i) {
            const Json& v = j["moments"][i];
            if (!v.is_string())
                throw schema_error("moments.moments[" + std::to_string(i) + "]: expected a string");
            ms.push_back(re_parse(model, v.get<std::string>()));
        }
        enforce_cap(ms.size());
        out = series_to_json(amice_transform(model, std::move(ms)));
    });

    auto* moments_cmd = app.add_subcommand("moments", "power moment of a distribution");
    std::string mom_dist;
    std::size_t mom_n = 0;
    moments_cmd->add_option("--distribution", mom_dist, "distribution JSON file")->required();
    moments_cmd->add_option("--n", mom_n, "moment index")->required();
    moments_cmd->callback([&] {
        const Distribution mu = load_series(mom_dist);
        out["moment"] = re_to_string(mu.model, power_moment(mu, mom_n));
    });

    auto* bern_cmd = app.add_subcommand("bernoulli", "Bernoulli number B_n");
    std::size_t bern_n = 1;
    bern_cmd->add_option("--n", bern_n, "index, n >= 1")->required();
    bern_cmd->callback([&] {
        enforce_cap(bern_n + 1);
        out["B"] = rational_string(bernoulli(bern_n));
    });

    auto* bc_cmd = app.add_subcommand("base-change", "transport a series along a ring morphism");
    std::string bc_series, bc_morphism;
    bc_cmd->add_option("--series", bc_series, "series JSON file")->required();
    bc_cmd->add_option("--morphism", bc_morphism,
                       "IntToZp:<p>:<prec>, QnaToQp:<p>, IntToQ, Identity:<model>")
        ->required();
    bc_cmd->callback([&] {
        const TruncatedSeries f = load_series(bc_series);
        out = series_to_json(base_change_series(f, RingMorphism::parse(bc_morphism)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const schema_error& e) {
        Json err;
        err["error"] = e.what();
        err["kind"] = "schema";
        emit(opt, err);
        return 2;
    } catch (const error& e) {
        Json err;
        err["error"] = e.what();
        err["kind"] = "domain";
        emit(opt, err);
        return 1;
    }

    emit(opt, out);
    return 0;
}
