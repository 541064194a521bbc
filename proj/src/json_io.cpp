#include "amice/json_io.hpp"

#include <fstream>
#include <sstream>

namespace amice {

namespace {

const Json& require_field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw schema_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(where + ": missing field '" + key + "'");
    return *it;
}

std::string require_string(const Json& j, const char* key, const std::string& where) {
    const Json& v = require_field(j, key, where);
    if (!v.is_string()) throw schema_error(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

Rational field_rational(const Json& j, const char* key, const std::string& where) {
    try {
        return parse_rational(require_string(j, key, where));
    } catch (const schema_error& e) {
        throw schema_error(where + "." + key + ": " + e.what());
    }
}

std::size_t require_size(const Json& j, const char* key, const std::string& where) {
    const Json& v = require_field(j, key, where);
    if (!v.is_number_unsigned()) throw schema_error(where + "." + key + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

} // namespace

Json weight_to_json(const Weight& w) {
    Json j;
    if (w.prefix.empty()) {
        j["kind"] = "geometric";
    } else {
        j["kind"] = "table";
        Json prefix = Json::array();
        for (const Rational& v : w.prefix) prefix.push_back(rational_string(v));
        j["prefix"] = prefix;
    }
    j["ratio"] = rational_string(w.ratio);
    return j;
}

Weight weight_from_json(const Json& j, const std::string& where) {
    const std::string kind = require_string(j, "kind", where);
    const Rational ratio = field_rational(j, "ratio", where);
    if (kind == "geometric") {
        if (ratio <= 0) throw schema_error(where + ".ratio: must be positive");
        return Weight::geometric(ratio);
    }
    if (kind != "table") throw schema_error(where + ".kind: expected 'geometric' or 'table'");
    const Json& prefix = require_field(j, "prefix", where);
    if (!prefix.is_array()) throw schema_error(where + ".prefix: expected an array");
    std::vector<Rational> values;
    values.reserve(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const Json& v = prefix[i];
        const std::string slot = where + ".prefix[" + std::to_string(i) + "]";
        if (!v.is_string()) throw schema_error(slot + ": expected a string");
        const Rational r = parse_rational(v.get<std::string>());
        if (r <= 0) throw schema_error(slot + ": must be positive");
        values.push_back(r);
    }
    return Weight::table(std::move(values), ratio);
}

Json matrix_to_json(const WeightMatrix& W) {
    Json j;
    Json rows = Json::array();
    for (const Weight& w : W.rows) rows.push_back(weight_to_json(w));
    j["rows"] = rows;
    j["na"] = W.na;
    return j;
}

WeightMatrix matrix_from_json(const Json& j) {
    const Json& rows = require_field(j, "rows", "matrix");
    if (!rows.is_array() || rows.empty()) throw schema_error("matrix.rows: expected a nonempty array");
    const Json& na = require_field(j, "na", "matrix");
    if (!na.is_boolean()) throw schema_error("matrix.na: expected a boolean");
    WeightMatrix W;
    W.na = na.get<bool>();
    for (std::size_t i = 0; i < rows.size(); ++i)
        W.rows.push_back(weight_from_json(rows[i], "matrix.rows[" + std::to_string(i) + "]"));
    return W;
}

Json tail_to_json(const TailDescriptor& t) {
    Json j;
    j["start"] = t.start;
    j["C"] = rational_string(t.bound);
    j["r"] = rational_string(t.ratio);
    if (t.exact) j["exact"] = true;
    return j;
}

TailDescriptor tail_from_json(const Json& j, const std::string& where) {
    TailDescriptor t;
    t.start = require_size(j, "start", where);
    t.bound = field_rational(j, "C", where);
    t.ratio = field_rational(j, "r", where);
    if (t.bound < 0 || t.ratio < 0) throw schema_error(where + ": C and r must be nonnegative");
    if (j.contains("exact")) {
        if (!j["exact"].is_boolean()) throw schema_error(where + ".exact: expected a boolean");
        t.exact = j["exact"].get<bool>();
    }
    return t;
}

Json series_to_json(const TruncatedSeries& f) {
    Json j;
    j["model"] = f.model.name();
    j["basis"] = basis_string(f.basis);
    Json coeffs = Json::array();
    for (const RingElement& c : f.coeffs) coeffs.push_back(re_to_string(f.model, c));
    j["coeffs"] = coeffs;
    if (f.tail && !f.finitely_supported()) j["tail"] = tail_to_json(*f.tail);
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    const CoefficientModel model = CoefficientModel::parse(require_string(j, "model", "series"));
    const BasisTag basis = parse_basis(require_string(j, "basis", "series"));
    const Json& coeffs = require_field(j, "coeffs", "series");
    if (!coeffs.is_array()) throw schema_error("series.coeffs: expected an array");
    std::vector<RingElement> cs;
    cs.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Json& v = coeffs[i];
        const std::string slot = "series.coeffs[" + std::to_string(i) + "]";
        if (!v.is_string()) throw schema_error(slot + ": expected a string");
        try {
            cs.push_back(re_parse(model, v.get<std::string>()));
        } catch (const schema_error& e) {
            throw schema_error(slot + ": " + e.what());
        }
    }
    if (!j.contains("tail")) return polynomial(model, basis, std::move(cs));
    return make_series(model, basis, std::move(cs), tail_from_json(j["tail"], "series.tail"));
}

Json table_to_json(const FunctionTable& t) {
    Json j;
    j["model"] = t.model.name();
    Json values = Json::array();
    for (const RingElement& v : t.values) values.push_back(re_to_string(t.model, v));
    j["values"] = values;
    return j;
}

FunctionTable table_from_json(const Json& j) {
    FunctionTable t;
    t.model = CoefficientModel::parse(require_string(j, "model", "table"));
    const Json& values = require_field(j, "values", "table");
    if (!values.is_array() || values.empty())
        throw schema_error("table.values: expected a nonempty array");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Json& v = values[i];
        const std::string slot = "table.values[" + std::to_string(i) + "]";
        if (!v.is_string()) throw schema_error(slot + ": expected a string");
        try {
            t.values.push_back(re_parse(t.model, v.get<std::string>()));
        } catch (const schema_error& e) {
            throw schema_error(slot + ": " + e.what());
        }
    }
    return t;
}

Json bi_series_to_json(const BiTruncatedSeries& T) {
    Json j;
    j["model"] = T.model.name();
    j["order"] = T.order;
    Json entries = Json::array();
    for (const auto& [key, c] : T.entries) {
        Json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["c"] = re_to_string(T.model, c);
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

Json member_report_to_json(const MemberReport& r) {
    Json j;
    j["verdict"] = verdict_string(r.verdict);
    if (r.witness) j["witness"] = *r.witness;
    j["detail"] = r.detail;
    return j;
}

std::string dump_json(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw schema_error(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot read input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

} // namespace amice
