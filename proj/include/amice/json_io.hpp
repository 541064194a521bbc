#pragma once

#include <string>

#include <json.hpp>

#include "amice/amice_transform.hpp"
#include "amice/mahler.hpp"
#include "amice/series.hpp"
#include "amice/weights.hpp"

namespace amice {

using Json = nlohmann::json;

// Serializers produce objects with sorted keys and exact rational strings, so
// identical inputs give byte-identical output.

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const WeightMatrix& W);
WeightMatrix matrix_from_json(const Json& j);

Json tail_to_json(const TailDescriptor& t);
TailDescriptor tail_from_json(const Json& j, const std::string& where);

Json series_to_json(const TruncatedSeries& f);
/// Absent "tail" means a polynomial: the zero tail is attached on load.
TruncatedSeries series_from_json(const Json& j);

Json table_to_json(const FunctionTable& t);
FunctionTable table_from_json(const Json& j);

Json bi_series_to_json(const BiTruncatedSeries& T);

Json member_report_to_json(const MemberReport& r);

std::string dump_json(const Json& j, bool pretty);

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace amice
