#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "brcover/commands.hpp"

namespace brcover {

using Json = nlohmann::ordered_json;

/// Numbers within ±(2^53 − 1), decimal strings beyond.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"rows", "cols", "entries"} with row-major entries.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json snf_to_json(const IntMatrix& input, const SnfResult& r);
std::string snf_to_table(const IntMatrix& input, const SnfResult& r);

Json report_to_json(const CoverReport& r);
std::string report_to_table(const CoverReport& r);

Json tower_to_json(long d, const Tower& t);
std::string tower_to_table(long d, const Tower& t);

Json catalog_to_json(const Catalog& c);
std::string catalog_to_table(const Catalog& c);

Json kollar_to_json(const KollarVerdict& v);
std::string kollar_to_table(const KollarVerdict& v);

/// One batch entry. Keys mirror the command-line flags; "command" is required.
RunConfig run_config_from_json(const Json& j);
std::vector<RunConfig> batch_from_json(const Json& j);

Command parse_command(const std::string& name);
std::string command_name(Command c);

}  // namespace brcover
