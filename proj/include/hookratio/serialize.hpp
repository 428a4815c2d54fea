#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hookratio/height1.hpp"
#include "hookratio/integrality.hpp"
#include "hookratio/littlewood.hpp"
#include "hookratio/ratio_params.hpp"

namespace hookratio {

using Json = nlohmann::ordered_json;

/// Comma-separated integers, e.g. "2,3,5". Empty text is an empty list.
/// Throws std::invalid_argument.
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// Two lines "gamma: a,b,c" and "delta: d,e,f" in either order; blank lines and
/// lines starting with '#' are skipped. Throws std::invalid_argument.
RatioParams parse_params_text(std::string_view text);

/// Reads a parameter file. Throws std::invalid_argument if it cannot be opened or parsed.
RatioParams read_params_file(const std::string& path);

Json to_json(const Partition& lambda);
Json to_json(const LittlewoodDecomposition& d);
Json to_json(const PartitionTower& tower);
Json to_json(const FTable& table);
Json to_json(const FactoredRatio& ratio);
Json to_json(const Verdict& verdict);
Json to_json(const PeriodSets& sets);
Json to_json(const Height1Report& report);

/// Young diagram with each cell showing its hook length, columns right-aligned.
std::string render_hook_diagram(const Partition& lambda);

}  // namespace hookratio
