#pragma once

#include "fos/gaplab.hpp"
#include "fos/solver.hpp"
#include "fos/uncross.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace fos {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Instance records:
///   {"version": 1, "nodes": n, "free_edges": [[u,v],...],
///    "purchasable_edges": [[u,v,num,den],...],
///    "demand": {"kl": {"k":..,"l":..,"r0":..}} | {"table": [[[nodes...], value],...]},
///    "root": r}
/// Non-integer JSON numbers are rejected wherever a number is expected.
Json instance_to_json(const Instance& inst);
/// Throws InputError naming the offending field; validates the instance.
Instance instance_from_json(const Json& j);

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
Instance read_instance(const std::string& path);

/// Exact rational as [num, den]; numbers outside 64 bits are written as strings.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);

Json result_to_json(const AugResult& res, bool decimals = false);
AugResult result_from_json(const Json& j);
Json certificate_to_json(const Certificate& cert);
Json gap_rows_to_json(const std::vector<GapRow>& rows);
Json basis_to_json(const BasisFamily& basis, const DominationForest& forest);

}  // namespace fos
