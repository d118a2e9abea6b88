#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "combhardy/brownian.hpp"
#include "combhardy/classify.hpp"
#include "combhardy/comb.hpp"

namespace combhardy {

/// Comb spec files are JSON objects
///   {"family": string, "params": object, "truncate_n": int}
/// with families "explicit" (params {"x": [numbers]}), "constant"
/// ({"alpha"}), "polynomial" ({"p"}), "exponential" ({"c"}), "subexp_exp"
/// ({"p"}), "double_exp" ({}), "oscillating" ({"c", "b": {"type": "linear",
/// "r", "b1"} | {"type": "list", "values": [...]}}) and "custom"
/// ({"formula", "k"?}).
CombSpec parse_spec_json(const nlohmann::json& j);

/// Reads and materializes a spec file. Throws IoError when the file cannot
/// be read and SpecParseError when it does not parse or validate.
CombSpec load_spec_file(const std::filesystem::path& path);

nlohmann::json spec_to_json(const CombSpec& spec);

const char* family_name(Family f);

/// Verdict object {"decision", "justification", "bound_lower",
/// "bound_upper", "notes"}; infinite bounds serialize as the string "inf".
nlohmann::json verdict_to_json(const Verdict& v);

/// One {"p", "mean_p", "std_err", "stable", "truncation_hits"} object per
/// moment, wrapped with the batch parameters.
nlohmann::json moments_to_json(const ExitTimeBatch& batch,
                               const std::vector<MomentEstimate>& moments);

/// FNV-1a 64-bit content hash, rendered as 16 hex digits; used by the run
/// manifest to pin outputs.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace combhardy
