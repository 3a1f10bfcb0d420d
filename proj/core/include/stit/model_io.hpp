#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "stit/model.hpp"

namespace stit {

/// A model file after parsing. When the covers contain a cycle there is no
/// ImaginationModel to build; `model` is then empty and only `order` is
/// available for validate_order().
struct ModelDocument {
  TreeOrder order;
  std::optional<ImaginationModel> model;
  /// Extra keys written by `stitwb search`, if present.
  std::optional<PointRef> refuting_point;
  std::optional<std::string> formula;
};

/// Reads the JSON model format:
///
///   { "agents": ["a"], "moments": ["m0", "m1", "m2"],
///     "covers": [["m0", "m1"], ["m0", "m2"]],
///     "choice": {"m0": {"a": [[0], [1]]}},
///     "neighborhoods": {"a": [{"at": ["m0", 0], "props": [[["m1", 0]]]}]},
///     "valuation": {"p": [["m1", 0]]} }
///
/// History indices refer to the canonical order of compute_histories().
/// Omitted choices are vacuous, omitted neighborhoods and valuations empty.
/// Throws ModelError for malformed input or references that do not resolve.
ModelDocument parse_model(std::string_view json_text);
ModelDocument load_model(const std::filesystem::path& file);

struct ModelAnnotations {
  std::optional<PointRef> refuting_point;
  std::optional<std::string> formula;
};

/// JSON text that parse_model() reads back to an equal model. Adds the
/// history table under "histories" for readers.
std::string serialize_model(const ImaginationModel& model, const ModelAnnotations& notes = {});

/// One line per history: "h0 = [m0, m1]".
std::string history_table(const ImaginationModel& model);

/// Reads "m1:0", "m1:h0" or "m1/h0". Throws ModelError when the moment is
/// unknown, the index is out of range or the history misses the moment.
PointRef parse_point(const ImaginationModel& model, std::string_view text);

}  // namespace stit
