#pragma once

#include <cstdint>
#include <optional>

#include "stit/formula.hpp"
#include "stit/generate.hpp"
#include "stit/model.hpp"

namespace stit {

struct Countermodel {
  ImaginationModel model;
  PointRef point;
};

struct SearchOutcome {
  /// Empty when no model within the bounds refutes the formula.
  std::optional<Countermodel> countermodel;
  std::uint64_t models_examined = 0;
  ModelBounds bounds;

  bool found() const { return countermodel.has_value(); }
};

/// Walks the enumeration for `bounds` and stops at the first model where f
/// fails somewhere. A hit is re-checked pointwise and against validate()
/// before it is returned; a hit that fails the re-check throws Error, since
/// it would mean the two evaluators disagree. Throws BoundsError when the
/// enumeration is too large.
SearchOutcome find_countermodel(const Formula& f, const ModelBounds& bounds);

/// Bounds used by `stitwb search` when no flags are given: up to three
/// moments, families of at most two, all subsets where |MH| <= 4, and
/// neighborhoods only where the agent's choice is not vacuous. Variables
/// and agents are taken from f unless `agents` is nonempty.
ModelBounds default_search_bounds(const Formula& f, std::vector<std::string> agents = {});

}  // namespace stit
