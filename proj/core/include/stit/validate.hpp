#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stit/model.hpp"

namespace stit {

enum class FrameCondition {
  Antisymmetry,
  DownwardDirectedness,
  BackwardLinearity,
  ChoicePartition,
  NoChoiceBetweenUndividedHistories,
  IndependenceOfAgents,
};

std::string_view condition_name(FrameCondition c);

/// One violated condition together with the witness that breaks it.
///
/// Witness layout per condition:
///   Antisymmetry          moments = {m1, m2}, m1 <= m2 <= m1, m1 != m2
///                         (a self-loop cover gives {m, m})
///   DownwardDirectedness  moments = {m1, m2} without a common lower bound
///   BackwardLinearity     moments = {m1, m2, m}, m1, m2 <= m, incomparable
///   ChoicePartition       moments = {m}, agent, histories = offending
///                         histories (empty for an empty cell)
///   NoChoiceBetween...    moments = {m, m'}, agent, histories = {h, h'}:
///                         m < m' lies on both, but the cells differ
///   IndependenceOfAgents  moments = {m}, selector = one cell per agent with
///                         empty intersection
struct Violation {
  FrameCondition condition;
  std::vector<std::string> moments;
  std::string agent;
  std::vector<std::size_t> histories;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> selector;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(FrameCondition c) const;
};

/// One line of human-readable text per violation.
std::string describe(const Violation& v);

/// Order conditions only; usable when the covers are cyclic and no model
/// can be built.
ValidationReport validate_order(const TreeOrder& order);

/// Every frame condition: order, choice partitions, no choice between
/// undivided histories and independence of agents.
ValidationReport validate(const ImaginationModel& model);

}  // namespace stit
