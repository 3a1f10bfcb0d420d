#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stit/formula.hpp"

namespace stit {

/// A formula-shaped pattern. Formula metavariables are variables named
/// "?B<n>", agent metavariables are agents named "?a<n>"; neither can be
/// produced by the parser.
struct SchemaPattern {
  Formula pattern;
  /// Pairs of agent metavariable numbers that must be bound to different
  /// agents.
  std::vector<std::pair<int, int>> distinct;
};

/// Bindings of metavariable numbers.
struct SchemaAssignment {
  std::map<int, Formula> formulas;
  std::map<int, std::string> agents;

  friend bool operator==(const SchemaAssignment&, const SchemaAssignment&) = default;
};

namespace pattern {

Formula meta(int n);
std::string agent_meta(int n);
/// ~S~f, the desugared shape of P f.
Formula poss(Formula f);

}  // namespace pattern

/// Metavariable number of "?B<n>" / "?a<n>", or nullopt.
std::optional<int> formula_meta_index(const Formula& f);
std::optional<int> agent_meta_index(const std::string& agent);

/// Structural match of `f` against the pattern. The returned assignment is
/// the unique one that instantiates the pattern to `f`.
std::optional<SchemaAssignment> match_schema(const SchemaPattern& s, const Formula& f);

/// Substitutes the assignment into the pattern. Throws Error for unbound
/// metavariables or violated distinctness.
Formula instantiate(const SchemaPattern& s, const SchemaAssignment& sigma);

}  // namespace stit
