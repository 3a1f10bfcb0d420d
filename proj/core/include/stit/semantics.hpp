#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "stit/formula.hpp"
#include "stit/model.hpp"
#include "stit/proposition.hpp"

namespace stit {

/// Which version of the imagination clause to apply. WithoutOutsideWitness
/// drops the requirement that the extension be missing from N_a at some
/// history through the moment; it exists only so tests can confirm that the
/// soundness fuzzer notices a broken evaluator.
enum class ImaginationClause { Full, WithoutOutsideWitness };

struct EvalOptions {
  ImaginationClause imagination = ImaginationClause::Full;
};

struct TraceStep {
  std::size_t depth;
  std::string formula;
  std::string point;
  std::string clause;
  bool value;
};

/// Clause-by-clause record of a pointwise evaluation, in pre-order. The
/// first step is the root and carries the overall value.
struct EvalTrace {
  std::vector<TraceStep> steps;
};

/// M, m/h |= f, evaluated pointwise by recursion on f. Sugar is expanded
/// first. Throws EvalError for agents the model lacks and Error for a point
/// that is not a moment-history pair of the model.
bool satisfies(const ImaginationModel& model, PointRef point, const Formula& f,
               EvalTrace* trace = nullptr, const EvalOptions& options = {});

/// {m/h in MH(M) | M, m/h |= f}, computed bottom-up over the whole model.
Proposition extension(const ImaginationModel& model, const Formula& f,
                      const EvalOptions& options = {});

/// True iff f holds at every moment-history pair.
bool valid_in_model(const ImaginationModel& model, const Formula& f,
                    const EvalOptions& options = {});

/// Extensions of many formulas over a shared, structurally deduplicated DAG.
///
/// Evaluating the same model object again after only its valuation or
/// neighborhoods changed (same frame_serial()) re-evaluates just the nodes
/// whose inputs changed. Model generators exploit this: successive models in
/// an enumeration usually differ in one neighborhood family.
class FormulaBatch {
 public:
  explicit FormulaBatch(EvalOptions options = {});

  /// Registers f (desugared internally) and returns its slot. Groups only
  /// matter for invalid_count(group).
  std::size_t add(const Formula& f, std::size_t group = 0);
  std::size_t size() const { return slots_.size(); }
  std::size_t node_count() const { return nodes_.size(); }

  void evaluate(const ImaginationModel& model);

  const Proposition& value(std::size_t slot) const { return values_[slots_[slot]]; }
  bool valid(std::size_t slot) const { return slot_valid_[slot] != 0; }
  /// Slots that are not valid in the last evaluated model.
  std::size_t invalid_count() const { return invalid_count_; }
  std::size_t invalid_count(std::size_t group) const {
    return group < invalid_by_group_.size() ? invalid_by_group_[group] : 0;
  }
  /// Smallest slot that is not valid, or size().
  std::size_t first_invalid() const;

 private:
  struct Node {
    Op op;
    std::uint32_t first;
    std::uint32_t second;
    std::uint32_t name;  // index into names_ (Var) or agents_ (modal)
  };

  std::uint32_t intern(const Formula& f);
  void resolve(const ImaginationModel& model);
  bool compute(std::uint32_t node, const ImaginationModel& model);
  void set_slot_validity(std::uint32_t node, const ImaginationModel& model);
  void full(const ImaginationModel& model);
  void incremental(const ImaginationModel& model);

  EvalOptions options_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::uint32_t>> parents_;
  std::vector<std::vector<std::uint32_t>> slots_of_node_;
  std::vector<std::uint32_t> leaves_;  // Var and Imagine nodes
  std::vector<std::uint64_t> leaf_mask_;
  std::vector<std::uint64_t> dirty_;
  std::unordered_map<Formula, std::uint32_t> index_;
  std::vector<std::string> names_;
  std::vector<std::string> agents_;
  std::vector<std::uint32_t> slots_;
  std::vector<char> slot_valid_;
  std::vector<std::uint32_t> slot_group_;
  std::vector<std::size_t> invalid_by_group_;
  std::size_t invalid_count_ = 0;

  std::vector<Proposition> values_;
  std::vector<const Proposition*> var_values_;
  std::vector<std::size_t> agent_index_;
  const ImaginationModel* last_model_ = nullptr;
  std::uint64_t last_serial_ = 0;
  std::size_t evaluated_nodes_ = 0;
};

}  // namespace stit
