#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stit/formula.hpp"
#include "stit/generate.hpp"
#include "stit/model.hpp"
#include "stit/proof.hpp"
#include "stit/search.hpp"
#include "stit/semantics.hpp"

namespace stit {

/// The fixed instantiation pool over agents {a, b} and variables {p, q}:
/// atoms, Boolean combinations, S and P, [c], [d], [i] at depth one and a
/// few nested modalities.
std::vector<Formula> soundness_pool();

struct AxiomInstance {
  Rule axiom;
  Formula formula;
};

/// Instances of A1K ... A5 (not A0) over the pool: every pool formula for
/// ?B1 (and ?B2 in the K schemata), every agent for ?a1, and for A4 chains
/// of length 1 and 2 over ordered pairs of distinct agents.
std::vector<AxiomInstance> instantiate_axioms(std::span<const Formula> pool,
                                              std::span<const std::string> agents);

struct SoundnessFailure {
  /// Axiom tag ("A5") or rule ("R1", "R2", "R3").
  std::string check;
  Formula formula;
  ImaginationModel model;
  PointRef point;
};

struct SoundnessReport {
  std::uint64_t models = 0;
  std::uint64_t axiom_instances = 0;
  std::uint64_t rule_applications = 0;
  std::uint64_t axiom_failures = 0;
  std::uint64_t rule_failures = 0;
  std::map<std::string, std::uint64_t> failures_by_check;
  std::optional<SoundnessFailure> first_axiom_failure;
  std::optional<SoundnessFailure> first_rule_failure;

  bool ok() const { return axiom_failures == 0 && rule_failures == 0; }
};

/// Checks, model by model, that every axiom instance is valid and that
/// R1-R3 preserve validity over the pool:
///   R1  A and A -> B valid  =>  B valid
///   R2  A valid             =>  S A valid
///   R3  A <-> B valid       =>  [i a]A <-> [i a]B valid, for each agent
/// Rule failures count only applications whose premises hold.
class SoundnessChecker {
 public:
  SoundnessChecker(std::vector<Formula> pool, std::vector<std::string> agents,
                   EvalOptions options = {});

  void check(const ImaginationModel& model);
  const SoundnessReport& report() const { return report_; }
  std::size_t axiom_instance_count() const { return axioms_.size(); }

 private:
  void record(std::optional<SoundnessFailure>& first, std::string check, std::size_t slot,
              const ImaginationModel& model);

  std::vector<Formula> pool_;
  std::vector<std::string> agents_;
  std::vector<AxiomInstance> axioms_;
  FormulaBatch batch_;
  std::vector<std::size_t> axiom_slots_;
  std::vector<std::size_t> pool_slots_;
  std::vector<std::size_t> imp_slots_;      // [i * n + j] : pool[i] -> pool[j]
  std::vector<std::size_t> iff_slots_;      // [i * n + j] : pool[i] <-> pool[j]
  std::vector<std::size_t> settled_slots_;  // S pool[i]
  std::vector<std::size_t> cgr_slots_;      // [(a * n + i) * n + j]
  SoundnessReport report_;
};

struct SmokeResult {
  std::uint64_t models = 0;
  /// Empty means consistent with every model seen.
  std::optional<Countermodel> refuted_by;

  bool consistent() const { return !refuted_by.has_value(); }
};

/// Evaluates f over a stream of models and stops at the first one where it
/// is not valid.
SmokeResult theoremhood_smoke(const Formula& f, ModelEnumerator& models);
SmokeResult theoremhood_smoke(const Formula& f, std::span<const ImaginationModel> models);

}  // namespace stit
