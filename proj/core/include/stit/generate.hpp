#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stit/formula.hpp"
#include "stit/model.hpp"

namespace stit {

/// Where neighborhood candidates come from.
enum class PropositionPolicy {
  /// Every subset of MH, for frames with at most all_subsets_max_points
  /// points; larger frames fall back to Definable.
  AllSubsets,
  /// Extensions of the definable_pool formulas, computed in the model with
  /// all neighborhoods empty, plus the empty set and MH itself.
  Definable,
};

/// Which (point, agent) slots receive enumerated neighborhood families.
enum class NeighborhoodPlacement {
  /// Every point and agent.
  Everywhere,
  /// Only points at moments where the agent's choice is not vacuous. With a
  /// vacuous choice [i a]A is false whatever N_a holds, so the families left
  /// empty elsewhere cannot change the truth value of any formula.
  ActiveChoices,
};

struct ModelBounds {
  std::size_t max_moments = 3;
  /// The agent set of every generated model.
  std::vector<std::string> agents{"a"};
  /// Variables receiving enumerated valuations.
  std::vector<std::string> vars{"p"};
  /// Largest neighborhood family per slot.
  std::size_t max_family = 1;
  PropositionPolicy policy = PropositionPolicy::AllSubsets;
  std::size_t all_subsets_max_points = 4;
  std::vector<Formula> definable_pool;
  NeighborhoodPlacement placement = NeighborhoodPlacement::Everywhere;
  std::size_t max_histories = 8;
  /// Enumeration refuses to start when its size bound exceeds this.
  std::uint64_t max_models = 50'000'000;
};

/// Hard caps for command-line use; the checks can be waived explicitly.
struct HardCaps {
  static constexpr std::size_t kMaxMoments = 6;
  static constexpr std::size_t kMaxAgents = 3;
  static constexpr std::size_t kMaxHistories = 8;
  static constexpr std::size_t kMaxFamily = 3;
  static constexpr std::size_t kMaxAllSubsetsPoints = 4;
};

/// Throws BoundsError when `bounds` exceed HardCaps.
void check_hard_caps(const ModelBounds& bounds);

/// Every rooted tree with `moments` nodes up to isomorphism, moments named
/// m0, m1, ... in preorder.
std::vector<TreeOrder> rooted_trees(std::size_t moments);

/// Deterministic, exhaustive stream of pairwise distinct valid models.
///
/// Order: frames by size and shape; then the choice configuration (per
/// moment, per agent a partition of the moment's undividedness classes,
/// keeping only combinations that satisfy independence); then the
/// valuation; then the neighborhood families, the last slot varying
/// fastest. The model returned by next() is owned by the enumerator and is
/// updated in place by the following call.
class ModelEnumerator {
 public:
  /// Throws BoundsError when the size bound exceeds bounds.max_models.
  explicit ModelEnumerator(ModelBounds bounds);
  ~ModelEnumerator();
  ModelEnumerator(ModelEnumerator&&) noexcept;
  ModelEnumerator& operator=(ModelEnumerator&&) noexcept;

  /// Next model, or nullptr once the stream is exhausted.
  const ImaginationModel* next();

  /// Upper bound on the stream length (exact for AllSubsets frames).
  std::uint64_t size_bound() const;
  std::uint64_t produced() const;
  const ModelBounds& bounds() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// A random valid model, deterministic in the seed. Choices are fiber
/// products of per-agent labels over undividedness classes, so every
/// selector intersection is nonempty; a share of moments instead tries
/// arbitrary partitions, kept only when independence holds. Neighborhoods
/// are placed at every point, drawing on definable and arbitrary
/// propositions.
ImaginationModel random_model(std::uint64_t seed, const ModelBounds& bounds);

}  // namespace stit
