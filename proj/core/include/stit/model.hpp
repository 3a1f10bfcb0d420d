#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stit/proposition.hpp"

namespace stit {

/// Moments and the cover pairs (parent, child) generating the order. The
/// reflexive-transitive closure is computed on construction; it is only a
/// partial order when the covers are acyclic.
class TreeOrder {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;

  TreeOrder(std::vector<std::string> moments, std::vector<Cover> covers);

  /// Resolves cover endpoints by name. Throws ModelError on duplicate or
  /// unknown moment names.
  static TreeOrder from_names(std::vector<std::string> moments,
                              const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const { return moments_.size(); }
  const std::vector<std::string>& moments() const { return moments_; }
  const std::vector<Cover>& covers() const { return covers_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return closure_[a * size() + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// True iff no cycle passes through the covers (self-loops included).
  bool acyclic() const { return acyclic_; }

 private:
  std::vector<std::string> moments_;
  std::vector<Cover> covers_;
  std::vector<bool> closure_;
  bool acyclic_ = true;
};

/// A maximal chain, moments listed bottom-up.
struct History {
  std::vector<std::size_t> moments;

  friend bool operator==(const History&, const History&) = default;
};

/// Maximal chains of an acyclic order, sorted lexicographically by their
/// moment-name sequences. Throws ModelError for a cyclic order.
std::vector<History> compute_histories(const TreeOrder& order);

/// A moment-history pair m/h.
struct PointRef {
  std::size_t moment;
  std::size_t history;

  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

/// A finite imagination model: tree, agents, choice partitions per moment and
/// agent, neighborhood families per point and agent, and a valuation.
///
/// Construction starts from vacuous choices, empty neighborhoods and an empty
/// valuation; the setters fill in the rest. Structural mistakes (unknown
/// indices, cyclic order) throw ModelError. Frame conditions such as
/// independence of agents are checked separately by validate().
class ImaginationModel {
 public:
  /// Cells of history indices.
  using Partition = std::vector<std::vector<std::size_t>>;
  using Family = std::vector<Proposition>;

  ImaginationModel(TreeOrder order, std::vector<std::string> agents);

  const TreeOrder& order() const { return order_; }
  std::size_t moment_count() const { return order_.size(); }
  const std::string& moment_name(std::size_t m) const { return order_.moments()[m]; }

  const std::vector<std::string>& agents() const { return agents_; }
  std::optional<std::size_t> agent_index(std::string_view name) const;

  const std::vector<History>& histories() const { return histories_; }
  /// H_m, ascending history indices.
  const std::vector<std::size_t>& histories_through(std::size_t m) const { return through_[m]; }
  bool passes_through(std::size_t h, std::size_t m) const;

  /// All moment-history pairs, ordered by moment then history. Proposition
  /// bit i refers to points()[i].
  const std::vector<PointRef>& points() const { return points_; }
  std::optional<std::size_t> point_index(PointRef p) const;
  /// Points at moment m.
  const Proposition& moment_points(std::size_t m) const { return moment_mask_[m]; }
  const Proposition& universe() const { return universe_; }
  std::string point_name(std::size_t point) const;

  const Partition& choice(std::size_t m, std::size_t agent) const {
    return choice_[m * agents_.size() + agent];
  }
  /// Replaces Choice^m_a. History indices must exist; whether the cells
  /// partition H_m is left to validate().
  void set_choice(std::size_t m, std::size_t agent, Partition cells);
  bool vacuous_choice(std::size_t m, std::size_t agent) const;
  /// Points m/h' with h' in Choice^m_a(h), for point = m/h. A history that no
  /// cell mentions is treated as its own cell.
  const Proposition& cell_points(std::size_t agent, std::size_t point) const {
    return cell_mask_[agent * points_.size() + point];
  }

  const Family& neighborhood(std::size_t agent, std::size_t point) const {
    return neighborhoods_[agent * points_.size() + point];
  }
  void set_neighborhood(std::size_t agent, std::size_t point, Family family);
  void clear_neighborhoods();

  /// V(var); empty for undeclared variables.
  const Proposition& valuation(std::string_view var) const;
  void set_valuation(std::string var, Proposition points);
  const std::map<std::string, Proposition, std::less<>>& valuations() const { return valuation_; }

  /// Changes whenever the tree or any choice partition changes. Two models
  /// with the same serial have the same frame and choices.
  std::uint64_t frame_serial() const { return frame_serial_; }

  friend bool operator==(const ImaginationModel& a, const ImaginationModel& b);

 private:
  void rebuild_cells(std::size_t m, std::size_t agent);

  TreeOrder order_;
  std::vector<std::string> agents_;
  std::vector<History> histories_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<PointRef> points_;
  std::vector<std::vector<std::size_t>> point_lookup_;  // [m][h] -> index or npos
  std::vector<Proposition> moment_mask_;
  Proposition universe_;
  std::vector<Partition> choice_;
  std::vector<Proposition> cell_mask_;
  std::vector<Family> neighborhoods_;
  std::map<std::string, Proposition, std::less<>> valuation_;
  std::uint64_t frame_serial_ = 0;
};

/// One moment, one history, vacuous choices, no neighborhoods and every
/// listed variable false. Throws ModelError when `agents` is empty.
ImaginationModel build_sigma_model(const std::vector<std::string>& vars,
                                   const std::vector<std::string>& agents);

}  // namespace stit
