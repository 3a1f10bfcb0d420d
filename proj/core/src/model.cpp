#include "stit/model.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "stit/error.hpp"

namespace stit {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::uint64_t next_serial() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

bool same_family(ImaginationModel::Family a, ImaginationModel::Family b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TreeOrder::TreeOrder(std::vector<std::string> moments, std::vector<Cover> covers)
    : moments_(std::move(moments)), covers_(std::move(covers)) {
  const std::size_t n = moments_.size();
  closure_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) closure_[i * n + i] = true;
  for (auto [a, b] : covers_) {
    if (a >= n || b >= n) throw ModelError("cover refers to a moment index out of range");
    if (a == b) acyclic_ = false;
    closure_[a * n + b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!closure_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (closure_[k * n + j]) closure_[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n && acyclic_; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closure_[i * n + j] && closure_[j * n + i]) {
        acyclic_ = false;
        break;
      }
    }
  }
}

TreeOrder TreeOrder::from_names(std::vector<std::string> moments,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < moments.size(); ++i) {
    if (!index.emplace(moments[i], i).second) {
      throw ModelError("duplicate moment '" + moments[i] + "'");
    }
  }
  std::vector<Cover> resolved;
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw ModelError("cover mentions unknown moment '" + a + "'");
    if (ib == index.end()) throw ModelError("cover mentions unknown moment '" + b + "'");
    resolved.emplace_back(ia->second, ib->second);
  }
  return TreeOrder(std::move(moments), std::move(resolved));
}

std::optional<std::size_t> TreeOrder::index_of(std::string_view name) const {
  auto it = std::find(moments_.begin(), moments_.end(), name);
  if (it == moments_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - moments_.begin());
}

std::vector<History> compute_histories(const TreeOrder& order) {
  if (!order.acyclic()) throw ModelError("not a partial order: the covers contain a cycle");
  const std::size_t n = order.size();
  // Immediate successors in the closure; saturated chains between a minimal
  // and a maximal element are exactly the maximal chains.
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<bool> minimal(n, true);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!order.less(a, b)) continue;
      minimal[b] = false;
      bool immediate = true;
      for (std::size_t c = 0; c < n && immediate; ++c) {
        if (order.less(a, c) && order.less(c, b)) immediate = false;
      }
      if (immediate) succ[a].push_back(b);
    }
  }
  std::vector<History> out;
  std::vector<std::size_t> path;
  auto walk = [&](auto&& self, std::size_t m) -> void {
    path.push_back(m);
    if (succ[m].empty()) {
      out.push_back(History{path});
    } else {
      for (std::size_t next : succ[m]) self(self, next);
    }
    path.pop_back();
  };
  for (std::size_t m = 0; m < n; ++m) {
    if (minimal[m]) walk(walk, m);
  }
  const auto& names = order.moments();
  std::sort(out.begin(), out.end(), [&](const History& x, const History& y) {
    return std::lexicographical_compare(
        x.moments.begin(), x.moments.end(), y.moments.begin(), y.moments.end(),
        [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  });
  return out;
}

ImaginationModel::ImaginationModel(TreeOrder order, std::vector<std::string> agents)
    : order_(std::move(order)), agents_(std::move(agents)), frame_serial_(next_serial()) {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (agents_[i] == agents_[j]) throw ModelError("duplicate agent '" + agents_[i] + "'");
    }
  }
  if (order_.size() == 0) throw ModelError("a model needs at least one moment");
  histories_ = compute_histories(order_);

  const std::size_t n = order_.size();
  through_.assign(n, {});
  point_lookup_.assign(n, std::vector<std::size_t>(histories_.size(), npos));
  for (std::size_t h = 0; h < histories_.size(); ++h) {
    for (std::size_t m : histories_[h].moments) through_[m].push_back(h);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t h : through_[m]) {
      if (points_.size() == kMaxPoints) {
        throw ModelError("model has more than " + std::to_string(kMaxPoints) +
                         " moment-history pairs");
      }
      point_lookup_[m][h] = points_.size();
      points_.push_back({m, h});
    }
  }
  universe_ = Proposition::prefix(points_.size());
  moment_mask_.assign(n, Proposition{});
  for (std::size_t i = 0; i < points_.size(); ++i) moment_mask_[points_[i].moment].insert(i);

  choice_.assign(n * agents_.size(), {});
  cell_mask_.assign(agents_.size() * points_.size(), Proposition{});
  neighborhoods_.assign(agents_.size() * points_.size(), {});
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < agents_.size(); ++a) {
      choice_[m * agents_.size() + a] = {through_[m]};
      rebuild_cells(m, a);
    }
  }
}

std::optional<std::size_t> ImaginationModel::agent_index(std::string_view name) const {
  auto it = std::find(agents_.begin(), agents_.end(), name);
  if (it == agents_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - agents_.begin());
}

bool ImaginationModel::passes_through(std::size_t h, std::size_t m) const {
  return h < histories_.size() && m < point_lookup_.size() && point_lookup_[m][h] != npos;
}

std::optional<std::size_t> ImaginationModel::point_index(PointRef p) const {
  if (!passes_through(p.history, p.moment)) return std::nullopt;
  return point_lookup_[p.moment][p.history];
}

std::string ImaginationModel::point_name(std::size_t point) const {
  const PointRef& p = points_.at(point);
  return moment_name(p.moment) + "/h" + std::to_string(p.history);
}

void ImaginationModel::set_choice(std::size_t m, std::size_t agent, Partition cells) {
  if (m >= order_.size() || agent >= agents_.size()) {
    throw ModelError("choice for an unknown moment or agent");
  }
  for (const auto& cell : cells) {
    for (std::size_t h : cell) {
      if (h >= histories_.size()) {
        throw ModelError("choice at " + moment_name(m) + " mentions history index " +
                         std::to_string(h) + ", but there are only " +
                         std::to_string(histories_.size()) + " histories");
      }
    }
  }
  choice_[m * agents_.size() + agent] = std::move(cells);
  rebuild_cells(m, agent);
  frame_serial_ = next_serial();
}

bool ImaginationModel::vacuous_choice(std::size_t m, std::size_t agent) const {
  const auto& cells = choice(m, agent);
  if (cells.size() != 1) return false;
  std::vector<std::size_t> cell = cells.front();
  std::sort(cell.begin(), cell.end());
  return cell == through_[m];
}

void ImaginationModel::rebuild_cells(std::size_t m, std::size_t agent) {
  const auto& cells = choice(m, agent);
  for (std::size_t h : through_[m]) {
    Proposition mask;
    for (const auto& cell : cells) {
      if (std::find(cell.begin(), cell.end(), h) == cell.end()) continue;
      for (std::size_t h2 : cell) {
        if (passes_through(h2, m)) mask.insert(point_lookup_[m][h2]);
      }
    }
    const std::size_t p = point_lookup_[m][h];
    if (mask.empty()) mask.insert(p);
    cell_mask_[agent * points_.size() + p] = mask;
  }
}

void ImaginationModel::set_neighborhood(std::size_t agent, std::size_t point, Family family) {
  if (agent >= agents_.size() || point >= points_.size()) {
    throw ModelError("neighborhood for an unknown agent or point");
  }
  for (const auto& prop : family) {
    if (!prop.subset_of(universe_)) throw ModelError("neighborhood proposition outside the model");
  }
  neighborhoods_[agent * points_.size() + point] = std::move(family);
}

void ImaginationModel::clear_neighborhoods() {
  for (auto& f : neighborhoods_) f.clear();
}

const Proposition& ImaginationModel::valuation(std::string_view var) const {
  static const Proposition empty;
  auto it = valuation_.find(var);
  return it == valuation_.end() ? empty : it->second;
}

void ImaginationModel::set_valuation(std::string var, Proposition points) {
  if (!points.subset_of(universe_)) throw ModelError("valuation of '" + var + "' outside the model");
  valuation_.insert_or_assign(std::move(var), points);
}

bool operator==(const ImaginationModel& a, const ImaginationModel& b) {
  if (a.order_.moments() != b.order_.moments() || a.order_.covers() != b.order_.covers() ||
      a.agents_ != b.agents_ || a.choice_ != b.choice_) {
    return false;
  }
  for (std::size_t i = 0; i < a.neighborhoods_.size(); ++i) {
    if (!same_family(a.neighborhoods_[i], b.neighborhoods_[i])) return false;
  }
  auto nonempty = [](const ImaginationModel& m) {
    std::map<std::string, Proposition, std::less<>> out;
    for (const auto& [k, v] : m.valuation_) {
      if (!v.empty()) out.emplace(k, v);
    }
    return out;
  };
  return nonempty(a) == nonempty(b);
}

ImaginationModel build_sigma_model(const std::vector<std::string>& vars,
                                   const std::vector<std::string>& agents) {
  if (agents.empty()) throw ModelError("AgentSetEmpty: a model needs at least one agent");
  ImaginationModel model(TreeOrder({"m0"}, {}), agents);
  for (const auto& v : vars) model.set_valuation(v, Proposition{});
  return model;
}

}  // namespace stit
