#include "stit/generate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "stit/error.hpp"
#include "stit/semantics.hpp"

namespace stit {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp && r != UINT64_MAX; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = sat_mul(r, n - k + i);
    if (r == UINT64_MAX) return r;
    r /= i;
  }
  return r;
}

std::uint64_t family_count(std::uint64_t candidates, std::size_t max_family) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= max_family; ++k) total = sat_add(total, binomial(candidates, k));
  return total;
}

// Restricted growth strings: every set partition of n elements.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_block) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::size_t b = 0; b <= max_block + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

std::size_t block_count(const std::vector<std::size_t>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// Independence over undividedness classes: every tuple of blocks (one per
// agent) must be realised by some class.
bool independent(const std::vector<std::vector<std::size_t>>& labelings) {
  if (labelings.empty()) return true;
  const std::size_t classes = labelings.front().size();
  std::set<std::vector<std::size_t>> realised;
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<std::size_t> t;
    for (const auto& l : labelings) t.push_back(l[c]);
    realised.insert(std::move(t));
  }
  std::uint64_t needed = 1;
  for (const auto& l : labelings) needed = sat_mul(needed, block_count(l));
  return realised.size() == needed;
}

// Children of each moment in a tree order.
std::vector<std::vector<std::size_t>> children_of(const TreeOrder& order) {
  std::vector<std::vector<std::size_t>> out(order.size());
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (!order.less(a, b)) continue;
      bool immediate = true;
      for (std::size_t c = 0; c < order.size() && immediate; ++c) {
        if (order.less(a, c) && order.less(c, b)) immediate = false;
      }
      if (immediate) out[a].push_back(b);
    }
  }
  return out;
}

// Histories of each undividedness class at m (one class per child).
std::vector<std::vector<std::size_t>> classes_at(const ImaginationModel& model,
                                                 const std::vector<std::size_t>& children) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c : children) out.push_back(model.histories_through(c));
  return out;
}

ImaginationModel::Partition to_partition(const std::vector<std::vector<std::size_t>>& classes,
                                         const std::vector<std::size_t>& labels) {
  ImaginationModel::Partition cells(block_count(labels));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& cell = cells[labels[c]];
    cell.insert(cell.end(), classes[c].begin(), classes[c].end());
  }
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  return cells;
}

std::vector<Proposition> definable_candidates(const ImaginationModel& model,
                                              const std::vector<Formula>& pool) {
  std::vector<Proposition> out{Proposition{}, model.universe()};
  for (const auto& f : pool) {
    Proposition e = extension(model, f);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

std::vector<Proposition> all_subsets(std::size_t points) {
  std::vector<Proposition> out;
  const std::uint64_t n = std::uint64_t{1} << points;
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Proposition p;
    for (std::size_t i = 0; i < points; ++i) {
      if (mask >> i & 1U) p.insert(i);
    }
    out.push_back(p);
  }
  return out;
}

std::vector<ImaginationModel::Family> families_over(const std::vector<Proposition>& candidates,
                                                    std::size_t max_family) {
  std::vector<ImaginationModel::Family> out;
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= std::min(max_family, candidates.size()); ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ImaginationModel::Family f;
      for (std::size_t i : pick) f.push_back(candidates[i]);
      out.push_back(std::move(f));
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string canonical_shape(std::size_t node, const std::vector<std::vector<std::size_t>>& kids,
                            std::vector<std::string>& memo) {
  std::vector<std::string> parts;
  for (std::size_t c : kids[node]) parts.push_back(canonical_shape(c, kids, memo));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ")";
  memo[node] = s;
  return s;
}

}  // namespace

void check_hard_caps(const ModelBounds& b) {
  auto fail = [](const std::string& what) {
    throw BoundsError("BoundsTooLarge: " + what + " (pass --unsafe-bounds to override)");
  };
  if (b.max_moments > HardCaps::kMaxMoments) {
    fail("more than " + std::to_string(HardCaps::kMaxMoments) + " moments");
  }
  if (b.agents.size() > HardCaps::kMaxAgents) {
    fail("more than " + std::to_string(HardCaps::kMaxAgents) + " agents");
  }
  if (b.max_histories > HardCaps::kMaxHistories) {
    fail("more than " + std::to_string(HardCaps::kMaxHistories) + " histories");
  }
  if (b.max_family > HardCaps::kMaxFamily) {
    fail("neighborhood families larger than " + std::to_string(HardCaps::kMaxFamily));
  }
  if (b.all_subsets_max_points > HardCaps::kMaxAllSubsetsPoints) {
    fail("all-subsets candidates beyond " + std::to_string(HardCaps::kMaxAllSubsetsPoints) +
         " points");
  }
}

std::vector<TreeOrder> rooted_trees(std::size_t moments) {
  if (moments == 0) return {};
  // Preorder parent arrays: node i hangs below some node on the path from
  // the root to node i-1.
  std::map<std::string, std::vector<std::size_t>> shapes;
  std::vector<std::size_t> parent(moments, 0);
  std::vector<std::size_t> depth(moments, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == moments) {
      std::vector<std::vector<std::size_t>> kids(moments);
      for (std::size_t j = 1; j < moments; ++j) kids[parent[j]].push_back(j);
      std::vector<std::string> memo(moments);
      shapes.emplace(canonical_shape(0, kids, memo), parent);
      return;
    }
    for (std::size_t cand = i - 1;; cand = parent[cand]) {
      parent[i] = cand;
      depth[i] = depth[cand] + 1;
      self(self, i + 1);
      if (cand == 0) break;
    }
  };
  rec(rec, 1);

  std::vector<TreeOrder> out;
  for (const auto& [shape, par] : shapes) {
    std::vector<std::vector<std::size_t>> kids(moments);
    for (std::size_t j = 1; j < moments; ++j) kids[par[j]].push_back(j);
    std::vector<std::string> memo(moments);
    canonical_shape(0, kids, memo);
    // Relabel in preorder with children sorted by shape.
    std::vector<std::size_t> label(moments);
    std::size_t next = 0;
    auto visit = [&](auto&& self, std::size_t node) -> void {
      label[node] = next++;
      std::vector<std::size_t> cs = kids[node];
      std::stable_sort(cs.begin(), cs.end(),
                       [&](std::size_t x, std::size_t y) { return memo[x] < memo[y]; });
      for (std::size_t c : cs) self(self, c);
    };
    visit(visit, 0);
    std::vector<std::string> names(moments);
    for (std::size_t j = 0; j < moments; ++j) names[j] = "m" + std::to_string(j);
    std::vector<TreeOrder::Cover> covers;
    for (std::size_t j = 1; j < moments; ++j) covers.emplace_back(label[par[j]], label[j]);
    std::sort(covers.begin(), covers.end());
    out.emplace_back(std::move(names), std::move(covers));
  }
  return out;
}

// --- ModelEnumerator ---------------------------------------------------------

struct ModelEnumerator::State {
  ModelBounds bounds;
  std::vector<TreeOrder> frames;
  std::uint64_t bound = 0;
  std::uint64_t produced = 0;
  bool started = false;
  bool done = false;

  std::size_t frame = 0;
  std::unique_ptr<ImaginationModel> model;
  // options[m] = admissible per-agent partitions at m
  std::vector<std::vector<std::vector<ImaginationModel::Partition>>> options;
  std::vector<std::size_t> choice_counter;
  std::vector<std::uint64_t> valuation_counter;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (agent, point)
  std::vector<ImaginationModel::Family> families;
  std::vector<std::size_t> family_counter;

  bool use_all_subsets() const {
    return bounds.policy == PropositionPolicy::AllSubsets &&
           model->points().size() <= bounds.all_subsets_max_points;
  }

  static std::vector<std::vector<std::vector<ImaginationModel::Partition>>> choice_options(
      const ImaginationModel& model, std::size_t agents) {
    const auto kids = children_of(model.order());
    std::vector<std::vector<std::vector<ImaginationModel::Partition>>> opts(model.moment_count());
    for (std::size_t m = 0; m < model.moment_count(); ++m) {
      const auto classes = classes_at(model, kids[m]);
      if (classes.size() <= 1 || agents == 0) {
        opts[m].push_back(std::vector<ImaginationModel::Partition>(
            agents, ImaginationModel::Partition{model.histories_through(m)}));
        continue;
      }
      const auto parts = set_partitions(classes.size());
      std::vector<std::size_t> pick(agents, 0);
      while (true) {
        std::vector<std::vector<std::size_t>> labelings;
        for (std::size_t a = 0; a < agents; ++a) labelings.push_back(parts[pick[a]]);
        if (independent(labelings)) {
          std::vector<ImaginationModel::Partition> tuple;
          for (const auto& l : labelings) tuple.push_back(to_partition(classes, l));
          opts[m].push_back(std::move(tuple));
        }
        std::size_t a = agents;
        bool carry = true;
        while (carry && a > 0) {
          --a;
          if (++pick[a] < parts.size()) {
            carry = false;
          } else {
            pick[a] = 0;
          }
        }
        if (carry) break;
      }
    }
    return opts;
  }

  static std::size_t active_slot_count(const ImaginationModel& base,
                                       const std::vector<ImaginationModel::Partition>& tuple_at,
                                       std::size_t m) {
    std::size_t n = 0;
    for (const auto& cells : tuple_at) {
      if (cells.size() > 1) n += base.histories_through(m).size();
    }
    return n;
  }

  std::uint64_t compute_bound() const {
    std::uint64_t total = 0;
    const std::size_t agents = bounds.agents.size();
    for (const auto& order : frames) {
      ImaginationModel base(order, bounds.agents);
      if (base.histories().size() > bounds.max_histories) continue;
      const std::size_t points = base.points().size();
      const std::uint64_t vals = sat_pow(2, sat_mul(points, bounds.vars.size()));
      std::uint64_t candidates;
      if (bounds.policy == PropositionPolicy::AllSubsets && points <= bounds.all_subsets_max_points) {
        candidates = std::uint64_t{1} << points;
      } else {
        candidates = std::min<std::uint64_t>(points >= 63 ? UINT64_MAX : (std::uint64_t{1} << points),
                                             bounds.definable_pool.size() + 2);
      }
      const std::uint64_t per_slot = family_count(candidates, bounds.max_family);
      auto opts = choice_options(base, agents);
      // Sum over choice configurations of per_slot^(active slots), computed
      // as a product of per-moment sums.
      std::uint64_t frame_total = 1;
      for (std::size_t m = 0; m < opts.size(); ++m) {
        std::uint64_t moment_sum = 0;
        for (const auto& tuple : opts[m]) {
          std::size_t slots;
          if (bounds.placement == NeighborhoodPlacement::Everywhere) {
            slots = agents * base.histories_through(m).size();
          } else {
            slots = active_slot_count(base, tuple, m);
          }
          moment_sum = sat_add(moment_sum, sat_pow(per_slot, slots));
        }
        frame_total = sat_mul(frame_total, moment_sum);
      }
      total = sat_add(total, sat_mul(frame_total, vals));
    }
    return total;
  }

  // Installs the current choice configuration and everything below it.
  void apply_choice() {
    for (std::size_t m = 0; m < options.size(); ++m) {
      const auto& tuple = options[m][choice_counter[m]];
      for (std::size_t a = 0; a < tuple.size(); ++a) model->set_choice(m, a, tuple[a]);
    }
    slots.clear();
    for (std::size_t a = 0; a < bounds.agents.size(); ++a) {
      for (std::size_t p = 0; p < model->points().size(); ++p) {
        const std::size_t m = model->points()[p].moment;
        if (bounds.placement == NeighborhoodPlacement::Everywhere || !model->vacuous_choice(m, a)) {
          slots.emplace_back(a, p);
        }
      }
    }
    std::fill(valuation_counter.begin(), valuation_counter.end(), 0);
    apply_valuation();
  }

  void apply_valuation() {
    for (std::size_t v = 0; v < bounds.vars.size(); ++v) {
      Proposition p;
      for (std::size_t i = 0; i < model->points().size(); ++i) {
        if (valuation_counter[v] >> i & 1U) p.insert(i);
      }
      model->set_valuation(bounds.vars[v], p);
    }
    model->clear_neighborhoods();
    if (use_all_subsets()) {
      if (families.empty()) families = families_over(all_subsets(model->points().size()), bounds.max_family);
    } else {
      families = families_over(definable_candidates(*model, bounds.definable_pool), bounds.max_family);
    }
    family_counter.assign(slots.size(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      model->set_neighborhood(slots[s].first, slots[s].second, families[0]);
    }
  }

  // Moves to the next usable frame starting at `frame`; false when none left.
  bool open_frame() {
    for (; frame < frames.size(); ++frame) {
      model = std::make_unique<ImaginationModel>(frames[frame], bounds.agents);
      if (model->histories().size() > bounds.max_histories) continue;
      options = choice_options(*model, bounds.agents.size());
      choice_counter.assign(options.size(), 0);
      valuation_counter.assign(bounds.vars.size(), 0);
      families.clear();
      apply_choice();
      return true;
    }
    return false;
  }

  bool advance_families() {
    for (std::size_t s = slots.size(); s > 0; --s) {
      const std::size_t i = s - 1;
      if (++family_counter[i] < families.size()) {
        model->set_neighborhood(slots[i].first, slots[i].second, families[family_counter[i]]);
        return true;
      }
      family_counter[i] = 0;
      model->set_neighborhood(slots[i].first, slots[i].second, families[0]);
    }
    return false;
  }

  bool advance_valuation() {
    const std::uint64_t limit = std::uint64_t{1} << model->points().size();
    for (std::size_t v = bounds.vars.size(); v > 0; --v) {
      if (++valuation_counter[v - 1] < limit) {
        apply_valuation();
        return true;
      }
      valuation_counter[v - 1] = 0;
    }
    return false;
  }

  bool advance_choice() {
    for (std::size_t m = options.size(); m > 0; --m) {
      if (++choice_counter[m - 1] < options[m - 1].size()) {
        apply_choice();
        return true;
      }
      choice_counter[m - 1] = 0;
    }
    return false;
  }
};

ModelEnumerator::ModelEnumerator(ModelBounds bounds) : state_(std::make_unique<State>()) {
  state_->bounds = std::move(bounds);
  for (std::size_t n = 1; n <= state_->bounds.max_moments; ++n) {
    for (auto& t : rooted_trees(n)) state_->frames.push_back(std::move(t));
  }
  state_->bound = state_->compute_bound();
  if (state_->bound > state_->bounds.max_models) {
    throw BoundsError("BoundsTooLarge: the enumeration could produce " +
                      (state_->bound == UINT64_MAX ? std::string("more than 2^64")
                                                   : std::to_string(state_->bound)) +
                      " models, above the cap of " + std::to_string(state_->bounds.max_models));
  }
}

ModelEnumerator::~ModelEnumerator() = default;
ModelEnumerator::ModelEnumerator(ModelEnumerator&&) noexcept = default;
ModelEnumerator& ModelEnumerator::operator=(ModelEnumerator&&) noexcept = default;

const ImaginationModel* ModelEnumerator::next() {
  State& s = *state_;
  if (s.done) return nullptr;
  if (!s.started) {
    s.started = true;
    if (!s.open_frame()) {
      s.done = true;
      return nullptr;
    }
  } else if (!s.advance_families() && !s.advance_valuation() && !s.advance_choice()) {
    ++s.frame;
    if (!s.open_frame()) {
      s.done = true;
      s.model.reset();
      return nullptr;
    }
  }
  ++s.produced;
  return s.model.get();
}

std::uint64_t ModelEnumerator::size_bound() const { return state_->bound; }
std::uint64_t ModelEnumerator::produced() const { return state_->produced; }
const ModelBounds& ModelEnumerator::bounds() const { return state_->bounds; }

// --- random_model --------------------------------------------------------------

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

TreeOrder random_tree(std::mt19937_64& rng, std::size_t moments, std::size_t max_histories) {
  std::vector<std::size_t> parent(moments, 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<bool> has_child(moments, false);
    for (std::size_t i = 1; i < moments; ++i) {
      parent[i] = uniform(rng, 0, i - 1);
      has_child[parent[i]] = true;
    }
    const auto leaves = static_cast<std::size_t>(std::count(has_child.begin(), has_child.end(), false));
    if (leaves <= max_histories) break;
    if (attempt == 63) {
      for (std::size_t i = 1; i < moments; ++i) parent[i] = i - 1;
    }
  }
  std::vector<std::string> names(moments);
  for (std::size_t i = 0; i < moments; ++i) names[i] = "m" + std::to_string(i);
  std::vector<TreeOrder::Cover> covers;
  for (std::size_t i = 1; i < moments; ++i) covers.emplace_back(parent[i], i);
  return TreeOrder(std::move(names), std::move(covers));
}

std::vector<std::size_t> random_labels(std::mt19937_64& rng, std::size_t n) {
  const std::size_t blocks = uniform(rng, 1, n);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = uniform(rng, 0, blocks - 1);
  // Renumber to drop unused blocks.
  std::map<std::size_t, std::size_t> renumber;
  for (auto& l : labels) l = renumber.emplace(l, renumber.size()).first->second;
  return labels;
}

// Fiber product: each class carries a tuple of per-agent labels and every
// tuple is carried by some class.
std::vector<std::vector<std::size_t>> fiber_labels(std::mt19937_64& rng, std::size_t classes,
                                                   std::size_t agents) {
  std::vector<std::size_t> order(agents);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> counts(agents, 1);
  std::size_t product = 1;
  for (std::size_t a : order) {
    const std::size_t room = classes / product;
    counts[a] = uniform(rng, 1, std::max<std::size_t>(1, room));
    product *= counts[a];
  }
  std::vector<std::size_t> perm(classes);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<std::size_t>> labels(agents, std::vector<std::size_t>(classes, 0));
  for (std::size_t i = 0; i < classes; ++i) {
    std::size_t code = i < product ? i : uniform(rng, 0, product - 1);
    for (std::size_t a = 0; a < agents; ++a) {
      labels[a][perm[i]] = code % counts[a];
      code /= counts[a];
    }
  }
  return labels;
}

}  // namespace

ImaginationModel random_model(std::uint64_t seed, const ModelBounds& bounds) {
  if (bounds.max_moments == 0) throw BoundsError("a tree needs at least one moment");
  std::mt19937_64 rng(seed);
  const std::size_t n = uniform(rng, 1, bounds.max_moments);
  ImaginationModel model(random_tree(rng, n, std::max<std::size_t>(1, bounds.max_histories)),
                         bounds.agents);
  const std::size_t agents = bounds.agents.size();
  const auto kids = children_of(model.order());

  for (std::size_t m = 0; m < n && agents > 0; ++m) {
    const auto classes = classes_at(model, kids[m]);
    if (classes.size() <= 1) continue;
    std::vector<std::vector<std::size_t>> labels;
    if (uniform(rng, 0, 3) == 0) {
      for (int attempt = 0; attempt < 8 && labels.empty(); ++attempt) {
        std::vector<std::vector<std::size_t>> trial;
        for (std::size_t a = 0; a < agents; ++a) trial.push_back(random_labels(rng, classes.size()));
        if (independent(trial)) labels = std::move(trial);
      }
    }
    if (labels.empty()) labels = fiber_labels(rng, classes.size(), agents);
    for (std::size_t a = 0; a < agents; ++a) model.set_choice(m, a, to_partition(classes, labels[a]));
  }

  const std::size_t points = model.points().size();
  for (const auto& v : bounds.vars) {
    Proposition p;
    for (std::size_t i = 0; i < points; ++i) {
      if (uniform(rng, 0, 1)) p.insert(i);
    }
    model.set_valuation(v, p);
  }

  std::vector<Formula> pool = bounds.definable_pool;
  for (const auto& v : bounds.vars) pool.push_back(Formula::var(v));
  const auto candidates = definable_candidates(model, pool);
  auto random_prop = [&]() {
    if (uniform(rng, 0, 2) != 0) return candidates[uniform(rng, 0, candidates.size() - 1)];
    Proposition p;
    for (std::size_t i = 0; i < points; ++i) {
      if (uniform(rng, 0, 1)) p.insert(i);
    }
    return p;
  };
  auto add_to = [&](ImaginationModel::Family& fam, const Proposition& p) {
    if (fam.size() < bounds.max_family && std::find(fam.begin(), fam.end(), p) == fam.end()) {
      fam.push_back(p);
    }
  };
  std::vector<ImaginationModel::Family> fams(agents * points);
  for (std::size_t a = 0; a < agents; ++a) {
    for (std::size_t p = 0; p < points; ++p) {
      const std::size_t size = uniform(rng, 0, bounds.max_family);
      for (std::size_t k = 0; k < size; ++k) add_to(fams[a * points + p], random_prop());
    }
    // Put one proposition into a whole choice cell now and then, so that
    // imagination formulas come out true.
    for (std::size_t m = 0; m < n; ++m) {
      if (uniform(rng, 0, 1) == 0) continue;
      const auto& cells = model.choice(m, a);
      const auto& cell = cells[uniform(rng, 0, cells.size() - 1)];
      const Proposition prop = candidates[uniform(rng, 0, candidates.size() - 1)];
      for (std::size_t h : cell) {
        if (auto p = model.point_index({m, h})) add_to(fams[a * points + *p], prop);
      }
    }
    for (std::size_t p = 0; p < points; ++p) {
      model.set_neighborhood(a, p, std::move(fams[a * points + p]));
    }
  }
  return model;
}

}  // namespace stit
