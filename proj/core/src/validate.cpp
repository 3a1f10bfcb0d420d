#include "stit/validate.hpp"

#include <algorithm>
#include <set>

namespace stit {

std::string_view condition_name(FrameCondition c) {
  switch (c) {
    case FrameCondition::Antisymmetry:
      return "antisymmetry";
    case FrameCondition::DownwardDirectedness:
      return "downward directedness";
    case FrameCondition::BackwardLinearity:
      return "backward linearity";
    case FrameCondition::ChoicePartition:
      return "choice partition";
    case FrameCondition::NoChoiceBetweenUndividedHistories:
      return "no choice between undivided histories";
    case FrameCondition::IndependenceOfAgents:
      return "independence of agents";
  }
  return "?";
}

bool ValidationReport::has(FrameCondition c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.condition == c; });
}

namespace {

std::string history_set(const std::vector<std::size_t>& hs) {
  std::string s = "{";
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (i) s += ", ";
    s += "h" + std::to_string(hs[i]);
  }
  return s + "}";
}

}  // namespace

std::string describe(const Violation& v) {
  std::string s(condition_name(v.condition));
  const auto& m = v.moments;
  switch (v.condition) {
    case FrameCondition::Antisymmetry:
      s = "not a partial order (antisymmetry): " + m[0] + " <= " + m[1] + " and " + m[1] +
          " <= " + m[0];
      break;
    case FrameCondition::DownwardDirectedness:
      s += ": " + m[0] + " and " + m[1] + " have no common lower bound";
      break;
    case FrameCondition::BackwardLinearity:
      s += ": " + m[0] + " and " + m[1] + " are incomparable but both lie below " + m[2];
      break;
    case FrameCondition::ChoicePartition:
      s += ": choice of " + v.agent + " at " + m[0] + " " + v.detail;
      if (!v.histories.empty()) s += " " + history_set(v.histories);
      break;
    case FrameCondition::NoChoiceBetweenUndividedHistories:
      s += ": at " + m[0] + ", h" + std::to_string(v.histories[0]) + " and h" +
           std::to_string(v.histories[1]) + " share " + m[1] + " but " + v.agent +
           " separates them";
      break;
    case FrameCondition::IndependenceOfAgents: {
      s += ": at " + m[0] + ", selector ";
      for (std::size_t i = 0; i < v.selector.size(); ++i) {
        if (i) s += ", ";
        s += v.selector[i].first + " -> " + history_set(v.selector[i].second);
      }
      s += " has empty intersection";
      break;
    }
  }
  return s;
}

ValidationReport validate_order(const TreeOrder& order) {
  ValidationReport report;
  const std::size_t n = order.size();
  const auto& names = order.moments();
  for (auto [a, b] : order.covers()) {
    if (a == b) {
      report.violations.push_back({FrameCondition::Antisymmetry, {names[a], names[a]}, {}, {}, {},
                                   "self-loop cover"});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (order.leq(a, b) && order.leq(b, a)) {
        report.violations.push_back(
            {FrameCondition::Antisymmetry, {names[a], names[b]}, {}, {}, {}, {}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool lower = false;
      for (std::size_t m = 0; m < n && !lower; ++m) lower = order.leq(m, a) && order.leq(m, b);
      if (!lower) {
        report.violations.push_back(
            {FrameCondition::DownwardDirectedness, {names[a], names[b]}, {}, {}, {}, {}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (order.leq(a, b) || order.leq(b, a)) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (order.leq(a, m) && order.leq(b, m)) {
          report.violations.push_back(
              {FrameCondition::BackwardLinearity, {names[a], names[b], names[m]}, {}, {}, {}, {}});
          break;
        }
      }
    }
  }
  return report;
}

namespace {

void check_partition(const ImaginationModel& model, std::size_t m, std::size_t a,
                     ValidationReport& report) {
  const auto& cells = model.choice(m, a);
  const auto& hm = model.histories_through(m);
  const std::string& moment = model.moment_name(m);
  const std::string& agent = model.agents()[a];
  auto add = [&](std::string detail, std::vector<std::size_t> hs) {
    report.violations.push_back({FrameCondition::ChoicePartition, {moment}, agent, std::move(hs), {},
                                 std::move(detail)});
  };
  std::set<std::size_t> seen;
  std::vector<std::size_t> foreign, repeated;
  for (const auto& cell : cells) {
    if (cell.empty()) add("has an empty cell", {});
    for (std::size_t h : cell) {
      if (!model.passes_through(h, m)) {
        foreign.push_back(h);
      } else if (!seen.insert(h).second) {
        repeated.push_back(h);
      }
    }
  }
  if (!foreign.empty()) add("mentions histories not passing through the moment", foreign);
  if (!repeated.empty()) add("puts histories in more than one cell", repeated);
  std::vector<std::size_t> missing;
  for (std::size_t h : hm) {
    if (!seen.contains(h)) missing.push_back(h);
  }
  if (!missing.empty()) add("does not cover", missing);
}

bool same_cells(const ImaginationModel::Partition& cells, std::size_t h1, std::size_t h2) {
  for (const auto& cell : cells) {
    const bool in1 = std::find(cell.begin(), cell.end(), h1) != cell.end();
    const bool in2 = std::find(cell.begin(), cell.end(), h2) != cell.end();
    if (in1 != in2) return false;
  }
  return true;
}

void check_undivided(const ImaginationModel& model, std::size_t m, ValidationReport& report) {
  const auto& hm = model.histories_through(m);
  const auto& order = model.order();
  for (std::size_t i = 0; i < hm.size(); ++i) {
    for (std::size_t j = i + 1; j < hm.size(); ++j) {
      std::optional<std::size_t> shared;
      for (std::size_t later : model.histories()[hm[i]].moments) {
        if (order.less(m, later) && model.passes_through(hm[j], later)) {
          shared = later;
          break;
        }
      }
      if (!shared) continue;
      for (std::size_t a = 0; a < model.agents().size(); ++a) {
        if (same_cells(model.choice(m, a), hm[i], hm[j])) continue;
        report.violations.push_back({FrameCondition::NoChoiceBetweenUndividedHistories,
                                     {model.moment_name(m), model.moment_name(*shared)},
                                     model.agents()[a],
                                     {hm[i], hm[j]},
                                     {},
                                     {}});
      }
    }
  }
}

void check_independence(const ImaginationModel& model, std::size_t m, ValidationReport& report) {
  const std::size_t k = model.agents().size();
  if (k == 0) return;
  std::vector<std::size_t> pick(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    if (model.choice(m, a).empty()) return;  // reported as a partition problem
  }
  while (true) {
    std::vector<std::size_t> common = model.choice(m, 0)[pick[0]];
    std::sort(common.begin(), common.end());
    for (std::size_t a = 1; a < k && !common.empty(); ++a) {
      std::vector<std::size_t> cell = model.choice(m, a)[pick[a]];
      std::sort(cell.begin(), cell.end());
      std::vector<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), cell.begin(), cell.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (common.empty()) {
      Violation v{FrameCondition::IndependenceOfAgents, {model.moment_name(m)}, {}, {}, {}, {}};
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::size_t> cell = model.choice(m, a)[pick[a]];
        std::sort(cell.begin(), cell.end());
        v.selector.emplace_back(model.agents()[a], std::move(cell));
      }
      report.violations.push_back(std::move(v));
    }
    std::size_t a = k;
    while (a > 0) {
      --a;
      if (++pick[a] < model.choice(m, a).size()) break;
      pick[a] = 0;
      if (a == 0) return;
    }
  }
}

}  // namespace

ValidationReport validate(const ImaginationModel& model) {
  ValidationReport report = validate_order(model.order());
  for (std::size_t m = 0; m < model.moment_count(); ++m) {
    for (std::size_t a = 0; a < model.agents().size(); ++a) check_partition(model, m, a, report);
  }
  for (std::size_t m = 0; m < model.moment_count(); ++m) check_undivided(model, m, report);
  for (std::size_t m = 0; m < model.moment_count(); ++m) check_independence(model, m, report);
  return report;
}

}  // namespace stit
