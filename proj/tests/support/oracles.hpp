#pragma once

// Independent reference implementations used to pin the library down.
// Nothing here calls into the evaluator, the proof checker or the validator.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stit/formula.hpp"
#include "stit/model.hpp"
#include "stit/proposition.hpp"

namespace oracle {

using stit::Formula;
using stit::ImaginationModel;
using stit::Op;

// Textbook satisfaction relation, written directly from the clauses with
// std::set bookkeeping. Sugar is handled in place rather than through
// desugar().
class NaiveEvaluator {
 public:
  explicit NaiveEvaluator(const ImaginationModel& m) : m_(m) {}

  bool holds(const Formula& f, std::size_t moment, std::size_t history) {
    switch (f.op()) {
      case Op::Var: {
        auto idx = m_.point_index({moment, history});
        return m_.valuation(f.name()).contains(*idx);
      }
      case Op::Neg:
        return !holds(f.operand(), moment, history);
      case Op::And:
        return holds(f.lhs(), moment, history) && holds(f.rhs(), moment, history);
      case Op::Or:
        return holds(f.lhs(), moment, history) || holds(f.rhs(), moment, history);
      case Op::Imp:
        return !holds(f.lhs(), moment, history) || holds(f.rhs(), moment, history);
      case Op::Iff:
        return holds(f.lhs(), moment, history) == holds(f.rhs(), moment, history);
      case Op::Settled:
        for (std::size_t h : through(moment)) {
          if (!holds(f.operand(), moment, h)) return false;
        }
        return true;
      case Op::Poss:
        for (std::size_t h : through(moment)) {
          if (holds(f.operand(), moment, h)) return true;
        }
        return false;
      case Op::Cstit:
        for (std::size_t h : cell(moment, f.agent(), history)) {
          if (!holds(f.operand(), moment, h)) return false;
        }
        return true;
      case Op::Dstit: {
        bool all = true;
        for (std::size_t h : cell(moment, f.agent(), history)) all = all && holds(f.operand(), moment, h);
        bool settled = true;
        for (std::size_t h : through(moment)) settled = settled && holds(f.operand(), moment, h);
        return all && !settled;
      }
      case Op::Imagine: {
        const stit::Proposition ext = global_extension(f.operand());
        const std::size_t a = *m_.agent_index(f.agent());
        auto in_n = [&](std::size_t h) {
          const auto& fam = m_.neighborhood(a, *m_.point_index({moment, h}));
          return std::find(fam.begin(), fam.end(), ext) != fam.end();
        };
        for (std::size_t h : cell(moment, f.agent(), history)) {
          if (!in_n(h)) return false;
        }
        for (std::size_t h : through(moment)) {
          if (!in_n(h)) return true;
        }
        return false;
      }
    }
    return false;
  }

  stit::Proposition global_extension(const Formula& f) {
    stit::Proposition out;
    for (std::size_t i = 0; i < m_.points().size(); ++i) {
      if (holds(f, m_.points()[i].moment, m_.points()[i].history)) out.insert(i);
    }
    return out;
  }

 private:
  std::vector<std::size_t> through(std::size_t moment) const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < m_.histories().size(); ++h) {
      const auto& ms = m_.histories()[h].moments;
      if (std::find(ms.begin(), ms.end(), moment) != ms.end()) out.push_back(h);
    }
    return out;
  }

  std::vector<std::size_t> cell(std::size_t moment, const std::string& agent, std::size_t history) const {
    const std::size_t a = *m_.agent_index(agent);
    for (const auto& c : m_.choice(moment, a)) {
      if (std::find(c.begin(), c.end(), history) != c.end()) return c;
    }
    return {history};
  }

  const ImaginationModel& m_;
};

// Boolean skeleton evaluation: every non-Boolean node is an opaque atom
// looked up by its printed form.
inline bool eval_boolean(const Formula& f, const std::map<std::string, bool>& atoms) {
  switch (f.op()) {
    case Op::Neg: return !eval_boolean(f.operand(), atoms);
    case Op::And: return eval_boolean(f.lhs(), atoms) && eval_boolean(f.rhs(), atoms);
    case Op::Or: return eval_boolean(f.lhs(), atoms) || eval_boolean(f.rhs(), atoms);
    case Op::Imp: return !eval_boolean(f.lhs(), atoms) || eval_boolean(f.rhs(), atoms);
    case Op::Iff: return eval_boolean(f.lhs(), atoms) == eval_boolean(f.rhs(), atoms);
    default: return atoms.at(stit::to_string(f));
  }
}

inline void skeleton_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Neg: skeleton_atoms(f.operand(), out); return;
    case Op::And: case Op::Or: case Op::Imp: case Op::Iff:
      skeleton_atoms(f.lhs(), out);
      skeleton_atoms(f.rhs(), out);
      return;
    default: out.insert(stit::to_string(f));
  }
}

// Naive truth-table tautology check: enumerate assignments one by one.
inline bool naive_tautology(const Formula& f) {
  std::set<std::string> names;
  skeleton_atoms(f, names);
  const std::vector<std::string> list(names.begin(), names.end());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << list.size()); ++x) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < list.size(); ++i) v[list[i]] = (x >> i) & 1U;
    if (!eval_boolean(f, v)) return false;
  }
  return true;
}

// Random formulas over the given variables and agents.
class FormulaGen {
 public:
  FormulaGen(std::uint64_t seed, std::vector<std::string> vars, std::vector<std::string> agents,
             bool sugar = true)
      : rng_(seed), vars_(std::move(vars)), agents_(std::move(agents)), sugar_(sugar) {}

  Formula operator()(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : (sugar_ ? 10 : 8));
    const int k = pick(rng_);
    auto sub = [&] { return (*this)(depth - 1); };
    switch (k) {
      case 0: return Formula::var(choose(vars_));
      case 1: return Formula::neg(sub());
      case 2: return Formula::conj(sub(), sub());
      case 3: return Formula::disj(sub(), sub());
      case 4: return Formula::imp(sub(), sub());
      case 5: return Formula::iff(sub(), sub());
      case 6: return Formula::settled(sub());
      case 7: return Formula::cstit(choose(agents_), sub());
      case 8: return Formula::imagine(choose(agents_), sub());
      case 9: return Formula::possible(sub());
      default: return Formula::dstit(choose(agents_), sub());
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  const std::string& choose(const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
  }

  std::mt19937_64 rng_;
  std::vector<std::string> vars_;
  std::vector<std::string> agents_;
  bool sugar_;
};

// Reflexive reachability along cover pairs by depth-first search; a second
// route to the order, independent of TreeOrder's closure.
inline bool reaches(const std::vector<std::pair<std::size_t, std::size_t>>& covers, std::size_t from,
                    std::size_t to) {
  std::set<std::size_t> seen{from};
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (auto [lo, hi] : covers) {
      if (lo == x && seen.insert(hi).second) stack.push_back(hi);
    }
  }
  return false;
}

}  // namespace oracle
