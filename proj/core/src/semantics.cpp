#include "stit/semantics.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "stit/error.hpp"

namespace stit {

namespace {

bool in_family(const ImaginationModel::Family& family, const Proposition& p) {
  return std::find(family.begin(), family.end(), p) != family.end();
}

std::size_t require_agent(const ImaginationModel& model, const std::string& agent) {
  auto a = model.agent_index(agent);
  if (!a) throw EvalError("the model has no agent '" + agent + "'");
  return *a;
}

void require_agents(const ImaginationModel& model, const Formula& f) {
  for (const auto& a : agents_of(f)) require_agent(model, a);
}

// --- Bottom-up clauses over whole extensions -------------------------------

Proposition settled_ext(const ImaginationModel& model, const Proposition& arg) {
  Proposition out;
  for (std::size_t m = 0; m < model.moment_count(); ++m) {
    if (model.moment_points(m).subset_of(arg)) out |= model.moment_points(m);
  }
  return out;
}

Proposition cstit_ext(const ImaginationModel& model, std::size_t agent, const Proposition& arg) {
  Proposition out;
  model.universe().for_each([&](std::size_t p) {
    if (model.cell_points(agent, p).subset_of(arg)) out.insert(p);
  });
  return out;
}

Proposition imagine_ext(const ImaginationModel& model, std::size_t agent, const Proposition& arg,
                        const EvalOptions& options) {
  Proposition out;
  for (std::size_t m = 0; m < model.moment_count(); ++m) {
    const Proposition& here = model.moment_points(m);
    Proposition inside;
    here.for_each([&](std::size_t p) {
      if (in_family(model.neighborhood(agent, p), arg)) inside.insert(p);
    });
    const bool witness = options.imagination == ImaginationClause::WithoutOutsideWitness ||
                         !here.subset_of(inside);
    if (!witness) continue;
    here.for_each([&](std::size_t p) {
      if (model.cell_points(agent, p).subset_of(inside)) out.insert(p);
    });
  }
  return out;
}

Proposition complement(const ImaginationModel& model, const Proposition& p) {
  return model.universe() - p;
}

Proposition bottom_up(const ImaginationModel& model, const Formula& f,
                      std::unordered_map<const void*, Proposition>& memo,
                      const EvalOptions& options) {
  if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
  Proposition out;
  switch (f.op()) {
    case Op::Var:
      out = model.valuation(f.name());
      break;
    case Op::Neg:
      out = complement(model, bottom_up(model, f.operand(), memo, options));
      break;
    case Op::And:
      out = bottom_up(model, f.lhs(), memo, options) & bottom_up(model, f.rhs(), memo, options);
      break;
    case Op::Or:
      out = bottom_up(model, f.lhs(), memo, options) | bottom_up(model, f.rhs(), memo, options);
      break;
    case Op::Imp:
      out = complement(model, bottom_up(model, f.lhs(), memo, options)) |
            bottom_up(model, f.rhs(), memo, options);
      break;
    case Op::Iff: {
      Proposition l = bottom_up(model, f.lhs(), memo, options);
      Proposition r = bottom_up(model, f.rhs(), memo, options);
      out = (l & r) | complement(model, l | r);
      break;
    }
    case Op::Settled:
      out = settled_ext(model, bottom_up(model, f.operand(), memo, options));
      break;
    case Op::Cstit:
      out = cstit_ext(model, require_agent(model, f.agent()),
                      bottom_up(model, f.operand(), memo, options));
      break;
    case Op::Imagine:
      out = imagine_ext(model, require_agent(model, f.agent()),
                        bottom_up(model, f.operand(), memo, options), options);
      break;
    case Op::Poss:
    case Op::Dstit:
      throw Error("sugar reached the evaluator");
  }
  memo.emplace(f.identity(), out);
  return out;
}

// --- Pointwise recursion ---------------------------------------------------

class PointEvaluator {
 public:
  PointEvaluator(const ImaginationModel& model, EvalTrace* trace, const EvalOptions& options)
      : model_(model), trace_(trace), options_(options) {}

  bool eval(const Formula& f, std::size_t m, std::size_t h, std::size_t depth) {
    std::size_t step = 0;
    if (trace_) {
      step = trace_->steps.size();
      trace_->steps.push_back(
          {depth, to_string(f), model_.moment_name(m) + "/h" + std::to_string(h), {}, false});
    }
    std::string clause;
    bool v = false;
    switch (f.op()) {
      case Op::Var:
        v = model_.valuation(f.name()).contains(index(m, h));
        clause = "atom: m/h in V(" + f.name() + ")";
        break;
      case Op::Neg:
        v = !eval(f.operand(), m, h, depth + 1);
        clause = "negation";
        break;
      case Op::And:
        v = eval(f.lhs(), m, h, depth + 1) && eval(f.rhs(), m, h, depth + 1);
        clause = "conjunction";
        break;
      case Op::Or:
        v = eval(f.lhs(), m, h, depth + 1) || eval(f.rhs(), m, h, depth + 1);
        clause = "disjunction";
        break;
      case Op::Imp:
        v = !eval(f.lhs(), m, h, depth + 1) || eval(f.rhs(), m, h, depth + 1);
        clause = "implication";
        break;
      case Op::Iff:
        v = eval(f.lhs(), m, h, depth + 1) == eval(f.rhs(), m, h, depth + 1);
        clause = "biconditional";
        break;
      case Op::Settled: {
        v = true;
        for (std::size_t h2 : model_.histories_through(m)) {
          if (!eval(f.operand(), m, h2, depth + 1)) {
            v = false;
            clause = "settled: fails on h" + std::to_string(h2);
            break;
          }
        }
        if (v) clause = "settled: holds on every history through the moment";
        break;
      }
      case Op::Cstit: {
        const std::size_t a = require_agent(model_, f.agent());
        v = true;
        for (std::size_t h2 : cell(m, a, h)) {
          if (!eval(f.operand(), m, h2, depth + 1)) {
            v = false;
            clause = "cstit: fails on h" + std::to_string(h2) + " in the choice cell";
            break;
          }
        }
        if (v) clause = "cstit: holds throughout the choice cell";
        break;
      }
      case Op::Imagine:
        v = imagine(f, m, h, clause);
        break;
      case Op::Poss:
      case Op::Dstit:
        throw Error("sugar reached the evaluator");
    }
    if (trace_) {
      trace_->steps[step].clause = std::move(clause);
      trace_->steps[step].value = v;
    }
    return v;
  }

 private:
  std::size_t index(std::size_t m, std::size_t h) const { return *model_.point_index({m, h}); }

  // Choice^m_a(h), read from the partition itself.
  std::vector<std::size_t> cell(std::size_t m, std::size_t a, std::size_t h) const {
    std::vector<std::size_t> out;
    for (const auto& c : model_.choice(m, a)) {
      if (std::find(c.begin(), c.end(), h) == c.end()) continue;
      for (std::size_t h2 : c) {
        if (model_.passes_through(h2, m) && std::find(out.begin(), out.end(), h2) == out.end()) {
          out.push_back(h2);
        }
      }
    }
    if (out.empty()) out.push_back(h);
    return out;
  }

  // The argument's extension over all of MH(M), by evaluating it pointwise.
  const Proposition& global_extension(const Formula& arg) {
    auto it = ext_cache_.find(arg.identity());
    if (it != ext_cache_.end()) return it->second;
    EvalTrace* saved = trace_;
    trace_ = nullptr;
    Proposition ext;
    for (std::size_t i = 0; i < model_.points().size(); ++i) {
      const PointRef& p = model_.points()[i];
      if (eval(arg, p.moment, p.history, 0)) ext.insert(i);
    }
    trace_ = saved;
    return ext_cache_.emplace(arg.identity(), ext).first->second;
  }

  bool imagine(const Formula& f, std::size_t m, std::size_t h, std::string& clause) {
    const std::size_t a = require_agent(model_, f.agent());
    const Proposition& ext = global_extension(f.operand());
    clause = "imagination: |Ext| = " + std::to_string(ext.count());
    for (std::size_t h2 : cell(m, a, h)) {
      if (!in_family(model_.neighborhood(a, index(m, h2)), ext)) {
        clause += "; Ext not in N(" + model_.moment_name(m) + "/h" + std::to_string(h2) +
                  ") inside the choice cell";
        return false;
      }
    }
    if (options_.imagination == ImaginationClause::WithoutOutsideWitness) {
      clause += "; in N throughout the cell (outside witness not required)";
      return true;
    }
    for (std::size_t h2 : model_.histories_through(m)) {
      if (!in_family(model_.neighborhood(a, index(m, h2)), ext)) {
        clause += "; in N throughout the cell, missing at h" + std::to_string(h2);
        return true;
      }
    }
    clause += "; in N at every history through the moment";
    return false;
  }

  const ImaginationModel& model_;
  EvalTrace* trace_;
  EvalOptions options_;
  std::unordered_map<const void*, Proposition> ext_cache_;
};

}  // namespace

bool satisfies(const ImaginationModel& model, PointRef point, const Formula& f, EvalTrace* trace,
               const EvalOptions& options) {
  if (!model.point_index(point)) {
    throw Error("h" + std::to_string(point.history) + " does not pass through moment index " +
                std::to_string(point.moment));
  }
  const Formula g = desugar(f);
  require_agents(model, g);
  if (trace) trace->steps.clear();
  PointEvaluator eval(model, trace, options);
  return eval.eval(g, point.moment, point.history, 0);
}

Proposition extension(const ImaginationModel& model, const Formula& f, const EvalOptions& options) {
  const Formula g = desugar(f);
  require_agents(model, g);
  std::unordered_map<const void*, Proposition> memo;
  return bottom_up(model, g, memo, options);
}

bool valid_in_model(const ImaginationModel& model, const Formula& f, const EvalOptions& options) {
  return extension(model, f, options) == model.universe();
}

// --- FormulaBatch ------------------------------------------------------------

FormulaBatch::FormulaBatch(EvalOptions options) : options_(options) {}

std::uint32_t FormulaBatch::intern(const Formula& f) {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  Node node{f.op(), 0, 0, 0};
  auto name_index = [](std::vector<std::string>& table, const std::string& s) {
    auto it = std::find(table.begin(), table.end(), s);
    if (it != table.end()) return static_cast<std::uint32_t>(it - table.begin());
    table.push_back(s);
    return static_cast<std::uint32_t>(table.size() - 1);
  };
  if (f.op() == Op::Var) {
    node.name = name_index(names_, f.name());
  } else if (f.is_binary()) {
    node.first = intern(f.lhs());
    node.second = intern(f.rhs());
  } else {
    node.first = intern(f.operand());
    if (f.has_agent()) node.name = name_index(agents_, f.agent());
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(node);
  parents_.emplace_back();
  slots_of_node_.emplace_back();
  leaf_mask_.resize((nodes_.size() + 63) / 64, 0);
  if (node.op != Op::Var) {
    parents_[node.first].push_back(id);
    if (is_binary_op(node.op) && node.second != node.first) parents_[node.second].push_back(id);
  }
  if (node.op == Op::Var || node.op == Op::Imagine) {
    leaves_.push_back(id);
    leaf_mask_[id / 64] |= std::uint64_t{1} << (id % 64);
  }
  index_.emplace(f, id);
  return id;
}

std::size_t FormulaBatch::add(const Formula& f, std::size_t group) {
  const std::uint32_t node = intern(desugar(f));
  slots_.push_back(node);
  slots_of_node_[node].push_back(static_cast<std::uint32_t>(slots_.size() - 1));
  slot_valid_.push_back(0);
  slot_group_.push_back(static_cast<std::uint32_t>(group));
  if (invalid_by_group_.size() <= group) invalid_by_group_.resize(group + 1, 0);
  ++invalid_by_group_[group];
  ++invalid_count_;
  last_model_ = nullptr;
  return slots_.size() - 1;
}

std::size_t FormulaBatch::first_invalid() const {
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (!slot_valid_[s]) return s;
  }
  return slots_.size();
}

void FormulaBatch::resolve(const ImaginationModel& model) {
  var_values_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) var_values_[i] = &model.valuation(names_[i]);
  agent_index_.resize(agents_.size());
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    agent_index_[i] = require_agent(model, agents_[i]);
  }
}

bool FormulaBatch::compute(std::uint32_t id, const ImaginationModel& model) {
  const Node& n = nodes_[id];
  Proposition out;
  switch (n.op) {
    case Op::Var:
      out = *var_values_[n.name];
      break;
    case Op::Neg:
      out = complement(model, values_[n.first]);
      break;
    case Op::And:
      out = values_[n.first] & values_[n.second];
      break;
    case Op::Or:
      out = values_[n.first] | values_[n.second];
      break;
    case Op::Imp:
      out = complement(model, values_[n.first]) | values_[n.second];
      break;
    case Op::Iff: {
      const Proposition& l = values_[n.first];
      const Proposition& r = values_[n.second];
      out = (l & r) | complement(model, l | r);
      break;
    }
    case Op::Settled:
      out = settled_ext(model, values_[n.first]);
      break;
    case Op::Cstit:
      out = cstit_ext(model, agent_index_[n.name], values_[n.first]);
      break;
    case Op::Imagine:
      out = imagine_ext(model, agent_index_[n.name], values_[n.first], options_);
      break;
    case Op::Poss:
    case Op::Dstit:
      throw Error("sugar reached the evaluator");
  }
  if (out == values_[id]) return false;
  values_[id] = out;
  return true;
}

void FormulaBatch::set_slot_validity(std::uint32_t node, const ImaginationModel& model) {
  const char v = values_[node] == model.universe() ? 1 : 0;
  for (std::uint32_t s : slots_of_node_[node]) {
    if (slot_valid_[s] == v) continue;
    if (v) {
      --invalid_count_;
      --invalid_by_group_[slot_group_[s]];
    } else {
      ++invalid_count_;
      ++invalid_by_group_[slot_group_[s]];
    }
    slot_valid_[s] = v;
  }
}

void FormulaBatch::full(const ImaginationModel& model) {
  values_.assign(nodes_.size(), Proposition{});
  for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
    compute(id, model);
    set_slot_validity(id, model);
  }
}

void FormulaBatch::incremental(const ImaginationModel& model) {
  // Node ids are a topological order (children are interned first), so
  // sweeping the dirty bitmap upwards visits every node after all of its
  // changed inputs. Parents always have larger ids than the node being
  // processed, so re-reading the current word picks them up.
  dirty_ = leaf_mask_;
  for (std::size_t w = 0; w < dirty_.size(); ++w) {
    while (dirty_[w] != 0) {
      const auto bit = static_cast<std::uint32_t>(std::countr_zero(dirty_[w]));
      dirty_[w] &= dirty_[w] - 1;
      const auto id = static_cast<std::uint32_t>(w * 64 + bit);
      if (!compute(id, model)) continue;
      set_slot_validity(id, model);
      for (std::uint32_t parent : parents_[id]) dirty_[parent / 64] |= std::uint64_t{1} << (parent % 64);
    }
  }
}

void FormulaBatch::evaluate(const ImaginationModel& model) {
  resolve(model);
  if (last_model_ == &model && last_serial_ == model.frame_serial() &&
      evaluated_nodes_ == nodes_.size()) {
    incremental(model);
  } else {
    full(model);
  }
  last_model_ = &model;
  last_serial_ = model.frame_serial();
  evaluated_nodes_ = nodes_.size();
}

}  // namespace stit
