#include "stit/schema.hpp"

#include <charconv>

#include "stit/error.hpp"

namespace stit {

namespace pattern {

Formula meta(int n) { return Formula::var("?B" + std::to_string(n)); }
std::string agent_meta(int n) { return "?a" + std::to_string(n); }
Formula poss(Formula f) { return Formula::neg(Formula::settled(Formula::neg(std::move(f)))); }

}  // namespace pattern

namespace {

std::optional<int> meta_number(const std::string& s, std::string_view prefix) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int n = 0;
  const char* first = s.data() + prefix.size();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

bool match(const Formula& p, const Formula& f, SchemaAssignment& sigma) {
  if (auto m = formula_meta_index(p)) {
    auto [it, inserted] = sigma.formulas.emplace(*m, f);
    return inserted || it->second == f;
  }
  if (p.op() != f.op()) return false;
  switch (p.op()) {
    case Op::Var:
      return p.name() == f.name();
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
      return match(p.lhs(), f.lhs(), sigma) && match(p.rhs(), f.rhs(), sigma);
    default:
      break;
  }
  if (p.has_agent()) {
    if (auto a = agent_meta_index(p.agent())) {
      auto [it, inserted] = sigma.agents.emplace(*a, f.agent());
      if (!inserted && it->second != f.agent()) return false;
    } else if (p.agent() != f.agent()) {
      return false;
    }
  }
  return match(p.operand(), f.operand(), sigma);
}

bool distinct_ok(const SchemaPattern& s, const SchemaAssignment& sigma) {
  for (auto [i, j] : s.distinct) {
    auto a = sigma.agents.find(i);
    auto b = sigma.agents.find(j);
    if (a != sigma.agents.end() && b != sigma.agents.end() && a->second == b->second) {
      return false;
    }
  }
  return true;
}

Formula substitute(const Formula& p, const SchemaAssignment& sigma) {
  if (auto m = formula_meta_index(p)) {
    auto it = sigma.formulas.find(*m);
    if (it == sigma.formulas.end()) throw Error("unbound metavariable " + p.name());
    return it->second;
  }
  if (p.op() == Op::Var) return p;
  if (p.is_binary()) {
    return Formula::binary(p.op(), substitute(p.lhs(), sigma), substitute(p.rhs(), sigma));
  }
  std::string agent = p.agent();
  if (auto a = agent_meta_index(agent)) {
    auto it = sigma.agents.find(*a);
    if (it == sigma.agents.end()) throw Error("unbound agent metavariable " + agent);
    agent = it->second;
  }
  return Formula::unary(p.op(), std::move(agent), substitute(p.operand(), sigma));
}

}  // namespace

std::optional<int> formula_meta_index(const Formula& f) {
  if (f.op() != Op::Var) return std::nullopt;
  return meta_number(f.name(), "?B");
}

std::optional<int> agent_meta_index(const std::string& agent) { return meta_number(agent, "?a"); }

std::optional<SchemaAssignment> match_schema(const SchemaPattern& s, const Formula& f) {
  SchemaAssignment sigma;
  if (!match(s.pattern, f, sigma) || !distinct_ok(s, sigma)) return std::nullopt;
  return sigma;
}

Formula instantiate(const SchemaPattern& s, const SchemaAssignment& sigma) {
  if (!distinct_ok(s, sigma)) throw Error("assignment violates agent distinctness");
  return substitute(s.pattern, sigma);
}

}  // namespace stit
