#include "stit/formula.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <set>
#include <unordered_set>

namespace stit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_binary_op(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Imp || op == Op::Iff;
}

bool is_agent_op(Op op) {
  return op == Op::Cstit || op == Op::Dstit || op == Op::Imagine;
}

Formula Formula::var(std::string name) {
  std::size_t h = mix(static_cast<std::size_t>(Op::Var), std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Op::Var, std::move(name), {}, {}, h, 1}));
}

Formula Formula::unary(Op op, std::string agent, Formula f) {
  assert(!is_binary_op(op) && op != Op::Var);
  assert(is_agent_op(op) == !agent.empty());
  std::size_t h = mix(static_cast<std::size_t>(op), std::hash<std::string>{}(agent));
  h = mix(h, f.hash());
  std::size_t n = f.size() + 1;
  return Formula(std::make_shared<const Node>(Node{op, std::move(agent), std::move(f), {}, h, n}));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  assert(is_binary_op(op));
  std::size_t h = mix(mix(static_cast<std::size_t>(op), lhs.hash()), rhs.hash());
  std::size_t n = lhs.size() + rhs.size() + 1;
  return Formula(
      std::make_shared<const Node>(Node{op, {}, std::move(lhs), std::move(rhs), h, n}));
}

Formula Formula::neg(Formula f) { return unary(Op::Neg, {}, std::move(f)); }
Formula Formula::conj(Formula l, Formula r) { return binary(Op::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(Op::Or, std::move(l), std::move(r)); }
Formula Formula::imp(Formula l, Formula r) { return binary(Op::Imp, std::move(l), std::move(r)); }
Formula Formula::iff(Formula l, Formula r) { return binary(Op::Iff, std::move(l), std::move(r)); }
Formula Formula::settled(Formula f) { return unary(Op::Settled, {}, std::move(f)); }
Formula Formula::possible(Formula f) { return unary(Op::Poss, {}, std::move(f)); }
Formula Formula::cstit(std::string a, Formula f) { return unary(Op::Cstit, std::move(a), std::move(f)); }
Formula Formula::dstit(std::string a, Formula f) { return unary(Op::Dstit, std::move(a), std::move(f)); }
Formula Formula::imagine(std::string a, Formula f) {
  return unary(Op::Imagine, std::move(a), std::move(f));
}

Op Formula::op() const { return node_->op; }

const std::string& Formula::name() const {
  static const std::string empty;
  return node_->op == Op::Var ? node_->text : empty;
}

const std::string& Formula::agent() const {
  static const std::string empty;
  return is_agent_op(node_->op) ? node_->text : empty;
}

const Formula& Formula::operand() const {
  assert(is_unary());
  return node_->first;
}

const Formula& Formula::lhs() const {
  assert(is_binary());
  return node_->first;
}

const Formula& Formula::rhs() const {
  assert(is_binary());
  return node_->second;
}

bool Formula::is_unary() const { return node_->op != Op::Var && !is_binary_op(node_->op); }
bool Formula::is_binary() const { return is_binary_op(node_->op); }
bool Formula::has_agent() const { return is_agent_op(node_->op); }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.size != y.size || x.op != y.op || x.text != y.text) return false;
  if (x.op == Op::Var) return true;
  if (!(x.first == y.first)) return false;
  return !is_binary_op(x.op) || x.second == y.second;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.op <=> y.op; c != 0) return c;
  if (auto c = x.text.compare(y.text); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.op == Op::Var) return std::strong_ordering::equal;
  if (auto c = x.first <=> y.first; c != 0) return c;
  if (!is_binary_op(x.op)) return std::strong_ordering::equal;
  return x.second <=> y.second;
}

Formula desugar(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
      return f;
    case Op::Poss:
      return Formula::neg(Formula::settled(Formula::neg(desugar(f.operand()))));
    case Op::Dstit: {
      Formula inner = desugar(f.operand());
      return Formula::conj(Formula::cstit(f.agent(), inner),
                           Formula::neg(Formula::settled(inner)));
    }
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff: {
      Formula l = desugar(f.lhs());
      Formula r = desugar(f.rhs());
      if (l.identity() == f.lhs().identity() && r.identity() == f.rhs().identity()) return f;
      return Formula::binary(f.op(), std::move(l), std::move(r));
    }
    default: {
      Formula a = desugar(f.operand());
      if (a.identity() == f.operand().identity()) return f;
      return Formula::unary(f.op(), f.agent(), std::move(a));
    }
  }
}

bool is_desugared(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
      return true;
    case Op::Poss:
    case Op::Dstit:
      return false;
    default:
      if (f.is_binary()) return is_desugared(f.lhs()) && is_desugared(f.rhs());
      return is_desugared(f.operand());
  }
}

namespace {

void collect_post_order(const Formula& f, std::unordered_set<Formula>& seen,
                        std::vector<Formula>& out) {
  if (seen.contains(f)) return;
  if (f.is_binary()) {
    collect_post_order(f.lhs(), seen, out);
    collect_post_order(f.rhs(), seen, out);
  } else if (f.is_unary()) {
    collect_post_order(f.operand(), seen, out);
  }
  if (seen.insert(f).second) out.push_back(f);
}

void collect_names(const Formula& f, std::set<std::string>& vars, std::set<std::string>& agents) {
  if (f.op() == Op::Var) {
    vars.insert(f.name());
    return;
  }
  if (f.has_agent()) agents.insert(f.agent());
  if (f.is_binary()) {
    collect_names(f.lhs(), vars, agents);
    collect_names(f.rhs(), vars, agents);
  } else {
    collect_names(f.operand(), vars, agents);
  }
}

// Binding strength; larger binds tighter.
int precedence(Op op) {
  switch (op) {
    case Op::Iff:
      return 1;
    case Op::Imp:
      return 2;
    case Op::Or:
      return 3;
    case Op::And:
      return 4;
    default:
      return 5;
  }
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Var:
      out += f.name();
      return;
    case Op::Neg:
      out += '~';
      break;
    case Op::Settled:
      out += "S ";
      break;
    case Op::Poss:
      out += "P ";
      break;
    case Op::Cstit:
      out += "[c " + f.agent() + "]";
      break;
    case Op::Dstit:
      out += "[d " + f.agent() + "]";
      break;
    case Op::Imagine:
      out += "[i " + f.agent() + "]";
      break;
    default: {
      const int p = precedence(f.op());
      const bool right_assoc = f.op() == Op::Imp;
      const int lp = precedence(f.lhs().op());
      const int rp = precedence(f.rhs().op());
      print_child(f.lhs(), right_assoc ? lp <= p : lp < p, out);
      switch (f.op()) {
        case Op::And:
          out += " & ";
          break;
        case Op::Or:
          out += " | ";
          break;
        case Op::Imp:
          out += " -> ";
          break;
        default:
          out += " <-> ";
          break;
      }
      print_child(f.rhs(), right_assoc ? rp < p : rp <= p, out);
      return;
    }
  }
  print_child(f.operand(), f.operand().is_binary(), out);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::unordered_set<Formula> seen;
  std::vector<Formula> out;
  collect_post_order(f, seen, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> vars, agents;
  collect_names(f, vars, agents);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> agents_of(const Formula& f) {
  std::set<std::string> vars, agents;
  collect_names(f, vars, agents);
  return {agents.begin(), agents.end()};
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

}  // namespace stit
