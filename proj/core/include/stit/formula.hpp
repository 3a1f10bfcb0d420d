#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace stit {

/// Node kinds of the object language. Poss and Dstit are surface sugar and
/// are removed by desugar().
enum class Op : unsigned char {
  Var,
  Neg,
  And,
  Or,
  Imp,
  Iff,
  Settled,
  Poss,
  Cstit,
  Dstit,
  Imagine,
};

/// Immutable formula tree with shared structure. Copies are cheap and all
/// instances are safe to share between threads.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula settled(Formula f);
  static Formula possible(Formula f);
  static Formula cstit(std::string agent, Formula f);
  static Formula dstit(std::string agent, Formula f);
  static Formula imagine(std::string agent, Formula f);

  /// Generic constructors used by rewriting code.
  static Formula unary(Op op, std::string agent, Formula f);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const;
  /// Variable name; empty for non-variables.
  const std::string& name() const;
  /// Agent of [c a], [d a] and [i a]; empty otherwise.
  const std::string& agent() const;
  /// Argument of a unary node.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_unary() const;
  bool is_binary() const;
  bool has_agent() const;

  std::size_t hash() const;
  /// Number of nodes in the tree.
  std::size_t size() const;
  /// Node identity; equal identities imply structural equality.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::string text;
  Formula first;
  Formula second;
  std::size_t hash;
  std::size_t size;
};

bool is_binary_op(Op op);
bool is_agent_op(Op op);

/// Rewrites P A to ~S~A and [d a]A to [c a]A & ~S A, everywhere.
Formula desugar(const Formula& f);
bool is_desugared(const Formula& f);

/// All distinct subtrees in post-order, the formula itself last.
std::vector<Formula> subformulas(const Formula& f);

/// Distinct variable names, sorted.
std::vector<std::string> variables(const Formula& f);
/// Distinct agent names, sorted.
std::vector<std::string> agents_of(const Formula& f);

/// Concrete syntax with minimal parentheses; round-trips through
/// parse_formula().
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace stit

template <>
struct std::hash<stit::Formula> {
  std::size_t operator()(const stit::Formula& f) const noexcept { return f.hash(); }
};
