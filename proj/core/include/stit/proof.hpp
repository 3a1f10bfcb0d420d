#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stit/formula.hpp"
#include "stit/schema.hpp"

namespace stit {

enum class Rule { A0, A1K, A1T, A15, A2K, A2T, A25, A3, A4, A5, MP, NEC, CGR, PREM };

struct Justification {
  Rule rule = Rule::PREM;
  /// Referenced line numbers (1-based). MP uses both, NEC and CGR only i.
  std::size_t i = 0;
  std::size_t j = 0;

  bool is_axiom() const { return rule <= Rule::A5; }
  friend bool operator==(const Justification&, const Justification&) = default;
};

std::string to_string(const Justification& j);
/// Reads "A2T", "MP 1 2", "NEC 3", "PREM" and so on. Whitespace between
/// tokens is free; case matters.
std::optional<Justification> parse_justification(std::string_view text);

/// Every justification that could be written on line `line` (1-based):
/// the ten axiom tags, PREM, and each MP / NEC / CGR over earlier lines.
std::vector<Justification> justification_alphabet(std::size_t line);

struct ProofLine {
  /// As written, sugar included; used in reports.
  Formula surface;
  Justification justification;
};

struct Proof {
  std::vector<std::string> agents;
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;

  Proof& add(Formula f, Justification j) {
    lines.push_back({std::move(f), j});
    return *this;
  }
};

/// The schema behind an axiom tag, over metavariables ?B1, ?B2 and agent
/// metavariable ?a1. For A4 `arity` is the chain length n and the agents
/// ?a1..?an are required to be pairwise distinct; other schemata ignore it.
SchemaPattern axiom_schema(Rule axiom, std::size_t arity = 1);

/// Is f (desugared) an instance of the axiom schema `axiom`? A0 is decided by
/// truth tables over the maximal non-Boolean subformulas; A4 accepts chains
/// of any length n >= 1 with pairwise distinct agents. Returns false for
/// non-axiom rules.
bool check_axiom(Rule axiom, const Formula& f);

/// Propositional tautology over maximal non-Boolean subformulas. Formulas
/// with more than kMaxTautologyAtoms such atoms are rejected.
bool is_tautology(const Formula& f);
inline constexpr std::size_t kMaxTautologyAtoms = 20;

/// Maximal non-Boolean subformulas of f in order of first occurrence.
std::vector<Formula> boolean_atoms(const Formula& f);

/// Per line: does it rest on a premise? A PREM line does, and so does any
/// line citing one that does. Dangling references count as independent.
std::vector<bool> premise_dependence(const Proof& proof);

/// Checks the rule application on line `line` (1-based), assuming earlier
/// lines are fine. Axiom and PREM lines are checked too, so this is the
/// whole per-line test. `why` receives a diagnostic on failure.
bool check_rule(const Proof& proof, std::size_t line, std::string* why = nullptr);

enum class RejectReason {
  None,
  EmptyProof,
  DanglingReference,
  UnknownAgent,
  NotAnAxiom,
  PremiseNotDeclared,
  RuleMismatch,
  RuleOnPremise,
};

std::string_view reason_name(RejectReason r);

struct Verdict {
  bool accepted = false;
  /// First failing line (1-based), 0 for EmptyProof or when accepted.
  std::size_t failing_line = 0;
  RejectReason reason = RejectReason::None;
  std::string message;
  /// Last line of an accepted proof.
  std::optional<Formula> certified;
  /// Accepted and the last line rests on no premise.
  bool premise_free = false;
};

Verdict check_proof(const Proof& proof);

/// Parses the line-oriented proof format:
///
///   # comment
///   agents: a, b
///   premises: p ; q -> r
///   1. [c a][i a]p -> [i a]p ; A2T
///
/// Lines must be numbered 1, 2, 3, ... The formula ends at the last ';'.
/// `agents` overrides the header; with neither, agents are read off the
/// bracket modalities in the text. Throws ProofFormatError.
Proof parse_proof(std::string_view text, const std::vector<std::string>& agents = {});

/// Inverse of parse_proof, with an agents header.
std::string format_proof(const Proof& proof);

}  // namespace stit
