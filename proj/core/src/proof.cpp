#include "stit/proof.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "stit/error.hpp"
#include "stit/parser.hpp"

namespace stit {

namespace {

struct RuleName {
  Rule rule;
  std::string_view name;
};

constexpr RuleName kRuleNames[] = {
    {Rule::A0, "A0"},   {Rule::A1K, "A1K"}, {Rule::A1T, "A1T"}, {Rule::A15, "A15"},
    {Rule::A2K, "A2K"}, {Rule::A2T, "A2T"}, {Rule::A25, "A25"}, {Rule::A3, "A3"},
    {Rule::A4, "A4"},   {Rule::A5, "A5"},   {Rule::MP, "MP"},   {Rule::NEC, "NEC"},
    {Rule::CGR, "CGR"}, {Rule::PREM, "PREM"},
};

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_number(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

using pattern::meta;

Formula cstit_meta(int agent, Formula f) { return Formula::cstit(pattern::agent_meta(agent), std::move(f)); }

bool is_boolean(Op op) {
  return op == Op::Neg || op == Op::And || op == Op::Or || op == Op::Imp || op == Op::Iff;
}

void collect_atoms(const Formula& f, std::vector<Formula>& atoms,
                   std::unordered_map<Formula, std::size_t>& index) {
  if (!is_boolean(f.op())) {
    if (index.emplace(f, atoms.size()).second) atoms.push_back(f);
    return;
  }
  if (f.is_unary()) {
    collect_atoms(f.operand(), atoms, index);
  } else {
    collect_atoms(f.lhs(), atoms, index);
    collect_atoms(f.rhs(), atoms, index);
  }
}

// Truth table as a bit vector over all 2^k assignments; assignment x gives
// atom i the value of bit i of x.
using Table = std::vector<std::uint64_t>;

Table atom_table(std::size_t atom, std::size_t k) {
  const std::size_t rows = std::size_t{1} << k;
  Table t((rows + 63) / 64, 0);
  for (std::size_t x = 0; x < rows; ++x) {
    if (x >> atom & 1U) t[x / 64] |= std::uint64_t{1} << (x % 64);
  }
  return t;
}

Table table_of(const Formula& f, const std::unordered_map<Formula, std::size_t>& index,
               const std::vector<Table>& atoms) {
  if (!is_boolean(f.op())) return atoms[index.at(f)];
  if (f.op() == Op::Neg) {
    Table t = table_of(f.operand(), index, atoms);
    for (auto& w : t) w = ~w;
    return t;
  }
  Table l = table_of(f.lhs(), index, atoms);
  const Table r = table_of(f.rhs(), index, atoms);
  for (std::size_t i = 0; i < l.size(); ++i) {
    switch (f.op()) {
      case Op::And: l[i] &= r[i]; break;
      case Op::Or: l[i] |= r[i]; break;
      case Op::Imp: l[i] = ~l[i] | r[i]; break;
      default: l[i] = ~(l[i] ^ r[i]); break;
    }
  }
  return l;
}

// Number of conjuncts along the left spine of an And chain.
std::size_t left_chain_length(const Formula& f) {
  std::size_t n = 1;
  const Formula* cur = &f;
  while (cur->op() == Op::And) {
    ++n;
    cur = &cur->lhs();
  }
  return n;
}

}  // namespace

std::string to_string(const Justification& j) {
  std::string s(rule_name(j.rule));
  if (j.rule == Rule::MP) return s + " " + std::to_string(j.i) + " " + std::to_string(j.j);
  if (j.rule == Rule::NEC || j.rule == Rule::CGR) return s + " " + std::to_string(j.i);
  return s;
}

std::optional<Justification> parse_justification(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) return std::nullopt;
  for (const auto& [rule, name] : kRuleNames) {
    if (tokens[0] != name) continue;
    Justification j{rule, 0, 0};
    const std::size_t args = rule == Rule::MP ? 2 : (rule == Rule::NEC || rule == Rule::CGR) ? 1 : 0;
    if (tokens.size() != args + 1) return std::nullopt;
    if (args >= 1) {
      auto i = parse_number(tokens[1]);
      if (!i) return std::nullopt;
      j.i = *i;
    }
    if (args == 2) {
      auto k = parse_number(tokens[2]);
      if (!k) return std::nullopt;
      j.j = *k;
    }
    return j;
  }
  return std::nullopt;
}

std::vector<Justification> justification_alphabet(std::size_t line) {
  std::vector<Justification> out;
  for (const auto& [rule, name] : kRuleNames) {
    if (rule <= Rule::A5 || rule == Rule::PREM) out.push_back({rule, 0, 0});
  }
  for (std::size_t i = 1; i < line; ++i) {
    for (std::size_t j = 1; j < line; ++j) out.push_back({Rule::MP, i, j});
    out.push_back({Rule::NEC, i, 0});
    out.push_back({Rule::CGR, i, 0});
  }
  return out;
}

SchemaPattern axiom_schema(Rule axiom, std::size_t arity) {
  const Formula b1 = meta(1);
  const Formula b2 = meta(2);
  const std::string a = pattern::agent_meta(1);
  switch (axiom) {
    case Rule::A1K:
      return {Formula::imp(Formula::settled(Formula::imp(b1, b2)),
                           Formula::imp(Formula::settled(b1), Formula::settled(b2))),
              {}};
    case Rule::A1T:
      return {Formula::imp(Formula::settled(b1), b1), {}};
    case Rule::A15:
      return {Formula::imp(Formula::neg(Formula::settled(b1)),
                           Formula::settled(Formula::neg(Formula::settled(b1)))),
              {}};
    case Rule::A2K:
      return {Formula::imp(Formula::cstit(a, Formula::imp(b1, b2)),
                           Formula::imp(Formula::cstit(a, b1), Formula::cstit(a, b2))),
              {}};
    case Rule::A2T:
      return {Formula::imp(Formula::cstit(a, b1), b1), {}};
    case Rule::A25:
      return {Formula::imp(Formula::neg(Formula::cstit(a, b1)),
                           Formula::cstit(a, Formula::neg(Formula::cstit(a, b1)))),
              {}};
    case Rule::A3:
      return {Formula::imp(Formula::settled(b1), Formula::cstit(a, b1)), {}};
    case Rule::A4: {
      if (arity == 0) throw Error("A4 needs at least one conjunct");
      const int n = static_cast<int>(arity);
      Formula lhs = pattern::poss(cstit_meta(1, meta(1)));
      Formula inner = cstit_meta(1, meta(1));
      for (int k = 2; k <= n; ++k) {
        lhs = Formula::conj(lhs, pattern::poss(cstit_meta(k, meta(k))));
        inner = Formula::conj(inner, cstit_meta(k, meta(k)));
      }
      SchemaPattern s{Formula::imp(lhs, pattern::poss(inner)), {}};
      for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) s.distinct.emplace_back(x, y);
      }
      return s;
    }
    case Rule::A5: {
      const Formula ia = Formula::imagine(a, b1);
      return {Formula::imp(ia, Formula::conj(Formula::cstit(a, ia),
                                             Formula::neg(Formula::settled(ia)))),
              {}};
    }
    default:
      throw Error(std::string(rule_name(axiom)) + " has no schema pattern");
  }
}

std::vector<Formula> boolean_atoms(const Formula& f) {
  std::vector<Formula> atoms;
  std::unordered_map<Formula, std::size_t> index;
  collect_atoms(f, atoms, index);
  return atoms;
}

bool is_tautology(const Formula& f) {
  std::vector<Formula> atoms;
  std::unordered_map<Formula, std::size_t> index;
  collect_atoms(f, atoms, index);
  const std::size_t k = atoms.size();
  if (k > kMaxTautologyAtoms) return false;
  std::vector<Table> tables;
  for (std::size_t i = 0; i < k; ++i) tables.push_back(atom_table(i, k));
  const Table t = table_of(f, index, tables);
  const std::size_t rows = std::size_t{1} << k;
  for (std::size_t w = 0; w < t.size(); ++w) {
    const std::size_t bits = std::min<std::size_t>(64, rows - w * 64);
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    if ((t[w] & mask) != mask) return false;
  }
  return true;
}

bool check_axiom(Rule axiom, const Formula& f) {
  if (axiom == Rule::A0) return is_tautology(f);
  if (axiom > Rule::A5) return false;
  std::size_t arity = 1;
  if (axiom == Rule::A4) {
    if (f.op() != Op::Imp) return false;
    arity = left_chain_length(f.lhs());
  }
  return match_schema(axiom_schema(axiom, arity), f).has_value();
}

std::string_view reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "None";
    case RejectReason::EmptyProof: return "EmptyProof";
    case RejectReason::DanglingReference: return "DanglingReference";
    case RejectReason::UnknownAgent: return "UnknownAgent";
    case RejectReason::NotAnAxiom: return "NotAnAxiom";
    case RejectReason::PremiseNotDeclared: return "PremiseNotDeclared";
    case RejectReason::RuleMismatch: return "RuleMismatch";
    case RejectReason::RuleOnPremise: return "RuleOnPremise";
  }
  return "?";
}

std::vector<bool> premise_dependence(const Proof& proof) {
  const std::size_t n = proof.lines.size();
  std::vector<bool> dep(n, false);
  auto cites = [&](std::size_t k, std::size_t ref) { return ref >= 1 && ref < k + 1 && dep[ref - 1]; };
  for (std::size_t k = 0; k < n; ++k) {
    const auto& j = proof.lines[k].justification;
    switch (j.rule) {
      case Rule::PREM: dep[k] = true; break;
      case Rule::MP: dep[k] = cites(k, j.i) || cites(k, j.j); break;
      case Rule::NEC:
      case Rule::CGR: dep[k] = cites(k, j.i); break;
      default: break;
    }
  }
  return dep;
}

namespace {

struct LineCheck {
  RejectReason reason = RejectReason::None;
  std::string message;
};

LineCheck check_line(const Proof& proof, std::size_t line, const std::vector<bool>& dep) {
  const auto& entry = proof.lines[line - 1];
  const auto& j = entry.justification;
  for (const auto& a : agents_of(entry.surface)) {
    if (std::find(proof.agents.begin(), proof.agents.end(), a) == proof.agents.end()) {
      return {RejectReason::UnknownAgent, "agent '" + a + "' is not declared"};
    }
  }
  const Formula f = desugar(entry.surface);
  auto ref_ok = [&](std::size_t r) { return r >= 1 && r < line; };
  auto formula_at = [&](std::size_t r) { return desugar(proof.lines[r - 1].surface); };

  if (j.is_axiom()) {
    if (check_axiom(j.rule, f)) return {};
    return {RejectReason::NotAnAxiom,
            "not an instance of " + std::string(rule_name(j.rule))};
  }
  switch (j.rule) {
    case Rule::PREM:
      for (const auto& p : proof.premises) {
        if (desugar(p) == f) return {};
      }
      return {RejectReason::PremiseNotDeclared, "formula is not among the premises"};
    case Rule::MP:
      if (!ref_ok(j.i) || !ref_ok(j.j)) {
        return {RejectReason::DanglingReference, "MP cites a line that is not earlier"};
      }
      if (formula_at(j.j) == Formula::imp(formula_at(j.i), f)) return {};
      return {RejectReason::RuleMismatch, "line " + std::to_string(j.j) + " is not line " +
                                              std::to_string(j.i) + " -> this line"};
    case Rule::NEC:
      if (!ref_ok(j.i)) return {RejectReason::DanglingReference, "NEC cites a line that is not earlier"};
      if (f != Formula::settled(formula_at(j.i))) {
        return {RejectReason::RuleMismatch, "not S applied to line " + std::to_string(j.i)};
      }
      if (dep[j.i - 1]) {
        return {RejectReason::RuleOnPremise,
                "NEC applied to line " + std::to_string(j.i) + ", which rests on a premise"};
      }
      return {};
    case Rule::CGR: {
      if (!ref_ok(j.i)) return {RejectReason::DanglingReference, "CGR cites a line that is not earlier"};
      const Formula src = formula_at(j.i);
      const bool shape = src.op() == Op::Iff && f.op() == Op::Iff &&
                         f.lhs().op() == Op::Imagine && f.rhs().op() == Op::Imagine &&
                         f.lhs().agent() == f.rhs().agent() && f.lhs().operand() == src.lhs() &&
                         f.rhs().operand() == src.rhs();
      if (!shape) {
        return {RejectReason::RuleMismatch,
                "not [i a]B1 <-> [i a]B2 for line " + std::to_string(j.i) + " = B1 <-> B2"};
      }
      if (dep[j.i - 1]) {
        return {RejectReason::RuleOnPremise,
                "CGR applied to line " + std::to_string(j.i) + ", which rests on a premise"};
      }
      return {};
    }
    default:
      return {RejectReason::RuleMismatch, "unknown justification"};
  }
}

}  // namespace

bool check_rule(const Proof& proof, std::size_t line, std::string* why) {
  if (line == 0 || line > proof.lines.size()) throw Error("no line " + std::to_string(line));
  const LineCheck r = check_line(proof, line, premise_dependence(proof));
  if (why) *why = r.message;
  return r.reason == RejectReason::None;
}

Verdict check_proof(const Proof& proof) {
  Verdict v;
  if (proof.lines.empty()) {
    v.reason = RejectReason::EmptyProof;
    v.message = "the proof has no lines";
    return v;
  }
  for (const auto& p : proof.premises) {
    for (const auto& a : agents_of(p)) {
      if (std::find(proof.agents.begin(), proof.agents.end(), a) == proof.agents.end()) {
        v.reason = RejectReason::UnknownAgent;
        v.message = "premise mentions undeclared agent '" + a + "'";
        return v;
      }
    }
  }
  const auto dep = premise_dependence(proof);
  for (std::size_t k = 1; k <= proof.lines.size(); ++k) {
    LineCheck r = check_line(proof, k, dep);
    if (r.reason != RejectReason::None) {
      v.failing_line = k;
      v.reason = r.reason;
      v.message = std::move(r.message);
      return v;
    }
  }
  v.accepted = true;
  v.certified = proof.lines.back().surface;
  v.premise_free = !dep.back();
  return v;
}

Proof parse_proof(std::string_view text, const std::vector<std::string>& agents) {
  struct RawLine {
    std::size_t source_line;
    std::string_view body;
  };
  std::vector<RawLine> raw;
  std::optional<std::string_view> premises_text;
  std::size_t premises_line = 0;
  std::optional<std::vector<std::string>> header_agents;

  std::size_t source_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++source_line;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("premises:")) {
      if (premises_text) throw ProofFormatError(source_line, "duplicate premises header");
      premises_text = line.substr(9);
      premises_line = source_line;
      continue;
    }
    if (line.starts_with("agents:")) {
      if (header_agents) throw ProofFormatError(source_line, "duplicate agents header");
      header_agents.emplace();
      std::string_view rest = line.substr(7);
      while (!rest.empty()) {
        const std::size_t comma = std::min(rest.find(','), rest.size());
        const std::string_view name = trim(rest.substr(0, comma));
        if (!is_identifier(name) || is_reserved_word(name)) {
          throw ProofFormatError(source_line, "bad agent name '" + std::string(name) + "'");
        }
        header_agents->emplace_back(name);
        rest = comma < rest.size() ? rest.substr(comma + 1) : std::string_view{};
      }
      continue;
    }
    raw.push_back({source_line, line});
  }

  Proof proof;
  if (!agents.empty()) {
    proof.agents = agents;
  } else if (header_agents) {
    proof.agents = *header_agents;
  } else {
    auto scan = [&](std::string_view s) {
      for (const auto& a : scan_agents(s)) {
        if (std::find(proof.agents.begin(), proof.agents.end(), a) == proof.agents.end()) {
          proof.agents.push_back(a);
        }
      }
    };
    if (premises_text) scan(*premises_text);
    for (const auto& r : raw) {
      const std::size_t dot = r.body.find('.');
      scan(dot == std::string_view::npos ? r.body : r.body.substr(dot + 1));
    }
  }

  auto read_formula = [&](std::string_view s, std::size_t at) {
    try {
      return parse_formula(s, proof.agents);
    } catch (const ParseError& e) {
      throw ProofFormatError(at, std::string(e.what()));
    }
  };

  if (premises_text) {
    std::string_view rest = *premises_text;
    while (true) {
      const std::size_t semi = rest.find(';');
      const std::string_view item = trim(rest.substr(0, semi));
      if (!item.empty()) proof.premises.push_back(read_formula(item, premises_line));
      if (semi == std::string_view::npos) break;
      rest = rest.substr(semi + 1);
    }
  }

  for (const auto& [at, body] : raw) {
    const std::size_t dot = body.find('.');
    if (dot == std::string_view::npos) throw ProofFormatError(at, "expected 'N. formula ; JUSTIFICATION'");
    auto number = parse_number(trim(body.substr(0, dot)));
    if (!number) throw ProofFormatError(at, "expected a line number before '.'");
    if (*number != proof.lines.size() + 1) {
      throw ProofFormatError(at, "expected line number " + std::to_string(proof.lines.size() + 1) +
                                     ", found " + std::to_string(*number));
    }
    const std::string_view rest = body.substr(dot + 1);
    const std::size_t semi = rest.rfind(';');
    if (semi == std::string_view::npos) throw ProofFormatError(at, "missing ';' before the justification");
    auto just = parse_justification(rest.substr(semi + 1));
    if (!just) {
      throw ProofFormatError(at, "unknown justification '" + std::string(trim(rest.substr(semi + 1))) + "'");
    }
    proof.add(read_formula(rest.substr(0, semi), at), *just);
  }
  return proof;
}

std::string format_proof(const Proof& proof) {
  std::ostringstream out;
  out << "agents: ";
  for (std::size_t i = 0; i < proof.agents.size(); ++i) out << (i ? ", " : "") << proof.agents[i];
  out << '\n';
  if (!proof.premises.empty()) {
    out << "premises: ";
    for (std::size_t i = 0; i < proof.premises.size(); ++i) {
      out << (i ? " ; " : "") << proof.premises[i];
    }
    out << '\n';
  }
  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    out << k + 1 << ". " << proof.lines[k].surface << " ; " << to_string(proof.lines[k].justification)
        << '\n';
  }
  return out.str();
}

}  // namespace stit
