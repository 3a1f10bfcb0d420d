#include "stit/derivations.hpp"

namespace stit::derivations {

namespace {

Proof declare(const std::string& agent, const Formula& b) {
  Proof p;
  p.agents = {agent};
  for (const auto& other : agents_of(b)) {
    if (other != agent) p.agents.push_back(other);
  }
  return p;
}

Justification just(Rule r, std::size_t i = 0, std::size_t j = 0) { return {r, i, j}; }

}  // namespace

Proof converse_a5(const std::string& agent, const Formula& b) {
  const Formula ia = Formula::imagine(agent, b);
  const Formula cia = Formula::cstit(agent, ia);
  const Formula t = Formula::imp(cia, ia);
  const Formula goal = Formula::imp(Formula::conj(cia, Formula::neg(Formula::settled(ia))), ia);
  Proof p = declare(agent, b);
  p.add(t, just(Rule::A2T));
  p.add(Formula::imp(t, goal), just(Rule::A0));
  p.add(goal, just(Rule::MP, 1, 2));
  return p;
}

Proof cstit_necessitation(const std::string& agent, const Formula& b) {
  const Formula taut = Formula::imp(b, b);
  const Formula s = Formula::settled(taut);
  const Formula c = Formula::cstit(agent, taut);
  Proof p = declare(agent, b);
  p.add(taut, just(Rule::A0));
  p.add(s, just(Rule::NEC, 1));
  p.add(Formula::imp(s, c), just(Rule::A3));
  p.add(c, just(Rule::MP, 2, 3));
  return p;
}

Proof a5_biconditional(const std::string& agent, const Formula& b) {
  const Formula ia = Formula::imagine(agent, b);
  const Formula rhs =
      Formula::conj(Formula::cstit(agent, ia), Formula::neg(Formula::settled(ia)));
  const Formula a5 = Formula::imp(ia, rhs);
  const Formula t = Formula::imp(Formula::cstit(agent, ia), ia);
  const Formula goal = Formula::iff(ia, rhs);
  Proof p = declare(agent, b);
  p.add(a5, just(Rule::A5));
  p.add(t, just(Rule::A2T));
  p.add(Formula::imp(a5, Formula::imp(t, goal)), just(Rule::A0));
  p.add(Formula::imp(t, goal), just(Rule::MP, 1, 3));
  p.add(goal, just(Rule::MP, 2, 4));
  return p;
}

Proof imagination_congruence(const std::string& agent, const Formula& b) {
  Proof p = declare(agent, b);
  const Formula nn = Formula::neg(Formula::neg(b));
  p.add(Formula::iff(b, nn), just(Rule::A0));
  p.add(Formula::iff(Formula::imagine(agent, b), Formula::imagine(agent, nn)), just(Rule::CGR, 1));
  return p;
}

}  // namespace stit::derivations
