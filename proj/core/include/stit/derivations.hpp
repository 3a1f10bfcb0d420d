#pragma once

#include <string>

#include "stit/formula.hpp"
#include "stit/proof.hpp"

namespace stit::derivations {

// Machine-checkable derivations. Each builder takes the agent and the
// formula B the derivation is about. The proof declares `agent` and every
// agent B mentions.

/// ([c a][i a]B & ~S [i a]B) -> [i a]B, the converse of A5, in three lines:
/// an A2T instance, a tautology, and modus ponens.
Proof converse_a5(const std::string& agent = "a", const Formula& b = Formula::var("p"));

/// [c a](B -> B) from A0, NEC, A3 and MP.
Proof cstit_necessitation(const std::string& agent = "a", const Formula& b = Formula::var("p"));

/// [i a]B <-> ([c a][i a]B & ~S [i a]B), combining A5 with its converse.
Proof a5_biconditional(const std::string& agent = "a", const Formula& b = Formula::var("p"));

/// [i a]B <-> [i a]~~B by congruence from the tautology B <-> ~~B.
Proof imagination_congruence(const std::string& agent = "a", const Formula& b = Formula::var("p"));

}  // namespace stit::derivations
