// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "stit/generate.hpp"
#include "stit/model_io.hpp"
#include "stit/parser.hpp"
#include "stit/proof.hpp"
#include "stit/search.hpp"
#include "stit/semantics.hpp"
#include "stit/soundness.hpp"
#include "stit/validate.hpp"

using namespace stit;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<std::string> kAB{"a", "b"};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  (" << o.detail
            << ")" << std::endl;
  failures += o.pass ? 0 : 1;
}

// Criteria 1 and 2 share a single pass over the stream.
std::pair<Outcome, Outcome> soundness_stream() {
  ModelBounds b;
  b.max_moments = 3;
  b.agents = kAB;
  b.vars = {"p", "q"};
  b.max_family = 2;
  b.policy = PropositionPolicy::AllSubsets;
  b.all_subsets_max_points = 4;
  b.definable_pool = soundness_pool();
  b.placement = NeighborhoodPlacement::ActiveChoices;

  const auto t0 = Clock::now();
  ModelEnumerator models(b);
  SoundnessChecker checker(soundness_pool(), kAB);
  while (const auto* m = models.next()) checker.check(*m);
  const double dt = seconds_since(t0);
  const auto& r = checker.report();

  std::ostringstream d1, d2;
  d1 << std::fixed << std::setprecision(1) << r.models << " models, " << checker.axiom_instance_count() << " instances each, "
     << r.axiom_failures << " failures, " << dt << " s";
  if (r.first_axiom_failure) d1 << ", first: " << r.first_axiom_failure->check << " " << r.first_axiom_failure->formula;
  d2 << r.rule_applications << " rule applications with valid premises, " << r.rule_failures << " failures";
  if (r.first_rule_failure) d2 << ", first: " << r.first_rule_failure->check << " " << r.first_rule_failure->formula;
  return {{r.axiom_failures == 0 && dt < 300.0 && r.models > 0, d1.str()},
          {r.rule_failures == 0 && r.rule_applications > 0, d2.str()}};
}

Outcome sigma_characterization() {
  const auto m = build_sigma_model({"p", "q"}, kAB);
  if (m.points().size() != 1) return {false, "Sigma model has more than one point"};
  const PointRef pt = m.points()[0];
  oracle::NaiveEvaluator naive(m);
  std::size_t checks = 0, mismatches = 0;
  auto expect = [&](const Formula& f, bool want) {
    ++checks;
    const bool got = satisfies(m, pt, f);
    const bool ref = naive.holds(f, pt.moment, pt.history);
    if (got != want || ref != want) {
      ++mismatches;
      std::cerr << "sigma mismatch: " << f << " expected " << want << '\n';
    }
  };
  expect(Formula::neg(Formula::var("p")), true);
  for (const auto& a : soundness_pool()) {
    expect(Formula::iff(Formula::settled(a), a), true);
    for (const auto& ag : kAB) {
      expect(Formula::iff(Formula::cstit(ag, a), a), true);
      expect(Formula::imagine(ag, a), false);
    }
  }
  return {mismatches == 0, std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches"};
}

Outcome converse_a5_mutations() {
  std::ifstream in(STIT_DATA_DIR "/proofs/converse_a5.proof");
  std::ostringstream text;
  text << in.rdbuf();
  const Proof proof = parse_proof(text.str());
  const Verdict v = check_proof(proof);
  const Formula expected = parse_formula("([c a][i a]p & ~S [i a]p) -> [i a]p", kAB);
  if (!v.accepted) return {false, "bundled proof rejected: " + v.message};
  if (*v.certified != expected || !v.premise_free) return {false, "bundled proof certifies something else"};

  std::size_t mutants = 0, killed = 0;
  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    for (const auto& j : justification_alphabet(k + 1)) {
      if (j == proof.lines[k].justification) continue;
      Proof m = proof;
      m.lines[k].justification = j;
      ++mutants;
      const Verdict mv = check_proof(m);
      if (!mv.accepted || *mv.certified != expected) ++killed;
    }
  }
  return {killed == mutants && mutants > 0,
          "accepted; " + std::to_string(killed) + "/" + std::to_string(mutants) + " mutants killed"};
}

Outcome countermodel_search() {
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  bool ok = true;
  auto run = [&](const char* text, bool want_found) {
    const Formula f = parse_formula(text, std::vector<std::string>{"a"});
    const auto t0 = Clock::now();
    const auto out = find_countermodel(f, default_search_bounds(f));
    const double dt = seconds_since(t0);
    bool good = out.found() == want_found && dt < 60.0;
    if (out.found()) {
      const auto& cm = *out.countermodel;
      good = good && validate(cm.model).ok() && !satisfies(cm.model, cm.point, f) &&
             !oracle::NaiveEvaluator(cm.model).holds(f, cm.point.moment, cm.point.history);
    }
    ok = ok && good;
    d << text << ": " << (out.found() ? "found" : "NotFound") << " after " << out.models_examined << " models, "
      << dt << " s; ";
  };
  run("[i a]p -> S [i a]p", true);
  run("S p -> p", false);
  run("[c a]p -> p", false);
  run("S p -> [c a]p", false);
  std::string s = d.str();
  s.resize(s.size() - 2);
  return {ok, s};
}

Outcome oracle_equivalence() {
  ModelBounds b;
  b.max_moments = 5;
  b.agents = kAB;
  b.vars = {"p", "q"};
  b.max_family = 3;
  b.max_histories = 6;
  b.definable_pool = soundness_pool();
  oracle::FormulaGen gen(2024, {"p", "q"}, kAB);
  std::size_t disagree = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto m = random_model(i, b);
    const PointRef pt = m.points()[gen.rng()() % m.points().size()];
    const Formula f = gen(1 + static_cast<int>(i % 4));
    const bool sat = satisfies(m, pt, f);
    const bool member = extension(m, f).contains(*m.point_index(pt));
    const bool naive = oracle::NaiveEvaluator(m).holds(f, pt.moment, pt.history);
    if (sat != member || sat != naive) ++disagree;
  }

  oracle::FormulaGen atoms_gen(77, {"p", "q"}, kAB, false);
  std::mt19937_64 rng(78);
  std::size_t a0_disagree = 0, tautologies = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<Formula> atoms;
    const std::size_t k = 1 + rng() % 4;
    while (atoms.size() < k) {
      const Formula body = atoms_gen(1);
      switch (rng() % 4) {
        case 0: atoms.push_back(Formula::settled(body)); break;
        case 1: atoms.push_back(Formula::cstit(kAB[rng() % 2], body)); break;
        case 2: atoms.push_back(Formula::imagine(kAB[rng() % 2], body)); break;
        default: atoms.push_back(Formula::var(rng() % 2 ? "p" : "q"));
      }
    }
    std::function<Formula(int)> skel = [&](int d) -> Formula {
      switch (d <= 0 ? 0 : rng() % 6) {
        case 0: return atoms[rng() % atoms.size()];
        case 1: return Formula::neg(skel(d - 1));
        case 2: return Formula::conj(skel(d - 1), skel(d - 1));
        case 3: return Formula::disj(skel(d - 1), skel(d - 1));
        case 4: return Formula::imp(skel(d - 1), skel(d - 1));
        default: return Formula::iff(skel(d - 1), skel(d - 1));
      }
    };
    Formula f = skel(4);
    if (i % 4 == 0) f = Formula::imp(f, f);
    const bool ref = oracle::naive_tautology(f);
    tautologies += ref;
    if (check_axiom(Rule::A0, f) != ref) ++a0_disagree;
  }
  std::ostringstream d;
  d << "1000 triples, " << disagree << " disagreements; 500 skeletons (" << tautologies << " tautologies), "
    << a0_disagree << " A0 disagreements";
  return {disagree == 0 && a0_disagree == 0, d.str()};
}

// Recomputes each witness from the raw covers and choice partitions.
bool witness_holds(const ModelDocument& doc, const Violation& v) {
  const auto& covers = doc.order.covers();
  auto idx = [&](std::size_t k) { return *doc.order.index_of(v.moments.at(k)); };
  auto r = [&](std::size_t x, std::size_t y) { return oracle::reaches(covers, x, y); };
  switch (v.condition) {
    case FrameCondition::Antisymmetry: {
      const std::size_t x = idx(0), y = idx(1);
      if (x == y) return std::find(covers.begin(), covers.end(), TreeOrder::Cover{x, x}) != covers.end();
      return r(x, y) && r(y, x);
    }
    case FrameCondition::DownwardDirectedness: {
      for (std::size_t z = 0; z < doc.order.size(); ++z) {
        if (r(z, idx(0)) && r(z, idx(1))) return false;
      }
      return true;
    }
    case FrameCondition::BackwardLinearity: {
      const std::size_t x = idx(0), y = idx(1), m = idx(2);
      return r(x, m) && r(y, m) && !r(x, y) && !r(y, x);
    }
    case FrameCondition::NoChoiceBetweenUndividedHistories: {
      const auto& model = *doc.model;
      const std::size_t m = idx(0), later = idx(1);
      const std::size_t h = v.histories.at(0), g = v.histories.at(1);
      auto on = [&](std::size_t hist, std::size_t moment) {
        const auto& ms = model.histories()[hist].moments;
        return std::find(ms.begin(), ms.end(), moment) != ms.end();
      };
      auto cell_of = [&](std::size_t hist) {
        for (const auto& c : model.choice(m, *model.agent_index(v.agent))) {
          if (std::find(c.begin(), c.end(), hist) != c.end()) return c;
        }
        return std::vector<std::size_t>{};
      };
      return m != later && r(m, later) && on(h, later) && on(g, later) && cell_of(h) != cell_of(g);
    }
    case FrameCondition::IndependenceOfAgents: {
      const auto& model = *doc.model;
      const std::size_t m = idx(0);
      std::set<std::size_t> common;
      for (std::size_t h = 0; h < model.histories().size(); ++h) common.insert(h);
      for (const auto& [agent, cell] : v.selector) {
        const auto& part = model.choice(m, *model.agent_index(agent));
        if (std::find(part.begin(), part.end(), cell) == part.end()) return false;
        std::set<std::size_t> next;
        for (std::size_t h : cell) {
          if (common.contains(h)) next.insert(h);
        }
        common = std::move(next);
      }
      return v.selector.size() >= 2 && common.empty();
    }
    default:
      return false;
  }
}

Outcome validator_witnesses() {
  const std::vector<std::pair<std::string, FrameCondition>> fixtures{
      {"violates_antisymmetry.json", FrameCondition::Antisymmetry},
      {"violates_downward_directedness.json", FrameCondition::DownwardDirectedness},
      {"violates_backward_linearity.json", FrameCondition::BackwardLinearity},
      {"violates_undivided_histories.json", FrameCondition::NoChoiceBetweenUndividedHistories},
      {"violates_independence.json", FrameCondition::IndependenceOfAgents},
  };
  std::size_t good = 0;
  std::ostringstream d;
  for (const auto& [file, cond] : fixtures) {
    const auto doc = load_model(STIT_DATA_DIR "/models/" + file);
    const auto rep = doc.model ? validate(*doc.model) : validate_order(doc.order);
    std::size_t flagged = 0, verified = 0;
    for (const auto& v : rep.violations) {
      if (v.condition != cond) continue;
      ++flagged;
      verified += witness_holds(doc, v);
      std::cerr << "  " << describe(v) << '\n';
    }
    if (flagged > 0 && verified == flagged) ++good;
    else d << file << " not verified; ";
  }
  d << good << "/5 fixtures flagged with verified witnesses";
  return {good == fixtures.size(), d.str()};
}

}  // namespace

int main() {
  try {
    const auto [axioms, rules] = soundness_stream();
    report(1, "axiom soundness over the exhaustive stream", axioms);
    report(2, "rule preservation over the exhaustive stream", rules);
    report(3, "Sigma-model characterization", sigma_characterization());
    report(4, "converse-of-A5 derivation and mutation sweep", converse_a5_mutations());
    report(5, "countermodel search", countermodel_search());
    report(6, "oracle equivalence", oracle_equivalence());
    report(7, "validator witnesses", validator_witnesses());
  } catch (const std::exception& e) {
    std::cout << "FAIL  aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
