#include "stit/soundness.hpp"

#include "stit/parser.hpp"

namespace stit {

namespace {
constexpr std::size_t kAxiomGroup = 1;
}  // namespace

std::vector<Formula> soundness_pool() {
  static const char* const kPool[] = {
      "p",          "q",          "~p",         "p & q",         "p | ~q",
      "p -> q",     "S p",        "P q",        "[c a]p",        "[c b]~q",
      "[d a]p",     "[i a]p",     "[i b]q",     "[i a]~p",       "[i a](p & q)",
      "S [i a]p",   "[c a][i a]p", "~[i b]p",   "[i a][c b]q",   "[i b][i a]p",
  };
  const std::vector<std::string> agents{"a", "b"};
  std::vector<Formula> out;
  for (const char* text : kPool) out.push_back(parse_formula(text, agents));
  return out;
}

std::vector<AxiomInstance> instantiate_axioms(std::span<const Formula> pool,
                                              std::span<const std::string> agents) {
  std::vector<AxiomInstance> out;
  auto emit = [&](Rule r, const SchemaPattern& s, const SchemaAssignment& sigma) {
    out.push_back({r, instantiate(s, sigma)});
  };
  const Rule unary_plain[] = {Rule::A1T, Rule::A15};
  const Rule unary_agent[] = {Rule::A2T, Rule::A25, Rule::A3, Rule::A5};

  {
    const auto s = axiom_schema(Rule::A1K);
    for (const auto& b1 : pool) {
      for (const auto& b2 : pool) emit(Rule::A1K, s, {{{1, b1}, {2, b2}}, {}});
    }
  }
  for (Rule r : unary_plain) {
    const auto s = axiom_schema(r);
    for (const auto& b1 : pool) emit(r, s, {{{1, b1}}, {}});
  }
  for (const auto& a : agents) {
    const auto s = axiom_schema(Rule::A2K);
    for (const auto& b1 : pool) {
      for (const auto& b2 : pool) emit(Rule::A2K, s, {{{1, b1}, {2, b2}}, {{1, a}}});
    }
  }
  for (Rule r : unary_agent) {
    const auto s = axiom_schema(r);
    for (const auto& a : agents) {
      for (const auto& b1 : pool) emit(r, s, {{{1, b1}}, {{1, a}}});
    }
  }
  {
    const auto s1 = axiom_schema(Rule::A4, 1);
    for (const auto& a : agents) {
      for (const auto& b1 : pool) emit(Rule::A4, s1, {{{1, b1}}, {{1, a}}});
    }
    const auto s2 = axiom_schema(Rule::A4, 2);
    for (const auto& a1 : agents) {
      for (const auto& a2 : agents) {
        if (a1 == a2) continue;
        for (const auto& b1 : pool) {
          for (const auto& b2 : pool) emit(Rule::A4, s2, {{{1, b1}, {2, b2}}, {{1, a1}, {2, a2}}});
        }
      }
    }
  }
  return out;
}

SoundnessChecker::SoundnessChecker(std::vector<Formula> pool, std::vector<std::string> agents,
                                   EvalOptions options)
    : pool_(std::move(pool)), agents_(std::move(agents)), batch_(options) {
  axioms_ = instantiate_axioms(pool_, agents_);
  report_.axiom_instances = axioms_.size();
  for (const auto& inst : axioms_) axiom_slots_.push_back(batch_.add(inst.formula, kAxiomGroup));
  const std::size_t n = pool_.size();
  for (const auto& f : pool_) {
    pool_slots_.push_back(batch_.add(f));
    settled_slots_.push_back(batch_.add(Formula::settled(f)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      imp_slots_.push_back(batch_.add(Formula::imp(pool_[i], pool_[j])));
      iff_slots_.push_back(batch_.add(Formula::iff(pool_[i], pool_[j])));
    }
  }
  for (const auto& a : agents_) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cgr_slots_.push_back(batch_.add(
            Formula::iff(Formula::imagine(a, pool_[i]), Formula::imagine(a, pool_[j]))));
      }
    }
  }
}

void SoundnessChecker::record(std::optional<SoundnessFailure>& first, std::string check,
                              std::size_t slot, const ImaginationModel& model) {
  ++report_.failures_by_check[check];
  if (first) return;
  const Proposition missing = model.universe() - batch_.value(slot);
  std::size_t point = 0;
  bool found = false;
  missing.for_each([&](std::size_t i) {
    if (!found) point = i, found = true;
  });
  Formula f = pool_.front();
  if (check.front() == 'A') {
    for (std::size_t k = 0; k < axiom_slots_.size(); ++k) {
      if (axiom_slots_[k] == slot) f = axioms_[k].formula;
    }
  }
  first = SoundnessFailure{std::move(check), f, model, model.points()[point]};
}

void SoundnessChecker::check(const ImaginationModel& model) {
  batch_.evaluate(model);
  ++report_.models;
  if (batch_.invalid_count(kAxiomGroup) != 0) {
    for (std::size_t k = 0; k < axiom_slots_.size(); ++k) {
      if (batch_.valid(axiom_slots_[k])) continue;
      ++report_.axiom_failures;
      std::string tag(to_string(Justification{axioms_[k].axiom, 0, 0}));
      record(report_.first_axiom_failure, tag, axiom_slots_[k], model);
    }
  }

  const std::size_t n = pool_.size();
  auto rule_failure = [&](const char* rule, std::size_t slot, Formula f) {
    ++report_.rule_failures;
    const bool first = !report_.first_rule_failure;
    record(report_.first_rule_failure, rule, slot, model);
    if (first) report_.first_rule_failure->formula = std::move(f);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!batch_.valid(pool_slots_[i])) continue;
    ++report_.rule_applications;
    if (!batch_.valid(settled_slots_[i])) {
      rule_failure("R2", settled_slots_[i], Formula::settled(pool_[i]));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!batch_.valid(imp_slots_[i * n + j])) continue;
      ++report_.rule_applications;
      if (!batch_.valid(pool_slots_[j])) rule_failure("R1", pool_slots_[j], pool_[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!batch_.valid(iff_slots_[i * n + j])) continue;
      for (std::size_t a = 0; a < agents_.size(); ++a) {
        ++report_.rule_applications;
        const std::size_t slot = cgr_slots_[(a * n + i) * n + j];
        if (!batch_.valid(slot)) {
          rule_failure("R3", slot,
                       Formula::iff(Formula::imagine(agents_[a], pool_[i]),
                                    Formula::imagine(agents_[a], pool_[j])));
        }
      }
    }
  }
}

namespace {

std::optional<Countermodel> refute(FormulaBatch& batch, const ImaginationModel& model) {
  batch.evaluate(model);
  if (batch.valid(0)) return std::nullopt;
  const Proposition missing = model.universe() - batch.value(0);
  std::optional<std::size_t> first;
  missing.for_each([&](std::size_t i) {
    if (!first) first = i;
  });
  return Countermodel{model, model.points()[*first]};
}

}  // namespace

SmokeResult theoremhood_smoke(const Formula& f, ModelEnumerator& models) {
  SmokeResult out;
  FormulaBatch batch;
  batch.add(f);
  while (const ImaginationModel* m = models.next()) {
    ++out.models;
    if ((out.refuted_by = refute(batch, *m))) break;
  }
  return out;
}

SmokeResult theoremhood_smoke(const Formula& f, std::span<const ImaginationModel> models) {
  SmokeResult out;
  FormulaBatch batch;
  batch.add(f);
  for (const auto& m : models) {
    ++out.models;
    if ((out.refuted_by = refute(batch, m))) break;
  }
  return out;
}

}  // namespace stit
