#include "stit/search.hpp"

#include "stit/error.hpp"
#include "stit/semantics.hpp"
#include "stit/validate.hpp"

namespace stit {

ModelBounds default_search_bounds(const Formula& f, std::vector<std::string> agents) {
  ModelBounds b;
  b.max_moments = 3;
  b.max_family = 2;
  b.policy = PropositionPolicy::AllSubsets;
  b.placement = NeighborhoodPlacement::ActiveChoices;
  b.agents = agents.empty() ? agents_of(f) : std::move(agents);
  if (b.agents.empty()) b.agents = {"a"};
  b.vars = variables(f);
  for (const auto& g : subformulas(f)) b.definable_pool.push_back(g);
  return b;
}

SearchOutcome find_countermodel(const Formula& f, const ModelBounds& bounds) {
  SearchOutcome out;
  out.bounds = bounds;
  const Formula target = desugar(f);
  ModelEnumerator models(bounds);
  FormulaBatch batch;
  batch.add(target);
  while (const ImaginationModel* m = models.next()) {
    batch.evaluate(*m);
    ++out.models_examined;
    if (batch.valid(0)) continue;
    const Proposition missing = m->universe() - batch.value(0);
    std::optional<std::size_t> first;
    missing.for_each([&](std::size_t i) {
      if (!first) first = i;
    });
    const PointRef point = m->points()[*first];
    if (!satisfies(*m, point, Formula::neg(target)) || !validate(*m).ok()) {
      throw Error("countermodel failed re-verification at " + m->point_name(*first));
    }
    out.countermodel = Countermodel{*m, point};
    return out;
  }
  return out;
}

}  // namespace stit
