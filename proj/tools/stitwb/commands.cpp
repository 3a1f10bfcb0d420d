#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "stit/error.hpp"
#include "stit/generate.hpp"
#include "stit/model_io.hpp"
#include "stit/parser.hpp"
#include "stit/proof.hpp"
#include "stit/search.hpp"
#include "stit/semantics.hpp"
#include "stit/soundness.hpp"
#include "stit/validate.hpp"

namespace stitwb {

using nlohmann::json;
using namespace stit;

namespace {

std::string point_list(const ImaginationModel& model, const Proposition& p) {
  std::string s = "{";
  bool first = true;
  p.for_each([&](std::size_t i) {
    if (!first) s += ", ";
    first = false;
    s += model.point_name(i);
  });
  return s + "}";
}

json point_array(const ImaginationModel& model, const Proposition& p) {
  json a = json::array();
  p.for_each([&](std::size_t i) { a.push_back(model.point_name(i)); });
  return a;
}

json violation_json(const Violation& v) {
  json sel = json::object();
  for (const auto& [agent, cell] : v.selector) sel[agent] = cell;
  return {{"condition", std::string(condition_name(v.condition))},
          {"moments", v.moments},
          {"agent", v.agent},
          {"histories", v.histories},
          {"selector", sel},
          {"message", describe(v)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string describe_bounds(const ModelBounds& b) {
  std::ostringstream s;
  s << "max moments " << b.max_moments << ", agents {" << join(b.agents) << "}, vars {"
    << join(b.vars) << "}, family <= " << b.max_family << ", propositions "
    << (b.policy == PropositionPolicy::AllSubsets
            ? "all subsets when |MH| <= " + std::to_string(b.all_subsets_max_points) +
                  ", definable otherwise"
            : std::string("definable"))
    << ", neighborhoods "
    << (b.placement == NeighborhoodPlacement::ActiveChoices ? "at non-vacuous choices"
                                                            : "everywhere")
    << ", histories <= " << b.max_histories;
  return s.str();
}

json bounds_json(const ModelBounds& b) {
  return {{"max_moments", b.max_moments},
          {"agents", b.agents},
          {"vars", b.vars},
          {"max_family", b.max_family},
          {"props", b.policy == PropositionPolicy::AllSubsets ? "all" : "definable"},
          {"all_subsets_max_points", b.all_subsets_max_points},
          {"placement",
           b.placement == NeighborhoodPlacement::ActiveChoices ? "active-choices" : "everywhere"},
          {"max_histories", b.max_histories}};
}

// Loads a model file and reports the history table on `err`. Returns
// nullopt after printing a diagnostic when the file cannot be used.
std::optional<ImaginationModel> load_checked(const std::string& file, bool force,
                                             std::ostream& err) {
  ModelDocument doc = load_model(file);
  if (!doc.model) {
    for (const auto& v : validate_order(doc.order).violations) err << "invalid model: " << describe(v) << '\n';
    return std::nullopt;
  }
  err << history_table(*doc.model);
  const auto report = validate(*doc.model);
  if (!report.ok()) {
    for (const auto& v : report.violations) {
      err << (force ? "warning: " : "invalid model: ") << describe(v) << '\n';
    }
    if (!force) {
      err << "refusing to evaluate on an invalid model (use --force to override)\n";
      return std::nullopt;
    }
  }
  return std::move(doc.model);
}

}  // namespace

int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    auto model = load_checked(args.model_file, args.force, err);
    if (!model) return kFailure;
    const Formula f = parse_formula(args.formula, model->agents());
    json doc{{"formula", to_string(f)}};
    bool value = false;
    if (args.point) {
      const PointRef point = parse_point(*model, *args.point);
      const std::string name = model->point_name(*model->point_index(point));
      EvalTrace trace;
      value = satisfies(*model, point, f, args.trace ? &trace : nullptr);
      doc["point"] = name;
      doc["value"] = value;
      if (args.format == Format::Text) {
        out << (value ? "true" : "false") << '\n';
      }
      if (args.trace) {
        json steps = json::array();
        for (const auto& s : trace.steps) {
          if (args.format == Format::Text) {
            out << std::string(2 * s.depth, ' ') << s.formula << " @ " << s.point << " = "
                << (s.value ? "true" : "false") << "  [" << s.clause << "]\n";
          }
          steps.push_back({{"depth", s.depth},
                           {"formula", s.formula},
                           {"point", s.point},
                           {"clause", s.clause},
                           {"value", s.value}});
        }
        doc["trace"] = steps;
      }
    }
    if (args.extension || !args.point) {
      const Proposition ext = extension(*model, f);
      if (args.extension) {
        doc["extension"] = point_array(*model, ext);
        if (args.format == Format::Text) out << "extension: " << point_list(*model, ext) << '\n';
      }
      if (!args.point) {
        value = ext == model->universe();
        doc["valid"] = value;
        const Proposition fails = model->universe() - ext;
        doc["fails_at"] = point_array(*model, fails);
        if (args.format == Format::Text) {
          if (value) {
            out << "valid: true at every point\n";
          } else {
            out << "valid: false, fails at " << point_list(*model, fails) << '\n';
          }
        }
      }
    }
    if (args.format == Format::Json) out << doc.dump(2) << '\n';
    return value ? kPositive : kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    ModelDocument doc = load_model(args.model_file);
    ValidationReport report;
    json histories = json::array();
    if (doc.model) {
      report = validate(*doc.model);
      if (args.format == Format::Text) out << history_table(*doc.model);
      for (std::size_t h = 0; h < doc.model->histories().size(); ++h) {
        json ms = json::array();
        for (std::size_t m : doc.model->histories()[h].moments) ms.push_back(doc.model->moment_name(m));
        histories.push_back(ms);
      }
    } else {
      report = validate_order(doc.order);
    }
    if (args.format == Format::Json) {
      json vs = json::array();
      for (const auto& v : report.violations) vs.push_back(violation_json(v));
      out << json{{"ok", report.ok()}, {"histories", histories}, {"violations", vs}}.dump(2) << '\n';
    } else if (report.ok()) {
      out << "OK\n";
    } else {
      for (const auto& v : report.violations) out << describe(v) << '\n';
    }
    return report.ok() ? kPositive : kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run_prove(const ProveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const Proof proof = parse_proof(read_file(args.proof_file), args.agents);
    const Verdict v = check_proof(proof);
    if (args.format == Format::Json) {
      json doc{{"accepted", v.accepted}, {"lines", proof.lines.size()}};
      if (v.accepted) {
        doc["certified"] = to_string(*v.certified);
        doc["premise_free"] = v.premise_free;
      } else {
        doc["failing_line"] = v.failing_line;
        doc["reason"] = std::string(reason_name(v.reason));
        doc["message"] = v.message;
      }
      out << doc.dump(2) << '\n';
    } else if (v.accepted) {
      out << "Accepted: " << *v.certified << '\n';
      if (v.premise_free) out << "premise-free theorem\n";
    } else if (v.failing_line == 0) {
      out << "Rejected: " << reason_name(v.reason) << ": " << v.message << '\n';
    } else {
      out << "Rejected at line " << v.failing_line << ": " << reason_name(v.reason) << ": "
          << v.message << '\n';
    }
    return v.accepted ? kPositive : kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> agents = args.agents;
    if (agents.empty()) agents = scan_agents(args.formula);
    const Formula f = parse_formula(args.formula, agents);
    ModelBounds bounds = default_search_bounds(f, agents);
    if (args.max_moments) bounds.max_moments = *args.max_moments;
    if (args.max_family) bounds.max_family = *args.max_family;
    if (args.props) {
      if (*args.props == "all") {
        bounds.policy = PropositionPolicy::AllSubsets;
      } else if (*args.props == "definable") {
        bounds.policy = PropositionPolicy::Definable;
      } else {
        throw Error("--props must be 'all' or 'definable'");
      }
    }
    if (!args.unsafe_bounds) check_hard_caps(bounds);

    const SearchOutcome result = find_countermodel(f, bounds);
    if (!result.found()) {
      if (args.format == Format::Json) {
        out << json{{"found", false},
                    {"formula", to_string(f)},
                    {"models_examined", result.models_examined},
                    {"bounds", bounds_json(bounds)}}
                   .dump(2)
            << '\n';
      } else {
        out << "NotFound: no countermodel within bounds (" << describe_bounds(bounds) << "); "
            << result.models_examined << " models examined\n";
      }
      return kNegative;
    }

    const auto& cm = *result.countermodel;
    const std::string text = serialize_model(cm.model, {cm.point, to_string(f)});
    // The file must stand on its own: read it back and re-evaluate.
    const ModelDocument back = parse_model(text);
    if (!back.model || !validate(*back.model).ok() ||
        !satisfies(*back.model, *back.refuting_point, Formula::neg(f))) {
      err << "error: countermodel failed re-verification after serialization\n";
      return kFailure;
    }
    const std::string point = cm.model.point_name(*cm.model.point_index(cm.point));
    if (args.out_file) {
      std::ofstream file(*args.out_file);
      if (!file) throw Error("cannot write " + *args.out_file);
      file << text;
      if (args.format == Format::Json) {
        out << json{{"found", true},
                    {"formula", to_string(f)},
                    {"refuting_point", point},
                    {"models_examined", result.models_examined},
                    {"file", *args.out_file}}
                   .dump(2)
            << '\n';
      } else {
        out << "countermodel found after " << result.models_examined
            << " models; refuting point " << point << "; written to " << *args.out_file << '\n';
      }
    } else {
      err << "countermodel found after " << result.models_examined << " models; refuting point "
          << point << '\n';
      out << text;
    }
    return kPositive;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run_fuzz(const FuzzArgs& args, std::ostream& out, std::ostream& err) {
  try {
    EvalOptions options;
    if (args.inject_fault) {
      if (*args.inject_fault != "drop-imagination-clause-ii") {
        throw Error("unknown fault '" + *args.inject_fault + "'");
      }
      options.imagination = ImaginationClause::WithoutOutsideWitness;
      err << "warning: evaluating with imagination clause (ii) removed\n";
    }
    ModelBounds bounds;
    bounds.max_moments = args.max_moments;
    bounds.max_family = args.max_family;
    bounds.agents = args.agents;
    bounds.vars = {"p", "q"};
    bounds.max_histories = 6;
    bounds.definable_pool = soundness_pool();
    if (!args.unsafe_bounds) check_hard_caps(bounds);
    for (const auto& a : bounds.agents) {
      if (a != "a" && a != "b") throw Error("the fuzzing pool is written over agents a and b");
    }

    if (args.count == 0) err << "warning: --count 0 generates no models; nothing was checked\n";

    SoundnessChecker checker(soundness_pool(), bounds.agents, options);
    std::mt19937_64 seeds(args.seed);
    std::optional<std::pair<std::size_t, std::uint64_t>> first_bad;
    for (std::size_t i = 0; i < args.count; ++i) {
      const std::uint64_t seed = seeds();
      const ImaginationModel model = random_model(seed, bounds);
      if (!validate(model).ok()) throw Error("generator produced an invalid model (seed " + std::to_string(seed) + ")");
      const bool had_failure = !checker.report().ok();
      checker.check(model);
      if (!had_failure && !checker.report().ok()) first_bad = {i, seed};
    }
    const SoundnessReport& r = checker.report();

    if (args.format == Format::Json) {
      json doc{{"models", r.models},
               {"axiom_instances_per_model", r.axiom_instances},
               {"axiom_failures", r.axiom_failures},
               {"rule_applications", r.rule_applications},
               {"rule_failures", r.rule_failures},
               {"failures_by_check", r.failures_by_check},
               {"seed", args.seed}};
      for (const auto* f : {&r.first_axiom_failure, &r.first_rule_failure}) {
        if (!*f) continue;
        const auto& x = **f;
        doc[f == &r.first_axiom_failure ? "first_axiom_failure" : "first_rule_failure"] = {
            {"check", x.check},
            {"formula", to_string(x.formula)},
            {"point", x.model.point_name(*x.model.point_index(x.point))},
            {"model", json::parse(serialize_model(x.model))}};
      }
      out << doc.dump(2) << '\n';
    } else {
      out << "models: " << r.models << "\n"
          << "axiom instances per model: " << r.axiom_instances << "\n"
          << "axiom failures: " << r.axiom_failures << "\n"
          << "rule applications: " << r.rule_applications << "\n"
          << "rule failures: " << r.rule_failures << "\n";
      for (const auto& [check, n] : r.failures_by_check) out << "  " << check << ": " << n << '\n';
      for (const auto* f : {&r.first_axiom_failure, &r.first_rule_failure}) {
        if (!*f) continue;
        const auto& x = **f;
        out << "first failure: " << x.check << " instance " << x.formula << " fails at "
            << x.model.point_name(*x.model.point_index(x.point));
        if (first_bad) out << " (model #" << first_bad->first << ", model seed " << first_bad->second << ")";
        out << "\n" << serialize_model(x.model);
      }
      if (r.ok()) out << "all axiom instances valid\n";
    }
    return r.ok() ? kPositive : kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace stitwb
