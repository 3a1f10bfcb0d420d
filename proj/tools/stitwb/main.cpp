#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_format(CLI::App* cmd, stitwb::Format& format) {
  static const std::map<std::string, stitwb::Format> kFormats{{"text", stitwb::Format::Text},
                                                              {"json", stitwb::Format::Json}};
  cmd->add_option("--format", format, "Report format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the STIT logic of imagination: evaluate, validate, prove, search, fuzz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "stitwb 0.1.0");

  stitwb::EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula on a model file");
  eval_cmd->add_option("--model", eval.model_file, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--formula", eval.formula, "Formula text")->required();
  eval_cmd->add_option("--point", eval.point, "Point MOMENT:HINDEX; without it, validity in the model");
  eval_cmd->add_flag("--trace", eval.trace, "Print the clause-by-clause trace");
  eval_cmd->add_flag("--extension", eval.extension, "Print the extension of the formula");
  eval_cmd->add_flag("--force", eval.force, "Evaluate even if the model fails validation");
  add_format(eval_cmd, eval.format);

  stitwb::ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Check the frame conditions of a model file");
  val_cmd->add_option("--model,model", val.model_file, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  add_format(val_cmd, val.format);

  stitwb::ProveArgs prove;
  auto* prove_cmd = app.add_subcommand("prove", "Check a proof file");
  prove_cmd->add_option("file", prove.proof_file, "Proof file")->required()->check(CLI::ExistingFile);
  prove_cmd->add_option("--agents", prove.agents, "Declared agents (overrides the file header)")->delimiter(',');
  add_format(prove_cmd, prove.format);

  stitwb::SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Bounded countermodel search");
  search_cmd->add_option("--formula,formula", search.formula, "Formula text")->required();
  search_cmd->add_option("--agents", search.agents, "Agent set (default: agents in the formula)")->delimiter(',');
  search_cmd->add_option("--max-moments", search.max_moments, "Largest tree size (default 3)");
  search_cmd->add_option("--max-family", search.max_family, "Largest neighborhood family (default 2)");
  search_cmd->add_option("--props", search.props, "Neighborhood candidates: all | definable")
      ->check(CLI::IsMember({"all", "definable"}));
  search_cmd->add_flag("--unsafe-bounds", search.unsafe_bounds, "Lift the hard caps");
  search_cmd->add_option("--out", search.out_file, "Write the countermodel here instead of stdout");
  add_format(search_cmd, search.format);

  stitwb::FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check axiom and rule soundness on random models");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of random models")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "Random seed")->capture_default_str();
  fuzz_cmd->add_option("--max-moments", fuzz.max_moments, "Largest tree size")->capture_default_str();
  fuzz_cmd->add_option("--max-family", fuzz.max_family, "Largest neighborhood family")->capture_default_str();
  fuzz_cmd->add_option("--agents", fuzz.agents, "Agents (subset of a, b)")->delimiter(',');
  fuzz_cmd->add_flag("--unsafe-bounds", fuzz.unsafe_bounds, "Lift the hard caps");
  fuzz_cmd->add_option("--inject-fault", fuzz.inject_fault)->group("");
  add_format(fuzz_cmd, fuzz.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : stitwb::kFailure;
  }

  if (*eval_cmd) return stitwb::run_eval(eval, std::cout, std::cerr);
  if (*val_cmd) return stitwb::run_validate(val, std::cout, std::cerr);
  if (*prove_cmd) return stitwb::run_prove(prove, std::cout, std::cerr);
  if (*search_cmd) return stitwb::run_search(search, std::cout, std::cerr);
  return stitwb::run_fuzz(fuzz, std::cout, std::cerr);
}
