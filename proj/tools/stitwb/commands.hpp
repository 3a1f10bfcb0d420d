#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stitwb {

enum class Format { Text, Json };

/// Exit codes shared by every command.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kFailure = 2;

struct EvalArgs {
  std::string model_file;
  std::string formula;
  std::optional<std::string> point;
  bool trace = false;
  bool extension = false;
  bool force = false;
  Format format = Format::Text;
};

struct ValidateArgs {
  std::string model_file;
  Format format = Format::Text;
};

struct ProveArgs {
  std::string proof_file;
  std::vector<std::string> agents;
  Format format = Format::Text;
};

struct SearchArgs {
  std::string formula;
  std::vector<std::string> agents;
  std::optional<std::size_t> max_moments;
  std::optional<std::size_t> max_family;
  std::optional<std::string> props;  // "all" or "definable"
  bool unsafe_bounds = false;
  std::optional<std::string> out_file;
  Format format = Format::Text;
};

struct FuzzArgs {
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::size_t max_moments = 4;
  std::size_t max_family = 2;
  std::vector<std::string> agents{"a", "b"};
  bool unsafe_bounds = false;
  std::optional<std::string> inject_fault;
  Format format = Format::Text;
};

int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int run_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);
int run_prove(const ProveArgs& args, std::ostream& out, std::ostream& err);
int run_search(const SearchArgs& args, std::ostream& out, std::ostream& err);
int run_fuzz(const FuzzArgs& args, std::ostream& out, std::ostream& err);

}  // namespace stitwb
