#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chromhom/chain_complex.hpp"
#include "chromhom/graded_algebra.hpp"
#include "chromhom/graph.hpp"

namespace chromhom::cli {

enum class ModelChoice { full, nbc, both };
enum class OutputFormat { json, tsv };
enum class VerifyLevel { fast, paranoid };

struct RunConfig {
  std::string command;
  std::filesystem::path graph;
  std::string algebra = "am:2";
  ModelChoice model = ModelChoice::both;
  OutputFormat format = OutputFormat::json;
  VerifyLevel verify = VerifyLevel::fast;
  bool timing = true;
  unsigned threads = 0;
  /// homology only: write the complex of each model as JSON here.
  std::filesystem::path dump_complex;
};

ModelChoice parse_model_choice(const std::string& name);
OutputFormat parse_format(const std::string& name);
VerifyLevel parse_verify_level(const std::string& name);

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

struct PropertyResult {
  std::string name;
  bool passed;
  std::string witness;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  /// Substituted into the balanced-coloring check only (negative controls).
  SignTable sign = coloring_sign;
  unsigned threads = 0;
};

/// Graphs above this size skip the properties that walk all of 2^E.
inline constexpr std::size_t max_exhaustive_edges = 16;
/// Paranoid mode re-derives NBC membership by cycle enumeration up to here.
inline constexpr std::size_t max_paranoid_edges = 8;

/// Runs the invariant suite, one result per property.
std::vector<PropertyResult> run_verification(const Graph& g, const GradedAlgebra& a, const VerifyOptions& options);

CommandResult cmd_info(const RunConfig& cfg);
CommandResult cmd_nbc(const RunConfig& cfg);
CommandResult cmd_matching(const RunConfig& cfg);
CommandResult cmd_homology(const RunConfig& cfg);
CommandResult cmd_chromatic(const RunConfig& cfg);
CommandResult cmd_csf(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_bench(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandResult run(const RunConfig& cfg);

}  // namespace chromhom::cli
