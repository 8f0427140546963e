#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "golomb/checked.hpp"
#include "golomb/treemodel.hpp"
#include "golomb/verify.hpp"

namespace golomb::cli {

enum class Subcommand { Gen, Tree, Closed, Freq, Prune, Verify, Dot, Bfile };
enum class InitSource { TreeDerived, ExplicitList, File };
enum class OutputFormat { Plain, Csv, BFile, Json };
enum class Engine { Recursion, Tree, Closed };

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidArguments = 2;
inline constexpr int kEngineError = 3;

struct CommandConfig {
  Subcommand subcommand = Subcommand::Gen;
  std::int64_t j = 1;
  std::int64_t s = 0;
  std::int64_t lambda = 1;
  std::optional<std::int64_t> k;   // set => general recursion
  std::optional<Value> nu;         // defaults to lambda*j
  std::int64_t n = 20;
  TreeVariant variant = TreeVariant::Knot;
  InitSource init_source = InitSource::TreeDerived;
  std::vector<Value> init_values;  // ExplicitList
  std::string init_file;           // File: a b-file or a plain value list
  OutputFormat format = OutputFormat::Plain;
  Engine engine = Engine::Recursion;  // bfile only
  VerifyGrid grid;
};

// Executes one command. Data goes to `out`, diagnostics to `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and runs; parse errors exit with kInvalidArguments.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace golomb::cli
