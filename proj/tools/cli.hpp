#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maskent/family.hpp"

namespace maskent::cli {

enum ExitCode : int { kVerified = 0, kViolation = 1, kOperationalError = 2 };

struct CliInvocation {
  std::string subcommand;  // field | verify | campaign | tightness | search
  std::optional<std::uint32_t> p, m, q;
  std::size_t n = 1;
  std::string suite = "random";
  std::uint64_t samples = 1000;
  std::uint64_t iters = 5000;
  std::uint64_t restarts = 4;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool per_k = false;
  std::optional<std::filesystem::path> table;
  std::string format = "json";  // json | csv
  std::optional<std::filesystem::path> out;
};

/// Reads and validates a FunctionTable JSON file. Raises TableError.
FunctionTable load_table(const std::filesystem::path& path);

/// Executes a parsed invocation; the report goes to `out` or inv.out.
int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maskent::cli
