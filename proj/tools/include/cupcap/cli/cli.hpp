#pragma once

// Command-line front end: configuration, commands and their execution.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "cupcap/bounds.hpp"

namespace cupcap::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Usage problems that are not parse errors of a points file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  BoundsConfig bounds;
  std::size_t sample_budget = 10000;  ///< transversal samples
  std::size_t search_budget = 2000;   ///< fat-cap candidate draws
  std::size_t convex_limit = 120;     ///< largest input for the exact convex-subset DP in analyze
  std::uint64_t seed = 0;
};

/// Applies "key = value" lines on top of `base`. Blank lines and '#' comments
/// are skipped; unknown keys and malformed values throw UsageError citing the
/// line. Keys: c, c1, big_c, epsilon, sample_budget, search_budget,
/// convex_limit, seed.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

struct GenX {
  int ell, m, n;
  std::filesystem::path out;
};
struct GenEs {
  int ell, n;
  std::filesystem::path out;
};
struct Analyze {
  std::filesystem::path in;
  std::optional<int> ell, m, n;  ///< all three or none
  std::optional<std::filesystem::path> report;
};
struct Verify {
  std::filesystem::path in;
  std::string claim;
  std::optional<std::filesystem::path> report;
};
struct Bounds {
  int ell, max_mn;
};
struct FatCapSearch {
  std::filesystem::path in;
  std::size_t k = 4;
  std::optional<std::size_t> budget;
  std::optional<std::filesystem::path> report;
};
struct Plot {
  std::filesystem::path in;
  std::filesystem::path svg_out;
  std::string highlight = "none";  ///< none, cup, cap, collinear or convex
};

using Command = std::variant<GenX, GenEs, Analyze, Verify, Bounds, FatCapSearch, Plot>;

/// Executes one command. Reports without a target path go to `out`;
/// diagnostics go to `err`. Never throws.
int run(const Command& command, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full argv handling, including --config and --seed.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Writes `contents` to a temporary sibling of `path`, then renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace cupcap::cli
