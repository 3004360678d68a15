#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "monomarkov/extremal.hpp"

namespace monomarkov {

enum class Command { Bound, Table, Profile, Extremal, Verify };
enum class Format { Csv, Json };

namespace exit_status {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kArgumentError = 2;
inline constexpr int kIoError = 3;
}  // namespace exit_status

struct RunConfig {
  Command command = Command::Table;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<double> x0;
  int grid = 2001;
  Format format = Format::Csv;
  std::optional<std::string> out;  // standard output when empty
  std::uint64_t seed = kDefaultSeed;
};

inline constexpr int kDefaultTableMax = 20;
inline constexpr int kDefaultVerifyMax = 12;

std::optional<Command> parse_command(const std::string& name);
std::optional<Format> parse_format(const std::string& name);

/// Throws ArgumentError for n < 1, |x0| > 1, grid < 64, or a missing
/// argument the command needs.
void validate(const RunConfig& config);

/// Locale-independent, 12 significant digits, no negative zero.
std::string format_real(double v);

std::string cmd_bound(int n, double x0, Format format);
/// One row per n = 1..n_max (1 <= n_max <= 200).
std::string cmd_table(int n_max, Format format);
/// Pointwise bound sampled on `grid` Chebyshev points including +-1.
std::string cmd_profile(int n, int grid, Format format);
/// Per-point extremal at x0, or the diagonal-sum family when x0 is empty.
std::string cmd_extremal(int n, std::optional<double> x0, int grid, Format format);

struct VerifyOutput {
  std::string json;
  int entries = 0;
  int failures = 0;
  bool pass = false;
};
/// Runs every check section and renders the report as JSON.
VerifyOutput cmd_verify(int n_max, std::uint64_t seed);

struct CommandOutput {
  std::string text;
  int exit_code = exit_status::kOk;
};
/// Validates and dispatches; does not touch the filesystem.
CommandOutput run_command(const RunConfig& config);

}  // namespace monomarkov
