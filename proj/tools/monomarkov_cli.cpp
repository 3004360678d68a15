// Command-line front end: constants, profiles, extremal samples and the
// verification report.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "monomarkov/commands.hpp"
#include "monomarkov/errors.hpp"

using namespace monomarkov;

int main(int argc, char** argv) {
  CLI::App app{"Sharp derivative bounds for monotone polynomials on [-1, 1]"};

  std::string command;
  std::string format = "csv";
  std::string seed_text;
  RunConfig config;
  int n = 0;
  int n_max = 0;
  double x0 = 0.0;

  app.add_option("command", command, "bound | table | profile | extremal | verify")
      ->required()
      ->check(CLI::IsMember({"bound", "table", "profile", "extremal", "verify"}));
  auto* n_opt = app.add_option("--n", n, "Polynomial degree");
  auto* n_max_opt = app.add_option("--n-max", n_max, "Largest degree for table/verify");
  auto* x0_opt = app.add_option("--x0", x0, "Evaluation point in [-1, 1]");
  app.add_option("--grid", config.grid, "Chebyshev grid size (>= 64)")->capture_default_str();
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "Output path (default: standard output)");
  app.add_option("--seed", seed_text, "Seed for the random monotone corpus (decimal or 0x hex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_status::kOk : exit_status::kArgumentError;
  }

  config.command = *parse_command(command);
  config.format = *parse_format(format);
  if (*n_opt) config.n = n;
  if (*n_max_opt) config.n_max = n_max;
  if (*x0_opt) config.x0 = x0;
  if (!seed_text.empty()) {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(seed_text, &used, 0);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
    } catch (const std::exception&) {
      std::cerr << "error: --seed must be an unsigned integer, got '" << seed_text << "'\n";
      return exit_status::kArgumentError;
    }
  }

  CommandOutput result;
  try {
    result = run_command(config);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_status::kArgumentError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_status::kArgumentError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_status::kVerificationFailure;
  }

  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << *config.out << " for writing\n";
      return exit_status::kIoError;
    }
    file << result.text;
    if (!file.flush()) {
      std::cerr << "error: write to " << *config.out << " failed\n";
      return exit_status::kIoError;
    }
  } else {
    std::cout << result.text;
  }
  return result.exit_code;
}
