#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cuspsl2/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace cuspsl2;
  cli::RunConfig cfg;
  CLI::App app{"Finite-level verifications for cuspidal unipotent sheaves on SL(2)"};
  app.require_subcommand(1);
  app.add_option("--p", cfg.p, "odd prime 3..97");
  app.add_option("--level", cfg.level, "level n");
  app.add_option("--precision", cfg.precision, "p-adic precision N");
  app.add_option("--truncation", cfg.truncation, "Cartan truncation M");
  app.add_option("--tol", cfg.tol, "tolerance");
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--out", cfg.out, "report path (stdout if empty)");
  for (const auto& name : cli::subcommands()) app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigError;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  cli::RunResult result;
  try {
    result = cli::run(subcommand, cfg);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kConfigError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kFail;
  }

  if (cfg.out.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return cli::kConfigError;
    }
    os << result.report;
  }
  return result.passed ? cli::kPass : cli::kFail;
}
