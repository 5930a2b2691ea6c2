// Command-line front end: runs a verification suite and writes its report.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "glmcr/errors.hpp"
#include "glmcr/suites.hpp"

namespace {

constexpr int kAllPass = 0;
constexpr int kSomeFail = 1;
constexpr int kConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of gl(2|1) monodromy-matrix identities"};

  glmcr::SuiteConfig cfg;
  std::string c_text = "1";
  std::size_t sites = 0;
  std::size_t draws = 0;
  std::string format = "json";
  std::string out_path;

  std::string names;
  for (const auto& n : glmcr::suite_names()) names += (names.empty() ? "" : ", ") + n;

  app.add_option("--suite", cfg.suite, "Suite to run: " + names)->envname("VERIFY_SUITE")->capture_default_str();
  app.add_option("--sites", sites, "Chain length (default: each suite's own grid)")->envname("VERIFY_SITES");
  app.add_option("--c", c_text, "Coupling constant as p/q")->envname("VERIFY_C")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Run seed")->envname("VERIFY_SEED")->capture_default_str();
  app.add_option("--max-set-size", cfg.max_set_size, "Skip configurations with a larger parameter set")
      ->envname("VERIFY_MAX_SET_SIZE")
      ->capture_default_str();
  app.add_option("--draws", draws, "Random draws per configuration (default: per suite)")->envname("VERIFY_DRAWS");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("VERIFY_FORMAT")
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report here instead of stdout")->envname("VERIFY_OUT");
  app.add_flag("--timing", cfg.timing, "Record elapsed_ms per case")->envname("VERIFY_TIMING");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  glmcr::Report report;
  try {
    cfg.c = glmcr::Rat::parse(c_text);
    if (sites) cfg.sites = sites;
    if (draws) cfg.draws = draws;
    if (app.count("--sites") && sites == 0) throw glmcr::ConfigError("--sites must be at least 1");
    if (app.count("--draws") && draws == 0) throw glmcr::ConfigError("--draws must be at least 1");
    report = glmcr::run_suite(cfg);
  } catch (const glmcr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const glmcr::PoleError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  const std::string text = format == "json" ? glmcr::to_json(report) : glmcr::to_text(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << out_path << "\n";
      return kConfigError;
    }
    os << text;
  }
  return report.any_failed() ? kSomeFail : kAllPass;
}
