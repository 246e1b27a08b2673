// verify: runs the proof ledger and prints a report.
//
//   verify [--step <id>]... [--tol <float>] [--format text|json] [--list]
//
// Exit status is 0 iff every selected step passes, 2 on usage errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef BASEL_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "basel/ledger.hpp"
#include "basel/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerically verify every step of the double-integral proof ledger"};

  std::vector<std::string> steps;
  std::optional<double> tol;
  std::string format = "text";
  bool list = false;

  app.add_option("--step", steps, "Run only this step (repeatable)");
  app.add_option("--tol", tol, "Override every step's absolute and relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--list", list, "Print the step registry and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  namespace ledger = basel::ledger;

  if (list) {
    const auto infos = ledger::list_steps();
    if (format == "json") {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& s : infos) {
        out.push_back({{"id", s.id}, {"title", s.title}, {"paper_ref", s.paper_ref}});
      }
      std::cout << out.dump(2) << '\n';
    } else {
      for (const auto& s : infos) {
        std::printf("%-22s %s\n%-22s   [%s]\n", s.id.c_str(), s.title.c_str(), "",
                    s.paper_ref.c_str());
      }
    }
    return 0;
  }

  ledger::RunConfig config;
  config.step_ids = steps;
  if (tol) {
    basel::Tolerance t;
    t.abs_tol = *tol;
    t.rel_tol = *tol;
    config.tolerance_override = t;
  }

  ledger::Report report;
  try {
    report = ledger::run_all(config);
  } catch (const std::out_of_range& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  }

  if (format == "json") {
    std::cout << ledger::to_json(report).dump(2) << '\n';
  } else {
    std::cout << ledger::format_text(report);
  }
  return report.all_passed() ? 0 : 1;
}
