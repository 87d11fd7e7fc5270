// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "CLI11.hpp"
#include "geomforge/parallel.hpp"
#include "geomforge_cli/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"geomforge acceptance suite"};
  int threads = 1;
  std::string tag;
  app.add_option("--threads", threads)->check(CLI::Range(1, 256));
  app.add_option("--tag", tag);
  CLI11_PARSE(app, argc, argv);

  geomforge::set_thread_count(threads);
  int failed = 0;
  int total = 0;
  for (const auto& c : geomforge::cli::select_criteria(tag)) {
    const auto r = geomforge::cli::run_criterion(c);
    std::cout << geomforge::cli::summary_line(r) << std::endl;
    failed += r.pass ? 0 : 1;
    ++total;
  }
  std::cout << (total - failed) << "/" << total << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
