#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "geomforge/parallel.hpp"
#include "geomforge_cli/acceptance.hpp"
#include "geomforge_cli/commands.hpp"

namespace {

using geomforge::cli::Report;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int emit(const Report& r, const std::string& format, const std::string& out_path) {
  const std::string text = format == "json" ? geomforge::cli::to_json_text(r) : geomforge::cli::to_table(r);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitFailure;
    }
    out << text;
  }
  return r.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite classical geometries, the split Cayley hexagon and group-orbit checks"};
  app.require_subcommand(1);
  // Global options such as --format may also follow the subcommand.
  app.fallthrough();
  app.set_version_flag("--version", "geomforge 1.0.0");

  std::string format = "table";
  std::string out_path;
  int threads = 1;
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--threads", threads, "Worker threads for parallel loops")->check(CLI::Range(1, 256));
  app.add_flag("--timing", timing, "Include elapsed milliseconds in the report");

  std::function<Report()> action;

  auto* field = app.add_subcommand("field", "Build GF(q) and check the field axioms exhaustively");
  int field_q = 0;
  field->add_option("--q", field_q, "Field order (prime power <= 256)")->required();
  field->callback([&] { action = [&] { return geomforge::cli::run_field(field_q); }; });

  auto* polar = app.add_subcommand("polar", "Enumerate a classical polar space and check its counts");
  std::string polar_kind;
  int polar_n = 0;
  int polar_q = 0;
  bool polar_report = false;
  polar->add_option("--kind", polar_kind, "Sp, O+, O, O- or U")->required();
  polar->add_option("--n", polar_n, "Ambient dimension")->required();
  polar->add_option("--q", polar_q, "Field order (q0 for U)")->required();
  polar->add_flag("--report", polar_report, "Include point coordinates and maximal subspaces");
  polar->callback([&] {
    action = [&] {
      return geomforge::cli::run_polar(geomforge::parse_polar_type(polar_kind), polar_n, polar_q, polar_report);
    };
  });

  auto* ngon = app.add_subcommand("ngon", "Verify a generalized polygon given in the incidence JSON format");
  std::string ngon_in;
  bool allow_thin = false;
  ngon->add_option("--in", ngon_in, "Geometry file")->required()->check(CLI::ExistingFile);
  ngon->add_flag("--allow-thin", allow_thin, "Accept thin geometries (s = 1 or t = 1)");
  ngon->callback([&] { action = [&] { return geomforge::cli::run_ngon(ngon_in, allow_thin); }; });

  auto* hexagon = app.add_subcommand("hexagon", "Build the split Cayley hexagon in O(7,q)");
  geomforge::cli::HexagonOptions hex;
  std::string hex_export;
  hexagon->add_option("--q", hex.q, "Field order")->check(CLI::IsMember(std::vector<int>{2, 3, 4}))->default_val(2);
  hexagon->add_flag("--verify", hex.verify, "Run the construction checks and the polygon verification");
  hexagon->add_flag("--stabilizer", hex.stabilizer, "Filter Sp(6,2) for the hexagon stabilizer (q = 2)");
  hexagon->add_option("--export", hex_export, "Write the geometry in the incidence JSON format");
  hexagon->callback([&] {
    if (!hex_export.empty()) hex.export_path = hex_export;
    action = [&] { return geomforge::cli::run_hexagon(hex); };
  });

  auto* group = app.add_subcommand("group", "Orbit checks for a preset group");
  std::string preset;
  std::vector<std::string> checks;
  group->add_option("--preset", preset, "Preset name, e.g. Sp(6,2), SL2_4_semilinear")->required();
  group->add_option("--check", checks, "order, rank, antiflag, line, blocks, chain")
      ->check(CLI::IsMember({"order", "rank", "antiflag", "line", "blocks", "chain"}))
      ->take_all();
  group->callback([&] { action = [&] { return geomforge::cli::run_group(preset, checks); }; });

  auto* constraints = app.add_subcommand("constraints", "Parameter feasibility arithmetic");
  constraints->require_subcommand(1);
  long long k = 0, l = 0, lambda = 0, mu = 0, j = 0, jt = 0;
  auto* rank3 = constraints->add_subcommand("rank3", "Eigenvalues of a rank 3 graph");
  auto* rank4 = constraints->add_subcommand("rank4", "Rank 4 split conditions");
  for (auto* sub : {rank3, rank4}) {
    sub->add_option("--k", k)->required();
    sub->add_option("--l", l)->required();
    sub->add_option("--lambda", lambda)->required();
    sub->add_option("--mu", mu)->required();
  }
  rank4->add_option("--j", j, "|Gamma_1(x)|")->required();
  rank4->add_option("--t", jt, "|Gamma_1(x) cap Delta(y)|")->required();
  rank3->callback([&] { action = [&] { return geomforge::cli::run_rank3(k, l, lambda, mu); }; });
  rank4->callback([&] { action = [&] { return geomforge::cli::run_rank4(k, l, lambda, mu, j, jt); }; });

  auto* zsig = constraints->add_subcommand("zsigmondy", "Least primitive prime divisor");
  long long zq = 0;
  int zk = 0;
  zsig->add_option("--q", zq)->required()->check(CLI::Range(2LL, 256LL));
  zsig->add_option("--k", zk)->required()->check(CLI::Range(1, 30));
  zsig->callback([&] { action = [&] { return geomforge::cli::run_zsigmondy(zq, zk); }; });

  auto* sec13 = constraints->add_subcommand("section13", "Symplectic-case elimination table");
  int m_lo = 3;
  int m_hi = 20;
  std::string csv_path;
  sec13->add_option("--m-lo", m_lo)->default_val(3);
  sec13->add_option("--m-hi", m_hi)->default_val(20);
  sec13->add_option("--csv", csv_path, "Write the table as CSV (- for stdout)");
  sec13->callback([&] {
    action = [&] {
      std::string csv;
      Report r = geomforge::cli::run_section13(m_lo, m_hi, csv_path.empty() ? nullptr : &csv);
      if (csv_path == "-") {
        std::cout << csv;
      } else if (!csv_path.empty()) {
        std::ofstream(csv_path) << csv;
      }
      return r;
    };
  });

  auto* case31 = constraints->add_subcommand("case31", "Classify an embedding parameter set");
  case31->set_help_flag("--help", "Print this help message and exit");
  long long cq = 0;
  int cm = 0, ch = 0, cf1 = 0, ce2 = 0;
  case31->add_option("--q", cq)->required();
  case31->add_option("--m", cm)->required();
  case31->add_option("--h", ch)->required();
  case31->add_option("--f1", cf1)->required();
  case31->add_option("--e2", ce2)->required();
  case31->callback([&] { action = [&] { return geomforge::cli::run_case31(cq, cm, ch, cf1, ce2); }; });

  auto* showcase = app.add_subcommand("showcase", "Worked examples in O+(8,2) and PG(3,2)");
  std::string show_name;
  showcase->add_option("--name", show_name)->required()->check(CLI::IsMember({"a9", "omega7", "semilinear"}));
  showcase->callback([&] { action = [&] { return geomforge::cli::run_showcase(show_name); }; });

  auto* acceptance = app.add_subcommand("acceptance", "Run the acceptance suite");
  bool all = false;
  std::string tag;
  auto* all_opt = acceptance->add_flag("--all", all, "Run every criterion (default)");
  acceptance->add_option("--tag", tag, "Run only criteria with this tag")->excludes(all_opt);
  acceptance->callback([&] {
    action = [&] {
      std::vector<geomforge::cli::CriterionResult> results;
      for (const auto& c : geomforge::cli::select_criteria(tag)) {
        results.push_back(geomforge::cli::run_criterion(c));
        std::cerr << geomforge::cli::summary_line(results.back()) << "\n";
      }
      return geomforge::cli::acceptance_report(results, tag);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  geomforge::set_thread_count(threads);
  try {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = action();
    if (timing) {
      r.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
    return emit(r, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
