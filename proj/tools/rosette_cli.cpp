// Command-line surface for the rosette central-configuration library:
// root listing, figure-data emission, verification suites, fold tracing.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/solver error,
// 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rosette/bifurcation.hpp"
#include "rosette/grid.hpp"
#include "rosette/nbody.hpp"
#include "rosette/potential.hpp"
#include "rosette/rootfind.hpp"

using json = nlohmann::ordered_json;

namespace {

// Shortest 17-significant-digit rendering: round-trips exactly and is
// bit-stable across runs.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

int write_output(const Table& t, const std::string& format,
                 const std::string& path) {
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj;
      for (std::size_t i = 0; i < t.header.size(); ++i) {
        const std::string& cell = row[i];
        // Booleans and numbers keep their native JSON types.
        if (cell == "true" || cell == "false") {
          obj[t.header[i]] = cell == "true";
          continue;
        }
        try {
          std::size_t pos = 0;
          if (cell.find_first_of(".eE") == std::string::npos) {
            long long iv = std::stoll(cell, &pos);
            if (pos == cell.size()) { obj[t.header[i]] = iv; continue; }
          }
          pos = 0;
          double v = std::stod(cell, &pos);
          if (pos == cell.size()) { obj[t.header[i]] = v; continue; }
        } catch (...) {}
        obj[t.header[i]] = cell;
      }
      arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < t.header.size(); ++i)
      os << (i ? "," : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  }
  if (path.empty()) {
    std::cout << os.str();
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 3;
  }
  f << os.str();
  if (!f) {
    std::cerr << "error: write failure on " << path << "\n";
    return 3;
  }
  return 0;
}

const char* tag_name(rosette::IntervalTag t) {
  switch (t) {
    case rosette::IntervalTag::below_one: return "below_one";
    case rosette::IntervalTag::at_one: return "at_one";
    case rosette::IntervalTag::above_one: return "above_one";
  }
  return "?";
}

int cmd_roots(int n, double epsilon, double mu, const std::string& format,
              const std::string& output) {
  rosette::RosetteParams params(n, epsilon, mu);
  rosette::CountResult res = rosette::count_configurations(params);
  Table t;
  t.header = {"x", "interval_tag", "residual", "oracle_residual"};
  for (const rosette::Root& r : res.roots.roots) {
    rosette::OracleResult o = rosette::check_central(r.x, params);
    t.rows.push_back({num(r.x), tag_name(r.interval), num(r.residual),
                      num(o.max_relative_residual)});
  }
  std::cerr << res.count << " configuration(s) for n=" << n
            << " epsilon=" << epsilon << " mu=" << mu
            << (res.used_duality ? " (via duality)" : "") << "\n";
  return write_output(t, format, output);
}

int cmd_figure(const std::string& id, const std::string& format,
               const std::string& output) {
  Table t;
  if (id == "fig2") {
    rosette::LemmaMainResult lm = rosette::verify_lemma_main(4, 106);
    t.header = {"n", "x_n_star", "h0_at_root"};
    for (const rosette::Fig2Row& r : lm.rows)
      t.rows.push_back({std::to_string(r.n), num(r.x_star), num(r.h0_at_root)});
  } else if (id == "fig3") {
    const rosette::AngleTable table(107);
    t.header = {"x", "h3"};
    for (int i = 1; i < 460; ++i) {
      double x = 0.54 + 1e-3 * i;
      t.rows.push_back({num(x), num(rosette::bound_functions(x, 107, table).h3)});
    }
  } else if (id == "fig4a" || id == "fig4b") {
    std::vector<double> grid = id == "fig4a"
                                   ? rosette::uniform_grid(0.001, 0.999, 499)
                                   : rosette::log_grid(1e-5, 2e-3, 99);
    rosette::HmaxCurve c = rosette::scan_hmax_n3(grid);
    t.header = {"epsilon", "hmax"};
    for (std::size_t i = 0; i < grid.size(); ++i)
      t.rows.push_back({num(c.epsilon_grid[i]), num(c.hmax_values[i])});
  } else {
    std::cerr << "error: unknown figure id " << id << "\n";
    return 2;
  }
  return write_output(t, format, output);
}

int cmd_fold(int n, std::optional<double> epsilon, const std::string& grid_spec,
             const std::string& format, const std::string& output) {
  Table t;
  t.header = {"epsilon", "mu0", "x_star"};
  if (epsilon) {
    rosette::FoldPoint fp = rosette::find_fold(*epsilon, n, 1e-4, 1.0 - 1e-9);
    t.rows.push_back({num(fp.epsilon), num(fp.mu0), num(fp.x_star)});
  } else {
    double lo, hi;
    int count;
    if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
        !(lo > 0.0 && lo < hi && hi <= 1.0) || count < 2) {
      std::cerr << "error: --epsilon-grid must be lo:hi:count with 0 < lo < hi <= 1\n";
      return 2;
    }
    std::vector<double> grid = rosette::uniform_grid(lo, hi, count - 1);
    for (const rosette::FoldCurvePoint& p : rosette::bifurcation_curve(n, grid))
      t.rows.push_back({num(p.epsilon), num(p.mu0), num(p.x_star)});
  }
  return write_output(t, format, output);
}

int cmd_verify(const std::string& suite, const std::string& format,
               const std::string& output) {
  std::vector<rosette::LemmaReport> reports;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };

  if (want("lemmas")) {
    reports.push_back(rosette::verify_A_n_negative());
    reports.push_back(rosette::verify_kn_lower());
    reports.push_back(rosette::verify_lemma_main(4, 106).report);
    reports.push_back(rosette::verify_lemma_main(107, 112).report);
    reports.push_back(rosette::verify_h3_positive());
  }
  if (want("theorem2")) reports.push_back(rosette::verify_theorem2());
  if (want("n2")) {
    reports.push_back(rosette::verify_n2_unique(
        {0.1, 0.5, 1.0, 1.74, 1.76, 5.0}, {0.05, 0.3, 0.6, 0.85, 0.9, 0.99}));
  }
  if (want("n3")) {
    reports.push_back(rosette::verify_n3_monotone_above_one());

    // Sign band of hmax(eps) and the one-configuration middle band,
    // checked self-consistently against the located crossings.
    std::vector<double> grid = rosette::log_grid(1e-5, 1.0 - 1e-5, 64);
    rosette::HmaxCurve c = rosette::scan_hmax_n3(grid);
    double worst = std::numeric_limits<double>::infinity();
    std::string where;
    auto note = [&](double margin, const std::string& loc) {
      if (margin < worst) { worst = margin; where = loc; }
    };
    note(c.eps2 - c.eps1, "eps1 < eps2");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double e = grid[i], v = c.hmax_values[i];
      bool inside = e > c.eps1 && e < c.eps2;
      note(inside ? -v : v, "hmax sign at eps=" + num(e));
    }
    for (double e : {0.1, 0.5, 0.9})
      for (double mu : {0.01, 1.0, 100.0}) {
        int cnt = rosette::count_configurations(rosette::RosetteParams(3, e, mu)).count;
        note(cnt == 1 ? 1.0 : -1.0,
             "count at eps=" + num(e) + " mu=" + num(mu));
      }
    reports.push_back(rosette::LemmaReport{rosette::LemmaId::n3_hmax_band, 3, 3,
                                           worst > 0.0, worst, where});
    std::cerr << "n3: eps1=" << num(c.eps1) << " eps2=" << num(c.eps2) << "\n";
  }
  if (reports.empty()) {
    std::cerr << "error: unknown suite " << suite << "\n";
    return 2;
  }

  Table t;
  t.header = {"lemma_id", "n_lo", "n_hi", "pass", "worst_margin", "worst_location"};
  bool all_pass = true;
  for (const rosette::LemmaReport& r : reports) {
    all_pass = all_pass && r.pass;
    t.rows.push_back({rosette::lemma_id_name(r.lemma_id), std::to_string(r.n_lo),
                      std::to_string(r.n_hi), r.pass ? "true" : "false",
                      num(r.worst_margin), r.worst_location});
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << rosette::lemma_id_name(r.lemma_id)
              << "  worst_margin=" << num(r.worst_margin)
              << (r.worst_location.empty() ? "" : "  (" + r.worst_location + ")")
              << "\n";
  }
  int rc = write_output(t, format, output);
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rosette: central configurations of the (2n+1)-body rosette problem"};
  app.require_subcommand(1);

  std::string format = "csv", output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "Output file (default: stdout)");

  auto* roots = app.add_subcommand("roots", "List central configurations for (n, epsilon, mu)");
  int n = 3;
  double epsilon = 1.0, mu = 0.0;
  roots->add_option("--n", n, "Bodies per polygon")->required()->check(CLI::Range(2, 100000));
  roots->add_option("--epsilon", epsilon, "Mass ratio m2/m1")->required()
      ->check(CLI::PositiveNumber);
  roots->add_option("--mu", mu, "Central mass ratio m0/m1")->required()
      ->check(CLI::NonNegativeNumber);

  auto* figure = app.add_subcommand("figure", "Emit figure-reproduction data");
  std::string fig_id;
  figure->add_option("--id", fig_id, "Figure id")->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4a", "fig4b"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"all", "lemmas", "theorem2", "n2", "n3"}));

  auto* fold = app.add_subcommand("fold", "Locate fold points / trace the bifurcation curve");
  int fold_n = 4;
  std::optional<double> fold_eps;
  std::string eps_grid;
  fold->add_option("--n", fold_n, "Bodies per polygon")->required()->check(CLI::Range(3, 100000));
  auto* eps_opt = fold->add_option("--epsilon", fold_eps, "Single epsilon")
                      ->check(CLI::PositiveNumber);
  fold->add_option("--epsilon-grid", eps_grid, "Grid lo:hi:count")->excludes(eps_opt);

  // Let --format / --output appear after the subcommand as well.
  for (CLI::App* sc : {roots, figure, verify, fold}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // stable exit-code contract: 2 = usage error
  }

  try {
    if (roots->parsed()) return cmd_roots(n, epsilon, mu, format, output);
    if (figure->parsed()) return cmd_figure(fig_id, format, output);
    if (verify->parsed()) return cmd_verify(suite, format, output);
    if (fold->parsed()) {
      if (!fold_eps && eps_grid.empty()) {
        std::cerr << "error: fold needs --epsilon or --epsilon-grid\n";
        return 2;
      }
      return cmd_fold(fold_n, fold_eps, eps_grid, format, output);
    }
  } catch (const rosette::FoldNotFoundError& e) {
    std::cerr << "solver: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
