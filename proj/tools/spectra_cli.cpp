// Command-line front end: eigenvalues, band minima, closed-form bounds, the
// large-k limit model, and the self-verification suites, with JSON/CSV export.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/report.hpp"

namespace {

using spectra::report::Command;
using spectra::report::OutputFormat;
using spectra::report::RunConfig;

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size()) throw CLI::ValidationError("--k", "not an integer: " + item);
    if (v < 1) throw CLI::ValidationError("--k", "k must be >= 1");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--k", "empty k list");
  return out;
}

int run_command(const RunConfig& cfg) {
  const spectra::report::ResultRecord rec = spectra::report::run(cfg);
  const std::string body = spectra::report::render(rec, cfg.output_format);
  if (cfg.output_path) {
    std::ofstream out(*cfg.output_path);
    if (!out) {
      std::cerr << "cannot open output path: " << *cfg.output_path << "\n";
      return 2;
    }
    out << body;
  } else {
    std::cout << body;
  }
  return rec.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for the band functions of -d^2/dt^2 + (t^{k+1}/(k+1) - a)^2"};
  app.require_subcommand(1);

  std::string k_text = "1";
  double alpha = 0.0;
  bool alpha_set = false;
  int jmax = 3;
  double eps = 0.05;
  double tolerance = 0.0;
  bool tolerance_set = false;
  std::string format = "text";
  std::string out_path, cache_path, level = "fast";

  const auto add_common = [&](CLI::App* sub, bool wants_alpha) {
    sub->add_option("--k", k_text, "comma-separated list of k values");
    if (wants_alpha)
      sub->add_option("--alpha", alpha, "parameter alpha")->each([&](const std::string&) {
        alpha_set = true;
      });
    sub->add_option("--jmax", jmax, "number of eigenvalues / roots")->check(CLI::PositiveNumber);
    sub->add_option("--eps", eps, "epsilon for the limit model")
        ->check(CLI::Range(1e-12, 0.999999));
    sub->add_option("--tol", tolerance, "tolerance override")->each([&](const std::string&) {
      tolerance_set = true;
    });
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "write output to this path");
    sub->add_option("--cache", cache_path, "spectrum cache path (default: $SPECTRA_CACHE)");
    sub->add_option("--level", level, "verification level")->check(CLI::IsMember({"fast", "full"}));
  };

  CLI::App* eig = app.add_subcommand("eig", "lowest eigenvalues at (k, alpha)");
  CLI::App* minimize = app.add_subcommand("minimize", "locate and certify the band minimum");
  CLI::App* table1 = app.add_subcommand("table1", "band-minimum regression table for k = 1..10");
  CLI::App* bnds = app.add_subcommand("bounds", "closed-form constants and bound curves");
  CLI::App* limit = app.add_subcommand("limit", "large-k limit model roots");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  for (CLI::App* sub : {eig, minimize, table1, bnds, limit, verify})
    add_common(sub, sub == eig || sub == limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // configuration errors map to exit code 2
  }

  RunConfig cfg;
  try {
    cfg.k_list = parse_k_list(k_text);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (alpha_set) cfg.alpha = alpha;
  cfg.j_max = jmax;
  cfg.eps = eps;
  if (tolerance_set) cfg.tolerance = tolerance;
  cfg.output_format = format == "json" ? OutputFormat::Json
                      : format == "csv" ? OutputFormat::Csv
                                        : OutputFormat::Text;
  if (!out_path.empty()) cfg.output_path = out_path;
  if (!cache_path.empty()) cfg.cache_path = cache_path;
  cfg.level = level == "full" ? spectra::verify::Level::Full : spectra::verify::Level::Fast;

  if (eig->parsed()) cfg.command = Command::Eig;
  if (minimize->parsed()) cfg.command = Command::Minimize;
  if (table1->parsed()) cfg.command = Command::Table1;
  if (bnds->parsed()) cfg.command = Command::Bounds;
  if (limit->parsed()) cfg.command = Command::Limit;
  if (verify->parsed()) cfg.command = Command::Verify;

  try {
    return run_command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
