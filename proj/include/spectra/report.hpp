#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/bounds.hpp"
#include "spectra/eigensolver.hpp"
#include "spectra/limit_model.hpp"
#include "spectra/minimizer.hpp"
#include "spectra/spectral_calculus.hpp"
#include "spectra/verify.hpp"

namespace spectra::report {

using nlohmann::json;

enum class Command { Eig, Minimize, Table1, Bounds, Limit, Verify };
enum class OutputFormat { Json, Csv, Text };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::Eig: return "eig";
    case Command::Minimize: return "minimize";
    case Command::Table1: return "table1";
    case Command::Bounds: return "bounds";
    case Command::Limit: return "limit";
    case Command::Verify: return "verify";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::Table1;
  std::vector<int> k_list;
  std::optional<double> alpha;
  int j_max = 3;
  double eps = 0.05;
  std::optional<double> tolerance;  // overrides the table tolerance when set
  OutputFormat output_format = OutputFormat::Text;
  std::optional<std::string> output_path;
  std::optional<std::string> cache_path;
  verify::Level level = verify::Level::Fast;
};

struct ResultRecord {
  std::string schema_version = "1";
  std::string timestamp;
  json config;
  json payload;
  int exit_code = 0;
  std::string text;  // human-readable rendering
};

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Shortest decimal representation that round-trips to the same double.
inline std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline json config_json(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["k_list"] = c.k_list;
  if (c.alpha) j["alpha"] = *c.alpha;
  j["j_max"] = c.j_max;
  j["eps"] = c.eps;
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  j["format"] = c.output_format == OutputFormat::Json   ? "json"
                : c.output_format == OutputFormat::Csv ? "csv"
                                                       : "text";
  if (c.output_path) j["out"] = *c.output_path;
  if (c.cache_path) j["cache"] = *c.cache_path;
  j["level"] = c.level == verify::Level::Full ? "full" : "fast";
  return j;
}

// ---------------------------------------------------------------------------
// cache

class SpectrumCache {
 public:
  explicit SpectrumCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (in) {
      try {
        in >> store_;
      } catch (const json::exception&) {
        store_ = json::object();  // unreadable cache is ignored, not fatal
      }
    }
    if (!store_.is_object()) store_ = json::object();
  }

  static std::string key(const OperatorSpec& spec, const Grid& g, int m) {
    std::ostringstream os;
    os << spec.k << '|' << shortest(spec.alpha) << '|' << spectra::to_string(spec.boundary) << '|'
       << shortest(g.left) << '|' << shortest(g.right) << '|' << g.n << '|' << m;
    return os.str();
  }

  std::optional<Spectrum> lookup(const std::string& key, const Grid& g) const {
    if (!store_.contains(key)) return std::nullopt;
    const json& e = store_.at(key);
    Spectrum s;
    s.eigenvalues = e.at("eigenvalues").get<std::vector<double>>();
    s.error_estimate = e.at("error_estimate").get<double>();
    s.grid_used = g;
    return s;
  }

  void insert(const std::string& key, const Spectrum& s) {
    store_[key] = {{"eigenvalues", s.eigenvalues}, {"error_estimate", s.error_estimate}};
    dirty_ = true;
  }

  void save() {
    if (!dirty_) return;
    std::ofstream out(path_);
    out << store_.dump(1) << '\n';
    dirty_ = false;
  }

 private:
  std::string path_;
  json store_ = json::object();
  bool dirty_ = false;
};

// ---------------------------------------------------------------------------
// CSV

/// RFC-4180 style: comma separator, quoting only where needed, '.' decimals.
inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << csv_escape(header[i]);
    os << "\r\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
      os << "\r\n";
    }
    return os.str();
  }
};

/// Fixed leading columns k, alpha, lambda1..lambda3; remaining columns sorted
/// by name. Missing values render as empty cells.
inline CsvTable csv_from_rows(const std::vector<json>& rows) {
  static const std::vector<std::string> lead = {"k", "alpha", "lambda1", "lambda2", "lambda3"};
  std::vector<std::string> extra;
  for (const json& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (std::find(lead.begin(), lead.end(), it.key()) != lead.end()) continue;
      if (std::find(extra.begin(), extra.end(), it.key()) == extra.end()) extra.push_back(it.key());
    }
  std::sort(extra.begin(), extra.end());
  CsvTable t;
  t.header = lead;
  t.header.insert(t.header.end(), extra.begin(), extra.end());
  for (const json& r : rows) {
    std::vector<std::string> row;
    for (const std::string& col : t.header) {
      if (!r.contains(col)) {
        row.emplace_back();
        continue;
      }
      const json& v = r.at(col);
      if (v.is_number_float())
        row.push_back(shortest(v.get<double>()));
      else
        row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// commands

namespace detail {

/// Ordered fan-out of one job per k. Results are assembled in k order no
/// matter which worker finishes first.
template <class F>
std::vector<json> per_k(const std::vector<int>& ks, F&& job) {
  std::vector<std::future<json>> futures;
  futures.reserve(ks.size());
  for (int k : ks) futures.push_back(std::async(std::launch::async, job, k));
  std::vector<json> out;
  out.reserve(ks.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

inline json certificate_json(const NondegeneracyCertificate& c) {
  return {{"branch", c.branch == NondegeneracyCertificate::Branch::B ? "B" : "A"},
          {"gap_value", c.gap_value},
          {"second_derivative_lower", c.second_derivative_lower},
          {"second_derivative_fd", c.second_derivative_fd}};
}

}  // namespace detail

inline ResultRecord make_record(const RunConfig& cfg) {
  ResultRecord rec;
  rec.timestamp = utc_timestamp();
  rec.config = config_json(cfg);
  return rec;
}

inline ResultRecord cmd_eig(const RunConfig& cfg) {
  ResultRecord rec = make_record(cfg);
  const double alpha = cfg.alpha.value_or(0.0);
  std::optional<SpectrumCache> cache;
  std::string cache_path;
  if (cfg.cache_path)
    cache_path = *cfg.cache_path;
  else if (const char* env = std::getenv("SPECTRA_CACHE"))
    cache_path = env;
  if (!cache_path.empty()) cache.emplace(cache_path);

  std::vector<json> rows;
  std::ostringstream text;
  for (int k : cfg.k_list) {
    OperatorSpec spec{k, alpha, Boundary::WholeLine};
    const Grid g = choose_domain(spec, spectra::detail::eigen_cap(k, alpha, cfg.j_max),
                                 spectra::detail::band_h_max(k));
    const std::string key = SpectrumCache::key(spec, g, cfg.j_max);
    bool cached = false;
    Spectrum s;
    if (cache) {
      if (auto hit = cache->lookup(key, g)) {
        s = *hit;
        cached = true;
      }
    }
    if (!cached) {
      s = lowest_eigenvalues(discretize(spec, g), cfg.j_max);
      if (cache) cache->insert(key, s);
    }
    json row{{"k", k},
             {"alpha", alpha},
             {"error_estimate", s.error_estimate},
             {"cached", cached},
             {"grid_left", g.left},
             {"grid_right", g.right},
             {"grid_n", g.n}};
    for (int j = 0; j < cfg.j_max && j < static_cast<int>(s.eigenvalues.size()); ++j)
      row["lambda" + std::to_string(j + 1)] = s.eigenvalues[j];
    rows.push_back(row);
    text << "k=" << k << " alpha=" << shortest(alpha) << " :";
    for (double v : s.eigenvalues) text << ' ' << shortest(v);
    text << (cached ? "  [cache]" : "") << '\n';
  }
  if (cache) cache->save();
  rec.payload = {{"rows", rows}};
  rec.text = text.str();
  return rec;
}

inline ResultRecord cmd_minimize(const RunConfig& cfg) {
  ResultRecord rec = make_record(cfg);
  std::vector<json> rows = detail::per_k(cfg.k_list, [](int k) {
    const CriticalPointReport r = find_minimum(k);
    const BandPoint bp = band_point(k, r.alpha_min);
    return json{{"k", k},
                {"alpha", r.alpha_min},
                {"lambda1", bp.lambda1},
                {"lambda2", bp.lambda2},
                {"lambda3", bp.lambda3},
                {"alpha_min", r.alpha_min},
                {"lambda_star", r.lambda_star},
                {"bracket_lo", r.bracket.first},
                {"bracket_hi", r.bracket.second},
                {"sign_changes", r.derivative_sign_changes},
                {"scan_lo", r.scan_interval.first},
                {"scan_hi", r.scan_interval.second},
                {"scan_resolution", r.scan_resolution},
                {"certificate", detail::certificate_json(r.certificate)}};
  });
  std::ostringstream text;
  for (const json& r : rows)
    text << "k=" << r["k"] << " alpha_min=" << shortest(r["alpha_min"].get<double>())
         << " lambda_star=" << shortest(r["lambda_star"].get<double>())
         << " sign_changes=" << r["sign_changes"] << '\n';
  rec.payload = {{"rows", rows}};
  rec.text = text.str();
  return rec;
}

inline ResultRecord cmd_table1(const RunConfig& cfg) {
  ResultRecord rec = make_record(cfg);
  const double tol = cfg.tolerance.value_or(0.01);
  std::vector<int> ks(10);
  for (int i = 0; i < 10; ++i) ks[i] = i + 1;
  bool all_ok = true;
  std::vector<json> rows = detail::per_k(ks, [tol](int k) -> json {
    const auto& ref = verify::reference_table()[k - 1];
    try {
      const CriticalPointReport r = find_minimum(k);
      const BandPoint bp = band_point(k, r.alpha_min);
      const double vals[4] = {r.alpha_min, bp.lambda1, bp.lambda2, bp.lambda3};
      const double refs[4] = {ref.alpha_min, ref.lambda1, ref.lambda2, ref.lambda3};
      double max_dev = 0.0;
      json dev = json::array();
      for (int i = 0; i < 4; ++i) {
        dev.push_back(vals[i] - refs[i]);
        max_dev = std::max(max_dev, std::abs(vals[i] - refs[i]));
      }
      return json{{"k", k},
                  {"alpha", r.alpha_min},
                  {"lambda1", bp.lambda1},
                  {"lambda2", bp.lambda2},
                  {"lambda3", bp.lambda3},
                  {"ref_alpha_min", ref.alpha_min},
                  {"ref_lambda1", ref.lambda1},
                  {"ref_lambda2", ref.lambda2},
                  {"ref_lambda3", ref.lambda3},
                  {"deviation", dev},
                  {"max_deviation", max_dev},
                  {"within_tolerance", max_dev <= tol}};
    } catch (const std::exception& e) {
      // per-cell failure: record and continue with the other k
      return json{{"k", k}, {"error", e.what()}, {"within_tolerance", false}};
    }
  });
  std::ostringstream text;
  text << "k   alpha_min  lambda1  lambda2  lambda3  max|dev|  ok\n";
  for (const json& r : rows) {
    if (r.contains("error")) {
      all_ok = false;
      text << r["k"] << "  ERROR: " << r["error"].get<std::string>() << '\n';
      continue;
    }
    if (!r["within_tolerance"].get<bool>()) all_ok = false;
    char line[160];
    std::snprintf(line, sizeof line, "%-3d %9.4f %8.4f %8.4f %8.4f  %8.5f  %s\n",
                  r["k"].get<int>(), r["alpha"].get<double>(), r["lambda1"].get<double>(),
                  r["lambda2"].get<double>(), r["lambda3"].get<double>(),
                  r["max_deviation"].get<double>(), r["within_tolerance"].get<bool>() ? "yes" : "NO");
    text << line;
  }
  rec.payload = {{"rows", rows}, {"tolerance", tol}, {"all_within_tolerance", all_ok}};
  rec.text = text.str();
  rec.exit_code = all_ok ? 0 : 1;
  return rec;
}

inline ResultRecord cmd_bounds(const RunConfig& cfg) {
  ResultRecord rec = make_record(cfg);
  std::vector<json> rows = detail::per_k(cfg.k_list, [](int k) {
    const bounds::BoundsReport r = bounds::make_bounds_report(k);
    json row{{"k", k},
             {"upper_const", r.upper_const},
             {"alpha_star", r.alpha_star},
             {"rho_star", r.rho_star}};
    const auto put = [&row](const char* name, const std::optional<double>& v) {
      if (v) row[name] = *v;
    };
    put("eps", r.eps);
    put("t_hat", r.t_hat);
    put("alpha_hat", r.alpha_hat);
    put("A1", r.a1);
    put("A2", r.a2);
    put("B", r.b_lower);
    put("m_k", r.m_k);
    put("alpha_star_star", r.alpha_star_star);
    put("lambda2_split_lower", r.lambda2_split_lower);
    return row;
  });
  std::ostringstream text;
  for (const json& r : rows) {
    text << "k=" << r["k"] << " alpha_star=" << shortest(r["alpha_star"].get<double>())
         << " upper(0)=" << shortest(r["upper_const"].get<double>());
    if (r.contains("A1")) text << " A1=" << shortest(r["A1"].get<double>());
    if (r.contains("A2")) text << " A2=" << shortest(r["A2"].get<double>());
    text << '\n';
  }
  rec.payload = {{"rows", rows}};
  rec.text = text.str();
  return rec;
}

inline ResultRecord cmd_limit(const RunConfig& cfg) {
  ResultRecord rec = make_record(cfg);
  const double alpha = cfg.alpha.value_or(0.0);
  const int k = cfg.k_list.empty() ? 100 : cfg.k_list.front();
  std::vector<json> rows;
  std::ostringstream text;
  for (int j = 1; j <= cfg.j_max; ++j) {
    json row{{"k", k}, {"alpha", alpha}, {"j", j}, {"eps", cfg.eps}};
    const double lim = limit_eigenvalue(j, alpha);
    row["limit_value"] = lim;
    try {
      const double root = solve_reduced(j, alpha, cfg.eps, k);
      row["reduced_root"] = root;
      row["difference"] = root - lim;
      text << "j=" << j << " reduced_root=" << shortest(root) << " limit=" << shortest(lim)
           << '\n';
    } catch (const std::exception& e) {
      row["error"] = e.what();
      text << "j=" << j << " error: " << e.what() << '\n';
    }
    try {
      const GlueSystem sys = GlueSystem::make(k, alpha, cfg.eps);
      if (row.contains("reduced_root")) {
        const double red = row["reduced_root"].get<double>();
        if (sys.A > red + 0.05 && sys.B > red + 0.05) {
          const double full = num::bisect_root(
              [&](double lam) { return glue_residual(lam, sys); }, red - 0.04, red + 0.04, 1e-13);
          row["glue_root"] = full;
        } else {
          row["glue_note"] = "glue system infeasible at this k (A or B <= lambda)";
        }
      }
    } catch (const std::exception& e) {
      row["glue_note"] = e.what();
    }
    rows.push_back(row);
  }
  rec.payload = {{"rows", rows}};
  rec.text = text.str();
  return rec;
}

inline ResultRecord cmd_verify(const RunConfig& cfg) {
  ResultRecord rec = make_record(cfg);
  const auto checks = verify::run_all(cfg.level);
  int failures = 0;
  std::vector<json> rows;
  std::ostringstream text;
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    rows.push_back(json{{"name", c.name},
                        {"pass", c.pass},
                        {"measured", c.measured},
                        {"threshold", c.threshold},
                        {"detail", c.detail}});
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-58s measured=%.3g threshold=%.3g\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.threshold);
    text << line;
  }
  text << (failures == 0 ? "all checks passed\n" : "FAILURES: " + std::to_string(failures) + "\n");
  rec.payload = {{"level", cfg.level == verify::Level::Full ? "full" : "fast"},
                 {"checks", rows},
                 {"failures", failures}};
  rec.text = text.str();
  rec.exit_code = failures == 0 ? 0 : 1;
  return rec;
}

inline ResultRecord run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Eig: return cmd_eig(cfg);
    case Command::Minimize: return cmd_minimize(cfg);
    case Command::Table1: return cmd_table1(cfg);
    case Command::Bounds: return cmd_bounds(cfg);
    case Command::Limit: return cmd_limit(cfg);
    case Command::Verify: return cmd_verify(cfg);
  }
  throw std::invalid_argument("unknown command");
}

inline json record_json(const ResultRecord& rec) {
  return json{{"schema_version", rec.schema_version},
              {"timestamp", rec.timestamp},
              {"config", rec.config},
              {"payload", rec.payload}};
}

/// Render per the requested format. CSV applies to payloads with a rows array.
inline std::string render(const ResultRecord& rec, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return record_json(rec).dump(1) + "\n";
  if (fmt == OutputFormat::Csv) {
    std::vector<json> rows;
    if (rec.payload.contains("rows"))
      for (const auto& r : rec.payload.at("rows")) {
        json flat;
        for (auto it = r.begin(); it != r.end(); ++it)
          if (!it->is_structured()) flat[it.key()] = *it;
        rows.push_back(flat);
      }
    else if (rec.payload.contains("checks"))
      for (const auto& r : rec.payload.at("checks")) rows.push_back(r);
    return csv_from_rows(rows).dump();
  }
  return rec.text;
}

}  // namespace spectra::report
