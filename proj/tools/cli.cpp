#include "cli.hpp"

#include "goesv/ensembles.hpp"
#include "goesv/experiments.hpp"
#include "goesv/linalg.hpp"
#include "goesv/models.hpp"
#include "goesv/parallel.hpp"
#include "goesv/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace goesv::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 20240601;
  std::size_t samples = 0;
  int shards = 1;
  std::string format = "csv";
  std::string output;
  std::string histogram;
  int bins = 50;
  // experiment parameters
  std::vector<int> orders;
  std::vector<int> super_orders;
  std::vector<int> ks;
  std::vector<double> radii;
  std::vector<int> betas;
  std::vector<int> alphas;
  int m = 2;
  double t = 1.0;
  double a = 0.5;
  std::string model = "goe-abs";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// A table of rows with a fixed header, written as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // which columns are numeric in JSON
  std::vector<bool> numeric;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json obj;
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (!numeric[c])
            obj[columns[c]] = row[c];
          else if (row[c] == "true" || row[c] == "false")
            obj[columns[c]] = row[c] == "true";
          else
            obj[columns[c]] = std::strtod(row[c].c_str(), nullptr);
        }
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
      os << '\n';
    }
  }
};

Table record_table(const Records& recs) {
  Table t;
  t.columns = record_columns();
  t.numeric = {false, false, false, false, true, false, true, true, true, false, true};
  for (const auto& r : recs)
    t.rows.push_back({r.experiment, r.check, r.params, r.metric, num(r.value), r.relation, num(r.threshold),
                      r.pass ? "true" : "false", std::to_string(r.seed), code_version(), num(r.wall_seconds)});
  return t;
}

Table histogram_table(const std::vector<std::pair<std::string, std::vector<double>>>& series, int bins) {
  Table t;
  t.columns = {"series", "bin_lo", "bin_hi", "count"};
  t.numeric = {false, true, true, true};
  for (const auto& [name, values] : series) {
    if (values.empty()) continue;
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it, hi = *hi_it;
    if (!(hi > lo)) hi = lo + 1.0;
    hi = std::nextafter(hi, INFINITY);
    const auto counts = histogram(values, lo, hi, static_cast<std::size_t>(bins));
    const double w = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b)
      t.rows.push_back({name, num(lo + b * w), num(lo + (b + 1) * w), std::to_string(counts[b])});
  }
  return t;
}

SortedSpectrum draw_model(const std::string& model, int n, double a, RandStream& r) {
  if (model == "goe") return goe_eigenvalues(r, n);
  if (model == "goe-abs") return goe_singular_values(r, n);
  if (model == "goe-odd") return decimate(goe_singular_values(r, n)).t;
  if (model == "goe-even") return decimate(goe_singular_values(r, n)).s;
  if (model == "ague") return ague_singular_values(r, n);
  if (model == "gue") return gue_singular_values(r, n);
  if (model == "lue") return lue_eigenvalues(r, n, a);
  if (model == "h-chi") return bordered_singular_values(sample_bordered_H(r, n, BorderKind::chi_n_e1));
  if (model == "h-gauss") return bordered_singular_values(sample_bordered_H(r, n, BorderKind::gaussian));
  if (model == "b-pair") return pair_union(build_B_pair(r, n));
  if (model == "r-pair") return pair_union(build_R_pair(r, n));
  if (model == "tridiag") return magnitudes(symmetric_eigenvalues(sample_tridiagonal_T(r, n)));
  throw UsageError("unknown model " + model);
}

const std::vector<std::string> kModels = {"goe", "goe-abs", "goe-odd", "goe-even", "ague", "gue",
                                          "lue", "h-chi",   "h-gauss", "b-pair",   "r-pair", "tridiag"};

int min_order(const std::string& model) {
  if (model == "ague" || model == "b-pair" || model == "r-pair" || model == "tridiag" || model == "goe-even") return 2;
  return 1;
}

void validate(const std::string& sub, const Options& o) {
  require(o.shards >= 1, "--shards must be >= 1");
  require(o.bins >= 1, "--bins must be >= 1");
  for (int n : o.orders) require(n >= 1, "--n must be >= 1");
  for (int n : o.super_orders) require(n >= 1, "--super-n must be >= 1");
  for (int k : o.ks) require(k >= 0, "--k must be >= 0");
  for (double s : o.radii) require(s > 0.0, "--s must be > 0");
  require(o.radii.size() <= 8, "at most 8 values of --s");
  for (int b : o.betas) require(b == 1 || b == 2, "--beta must be 1 or 2");
  for (int a : o.alphas) require(a >= 1, "--alpha must be >= 1");
  require(o.m >= 1, "--m must be >= 1");
  require(o.t > 0.0, "--t must be > 0");
  if (sub == "sample") {
    require(o.orders.size() == 1, "sample takes exactly one --n");
    require(std::find(kModels.begin(), kModels.end(), o.model) != kModels.end(), "unknown --model " + o.model);
    require(o.orders[0] >= min_order(o.model), "--n too small for model " + o.model);
    if (o.model == "lue") require(o.a > -1.0, "--a must be > -1");
  }
  if (sub == "verify-models" || sub == "verify-interlace" || sub == "gaps")
    for (int n : o.orders) require(n >= 2, "--n must be >= 2 for " + sub);
  if (sub == "clt")
    for (int n : o.orders) require(n >= 2, "--n must be >= 2 for clt");
  if (sub == "verify-densities") require(o.orders.empty(), "verify-densities takes no --n");
}

ExperimentConfig config_of(const Options& o) {
  ExperimentConfig c;
  c.orders = o.orders;
  c.ks = o.ks;
  c.radii = o.radii;
  c.betas = o.betas;
  c.alphas = o.alphas;
  c.m = o.m;
  c.t = o.t;
  c.samples = o.samples;
  c.seed = o.seed;
  c.shards = o.shards;
  return c;
}

void append(Records& a, const Records& b) { a.insert(a.end(), b.begin(), b.end()); }

Records run_records(const std::string& sub, const Options& o,
                    std::vector<std::pair<std::string, std::vector<double>>>& hist) {
  ExperimentConfig c = config_of(o);
  Records r;
  if (sub == "verify-models") {
    append(r, run_model_equivalence(c));
    ExperimentConfig s = c;
    s.orders = o.super_orders;
    append(r, run_superposition(s));
  } else if (sub == "verify-interlace") {
    append(r, run_interlace_transform(c));
    append(r, run_interlace_independence(c));
  } else if (sub == "verify-densities") {
    append(r, run_densities(c));
  } else if (sub == "det") {
    append(r, run_determinants(c));
  } else if (sub == "clt") {
    append(r, run_clt(c));
    if (!o.histogram.empty()) {
      const std::size_t N = c.samples ? c.samples : 20000;
      for (int n : c.orders.empty() ? std::vector<int>{2000} : c.orders)
        for (int beta : c.betas.empty() ? std::vector<int>{1, 2} : c.betas)
          hist.emplace_back("n=" + std::to_string(n) + ";beta=" + std::to_string(beta),
                            clt_samples(n, beta, N, c.seed, c.shards));
    }
  } else if (sub == "gaps") {
    append(r, run_gaps(c));
  } else if (sub == "duality") {
    append(r, run_duality(c));
  } else if (sub == "all") {
    ExperimentConfig d;
    d.seed = c.seed;
    d.shards = c.shards;
    append(r, run_model_equivalence(d));
    append(r, run_superposition(d));
    append(r, run_interlace_transform(d));
    append(r, run_interlace_independence(d));
    append(r, run_densities(d));
    append(r, run_determinants(d));
    append(r, run_clt(d));
    append(r, run_gaps(d));
    append(r, run_duality(d));
  }
  return r;
}

Table sample_table(const Options& o, std::vector<std::pair<std::string, std::vector<double>>>& hist) {
  const int n = o.orders[0];
  const std::size_t N = o.samples ? o.samples : 1;
  const auto rows = map_samples<Vector<double>>(N, o.shards, derive_seed(o.seed, 0x73616d70),
                                                [&](RandStream& r, std::size_t) { return draw_model(o.model, n, o.a, r).values; });
  Table t;
  t.columns = {"model", "n", "seed", "sample", "location", "value"};
  t.numeric = {false, true, true, true, true, true};
  const Index width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Index k = 0; k < rows[i].size(); ++k)
      t.rows.push_back({o.model, std::to_string(n), std::to_string(o.seed), std::to_string(i), std::to_string(k + 1),
                        num(rows[i][k])});
  if (!o.histogram.empty())
    for (Index k = 0; k < width; ++k) {
      std::vector<double> col(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][k];
      hist.emplace_back(o.model + ";location=" + std::to_string(k + 1), std::move(col));
    }
  return t;
}

void emit(const Table& t, const std::string& sub, const Options& o, std::ostream& out) {
  std::string path = o.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("GOESV_OUT_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / (sub + "." + o.format)).string();
    }
  }
  if (path.empty()) {
    t.write(out, o.format);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  t.write(f, o.format);
}

void write_file(const Table& t, const std::string& path, const std::string& format) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  t.write(f, format);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Samplers and verification experiments for decimated GOE spectra", "goesv"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--samples", o.samples, "sample count (0 = experiment default)");
    sub->add_option("--shards", o.shards, "worker threads; output does not depend on it");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "output file (default: $GOESV_OUT_DIR/<subcommand>.<format> or stdout)");
    sub->add_option("--emit-histogram", o.histogram, "write binned counts to this file");
    sub->add_option("--bins", o.bins, "histogram bins");
  };
  auto* sample = app.add_subcommand("sample", "draw spectra from one model");
  common(sample);
  sample->add_option("--model", o.model, "model name")->check(CLI::IsMember(kModels));
  sample->add_option("--n", o.orders, "order (m for lue)")->required();
  sample->add_option("--a", o.a, "lue parameter");

  auto* models = app.add_subcommand("verify-models", "sparse models and decimations against dense GOE");
  common(models);
  models->add_option("--n", o.orders, "orders");
  models->add_option("--super-n", o.super_orders, "orders for the superposition check");

  auto* inter = app.add_subcommand("verify-interlace", "interlacing transform and extracted r");
  common(inter);
  inter->add_option("--n", o.orders, "orders for the independence check");

  auto* dens = app.add_subcommand("verify-densities", "density formulas by quadrature");
  common(dens);

  auto* det = app.add_subcommand("det", "determinant factorizations");
  common(det);
  det->add_option("--n", o.orders, "orders");

  auto* clt = app.add_subcommand("clt", "log-determinant central limit theorem");
  common(clt);
  clt->add_option("--n", o.orders, "orders");
  clt->add_option("--beta", o.betas, "1 and/or 2");

  auto* gaps = app.add_subcommand("gaps", "gap probability identities");
  common(gaps);
  gaps->add_option("--n", o.orders, "orders");
  gaps->add_option("--k", o.ks, "counts");
  gaps->add_option("--s", o.radii, "interval radii");

  auto* dual = app.add_subcommand("duality", "integer Wishart duality");
  common(dual);
  dual->add_option("--m", o.m, "order");
  dual->add_option("--alpha", o.alphas, "padding");
  dual->add_option("--k", o.ks, "counts");
  dual->add_option("--t", o.t, "interval end");

  auto* all = app.add_subcommand("all", "every experiment at default sizes");
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    validate(sub, o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::pair<std::string, std::vector<double>>> hist;
  try {
    if (sub == "sample") {
      emit(sample_table(o, hist), sub, o, out);
      if (!o.histogram.empty()) write_file(histogram_table(hist, o.bins), o.histogram, o.format);
      return 0;
    }
    const Records recs = run_records(sub, o, hist);
    emit(record_table(recs), sub, o, out);
    if (!o.histogram.empty() && !hist.empty()) write_file(histogram_table(hist, o.bins), o.histogram, o.format);
    return all_pass(recs) ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    ResultRecord diag;
    diag.experiment = sub;
    diag.check = "error";
    diag.params = e.what();
    diag.metric = "exception";
    diag.value = NAN;
    diag.relation = "info";
    diag.pass = false;
    diag.seed = o.seed;
    emit(record_table({diag}), sub, o, out);
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace goesv::cli
