// Copyright 2026 The erravg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "erravg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "erravg/analytics.hpp"
#include "erravg/circuits.hpp"
#include "erravg/csv.hpp"
#include "erravg/montecarlo.hpp"
#include "erravg/random.hpp"
#include "erravg/reference_tables.hpp"
#include "erravg/validation.hpp"

#ifndef ERRAVG_VERSION
#define ERRAVG_VERSION "0.0.0"
#endif

namespace erravg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Context {
  std::string name;
  const ExperimentParams& params;
  json parameters = json::object();
  ExperimentOutput output;

  fs::path path(const std::string& file) const { return params.out_dir / file; }

  void write(const std::string& file, const CsvTable& table) {
    table.write(path(file));
    output.files.push_back(path(file));
  }

  // gnuplot script plotting `ys` against `x` from `file`.
  void plot(const std::string& file, const std::string& x, const std::vector<std::string>& ys,
            bool logx = false) {
    if (!params.plot_script) return;
    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel '" << x << "'\n";
    if (logx) gp << "set logscale x 2\n";
    gp << "plot ";
    for (std::size_t i = 0; i < ys.size(); ++i)
      gp << (i ? ", \\\n     " : "") << "'" << file << "' using '" << x << "':'" << ys[i]
         << "' with linespoints title '" << ys[i] << "'";
    gp << "\n";
    const std::string script = name + ".gp";
    write_text(path(script), gp.str());
    output.files.push_back(path(script));
  }

  void finish() {
    json m;
    m["experiment"] = name;
    m["version"] = ERRAVG_VERSION;
    m["seed"] = params.seed;
    m["parameters"] = parameters;
    json files = json::array();
    for (const auto& f : output.files) files.push_back(f.filename().string());
    m["files"] = files;
    const std::string manifest = name + ".manifest.json";
    write_json(path(manifest), m);
    output.files.push_back(path(manifest));
  }
};

std::vector<std::size_t> redundancies(const ExperimentParams& p, std::vector<std::size_t> defaults) {
  if (p.n) return {*p.n};
  return defaults;
}

EncodedCircuit encode_n(const Circuit& c, std::size_t n, Encoder encoder, Strategy strategy) {
  if (n == 1) return unencoded(c);
  return encode(c, EncodingScheme{n, encoder, strategy});
}

std::vector<MCResult> simulate(const EncodedCircuit& enc, const FockState& input, std::vector<Observable> obs,
                               std::uint64_t trials, const ExperimentParams& p) {
  MCConfig cfg;
  cfg.trials = trials;
  cfg.master_seed = p.seed;
  cfg.circuit = enc;
  cfg.input = input;
  cfg.observables = std::move(obs);
  cfg.workers = p.workers;
  return run(cfg);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// ---------------------------------------------------------------------------

void fig1(Context& ctx) {
  const auto& p = ctx.params;
  const double v = p.v.value_or(0.5);
  const auto ns = redundancies(p, {1, 2, 4, 8, 16});
  const std::uint64_t trials = p.trials.value_or(20000);
  ctx.parameters = {{"v", v}, {"N", ns}, {"trials", trials}, {"encoder", to_string(p.encoder)},
                    {"strategy", to_string(p.strategy)}};

  CsvTable t({"v", "N", "strategy", "encoder", "trials", "seed", "correct", "correct_se", "wrong", "wrong_se",
              "error", "error_se", "post_correct", "post_wrong", "post_se"});
  const FockState in{1, 0};
  for (auto n : ns) {
    const auto enc = encode_n(mz_circuit(v), n, p.encoder, p.strategy);
    const auto res = simulate(enc, in,
                              {Observable::probability({1, 0}, "correct"), Observable::probability({0, 1}, "wrong"),
                               Observable::success(), Observable::conditional_probability({1, 0}, "post")},
                              trials, p);
    const auto& c = find(res, "correct");
    const auto& w = find(res, "wrong");
    const auto& s = find(res, "p_success");
    const auto& post = find(res, "post");
    t.row() << v << n << std::string(to_string(p.strategy)) << std::string(to_string(p.encoder)) << trials
            << p.seed << c.mean << c.std_error << w.mean << w.std_error << 1.0 - s.mean << s.std_error
            << post.mean << 1.0 - post.mean << post.std_error;
    ctx.output.summary.push_back("N=" + std::to_string(n) + " correct=" + format_double(c.mean) +
                                 " wrong=" + format_double(w.mean) + " error=" + format_double(1.0 - s.mean));
  }
  ctx.write("fig1.csv", t);
  ctx.plot("fig1.csv", "N", {"correct", "wrong", "error", "post_correct"}, true);
}

void fig4(Context& ctx) {
  const auto& p = ctx.params;
  const double v = p.v.value_or(0.1);
  const auto ns = redundancies(p, {1, 2, 4, 8, 16, 32});
  const std::uint64_t trials = p.trials.value_or(100000);
  ctx.parameters = {{"v", v}, {"N", ns}, {"trials", trials}, {"encoder", to_string(p.encoder)},
                    {"strategy", to_string(p.strategy)}};

  CsvTable t({"v", "N", "strategy", "encoder", "trials", "seed", "p_success", "p_success_se", "p_success_exact",
              "p_success_first_order", "p_correct_post", "p_correct_post_se", "p_correct_post_first_order",
              "p_correct", "p_correct_se", "p_correct_first_order"});
  for (auto n : ns) {
    const auto enc = encode_n(mz_circuit(v), n, p.encoder, p.strategy);
    const auto res = simulate(enc, {1, 0},
                              {Observable::success(), Observable::conditional_probability({1, 0}, "post"),
                               Observable::probability({1, 0}, "correct")},
                              trials, p);
    const auto& s = find(res, "p_success");
    const auto& post = find(res, "post");
    const auto& c = find(res, "correct");
    t.row() << v << n << std::string(to_string(p.strategy)) << std::string(to_string(p.encoder)) << trials
            << p.seed << s.mean << s.std_error << analytics::sp_success_exact(v, n) << analytics::sp_success(v, n)
            << post.mean << post.std_error << analytics::sp_correct_post(v, n) << c.mean << c.std_error
            << analytics::sp_correct_nopost(v, n);
    ctx.output.summary.push_back("N=" + std::to_string(n) + " p_success=" + format_double(s.mean) +
                                 " p_correct_post=" + format_double(post.mean));
  }
  ctx.write("fig4.csv", t);
  ctx.plot("fig4.csv", "N", {"p_success", "p_success_exact", "p_correct_post"}, true);
}

void fig6(Context& ctx) {
  const auto& p = ctx.params;
  const double v = p.v.value_or(0.005);
  const auto ns = redundancies(p, {2, 4, 16});
  const std::size_t m_max = p.m.value_or(20);
  const std::uint64_t trials = p.trials.value_or(10000);
  ctx.parameters = {{"v", v}, {"N", ns}, {"M_max", m_max}, {"trials", trials},
                    {"encoder", to_string(p.encoder)}};

  CsvTable t({"v", "N", "M", "encoder", "trials", "seed", "noavg_formula", "noavg_mc", "noavg_mc_se",
              "whole_formula", "whole_mc", "whole_mc_se", "each_formula", "each_mc", "each_mc_se"});
  const auto correct = [] { return std::vector{Observable::conditional_probability({1, 0}, "correct")}; };
  for (auto n : ns)
    for (std::size_t m = 1; m <= m_max; ++m) {
      const Circuit chain = phase_chain_circuit(m, v);
      const analytics::ChainParams cp{m, v, n};
      const auto a = find(simulate(unencoded(chain), {1, 0}, correct(), trials, p), "correct");
      const auto w = find(simulate(encode_n(chain, n, p.encoder, Strategy::whole), {1, 0}, correct(), trials, p),
                          "correct");
      const auto e = find(simulate(encode_n(chain, n, p.encoder, Strategy::each), {1, 0}, correct(), trials, p),
                          "correct");
      t.row() << v << n << m << std::string(to_string(p.encoder)) << trials << p.seed
              << analytics::chain_correct_noavg(cp) << a.mean << a.std_error
              << analytics::chain_correct_avg_whole(cp) << w.mean << w.std_error
              << analytics::chain_correct_avg_each(cp) << e.mean << e.std_error;
    }
  ctx.output.summary.push_back(std::to_string(t.size()) + " rows, N in {" + join(ns) + "}");
  ctx.write("fig6.csv", t);
  ctx.plot("fig6.csv", "M", {"noavg_formula", "whole_formula", "each_formula"});
}

void fig7(Context& ctx) {
  const auto& p = ctx.params;
  std::vector<std::pair<double, std::size_t>> cases{{0.005, 4}, {0.005, 16}, {0.1, 16}};
  if (p.v || p.n) cases = {{p.v.value_or(0.005), p.n.value_or(16)}};
  const std::size_t m_max = p.m.value_or(20);
  const std::uint64_t trials = p.trials.value_or(10000);
  json jcases = json::array();
  for (const auto& [v, n] : cases) jcases.push_back({{"v", v}, {"N", n}});
  ctx.parameters = {{"cases", jcases}, {"M_max", m_max}, {"trials", trials},
                    {"encoder", to_string(p.encoder)}};

  CsvTable t({"v", "N", "M", "encoder", "trials", "seed", "whole_first_order", "whole_second_order", "whole_mc",
              "whole_mc_se", "each_first_order", "each_second_order", "each_mc", "each_mc_se"});
  for (const auto& [v, n] : cases)
    for (std::size_t m = 1; m <= m_max; ++m) {
      // The success formulas describe a photon that crosses every shifter.
      const Circuit chain = phase_line_circuit(m, v);
      const analytics::ChainParams cp{m, v, n};
      const auto w = find(simulate(encode_n(chain, n, p.encoder, Strategy::whole), {1},
                                   {Observable::success()}, trials, p),
                          "p_success");
      const auto e = find(simulate(encode_n(chain, n, p.encoder, Strategy::each), {1},
                                   {Observable::success()}, trials, p),
                          "p_success");
      t.row() << v << n << m << std::string(to_string(p.encoder)) << trials << p.seed
              << analytics::chain_success_avg_whole_first_order(cp) << analytics::chain_success_avg_whole(cp)
              << w.mean << w.std_error << analytics::chain_success_avg_each_first_order(cp)
              << analytics::chain_success_avg_each(cp) << e.mean << e.std_error;
    }
  ctx.output.summary.push_back(std::to_string(t.size()) + " rows over " + std::to_string(cases.size()) +
                               " (v, N) cases");
  ctx.write("fig7.csv", t);
  ctx.plot("fig7.csv", "M", {"whole_first_order", "whole_second_order", "each_first_order", "each_second_order"});
}

void fig8(Context& ctx) {
  const auto& p = ctx.params;
  const double v = p.v.value_or(0.1);
  const std::size_t m = p.m.value_or(15);
  const std::size_t n = p.n.value_or(4);
  const std::uint64_t runs = p.trials.value_or(5000);
  ctx.parameters = {{"v", v}, {"M", m}, {"N", n}, {"runs", runs}, {"bins", 100}};

  CsvTable t({"v", "M", "N", "seed", "run", "noavg", "whole", "each"});
  std::vector<std::vector<PhaseSample>> samples(3);
  for (std::uint64_t r = 0; r < runs; ++r) {
    const auto phases = phase_chain_run(v, m, n, p.seed, r);
    auto row = t.row();
    row << v << m << n << p.seed << r;
    for (std::size_t s = 0; s < 3; ++s) {
      if (phases[s]) {
        row << phases[s]->value();
        samples[s].push_back(*phases[s]);
      } else {
        row << std::nan("");
      }
    }
  }
  ctx.write("fig8.csv", t);

  std::vector<Histogram> h;
  for (const auto& s : samples) h.push_back(phase_histogram(s));
  CsvTable ht({"v", "M", "N", "seed", "bin_lo", "bin_hi", "noavg", "whole", "each"});
  for (std::size_t b = 0; b + 1 < h[0].edges.size(); ++b)
    ht.row() << v << m << n << p.seed << h[0].edges[b] << h[0].edges[b + 1] << std::uint64_t{h[0].counts[b]}
             << std::uint64_t{h[1].counts[b]} << std::uint64_t{h[2].counts[b]};
  ctx.write("fig8_histogram.csv", ht);

  const char* names[] = {"noavg", "whole", "each"};
  for (std::size_t s = 0; s < 3; ++s)
    if (samples[s].size() >= 2)
      ctx.output.summary.push_back(std::string(names[s]) + " variance=" + format_double(sample_variance(samples[s])));
  ctx.plot("fig8_histogram.csv", "bin_hi", {"noavg", "whole", "each"});
}

void variance_row(CsvTable& t, double v, std::size_t m, std::size_t n, std::uint64_t runs, std::uint64_t seed) {
  const auto pv = phase_chain_variances(v, m, n, runs, seed);
  const double linear = analytics::variance_predicted(v, m, 1);
  const double averaged = analytics::variance_predicted(v, m, n);
  t.row() << v << static_cast<double>(m) * v << n << m << runs << seed << pv.noavg << pv.whole << pv.each << linear
          << averaged << analytics::variance_max() << pv.whole / averaged << pv.each / averaged << pv.undefined;
}

const std::vector<std::string> kVarianceHeader{
    "v",         "Mv",          "N",         "M",           "runs",         "seed",       "var_noavg",  "var_whole",
    "var_each",  "pred_noavg",  "pred_avg",  "var_max",     "whole_ratio",  "each_ratio", "undefined"};

void fig10(Context& ctx) {
  const auto& p = ctx.params;
  const double v = p.v.value_or(0.1);
  const std::size_t n = p.n.value_or(4);
  const std::size_t m_max = p.m.value_or(15);
  const std::uint64_t runs = p.trials.value_or(50000);
  ctx.parameters = {{"v", v}, {"N", n}, {"M_max", m_max}, {"runs", runs}};

  CsvTable t(kVarianceHeader);
  for (std::size_t m = 1; m <= m_max; ++m) variance_row(t, v, m, n, runs, p.seed);
  ctx.output.summary.push_back(std::to_string(t.size()) + " rows, M = 1.." + std::to_string(m_max));
  ctx.write("fig10.csv", t);
  ctx.plot("fig10.csv", "M", {"var_noavg", "var_whole", "var_each", "pred_noavg", "pred_avg", "var_max"});
}

void fig11(Context& ctx) {
  const auto& p = ctx.params;
  const std::size_t m = p.m.value_or(4);
  const std::size_t n = p.n.value_or(4);
  const std::uint64_t runs = p.trials.value_or(50000);
  std::vector<double> vs;
  if (p.v) {
    vs = {*p.v};
  } else {
    for (int k = 1; k <= 40; ++k) vs.push_back(0.0125 * k);
  }
  ctx.parameters = {{"v", vs}, {"N", n}, {"M", m}, {"runs", runs}};

  CsvTable t(kVarianceHeader);
  for (double v : vs) variance_row(t, v, m, n, runs, p.seed);
  ctx.output.summary.push_back(std::to_string(t.size()) + " rows, M=" + std::to_string(m) +
                               " N=" + std::to_string(n));
  ctx.write("fig11.csv", t);
  ctx.plot("fig11.csv", "v", {"var_noavg", "var_whole", "var_each", "pred_noavg", "pred_avg", "var_max"});
}

void tables4(Context& ctx) {
  const auto& p = ctx.params;
  TableSlopeOptions o;
  if (p.n) o.redundancies = {*p.n};
  if (p.trials) o.trials = *p.trials;
  o.seed = p.seed;
  o.encoder = p.encoder;
  o.workers = p.workers;
  ctx.parameters = {{"N", o.redundancies}, {"v1", o.v1}, {"v2", o.v2}, {"trials", o.trials},
                    {"encoder", to_string(o.encoder)}, {"strategies", json::array({"each", "whole"})}};

  CsvTable t({"input", "strategy", "N", "output", "postselected", "encoder", "v1", "v2", "trials", "seed",
              "reference", "reference_constant", "reference_slope", "constant", "slope", "slope_se"});
  for (const auto& r : estimate_table_slopes(o)) {
    const auto ref = reference_value(r.input, r.strategy, r.n, r.output, r.postselected);
    t.row() << r.input.to_string() << std::string(to_string(r.strategy)) << r.n << r.output.to_string()
            << (r.postselected ? 1 : 0) << std::string(to_string(o.encoder)) << o.v1 << o.v2 << o.trials << o.seed
            << (ref ? ref->to_string() : std::string()) << (ref ? ref->constant.to_double() : std::nan(""))
            << (ref ? ref->slope.to_double() : std::nan("")) << r.constant << r.slope << r.slope_se;
  }
  ctx.output.summary.push_back(std::to_string(t.size()) + " coefficients");
  ctx.write("tables4.csv", t);
}

void scan(Context& ctx) {
  const auto& p = ctx.params;
  VarianceScanOptions o;
  o.v = p.v.value_or(0.1);
  o.redundancies = redundancies(p, {1, 2, 4, 8, 16});
  o.seeds = p.trials.value_or(500);
  o.master_seed = p.seed;
  o.encoder = p.encoder;
  ctx.parameters = {{"v", o.v}, {"N", o.redundancies}, {"seeds", o.seeds}, {"encoder", to_string(o.encoder)},
                    {"circuit", "four_mode"}};

  const auto rows = variance_scan(four_mode_circuit(o.v), o);
  CsvTable t({"v", "N", "encoder", "seeds", "seed", "row", "col", "mean_re", "mean_im", "var_re", "var_im"});
  for (const auto& r : rows)
    t.row() << o.v << r.n << std::string(to_string(o.encoder)) << o.seeds << p.seed << r.row << r.col << r.mean_re
            << r.mean_im << r.var_re << r.var_im;
  ctx.write("scan.csv", t);

  CsvTable s({"v", "N", "encoder", "seeds", "seed", "total_variance", "ratio_to_next"});
  for (std::size_t i = 0; i < o.redundancies.size(); ++i) {
    const double tv = total_variance(rows, o.redundancies[i]);
    const double ratio =
        i + 1 < o.redundancies.size() ? tv / total_variance(rows, o.redundancies[i + 1]) : std::nan("");
    s.row() << o.v << o.redundancies[i] << std::string(to_string(o.encoder)) << o.seeds << p.seed << tv << ratio;
    ctx.output.summary.push_back("N=" + std::to_string(o.redundancies[i]) + " total variance=" + format_double(tv));
  }
  ctx.write("scan_summary.csv", s);
  ctx.plot("scan_summary.csv", "N", {"total_variance"}, true);
}

void validate_experiment(Context& ctx) {
  const auto& p = ctx.params;
  ValidationOptions o;
  o.seed = p.seed;
  o.trials = p.trials;
  o.workers = p.workers;
  ctx.parameters = {{"trials_override", p.trials ? json(*p.trials) : json(nullptr)}};

  CsvTable t({"criterion", "title", "status", "measured", "expected", "seed"});
  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto r = run_criterion(id, o);
    t.row() << id << r.title << std::string(to_string(r.status)) << r.measured << r.expected << p.seed;
    ctx.output.summary.push_back(format(r));
    for (const auto& d : r.details) ctx.output.summary.push_back("    " + d);
    if (r.status == Status::fail) ctx.output.ok = false;
  }
  ctx.write("validate.csv", t);
}

const std::map<std::string, std::function<void(Context&)>, std::less<>>& registry() {
  static const std::map<std::string, std::function<void(Context&)>, std::less<>> r{
      {"fig1", fig1},   {"fig4", fig4},       {"fig6", fig6}, {"fig7", fig7},
      {"fig8", fig8},   {"fig10", fig10},     {"fig11", fig11}, {"tables4", tables4},
      {"scan", scan},   {"validate", validate_experiment},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"fig1", "fig4",    "fig6", "fig7",    "fig8",
                                              "fig10", "fig11", "tables4", "scan", "validate"};
  return names;
}

ExperimentOutput run_experiment(std::string_view name, const ExperimentParams& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("unknown experiment '" + std::string(name) + "'");
  if (params.v && !(*params.v >= 0.0)) throw UsageError("--v must be >= 0");
  if (params.n && (*params.n == 0 || !is_power_of_two(*params.n)))
    throw UsageError("--N must be a power of two");
  if (params.m && *params.m == 0) throw UsageError("--M must be >= 1");
  if (params.trials && *params.trials == 0) throw UsageError("--trials must be >= 1");

  std::error_code ec;
  fs::create_directories(params.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + params.out_dir.string() + "': " + ec.message());

  Context ctx{std::string(name), params, json::object(), {}};
  it->second(ctx);
  ctx.finish();
  return std::move(ctx.output);
}

// ---------------------------------------------------------------------------

namespace {

Eigen::MatrixXd standard_normals(std::size_t m, std::size_t n, std::uint64_t seed, std::uint64_t run) {
  auto rng = trial_stream(seed, run);
  Eigen::MatrixXd z(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < z.rows(); ++k)
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      std::normal_distribution<double> normal(0.0, 1.0);
      z(k, j) = normal(rng);
    }
  return z;
}

}  // namespace

std::vector<std::optional<PhaseSample>> phase_chain_run(double v, std::size_t m, std::size_t n,
                                                        std::uint64_t seed, std::uint64_t run) {
  if (!(v >= 0.0)) throw std::invalid_argument("phase_chain_run: v must be >= 0");
  if (m == 0 || n == 0) throw std::invalid_argument("phase_chain_run: need M, N >= 1");
  const Eigen::MatrixXd deltas = std::sqrt(v) * standard_normals(m, n, seed, run);
  std::vector<std::optional<PhaseSample>> out;
  out.push_back(total_phase(deltas.leftCols(1), PhaseScheme::noavg));
  for (auto scheme : {PhaseScheme::whole, PhaseScheme::each}) {
    try {
      out.emplace_back(total_phase(deltas, scheme));
    } catch (const UndefinedPhaseError&) {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

PhaseVariances phase_chain_variances(double v, std::size_t m, std::size_t n, std::uint64_t runs,
                                     std::uint64_t seed) {
  std::vector<std::vector<PhaseSample>> s(3);
  PhaseVariances pv;
  for (std::uint64_t r = 0; r < runs; ++r) {
    const auto phases = phase_chain_run(v, m, n, seed, r);
    for (std::size_t k = 0; k < 3; ++k) {
      if (phases[k])
        s[k].push_back(*phases[k]);
      else
        ++pv.undefined;
    }
  }
  pv.noavg = sample_variance(s[0]);
  pv.whole = sample_variance(s[1]);
  pv.each = sample_variance(s[2]);
  return pv;
}

std::vector<TableSlopeRow> estimate_table_slopes(const TableSlopeOptions& o) {
  const auto inputs = o.inputs.empty() ? reference_inputs() : o.inputs;
  std::vector<TableSlopeRow> rows;
  for (const auto& input : inputs) {
    const auto outputs = enumerate_states(input.mode_count(), input.photons());
    const FockState correct = input;  // the noiseless network is the identity
    for (auto strategy : o.strategies)
      for (auto n : o.redundancies) {
        const auto enc = encode_n(four_mode_circuit(1.0), n, o.encoder, strategy);
        std::vector<Observable> obs;
        for (const auto& out : outputs) obs.push_back(Observable::probability(out, out.to_string()));
        obs.push_back(Observable::conditional_probability(correct, "post"));

        MCConfig cfg;
        cfg.trials = o.trials;
        cfg.master_seed = o.seed;
        cfg.circuit = enc;
        cfg.input = input;
        cfg.observables = obs;
        cfg.workers = o.workers;
        const auto slopes = run_slopes(cfg, o.v1, o.v2);

        // Exact noiseless values.
        const auto embedded = input.embed(enc.kept_modes, enc.circuit.mode_count());
        const auto post = postselect(output_distribution(compile(enc.circuit, zero_realization(enc.circuit)), embedded),
                                     enc.kept_modes);
        for (std::size_t k = 0; k < obs.size(); ++k) {
          TableSlopeRow r;
          r.input = input;
          r.strategy = strategy;
          r.n = n;
          r.postselected = obs[k].is_ratio();
          r.output = r.postselected ? correct : outputs[k];
          r.constant = post.conditional ? post.conditional->probability(r.output) * (r.postselected ? 1.0 : post.p_success)
                                        : 0.0;
          r.slope = slopes[k].estimate.mean;
          r.slope_se = slopes[k].estimate.std_error;
          rows.push_back(r);
        }
      }
  }
  return rows;
}

}  // namespace erravg
