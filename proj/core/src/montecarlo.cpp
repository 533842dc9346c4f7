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

#include "erravg/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "erravg/random.hpp"

namespace erravg {

void MomentAccumulator::add(double x, double y) {
  ++n_;
  const double dx = x - mean_x_;
  const double dy = y - mean_y_;
  const double inv_n = 1.0 / static_cast<double>(n_);
  mean_x_ += dx * inv_n;
  mean_y_ += dy * inv_n;
  cxx_ += dx * (x - mean_x_);
  cyy_ += dy * (y - mean_y_);
  cxy_ += dx * (y - mean_y_);
}

void MomentAccumulator::merge(const MomentAccumulator& o) {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(o.n_);
  const double n = na + nb;
  const double dx = o.mean_x_ - mean_x_;
  const double dy = o.mean_y_ - mean_y_;
  cxx_ += o.cxx_ + dx * dx * na * nb / n;
  cyy_ += o.cyy_ + dy * dy * na * nb / n;
  cxy_ += o.cxy_ + dx * dy * na * nb / n;
  mean_x_ = (na * mean_x_ + nb * o.mean_x_) / n;
  mean_y_ = (na * mean_y_ + nb * o.mean_y_) / n;
  n_ += o.n_;
}

double MomentAccumulator::var_x() const { return n_ > 1 ? cxx_ / static_cast<double>(n_ - 1) : 0.0; }
double MomentAccumulator::var_y() const { return n_ > 1 ? cyy_ / static_cast<double>(n_ - 1) : 0.0; }
double MomentAccumulator::cov_xy() const { return n_ > 1 ? cxy_ / static_cast<double>(n_ - 1) : 0.0; }

Observable Observable::success(std::string name) { return {Kind::success, std::move(name), {}, 0, 0}; }
Observable Observable::probability(FockState target, std::string name) {
  return {Kind::probability, std::move(name), std::move(target), 0, 0};
}
Observable Observable::conditional_probability(FockState target, std::string name) {
  return {Kind::conditional_probability, std::move(name), std::move(target), 0, 0};
}
Observable Observable::mode_expectation(std::size_t mode, std::string name) {
  return {Kind::mode_expectation, std::move(name), {}, mode, 0};
}
Observable Observable::coincidence(std::size_t a, std::size_t b, std::string name) {
  return {Kind::coincidence, std::move(name), {}, a, b};
}
Observable Observable::conditional_coincidence(std::size_t a, std::size_t b, std::string name) {
  return {Kind::conditional_coincidence, std::move(name), {}, a, b};
}

namespace {

constexpr std::uint64_t kChunk = 1024;

// (numerator, success) for one observable given un-normalised kept-outcome
// probabilities.
std::pair<double, double> evaluate(const Observable& o, const std::vector<FockState>& outcomes,
                                   const std::vector<double>& probs, double success) {
  double value = 0.0;
  switch (o.kind) {
    case Observable::Kind::success:
      return {success, success};
    case Observable::Kind::probability:
    case Observable::Kind::conditional_probability:
      for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i] == o.target) value += probs[i];
      break;
    case Observable::Kind::mode_expectation:
      for (std::size_t i = 0; i < outcomes.size(); ++i) value += outcomes[i][o.mode_a] * probs[i];
      break;
    case Observable::Kind::coincidence:
    case Observable::Kind::conditional_coincidence:
      for (std::size_t i = 0; i < outcomes.size(); ++i)
        value += static_cast<double>(outcomes[i][o.mode_a]) * outcomes[i][o.mode_b] * probs[i];
      break;
  }
  return {value, success};
}

void validate(const MCConfig& c) {
  if (c.trials == 0) throw std::invalid_argument("MCConfig: trials must be >= 1");
  const std::size_t kept = c.circuit.kept_modes.size();
  if (kept == 0) throw std::invalid_argument("MCConfig: circuit has no kept modes");
  if (c.input.mode_count() != kept)
    throw std::invalid_argument("MCConfig: input must be defined over the kept modes");
  for (const auto& o : c.observables) {
    if ((o.kind == Observable::Kind::probability || o.kind == Observable::Kind::conditional_probability) &&
        (o.target.mode_count() != kept || o.target.photons() != c.input.photons()))
      throw std::invalid_argument("MCConfig: observable '" + o.name + "' has an incompatible target");
    if (o.mode_a >= kept || o.mode_b >= kept)
      throw std::invalid_argument("MCConfig: observable '" + o.name + "' mode out of range");
  }
}

struct TrialEvaluator {
  explicit TrialEvaluator(const MCConfig& c)
      : config(c),
        embedded(c.input.embed(c.circuit.kept_modes, c.circuit.circuit.mode_count())),
        columns(occupied_modes(embedded)),
        projector(embedded, columns, c.circuit.kept_modes) {}

  // Fills `probs` with un-normalised kept-outcome probabilities and returns
  // P(success); `keys` points at the matching outcomes.
  double evaluate_realization(const NoiseRealization& r) {
    double success = 0.0;
    if (config.full_distribution) {
      const NetworkMatrix u = compile(config.circuit.circuit, r);
      const auto post = postselect(output_distribution(u, embedded), config.circuit.kept_modes);
      success = post.p_success;
      full_keys.clear();
      probs.clear();
      if (post.conditional) {
        for (const auto& [s, p] : post.conditional->entries()) {
          full_keys.push_back(s);
          probs.push_back(p * success);
        }
      }
      keys = &full_keys;
      return success;
    }
    const NetworkMatrix cols = compile_columns(config.circuit.circuit, r, columns);
    projector.amplitudes(cols, amps);
    probs.resize(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      probs[i] = std::norm(amps[i]);
      success += probs[i];
    }
    keys = &projector.outcomes();
    return success;
  }

  void values(const NoiseRealization& r, std::vector<std::pair<double, double>>& out) {
    const double success = evaluate_realization(r);
    out.resize(config.observables.size());
    for (std::size_t k = 0; k < config.observables.size(); ++k)
      out[k] = evaluate(config.observables[k], *keys, probs, success);
  }

  void operator()(std::uint64_t trial, std::vector<MomentAccumulator>& acc) {
    auto rng = trial_stream(config.master_seed, trial);
    values(sample_realization(config.circuit.circuit, rng), xy);
    for (std::size_t k = 0; k < xy.size(); ++k) acc[k].add(xy[k].first, xy[k].second);
  }

  const MCConfig& config;
  FockState embedded;
  std::vector<std::size_t> columns;
  Projector projector;
  const std::vector<FockState>* keys = nullptr;
  std::vector<Complex> amps;
  std::vector<double> probs;
  std::vector<FockState> full_keys;
  std::vector<std::pair<double, double>> xy;
};

// Runs `trial(evaluator, index, accumulators)` over all trials in fixed
// chunks and merges the chunk accumulators in chunk order.
template <class Trial>
std::vector<MomentAccumulator> run_chunked(const MCConfig& config, Trial trial) {
  const std::uint64_t chunks = (config.trials + kChunk - 1) / kChunk;
  const std::size_t obs = config.observables.size();
  std::vector<std::vector<MomentAccumulator>> partial(chunks, std::vector<MomentAccumulator>(obs));

  unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    TrialEvaluator eval(config);
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(config.trials, begin + kChunk);
      for (std::uint64_t t = begin; t < end; ++t) trial(eval, t, partial[c]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<MomentAccumulator> total(obs);
  for (const auto& chunk : partial)
    for (std::size_t k = 0; k < obs; ++k) total[k].merge(chunk[k]);
  return total;
}

MCEstimate finish(const Observable& o, const MomentAccumulator& a) {
  MCEstimate e;
  e.trials = a.count();
  const double n = static_cast<double>(a.count());
  if (!o.is_ratio()) {
    e.mean = a.mean_x();
    e.std_error = std::sqrt(std::max(0.0, a.var_x()) / n);
    return e;
  }
  if (a.mean_y() <= 0.0) {
    e.mean = std::nan("");
    e.std_error = std::nan("");
    return e;
  }
  const double ratio = a.mean_x() / a.mean_y();
  const double var = a.var_x() - 2.0 * ratio * a.cov_xy() + ratio * ratio * a.var_y();
  e.mean = ratio;
  e.std_error = std::sqrt(std::max(0.0, var) / n) / a.mean_y();
  return e;
}

}  // namespace

std::vector<MCResult> run(const MCConfig& config) {
  validate(config);
  const auto total = run_chunked(config, [](TrialEvaluator& eval, std::uint64_t t,
                                            std::vector<MomentAccumulator>& acc) { eval(t, acc); });
  std::vector<MCResult> out;
  for (std::size_t k = 0; k < total.size(); ++k)
    out.push_back({config.observables[k].name, finish(config.observables[k], total[k])});
  return out;
}

std::vector<MCResult> run_slopes(const MCConfig& config, double v1, double v2) {
  if (!(v1 >= 0.0 && v2 > v1)) throw std::invalid_argument("run_slopes: need 0 <= v1 < v2");
  MCConfig unit = config;
  unit.circuit.circuit = config.circuit.circuit.with_variance(1.0);
  validate(unit);

  // Noiseless ratio values for the linearisation x/y ~ x - x0 * y.
  std::vector<double> x0(unit.observables.size(), 0.0);
  {
    TrialEvaluator eval(unit);
    std::vector<std::pair<double, double>> xy;
    eval.values(zero_realization(unit.circuit.circuit), xy);
    for (std::size_t k = 0; k < xy.size(); ++k) x0[k] = xy[k].second > 0.0 ? xy[k].first / xy[k].second : 0.0;
  }

  const double s1 = std::sqrt(v1);
  const double s2 = std::sqrt(v2);
  const double dv = v2 - v1;
  const auto total = run_chunked(unit, [&](TrialEvaluator& eval, std::uint64_t t,
                                          std::vector<MomentAccumulator>& acc) {
    auto rng = trial_stream(unit.master_seed, t);
    const NoiseRealization z = sample_realization(unit.circuit.circuit, rng);
    NoiseRealization r = z;
    std::vector<std::pair<double, double>> a;
    std::vector<std::pair<double, double>> b;
    for (std::size_t i = 0; i < r.deltas.size(); ++i) r.deltas[i] = s1 * z.deltas[i];
    eval.values(r, a);
    for (std::size_t i = 0; i < r.deltas.size(); ++i) r.deltas[i] = s2 * z.deltas[i];
    eval.values(r, b);
    for (std::size_t k = 0; k < a.size(); ++k) {
      double d = b[k].first - a[k].first;
      if (unit.observables[k].is_ratio()) d -= x0[k] * (b[k].second - a[k].second);
      acc[k].add(d / dv);
    }
  });

  std::vector<MCResult> out;
  for (std::size_t k = 0; k < total.size(); ++k) {
    MCEstimate e;
    e.trials = total[k].count();
    e.mean = total[k].mean_x();
    e.std_error = std::sqrt(std::max(0.0, total[k].var_x()) / static_cast<double>(e.trials));
    out.push_back({unit.observables[k].name, e});
  }
  return out;
}

const MCEstimate& find(const std::vector<MCResult>& results, const std::string& name) {
  for (const auto& r : results)
    if (r.name == name) return r.estimate;
  throw std::out_of_range("no Monte Carlo result named '" + name + "'");
}

std::vector<VarianceScanRow> variance_scan(const Circuit& target, const VarianceScanOptions& options) {
  if (options.seeds < 2) throw std::invalid_argument("variance_scan: need at least two seeds");
  const Circuit noisy = target.with_variance(options.v);
  const std::size_t m = target.mode_count();
  std::vector<VarianceScanRow> rows;
  for (std::size_t n : options.redundancies) {
    const EncodedCircuit enc = encode_average_whole(noisy, {n, options.encoder, Strategy::whole});
    std::vector<MomentAccumulator> acc(m * m);
    for (std::uint64_t s = 0; s < options.seeds; ++s) {
      auto rng = trial_stream(options.master_seed, s);
      const auto r = sample_realization(enc.circuit, rng);
      const NetworkMatrix cols = compile_columns(enc.circuit, r, enc.kept_modes);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Complex z = cols(static_cast<Eigen::Index>(enc.kept_modes[i]), static_cast<Eigen::Index>(j));
          acc[i * m + j].add(z.real(), z.imag());
        }
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const auto& a = acc[i * m + j];
        rows.push_back({n, i, j, a.mean_x(), a.mean_y(), a.var_x(), a.var_y()});
      }
  }
  return rows;
}

double total_variance(const std::vector<VarianceScanRow>& rows, std::size_t n) {
  double t = 0.0;
  bool any = false;
  for (const auto& r : rows)
    if (r.n == n) {
      t += r.var_re + r.var_im;
      any = true;
    }
  if (!any) throw std::invalid_argument("total_variance: no rows for that redundancy");
  return t;
}

}  // namespace erravg
