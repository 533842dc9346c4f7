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

#include "erravg/analytics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace erravg {

std::string LinearInV::to_string() const {
  std::string s = constant.to_string();
  if (slope == Rational(0)) return s;
  const Rational mag = slope.num() < 0 ? -slope : slope;
  const std::string term = (mag == Rational(1) ? std::string() : mag.to_string() + " ") + "v";
  if (constant == Rational(0)) return (slope.num() < 0 ? "-" : "") + term;
  return s + (slope.num() < 0 ? " - " : " + ") + term;
}

}  // namespace erravg

namespace erravg::analytics {

namespace {

void require_v(double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("variance must be >= 0");
}

void require_n(std::size_t n) {
  if (n == 0) throw std::invalid_argument("redundancy N must be >= 1");
}

double inv(std::size_t n) {
  require_n(n);
  return 1.0 / static_cast<double>(n);
}

void require_chain(const ChainParams& p) {
  require_v(p.v);
  require_n(p.n);
}

void require_round(int n) {
  if (n < 1) throw std::invalid_argument("recurrence round n must be >= 1");
  if (n > 62) throw std::invalid_argument("recurrence round n too large");
}

void require_recurrence(const RecurrenceParams& r) {
  if (r.a1 <= 0 || r.b1 <= 0) throw std::invalid_argument("recurrence a1, b1 must be positive");
}

}  // namespace

double mean_phase_factor(double v) {
  require_v(v);
  return std::exp(-v / 2.0);
}

double commuting_mean_scale(const GeneratorNoise& g) {
  if (!g.involutory)
    throw UnsupportedError("commuting_mean_scale: non-involutory generators give a state-dependent decay");
  double exponent = 0.0;
  for (double s : g.sigmas) {
    if (!(s >= 0.0)) throw std::invalid_argument("commuting_mean_scale: sigma must be >= 0");
    exponent += s * s;
  }
  return std::exp(-exponent / 2.0);
}

double sp_success(double v, std::size_t n) { return 1.0 + v * inv(n) / 2.0 - v / 2.0; }

double sp_correct_nopost(double v, std::size_t n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  return 1.0 - (2.0 * nn - 1.0) * v / (4.0 * nn);
}

double sp_correct_post(double v, std::size_t n) { return 1.0 - v * inv(n) / 4.0; }

double sp_success_exact(double v, std::size_t n) {
  require_v(v);
  const double q = inv(n);
  return (1.0 + q + (1.0 - q) * std::exp(-v)) / 2.0;
}

double tp_expect_coinc(double v) { return 1.0 - v; }

double tp_coincidence_post(double v, std::size_t n) { return 1.0 - v * inv(n) / 2.0; }

double tp_success(double v, std::size_t n) { return 1.0 - v + v * inv(n) / 2.0; }

double chain_correct_noavg(const ChainParams& p) {
  require_v(p.v);
  const double mv = static_cast<double>(p.m) * p.v;
  return 1.0 - mv / 4.0 + mv * mv / 16.0;
}

double chain_success_avg_whole(const ChainParams& p) {
  require_chain(p);
  const double mv = static_cast<double>(p.m) * p.v;
  return 1.0 - (1.0 - inv(p.n)) * (mv - mv * mv / 2.0);
}

double chain_correct_avg_whole(const ChainParams& p) {
  require_chain(p);
  const double mv = static_cast<double>(p.m) * p.v;
  const double q = 1.0 - inv(p.n);
  const double numerator = 1.0 - (mv - mv * mv / 4.0 + q * (mv - mv * mv / 2.0)) / 4.0;
  const double denominator = 1.0 - q * (mv / 2.0 - mv * mv / 4.0);
  return numerator / denominator;
}

double chain_success_avg_each(const ChainParams& p) {
  require_chain(p);
  const double step = 1.0 - (p.v - p.v * p.v / 2.0) * (1.0 - inv(p.n));
  return std::pow(step, static_cast<double>(p.m));
}

double chain_correct_avg_each(const ChainParams& p) {
  require_chain(p);
  const double mv = static_cast<double>(p.m) * p.v;
  const double x = chain_success_avg_each(p);
  const double numerator = 0.75 - mv / 4.0 + mv * mv / 16.0 + x / 4.0;
  const double denominator = 0.5 + x / 2.0;
  return numerator / denominator;
}

double chain_success_avg_whole_first_order(const ChainParams& p) {
  require_chain(p);
  return 1.0 - (1.0 - inv(p.n)) * static_cast<double>(p.m) * p.v;
}

double chain_success_avg_each_first_order(const ChainParams& p) {
  require_chain(p);
  return std::pow(1.0 - p.v * (1.0 - inv(p.n)), static_cast<double>(p.m));
}

double variance_predicted(double v, std::size_t m, std::size_t n) {
  require_v(v);
  return v * static_cast<double>(m) * inv(n);
}

double variance_max() { return std::numbers::pi * std::numbers::pi / 3.0; }

LinearInV recurrence_correct_coefficients(const RecurrenceParams& r, int n) {
  require_recurrence(r);
  require_round(n);
  const std::int64_t p = std::int64_t{1} << (n - 1);
  return {Rational(1), -Rational(p * r.a1 + (p - 1), p * r.b1)};
}

LinearInV recurrence_wrong_coefficients(const RecurrenceParams& r, int n) {
  require_recurrence(r);
  require_round(n);
  const std::int64_t p = std::int64_t{1} << (n - 1);
  return {Rational(0), Rational(r.a1, p * r.b1)};
}

LinearInV recurrence_success_coefficients(const RecurrenceParams& r, int n) {
  require_recurrence(r);
  require_round(n);
  const std::int64_t p = std::int64_t{1} << (n - 1);
  return {Rational(1), -Rational((p - 1) * (r.a1 + 1), p * r.b1)};
}

LinearInV recurrence_correct_post_coefficients(const RecurrenceParams& r, int n) {
  require_recurrence(r);
  require_round(n);
  const std::int64_t p = std::int64_t{1} << (n - 1);
  return {Rational(1), -Rational(r.a1, p * r.b1)};
}

LinearInV recurrence_asymptote_success_coefficients(const RecurrenceParams& r) {
  require_recurrence(r);
  return {Rational(1), -Rational(r.a1 + 1, r.b1)};
}

double recurrence_correct(const RecurrenceParams& r, int n, double v) {
  return recurrence_correct_coefficients(r, n).at(v);
}
double recurrence_wrong(const RecurrenceParams& r, int n, double v) {
  return recurrence_wrong_coefficients(r, n).at(v);
}
double recurrence_success(const RecurrenceParams& r, int n, double v) {
  return recurrence_success_coefficients(r, n).at(v);
}
double recurrence_correct_post(const RecurrenceParams& r, int n, double v) {
  return recurrence_correct_post_coefficients(r, n).at(v);
}
double recurrence_asymptote_success(const RecurrenceParams& r, double v) {
  return recurrence_asymptote_success_coefficients(r).at(v);
}

double multiphoton_success(unsigned k, std::size_t n, double sigma) {
  const double nn = static_cast<double>(n);
  return std::exp(-static_cast<double>(k) * nn * nn * sigma * sigma / 2.0);
}

}  // namespace erravg::analytics
