// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#include "matisk/modulator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace matisk {

std::vector<int> differential_precode(std::span<const int> symbols, int m_order) {
  std::vector<int> out(symbols.size());
  if (symbols.empty()) return out;
  out[0] = symbols[0];
  for (std::size_t k = 1; k < symbols.size(); ++k) {
    int d = (symbols[k] - symbols[k - 1]) % m_order;
    if (d < 0) d += m_order;
    out[k] = d;
  }
  return out;
}

ChipIncrementStream build_increments(std::span<const int> diff_symbols,
                                     const SubcarrierPlan& plan,
                                     const SystemConfig& cfg) {
  const int T = cfg.repetition;
  const double carrier =
      2.0 * std::numbers::pi * plan.center_freq_hz * cfg.chip_period_s;
  ChipIncrementStream s;
  s.increments.assign(diff_symbols.size() * static_cast<std::size_t>(T), carrier);
  for (std::size_t k = 0; k < diff_symbols.size(); ++k) {
    const int d = diff_symbols[k];
    if (d < 0 || d >= plan.shifts.order())
      throw std::invalid_argument("build_increments: symbol out of range");
    s.increments[k * T] += plan.shifts.shifts[d];
  }
  return s;
}

std::vector<double> phase_trajectory(const ChipIncrementStream& increments,
                                     const FrequencyPulse& pulse,
                                     const SystemConfig& cfg) {
  if (pulse.oversampling != cfg.oversampling ||
      pulse.chip_period_s != cfg.chip_period_s)
    throw std::invalid_argument("synthesize: pulse does not match config");

  const int O = cfg.oversampling;
  const long n_chips = static_cast<long>(increments.increments.size());
  const long n = n_chips * O;
  const long so = static_cast<long>(pulse.g.size()) - 1;  // slivers per pulse
  const long lead = static_cast<long>(pulse.lead_chips()) * O;

  // per-sliver phase weights: w[m] = integral of g over [t_m, t_m+1]
  std::vector<double> w(so);
  for (long m = 0; m < so; ++m) w[m] = pulse.q[m + 1] - pulse.q[m];

  // dphi[j] = phase gained over sample interval (j-1, j]; index 0 collects
  // everything a chip's leading tail contributed before t = 0
  std::vector<double> dphi(static_cast<std::size_t>(n) + 1, 0.0);
  for (long k = 0; k < n_chips; ++k) {
    const double th = increments.increments[k];
    if (th == 0.0) continue;
    const long base = k * O - lead;  // sliver m maps to dphi[base + m + 1]
    long m0 = 0, m1 = so;
    if (base + 1 < 0) {
      // fold pre-history into dphi[0] so phase[0] starts on trajectory
      const long cut = std::min(-(base + 1), so);
      double pre = 0.0;
      for (long m = 0; m < cut; ++m) pre += w[m];
      dphi[0] += th * pre;
      m0 = cut;
    }
    if (base + m1 + 1 > n) m1 = n - base - 1;
    for (long m = m0; m < m1; ++m) dphi[base + m + 1] += th * w[m];
  }

  std::vector<double> phase(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (long j = 0; j < n; ++j) {
    acc += dphi[j];
    phase[j] = acc;
  }
  return phase;
}

IqSignal synthesize(const ChipIncrementStream& increments,
                    const FrequencyPulse& pulse, const SystemConfig& cfg) {
  const auto phase = phase_trajectory(increments, pulse, cfg);
  IqSignal out;
  out.sample_rate_hz = cfg.sample_rate_hz();
  out.samples.resize(phase.size());
  for (std::size_t j = 0; j < phase.size(); ++j)
    out.samples[j] = std::polar(1.0, phase[j]);
  return out;
}

IqSignal synthesize_antenna(const SymbolFrame& frame, const SubcarrierPlan& plan,
                            const FrequencyPulse& pulse, const SystemConfig& cfg) {
  const auto r = static_cast<std::size_t>(plan.index);
  if (r >= frame.symbols.rows)
    throw std::invalid_argument("synthesize_antenna: plan index out of range");
  std::span<const int> row(frame.symbols.row(r), frame.symbols.cols);
  const auto diff = differential_precode(row, cfg.psk_order);
  return synthesize(build_increments(diff, plan, cfg), pulse, cfg);
}

ModulatedFrame modulate_frame(const SymbolFrame& frame,
                              const std::vector<SubcarrierPlan>& plans,
                              const FrequencyPulse& pulse,
                              const SystemConfig& cfg) {
  if (frame.symbols.rows != plans.size() ||
      plans.size() != static_cast<std::size_t>(cfg.n_subcarriers))
    throw std::invalid_argument("modulate_frame: frame/plan dimension mismatch");
  if (frame.symbols.cols < 2)
    throw std::invalid_argument("modulate_frame: need at least 2 symbols");

  ModulatedFrame out;
  out.per_antenna.reserve(plans.size());
  for (const auto& plan : plans)
    out.per_antenna.push_back(synthesize_antenna(frame, plan, pulse, cfg));

  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n_subcarriers));
  out.aggregate.sample_rate_hz = cfg.sample_rate_hz();
  out.aggregate.samples.assign(out.per_antenna.front().samples.size(), {0.0, 0.0});
  for (const auto& sig : out.per_antenna)
    for (std::size_t j = 0; j < sig.samples.size(); ++j)
      out.aggregate.samples[j] += sig.samples[j];
  for (auto& v : out.aggregate.samples) v *= scale;
  return out;
}

IqSignal modulate_aggregate(const SymbolFrame& frame,
                            const std::vector<SubcarrierPlan>& plans,
                            const FrequencyPulse& pulse,
                            const SystemConfig& cfg) {
  if (frame.symbols.rows != plans.size() ||
      plans.size() != static_cast<std::size_t>(cfg.n_subcarriers))
    throw std::invalid_argument("modulate_aggregate: frame/plan dimension mismatch");

  IqSignal agg;
  agg.sample_rate_hz = cfg.sample_rate_hz();
  agg.samples.assign(frame.symbols.cols * static_cast<std::size_t>(cfg.repetition) *
                         cfg.oversampling,
                     {0.0, 0.0});
  for (const auto& plan : plans) {
    const IqSignal sig = synthesize_antenna(frame, plan, pulse, cfg);
    for (std::size_t j = 0; j < sig.samples.size(); ++j)
      agg.samples[j] += sig.samples[j];
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n_subcarriers));
  for (auto& v : agg.samples) v *= scale;
  return agg;
}

namespace {
// rejection-sampled bounded draw; unbiased and identical across platforms
int draw_symbol(std::mt19937_64& rng, int m) {
  const std::uint64_t span = ~std::uint64_t{0};
  const std::uint64_t limit = span - span % static_cast<std::uint64_t>(m);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % static_cast<std::uint64_t>(m));
}
}  // namespace

SymbolFrame random_frame(const SystemConfig& cfg, int n_symbols) {
  if (n_symbols < 2)
    throw std::invalid_argument("random_frame: need at least 2 symbols");
  std::mt19937_64 rng(cfg.seed);
  SymbolFrame frame;
  frame.symbols = Matrix<int>(cfg.n_subcarriers, n_symbols);
  for (std::size_t r = 0; r < frame.symbols.rows; ++r)
    for (std::size_t c = 0; c < frame.symbols.cols; ++c)
      frame.symbols(r, c) = draw_symbol(rng, cfg.psk_order);
  return frame;
}

}  // namespace matisk
