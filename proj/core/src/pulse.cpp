// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#include "matisk/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace matisk {

namespace {

// Gaussian-filtered rectangle: convolution of a one-chip rectangle with a
// Gaussian of 3-dB bandwidth B = bt / T_c, written as a difference of two
// Gaussian error integrals. Unit area before truncation; t in seconds,
// centered on the chip.
double gauss_rect(double t, double bt, double tc) {
  const double sigma = std::sqrt(std::numbers::ln2) / (2.0 * std::numbers::pi * bt) * tc;
  const double a = 1.0 / (sigma * std::numbers::sqrt2);
  return 0.5 / tc * (std::erf((t + 0.5 * tc) * a) - std::erf((t - 0.5 * tc) * a));
}

// area of gauss_rect over [-half, half], fine trapezoid
double gauss_rect_area(double half, double bt, double tc) {
  const int n = 4096;
  const double dt = 2.0 * half / n;
  double acc = 0.5 * (gauss_rect(-half, bt, tc) + gauss_rect(half, bt, tc));
  for (int i = 1; i < n; ++i) acc += gauss_rect(-half + i * dt, bt, tc);
  return acc * dt;
}

}  // namespace

double FrequencyPulse::g_max() const {
  return *std::max_element(g.begin(), g.end());
}

FrequencyPulse make_pulse(const PulseSpec& spec, double chip_period_s,
                          int oversampling) {
  if (chip_period_s <= 0.0)
    throw std::invalid_argument("make_pulse: chip period must be positive");
  if (oversampling < 4)
    throw std::invalid_argument("make_pulse: oversampling must be >= 4");
  if (spec.truncation_chips < 1)
    throw std::invalid_argument("make_pulse: truncation_chips must be >= 1");
  if (spec.tail_chips < 0)
    throw std::invalid_argument("make_pulse: tail_chips must be >= 0");

  FrequencyPulse p;
  p.chip_period_s = chip_period_s;
  p.oversampling = oversampling;

  const double tc = chip_period_s;
  const int O = oversampling;

  if (spec.shape == PulseShape::Rect) {
    // L = 1 by definition, no tails
    p.nominal_chips = 1;
    p.tail_chips = 0;
    p.g.assign(static_cast<std::size_t>(O) + 1, 1.0 / tc);
  } else {
    if (spec.bt_product <= 0.0)
      throw std::invalid_argument("make_pulse: bt_product must be positive");
    const int L = spec.truncation_chips;
    // reject truncations that chop off more than 1 % of the pulse area
    const double inside = gauss_rect_area(0.5 * L * tc, spec.bt_product, tc);
    if (inside < 0.99)
      throw std::invalid_argument(
          "make_pulse: truncation_chips=" + std::to_string(L) + " holds only " +
          std::to_string(inside * 100.0) + " % of the pulse area (need >= 99 %)");
    p.nominal_chips = L;
    p.tail_chips = spec.tail_chips;
    const int S = p.support_chips();
    const double half = 0.5 * S * tc;
    p.g.resize(static_cast<std::size_t>(S) * O + 1);
    for (std::size_t i = 0; i < p.g.size(); ++i) {
      const double t = static_cast<double>(i) / O * tc - half;
      p.g[i] = std::max(gauss_rect(t, spec.bt_product, tc), 0.0);
    }
  }

  // renormalize to exact unit area (trapezoid rule on the sample grid)
  const double dt = tc / O;
  double area = 0.5 * (p.g.front() + p.g.back());
  for (std::size_t i = 1; i + 1 < p.g.size(); ++i) area += p.g[i];
  area *= dt;
  for (double& v : p.g) v /= area;

  // q = cumulative trapezoid of g; ends at exactly 1 by construction
  p.q.resize(p.g.size());
  p.q[0] = 0.0;
  double acc = 0.0;
  for (std::size_t i = 1; i < p.g.size(); ++i) {
    acc += 0.5 * (p.g[i - 1] + p.g[i]) * dt;
    p.q[i] = acc;
  }
  p.q.back() = 1.0;  // clamp the last rounding step
  return p;
}

}  // namespace matisk
