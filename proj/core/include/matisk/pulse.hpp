// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_PULSE_HPP
#define MATISK_PULSE_HPP

#include <vector>

#include "matisk/types.hpp"

namespace matisk {

// Sampled frequency pulse g and its integral q for one chip.
//
// Both arrays hold S*O + 1 samples on the inclusive grid t_i = i * T_c/O,
// where S = truncation_chips + 2*tail_chips is the sampled support in
// chips. g integrates to exactly 1 (trapezoid rule), so a chip carrying
// increment theta contributes total phase exactly theta; q rises
// monotonically from 0 to 1.
struct FrequencyPulse {
  std::vector<double> g;  // 1/seconds
  std::vector<double> q;  // dimensionless, q[i] = integral of g up to t_i
  double chip_period_s = 0.0;
  int oversampling = 0;
  int nominal_chips = 0;  // L
  int tail_chips = 0;

  int support_chips() const { return nominal_chips + 2 * tail_chips; }
  int lead_chips() const { return tail_chips; }  // pre-chip part of support
  double duration_nominal_s() const { return nominal_chips * chip_period_s; }
  double duration_support_s() const { return support_chips() * chip_period_s; }
  double g_max() const;
};

// Builds the sampled pulse.
//
// GaussianFilteredRect is the GSM-style pulse: a one-chip rectangle
// convolved with a Gaussian whose 3-dB bandwidth is bt_product / T_c,
// truncated to the sampled support and renormalized to unit area.
// Rect is a one-chip rectangle (q is a straight ramp).
//
// Throws std::invalid_argument for non-positive BT, oversampling < 4, or a
// truncation too short to hold >= 99 % of the untruncated pulse area.
FrequencyPulse make_pulse(const PulseSpec& spec, double chip_period_s,
                          int oversampling);

}  // namespace matisk

#endif
