// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_INBAND_HPP
#define MATISK_INBAND_HPP

#include <cstdint>
#include <vector>

#include "matisk/matrix.hpp"
#include "matisk/modulator.hpp"
#include "matisk/pulse.hpp"
#include "matisk/types.hpp"

namespace matisk {

// Per-subcarrier omega choice plus the worst-case instantaneous-frequency
// distance from band center that the choice leaves.
struct OmegaAssignment {
  Matrix<std::uint8_t> omega;            // N x (M-1)
  std::vector<double> peak_deviation_hz;  // length N
};

// Extremum of the instantaneous frequency when a single transition with
// the given shift happens on a carrier at f_n. Evaluated numerically on a
// two-symbol probe waveform; returns the instantaneous frequency farthest
// from band center (signed), which is f_n itself when shift = 0.
double peak_instantaneous_freq(double f_n_hz, double shift_rad,
                               const FrequencyPulse& pulse,
                               const SystemConfig& cfg);

// For each subcarrier and each constellation point independently, picks
// omega_m in {0,1} minimizing max(|f_n|, |peak freq|) relative to band
// center. Ties break toward the negative shift (omega_m = 1), so the
// center subcarrier performs -pi rather than +pi.
OmegaAssignment choose_omega(const SystemConfig& cfg, const FrequencyPulse& pulse);

// Subcarrier plans on the grid f_n = (n - N/2) * spacing with
// inband-optimized shift sets.
std::vector<SubcarrierPlan> make_plans(const SystemConfig& cfg,
                                       const FrequencyPulse& pulse);

}  // namespace matisk

#endif
