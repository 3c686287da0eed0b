// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_PIPELINE_HPP
#define MATISK_PIPELINE_HPP

#include <vector>

#include "matisk/demodulator.hpp"
#include "matisk/inband.hpp"
#include "matisk/types.hpp"

namespace matisk {

// Noiseless synth -> demod loop over a random frame of n_symbols columns.
DemodReport run_loopback(const SystemConfig& cfg, int n_symbols);

struct SweepPoint {
  int repetition = 0;
  double sir_db = 0.0;
  double sir_soft_db = 0.0;
  long symbol_errors = 0;
};

// Repeats the loopback for T = t_min..t_max (window offset tracking its
// T - N default unless pinned in cfg).
std::vector<SweepPoint> sir_sweep(const SystemConfig& cfg, int t_min, int t_max,
                                  int n_symbols);

}  // namespace matisk

#endif
