// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_MODULATOR_HPP
#define MATISK_MODULATOR_HPP

#include <span>
#include <vector>

#include "matisk/matrix.hpp"
#include "matisk/pulse.hpp"
#include "matisk/shift_set.hpp"
#include "matisk/signal.hpp"
#include "matisk/types.hpp"

namespace matisk {

// One subcarrier: its grid position, baseband center frequency and the
// differential shift set it transmits with.
struct SubcarrierPlan {
  int index = 0;
  double center_freq_hz = 0.0;
  PhaseShiftSet shifts;
};

// N x K matrix of data symbols in [0, M). Column 0 is the differential
// reference symbol of each subcarrier.
struct SymbolFrame {
  Matrix<int> symbols;
};

// Per-chip total phase increments (radians) for one subcarrier.
struct ChipIncrementStream {
  std::vector<double> increments;
};

// out[0] = in[0]; out[k] = (in[k] - in[k-1]) mod M. Repeated symbols map
// to differential symbol 0, which is what keeps the instantaneous
// frequency constant while a symbol repeats.
std::vector<int> differential_precode(std::span<const int> symbols, int m_order);

// Expands differential symbols to T chips each. Every chip carries the
// carrier increment 2*pi*f_n*T_c (a DFT-row phase progression on the
// subcarrier grid); the first chip of each symbol additionally carries the
// symbol's differential phase shift.
ChipIncrementStream build_increments(std::span<const int> diff_symbols,
                                     const SubcarrierPlan& plan,
                                     const SystemConfig& cfg);

// Phase-pulse superposition phi(t) = sum_k theta_k q(t - (k - lead) T_c),
// sampled at O samples per chip. Returned values are the phase trajectory;
// synthesize() maps it onto the unit circle.
std::vector<double> phase_trajectory(const ChipIncrementStream& increments,
                                     const FrequencyPulse& pulse,
                                     const SystemConfig& cfg);

IqSignal synthesize(const ChipIncrementStream& increments,
                    const FrequencyPulse& pulse, const SystemConfig& cfg);

// Waveform of one frame row (precoding + increments + synthesis).
IqSignal synthesize_antenna(const SymbolFrame& frame, const SubcarrierPlan& plan,
                            const FrequencyPulse& pulse, const SystemConfig& cfg);

struct ModulatedFrame {
  std::vector<IqSignal> per_antenna;
  IqSignal aggregate;  // sum over antennas, scaled by 1/sqrt(N)
};

ModulatedFrame modulate_frame(const SymbolFrame& frame,
                              const std::vector<SubcarrierPlan>& plans,
                              const FrequencyPulse& pulse,
                              const SystemConfig& cfg);

// Aggregate without retaining per-antenna signals (streaming sum).
IqSignal modulate_aggregate(const SymbolFrame& frame,
                            const std::vector<SubcarrierPlan>& plans,
                            const FrequencyPulse& pulse,
                            const SystemConfig& cfg);

// Deterministic random frame: K columns of symbols in [0, M), column 0 is
// the reference. Identical (cfg.seed, K) give identical frames.
SymbolFrame random_frame(const SystemConfig& cfg, int n_symbols);

}  // namespace matisk

#endif
