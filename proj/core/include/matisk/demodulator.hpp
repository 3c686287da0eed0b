// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_DEMODULATOR_HPP
#define MATISK_DEMODULATOR_HPP

#include <vector>

#include "matisk/matrix.hpp"
#include "matisk/modulator.hpp"
#include "matisk/signal.hpp"
#include "matisk/types.hpp"

namespace matisk {

// One complex sample per chip, taken at the quarter-chip point (offset
// O/4 within each chip). Returns a (chips per symbol) x (symbols) matrix.
// Throws if the signal length is not a whole number of symbols.
Matrix<cplx> sample_chips(const IqSignal& signal, const SystemConfig& cfg);

// For each symbol, windows chips [W, W+N) and separates the N subcarriers
// with an N-point DFT. Row n is subcarrier n (bin (n - N/2) mod N),
// normalized by 1/N so an orthogonal unit tone yields a unit bin value.
Matrix<cplx> fft_window_demod(const Matrix<cplx>& chip_matrix,
                              const SystemConfig& cfg);

struct DecodeResult {
  Matrix<int> decisions;  // N x K differential decisions; column 0 = 0
  Matrix<cplx> soft;      // N x K differential products; column 0 = 1
  long erasures = 0;      // vanishing-reference events
};

// soft[k] = bins[k] * conj(bins[k-1]) / |bins[k-1]|^2, derotated by the
// known carrier advance over one symbol (T chips). Decisions pick the
// nearest base M-PSK angle 2*pi*m/M; the omega choice is invisible here
// because the shifts collapse mod 2*pi.
DecodeResult differential_decode(const Matrix<cplx>& bins,
                                 const std::vector<SubcarrierPlan>& plans,
                                 const SystemConfig& cfg);

struct SirReport {
  double sir_db = 0.0;                 // ratio of averages
  double sir_mean_of_ratios_db = 0.0;  // mean of per-subcarrier ratios
  std::vector<double> per_subcarrier_sir_db;
};

// SIR of the differential soft values against the transmitted differential
// symbols: per subcarrier, a single complex gain is fitted first so a
// static rotation is not counted as interference. Error-free input reports
// the 200 dB cap. skip_symbols leading soft columns are excluded (the
// first window sits in the pulse ramp-in of the frame).
SirReport measure_sir(const Matrix<cplx>& soft, const Matrix<int>& tx_diff,
                      int m_order, int skip_symbols = 2);

// Same fit evaluated directly on the FFT bin values against the known
// transmitted absolute phases; this is the figure measured right after
// the FFT and is the headline SIR of the toolkit.
SirReport measure_bin_sir(const Matrix<cplx>& bins, const Matrix<int>& tx_diff,
                          const std::vector<SubcarrierPlan>& plans,
                          const SystemConfig& cfg, int skip_symbols = 2);

// SNR improvement of coherently combining the N window chips.
double combining_gain_db(const SystemConfig& cfg);

struct DemodReport {
  Matrix<int> decisions;
  Matrix<cplx> soft_values;
  double sir_db = 0.0;  // bin-level, ratio of averages
  std::vector<double> per_subcarrier_sir_db;
  double sir_soft_db = 0.0;  // differential-product convention
  double sir_soft_mean_of_ratios_db = 0.0;
  long symbol_errors = 0;  // differential decisions vs transmitted, k >= 2
  long symbols_counted = 0;
  long erasures = 0;
  double combining_gain_db = 0.0;
};

inline constexpr double kSirCapDb = 200.0;

}  // namespace matisk

#endif
