// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_ANALYSIS_HPP
#define MATISK_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "matisk/signal.hpp"
#include "matisk/types.hpp"

namespace matisk {

enum class PsdWindow { Hann, Rect };

// Two-sided power spectral density, centered at 0 Hz, normalized so the
// linear density integrates to exactly 1.
struct PsdEstimate {
  std::vector<double> freqs_hz;
  std::vector<double> psd;  // linear, 1/Hz
  double resolution_hz = 0.0;

  double bin_width_hz() const;
  double total_power() const;  // should be 1 up to rounding
  // mean linear density over [f_lo, f_hi]
  double band_density(double f_lo_hz, double f_hi_hz) const;
  // density in dB relative to the peak bin
  std::vector<double> db_rel_peak() const;
  // density in dB relative to a reference density (e.g. in-band average)
  std::vector<double> db_rel_density(double ref_density) const;
  // integrated power over [f_lo, f_hi]
  double band_power(double f_lo_hz, double f_hi_hz) const;
};

// Averaged modified periodogram (Welch). overlap is the fractional segment
// overlap in [0, 1). Throws if segment_len exceeds the signal length.
PsdEstimate welch_psd(const IqSignal& signal, int segment_len, double overlap,
                      PsdWindow window = PsdWindow::Hann);

// f[k] = angle(s[k+1] * conj(s[k])) * fs / (2 pi); length len-1.
// Throws on (near) zero-magnitude samples.
std::vector<double> instantaneous_frequency(const IqSignal& signal);

// Ratio of maximal instantaneous-frequency deviations of the repetition
// tones of two schemes (their repeated extreme shifts), measured on
// synthesized waveforms. Both configs must use identical pulses.
double deviation_ratio(const SystemConfig& binary_cfg,
                       const SystemConfig& quaternary_cfg);

// Capacity of the complex AWGN channel and its low-SNR linearization:
// exact = log2(1 + snr), approx = snr / ln 2.
std::pair<double, double> low_snr_rate(double snr_linear);

}  // namespace matisk

#endif
