// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_TYPES_HPP
#define MATISK_TYPES_HPP

#include <cstdint>

namespace matisk {

enum class PulseShape { Rect, GaussianFilteredRect };

// Frequency (chip) pulse description. `truncation_chips` is the nominal
// pulse duration L in chip periods; `tail_chips` retains that many extra
// chips of the Gaussian decay on each side of the nominal support, which
// matters for partition flatness and for inter-carrier leakage at large
// window guards. Rect always has L = 1 and no tails.
struct PulseSpec {
  PulseShape shape = PulseShape::GaussianFilteredRect;
  double bt_product = 0.1;   // 3-dB time-bandwidth product per chip
  int truncation_chips = 8;  // nominal support L, in chips
  int tail_chips = 0;        // retained decay beyond L, per side, in chips
};

// Full parameter set of one multi-carrier CPFSK scheme instance.
//   N subcarriers (one per antenna), T chips per data symbol (rate-1/T
//   repetition), M-ary PSK shifts, chip period T_c, O samples per chip.
struct SystemConfig {
  int n_subcarriers = 64;
  int repetition = 70;
  int psk_order = 4;
  double chip_period_s = 800e-9 / 70.0;
  int oversampling = 16;
  PulseSpec pulse{};
  int window_offset_chips = -1;  // first chip of the FFT window; -1 = T - N
  std::uint64_t seed = 1;

  // throws std::invalid_argument on any violated invariant
  void validate() const;

  double sample_rate_hz() const { return oversampling / chip_period_s; }
  double subcarrier_spacing_hz() const {
    return 1.0 / (n_subcarriers * chip_period_s);
  }
  double symbol_period_s() const { return repetition * chip_period_s; }
  double symbol_rate_hz() const { return 1.0 / symbol_period_s(); }
  int bits_per_symbol() const;
  // aggregate payload rate over all subcarriers, bit/s
  double data_rate_bps() const {
    return n_subcarriers * bits_per_symbol() * symbol_rate_hz();
  }
  int window_offset() const {
    return window_offset_chips < 0 ? repetition - n_subcarriers
                                   : window_offset_chips;
  }
  // baseband center frequency of subcarrier n, f_n = (n - N/2) * spacing
  double center_freq_hz(int n) const {
    return (n - n_subcarriers / 2) * subcarrier_spacing_hz();
  }
};

}  // namespace matisk

#endif
