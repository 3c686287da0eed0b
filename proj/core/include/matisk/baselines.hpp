// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_BASELINES_HPP
#define MATISK_BASELINES_HPP

#include <span>
#include <vector>

#include "matisk/signal.hpp"
#include "matisk/types.hpp"

namespace matisk {

// Single-carrier reference waveforms the multi-carrier scheme is compared
// against: binary/quaternary GMSK, repetition-coded GMSK variants, and
// linear PSK with root-raised-cosine pulses.
struct BaselineSpec {
  enum class Kind { GmskBinary, GmskQuaternary, GmskRepetition, LinearPskRrc };
  Kind kind = Kind::GmskBinary;
  double bt = 0.3;               // GMSK variants
  double rolloff = 0.22;         // LinearPskRrc
  int repetition = 1;            // chips per symbol (1 = no repetition)
  double repeated_shift = 1.5707963267948966;  // shift mapped to symbol 0
  int psk_order = 2;
  int rrc_span_symbols = 16;     // RRC truncation, each side
};

// Differential shift constellation of a GMSK baseline: binary {+pi/2,
// -pi/2} (0 maps to +pi/2 as in GSM), quaternary Gray-mapped
// {+-pi/4, +-3pi/4}. For GmskRepetition the set is {+-pi/2, +-3pi/2}
// reordered so symbol 0 maps to repeated_shift.
std::vector<double> gmsk_shift_table(const BaselineSpec& spec);

// CPFSK synthesis of a GMSK baseline over the given data symbols. The data
// stream is differentially precoded; with repetition R every symbol spans
// R chips and the symbol-0 shift repeats between transitions. cfg supplies
// chip period, oversampling and pulse truncation (BT comes from spec).
IqSignal gmsk_waveform(const BaselineSpec& spec, std::span<const int> symbols,
                       const SystemConfig& cfg);

// Unit-energy root-raised-cosine taps, O samples per symbol, truncated to
// +-span_symbols.
std::vector<double> rrc_taps(double rolloff, int span_symbols, int oversampling,
                             double symbol_period_s);

// Linear M-PSK pulse-amplitude modulation with RRC pulses. The symbol
// period is cfg.chip_period_s. Output is not constant envelope.
IqSignal rrc_psk_waveform(const BaselineSpec& spec, std::span<const int> symbols,
                          const SystemConfig& cfg);

// peak-to-average power ratio, dB
double crest_factor_db(const IqSignal& signal);

}  // namespace matisk

#endif
