// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_SHIFT_SET_HPP
#define MATISK_SHIFT_SET_HPP

#include <cstdint>
#include <vector>

namespace matisk {

// The M differential phase shifts of one subcarrier.
//
// shifts[0] = 0 and shifts[m] = 2*pi*m/M - 2*pi*omega[m-1], so every shift
// is congruent to the base M-PSK angle mod 2*pi but the sign of the
// transient frequency excursion is steered by the binary vector omega.
struct PhaseShiftSet {
  std::vector<std::uint8_t> omega;  // length M-1
  std::vector<double> shifts;       // length M, radians, shifts[0] = 0

  int order() const { return static_cast<int>(shifts.size()); }
};

// Builds the shift set for an M-ary constellation. omega must have length
// M - 1; throws std::invalid_argument otherwise.
PhaseShiftSet shift_set(int m_order, const std::vector<std::uint8_t>& omega);

}  // namespace matisk

#endif
