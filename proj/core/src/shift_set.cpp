// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#include "matisk/shift_set.hpp"

#include <numbers>
#include <stdexcept>

namespace matisk {

PhaseShiftSet shift_set(int m_order, const std::vector<std::uint8_t>& omega) {
  if (m_order < 2) throw std::invalid_argument("shift_set: M must be >= 2");
  if (omega.size() != static_cast<std::size_t>(m_order - 1))
    throw std::invalid_argument("shift_set: omega must have length M - 1");

  PhaseShiftSet set;
  set.omega = omega;
  set.shifts.resize(m_order);
  set.shifts[0] = 0.0;
  for (int m = 1; m < m_order; ++m) {
    set.shifts[m] = 2.0 * std::numbers::pi * m / m_order -
                    2.0 * std::numbers::pi * (omega[m - 1] ? 1.0 : 0.0);
  }
  return set;
}

}  // namespace matisk
