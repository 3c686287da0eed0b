// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#include "matisk/types.hpp"

#include <stdexcept>
#include <string>

namespace matisk {

int SystemConfig::bits_per_symbol() const {
  int bits = 0;
  for (int m = psk_order; m > 1; m >>= 1) ++bits;
  return bits;
}

void SystemConfig::validate() const {
  if (n_subcarriers < 1)
    throw std::invalid_argument("config: n_subcarriers must be >= 1");
  if (repetition < n_subcarriers)
    throw std::invalid_argument("config: repetition T must be >= N");
  if (psk_order < 2 || (psk_order & (psk_order - 1)) != 0)
    throw std::invalid_argument("config: psk_order must be a power of two >= 2");
  if (chip_period_s <= 0.0)
    throw std::invalid_argument("config: chip_period_s must be positive");
  if (oversampling < 4)
    throw std::invalid_argument("config: oversampling must be >= 4");
  const int w = window_offset();
  if (w < 0 || w > repetition - n_subcarriers)
    throw std::invalid_argument("config: window offset must satisfy 0 <= W <= T - N");
  if (pulse.shape == PulseShape::GaussianFilteredRect && pulse.bt_product <= 0.0)
    throw std::invalid_argument("config: pulse bt_product must be positive");
}

}  // namespace matisk
