// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_SIGNAL_HPP
#define MATISK_SIGNAL_HPP

#include <complex>
#include <vector>

namespace matisk {

using cplx = std::complex<double>;

// Complex baseband sample stream. Transmit signals are unit magnitude.
struct IqSignal {
  std::vector<cplx> samples;
  double sample_rate_hz = 0.0;
  double t0_s = 0.0;
};

}  // namespace matisk

#endif
