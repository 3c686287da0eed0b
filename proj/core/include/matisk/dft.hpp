// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_DFT_HPP
#define MATISK_DFT_HPP

#include <complex>
#include <vector>

namespace matisk {

// In-place forward complex FFT (FFTW backend, any length).
void fft_inplace(std::vector<std::complex<double>>& x);

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x);

}  // namespace matisk

#endif
