// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#include "matisk/dft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace matisk {

namespace {
// FFTW's planner is not thread-safe; execution of a plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void fft_inplace(std::vector<std::complex<double>>& x) {
  if (x.empty()) throw std::invalid_argument("fft: empty input");
  fftw_complex* data = reinterpret_cast<fftw_complex*>(x.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(x.size()), data, data,
                            FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fft: planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x) {
  auto y = x;
  fft_inplace(y);
  return y;
}

}  // namespace matisk
