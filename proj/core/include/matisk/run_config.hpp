// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_RUN_CONFIG_HPP
#define MATISK_RUN_CONFIG_HPP

#include <string>

#include "matisk/analysis.hpp"
#include "matisk/types.hpp"

namespace matisk {

struct EstimatorSettings {
  int segment_symbols = 8;  // Welch segment length in symbol durations
  double overlap = 0.5;
  PsdWindow window = PsdWindow::Hann;

  int segment_samples(const SystemConfig& cfg) const {
    return segment_symbols * cfg.repetition * cfg.oversampling;
  }
};

// On-disk run description: sectioned key = value text. Unknown sections or
// keys are rejected; every value is validated before any computation.
struct RunConfig {
  SystemConfig system;
  int frame_symbols = 500;  // symbol columns per run, incl. the reference
  EstimatorSettings estimator;
  std::string mask_path;  // optional
};

RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text);

}  // namespace matisk

#endif
