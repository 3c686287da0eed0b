// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_MASK_HPP
#define MATISK_MASK_HPP

#include <string>
#include <vector>

#include "matisk/analysis.hpp"

namespace matisk {

// Piecewise-linear emission mask. Limits are in dB relative to the in-band
// average density. A symmetric mask stores offsets >= 0 and mirrors them.
struct SpectralMask {
  struct Point {
    double offset_hz = 0.0;
    double limit_db = 0.0;
  };
  std::vector<Point> points;  // sorted by offset
  bool symmetric = true;

  double limit_db_at(double offset_hz) const;  // throws outside the span
  double min_offset_hz() const;
  double max_offset_hz() const;
};

// Text format: one `offset_hz limit_db` pair per line, '#' comments, an
// optional line `symmetric` (default) or `twosided`.
SpectralMask load_mask(const std::string& path);
SpectralMask parse_mask(const std::string& text);

struct MaskViolation {
  double freq_hz = 0.0;
  double psd_db = 0.0;
  double limit_db = 0.0;
};

struct MaskReport {
  bool pass = false;
  double worst_margin_db = 0.0;  // min over bins of (limit - psd)
  double worst_freq_hz = 0.0;
  double ref_density = 0.0;  // linear density the limits are relative to
  std::vector<MaskViolation> violations;
};

// Checks every PSD bin against the mask. The reference density is the mean
// PSD over the mask's top-limit (in-band) region. Throws if the mask does
// not cover the PSD span.
MaskReport mask_check(const PsdEstimate& psd, const SpectralMask& mask);

}  // namespace matisk

#endif
