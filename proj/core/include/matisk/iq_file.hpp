// Copyright (C) 2026 matisk contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef MATISK_IQ_FILE_HPP
#define MATISK_IQ_FILE_HPP

#include <string>

#include "matisk/signal.hpp"

namespace matisk {

// Binary IQ container, little-endian throughout:
//   magic "MTSK", version u16 (= 1), sample_rate_hz f64, sample_count u64,
//   then sample_count interleaved (re, im) float32 pairs.
inline constexpr std::uint16_t kIqFileVersion = 1;

void write_iq(const std::string& path, const IqSignal& signal);

// Throws std::runtime_error on bad magic, unsupported version, or a
// payload shorter than the declared sample count.
IqSignal read_iq(const std::string& path);

}  // namespace matisk

#endif
