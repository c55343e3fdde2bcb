// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glyphforge {

enum class Errc : int32_t {
  ok = 0,
  usage = 1,
  partial_failure = 2,
  io = 3,
  malformed_span = 10,
  unknown_font_prefix = 11,
  unparseable_font = 12,
  empty_coverage = 13,
  no_usable_font = 14,
  empty_corpus = 15,
  char_count_unattainable = 16,
  backend_timeout = 17,
  backend_malformed = 18,
  op_not_allowed = 19,
  position_out_of_range = 20,
  unknown_character = 21,
  cannot_fit = 22,
  missing_glyphs = 23,
  background_size_mismatch = 24,
  empty_ground_truth = 25,
  config_invalid = 26,
  scale_out_of_range = 27,
  manifest_corrupt = 28,
  quota_unmet = 29,
};

const char* errc_name(Errc code) noexcept;

// Single exception type carried across the core; converted to status codes
// at the C boundary.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace glyphforge
