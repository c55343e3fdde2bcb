// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/error.hpp"

namespace glyphforge {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ok: return "ok";
    case Errc::usage: return "usage";
    case Errc::partial_failure: return "partial_failure";
    case Errc::io: return "io";
    case Errc::malformed_span: return "malformed_span";
    case Errc::unknown_font_prefix: return "unknown_font_prefix";
    case Errc::unparseable_font: return "unparseable_font";
    case Errc::empty_coverage: return "empty_coverage";
    case Errc::no_usable_font: return "no_usable_font";
    case Errc::empty_corpus: return "empty_corpus";
    case Errc::char_count_unattainable: return "char_count_unattainable";
    case Errc::backend_timeout: return "backend_timeout";
    case Errc::backend_malformed: return "backend_malformed";
    case Errc::op_not_allowed: return "op_not_allowed";
    case Errc::position_out_of_range: return "position_out_of_range";
    case Errc::unknown_character: return "unknown_character";
    case Errc::cannot_fit: return "cannot_fit";
    case Errc::missing_glyphs: return "missing_glyphs";
    case Errc::background_size_mismatch: return "background_size_mismatch";
    case Errc::empty_ground_truth: return "empty_ground_truth";
    case Errc::config_invalid: return "config_invalid";
    case Errc::scale_out_of_range: return "scale_out_of_range";
    case Errc::manifest_corrupt: return "manifest_corrupt";
    case Errc::quota_unmet: return "quota_unmet";
  }
  return "unknown";
}

}  // namespace glyphforge
