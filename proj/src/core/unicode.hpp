// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace glyphforge::uni {

// Decodes UTF-8 into scalar values; invalid sequences become U+FFFD and
// never throw (the prompt parser depends on total decoding).
std::u32string decode_utf8(std::string_view s);

std::string encode_utf8(std::u32string_view s);
std::string encode_utf8(char32_t cp);

// Byte offset of the i-th scalar in s (i == scalar count -> s.size()).
std::size_t byte_offset_of_scalar(std::string_view s, std::size_t index);

bool is_whitespace(char32_t cp) noexcept;

// Canonical composition (NFC). Covers full canonical decomposition data
// plus algorithmic Hangul; combining marks are reordered by class first.
std::u32string nfc(std::u32string_view s);
std::string nfc_utf8(std::string_view s);

// Non-whitespace scalar count of an NFC string.
std::size_t count_glyph_scalars(std::u32string_view s) noexcept;
std::size_t count_glyph_scalars_utf8(std::string_view s);

// Maximal runs of non-whitespace scalars, in order.
std::vector<std::string> split_runs(std::string_view s);

// One string per non-whitespace scalar, in order.
std::vector<std::string> split_scalars(std::string_view s);

// Simple one-to-one case mapping for ASCII, Latin-1, Latin Extended-A and
// Cyrillic; other scalars map to themselves.
char32_t to_upper(char32_t cp) noexcept;
char32_t to_lower(char32_t cp) noexcept;
std::string upper_utf8(std::string_view s);
std::string lower_utf8(std::string_view s);

}  // namespace glyphforge::uni
