// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/json_util.hpp"

namespace glyphforge {

enum class Lang : uint8_t { en, fr, es, de, pt, it, ru, cn, jp, kr };

inline constexpr std::array<Lang, 10> kAllLangs = {
    Lang::en, Lang::fr, Lang::es, Lang::de, Lang::pt,
    Lang::it, Lang::ru, Lang::cn, Lang::jp, Lang::kr};

enum class ScriptClass : uint8_t { alphabetic, character_based };

const char* lang_code(Lang l) noexcept;
std::optional<Lang> lang_from_code(std::string_view code) noexcept;
Lang lang_from_code_or_throw(std::string_view code);

constexpr ScriptClass script_class(Lang l) noexcept {
  return (l == Lang::cn || l == Lang::jp || l == Lang::kr)
             ? ScriptClass::character_based
             : ScriptClass::alphabetic;
}

// Font tags observed in the prompt grammar use only these prefixes.
enum class FontPrefix : uint8_t { en, cn, jp, kr };

const char* font_prefix_code(FontPrefix p) noexcept;
std::optional<FontPrefix> font_prefix_from_code(std::string_view code) noexcept;

// A language's fonts are tagged with its script's prefix.
constexpr FontPrefix font_prefix_for(Lang l) noexcept {
  switch (l) {
    case Lang::cn: return FontPrefix::cn;
    case Lang::jp: return FontPrefix::jp;
    case Lang::kr: return FontPrefix::kr;
    default: return FontPrefix::en;
  }
}

struct FontRef {
  FontPrefix prefix = FontPrefix::en;
  int id = 0;

  bool operator==(const FontRef&) const = default;
  std::string tag() const;  // "en-190"
};

FontRef font_ref_from_tag(std::string_view tag);

struct Rect {
  int x = 0, y = 0, w = 0, h = 0;
  bool operator==(const Rect&) const = default;
};

struct TextSpan {
  std::string content;  // NFC-normalized
  int color_id = 0;
  FontRef font;
  Lang language = Lang::en;
  Rect bbox;  // meaningful inside DesignDocument only

  bool operator==(const TextSpan&) const = default;
};

struct Background {
  enum class Kind : uint8_t { caption, image, solid_black } kind = Kind::solid_black;
  std::string caption;    // kind == caption
  std::string image_ref;  // kind == image

  bool operator==(const Background&) const = default;
};

struct DesignDocument {
  int canvas_w = 0, canvas_h = 0;
  Background background;
  std::vector<std::string> tags;
  std::vector<TextSpan> spans;

  bool operator==(const DesignDocument&) const = default;
};

struct DesignPrompt {
  std::string background_caption;
  std::vector<std::string> tags;
  std::vector<TextSpan> spans;  // bbox ignored

  bool operator==(const DesignPrompt&) const = default;
};

// Non-whitespace scalar count over NFC span contents.
std::size_t glyph_char_count(const std::vector<TextSpan>& spans);

// JSON round-trip. Field order is fixed so serialization is byte-stable.
Json span_to_json(const TextSpan& s);
TextSpan span_from_json(const Json& j);
Json document_to_json(const DesignDocument& d);
DesignDocument document_from_json(const Json& j);

// Bounding boxes must lie within canvas; contents must be non-blank.
void validate_document(const DesignDocument& d);

}  // namespace glyphforge
