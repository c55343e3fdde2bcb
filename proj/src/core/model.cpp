// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/model.hpp"

#include "core/unicode.hpp"

namespace glyphforge {

const char* lang_code(Lang l) noexcept {
  switch (l) {
    case Lang::en: return "en";
    case Lang::fr: return "fr";
    case Lang::es: return "es";
    case Lang::de: return "de";
    case Lang::pt: return "pt";
    case Lang::it: return "it";
    case Lang::ru: return "ru";
    case Lang::cn: return "cn";
    case Lang::jp: return "jp";
    case Lang::kr: return "kr";
  }
  return "en";
}

std::optional<Lang> lang_from_code(std::string_view code) noexcept {
  for (Lang l : kAllLangs)
    if (code == lang_code(l)) return l;
  return std::nullopt;
}

Lang lang_from_code_or_throw(std::string_view code) {
  if (auto l = lang_from_code(code)) return *l;
  fail(Errc::config_invalid, "unknown language code '" + std::string(code) + "'");
}

const char* font_prefix_code(FontPrefix p) noexcept {
  switch (p) {
    case FontPrefix::en: return "en";
    case FontPrefix::cn: return "cn";
    case FontPrefix::jp: return "jp";
    case FontPrefix::kr: return "kr";
  }
  return "en";
}

std::optional<FontPrefix> font_prefix_from_code(std::string_view code) noexcept {
  if (code == "en") return FontPrefix::en;
  if (code == "cn") return FontPrefix::cn;
  if (code == "jp") return FontPrefix::jp;
  if (code == "kr") return FontPrefix::kr;
  return std::nullopt;
}

std::string FontRef::tag() const {
  return std::string(font_prefix_code(prefix)) + "-" + std::to_string(id);
}

FontRef font_ref_from_tag(std::string_view tag) {
  auto dash = tag.find('-');
  if (dash == std::string_view::npos)
    fail(Errc::config_invalid, "bad font tag '" + std::string(tag) + "'");
  auto prefix = font_prefix_from_code(tag.substr(0, dash));
  if (!prefix)
    fail(Errc::unknown_font_prefix, "unknown font prefix in '" + std::string(tag) + "'");
  int id = 0;
  auto digits = tag.substr(dash + 1);
  if (digits.empty()) fail(Errc::config_invalid, "bad font tag '" + std::string(tag) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9')
      fail(Errc::config_invalid, "bad font tag '" + std::string(tag) + "'");
    id = id * 10 + (c - '0');
  }
  return FontRef{*prefix, id};
}

std::size_t glyph_char_count(const std::vector<TextSpan>& spans) {
  std::size_t n = 0;
  for (const auto& s : spans) n += uni::count_glyph_scalars_utf8(s.content);
  return n;
}

Json span_to_json(const TextSpan& s) {
  Json j;
  j["text"] = s.content;
  j["color"] = s.color_id;
  j["font"] = s.font.tag();
  j["language"] = lang_code(s.language);
  j["bbox"] = Json::array({s.bbox.x, s.bbox.y, s.bbox.w, s.bbox.h});
  return j;
}

TextSpan span_from_json(const Json& j) {
  TextSpan s;
  if (!j.is_object() || !j.contains("text") || !j.contains("color") || !j.contains("font"))
    fail(Errc::config_invalid, "span object requires text, color, font");
  s.content = uni::nfc_utf8(j.at("text").get<std::string>());
  s.color_id = j.at("color").get<int>();
  s.font = font_ref_from_tag(j.at("font").get<std::string>());
  s.language = j.contains("language")
                   ? lang_from_code_or_throw(j.at("language").get<std::string>())
                   : Lang::en;
  if (j.contains("bbox")) {
    const auto& b = j.at("bbox");
    if (!b.is_array() || b.size() != 4)
      fail(Errc::config_invalid, "bbox must be [x, y, w, h]");
    s.bbox = Rect{b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), b[3].get<int>()};
  }
  return s;
}

Json document_to_json(const DesignDocument& d) {
  Json j;
  j["canvas"] = Json{{"width", d.canvas_w}, {"height", d.canvas_h}};
  Json bg;
  switch (d.background.kind) {
    case Background::Kind::caption:
      bg["kind"] = "caption";
      bg["caption"] = d.background.caption;
      break;
    case Background::Kind::image:
      bg["kind"] = "image";
      bg["image"] = d.background.image_ref;
      break;
    case Background::Kind::solid_black:
      bg["kind"] = "solid_black";
      break;
  }
  j["background"] = bg;
  j["tags"] = d.tags;
  Json spans = Json::array();
  for (const auto& s : d.spans) spans.push_back(span_to_json(s));
  j["spans"] = spans;
  return j;
}

DesignDocument document_from_json(const Json& j) {
  DesignDocument d;
  if (!j.is_object() || !j.contains("canvas") || !j.contains("spans"))
    fail(Errc::config_invalid, "document requires canvas and spans");
  d.canvas_w = j.at("canvas").at("width").get<int>();
  d.canvas_h = j.at("canvas").at("height").get<int>();
  if (j.contains("background")) {
    const auto& bg = j.at("background");
    std::string kind = bg.value("kind", "solid_black");
    if (kind == "caption") {
      d.background.kind = Background::Kind::caption;
      d.background.caption = bg.value("caption", "");
    } else if (kind == "image") {
      d.background.kind = Background::Kind::image;
      d.background.image_ref = bg.value("image", "");
    } else if (kind == "solid_black") {
      d.background.kind = Background::Kind::solid_black;
    } else {
      fail(Errc::config_invalid, "unknown background kind '" + kind + "'");
    }
  }
  if (j.contains("tags"))
    for (const auto& t : j.at("tags")) d.tags.push_back(t.get<std::string>());
  for (const auto& s : j.at("spans")) d.spans.push_back(span_from_json(s));
  return d;
}

void validate_document(const DesignDocument& d) {
  if (d.canvas_w <= 0 || d.canvas_h <= 0)
    fail(Errc::config_invalid, "canvas dimensions must be positive");
  for (std::size_t i = 0; i < d.spans.size(); ++i) {
    const auto& s = d.spans[i];
    if (uni::count_glyph_scalars_utf8(s.content) == 0)
      fail(Errc::config_invalid,
           "span " + std::to_string(i) + " content is blank");
    const Rect& b = s.bbox;
    if (b.w <= 0 || b.h <= 0 || b.x < 0 || b.y < 0 || b.x + b.w > d.canvas_w ||
        b.y + b.h > d.canvas_h)
      fail(Errc::config_invalid,
           "span " + std::to_string(i) + " bbox outside canvas");
  }
}

}  // namespace glyphforge
