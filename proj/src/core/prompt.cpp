// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/prompt.hpp"

#include <cctype>

#include "core/unicode.hpp"

namespace glyphforge {

namespace {

constexpr std::string_view kClauseOpen = "Text \"";

[[noreturn]] void malformed(std::size_t offset, const std::string& what) {
  fail(Errc::malformed_span,
       "malformed span at byte " + std::to_string(offset) + ": " + what);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_tags(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
    std::string t = trim(piece);
    if (!t.empty()) out.push_back(t);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Parses unsigned digits at i, advancing it; errors if none present.
int parse_int(const std::string& raw, std::size_t& i, const char* what) {
  std::size_t begin = i;
  long v = 0;
  while (i < raw.size() && raw[i] >= '0' && raw[i] <= '9') {
    v = v * 10 + (raw[i] - '0');
    if (v > 1'000'000'000L) malformed(begin, std::string(what) + " id too large");
    ++i;
  }
  if (i == begin) malformed(begin, std::string("expected ") + what + " id digits");
  return static_cast<int>(v);
}

void expect(const std::string& raw, std::size_t& i, std::string_view lit) {
  if (raw.compare(i, lit.size(), lit) != 0)
    malformed(i, "expected '" + std::string(lit) + "'");
  i += lit.size();
}

}  // namespace

DesignPrompt parse_prompt(const std::string& raw) {
  DesignPrompt p;

  std::size_t first_clause = raw.find(kClauseOpen);
  if (first_clause == std::string::npos)
    malformed(raw.size(), "no text clause found");

  // header: caption, optional tags, trailing `Text:` marker
  std::string_view header(raw.data(), first_clause);
  {
    std::string h = trim(header);
    if (h.rfind("Background:", 0) == 0) h = trim(std::string_view(h).substr(11));
    // drop the section marker introducing the clauses
    if (h.size() >= 5 && h.compare(h.size() - 5, 5, "Text:") == 0)
      h = trim(std::string_view(h).substr(0, h.size() - 5));
    std::size_t tags_at = h.find("Tags:");
    bool tags_ok = false;
    if (tags_at != std::string::npos &&
        (tags_at == 0 || std::isspace(static_cast<unsigned char>(h[tags_at - 1])))) {
      tags_ok = true;
    }
    if (tags_ok) {
      p.background_caption = trim(std::string_view(h).substr(0, tags_at));
      p.tags = split_tags(std::string_view(h).substr(tags_at + 5));
    } else {
      p.background_caption = h;
    }
  }

  // clauses
  std::size_t i = first_clause;
  while (i < raw.size()) {
    // skip inter-clause whitespace
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i >= raw.size()) break;
    std::size_t clause_begin = i;
    expect(raw, i, kClauseOpen);

    std::string content;
    bool closed = false;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '\\' && i + 1 < raw.size() && (raw[i + 1] == '"' || raw[i + 1] == '\\')) {
        content.push_back(raw[i + 1]);
        i += 2;
        continue;
      }
      if (c == '"') {
        closed = true;
        ++i;
        break;
      }
      content.push_back(c);
      ++i;
    }
    if (!closed) malformed(clause_begin, "unbalanced quote");

    expect(raw, i, " in <color-");
    int color = parse_int(raw, i, "color");
    expect(raw, i, ">, <");

    std::size_t prefix_begin = i;
    std::string prefix;
    while (i < raw.size() && raw[i] != '-') prefix.push_back(raw[i++]);
    expect(raw, i, "-font-");
    int font_id = parse_int(raw, i, "font");
    expect(raw, i, ">.");

    auto fp = font_prefix_from_code(prefix);
    if (!fp)
      fail(Errc::unknown_font_prefix, "unknown font prefix '" + prefix +
                                          "' at byte " + std::to_string(prefix_begin));

    TextSpan span;
    span.content = uni::nfc_utf8(content);
    if (uni::count_glyph_scalars_utf8(span.content) == 0)
      malformed(clause_begin, "span content is blank");
    span.color_id = color;
    span.font = FontRef{*fp, font_id};
    switch (*fp) {
      case FontPrefix::cn: span.language = Lang::cn; break;
      case FontPrefix::jp: span.language = Lang::jp; break;
      case FontPrefix::kr: span.language = Lang::kr; break;
      case FontPrefix::en: span.language = Lang::en; break;
    }
    p.spans.push_back(std::move(span));
  }

  if (p.spans.empty()) malformed(first_clause, "no well-formed spans");
  return p;
}

std::string serialize_prompt(const DesignPrompt& p) {
  std::string out = "Background: " + p.background_caption;
  if (!p.tags.empty()) {
    out += " Tags: ";
    for (std::size_t i = 0; i < p.tags.size(); ++i) {
      if (i) out += ", ";
      out += p.tags[i];
    }
  }
  out += " Text: ";
  for (std::size_t i = 0; i < p.spans.size(); ++i) {
    const TextSpan& s = p.spans[i];
    if (i) out += ' ';
    out += "Text \"";
    for (char c : s.content) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += "\" in <color-" + std::to_string(s.color_id) + ">, <" +
           font_prefix_code(s.font.prefix) + "-font-" + std::to_string(s.font.id) +
           ">.";
  }
  return out;
}

}  // namespace glyphforge
