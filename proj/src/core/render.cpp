// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/render.hpp"

#include <algorithm>
#include <cmath>

#include "core/unicode.hpp"
#include "core/vocab.hpp"

namespace glyphforge {

namespace {

constexpr int kMinFontSize = 4;
constexpr int kMaxFontSize = 160;

struct Measured {
  std::vector<std::u32string> tokens;
  std::vector<double> widths;  // at size 1.0 (per font unit scale applied later)
  double space_w = 0;
};

double scalar_advance(const ttf::Font& f, char32_t cp) {
  uint16_t gid = f.glyph_index(cp);
  if (gid == 0 && cp != 0x20) return 0;
  return static_cast<double>(f.advance(gid));
}

Measured measure_tokens(const ttf::Font& f, const std::string& content, Lang language) {
  Measured m;
  for (const std::string& tok : segment(content, language)) {
    std::u32string u = uni::decode_utf8(tok);
    double w = 0;
    for (char32_t cp : u) w += scalar_advance(f, cp);
    m.tokens.push_back(std::move(u));
    m.widths.push_back(w);
  }
  uint16_t space_gid = f.glyph_index(0x20);
  m.space_w = space_gid ? static_cast<double>(f.advance(space_gid))
                        : f.units_per_em() / 4.0;
  return m;
}

struct Layout {
  std::vector<std::size_t> breaks;  // first token index of lines 1..n-1
  double max_line_w = 0;
  std::size_t lines = 0;
  bool ok = false;
};

// Greedy wrap at a given pixel size; join_spaces only for alphabetic text.
Layout wrap(const Measured& m, double scale, bool join_spaces, double inner_w,
            double inner_h, double line_h) {
  Layout out;
  double x = 0;
  bool line_open = false;
  for (std::size_t i = 0; i < m.tokens.size(); ++i) {
    double tw = m.widths[i] * scale;
    if (tw > inner_w) return out;  // single unit wider than the box
    double candidate = line_open ? x + (join_spaces ? m.space_w * scale : 0) + tw : tw;
    if (line_open && candidate > inner_w) {
      out.breaks.push_back(i);
      x = tw;
    } else {
      x = candidate;
    }
    line_open = true;
    out.max_line_w = std::max(out.max_line_w, x);
  }
  out.lines = m.tokens.empty() ? 0 : out.breaks.size() + 1;
  if (static_cast<double>(out.lines) * line_h > inner_h) return out;
  out.ok = true;
  return out;
}

}  // namespace

std::array<uint8_t, 3> Palette::rgb(int color_id) const {
  if (color_id < 0 || static_cast<std::size_t>(color_id) >= colors.size())
    fail(Errc::config_invalid,
         "color id " + std::to_string(color_id) + " outside palette of " +
             std::to_string(colors.size()));
  return colors[static_cast<std::size_t>(color_id)];
}

Palette load_palette(const std::string& path) {
  Json j = load_json_file(path);
  if (!j.is_array() || j.empty()) fail(Errc::config_invalid, path + ": expected array");
  Palette p;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 3)
      fail(Errc::config_invalid, path + ": palette entries are [r,g,b]");
    p.colors.push_back({static_cast<uint8_t>(c[0].get<int>()),
                        static_cast<uint8_t>(c[1].get<int>()),
                        static_cast<uint8_t>(c[2].get<int>())});
  }
  return p;
}

FitResult Renderer::layout_fit(const TextSpan& span, const Rect& box,
                               const FontEntry& font, int max_size,
                               int min_size) const {
  if (min_size > max_size || min_size < 1)
    fail(Errc::config_invalid, "bad font size bounds");
  const ttf::Font& f = catalog_->font(font);
  Measured m = measure_tokens(f, span.content, span.language);
  if (m.tokens.empty()) fail(Errc::config_invalid, "span content is blank");

  bool join = script_class(span.language) == ScriptClass::alphabetic;
  double pad_x = box.w * 0.05;
  double pad_y = box.h * 0.05;
  double inner_w = box.w - 2 * pad_x;
  double inner_h = box.h - 2 * pad_y;
  double upem = f.units_per_em();
  double line_units = static_cast<double>(f.ascender()) - f.descender();
  if (line_units <= 0) line_units = upem;

  for (int size = max_size; size >= min_size; --size) {
    double scale = size / upem;
    double line_h = line_units * scale;
    Layout l = wrap(m, scale, join, inner_w, inner_h, line_h);
    if (!l.ok) continue;
    FitResult r;
    r.font_size = size;
    r.line_breaks = std::move(l.breaks);
    r.ink_bbox =
        Rect{box.x + static_cast<int>(pad_x), box.y + static_cast<int>(pad_y),
             std::min(box.w, static_cast<int>(std::ceil(l.max_line_w))),
             std::min(box.h, static_cast<int>(std::ceil(l.lines * line_h)))};
    return r;
  }
  fail(Errc::cannot_fit, "text does not fit box " + std::to_string(box.w) + "x" +
                             std::to_string(box.h) + " at minimum size " +
                             std::to_string(min_size));
}

void Renderer::draw_spans(Image& canvas, const DesignDocument& doc) const {
  for (const TextSpan& span : doc.spans) {
    const FontEntry& entry = catalog_->get(span.font);
    std::vector<char32_t> missing = catalog_->coverage_check(entry, span.content);
    if (!missing.empty()) {
      std::string scalars;
      for (char32_t cp : missing) {
        if (!scalars.empty()) scalars += ' ';
        scalars += uni::encode_utf8(cp);
      }
      fail(Errc::missing_glyphs, "font " + entry.id.tag() +
                                     " lacks glyphs for: " + scalars);
    }

    const Rect& box = span.bbox;
    int max_size = std::clamp(box.h, kMinFontSize, kMaxFontSize);
    FitResult fit = layout_fit(span, box, entry, max_size, kMinFontSize);

    const ttf::Font& f = catalog_->font(entry);
    double scale = fit.font_size / static_cast<double>(f.units_per_em());
    bool join = script_class(span.language) == ScriptClass::alphabetic;
    Measured m = measure_tokens(f, span.content, span.language);

    double pad_x = box.w * 0.05;
    double pad_y = box.h * 0.05;
    double line_units = static_cast<double>(f.ascender()) - f.descender();
    if (line_units <= 0) line_units = f.units_per_em();
    double line_h = line_units * scale;

    std::vector<raster::Edge> edges;
    double x = box.x + pad_x;
    double baseline = box.y + pad_y + f.ascender() * scale;
    std::size_t next_break = 0;
    for (std::size_t i = 0; i < m.tokens.size(); ++i) {
      if (next_break < fit.line_breaks.size() && fit.line_breaks[next_break] == i) {
        ++next_break;
        x = box.x + pad_x;
        baseline += line_h;
      } else if (i > 0 && join) {
        x += m.space_w * scale;
      }
      for (char32_t cp : m.tokens[i]) {
        uint16_t gid = f.glyph_index(cp);
        if (gid == 0) continue;
        ttf::Outline outline = f.outline(gid);
        if (!outline.empty())
          raster::add_outline(edges, outline, scale, x, baseline);
        x += f.advance(gid) * scale;
      }
    }

    Bitmap mask(canvas.w, canvas.h);
    raster::fill_nonzero(edges, mask);
    auto [r, g, b] = palette_.rgb(span.color_id);
    // clip to the span box: the containment contract is enforced here
    blit_mask(canvas, mask, r, g, b, box.x, box.y, box.w, box.h);
  }
}

Image Renderer::render_glyph_image(const DesignDocument& doc) const {
  validate_document(doc);
  Image canvas(doc.canvas_w, doc.canvas_h, 0, 0, 0);
  draw_spans(canvas, doc);
  return canvas;
}

Image Renderer::render_design_image(const DesignDocument& doc,
                                    const Image& background) const {
  validate_document(doc);
  if (background.w != doc.canvas_w || background.h != doc.canvas_h)
    fail(Errc::background_size_mismatch,
         "background " + std::to_string(background.w) + "x" +
             std::to_string(background.h) + " vs canvas " +
             std::to_string(doc.canvas_w) + "x" + std::to_string(doc.canvas_h));
  Image canvas = background;
  draw_spans(canvas, doc);
  return canvas;
}

Image Renderer::render_design_image(const DesignDocument& doc,
                                    std::array<uint8_t, 3> solid) const {
  validate_document(doc);
  Image canvas(doc.canvas_w, doc.canvas_h, solid[0], solid[1], solid[2]);
  draw_spans(canvas, doc);
  return canvas;
}

}  // namespace glyphforge
