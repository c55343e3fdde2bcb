// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>

#include "core/font_catalog.hpp"
#include "core/model.hpp"
#include "core/raster.hpp"

namespace glyphforge {

// Color-id table; ids index the shipped JSON array and unknown ids are an
// error, never a wraparound.
struct Palette {
  std::vector<std::array<uint8_t, 3>> colors;

  std::array<uint8_t, 3> rgb(int color_id) const;
};

Palette load_palette(const std::string& path);

struct FitResult {
  int font_size = 0;                     // chosen px size
  std::vector<std::size_t> line_breaks;  // token index starting each line after the first
  Rect ink_bbox;                         // conservative text extent, inside the span box
};

// Deterministic rasterization of documents. Layout: tokens wrap greedily
// (words for alphabetic, scalars for character-based), the font size walks
// down 1px at a time from max until everything fits, text anchors at the
// box's top-left behind a 5% padding margin. No anti-aliasing: a pixel is
// ink iff its center falls inside the outline.
class Renderer {
 public:
  Renderer(const FontCatalog& catalog, Palette palette)
      : catalog_(&catalog), palette_(std::move(palette)) {}

  FitResult layout_fit(const TextSpan& span, const Rect& box, const FontEntry& font,
                       int max_size, int min_size) const;

  // Solid black background regardless of doc.background.
  Image render_glyph_image(const DesignDocument& doc) const;

  // Background image must match the canvas exactly.
  Image render_design_image(const DesignDocument& doc, const Image& background) const;
  Image render_design_image(const DesignDocument& doc,
                            std::array<uint8_t, 3> solid) const;

  const Palette& palette() const noexcept { return palette_; }

 private:
  void draw_spans(Image& canvas, const DesignDocument& doc) const;

  const FontCatalog* catalog_;
  Palette palette_;
};

}  // namespace glyphforge
