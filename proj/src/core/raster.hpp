// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "core/truetype.hpp"

namespace glyphforge {

// 8-bit RGB image, row-major, 3 bytes per pixel.
struct Image {
  int w = 0, h = 0;
  std::vector<uint8_t> px;

  Image() = default;
  Image(int width, int height, uint8_t r = 0, uint8_t g = 0, uint8_t b = 0);

  uint8_t* at(int x, int y) { return px.data() + 3 * (static_cast<std::size_t>(y) * w + x); }
  const uint8_t* at(int x, int y) const {
    return px.data() + 3 * (static_cast<std::size_t>(y) * w + x);
  }
  bool operator==(const Image&) const = default;
};

// 1 byte per pixel, 0 or 1.
struct Bitmap {
  int w = 0, h = 0;
  std::vector<uint8_t> px;

  Bitmap() = default;
  Bitmap(int width, int height) : w(width), h(height), px(static_cast<std::size_t>(width) * height, 0) {}

  uint8_t& at(int x, int y) { return px[static_cast<std::size_t>(y) * w + x]; }
  uint8_t at(int x, int y) const { return px[static_cast<std::size_t>(y) * w + x]; }
  std::size_t ink() const;
};

namespace raster {

struct Edge {
  double x0, y0, x1, y1;
};

// Flattens the outline into line segments in device space. Device transform:
// dx = x * scale + tx, dy = ty - y * scale (y flips; ty is the baseline row).
void add_outline(std::vector<Edge>& edges, const ttf::Outline& outline, double scale,
                 double tx, double ty);

// Nonzero-winding scanline fill sampling at pixel centers; ORs into mask.
// No anti-aliasing: a pixel is ink iff its center is inside.
void fill_nonzero(const std::vector<Edge>& edges, Bitmap& mask);

}  // namespace raster

// Draws mask pixels in the given color, clipped to [cx, cy, cw, ch].
void blit_mask(Image& dst, const Bitmap& mask, uint8_t r, uint8_t g, uint8_t b, int cx,
               int cy, int cw, int ch);

}  // namespace glyphforge
