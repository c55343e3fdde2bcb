// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/raster.hpp"

#include <algorithm>
#include <cmath>

namespace glyphforge {

Image::Image(int width, int height, uint8_t r, uint8_t g, uint8_t b)
    : w(width), h(height), px(static_cast<std::size_t>(width) * height * 3) {
  for (std::size_t i = 0; i < px.size(); i += 3) {
    px[i] = r;
    px[i + 1] = g;
    px[i + 2] = b;
  }
}

std::size_t Bitmap::ink() const {
  std::size_t n = 0;
  for (uint8_t v : px) n += v;
  return n;
}

namespace raster {

namespace {

struct Vec2 {
  double x, y;
};

void emit_line(std::vector<Edge>& edges, Vec2 a, Vec2 b) {
  if (a.y == b.y) return;  // horizontal edges never cross a scanline
  edges.push_back(Edge{a.x, a.y, b.x, b.y});
}

void emit_quad(std::vector<Edge>& edges, Vec2 p0, Vec2 c, Vec2 p1) {
  double extent = std::max({std::abs(c.x - p0.x), std::abs(c.y - p0.y),
                            std::abs(p1.x - c.x), std::abs(p1.y - c.y)});
  int n = std::clamp(static_cast<int>(std::ceil(std::sqrt(extent * 2.0))), 3, 24);
  Vec2 prev = p0;
  for (int i = 1; i <= n; ++i) {
    double t = static_cast<double>(i) / n;
    double u = 1.0 - t;
    Vec2 q{u * u * p0.x + 2 * u * t * c.x + t * t * p1.x,
           u * u * p0.y + 2 * u * t * c.y + t * t * p1.y};
    emit_line(edges, prev, q);
    prev = q;
  }
}

}  // namespace

void add_outline(std::vector<Edge>& edges, const ttf::Outline& outline, double scale,
                 double tx, double ty) {
  for (const auto& contour : outline.contours) {
    if (contour.size() < 2) continue;

    auto dev = [&](const ttf::Point& p) {
      return Vec2{p.x * scale + tx, ty - p.y * scale};
    };
    auto mid = [](Vec2 a, Vec2 b) { return Vec2{(a.x + b.x) / 2, (a.y + b.y) / 2}; };

    // expand implied on-curve midpoints between consecutive off-curve points
    std::vector<std::pair<Vec2, bool>> pts;
    pts.reserve(contour.size() * 2);
    for (std::size_t i = 0; i < contour.size(); ++i) {
      Vec2 cur = dev(contour[i]);
      bool on = contour[i].on_curve;
      if (!pts.empty() && !pts.back().second && !on)
        pts.emplace_back(mid(pts.back().first, cur), true);
      pts.emplace_back(cur, on);
    }
    // rotate so the sequence starts on-curve
    if (!pts.front().second) {
      if (!pts.back().second) {
        pts.insert(pts.begin(), {mid(pts.front().first, pts.back().first), true});
      } else {
        std::rotate(pts.begin(), pts.end() - 1, pts.end());
      }
    }

    Vec2 start = pts[0].first;
    Vec2 prev = start;
    std::size_t i = 1;
    while (i < pts.size()) {
      if (pts[i].second) {
        emit_line(edges, prev, pts[i].first);
        prev = pts[i].first;
        ++i;
      } else {
        Vec2 ctrl = pts[i].first;
        Vec2 end = (i + 1 < pts.size()) ? pts[i + 1].first : start;
        emit_quad(edges, prev, ctrl, end);
        prev = end;
        i += 2;
      }
    }
    if (prev.x != start.x || prev.y != start.y) emit_line(edges, prev, start);
  }
}

void fill_nonzero(const std::vector<Edge>& edges, Bitmap& mask) {
  if (edges.empty() || mask.w <= 0 || mask.h <= 0) return;

  double ymin = edges[0].y0, ymax = edges[0].y0;
  for (const Edge& e : edges) {
    ymin = std::min({ymin, e.y0, e.y1});
    ymax = std::max({ymax, e.y0, e.y1});
  }
  int row0 = std::max(0, static_cast<int>(std::floor(ymin - 0.5)));
  int row1 = std::min(mask.h - 1, static_cast<int>(std::ceil(ymax)));

  struct Crossing {
    double x;
    int dir;
  };
  std::vector<Crossing> xs;
  for (int row = row0; row <= row1; ++row) {
    double yc = row + 0.5;
    xs.clear();
    for (const Edge& e : edges) {
      double lo = std::min(e.y0, e.y1);
      double hi = std::max(e.y0, e.y1);
      if (yc < lo || yc >= hi) continue;  // half-open: top inclusive
      double t = (yc - e.y0) / (e.y1 - e.y0);
      double x = e.x0 + t * (e.x1 - e.x0);
      xs.push_back(Crossing{x, e.y1 > e.y0 ? 1 : -1});
    }
    if (xs.empty()) continue;
    std::sort(xs.begin(), xs.end(),
              [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
    int winding = 0;
    double span_start = 0;
    for (const Crossing& c : xs) {
      int prev_w = winding;
      winding += c.dir;
      if (prev_w == 0 && winding != 0) {
        span_start = c.x;
      } else if (prev_w != 0 && winding == 0) {
        int px0 = static_cast<int>(std::ceil(span_start - 0.5));
        int px1 = static_cast<int>(std::ceil(c.x - 0.5)) - 1;
        px0 = std::max(px0, 0);
        px1 = std::min(px1, mask.w - 1);
        for (int x = px0; x <= px1; ++x) mask.at(x, row) = 1;
      }
    }
  }
}

}  // namespace raster

void blit_mask(Image& dst, const Bitmap& mask, uint8_t r, uint8_t g, uint8_t b, int cx,
               int cy, int cw, int ch) {
  int x0 = std::max(0, cx);
  int y0 = std::max(0, cy);
  int x1 = std::min({dst.w, cx + cw, mask.w});
  int y1 = std::min({dst.h, cy + ch, mask.h});
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      if (mask.at(x, y)) {
        uint8_t* p = dst.at(x, y);
        p[0] = r;
        p[1] = g;
        p[2] = b;
      }
    }
  }
}

}  // namespace glyphforge
