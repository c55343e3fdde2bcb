// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace glyphforge::ttf {

struct Point {
  float x = 0, y = 0;
  bool on_curve = true;
};

// Closed contours in font units, y up, origin at the glyph's pen origin.
struct Outline {
  std::vector<std::vector<Point>> contours;
  bool empty() const noexcept { return contours.empty(); }
};

// Minimal sfnt reader: cmap (formats 0/4/6/12), head, maxp, hhea, hmtx,
// loca, glyf with simple and composite glyphs. Everything is bounds-checked
// and throws Errc::unparseable_font on structural damage.
class Font {
 public:
  static Font load_file(const std::string& path);
  static Font load_memory(std::vector<uint8_t> bytes, std::string origin = "<memory>");

  uint16_t units_per_em() const noexcept { return units_per_em_; }
  int16_t ascender() const noexcept { return ascender_; }
  int16_t descender() const noexcept { return descender_; }
  uint16_t glyph_count() const noexcept { return glyph_count_; }

  // 0 means "not mapped" (.notdef)
  uint16_t glyph_index(char32_t cp) const noexcept;

  uint16_t advance(uint16_t glyph_id) const noexcept;

  // Composite references resolved; recursion bounded.
  Outline outline(uint16_t glyph_id) const;

  // All scalars the cmap maps to a nonzero glyph, ascending.
  const std::vector<char32_t>& coverage() const noexcept { return coverage_; }

  const std::string& origin() const noexcept { return origin_; }

 private:
  void parse();
  void parse_cmap(uint32_t off, uint32_t len);
  void parse_cmap_subtable(uint32_t off);
  Outline outline_impl(uint16_t glyph_id, int depth) const;

  std::vector<uint8_t> data_;
  std::string origin_;

  struct Table {
    uint32_t off = 0, len = 0;
  };
  std::unordered_map<uint32_t, Table> tables_;

  uint16_t units_per_em_ = 1000;
  int16_t ascender_ = 0;
  int16_t descender_ = 0;
  uint16_t glyph_count_ = 0;
  bool long_loca_ = false;
  uint16_t num_hmetrics_ = 0;
  Table glyf_{}, loca_{}, hmtx_{};

  std::unordered_map<char32_t, uint16_t> cmap_;
  std::vector<char32_t> coverage_;
};

}  // namespace glyphforge::ttf
