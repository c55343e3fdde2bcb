// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/shape_index.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "core/raster.hpp"
#include "core/unicode.hpp"

namespace glyphforge {

namespace {

// One binarized glyph raster packed into 64-bit words.
struct GlyphBits {
  char32_t scalar = 0;
  std::vector<uint64_t> words;
  int popcount = 0;
};

GlyphBits rasterize_scalar(const ttf::Font& font, char32_t cp, int size) {
  GlyphBits g;
  g.scalar = cp;
  uint16_t gid = font.glyph_index(cp);
  Bitmap mask(size, size);
  if (gid != 0) {
    ttf::Outline outline = font.outline(gid);
    if (!outline.empty()) {
      // map the em square (descender..ascender tall) onto the raster
      double upem = font.units_per_em();
      double scale = static_cast<double>(size) / upem;
      double baseline = font.ascender() * scale;
      std::vector<raster::Edge> edges;
      raster::add_outline(edges, outline, scale, 0.0, baseline);
      raster::fill_nonzero(edges, mask);
    }
  }
  std::size_t nwords = (static_cast<std::size_t>(size) * size + 63) / 64;
  g.words.assign(nwords, 0);
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (mask.at(x, y)) {
        std::size_t bit = static_cast<std::size_t>(y) * size + x;
        g.words[bit / 64] |= 1ULL << (bit % 64);
        ++g.popcount;
      }
  return g;
}

double iou(const GlyphBits& a, const GlyphBits& b) {
  int inter = 0;
  for (std::size_t i = 0; i < a.words.size(); ++i)
    inter += __builtin_popcountll(a.words[i] & b.words[i]);
  int uni = a.popcount + b.popcount - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
}

}  // namespace

ShapeIndex ShapeIndex::build(const CharSet& charset, const FontCatalog& catalog,
                             const FontEntry& font, int raster_size, int top_k) {
  if (raster_size < 8 || raster_size > 256)
    fail(Errc::config_invalid, "raster size out of range");
  if (top_k < 1) fail(Errc::config_invalid, "top_k must be positive");

  const ttf::Font& f = catalog.font(font);
  ShapeIndex idx;

  std::vector<GlyphBits> glyphs;
  glyphs.reserve(charset.scalars.size());
  for (char32_t cp : charset.scalars) {
    if (f.glyph_index(cp) == 0) {
      idx.warnings_.push_back("no coverage for U+" + [cp] {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
        return std::string(buf);
      }());
      continue;
    }
    glyphs.push_back(rasterize_scalar(f, cp, raster_size));
  }
  if (glyphs.empty())
    fail(Errc::empty_coverage, "font covers none of the charset");

  struct Cand {
    double sim;
    char32_t scalar;
  };
  std::vector<Cand> best;
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    best.clear();
    double worst_kept = -1.0;
    for (std::size_t j = 0; j < glyphs.size(); ++j) {
      if (j == i) continue;
      double s = iou(glyphs[i], glyphs[j]);
      if (static_cast<int>(best.size()) < top_k) {
        best.push_back(Cand{s, glyphs[j].scalar});
        if (static_cast<int>(best.size()) == top_k) {
          worst_kept = std::min_element(best.begin(), best.end(),
                                        [](const Cand& a, const Cand& b) {
                                          return a.sim < b.sim;
                                        })
                           ->sim;
        }
      } else if (s > worst_kept) {
        auto worst = std::min_element(
            best.begin(), best.end(),
            [](const Cand& a, const Cand& b) { return a.sim < b.sim; });
        *worst = Cand{s, glyphs[j].scalar};
        worst_kept = std::min_element(best.begin(), best.end(),
                                      [](const Cand& a, const Cand& b) {
                                        return a.sim < b.sim;
                                      })
                         ->sim;
      }
    }
    std::sort(best.begin(), best.end(), [](const Cand& a, const Cand& b) {
      if (a.sim != b.sim) return a.sim > b.sim;
      return a.scalar < b.scalar;
    });
    std::vector<char32_t> row;
    row.reserve(best.size());
    for (const Cand& c : best) row.push_back(c.scalar);
    idx.rows_[glyphs[i].scalar] = std::move(row);
  }
  return idx;
}

ShapeIndex ShapeIndex::load(const std::string& tsv_path) {
  std::ifstream in(tsv_path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open shape index " + tsv_path);
  ShapeIndex idx;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t = line.find('\t');
    if (t == std::string::npos)
      fail(Errc::config_invalid, tsv_path + ": missing tab separator");
    std::u32string key = uni::decode_utf8(line.substr(0, t));
    if (key.size() != 1)
      fail(Errc::config_invalid, tsv_path + ": key is not a single scalar");
    std::vector<char32_t> row;
    std::string rest = line.substr(t + 1);
    std::size_t start = 0;
    while (start <= rest.size() && !rest.empty()) {
      std::size_t comma = rest.find(',', start);
      std::string piece = comma == std::string::npos
                              ? rest.substr(start)
                              : rest.substr(start, comma - start);
      if (!piece.empty()) {
        std::u32string u = uni::decode_utf8(piece);
        if (u.size() != 1)
          fail(Errc::config_invalid, tsv_path + ": candidate is not a single scalar");
        row.push_back(u[0]);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    idx.rows_[key[0]] = std::move(row);
  }
  return idx;
}

void ShapeIndex::save(const std::string& tsv_path) const {
  std::ofstream out(tsv_path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open " + tsv_path + " for write");
  for (const auto& [cp, row] : rows_) {
    out << uni::encode_utf8(cp) << '\t';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << uni::encode_utf8(row[i]);
    }
    out << '\n';
  }
  if (!out) fail(Errc::io, "short write to " + tsv_path);
}

void ShapeIndex::merge_overrides(const std::string& tsv_path) {
  std::ifstream in(tsv_path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open overrides " + tsv_path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t = line.find('\t');
    if (t == std::string::npos)
      fail(Errc::config_invalid, tsv_path + ": missing tab separator");
    std::u32string from = uni::decode_utf8(line.substr(0, t));
    std::u32string to = uni::decode_utf8(line.substr(t + 1));
    if (from.size() != 1 || to.size() != 1)
      fail(Errc::config_invalid, tsv_path + ": entries must be single scalars");
    add_override(from[0], to[0]);
  }
}

void ShapeIndex::add_override(char32_t from, char32_t to) {
  if (from == to)
    fail(Errc::config_invalid, "override cannot map a scalar to itself");
  auto& list = overrides_[from];
  if (std::find(list.begin(), list.end(), to) == list.end()) list.push_back(to);
}

std::vector<char32_t> ShapeIndex::lookup(char32_t ch, int k) const {
  if (k < 1) fail(Errc::config_invalid, "k must be positive");
  if (!known(ch))
    fail(Errc::unknown_character,
         "scalar not in shape index: " + uni::encode_utf8(ch));
  std::vector<char32_t> out;
  auto ov = overrides_.find(ch);
  if (ov != overrides_.end())
    for (char32_t c : ov->second) {
      if (c != ch && std::find(out.begin(), out.end(), c) == out.end())
        out.push_back(c);
      if (static_cast<int>(out.size()) == k) return out;
    }
  auto row = rows_.find(ch);
  if (row != rows_.end())
    for (char32_t c : row->second) {
      if (c != ch && std::find(out.begin(), out.end(), c) == out.end())
        out.push_back(c);
      if (static_cast<int>(out.size()) == k) return out;
    }
  return out;
}

bool ShapeIndex::known(char32_t ch) const noexcept {
  return rows_.count(ch) != 0 || overrides_.count(ch) != 0;
}

}  // namespace glyphforge
