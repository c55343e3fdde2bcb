// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/truetype.hpp"

#include <algorithm>
#include <fstream>

#include "core/error.hpp"

namespace glyphforge::ttf {

namespace {

constexpr int kMaxCompositeDepth = 8;

[[noreturn]] void bad(const std::string& origin, const std::string& what) {
  fail(Errc::unparseable_font, origin + ": " + what);
}

// Big-endian cursor over the font bytes with hard bounds checks.
struct Reader {
  const std::vector<uint8_t>& data;
  const std::string& origin;
  std::size_t pos = 0;
  std::size_t limit = 0;

  Reader(const std::vector<uint8_t>& d, const std::string& o, std::size_t off,
         std::size_t len)
      : data(d), origin(o), pos(off), limit(off + len) {
    if (off > d.size() || len > d.size() - off) bad(o, "table out of bounds");
  }

  void need(std::size_t n) const {
    if (pos + n > limit) bad(origin, "unexpected end of table");
  }
  uint8_t u8() {
    need(1);
    return data[pos++];
  }
  uint16_t u16() {
    need(2);
    uint16_t v = static_cast<uint16_t>((data[pos] << 8) | data[pos + 1]);
    pos += 2;
    return v;
  }
  int16_t i16() { return static_cast<int16_t>(u16()); }
  uint32_t u32() {
    need(4);
    uint32_t v = (static_cast<uint32_t>(data[pos]) << 24) |
                 (static_cast<uint32_t>(data[pos + 1]) << 16) |
                 (static_cast<uint32_t>(data[pos + 2]) << 8) |
                 static_cast<uint32_t>(data[pos + 3]);
    pos += 4;
    return v;
  }
  void skip(std::size_t n) {
    need(n);
    pos += n;
  }
};

constexpr uint32_t tag(const char (&s)[5]) {
  return (static_cast<uint32_t>(static_cast<uint8_t>(s[0])) << 24) |
         (static_cast<uint32_t>(static_cast<uint8_t>(s[1])) << 16) |
         (static_cast<uint32_t>(static_cast<uint8_t>(s[2])) << 8) |
         static_cast<uint32_t>(static_cast<uint8_t>(s[3]));
}

float f2dot14(int16_t v) { return static_cast<float>(v) / 16384.0f; }

}  // namespace

Font Font::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open font file " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return load_memory(std::move(bytes), path);
}

Font Font::load_memory(std::vector<uint8_t> bytes, std::string origin) {
  Font f;
  f.data_ = std::move(bytes);
  f.origin_ = std::move(origin);
  f.parse();
  return f;
}

void Font::parse() {
  if (data_.size() < 12) bad(origin_, "too short for an sfnt header");
  Reader r(data_, origin_, 0, data_.size());
  uint32_t version = r.u32();
  if (version != 0x00010000 && version != tag("true") && version != tag("OTTO"))
    bad(origin_, "unrecognized sfnt version");
  if (version == tag("OTTO"))
    bad(origin_, "CFF outlines not supported");
  uint16_t num_tables = r.u16();
  r.skip(6);
  for (uint16_t i = 0; i < num_tables; ++i) {
    uint32_t t = r.u32();
    r.u32();  // checksum
    uint32_t off = r.u32();
    uint32_t len = r.u32();
    if (off > data_.size() || len > data_.size() - off)
      bad(origin_, "table directory entry out of bounds");
    tables_[t] = Table{off, len};
  }

  auto require = [&](uint32_t t, const char* name) -> Table {
    auto it = tables_.find(t);
    if (it == tables_.end()) bad(origin_, std::string("missing table ") + name);
    return it->second;
  };

  {
    Table head = require(tag("head"), "head");
    Reader h(data_, origin_, head.off, head.len);
    h.skip(18);
    units_per_em_ = h.u16();
    if (units_per_em_ == 0) bad(origin_, "unitsPerEm is zero");
    h.skip(30);
    long_loca_ = h.i16() == 1;
  }
  {
    Table maxp = require(tag("maxp"), "maxp");
    Reader m(data_, origin_, maxp.off, maxp.len);
    m.u32();
    glyph_count_ = m.u16();
  }
  {
    Table hhea = require(tag("hhea"), "hhea");
    Reader h(data_, origin_, hhea.off, hhea.len);
    h.u32();
    ascender_ = h.i16();
    descender_ = h.i16();
    h.skip(26);
    num_hmetrics_ = h.u16();
  }
  hmtx_ = require(tag("hmtx"), "hmtx");
  glyf_ = require(tag("glyf"), "glyf");
  loca_ = require(tag("loca"), "loca");
  {
    std::size_t per = long_loca_ ? 4 : 2;
    if (loca_.len < (static_cast<std::size_t>(glyph_count_) + 1) * per)
      bad(origin_, "loca table too short");
  }
  Table cm = require(tag("cmap"), "cmap");
  parse_cmap(cm.off, cm.len);

  coverage_.reserve(cmap_.size());
  for (const auto& [cp, gid] : cmap_)
    if (gid != 0) coverage_.push_back(cp);
  std::sort(coverage_.begin(), coverage_.end());
}

void Font::parse_cmap(uint32_t off, uint32_t len) {
  Reader r(data_, origin_, off, len);
  r.u16();  // version
  uint16_t n = r.u16();
  uint32_t best_off = 0;
  int best_score = -1;
  for (uint16_t i = 0; i < n; ++i) {
    uint16_t platform = r.u16();
    uint16_t encoding = r.u16();
    uint32_t sub_off = r.u32();
    if (sub_off >= len) continue;
    Reader probe(data_, origin_, off + sub_off, len - sub_off);
    uint16_t format = probe.u16();
    int score = -1;
    switch (format) {
      case 12: score = 40; break;
      case 4: score = 30; break;
      case 6: score = 20; break;
      case 0: score = 10; break;
      default: continue;
    }
    // prefer unicode-capable platform records
    if (platform == 0 || (platform == 3 && (encoding == 1 || encoding == 10))) score += 5;
    if (score > best_score) {
      best_score = score;
      best_off = off + sub_off;
    }
  }
  if (best_score < 0) bad(origin_, "no usable cmap subtable");
  parse_cmap_subtable(best_off);
}

void Font::parse_cmap_subtable(uint32_t off) {
  Reader r(data_, origin_, off, data_.size() - off);
  uint16_t format = r.u16();
  if (format == 0) {
    r.u16();  // length
    r.u16();  // language
    for (uint32_t c = 0; c < 256; ++c) {
      uint8_t gid = r.u8();
      if (gid) cmap_[c] = gid;
    }
  } else if (format == 4) {
    uint16_t length = r.u16();
    r.u16();  // language
    uint16_t seg_x2 = r.u16();
    if (seg_x2 == 0 || (seg_x2 & 1)) bad(origin_, "bad segCountX2");
    uint16_t segs = seg_x2 / 2;
    r.skip(6);
    std::vector<uint16_t> end(segs), start(segs), delta(segs), range_off(segs);
    for (auto& v : end) v = r.u16();
    r.u16();  // reservedPad
    for (auto& v : start) v = r.u16();
    for (auto& v : delta) v = r.u16();
    std::size_t range_base = r.pos;
    for (auto& v : range_off) v = r.u16();
    (void)length;
    for (uint16_t s = 0; s < segs; ++s) {
      if (start[s] > end[s]) continue;
      for (uint32_t c = start[s]; c <= end[s] && c != 0x10000; ++c) {
        uint16_t gid;
        if (range_off[s] == 0) {
          gid = static_cast<uint16_t>(c + delta[s]);
        } else {
          std::size_t idx =
              range_base + 2u * s + range_off[s] + 2u * (c - start[s]);
          if (idx + 1 >= data_.size()) continue;
          gid = static_cast<uint16_t>((data_[idx] << 8) | data_[idx + 1]);
          if (gid != 0) gid = static_cast<uint16_t>(gid + delta[s]);
        }
        if (gid != 0 && c != 0xFFFF) cmap_[c] = gid;
      }
    }
  } else if (format == 6) {
    r.u16();  // length
    r.u16();  // language
    uint16_t first = r.u16();
    uint16_t count = r.u16();
    for (uint16_t i = 0; i < count; ++i) {
      uint16_t gid = r.u16();
      if (gid) cmap_[first + i] = gid;
    }
  } else if (format == 12) {
    r.u16();  // reserved
    r.u32();  // length
    r.u32();  // language
    uint32_t groups = r.u32();
    if (groups > 100000) bad(origin_, "absurd cmap group count");
    for (uint32_t g = 0; g < groups; ++g) {
      uint32_t start = r.u32();
      uint32_t end_cp = r.u32();
      uint32_t start_gid = r.u32();
      if (end_cp < start || end_cp > 0x10FFFF || end_cp - start > 0x20000)
        continue;
      for (uint32_t c = start; c <= end_cp; ++c) {
        uint32_t gid = start_gid + (c - start);
        if (gid != 0 && gid <= 0xFFFF) cmap_[c] = static_cast<uint16_t>(gid);
      }
    }
  } else {
    bad(origin_, "unsupported cmap format");
  }
}

uint16_t Font::glyph_index(char32_t cp) const noexcept {
  auto it = cmap_.find(cp);
  return it == cmap_.end() ? 0 : it->second;
}

uint16_t Font::advance(uint16_t glyph_id) const noexcept {
  if (num_hmetrics_ == 0) return units_per_em_;
  uint16_t idx = std::min<uint16_t>(glyph_id, num_hmetrics_ - 1);
  std::size_t off = hmtx_.off + 4u * idx;
  if (off + 1 >= data_.size() || 4u * idx + 2 > hmtx_.len) return units_per_em_;
  return static_cast<uint16_t>((data_[off] << 8) | data_[off + 1]);
}

Outline Font::outline(uint16_t glyph_id) const { return outline_impl(glyph_id, 0); }

Outline Font::outline_impl(uint16_t glyph_id, int depth) const {
  Outline out;
  if (glyph_id >= glyph_count_) return out;
  if (depth > kMaxCompositeDepth) bad(origin_, "composite glyph recursion too deep");

  uint32_t g0, g1;
  if (long_loca_) {
    Reader l(data_, origin_, loca_.off + 4u * glyph_id, 8);
    g0 = l.u32();
    g1 = l.u32();
  } else {
    Reader l(data_, origin_, loca_.off + 2u * glyph_id, 4);
    g0 = 2u * l.u16();
    g1 = 2u * l.u16();
  }
  if (g1 <= g0) return out;  // empty glyph (e.g. space)
  if (g1 > glyf_.len) bad(origin_, "glyf offset out of range");

  Reader r(data_, origin_, glyf_.off + g0, g1 - g0);
  int16_t n_contours = r.i16();
  r.skip(8);  // bbox

  if (n_contours >= 0) {
    std::vector<uint16_t> ends(static_cast<std::size_t>(n_contours));
    for (auto& e : ends) e = r.u16();
    uint16_t n_points = ends.empty() ? 0 : static_cast<uint16_t>(ends.back() + 1);
    uint16_t instr_len = r.u16();
    r.skip(instr_len);

    std::vector<uint8_t> flags;
    flags.reserve(n_points);
    while (flags.size() < n_points) {
      uint8_t f = r.u8();
      flags.push_back(f);
      if (f & 0x08) {
        uint8_t repeat = r.u8();
        for (uint8_t k = 0; k < repeat && flags.size() < n_points; ++k)
          flags.push_back(f);
      }
    }

    std::vector<float> xs(n_points), ys(n_points);
    int32_t v = 0;
    for (uint16_t i = 0; i < n_points; ++i) {
      uint8_t f = flags[i];
      if (f & 0x02) {
        uint8_t d = r.u8();
        v += (f & 0x10) ? d : -d;
      } else if (!(f & 0x10)) {
        v += r.i16();
      }
      xs[i] = static_cast<float>(v);
    }
    v = 0;
    for (uint16_t i = 0; i < n_points; ++i) {
      uint8_t f = flags[i];
      if (f & 0x04) {
        uint8_t d = r.u8();
        v += (f & 0x20) ? d : -d;
      } else if (!(f & 0x20)) {
        v += r.i16();
      }
      ys[i] = static_cast<float>(v);
    }

    uint16_t begin = 0;
    for (uint16_t e : ends) {
      if (e < begin || e >= n_points) bad(origin_, "contour end out of range");
      std::vector<Point> contour;
      contour.reserve(e - begin + 1u);
      for (uint16_t i = begin; i <= e; ++i)
        contour.push_back(Point{xs[i], ys[i], (flags[i] & 0x01) != 0});
      out.contours.push_back(std::move(contour));
      begin = static_cast<uint16_t>(e + 1);
    }
  } else {
    // composite
    for (;;) {
      uint16_t flags = r.u16();
      uint16_t comp_gid = r.u16();
      float dx = 0, dy = 0;
      if (flags & 0x0001) {  // words
        int16_t a1 = r.i16(), a2 = r.i16();
        if (flags & 0x0002) {
          dx = a1;
          dy = a2;
        }
      } else {
        int8_t a1 = static_cast<int8_t>(r.u8()), a2 = static_cast<int8_t>(r.u8());
        if (flags & 0x0002) {
          dx = a1;
          dy = a2;
        }
      }
      float xx = 1, xy = 0, yx = 0, yy = 1;
      if (flags & 0x0008) {
        xx = yy = f2dot14(r.i16());
      } else if (flags & 0x0040) {
        xx = f2dot14(r.i16());
        yy = f2dot14(r.i16());
      } else if (flags & 0x0080) {
        xx = f2dot14(r.i16());
        xy = f2dot14(r.i16());
        yx = f2dot14(r.i16());
        yy = f2dot14(r.i16());
      }
      Outline sub = outline_impl(comp_gid, depth + 1);
      for (auto& contour : sub.contours) {
        for (auto& p : contour) {
          float nx = xx * p.x + yx * p.y + dx;
          float ny = xy * p.x + yy * p.y + dy;
          p.x = nx;
          p.y = ny;
        }
        out.contours.push_back(std::move(contour));
      }
      if (!(flags & 0x0020)) break;
    }
  }
  return out;
}

}  // namespace glyphforge::ttf
