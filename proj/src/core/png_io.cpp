// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/png_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "core/error.hpp"

namespace glyphforge::png {

namespace {

constexpr uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

uint32_t get_u32(const uint8_t* p) {
  return (static_cast<uint32_t>(p[0]) << 24) | (static_cast<uint32_t>(p[1]) << 16) |
         (static_cast<uint32_t>(p[2]) << 8) | static_cast<uint32_t>(p[3]);
}

void put_chunk(std::vector<uint8_t>& out, const char type[4],
               const std::vector<uint8_t>& payload) {
  put_u32(out, static_cast<uint32_t>(payload.size()));
  std::size_t crc_begin = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), payload.begin(), payload.end());
  uint32_t crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, out.data() + crc_begin, static_cast<uInt>(out.size() - crc_begin));
  put_u32(out, crc);
}

}  // namespace

std::vector<uint8_t> encode(const Image& img) {
  if (img.w <= 0 || img.h <= 0) fail(Errc::io, "cannot encode empty image");

  // filter 0 on every row: predictable bytes, fine compression on flat art
  std::vector<uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(img.h) * (1 + 3 * img.w));
  for (int y = 0; y < img.h; ++y) {
    raw.push_back(0);
    raw.insert(raw.end(), img.at(0, y), img.at(0, y) + 3 * static_cast<std::size_t>(img.w));
  }

  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<uint8_t> compressed(bound);
  if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                6) != Z_OK)
    fail(Errc::io, "zlib compression failed");
  compressed.resize(bound);

  std::vector<uint8_t> out(kSignature, kSignature + 8);
  std::vector<uint8_t> ihdr;
  put_u32(ihdr, static_cast<uint32_t>(img.w));
  put_u32(ihdr, static_cast<uint32_t>(img.h));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // color type RGB
  ihdr.push_back(0);   // compression
  ihdr.push_back(0);   // filter
  ihdr.push_back(0);   // interlace
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", compressed);
  put_chunk(out, "IEND", {});
  return out;
}

Image decode(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0)
    fail(Errc::io, "not a PNG stream");

  uint32_t w = 0, h = 0;
  int bit_depth = 0, color_type = 0, interlace = 0;
  std::vector<uint8_t> idat;

  std::size_t pos = 8;
  bool saw_end = false;
  while (pos + 8 <= bytes.size() && !saw_end) {
    uint32_t len = get_u32(bytes.data() + pos);
    if (pos + 12 + static_cast<std::size_t>(len) > bytes.size())
      fail(Errc::io, "truncated PNG chunk");
    const char* type = reinterpret_cast<const char*>(bytes.data() + pos + 4);
    const uint8_t* payload = bytes.data() + pos + 8;
    if (std::memcmp(type, "IHDR", 4) == 0) {
      if (len != 13) fail(Errc::io, "bad IHDR");
      w = get_u32(payload);
      h = get_u32(payload + 4);
      bit_depth = payload[8];
      color_type = payload[9];
      interlace = payload[12];
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.insert(idat.end(), payload, payload + len);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      saw_end = true;
    }
    pos += 12 + static_cast<std::size_t>(len);
  }

  if (w == 0 || h == 0) fail(Errc::io, "PNG missing IHDR");
  if (bit_depth != 8) fail(Errc::io, "unsupported PNG bit depth");
  if (interlace != 0) fail(Errc::io, "interlaced PNG not supported");
  int channels;
  switch (color_type) {
    case 0: channels = 1; break;
    case 2: channels = 3; break;
    case 6: channels = 4; break;
    default: fail(Errc::io, "unsupported PNG color type");
  }
  if (w > 1u << 16 || h > 1u << 16) fail(Errc::io, "PNG dimensions too large");

  std::size_t stride = static_cast<std::size_t>(w) * channels;
  std::size_t expected = (stride + 1) * h;
  std::vector<uint8_t> raw(expected);
  uLongf out_len = static_cast<uLongf>(expected);
  if (uncompress(raw.data(), &out_len, idat.data(), static_cast<uLong>(idat.size())) !=
          Z_OK ||
      out_len != expected)
    fail(Errc::io, "PNG inflate failed");

  // unfilter in place per row
  std::vector<uint8_t> prev_row(stride, 0);
  Image img(static_cast<int>(w), static_cast<int>(h));
  std::vector<uint8_t> row(stride);
  for (uint32_t y = 0; y < h; ++y) {
    const uint8_t* src = raw.data() + static_cast<std::size_t>(y) * (stride + 1);
    uint8_t filter = src[0];
    std::memcpy(row.data(), src + 1, stride);
    auto recon_a = [&](std::size_t i) -> int {
      return i >= static_cast<std::size_t>(channels) ? row[i - channels] : 0;
    };
    auto recon_b = [&](std::size_t i) -> int { return prev_row[i]; };
    auto recon_c = [&](std::size_t i) -> int {
      return i >= static_cast<std::size_t>(channels) ? prev_row[i - channels] : 0;
    };
    switch (filter) {
      case 0:
        break;
      case 1:
        for (std::size_t i = 0; i < stride; ++i)
          row[i] = static_cast<uint8_t>(row[i] + recon_a(i));
        break;
      case 2:
        for (std::size_t i = 0; i < stride; ++i)
          row[i] = static_cast<uint8_t>(row[i] + recon_b(i));
        break;
      case 3:
        for (std::size_t i = 0; i < stride; ++i)
          row[i] = static_cast<uint8_t>(row[i] + (recon_a(i) + recon_b(i)) / 2);
        break;
      case 4:
        for (std::size_t i = 0; i < stride; ++i) {
          int a = recon_a(i), b = recon_b(i), c = recon_c(i);
          int p = a + b - c;
          int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
          int pred = (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
          row[i] = static_cast<uint8_t>(row[i] + pred);
        }
        break;
      default:
        fail(Errc::io, "bad PNG filter byte");
    }
    for (uint32_t x = 0; x < w; ++x) {
      uint8_t* dst = img.at(static_cast<int>(x), static_cast<int>(y));
      const uint8_t* s = row.data() + static_cast<std::size_t>(x) * channels;
      if (channels == 1) {
        dst[0] = dst[1] = dst[2] = s[0];
      } else {
        dst[0] = s[0];
        dst[1] = s[1];
        dst[2] = s[2];
      }
    }
    prev_row = row;
  }
  return img;
}

void write_file(const std::string& path, const Image& img) {
  std::vector<uint8_t> bytes = encode(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open " + path + " for write");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(Errc::io, "short write to " + path);
}

Image read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return decode(bytes);
}

}  // namespace glyphforge::png
