// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace glyphforge::uni {

namespace {

#include "core/nfc_data.inc"

constexpr char32_t kReplacement = 0xFFFD;

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

int combining_class(char32_t cp) noexcept {
  auto it = std::lower_bound(std::begin(kNfcCcc), std::end(kNfcCcc), cp,
                             [](const NfcCcc& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kNfcCcc) && it->cp == cp) return it->ccc;
  return 0;
}

const NfcDecomp* find_decomp(char32_t cp) noexcept {
  auto it = std::lower_bound(std::begin(kNfcDecomps), std::end(kNfcDecomps), cp,
                             [](const NfcDecomp& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kNfcDecomps) && it->cp == cp) return &*it;
  return nullptr;
}

char32_t compose_pair(char32_t a, char32_t b) noexcept {
  // algorithmic Hangul first
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
      b < kHangulVBase + kHangulVCount) {
    return kHangulSBase +
           (static_cast<int>(a - kHangulLBase) * kHangulVCount +
            static_cast<int>(b - kHangulVBase)) *
               kHangulTCount;
  }
  if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    return a + (b - kHangulTBase);
  }
  auto it = std::lower_bound(
      std::begin(kNfcPairs), std::end(kNfcPairs), std::pair<char32_t, char32_t>{a, b},
      [](const NfcPair& e, const std::pair<char32_t, char32_t>& key) {
        if (e.a != key.first) return e.a < key.first;
        return e.b < key.second;
      });
  if (it != std::end(kNfcPairs) && it->a == a && it->b == b) return it->composed;
  return 0;
}

void decompose_into(char32_t cp, std::u32string& out) {
  if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
    char32_t s = cp - kHangulSBase;
    out.push_back(kHangulLBase + s / kHangulNCount);
    out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
    char32_t t = s % kHangulTCount;
    if (t != 0) out.push_back(kHangulTBase + t);
    return;
  }
  if (const NfcDecomp* d = find_decomp(cp)) {
    // table stores the full NFD expansion, so no recursion is needed
    for (int i = 0; i < d->n; ++i) out.push_back(d->out[i]);
    return;
  }
  out.push_back(cp);
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  while (i < s.size()) {
    unsigned char c = p[i];
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    int need;
    char32_t cp;
    if ((c & 0xE0) == 0xC0) {
      need = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      need = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      need = 3;
      cp = c & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(need) >= s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= need; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    // reject overlongs, surrogates, out of range
    if ((need == 1 && cp < 0x80) || (need == 2 && cp < 0x800) ||
        (need == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(need) + 1;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) out += encode_utf8(cp);
  return out;
}

std::size_t byte_offset_of_scalar(std::string_view s, std::size_t index) {
  std::size_t i = 0, seen = 0;
  while (i < s.size() && seen < index) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t step = 1;
    if ((c & 0xE0) == 0xC0) step = 2;
    else if ((c & 0xF0) == 0xE0) step = 3;
    else if ((c & 0xF8) == 0xF0) step = 4;
    i = std::min(s.size(), i + step);
    ++seen;
  }
  return i;
}

bool is_whitespace(char32_t cp) noexcept {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
    case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
    case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
    case 0x3000:
      return true;
    default:
      return false;
  }
}

std::u32string nfc(std::u32string_view s) {
  // decompose
  std::u32string d;
  d.reserve(s.size());
  for (char32_t cp : s) decompose_into(cp, d);

  // canonical ordering: stable bubble of nonzero-ccc runs
  for (std::size_t i = 1; i < d.size(); ++i) {
    int cc = combining_class(d[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      int prev = combining_class(d[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(d[j - 1], d[j]);
      --j;
    }
  }

  // compose
  std::u32string out;
  out.reserve(d.size());
  std::size_t starter = std::u32string::npos;
  int last_cc = -1;
  for (char32_t cp : d) {
    int cc = combining_class(cp);
    if (starter != std::u32string::npos && (last_cc < cc || last_cc == -1)) {
      if (char32_t comp = compose_pair(out[starter], cp)) {
        out[starter] = comp;
        continue;
      }
    }
    if (cc == 0) {
      starter = out.size();
      last_cc = -1;
    } else {
      last_cc = cc;
    }
    out.push_back(cp);
  }
  return out;
}

std::string nfc_utf8(std::string_view s) { return encode_utf8(nfc(decode_utf8(s))); }

std::size_t count_glyph_scalars(std::u32string_view s) noexcept {
  std::size_t n = 0;
  for (char32_t cp : s)
    if (!is_whitespace(cp)) ++n;
  return n;
}

std::size_t count_glyph_scalars_utf8(std::string_view s) {
  return count_glyph_scalars(decode_utf8(s));
}

std::vector<std::string> split_runs(std::string_view s) {
  std::vector<std::string> out;
  std::u32string cur;
  for (char32_t cp : decode_utf8(s)) {
    if (is_whitespace(cp)) {
      if (!cur.empty()) {
        out.push_back(encode_utf8(cur));
        cur.clear();
      }
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) out.push_back(encode_utf8(cur));
  return out;
}

std::vector<std::string> split_scalars(std::string_view s) {
  std::vector<std::string> out;
  for (char32_t cp : decode_utf8(s))
    if (!is_whitespace(cp)) out.push_back(encode_utf8(cp));
  return out;
}

char32_t to_upper(char32_t cp) noexcept {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;  // à–þ except ÷
  if (cp == 0xFF) return 0x178;                                  // ÿ -> Ÿ
  if (cp == 0xDF) return 0x1E9E;                                 // ß -> ẞ
  if (cp >= 0x100 && cp <= 0x177 && (cp & 1)) return cp - 1;     // Ā/ā pairs
  if (cp >= 0x179 && cp <= 0x17E && !(cp & 1)) return cp - 1;    // Ź/ź pairs
  if (cp >= 0x430 && cp <= 0x44F) return cp - 0x20;              // а–я
  if (cp >= 0x450 && cp <= 0x45F) return cp - 0x50;              // ѐ–џ incl. ё
  return cp;
}

char32_t to_lower(char32_t cp) noexcept {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // À–Þ except ×
  if (cp == 0x178) return 0xFF;
  if (cp == 0x1E9E) return 0xDF;
  if (cp >= 0x100 && cp <= 0x177 && !(cp & 1)) return cp + 1;
  if (cp >= 0x179 && cp <= 0x17E && (cp & 1)) return cp + 1;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

std::string upper_utf8(std::string_view s) {
  std::u32string u = decode_utf8(s);
  for (auto& cp : u) cp = to_upper(cp);
  return encode_utf8(u);
}

std::string lower_utf8(std::string_view s) {
  std::u32string u = decode_utf8(s);
  for (auto& cp : u) cp = to_lower(cp);
  return encode_utf8(u);
}

}  // namespace glyphforge::uni
