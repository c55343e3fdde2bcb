// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace glyphforge {

// Letter inventory of one language. Punctuation and digits are not
// members; they ride along in span content but are never augmentation
// targets.
struct CharSet {
  Lang language = Lang::en;
  std::vector<char32_t> scalars;  // sorted, unique
  int declared_size = 0;

  bool contains(char32_t cp) const noexcept;
  std::size_t size() const noexcept { return scalars.size(); }
};

// File format: `# glyphforge-charset language=xx size=N` header, then one
// scalar per line.
CharSet load_charset(const std::string& path);

struct Vocabulary {
  Lang language = Lang::en;
  std::vector<std::string> words;  // rank order, best first
};

// File format: `# glyphforge-vocab language=xx size=N` header, then
// `word<TAB>count` lines ranked best-first.
Vocabulary load_vocab(const std::string& path, const CharSet& charset);

// Top-5000 by count, ties broken lexicographically; words with scalars
// outside the charset are excluded; duplicate words merge by summed count.
Vocabulary build_vocab(Lang language,
                       const std::vector<std::pair<std::string, uint64_t>>& corpus,
                       const CharSet& charset);

// Alphabetic: maximal non-whitespace runs. Character-based: one token per
// non-whitespace scalar. Input must be NFC-normalized.
std::vector<std::string> segment(const std::string& text, Lang language);

}  // namespace glyphforge
