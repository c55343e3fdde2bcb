// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/font_catalog.hpp"
#include "core/vocab.hpp"

namespace glyphforge {

// Ranked visually-similar-character candidates. Similarity is the
// intersection-over-union of binarized em-box rasters in one reference
// font; curated overrides outrank every computed candidate.
class ShapeIndex {
 public:
  ShapeIndex() = default;

  // Pairwise IoU over the charset at raster_size x raster_size, keeping the
  // top_k best candidates per scalar (ties break toward the lower scalar).
  // Scalars the font does not cover are skipped and reported in warnings().
  static ShapeIndex build(const CharSet& charset, const FontCatalog& catalog,
                          const FontEntry& font, int raster_size = 32, int top_k = 50);

  // TSV: `scalar<TAB>cand1,cand2,...` per line, `#` comments ignored.
  static ShapeIndex load(const std::string& tsv_path);
  void save(const std::string& tsv_path) const;

  // TSV: `scalar<TAB>replacement` per line; merged in file order ahead of
  // computed candidates.
  void merge_overrides(const std::string& tsv_path);
  void add_override(char32_t from, char32_t to);

  // Overrides first, then computed candidates by descending similarity;
  // never contains ch itself; at most k entries.
  std::vector<char32_t> lookup(char32_t ch, int k) const;

  bool known(char32_t ch) const noexcept;
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::map<char32_t, std::vector<char32_t>> rows_;       // computed, ranked
  std::map<char32_t, std::vector<char32_t>> overrides_;  // curated, ranked
  std::vector<std::string> warnings_;
};

}  // namespace glyphforge
