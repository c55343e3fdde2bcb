// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/json_util.hpp"
#include "core/model.hpp"
#include "core/rng.hpp"
#include "core/shape_index.hpp"
#include "core/vocab.hpp"

namespace glyphforge {

enum class AugmentOpKind {
  replace,  // cn draws the payload from the shape index
  repeat,
  drop,
  add,
};

enum class AugmentLevel {
  character,
  word,
};

const char* augment_op_name(AugmentOpKind k) noexcept;
const char* augment_level_name(AugmentLevel l) noexcept;
AugmentOpKind augment_op_from_name(const std::string& name);
AugmentLevel augment_level_from_name(const std::string& name);

// One edit on a unit sequence. Units are non-whitespace scalars at character
// level and whitespace-separated words at word level. count applies to repeat;
// payload to replace and add. add accepts position == unit count (append).
struct AugmentOp {
  AugmentOpKind kind = AugmentOpKind::drop;
  AugmentLevel level = AugmentLevel::character;
  std::size_t position = 0;
  int count = 1;
  std::string payload;
};

struct AugmentationRecord {
  std::string anchor_text;
  std::string negative_text;
  Lang language = Lang::en;
  uint64_t seed = 0;
  std::vector<AugmentOp> ops;
};

Json augment_op_to_json(const AugmentOp& op);
AugmentOp augment_op_from_json(const Json& j);
Json record_to_json(const AugmentationRecord& rec);
AugmentationRecord record_from_json(const Json& j);

// Alphabetic scripts take all four kinds at both levels; cn takes
// {repeat, drop, replace} at character level; jp and kr take {repeat, drop}
// at character level.
bool op_allowed(Lang lang, AugmentOpKind kind, AugmentLevel level) noexcept;

class Augmenter {
 public:
  // shapes may be null; cn then loses the replace kind in sampled ops.
  Augmenter(const Vocabulary& vocab, const CharSet& charset,
            const ShapeIndex* shapes);

  // Applies one op to NFC-normalized text. Word-level ops rejoin the words
  // with single spaces.
  std::string apply(const std::string& text, const AugmentOp& op) const;

  // n records for the anchor, each built from 1 to 3 sampled legal ops,
  // resampled (64-try bound) until the negative differs from the anchor, then
  // forced to a first-unit drop (repeat when only one unit remains).
  // Deterministic in (anchor, n, seed).
  std::vector<AugmentationRecord> hard_negatives(const std::string& anchor,
                                                 std::size_t n,
                                                 uint64_t seed) const;

  Lang language() const noexcept { return vocab_->language; }

 private:
  std::u32string apply_u32(const std::u32string& text,
                           const AugmentOp& op) const;
  std::optional<AugmentOp> propose_op(const std::u32string& current,
                                      Rng& rng) const;

  const Vocabulary* vocab_;
  const CharSet* charset_;
  const ShapeIndex* shapes_;
};

}  // namespace glyphforge
