// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/augment.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/unicode.hpp"

namespace glyphforge {

namespace {

// Indices of non-whitespace scalars, the character-level unit sequence.
std::vector<std::size_t> unit_positions(const std::u32string& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!uni::is_whitespace(s[i])) out.push_back(i);
  return out;
}

std::vector<std::u32string> split_words(const std::u32string& s) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t c : s) {
    if (uni::is_whitespace(c)) {
      if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::u32string join_words(const std::vector<std::u32string>& words) {
  std::u32string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(U' ');
    out += words[i];
  }
  return out;
}

}  // namespace

const char* augment_op_name(AugmentOpKind k) noexcept {
  switch (k) {
    case AugmentOpKind::replace: return "replace";
    case AugmentOpKind::repeat: return "repeat";
    case AugmentOpKind::drop: return "drop";
    case AugmentOpKind::add: return "add";
  }
  return "?";
}

const char* augment_level_name(AugmentLevel l) noexcept {
  return l == AugmentLevel::character ? "character" : "word";
}

AugmentOpKind augment_op_from_name(const std::string& name) {
  if (name == "replace") return AugmentOpKind::replace;
  if (name == "repeat") return AugmentOpKind::repeat;
  if (name == "drop") return AugmentOpKind::drop;
  if (name == "add") return AugmentOpKind::add;
  fail(Errc::config_invalid, "unknown augment op kind: " + name);
}

AugmentLevel augment_level_from_name(const std::string& name) {
  if (name == "character") return AugmentLevel::character;
  if (name == "word") return AugmentLevel::word;
  fail(Errc::config_invalid, "unknown augment level: " + name);
}

Json augment_op_to_json(const AugmentOp& op) {
  Json j;
  j["kind"] = augment_op_name(op.kind);
  j["level"] = augment_level_name(op.level);
  j["position"] = op.position;
  if (op.kind == AugmentOpKind::repeat) j["count"] = op.count;
  if (op.kind == AugmentOpKind::replace || op.kind == AugmentOpKind::add)
    j["payload"] = op.payload;
  return j;
}

AugmentOp augment_op_from_json(const Json& j) {
  AugmentOp op;
  op.kind = augment_op_from_name(j.at("kind").get<std::string>());
  op.level = augment_level_from_name(j.at("level").get<std::string>());
  op.position = j.at("position").get<std::size_t>();
  if (j.contains("count")) op.count = j.at("count").get<int>();
  if (j.contains("payload")) op.payload = j.at("payload").get<std::string>();
  return op;
}

Json record_to_json(const AugmentationRecord& rec) {
  Json j;
  j["anchor"] = rec.anchor_text;
  j["negative"] = rec.negative_text;
  j["language"] = lang_code(rec.language);
  j["seed"] = rec.seed;
  Json ops = Json::array();
  for (const AugmentOp& op : rec.ops) ops.push_back(augment_op_to_json(op));
  j["ops"] = std::move(ops);
  return j;
}

AugmentationRecord record_from_json(const Json& j) {
  AugmentationRecord rec;
  rec.anchor_text = j.at("anchor").get<std::string>();
  rec.negative_text = j.at("negative").get<std::string>();
  rec.language = lang_from_code_or_throw(j.at("language").get<std::string>());
  rec.seed = j.at("seed").get<uint64_t>();
  for (const Json& o : j.at("ops")) rec.ops.push_back(augment_op_from_json(o));
  return rec;
}

bool op_allowed(Lang lang, AugmentOpKind kind, AugmentLevel level) noexcept {
  if (script_class(lang) == ScriptClass::alphabetic) return true;
  if (level != AugmentLevel::character) return false;
  switch (kind) {
    case AugmentOpKind::repeat:
    case AugmentOpKind::drop:
      return true;
    case AugmentOpKind::replace:
      return lang == Lang::cn;
    case AugmentOpKind::add:
      return false;
  }
  return false;
}

Augmenter::Augmenter(const Vocabulary& vocab, const CharSet& charset,
                     const ShapeIndex* shapes)
    : vocab_(&vocab), charset_(&charset), shapes_(shapes) {
  if (vocab.language != charset.language)
    fail(Errc::config_invalid, "vocabulary and charset language mismatch");
}

std::string Augmenter::apply(const std::string& text,
                             const AugmentOp& op) const {
  std::u32string u = uni::nfc(uni::decode_utf8(text));
  return uni::encode_utf8(apply_u32(u, op));
}

std::u32string Augmenter::apply_u32(const std::u32string& text,
                                    const AugmentOp& op) const {
  Lang lang = vocab_->language;
  if (!op_allowed(lang, op.kind, op.level))
    fail(Errc::op_not_allowed,
         std::string(augment_op_name(op.kind)) + " at " +
             augment_level_name(op.level) + " level is not legal for " +
             lang_code(lang));

  std::u32string payload = uni::nfc(uni::decode_utf8(op.payload));
  bool needs_payload =
      op.kind == AugmentOpKind::replace || op.kind == AugmentOpKind::add;
  if (needs_payload) {
    if (payload.empty()) fail(Errc::config_invalid, "op requires a payload");
    for (char32_t c : payload) {
      if (uni::is_whitespace(c))
        fail(Errc::config_invalid, "payload cannot contain whitespace");
      if (!charset_->contains(c))
        fail(Errc::unknown_character,
             "payload scalar outside charset: " + uni::encode_utf8(c));
    }
  }
  if (op.kind == AugmentOpKind::repeat && op.count < 1)
    fail(Errc::config_invalid, "repeat count must be positive");

  if (op.level == AugmentLevel::character) {
    if (payload.size() > 1)
      fail(Errc::config_invalid, "character-level payload must be one scalar");
    std::vector<std::size_t> units = unit_positions(text);
    std::size_t n = units.size();
    std::size_t limit = op.kind == AugmentOpKind::add ? n : n == 0 ? 0 : n - 1;
    if (n == 0 || op.position > limit)
      fail(Errc::position_out_of_range,
           "position " + std::to_string(op.position) + " outside " +
               std::to_string(n) + " units");
    std::u32string out = text;
    switch (op.kind) {
      case AugmentOpKind::replace:
        out[units[op.position]] = payload[0];
        break;
      case AugmentOpKind::repeat:
        out.insert(units[op.position] + 1,
                   std::u32string(static_cast<std::size_t>(op.count),
                                  text[units[op.position]]));
        break;
      case AugmentOpKind::drop:
        if (n == 1)
          fail(Errc::op_not_allowed, "drop would empty a one-unit text");
        out.erase(units[op.position], 1);
        break;
      case AugmentOpKind::add:
        if (op.position == n)
          out.push_back(payload[0]);
        else
          out.insert(units[op.position], 1, payload[0]);
        break;
    }
    return out;
  }

  std::vector<std::u32string> words = split_words(text);
  std::size_t n = words.size();
  std::size_t limit = op.kind == AugmentOpKind::add ? n : n == 0 ? 0 : n - 1;
  if (n == 0 || op.position > limit)
    fail(Errc::position_out_of_range,
         "position " + std::to_string(op.position) + " outside " +
             std::to_string(n) + " words");
  switch (op.kind) {
    case AugmentOpKind::replace:
      words[op.position] = payload;
      break;
    case AugmentOpKind::repeat: {
      std::u32string w = words[op.position];
      words.insert(words.begin() + static_cast<std::ptrdiff_t>(op.position),
                   static_cast<std::size_t>(op.count), w);
      break;
    }
    case AugmentOpKind::drop:
      if (n == 1) fail(Errc::op_not_allowed, "drop would empty a one-word text");
      words.erase(words.begin() + static_cast<std::ptrdiff_t>(op.position));
      break;
    case AugmentOpKind::add:
      words.insert(words.begin() + static_cast<std::ptrdiff_t>(op.position),
                   payload);
      break;
  }
  return join_words(words);
}

std::optional<AugmentOp> Augmenter::propose_op(const std::u32string& current,
                                               Rng& rng) const {
  Lang lang = vocab_->language;
  bool alphabetic = script_class(lang) == ScriptClass::alphabetic;

  AugmentLevel level = alphabetic && rng.chance(0.5) ? AugmentLevel::word
                                                     : AugmentLevel::character;
  std::size_t n = level == AugmentLevel::character
                      ? unit_positions(current).size()
                      : split_words(current).size();
  if (n == 0) return std::nullopt;

  std::vector<AugmentOpKind> kinds;
  for (AugmentOpKind k : {AugmentOpKind::replace, AugmentOpKind::repeat,
                          AugmentOpKind::drop, AugmentOpKind::add}) {
    if (!op_allowed(lang, k, level)) continue;
    if (k == AugmentOpKind::drop && n == 1) continue;
    if (k == AugmentOpKind::replace && lang == Lang::cn &&
        (shapes_ == nullptr || shapes_->size() == 0))
      continue;
    kinds.push_back(k);
  }
  if (kinds.empty()) return std::nullopt;

  AugmentOp op;
  op.kind = kinds[rng.below(kinds.size())];
  op.level = level;
  op.position = rng.below(op.kind == AugmentOpKind::add ? n + 1 : n);
  op.count = 1;

  if (op.kind == AugmentOpKind::replace || op.kind == AugmentOpKind::add) {
    if (level == AugmentLevel::word) {
      const std::string& w = vocab_->words[rng.below(vocab_->words.size())];
      op.payload = w;
      if (op.kind == AugmentOpKind::replace) {
        std::u32string cur_word = split_words(current)[op.position];
        if (uni::decode_utf8(w) == cur_word) return std::nullopt;
      }
    } else if (lang == Lang::cn && op.kind == AugmentOpKind::replace) {
      std::vector<std::size_t> units = unit_positions(current);
      char32_t ch = current[units[op.position]];
      if (!shapes_->known(ch)) return std::nullopt;
      std::vector<char32_t> cands = shapes_->lookup(ch, 8);
      std::vector<char32_t> usable;
      for (char32_t c : cands)
        if (charset_->contains(c)) usable.push_back(c);
      if (usable.empty()) return std::nullopt;
      op.payload = uni::encode_utf8(usable[rng.below(usable.size())]);
    } else {
      char32_t pick = charset_->scalars[rng.below(charset_->scalars.size())];
      if (op.kind == AugmentOpKind::replace) {
        std::vector<std::size_t> units = unit_positions(current);
        if (pick == current[units[op.position]]) return std::nullopt;
      }
      op.payload = uni::encode_utf8(pick);
    }
  }
  return op;
}

std::vector<AugmentationRecord> Augmenter::hard_negatives(
    const std::string& anchor, std::size_t n, uint64_t seed) const {
  std::u32string anchor_u = uni::nfc(uni::decode_utf8(anchor));
  if (unit_positions(anchor_u).empty())
    fail(Errc::config_invalid, "anchor has no augmentable units");
  std::string anchor_nfc = uni::encode_utf8(anchor_u);
  if (n == 0) fail(Errc::config_invalid, "record count must be positive");

  std::vector<AugmentationRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    uint64_t record_seed = stable_hash_mix(seed, anchor_nfc, i);
    Rng rng(record_seed);
    AugmentationRecord rec;
    rec.anchor_text = anchor_nfc;
    rec.language = vocab_->language;
    rec.seed = record_seed;

    bool accepted = false;
    for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
      std::size_t nops = 1 + rng.below(3);
      std::u32string cur = anchor_u;
      std::vector<AugmentOp> ops;
      bool ok = true;
      for (std::size_t j = 0; j < nops; ++j) {
        std::optional<AugmentOp> op = propose_op(cur, rng);
        if (!op) {
          ok = false;
          break;
        }
        cur = apply_u32(cur, *op);
        ops.push_back(std::move(*op));
      }
      if (ok && cur != anchor_u) {
        rec.ops = std::move(ops);
        rec.negative_text = uni::encode_utf8(cur);
        accepted = true;
      }
    }
    if (!accepted) {
      // forced edit: guaranteed to change the text
      AugmentOp op;
      op.level = AugmentLevel::character;
      op.position = 0;
      op.kind = unit_positions(anchor_u).size() > 1 ? AugmentOpKind::drop
                                                    : AugmentOpKind::repeat;
      rec.ops = {op};
      rec.negative_text = uni::encode_utf8(apply_u32(anchor_u, op));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace glyphforge
