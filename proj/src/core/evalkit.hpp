// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/json_util.hpp"
#include "core/model.hpp"
#include "core/vocab.hpp"

namespace glyphforge {

enum class Tier : uint8_t { t1, t2, t3, t4 };

const char* tier_name(Tier t) noexcept;  // "T1".."T4"
Tier tier_from_name(const std::string& name);

// Classifies by total non-whitespace scalar count: T1 up to 20, T2 21 to 50,
// T3 51 to 100, T4 from 101.
Tier tier_of_count(std::size_t n) noexcept;
Tier tier_of(const DesignPrompt& prompt);

struct ScoreCounts {
  std::size_t matched = 0;
  std::size_t gt_total = 0;
  std::size_t ocr_total = 0;
  double precision = 0.0;  // matched / gt_total
};

// Longest common subsequence under case-sensitive token equality, both sides
// NFC-normalized before comparison.
ScoreCounts score(const std::vector<std::string>& gt_tokens,
                  const std::vector<std::string>& ocr_tokens, Lang language);

struct ScoredResult {
  Lang language = Lang::en;
  Tier tier = Tier::t1;
  std::size_t matched = 0;
  std::size_t gt_total = 0;
  std::size_t ocr_total = 0;
};

struct ReportCell {
  std::size_t matched = 0;
  std::size_t gt_total = 0;
  std::size_t ocr_total = 0;
  double precision() const noexcept {
    return gt_total == 0 ? 0.0
                         : static_cast<double>(matched) /
                               static_cast<double>(gt_total);
  }
};

struct ScoreReport {
  std::map<std::pair<Lang, Tier>, ReportCell> cells;

  void merge(const ScoreReport& other);
  Json to_json() const;
  // Language rows by tier columns; absent cells render as an em dash.
  std::string to_text_table() const;
};

ScoreReport aggregate(const std::vector<ScoredResult>& results);

// Each token independently corrupted with probability p: a coin then picks
// dropping it or appending U+2020, a scalar outside every charset, so a
// mangled token can never match ground truth.
std::vector<std::string> corrupt(const std::vector<std::string>& gt_tokens,
                                 double p, uint64_t seed);

struct BenchmarkEntry {
  std::string id;
  Lang language = Lang::en;
  Tier tier = Tier::t1;
  DesignPrompt prompt;
  std::vector<std::vector<std::string>> gt_spans;
};

struct BenchmarkConfig {
  int per_tier = 25;
  std::vector<Lang> languages;  // defaults to all ten
  std::vector<std::string> captions;

  BenchmarkConfig();
};

// Deterministically samples prompts from the vocabularies: per language,
// per_tier entries in each of the four tiers, span text assembled to an exact
// scalar count inside the tier range.
std::vector<BenchmarkEntry> build_benchmark(
    const BenchmarkConfig& config, const std::map<Lang, Vocabulary>& vocabs,
    uint64_t seed);

Json benchmark_entry_to_json(const BenchmarkEntry& entry);
BenchmarkEntry benchmark_entry_from_json(const Json& j);

void write_benchmark_jsonl(const std::vector<BenchmarkEntry>& entries,
                           const std::string& path);
std::vector<BenchmarkEntry> read_benchmark_jsonl(const std::string& path);

struct OcrDocument {
  std::string id;
  std::vector<std::string> texts;
};

void write_ocr_jsonl(const std::vector<OcrDocument>& docs,
                     const std::string& path);
std::vector<OcrDocument> read_ocr_jsonl(const std::string& path);

// Joins OCR documents to benchmark entries by id; entries with no OCR row
// score zero matches. Ground-truth and OCR tokens concatenate across spans
// and texts in document order.
ScoreReport score_benchmark(const std::vector<BenchmarkEntry>& entries,
                            const std::vector<OcrDocument>& ocr);

}  // namespace glyphforge
