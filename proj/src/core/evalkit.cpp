// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/evalkit.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

#include "core/error.hpp"
#include "core/prompt.hpp"
#include "core/rng.hpp"
#include "core/unicode.hpp"

namespace glyphforge {

namespace {

constexpr std::array<Tier, 4> kAllTiers = {Tier::t1, Tier::t2, Tier::t3,
                                           Tier::t4};

// inclusive scalar-count range per tier; T4's top stays within render reach
constexpr std::pair<int, int> tier_range(Tier t) {
  switch (t) {
    case Tier::t1: return {5, 20};
    case Tier::t2: return {21, 50};
    case Tier::t3: return {51, 100};
    case Tier::t4: return {101, 180};
  }
  return {5, 20};
}

std::size_t scalar_count_utf8(const std::string& s) {
  std::size_t n = 0;
  for (char32_t c : uni::decode_utf8(s))
    if (!uni::is_whitespace(c)) ++n;
  return n;
}

}  // namespace

const char* tier_name(Tier t) noexcept {
  switch (t) {
    case Tier::t1: return "T1";
    case Tier::t2: return "T2";
    case Tier::t3: return "T3";
    case Tier::t4: return "T4";
  }
  return "?";
}

Tier tier_from_name(const std::string& name) {
  for (Tier t : kAllTiers)
    if (name == tier_name(t)) return t;
  fail(Errc::config_invalid, "unknown tier: " + name);
}

Tier tier_of_count(std::size_t n) noexcept {
  if (n <= 20) return Tier::t1;
  if (n <= 50) return Tier::t2;
  if (n <= 100) return Tier::t3;
  return Tier::t4;
}

Tier tier_of(const DesignPrompt& prompt) {
  if (prompt.spans.empty())
    fail(Errc::config_invalid, "prompt has no spans to classify");
  return tier_of_count(glyph_char_count(prompt.spans));
}

ScoreCounts score(const std::vector<std::string>& gt_tokens,
                  const std::vector<std::string>& ocr_tokens, Lang language) {
  (void)language;
  if (gt_tokens.empty())
    fail(Errc::empty_ground_truth, "ground truth has no tokens");

  std::vector<std::string> gt(gt_tokens.size()), ocr(ocr_tokens.size());
  for (std::size_t i = 0; i < gt_tokens.size(); ++i)
    gt[i] = uni::nfc_utf8(gt_tokens[i]);
  for (std::size_t i = 0; i < ocr_tokens.size(); ++i)
    ocr[i] = uni::nfc_utf8(ocr_tokens[i]);

  // LCS length over tokens, rolling rows
  std::size_t n = gt.size(), m = ocr.size();
  std::vector<uint32_t> prev(m + 1, 0), curr(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (gt[i - 1] == ocr[j - 1])
        curr[j] = prev[j - 1] + 1;
      else
        curr[j] = std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }

  ScoreCounts out;
  out.matched = prev[m];
  out.gt_total = n;
  out.ocr_total = m;
  out.precision = static_cast<double>(out.matched) / static_cast<double>(n);
  return out;
}

void ScoreReport::merge(const ScoreReport& other) {
  for (const auto& [key, cell] : other.cells) {
    ReportCell& mine = cells[key];
    mine.matched += cell.matched;
    mine.gt_total += cell.gt_total;
    mine.ocr_total += cell.ocr_total;
  }
}

Json ScoreReport::to_json() const {
  Json grid = Json::object();
  for (Lang lang : kAllLangs) {
    Json row = Json::object();
    for (Tier t : kAllTiers) {
      auto it = cells.find({lang, t});
      if (it == cells.end()) continue;
      Json c;
      c["matched"] = it->second.matched;
      c["gt_total"] = it->second.gt_total;
      c["ocr_total"] = it->second.ocr_total;
      c["precision"] = it->second.precision();
      row[tier_name(t)] = std::move(c);
    }
    if (!row.empty()) grid[lang_code(lang)] = std::move(row);
  }
  Json j;
  j["grid"] = std::move(grid);
  return j;
}

std::string ScoreReport::to_text_table() const {
  std::string out;
  out += "language   T1       T2       T3       T4\n";
  ReportCell all;
  for (Lang lang : kAllLangs) {
    bool any = false;
    for (Tier t : kAllTiers)
      if (cells.count({lang, t})) any = true;
    if (!any) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-9s", lang_code(lang));
    out += buf;
    for (Tier t : kAllTiers) {
      auto it = cells.find({lang, t});
      if (it == cells.end()) {
        out += "  —      ";
      } else {
        std::snprintf(buf, sizeof buf, "  %6.2f%%", it->second.precision() * 100.0);
        out += buf;
        all.matched += it->second.matched;
        all.gt_total += it->second.gt_total;
        all.ocr_total += it->second.ocr_total;
      }
    }
    out += '\n';
  }
  if (all.gt_total > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-9s  %6.2f%%\n", "all",
                  all.precision() * 100.0);
    out += buf;
  }
  return out;
}

ScoreReport aggregate(const std::vector<ScoredResult>& results) {
  ScoreReport report;
  for (const ScoredResult& r : results) {
    ReportCell& cell = report.cells[{r.language, r.tier}];
    cell.matched += r.matched;
    cell.gt_total += r.gt_total;
    cell.ocr_total += r.ocr_total;
  }
  return report;
}

std::vector<std::string> corrupt(const std::vector<std::string>& gt_tokens,
                                 double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(Errc::config_invalid, "corruption probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::string> out;
  out.reserve(gt_tokens.size());
  for (const std::string& tok : gt_tokens) {
    if (rng.chance(p)) {
      if (rng.chance(0.5)) continue;           // drop
      out.push_back(tok + "†");           // mangle
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

BenchmarkConfig::BenchmarkConfig() {
  languages.assign(kAllLangs.begin(), kAllLangs.end());
}

std::vector<BenchmarkEntry> build_benchmark(
    const BenchmarkConfig& config, const std::map<Lang, Vocabulary>& vocabs,
    uint64_t seed) {
  if (config.per_tier < 1)
    fail(Errc::config_invalid, "per_tier must be positive");
  if (config.languages.empty())
    fail(Errc::config_invalid, "benchmark needs at least one language");
  for (Lang lang : config.languages)
    if (vocabs.find(lang) == vocabs.end())
      fail(Errc::config_invalid,
           "no vocabulary for " + std::string(lang_code(lang)));

  std::vector<std::string> captions = config.captions;
  if (captions.empty())
    captions = {"a plain studio backdrop", "a festive poster background",
                "a minimalist product card", "a warm gradient banner"};

  std::vector<BenchmarkEntry> entries;
  for (Lang lang : config.languages) {
    const Vocabulary& vocab = vocabs.at(lang);
    if (vocab.words.empty()) fail(Errc::empty_corpus, "vocabulary is empty");
    std::vector<std::size_t> lens(vocab.words.size());
    std::size_t min_len = SIZE_MAX;
    for (std::size_t i = 0; i < vocab.words.size(); ++i) {
      lens[i] = scalar_count_utf8(vocab.words[i]);
      min_len = std::min(min_len, lens[i]);
    }
    if (min_len == 0) fail(Errc::config_invalid, "vocabulary has empty word");

    for (Tier tier : kAllTiers) {
      auto [lo, hi] = tier_range(tier);
      for (int k = 0; k < config.per_tier; ++k) {
        std::string row_name = std::string(lang_code(lang)) + "-" +
                               tier_name(tier) + "-" + std::to_string(k);
        Rng rng(stable_hash_mix(seed, row_name, static_cast<uint64_t>(k)));

        int n = lo + static_cast<int>(rng.below(
                         static_cast<uint64_t>(hi - lo + 1)));
        int nspans = n <= 20 ? 1 : n <= 100 ? 1 + static_cast<int>(rng.below(2))
                                            : 2 + static_cast<int>(rng.below(2));
        // positive split of n across spans, each part at least min_len
        std::vector<int> parts(static_cast<std::size_t>(nspans), 0);
        int remaining = n;
        for (int s = 0; s < nspans; ++s) {
          int slots_left = nspans - s - 1;
          int reserve = slots_left * static_cast<int>(min_len);
          int most = remaining - reserve;
          int least = static_cast<int>(min_len);
          int part = s == nspans - 1
                         ? remaining
                         : least + static_cast<int>(rng.below(
                                       static_cast<uint64_t>(most - least + 1)));
          parts[static_cast<std::size_t>(s)] = part;
          remaining -= part;
        }

        BenchmarkEntry entry;
        entry.id = row_name;
        entry.language = lang;
        entry.tier = tier;
        entry.prompt.background_caption =
            captions[rng.below(captions.size())];

        bool cjk = script_class(lang) == ScriptClass::character_based;
        for (int s = 0; s < nspans; ++s) {
          int want = parts[static_cast<std::size_t>(s)];
          std::vector<std::size_t> picked;
          int count = 0;
          while (count < want) {
            std::size_t budget = static_cast<std::size_t>(want - count);
            std::size_t w = vocab.words.size();
            for (int tries = 0; tries < 16; ++tries) {
              std::size_t cand = rng.below(vocab.words.size());
              if (lens[cand] <= budget) {
                w = cand;
                break;
              }
            }
            if (w == vocab.words.size()) {
              for (std::size_t i = 0; i < lens.size(); ++i)
                if (lens[i] <= budget) {
                  w = i;
                  break;
                }
            }
            if (w == vocab.words.size())
              fail(Errc::config_invalid,
                   "vocabulary cannot assemble the requested count");
            picked.push_back(w);
            count += static_cast<int>(lens[w]);
          }
          std::string content;
          for (std::size_t i = 0; i < picked.size(); ++i) {
            if (i && !cjk) content.push_back(' ');
            content += vocab.words[picked[i]];
          }
          TextSpan span;
          span.content = uni::nfc_utf8(content);
          span.color_id = static_cast<int>(rng.below(128));
          span.font = FontRef{font_prefix_for(lang), 0};
          span.language = lang;
          entry.prompt.spans.push_back(std::move(span));
          entry.gt_spans.push_back(
              segment(entry.prompt.spans.back().content, lang));
        }
        if (tier_of(entry.prompt) != tier)
          fail(Errc::config_invalid, "assembled prompt missed its tier");
        entries.push_back(std::move(entry));
      }
    }
  }
  return entries;
}

Json benchmark_entry_to_json(const BenchmarkEntry& entry) {
  Json j;
  j["id"] = entry.id;
  j["language"] = lang_code(entry.language);
  j["tier"] = tier_name(entry.tier);
  j["prompt"] = serialize_prompt(entry.prompt);
  Json spans = Json::array();
  for (const auto& tokens : entry.gt_spans) spans.push_back(tokens);
  j["gt_spans"] = std::move(spans);
  return j;
}

BenchmarkEntry benchmark_entry_from_json(const Json& j) {
  BenchmarkEntry entry;
  entry.id = j.at("id").get<std::string>();
  entry.language = lang_from_code_or_throw(j.at("language").get<std::string>());
  entry.tier = tier_from_name(j.at("tier").get<std::string>());
  entry.prompt = parse_prompt(j.at("prompt").get<std::string>());
  for (const Json& span : j.at("gt_spans"))
    entry.gt_spans.push_back(span.get<std::vector<std::string>>());
  return entry;
}

void write_benchmark_jsonl(const std::vector<BenchmarkEntry>& entries,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open " + path + " for write");
  for (const BenchmarkEntry& e : entries)
    out << benchmark_entry_to_json(e).dump() << '\n';
  if (!out) fail(Errc::io, "short write to " + path);
}

std::vector<BenchmarkEntry> read_benchmark_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open benchmark manifest " + path);
  std::vector<BenchmarkEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded())
      fail(Errc::manifest_corrupt,
           path + ":" + std::to_string(lineno) + ": invalid JSON");
    out.push_back(benchmark_entry_from_json(j));
  }
  return out;
}

void write_ocr_jsonl(const std::vector<OcrDocument>& docs,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open " + path + " for write");
  for (const OcrDocument& d : docs) {
    Json j;
    j["id"] = d.id;
    j["texts"] = d.texts;
    out << j.dump() << '\n';
  }
  if (!out) fail(Errc::io, "short write to " + path);
}

std::vector<OcrDocument> read_ocr_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open OCR input " + path);
  std::vector<OcrDocument> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
        !j.contains("texts"))
      fail(Errc::manifest_corrupt,
           path + ":" + std::to_string(lineno) + ": invalid OCR row");
    OcrDocument d;
    d.id = j.at("id").get<std::string>();
    d.texts = j.at("texts").get<std::vector<std::string>>();
    out.push_back(std::move(d));
  }
  return out;
}

ScoreReport score_benchmark(const std::vector<BenchmarkEntry>& entries,
                            const std::vector<OcrDocument>& ocr) {
  std::map<std::string, const OcrDocument*> by_id;
  for (const OcrDocument& d : ocr)
    if (!by_id.emplace(d.id, &d).second)
      fail(Errc::manifest_corrupt, "duplicate ocr id: " + d.id);

  std::vector<ScoredResult> results;
  results.reserve(entries.size());
  for (const BenchmarkEntry& e : entries) {
    std::vector<std::string> gt;
    for (const auto& span : e.gt_spans)
      gt.insert(gt.end(), span.begin(), span.end());
    std::vector<std::string> hyp;
    auto it = by_id.find(e.id);
    if (it != by_id.end())
      for (const std::string& text : it->second->texts) {
        std::vector<std::string> toks = segment(text, e.language);
        hyp.insert(hyp.end(), toks.begin(), toks.end());
      }
    ScoreCounts c = score(gt, hyp, e.language);
    results.push_back(
        ScoredResult{e.language, e.tier, c.matched, c.gt_total, c.ocr_total});
  }
  return aggregate(results);
}

}  // namespace glyphforge
