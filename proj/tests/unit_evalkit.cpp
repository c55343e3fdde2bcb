// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "core/error.hpp"
#include "core/evalkit.hpp"
#include "core/prompt.hpp"
#include "core/rng.hpp"
#include "core/unicode.hpp"
#include "core/vocab.hpp"
#include "test_util.hpp"

using namespace glyphforge;

namespace {

template <typename F>
Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

std::string assets(const std::string& rel) {
  return (gftest::assets_dir() / rel).string();
}

// Exhaustive reference: the longest subsequence of gt that is also a
// subsequence of ocr, found by trying every subset mask of gt.
std::size_t lcs_oracle(const std::vector<std::string>& gt,
                       const std::vector<std::string>& ocr) {
  std::size_t best = 0;
  for (uint32_t mask = 0; mask < (1u << gt.size()); ++mask) {
    std::size_t count = 0, j = 0;
    bool ok = true;
    for (std::size_t i = 0; i < gt.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      while (j < ocr.size() && ocr[j] != gt[i]) ++j;
      if (j == ocr.size()) {
        ok = false;
        break;
      }
      ++j;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

std::map<Lang, Vocabulary> load_vocabs(const std::vector<Lang>& langs) {
  std::map<Lang, Vocabulary> vocabs;
  for (Lang lang : langs) {
    CharSet cs = load_charset(
        assets("charsets/" + std::string(lang_code(lang)) + ".txt"));
    vocabs.emplace(lang, load_vocab(
        assets("vocab/" + std::string(lang_code(lang)) + ".txt"), cs));
  }
  return vocabs;
}

}  // namespace

TEST_CASE("tier classification boundaries") {
  CHECK(tier_of_count(1) == Tier::t1);
  CHECK(tier_of_count(20) == Tier::t1);
  CHECK(tier_of_count(21) == Tier::t2);
  CHECK(tier_of_count(50) == Tier::t2);
  CHECK(tier_of_count(51) == Tier::t3);
  CHECK(tier_of_count(100) == Tier::t3);
  CHECK(tier_of_count(101) == Tier::t4);
  CHECK(tier_of_count(100000) == Tier::t4);
  CHECK(std::string(tier_name(Tier::t1)) == "T1");
  CHECK(tier_from_name("T4") == Tier::t4);
  CHECK(error_code_of([] { tier_from_name("T9"); }) == Errc::config_invalid);
  DesignPrompt p;
  p.spans.push_back(TextSpan{"ab cd", 0, {}, Lang::en, {}});
  p.spans.push_back(TextSpan{"一二三", 0, {}, Lang::cn, {}});
  CHECK(tier_of(p) == Tier::t1);
}

TEST_CASE("score counts longest common subsequences") {
  ScoreCounts c = score({"a", "b", "c"}, {"a", "c"}, Lang::en);
  CHECK(c.matched == 2);
  CHECK(c.gt_total == 3);
  CHECK(c.ocr_total == 2);
  CHECK(c.precision == doctest::Approx(2.0 / 3.0));
  CHECK(score({"a"}, {}, Lang::en).matched == 0);
  CHECK(score({"a", "b"}, {"b", "a"}, Lang::en).matched == 1);
  CHECK(score({"x"}, {"X"}, Lang::en).matched == 0);
  // NFC applies to both sides before comparison.
  CHECK(score({"café"}, {"café"}, Lang::fr).matched == 1);
  CHECK(error_code_of([] { score({}, {"a"}, Lang::en); }) ==
        Errc::empty_ground_truth);
}

TEST_CASE("score agrees with the exhaustive oracle on small cases") {
  std::vector<std::string> alphabet = {"a", "b", "c", "ab"};
  Rng rng(404);
  for (int it = 0; it < 300; ++it) {
    std::vector<std::string> gt, ocr;
    std::size_t ng = 1 + rng.below(8), no = rng.below(9);
    for (std::size_t i = 0; i < ng; ++i) gt.push_back(rng.pick(alphabet));
    for (std::size_t i = 0; i < no; ++i) ocr.push_back(rng.pick(alphabet));
    CHECK(score(gt, ocr, Lang::en).matched == lcs_oracle(gt, ocr));
  }
}

TEST_CASE("reports aggregate per language and tier") {
  std::vector<ScoredResult> results;
  results.push_back({Lang::en, Tier::t1, 8, 10, 9});
  results.push_back({Lang::en, Tier::t1, 2, 10, 11});
  results.push_back({Lang::cn, Tier::t3, 30, 30, 30});
  ScoreReport report = aggregate(results);
  REQUIRE(report.cells.size() == 2);
  const ReportCell& cell = report.cells.at({Lang::en, Tier::t1});
  CHECK(cell.matched == 10);
  CHECK(cell.gt_total == 20);
  CHECK(cell.precision() == doctest::Approx(0.5));
  Json j = report.to_json();
  CHECK(j.at("grid").at("en").at("T1").at("precision").get<double>() ==
        doctest::Approx(0.5));
  std::string table = report.to_text_table();
  CHECK(table.find("en") != std::string::npos);
  CHECK(table.find("50.00%") != std::string::npos);
  CHECK(table.find("—") != std::string::npos);
  CHECK(table.find("all") != std::string::npos);

  ScoreReport other;
  other.cells[{Lang::en, Tier::t1}] = ReportCell{5, 10, 10};
  report.merge(other);
  CHECK(report.cells.at({Lang::en, Tier::t1}).matched == 15);
  CHECK(report.cells.at({Lang::en, Tier::t1}).gt_total == 30);
}

TEST_CASE("corruption keeps dropped and mangled tokens off the match") {
  std::vector<std::string> gt;
  for (int i = 0; i < 200; ++i) gt.push_back("tok" + std::to_string(i % 17));
  CHECK(corrupt(gt, 0.0, 5) == gt);
  std::vector<std::string> all = corrupt(gt, 1.0, 5);
  for (const std::string& t : all)
    CHECK(t.find("†") != std::string::npos);
  std::vector<std::string> half = corrupt(gt, 0.5, 7);
  CHECK(half.size() <= gt.size());
  std::size_t matched = score(gt, half, Lang::en).matched;
  std::size_t kept = 0;
  for (const std::string& t : half)
    if (t.find("†") == std::string::npos) ++kept;
  CHECK(matched == kept);
  CHECK(corrupt(gt, 0.5, 7) == half);
  CHECK(error_code_of([&] { corrupt(gt, 1.5, 0); }) == Errc::config_invalid);
  CHECK(error_code_of([&] { corrupt(gt, -0.5, 0); }) == Errc::config_invalid);
}

TEST_CASE("benchmark build emits the tier grid per language") {
  BenchmarkConfig cfg;
  cfg.per_tier = 3;
  cfg.languages = {Lang::en, Lang::cn};
  auto vocabs = load_vocabs(cfg.languages);
  std::vector<BenchmarkEntry> entries = build_benchmark(cfg, vocabs, 77);
  REQUIRE(entries.size() == 2 * 4 * 3);
  std::map<std::pair<Lang, Tier>, int> grid;
  std::set<std::string> ids;
  for (const auto& e : entries) {
    ++grid[{e.language, e.tier}];
    CHECK(ids.insert(e.id).second);
    CHECK(tier_of(e.prompt) == e.tier);
    REQUIRE(!e.prompt.spans.empty());
    REQUIRE(e.gt_spans.size() == e.prompt.spans.size());
    for (std::size_t s = 0; s < e.gt_spans.size(); ++s) {
      CHECK(e.gt_spans[s] ==
            segment(e.prompt.spans[s].content, e.language));
      CHECK(e.prompt.spans[s].font.prefix == font_prefix_for(e.language));
      CHECK(e.prompt.spans[s].color_id >= 0);
      CHECK(e.prompt.spans[s].color_id < 128);
    }
    // The serialized prompt parses back to the same spans.
    DesignPrompt back = parse_prompt(serialize_prompt(e.prompt));
    CHECK(back == e.prompt);
  }
  for (Lang lang : cfg.languages)
    for (Tier t : {Tier::t1, Tier::t2, Tier::t3, Tier::t4})
      CHECK(grid[{lang, t}] == 3);
  CHECK(entries[0].id == "en-T1-0");

  std::vector<BenchmarkEntry> again = build_benchmark(cfg, vocabs, 77);
  REQUIRE(again.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    CHECK(benchmark_entry_to_json(again[i]).dump() ==
          benchmark_entry_to_json(entries[i]).dump());
  std::vector<BenchmarkEntry> other = build_benchmark(cfg, vocabs, 78);
  bool differs = false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (benchmark_entry_to_json(other[i]).dump() !=
        benchmark_entry_to_json(entries[i]).dump())
      differs = true;
  CHECK(differs);
}

TEST_CASE("benchmark build validates configuration") {
  BenchmarkConfig cfg;
  cfg.per_tier = 0;
  cfg.languages = {Lang::en};
  auto vocabs = load_vocabs(cfg.languages);
  CHECK(error_code_of([&] { build_benchmark(cfg, vocabs, 1); }) ==
        Errc::config_invalid);
  cfg.per_tier = 1;
  cfg.languages.clear();
  CHECK(error_code_of([&] { build_benchmark(cfg, vocabs, 1); }) ==
        Errc::config_invalid);
  cfg.languages = {Lang::fr};
  CHECK(error_code_of([&] { build_benchmark(cfg, vocabs, 1); }) ==
        Errc::config_invalid);
}

TEST_CASE("benchmark jsonl round trips byte for byte") {
  BenchmarkConfig cfg;
  cfg.per_tier = 2;
  cfg.languages = {Lang::en, Lang::kr};
  auto vocabs = load_vocabs(cfg.languages);
  std::vector<BenchmarkEntry> entries = build_benchmark(cfg, vocabs, 5);
  auto tmp = gftest::fresh_tmp("benchmark_jsonl");
  std::string path = (tmp / "bench.jsonl").string();
  write_benchmark_jsonl(entries, path);
  std::vector<BenchmarkEntry> back = read_benchmark_jsonl(path);
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    CHECK(benchmark_entry_to_json(back[i]).dump() ==
          benchmark_entry_to_json(entries[i]).dump());
  std::string bytes = gftest::slurp(path);
  write_benchmark_jsonl(back, path);
  CHECK(gftest::slurp(path) == bytes);
  gftest::write_file(tmp / "bad.jsonl", "{\"id\": \"x\"\nnot json\n");
  CHECK(error_code_of([&] {
          read_benchmark_jsonl((tmp / "bad.jsonl").string());
        }) == Errc::manifest_corrupt);
}

TEST_CASE("ocr jsonl round trips") {
  std::vector<OcrDocument> docs;
  docs.push_back({"en-T1-0", {"hello world", "again"}});
  docs.push_back({"cn-T2-1", {"了子"}});
  auto tmp = gftest::fresh_tmp("ocr_jsonl");
  std::string path = (tmp / "ocr.jsonl").string();
  write_ocr_jsonl(docs, path);
  std::vector<OcrDocument> back = read_ocr_jsonl(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].id == "en-T1-0");
  CHECK(back[0].texts == docs[0].texts);
  CHECK(back[1].texts == docs[1].texts);
}

TEST_CASE("scoring a benchmark against itself is perfect") {
  BenchmarkConfig cfg;
  cfg.per_tier = 2;
  cfg.languages = {Lang::en, Lang::jp};
  auto vocabs = load_vocabs(cfg.languages);
  std::vector<BenchmarkEntry> entries = build_benchmark(cfg, vocabs, 9);
  std::vector<OcrDocument> ocr;
  for (const auto& e : entries) {
    OcrDocument doc;
    doc.id = e.id;
    for (const TextSpan& s : e.prompt.spans) doc.texts.push_back(s.content);
    ocr.push_back(std::move(doc));
  }
  ScoreReport report = score_benchmark(entries, ocr);
  for (const auto& [key, cell] : report.cells) {
    CHECK(cell.gt_total > 0);
    CHECK(cell.matched == cell.gt_total);
    CHECK(cell.precision() == doctest::Approx(1.0));
  }
  // Extra OCR noise grows ocr_total but cannot lower precision.
  for (auto& doc : ocr) doc.texts.push_back("zzz noise");
  ScoreReport noisy = score_benchmark(entries, ocr);
  for (const auto& [key, cell] : noisy.cells)
    CHECK(cell.matched == cell.gt_total);
  // A missing OCR row scores zero matches for its entry but still counts gt.
  std::vector<OcrDocument> partial(ocr.begin() + 1, ocr.end());
  ScoreReport missing = score_benchmark(entries, partial);
  const ReportCell& hit = missing.cells.at({entries[0].language,
                                            entries[0].tier});
  CHECK(hit.matched < hit.gt_total);
}

TEST_CASE("score_benchmark flags duplicate ids") {
  BenchmarkConfig cfg;
  cfg.per_tier = 1;
  cfg.languages = {Lang::en};
  auto vocabs = load_vocabs(cfg.languages);
  std::vector<BenchmarkEntry> entries = build_benchmark(cfg, vocabs, 2);
  std::vector<OcrDocument> ocr = {{entries[0].id, {"a"}},
                                  {entries[0].id, {"b"}}};
  CHECK(error_code_of([&] { score_benchmark(entries, ocr); }) ==
        Errc::manifest_corrupt);
}
