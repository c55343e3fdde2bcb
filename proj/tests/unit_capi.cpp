// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "glyphforge.h"

#include "json.hpp"
#include "test_util.hpp"

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Ctx {
  gf_context* c = nullptr;
  Ctx() { REQUIRE(gf_context_create(&c) == GF_OK); }
  ~Ctx() { gf_context_destroy(c); }
};

// Owns an out-string and parses it on demand.
struct Out {
  char* s = nullptr;
  ~Out() { gf_string_free(s); }
  Json json() const { return Json::parse(s); }
};

std::string assets(const std::string& rel) {
  return (gftest::assets_dir() / rel).string();
}

}  // namespace

TEST_CASE("version and status names are stable") {
  CHECK(std::string(gf_version()) == "1.0.0");
  CHECK(std::string(gf_status_name(GF_OK)) == "ok");
  CHECK(std::string(gf_status_name(GF_MALFORMED_SPAN)) == "malformed_span");
  CHECK(std::string(gf_status_name(GF_INTERNAL)) == "internal");
}

TEST_CASE("context reports the last error and clears it on success") {
  Ctx ctx;
  CHECK(std::string(gf_context_last_error(ctx.c)).empty());
  Out bad;
  CHECK(gf_plan(ctx.c, 0.0, &bad.s) == GF_SCALE_OUT_OF_RANGE);
  CHECK(bad.s == nullptr);
  CHECK(!std::string(gf_context_last_error(ctx.c)).empty());
  Out good;
  CHECK(gf_plan(ctx.c, 0.001, &good.s) == GF_OK);
  CHECK(std::string(gf_context_last_error(ctx.c)).empty());
  Json plan = good.json();
  CHECK(plan.at("glyph_total").get<uint64_t>() == 1000);
  CHECK(plan.at("design_total").get<uint64_t>() == 10000);
  CHECK(plan.at("rows").size() == 11);
  CHECK(plan.at("rows")[0].at("name") == "en");
  CHECK(plan.at("rows")[0].at("glyph_pairs").get<uint64_t>() == 100);
}

TEST_CASE("prompt round trips through parse and serialize") {
  Ctx ctx;
  const char* raw =
      "Background: A test card. Tags: retro, blue. "
      "Text: Text \"Hello\" in <color-3>, <en-font-1>.";
  Out parsed;
  REQUIRE(gf_parse_prompt(ctx.c, raw, &parsed.s) == GF_OK);
  Json j = parsed.json();
  CHECK(j.at("caption") == "A test card.");
  CHECK(j.at("spans")[0].at("text") == "Hello");
  CHECK(j.at("spans")[0].at("language") == "en");
  Out round;
  REQUIRE(gf_serialize_prompt(ctx.c, parsed.s, &round.s) == GF_OK);
  CHECK(std::string(round.s) == raw);

  Out fail_out;
  CHECK(gf_parse_prompt(ctx.c, "Background: x. Text: Text \"oops",
                        &fail_out.s) == GF_MALFORMED_SPAN);
  CHECK(std::string(gf_context_last_error(ctx.c)).find("byte") !=
        std::string::npos);
}

TEST_CASE("augment produces validated records") {
  Ctx ctx;
  Json req;
  req["text"] = "hello world";
  req["language"] = "en";
  req["count"] = 4;
  req["seed"] = 7;
  req["charsets"] = assets("charsets");
  req["vocab"] = assets("vocab");
  Out out;
  REQUIRE(gf_augment(ctx.c, req.dump().c_str(), &out.s) == GF_OK);
  Json records = out.json().at("records");
  REQUIRE(records.size() == 4);
  for (const Json& r : records) {
    CHECK(r.at("anchor") == "hello world");
    CHECK(r.at("negative") != "hello world");
    CHECK(!r.at("ops").empty());
  }
  Out rerun;
  REQUIRE(gf_augment(ctx.c, req.dump().c_str(), &rerun.s) == GF_OK);
  CHECK(std::string(out.s) == rerun.s);

  req["language"] = "xx";
  Out bad;
  CHECK(gf_augment(ctx.c, req.dump().c_str(), &bad.s) == GF_CONFIG_INVALID);
  Out null_req;
  CHECK(gf_augment(ctx.c, "nonsense{", &null_req.s) == GF_CONFIG_INVALID);
}

TEST_CASE("transform translates a document via the dictionary backend") {
  Ctx ctx;
  Json doc;
  doc["canvas"] = Json{{"width", 512}, {"height", 512}};
  doc["background"] = Json{{"kind", "caption"}, {"caption", "A poster."}};
  doc["tags"] = Json::array({"test"});
  Json span;
  span["text"] = "big black and white";
  span["language"] = "en";
  span["font"] = "en-0";
  span["color"] = 3;
  span["bbox"] = Json::array({32, 32, 448, 96});
  doc["spans"] = Json::array({span});

  Json req;
  req["document"] = doc;
  req["target"] = "fr";
  req["mode"] = "dictionary";
  req["seed"] = 11;
  req["fonts"] = Json{{"manifest", assets("fonts/manifest.json")},
                      {"charsets", assets("charsets")}};
  req["vocab"] = Json{{"dir", assets("vocab")}};
  req["backend"] =
      Json{{"kind", "dictionary"}, {"lexicons", assets("lexicons")}};
  Out out;
  REQUIRE(gf_transform(ctx.c, req.dump().c_str(), &out.s) == GF_OK);
  Json got = out.json().at("document");
  CHECK(got.at("spans")[0].at("language") == "fr");
  std::string text = got.at("spans")[0].at("text").get<std::string>();
  CHECK(text.find("et") != std::string::npos);
  CHECK(got.at("background").at("caption") == "A poster.");

  req["target"] = "zz";
  Out bad;
  CHECK(gf_transform(ctx.c, req.dump().c_str(), &bad.s) == GF_CONFIG_INVALID);
}

TEST_CASE("render writes a deterministic image") {
  Ctx ctx;
  auto tmp = gftest::fresh_tmp("capi_render");
  Json doc;
  doc["canvas"] = Json{{"width", 128}, {"height", 128}};
  doc["background"] = Json{{"kind", "caption"}, {"caption", "plain"}};
  doc["tags"] = Json::array();
  Json span;
  span["text"] = "Hi";
  span["language"] = "en";
  span["font"] = "en-0";
  span["color"] = 2;
  span["bbox"] = Json::array({8, 8, 112, 64});
  doc["spans"] = Json::array({span});
  gftest::write_file(tmp / "doc.json", doc.dump());

  Json req;
  req["document_path"] = (tmp / "doc.json").string();
  req["mode"] = "glyph";
  req["fonts"] = Json{{"manifest", assets("fonts/manifest.json")}};
  req["palette"] = assets("palette.json");
  req["out"] = (tmp / "a.png").string();
  Out out;
  REQUIRE(gf_render(ctx.c, req.dump().c_str(), &out.s) == GF_OK);
  Json j = out.json();
  CHECK(j.at("width") == 128);
  CHECK(j.at("height") == 128);
  CHECK(fs::exists(tmp / "a.png"));

  req["out"] = (tmp / "b.png").string();
  Out again;
  REQUIRE(gf_render(ctx.c, req.dump().c_str(), &again.s) == GF_OK);
  CHECK(gftest::slurp(tmp / "a.png") == gftest::slurp(tmp / "b.png"));
}

TEST_CASE("benchmark build and score close the loop") {
  Ctx ctx;
  auto tmp = gftest::fresh_tmp("capi_bench");
  Json req;
  req["vocab"] = Json{{"dir", assets("vocab")}};
  req["charsets"] = assets("charsets");
  req["seed"] = 5;
  req["per_tier"] = 1;
  req["languages"] = Json::array({"en"});
  req["out"] = (tmp / "bench.jsonl").string();
  Out out;
  REQUIRE(gf_benchmark_build(ctx.c, req.dump().c_str(), &out.s) == GF_OK);
  CHECK(out.json().at("entries").get<int>() == 4);

  // Echoing every ground-truth span back as OCR text scores 100%.
  std::string ocr_path = (tmp / "ocr.jsonl").string();
  {
    std::string lines;
    std::istringstream in(gftest::slurp(tmp / "bench.jsonl"));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json e = Json::parse(line);
      Json row;
      row["id"] = e.at("id");
      Json texts = Json::array();
      for (const Json& span : e.at("gt_spans")) {
        std::string joined;
        for (const Json& tok : span) {
          if (!joined.empty()) joined += " ";
          joined += tok.get<std::string>();
        }
        texts.push_back(joined);
      }
      row["texts"] = texts;
      lines += row.dump() + "\n";
    }
    gftest::write_file(ocr_path, lines);
  }
  Json score_req;
  score_req["benchmark"] = (tmp / "bench.jsonl").string();
  score_req["ocr"] = ocr_path;
  Out score;
  REQUIRE(gf_score(ctx.c, score_req.dump().c_str(), &score.s) == GF_OK);
  Json grid = score.json().at("report").at("grid");
  for (const char* tier : {"T1", "T2", "T3", "T4"})
    CHECK(grid.at("en").at(tier).at("precision").get<double>() ==
          doctest::Approx(1.0));
  CHECK(score.json().at("table").get<std::string>().find("100.00%") !=
        std::string::npos);
}

TEST_CASE("fonts scan reports per language counts") {
  Ctx ctx;
  Json req;
  req["manifest"] = assets("fonts/manifest.json");
  Out out;
  REQUIRE(gf_fonts_scan(ctx.c, req.dump().c_str(), &out.s) == GF_OK);
  Json langs = out.json().at("languages");
  CHECK(langs.at("en").at("fonts").get<int>() == 4);
  CHECK(langs.at("en").at("ofl").get<int>() == 2);
  CHECK(langs.at("cn").at("fonts").get<int>() == 2);
}

TEST_CASE("shape index build over a charset subset") {
  Ctx ctx;
  auto tmp = gftest::fresh_tmp("capi_shape");
  gftest::write_file(tmp / "subset.txt",
                     "# glyphforge-charset language=cn size=5\n"
                     "\xE4\xBA\x86\n\xE5\xAD\x90\n\xE7\x99\xBD\n"
                     "\xE8\x87\xAA\n\xE9\x97\xAE\n");
  Json req;
  req["charset"] = (tmp / "subset.txt").string();
  req["fonts_manifest"] = assets("fonts/manifest.json");
  req["font"] = "cn-0";
  req["out"] = (tmp / "index.json").string();
  req["top_k"] = 3;
  Out out;
  REQUIRE(gf_shape_index_build(ctx.c, req.dump().c_str(), &out.s) == GF_OK);
  CHECK(out.json().at("entries").get<int>() == 5);
  CHECK(fs::exists(tmp / "index.json"));
}

TEST_CASE("file errors surface as io status") {
  Ctx ctx;
  Out run_out;
  CHECK(gf_run(ctx.c, "/nonexistent/config.json", &run_out.s) == GF_IO);
  Out stats_out;
  CHECK(gf_stats(ctx.c, "/nonexistent/manifest.jsonl", &stats_out.s) == GF_IO);
  CHECK(!std::string(gf_context_last_error(ctx.c)).empty());
}
