// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Talks to the core only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glyphforge.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

// Spec'd process exit codes: 0 success, 1 usage, 2 partial failure, 3 I/O.
int exit_code_for(gf_status s) {
  switch (s) {
    case GF_OK:
      return 0;
    case GF_PARTIAL_FAILURE:
      return 2;
    case GF_IO:
      return 3;
    default:
      return 1;
  }
}

int report_error(gf_context* ctx, gf_status s) {
  std::cerr << "error: " << gf_status_name(s) << ": "
            << gf_context_last_error(ctx) << "\n";
  return exit_code_for(s);
}

// Prints the op result as indented JSON, or a single string field of it.
// Takes the out-string's address: callers pass s and *out in one expression
// and argument evaluation order must not matter.
int finish(gf_context* ctx, gf_status s, char** out_p, const char* field) {
  char* out = *out_p;
  *out_p = nullptr;
  if (s != GF_OK) return report_error(ctx, s);
  std::string body = out != nullptr ? out : "";
  gf_string_free(out);
  Json j = Json::parse(body, nullptr, false);
  if (field != nullptr && j.is_object() && j.contains(field) &&
      j.at(field).is_string()) {
    std::cout << j.at(field).get<std::string>() << "\n";
  } else if (!j.is_discarded()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << body << "\n";
  }
  return 0;
}

int write_text_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  f.flush();
  if (!f) {
    std::cerr << "error: io: cannot write " << path << "\n";
    return 3;
  }
  return 0;
}

struct TransformArgs {
  std::string document;
  std::string target;
  std::string mode = "random_substitution";
  uint64_t seed = 0;
  double tolerance = 0.2;
  std::string fonts_manifest;
  std::string charsets;
  std::string vocab;
  std::string backend_kind = "none";
  std::string lexicons;
  std::string host;
  int port = 80;
  std::string http_path = "/translate";
  int timeout_ms = 2000;
  int retries = 2;
  std::string out;
};

Json backend_json(const TransformArgs& a) {
  Json b;
  b["kind"] = a.backend_kind;
  if (a.backend_kind == "dictionary") b["lexicons"] = a.lexicons;
  if (a.backend_kind == "http") {
    b["host"] = a.host;
    b["port"] = a.port;
    b["path"] = a.http_path;
    b["timeout_ms"] = a.timeout_ms;
    b["retries"] = a.retries;
  }
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilingual glyph dataset synthesis and evaluation toolkit"};
  app.set_version_flag("--version", std::string(gf_version()));
  app.require_subcommand(1);

  double plan_scale = 1.0;
  auto* cmd_plan = app.add_subcommand("plan", "Scale the dataset quota table");
  cmd_plan->add_option("--scale", plan_scale, "Multiplier in (0, 1]")
      ->required();

  std::string run_config;
  auto* cmd_run = app.add_subcommand("run", "Produce a dataset from a config");
  cmd_run->add_option("--config", run_config, "Pipeline config JSON")
      ->required();

  std::string stats_manifest;
  auto* cmd_stats = app.add_subcommand("stats", "Summarize a run manifest");
  cmd_stats->add_option("--manifest", stats_manifest, "Manifest JSONL path")
      ->required();

  TransformArgs tr;
  auto* cmd_transform =
      app.add_subcommand("transform", "Rewrite a document into a target language");
  cmd_transform->add_option("--document", tr.document, "Document JSON path")
      ->required();
  cmd_transform
      ->add_option("--target", tr.target, "Language code or \"mixed\"")
      ->required();
  cmd_transform->add_option("--mode", tr.mode,
                            "random_substitution, dictionary, or external_translator");
  cmd_transform->add_option("--seed", tr.seed, "Deterministic seed");
  cmd_transform->add_option("--tolerance", tr.tolerance,
                            "Char-count band half-width");
  cmd_transform->add_option("--fonts-manifest", tr.fonts_manifest, "Font manifest")
      ->required();
  cmd_transform->add_option("--charsets", tr.charsets, "Charset directory")
      ->required();
  cmd_transform->add_option("--vocab", tr.vocab, "Vocabulary directory")
      ->required();
  cmd_transform->add_option("--backend-kind", tr.backend_kind,
                            "none, dictionary, or http");
  cmd_transform->add_option("--lexicons", tr.lexicons,
                            "Lexicon directory for the dictionary backend");
  cmd_transform->add_option("--host", tr.host, "Translator host");
  cmd_transform->add_option("--port", tr.port, "Translator port");
  cmd_transform->add_option("--path", tr.http_path, "Translator URL path");
  cmd_transform->add_option("--timeout-ms", tr.timeout_ms, "Request timeout");
  cmd_transform->add_option("--retries", tr.retries, "Retries after failure");
  cmd_transform->add_option("--out", tr.out,
                            "Write the document here instead of stdout");

  std::string aug_text, aug_language, aug_charsets, aug_vocab, aug_shapes;
  uint64_t aug_seed = 0;
  std::size_t aug_count = 1;
  auto* cmd_augment =
      app.add_subcommand("augment", "Generate hard-negative spellings");
  cmd_augment->add_option("--text", aug_text, "Anchor text")->required();
  cmd_augment->add_option("--language", aug_language, "Language code")
      ->required();
  cmd_augment->add_option("--count", aug_count, "Negatives to generate");
  cmd_augment->add_option("--seed", aug_seed, "Deterministic seed");
  cmd_augment->add_option("--charsets", aug_charsets, "Charset directory")
      ->required();
  cmd_augment->add_option("--vocab", aug_vocab, "Vocabulary directory")
      ->required();
  cmd_augment->add_option("--shape-index", aug_shapes,
                          "Similar-shape index for cn replacements");

  std::string ren_document, ren_mode, ren_fonts, ren_charsets, ren_palette,
      ren_out, ren_background;
  auto* cmd_render = app.add_subcommand("render", "Render a document to PNG");
  cmd_render->add_option("--document", ren_document, "Document JSON path")
      ->required();
  cmd_render->add_option("--mode", ren_mode, "glyph or design")->required();
  cmd_render->add_option("--fonts-manifest", ren_fonts, "Font manifest")
      ->required();
  cmd_render->add_option("--charsets", ren_charsets, "Charset directory");
  cmd_render->add_option("--palette", ren_palette, "Palette JSON")->required();
  cmd_render->add_option("--out", ren_out, "Output PNG path")->required();
  cmd_render->add_option("--background", ren_background,
                         "Background PNG for design mode");

  auto* cmd_benchmark = app.add_subcommand("benchmark", "Benchmark operations");
  cmd_benchmark->require_subcommand(1);
  std::string bb_vocab, bb_charsets, bb_out;
  uint64_t bb_seed = 0;
  int bb_per_tier = 25;
  std::vector<std::string> bb_languages, bb_captions;
  auto* cmd_bb = cmd_benchmark->add_subcommand(
      "build", "Emit a tiered spelling benchmark");
  cmd_bb->add_option("--vocab", bb_vocab, "Vocabulary directory")->required();
  cmd_bb->add_option("--charsets", bb_charsets, "Charset directory")
      ->required();
  cmd_bb->add_option("--seed", bb_seed, "Deterministic seed");
  cmd_bb->add_option("--out", bb_out, "Output JSONL path")->required();
  cmd_bb->add_option("--per-tier", bb_per_tier, "Entries per tier per language");
  cmd_bb->add_option("--languages", bb_languages, "Language codes (default all)");
  cmd_bb->add_option("--caption", bb_captions, "Background caption (repeatable)");

  std::string sc_benchmark, sc_ocr;
  bool sc_json = false;
  auto* cmd_score =
      app.add_subcommand("score", "Score OCR output against a benchmark");
  cmd_score->add_option("--benchmark", sc_benchmark, "Benchmark JSONL")
      ->required();
  cmd_score->add_option("--ocr", sc_ocr, "OCR results JSONL")->required();
  cmd_score->add_flag("--json", sc_json, "Print the report as JSON");

  auto* cmd_fonts = app.add_subcommand("fonts", "Font catalog operations");
  cmd_fonts->require_subcommand(1);
  std::string fs_manifest, fs_charsets;
  auto* cmd_fs = cmd_fonts->add_subcommand("scan", "Summarize a font manifest");
  cmd_fs->add_option("--manifest", fs_manifest, "Font manifest")->required();
  cmd_fs->add_option("--charsets", fs_charsets, "Charset directory");

  auto* cmd_shape =
      app.add_subcommand("shape-index", "Similar-shape index operations");
  cmd_shape->require_subcommand(1);
  std::string si_charset, si_fonts, si_font = "cn-0", si_out, si_overrides;
  int si_raster = 32, si_top_k = 50;
  auto* cmd_si = cmd_shape->add_subcommand(
      "build", "Rank visually similar characters by raster overlap");
  cmd_si->add_option("--charset", si_charset, "Charset file")->required();
  cmd_si->add_option("--fonts-manifest", si_fonts, "Font manifest")->required();
  cmd_si->add_option("--font", si_font, "Font tag, e.g. cn-0");
  cmd_si->add_option("--out", si_out, "Output TSV path")->required();
  cmd_si->add_option("--raster-size", si_raster, "Raster edge in pixels");
  cmd_si->add_option("--top-k", si_top_k, "Candidates kept per character");
  cmd_si->add_option("--overrides", si_overrides, "Curated override TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  gf_context* ctx = nullptr;
  if (gf_context_create(&ctx) != GF_OK) {
    std::cerr << "error: internal: cannot create context\n";
    return 1;
  }
  int rc = 0;
  char* out = nullptr;

  if (cmd_plan->parsed()) {
    rc = finish(ctx, gf_plan(ctx, plan_scale, &out), &out, nullptr);
  } else if (cmd_run->parsed()) {
    rc = finish(ctx, gf_run(ctx, run_config.c_str(), &out), &out, nullptr);
  } else if (cmd_stats->parsed()) {
    rc = finish(ctx, gf_stats(ctx, stats_manifest.c_str(), &out), &out, nullptr);
  } else if (cmd_transform->parsed()) {
    Json req;
    req["document_path"] = tr.document;
    req["target"] = tr.target;
    req["mode"] = tr.mode;
    req["seed"] = tr.seed;
    req["tolerance"] = tr.tolerance;
    req["fonts"] = Json{{"manifest", tr.fonts_manifest},
                        {"charsets", tr.charsets}};
    req["vocab"] = Json{{"dir", tr.vocab}};
    if (tr.backend_kind != "none") req["backend"] = backend_json(tr);
    gf_status s = gf_transform(ctx, req.dump().c_str(), &out);
    if (s != GF_OK) {
      rc = report_error(ctx, s);
    } else {
      Json result = Json::parse(out);
      gf_string_free(out);
      out = nullptr;
      std::string body = result.at("document").dump(2);
      rc = tr.out.empty() ? (std::cout << body << "\n", 0)
                          : write_text_file(tr.out, body + "\n");
    }
  } else if (cmd_augment->parsed()) {
    Json req;
    req["text"] = aug_text;
    req["language"] = aug_language;
    req["count"] = aug_count;
    req["seed"] = aug_seed;
    req["charsets"] = aug_charsets;
    req["vocab"] = aug_vocab;
    if (!aug_shapes.empty()) req["shape_index"] = aug_shapes;
    rc = finish(ctx, gf_augment(ctx, req.dump().c_str(), &out), &out, nullptr);
  } else if (cmd_render->parsed()) {
    Json req;
    req["document_path"] = ren_document;
    req["mode"] = ren_mode;
    req["fonts"] = Json{{"manifest", ren_fonts}};
    if (!ren_charsets.empty()) req["fonts"]["charsets"] = ren_charsets;
    req["palette"] = ren_palette;
    req["out"] = ren_out;
    if (!ren_background.empty()) req["background"] = ren_background;
    rc = finish(ctx, gf_render(ctx, req.dump().c_str(), &out), &out, nullptr);
  } else if (cmd_bb->parsed()) {
    Json req;
    req["vocab"] = Json{{"dir", bb_vocab}};
    req["charsets"] = bb_charsets;
    req["seed"] = bb_seed;
    req["out"] = bb_out;
    req["per_tier"] = bb_per_tier;
    if (!bb_languages.empty()) req["languages"] = bb_languages;
    if (!bb_captions.empty()) req["captions"] = bb_captions;
    rc = finish(ctx, gf_benchmark_build(ctx, req.dump().c_str(), &out), &out,
                nullptr);
  } else if (cmd_score->parsed()) {
    Json req;
    req["benchmark"] = sc_benchmark;
    req["ocr"] = sc_ocr;
    rc = finish(ctx, gf_score(ctx, req.dump().c_str(), &out), &out,
                sc_json ? nullptr : "table");
  } else if (cmd_fs->parsed()) {
    Json req;
    req["manifest"] = fs_manifest;
    if (!fs_charsets.empty()) req["charsets"] = fs_charsets;
    rc = finish(ctx, gf_fonts_scan(ctx, req.dump().c_str(), &out), &out,
                nullptr);
  } else if (cmd_si->parsed()) {
    Json req;
    req["charset"] = si_charset;
    req["fonts_manifest"] = si_fonts;
    req["font"] = si_font;
    req["out"] = si_out;
    req["raster_size"] = si_raster;
    req["top_k"] = si_top_k;
    if (!si_overrides.empty()) req["overrides"] = si_overrides;
    rc = finish(ctx, gf_shape_index_build(ctx, req.dump().c_str(), &out), &out,
                nullptr);
  }

  gf_context_destroy(ctx);
  return rc;
}
