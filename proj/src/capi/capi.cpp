// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "glyphforge.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <new>
#include <string>

#include "core/augment.hpp"
#include "core/error.hpp"
#include "core/evalkit.hpp"
#include "core/font_catalog.hpp"
#include "core/json_util.hpp"
#include "core/model.hpp"
#include "core/pipeline.hpp"
#include "core/png_io.hpp"
#include "core/prompt.hpp"
#include "core/render.hpp"
#include "core/shape_index.hpp"
#include "core/transform.hpp"
#include "core/vocab.hpp"

namespace fs = std::filesystem;
using namespace glyphforge;

struct gf_context {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gf_status run_wrapped(gf_context* ctx, char** out,
                      const std::function<std::string()>& fn) {
  if (ctx == nullptr) return GF_USAGE;
  if (out == nullptr) {
    ctx->last_error = "output pointer is null";
    return GF_USAGE;
  }
  *out = nullptr;
  try {
    std::string result = fn();
    *out = dup_string(result);
    if (*out == nullptr) {
      ctx->last_error = "out of memory";
      return GF_INTERNAL;
    }
    ctx->last_error.clear();
    return GF_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return static_cast<gf_status>(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return GF_INTERNAL;
  }
}

Json parse_request(const char* request_json) {
  if (request_json == nullptr)
    fail(Errc::config_invalid, "request is null");
  Json j = Json::parse(request_json, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(Errc::config_invalid, "request is not a JSON object");
  return j;
}

std::string req_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    fail(Errc::config_invalid, std::string("request needs string field: ") + key);
  return j.at(key).get<std::string>();
}

DesignDocument load_request_document(const Json& j) {
  if (j.contains("document")) return document_from_json(j.at("document"));
  if (j.contains("document_path"))
    return document_from_json(
        load_json_file(j.at("document_path").get<std::string>()));
  fail(Errc::config_invalid, "request needs document or document_path");
}

std::map<Lang, CharSet> load_charsets_dir(const std::string& dir) {
  std::map<Lang, CharSet> out;
  if (!fs::is_directory(dir))
    fail(Errc::io, "charset directory not found: " + dir);
  for (Lang lang : kAllLangs) {
    fs::path p = fs::path(dir) / (std::string(lang_code(lang)) + ".txt");
    if (!fs::exists(p)) continue;
    CharSet cs = load_charset(p.string());
    if (cs.language != lang)
      fail(Errc::config_invalid,
           "charset file language mismatch: " + p.string());
    out.emplace(lang, std::move(cs));
  }
  if (out.empty()) fail(Errc::io, "no charset files in " + dir);
  return out;
}

FontCatalog load_request_catalog(const Json& fonts) {
  if (!fonts.is_object() || !fonts.contains("manifest"))
    fail(Errc::config_invalid, "fonts section needs a manifest path");
  FontCatalog catalog =
      FontCatalog::load_manifest(fonts.at("manifest").get<std::string>());
  if (fonts.contains("charsets"))
    catalog.attach_charsets(
        load_charsets_dir(fonts.at("charsets").get<std::string>()));
  return catalog;
}

std::unique_ptr<TranslationBackend> make_backend(const Json& backend) {
  std::string kind = backend.at("kind").get<std::string>();
  if (kind == "none") return nullptr;
  if (kind == "dictionary")
    return std::make_unique<DictionaryBackend>(
        backend.at("lexicons").get<std::string>());
  if (kind == "http") {
    HttpBackendConfig cfg;
    cfg.host = backend.at("host").get<std::string>();
    cfg.port = backend.at("port").get<int>();
    if (backend.contains("path")) cfg.path = backend.at("path").get<std::string>();
    if (backend.contains("timeout_ms"))
      cfg.timeout_ms = backend.at("timeout_ms").get<int>();
    if (backend.contains("retries"))
      cfg.retries = backend.at("retries").get<int>();
    return std::make_unique<HttpBackend>(cfg);
  }
  fail(Errc::config_invalid, "backend.kind must be none, dictionary, or http");
}

Json prompt_to_json(const DesignPrompt& p) {
  Json j;
  j["caption"] = p.background_caption;
  j["tags"] = p.tags;
  Json spans = Json::array();
  for (const TextSpan& s : p.spans) spans.push_back(span_to_json(s));
  j["spans"] = std::move(spans);
  return j;
}

DesignPrompt prompt_from_json(const Json& j) {
  DesignPrompt p;
  if (j.contains("caption")) p.background_caption = j.at("caption").get<std::string>();
  if (j.contains("tags")) p.tags = j.at("tags").get<std::vector<std::string>>();
  if (j.contains("spans"))
    for (const Json& s : j.at("spans")) p.spans.push_back(span_from_json(s));
  return p;
}

}  // namespace

extern "C" {

const char* gf_version(void) { return "1.0.0"; }

const char* gf_status_name(gf_status status) {
  if (status == GF_INTERNAL) return "internal";
  return errc_name(static_cast<Errc>(status));
}

gf_status gf_context_create(gf_context** out) {
  if (out == nullptr) return GF_USAGE;
  *out = new (std::nothrow) gf_context();
  return *out == nullptr ? GF_INTERNAL : GF_OK;
}

void gf_context_destroy(gf_context* ctx) { delete ctx; }

const char* gf_context_last_error(const gf_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

void gf_string_free(char* s) { std::free(s); }

gf_status gf_plan(gf_context* ctx, double scale, char** json_out) {
  return run_wrapped(ctx, json_out,
                     [&] { return plan_dataset(scale).to_json().dump(); });
}

gf_status gf_run(gf_context* ctx, const char* config_path, char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    if (config_path == nullptr)
      fail(Errc::config_invalid, "config path is null");
    PipelineConfig cfg = PipelineConfig::from_json_file(config_path);
    RunManifest m = run_pipeline(cfg);
    Json j;
    j["manifest"] = m.manifest_path;
    j["config_hash"] = m.config_hash;
    j["master_seed"] = m.master_seed;
    j["produced"] = m.produced;
    j["resumed"] = m.resumed;
    j["failed"] = m.failed;
    j["warnings"] = m.warnings;
    j["stats"] = m.stats;
    return j.dump();
  });
}

gf_status gf_stats(gf_context* ctx, const char* manifest_path,
                   char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    if (manifest_path == nullptr)
      fail(Errc::config_invalid, "manifest path is null");
    return manifest_stats(manifest_path).dump();
  });
}

gf_status gf_parse_prompt(gf_context* ctx, const char* prompt,
                          char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    if (prompt == nullptr) fail(Errc::config_invalid, "prompt is null");
    return prompt_to_json(parse_prompt(prompt)).dump();
  });
}

gf_status gf_serialize_prompt(gf_context* ctx, const char* prompt_json,
                              char** text_out) {
  return run_wrapped(ctx, text_out, [&]() -> std::string {
    Json j = parse_request(prompt_json);
    return serialize_prompt(prompt_from_json(j));
  });
}

gf_status gf_transform(gf_context* ctx, const char* request_json,
                       char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    DesignDocument doc = load_request_document(req);
    validate_document(doc);
    std::string target = req_string(req, "target");
    TransformMode mode = transform_mode_from_name(req_string(req, "mode"));
    uint64_t seed = req.value("seed", uint64_t{0});
    double tau = req.value("tolerance", 0.2);

    if (!req.contains("fonts"))
      fail(Errc::config_invalid, "request needs a fonts section");
    FontCatalog catalog = load_request_catalog(req.at("fonts"));
    Transformer transformer(catalog);
    if (req.contains("fonts") && req.at("fonts").contains("charsets"))
      for (auto& [lang, cs] :
           load_charsets_dir(req.at("fonts").at("charsets").get<std::string>()))
        transformer.add_charset(cs);
    if (req.contains("vocab")) {
      std::string dir = req.at("vocab").at("dir").get<std::string>();
      for (Lang lang : kAllLangs) {
        fs::path p = fs::path(dir) / (std::string(lang_code(lang)) + ".txt");
        if (!fs::exists(p) || !transformer.has_charset(lang)) continue;
        transformer.add_vocabulary(
            load_vocab(p.string(), transformer.charset(lang)));
      }
    }
    std::unique_ptr<TranslationBackend> backend;
    if (req.contains("backend")) backend = make_backend(req.at("backend"));
    if (backend) transformer.set_backend(backend.get());

    DesignDocument out =
        target == "mixed"
            ? transformer.transform_document_mixed(doc, mode, seed, tau)
            : transformer.transform_document(doc, lang_from_code_or_throw(target),
                                             mode, seed, tau);
    Json j;
    j["document"] = document_to_json(out);
    return j.dump();
  });
}

gf_status gf_augment(gf_context* ctx, const char* request_json,
                     char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    std::string text = req_string(req, "text");
    Lang lang = lang_from_code_or_throw(req_string(req, "language"));
    std::size_t count = req.value("count", std::size_t{1});
    uint64_t seed = req.value("seed", uint64_t{0});

    std::string charset_dir = req_string(req, "charsets");
    fs::path cs_path =
        fs::path(charset_dir) / (std::string(lang_code(lang)) + ".txt");
    CharSet charset = load_charset(cs_path.string());
    if (charset.language != lang)
      fail(Errc::config_invalid, "charset file language mismatch");
    std::string vocab_dir = req_string(req, "vocab");
    Vocabulary vocab = load_vocab(
        (fs::path(vocab_dir) / (std::string(lang_code(lang)) + ".txt")).string(),
        charset);

    ShapeIndex shapes;
    bool have_shapes = false;
    if (req.contains("shape_index")) {
      shapes = ShapeIndex::load(req.at("shape_index").get<std::string>());
      have_shapes = true;
    }
    Augmenter aug(vocab, charset, have_shapes ? &shapes : nullptr);
    Json records = Json::array();
    for (const AugmentationRecord& r : aug.hard_negatives(text, count, seed))
      records.push_back(record_to_json(r));
    Json j;
    j["records"] = std::move(records);
    return j.dump();
  });
}

gf_status gf_render(gf_context* ctx, const char* request_json,
                    char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    DesignDocument doc = load_request_document(req);
    validate_document(doc);
    std::string mode = req_string(req, "mode");
    if (!req.contains("fonts"))
      fail(Errc::config_invalid, "request needs a fonts section");
    FontCatalog catalog = load_request_catalog(req.at("fonts"));
    Palette palette = load_palette(req_string(req, "palette"));
    Renderer renderer(catalog, std::move(palette));

    Image img;
    if (mode == "glyph") {
      img = renderer.render_glyph_image(doc);
    } else if (mode == "design") {
      if (req.contains("background")) {
        Image bg = png::read_file(req.at("background").get<std::string>());
        img = renderer.render_design_image(doc, bg);
      } else {
        img = renderer.render_design_image(
            doc, std::array<uint8_t, 3>{255, 255, 255});
      }
    } else {
      fail(Errc::config_invalid, "mode must be glyph or design");
    }
    std::string out_path = req_string(req, "out");
    png::write_file(out_path, img);
    Json j;
    j["image"] = out_path;
    j["width"] = img.w;
    j["height"] = img.h;
    return j.dump();
  });
}

gf_status gf_benchmark_build(gf_context* ctx, const char* request_json,
                             char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    if (!req.contains("vocab"))
      fail(Errc::config_invalid, "request needs a vocab section");
    std::string vocab_dir = req.at("vocab").at("dir").get<std::string>();
    std::string charset_dir = req_string(req, "charsets");
    uint64_t seed = req.value("seed", uint64_t{0});

    BenchmarkConfig cfg;
    if (req.contains("per_tier")) cfg.per_tier = req.at("per_tier").get<int>();
    if (req.contains("languages")) {
      cfg.languages.clear();
      for (const Json& code : req.at("languages"))
        cfg.languages.push_back(lang_from_code_or_throw(code.get<std::string>()));
    }
    if (req.contains("captions"))
      cfg.captions = req.at("captions").get<std::vector<std::string>>();

    std::map<Lang, Vocabulary> vocabs;
    for (Lang lang : cfg.languages) {
      std::string code = lang_code(lang);
      CharSet cs =
          load_charset((fs::path(charset_dir) / (code + ".txt")).string());
      vocabs.emplace(lang, load_vocab(
          (fs::path(vocab_dir) / (code + ".txt")).string(), cs));
    }
    std::vector<BenchmarkEntry> entries = build_benchmark(cfg, vocabs, seed);
    std::string out_path = req_string(req, "out");
    write_benchmark_jsonl(entries, out_path);
    Json j;
    j["path"] = out_path;
    j["entries"] = entries.size();
    return j.dump();
  });
}

gf_status gf_score(gf_context* ctx, const char* request_json,
                   char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    std::vector<BenchmarkEntry> entries =
        read_benchmark_jsonl(req_string(req, "benchmark"));
    std::vector<OcrDocument> ocr = read_ocr_jsonl(req_string(req, "ocr"));
    ScoreReport report = score_benchmark(entries, ocr);
    Json j;
    j["report"] = report.to_json();
    j["table"] = report.to_text_table();
    return j.dump();
  });
}

gf_status gf_fonts_scan(gf_context* ctx, const char* request_json,
                        char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    FontCatalog catalog = load_request_catalog(req);
    CatalogStats stats = catalog.stats();
    Json langs = Json::object();
    for (const auto& [lang, counts] : stats.per_language) {
      Json entry;
      entry["fonts"] = counts.first;
      entry["ofl"] = counts.second;
      langs[lang_code(lang)] = std::move(entry);
    }
    Json j;
    j["languages"] = std::move(langs);
    return j.dump();
  });
}

gf_status gf_shape_index_build(gf_context* ctx, const char* request_json,
                               char** json_out) {
  return run_wrapped(ctx, json_out, [&]() -> std::string {
    Json req = parse_request(request_json);
    CharSet charset = load_charset(req_string(req, "charset"));
    FontCatalog catalog =
        FontCatalog::load_manifest(req_string(req, "fonts_manifest"));
    FontRef ref = font_ref_from_tag(req_string(req, "font"));
    const FontEntry& entry = catalog.get(ref);
    int raster_size = req.value("raster_size", 32);
    int top_k = req.value("top_k", 50);
    ShapeIndex index =
        ShapeIndex::build(charset, catalog, entry, raster_size, top_k);
    if (req.contains("overrides"))
      index.merge_overrides(req.at("overrides").get<std::string>());
    std::string out_path = req_string(req, "out");
    index.save(out_path);
    Json j;
    j["path"] = out_path;
    j["entries"] = index.size();
    j["warnings"] = index.warnings();
    return j.dump();
  });
}

}  // extern "C"
