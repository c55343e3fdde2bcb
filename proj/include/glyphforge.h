/* Copyright (c) 2026 GlyphForge Authors. All rights reserved. */
/* SPDX-License-Identifier: Apache-2.0 */

/* C interface to the GlyphForge core. All operations take UTF-8 strings,
 * return a status code, and hand results back as heap-allocated UTF-8
 * strings (JSON unless noted) that the caller releases with
 * gf_string_free. A failing call leaves a message readable through
 * gf_context_last_error until the next call on the same context. Contexts
 * are not thread-safe; use one per thread. */

#ifndef GLYPHFORGE_H
#define GLYPHFORGE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gf_context gf_context;
typedef int gf_status;

/* Status codes; nonzero values also serve as CLI exit codes where <= 3. */
enum {
  GF_OK = 0,
  GF_USAGE = 1,
  GF_PARTIAL_FAILURE = 2,
  GF_IO = 3,
  GF_MALFORMED_SPAN = 10,
  GF_UNKNOWN_FONT_PREFIX = 11,
  GF_UNPARSEABLE_FONT = 12,
  GF_EMPTY_COVERAGE = 13,
  GF_NO_USABLE_FONT = 14,
  GF_EMPTY_CORPUS = 15,
  GF_CHAR_COUNT_UNATTAINABLE = 16,
  GF_BACKEND_TIMEOUT = 17,
  GF_BACKEND_MALFORMED = 18,
  GF_OP_NOT_ALLOWED = 19,
  GF_POSITION_OUT_OF_RANGE = 20,
  GF_UNKNOWN_CHARACTER = 21,
  GF_CANNOT_FIT = 22,
  GF_MISSING_GLYPHS = 23,
  GF_BACKGROUND_SIZE_MISMATCH = 24,
  GF_EMPTY_GROUND_TRUTH = 25,
  GF_CONFIG_INVALID = 26,
  GF_SCALE_OUT_OF_RANGE = 27,
  GF_MANIFEST_CORRUPT = 28,
  GF_QUOTA_UNMET = 29,
  GF_INTERNAL = 99
};

/* Library version, static storage, do not free. */
const char* gf_version(void);

/* Short identifier for a status code, static storage, do not free. */
const char* gf_status_name(gf_status status);

gf_status gf_context_create(gf_context** out);
void gf_context_destroy(gf_context* ctx);

/* Message from the most recent failing call on this context; empty string
 * when the last call succeeded. Owned by the context, do not free. */
const char* gf_context_last_error(const gf_context* ctx);

void gf_string_free(char* s);

/* Dataset quota plan. Result: {scale, rows: [{name, glyph_pairs,
 * design_pairs}], glyph_total, design_total}. */
gf_status gf_plan(gf_context* ctx, double scale, char** json_out);

/* End-to-end dataset run from a config file. Result: {manifest, config_hash,
 * produced, resumed, failed, warnings, stats}. */
gf_status gf_run(gf_context* ctx, const char* config_path, char** json_out);

/* Stats block recomputed from a manifest file. */
gf_status gf_stats(gf_context* ctx, const char* manifest_path,
                   char** json_out);

/* Prompt DSL to structured form. Result: {caption, tags, spans: [{text,
 * color, font, language}]}. */
gf_status gf_parse_prompt(gf_context* ctx, const char* prompt,
                          char** json_out);

/* Structured prompt back to its canonical DSL line (plain string result). */
gf_status gf_serialize_prompt(gf_context* ctx, const char* prompt_json,
                              char** text_out);

/* Document translation. Request: {document | document_path, target
 * ("fr" ... or "mixed"), mode, seed, tolerance?, fonts: {manifest, charsets},
 * vocab: {dir}, backend?: {kind, ...}}. Result: {document}. */
gf_status gf_transform(gf_context* ctx, const char* request_json,
                       char** json_out);

/* Hard-negative generation. Request: {text, language, count, seed, charsets,
 * vocab, shape_index?}. Result: {records: [...]}. */
gf_status gf_augment(gf_context* ctx, const char* request_json,
                     char** json_out);

/* Rasterization. Request: {document | document_path, mode ("glyph" |
 * "design"), fonts: {manifest, charsets?}, palette, out, background?}.
 * Result: {image, width, height}. */
gf_status gf_render(gf_context* ctx, const char* request_json,
                    char** json_out);

/* Benchmark manifest generation. Request: {vocab: {dir}, charsets, seed,
 * out, per_tier?, languages?, captions?}. Result: {path, entries}. */
gf_status gf_benchmark_build(gf_context* ctx, const char* request_json,
                             char** json_out);

/* Precision scoring. Request: {benchmark, ocr}. Result: {report, table}. */
gf_status gf_score(gf_context* ctx, const char* request_json,
                   char** json_out);

/* Per-language font statistics. Request: {manifest, charsets?}. Result:
 * {languages: {code: {fonts, ofl}}}. */
gf_status gf_fonts_scan(gf_context* ctx, const char* request_json,
                        char** json_out);

/* Shape-similarity index construction. Request: {charset, fonts_manifest,
 * font ("cn-0"), out, raster_size?, top_k?, overrides?}. Result: {path,
 * entries, warnings}. */
gf_status gf_shape_index_build(gf_context* ctx, const char* request_json,
                               char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GLYPHFORGE_H */
