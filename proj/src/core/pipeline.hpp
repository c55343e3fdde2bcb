// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/json_util.hpp"
#include "core/model.hpp"
#include "core/transform.hpp"

namespace glyphforge {

struct PlanRow {
  std::string name;            // language code or "mixed"
  std::optional<Lang> language;  // absent for the mixed row
  uint64_t glyph_pairs = 0;
  uint64_t design_pairs = 0;
};

struct DatasetPlan {
  double scale = 1.0;
  std::vector<PlanRow> rows;

  uint64_t glyph_total() const noexcept;
  uint64_t design_total() const noexcept;
  Json to_json() const;
};

// Quotas scale multiplicatively from the full-size table and round half-up.
DatasetPlan plan_dataset(double scale);

struct PipelineConfig {
  std::string fonts_manifest;
  std::string charsets_dir;
  std::string vocab_dir;
  double scale = 1.0;
  double tolerance = 0.2;
  uint64_t master_seed = 0;
  std::string output_dir;
  std::string backend_kind = "none";  // none | dictionary | http
  std::string lexicon_dir;
  HttpBackendConfig http;
  std::string sources_dir;
  std::string palette_path;
  std::string shape_index_path;  // optional, enables cn shape replacement
  int workers = 0;               // 0 = hardware default

  static PipelineConfig from_json_file(const std::string& path);
  static PipelineConfig from_json(const Json& j, const std::string& base_dir);
  // canonical form used for the manifest's config hash
  Json to_json() const;
  std::string config_hash() const;
};

struct RunManifest {
  std::string manifest_path;
  std::string config_hash;
  uint64_t master_seed = 0;
  std::size_t produced = 0;   // sample rows written by this invocation
  std::size_t resumed = 0;    // rows already present and kept
  std::size_t failed = 0;     // error rows across the whole manifest
  std::vector<std::string> warnings;
  Json stats;
};

// Produces plan-many samples per row, each image + manifest row written
// atomically (tmp file, fsync, rename, then append). Rerunning with the same
// config skips completed ids; a different config hash in the output dir is an
// error. Aborts when failures exceed a tenth of the scheduled jobs.
RunManifest run_pipeline(const PipelineConfig& config);

// Recomputes the stats block from a manifest: per-language sample counts,
// augmentation-op histograms, tier histograms, error tallies.
Json manifest_stats(const std::string& manifest_path);

}  // namespace glyphforge
