// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/pipeline.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "core/augment.hpp"
#include "core/error.hpp"
#include "core/evalkit.hpp"
#include "core/font_catalog.hpp"
#include "core/png_io.hpp"
#include "core/prompt.hpp"
#include "core/render.hpp"
#include "core/rng.hpp"
#include "core/shape_index.hpp"
#include "core/unicode.hpp"
#include "core/vocab.hpp"

namespace fs = std::filesystem;

namespace glyphforge {

namespace {

struct BaseQuota {
  const char* name;
  std::optional<Lang> language;
  uint64_t glyph_pairs;
  uint64_t design_pairs;
};

constexpr uint64_t K = 1000;

const BaseQuota kBaseQuotas[] = {
    {"en", Lang::en, 100 * K, 1000 * K},
    {"fr", Lang::fr, 20 * K, 200 * K},
    {"es", Lang::es, 20 * K, 200 * K},
    {"de", Lang::de, 20 * K, 200 * K},
    {"pt", Lang::pt, 20 * K, 200 * K},
    {"it", Lang::it, 20 * K, 200 * K},
    {"ru", Lang::ru, 100 * K, 1000 * K},
    {"cn", Lang::cn, 300 * K, 3000 * K},
    {"jp", Lang::jp, 100 * K, 1000 * K},
    {"kr", Lang::kr, 100 * K, 1000 * K},
    {"mixed", std::nullopt, 200 * K, 2000 * K},
};

uint64_t scale_half_up(uint64_t base, double scale) {
  long double x = static_cast<long double>(base) * static_cast<long double>(scale);
  return static_cast<uint64_t>(std::floor(x + 0.5L));
}

std::string resolve_path(const std::string& base_dir, const std::string& p) {
  if (p.empty()) return p;
  fs::path fp(p);
  if (fp.is_absolute() || base_dir.empty()) return fp.lexically_normal().string();
  return (fs::path(base_dir) / fp).lexically_normal().string();
}

void write_file_atomic(const std::string& final_path,
                       const std::vector<uint8_t>& bytes) {
  std::string tmp = final_path + ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) fail(Errc::io, "cannot create " + tmp);
  std::size_t off = 0;
  while (off < bytes.size()) {
    ssize_t n = ::write(fd, bytes.data() + off, bytes.size() - off);
    if (n < 0) {
      ::close(fd);
      fail(Errc::io, "write failed for " + tmp);
    }
    off += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    fail(Errc::io, "fsync failed for " + tmp);
  }
  ::close(fd);
  if (std::rename(tmp.c_str(), final_path.c_str()) != 0)
    fail(Errc::io, "rename failed for " + final_path);
}

struct Job {
  std::size_t seq = 0;       // order in the manifest
  std::string row_name;
  std::optional<Lang> language;
  bool glyph = false;        // glyph sample vs design sample
  uint64_t index = 0;
  std::string id;
};

DesignPrompt prompt_of(const DesignDocument& doc) {
  DesignPrompt p;
  if (doc.background.kind == Background::Kind::caption)
    p.background_caption = doc.background.caption;
  p.tags = doc.tags;
  p.spans = doc.spans;
  return p;
}

}  // namespace

uint64_t DatasetPlan::glyph_total() const noexcept {
  uint64_t t = 0;
  for (const PlanRow& r : rows) t += r.glyph_pairs;
  return t;
}

uint64_t DatasetPlan::design_total() const noexcept {
  uint64_t t = 0;
  for (const PlanRow& r : rows) t += r.design_pairs;
  return t;
}

Json DatasetPlan::to_json() const {
  Json rows_json = Json::array();
  for (const PlanRow& r : rows) {
    Json row;
    row["name"] = r.name;
    row["glyph_pairs"] = r.glyph_pairs;
    row["design_pairs"] = r.design_pairs;
    rows_json.push_back(std::move(row));
  }
  Json j;
  j["scale"] = scale;
  j["rows"] = std::move(rows_json);
  j["glyph_total"] = glyph_total();
  j["design_total"] = design_total();
  return j;
}

DatasetPlan plan_dataset(double scale) {
  if (!(scale > 0.0) || scale > 1.0)
    fail(Errc::scale_out_of_range,
         "scale must lie in (0, 1], got " + std::to_string(scale));
  DatasetPlan plan;
  plan.scale = scale;
  for (const BaseQuota& q : kBaseQuotas) {
    PlanRow row;
    row.name = q.name;
    row.language = q.language;
    row.glyph_pairs = scale_half_up(q.glyph_pairs, scale);
    row.design_pairs = scale_half_up(q.design_pairs, scale);
    plan.rows.push_back(std::move(row));
  }
  return plan;
}

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
  Json j = load_json_file(path);
  return from_json(j, fs::path(path).parent_path().string());
}

PipelineConfig PipelineConfig::from_json(const Json& j,
                                         const std::string& base_dir) {
  if (!j.is_object()) fail(Errc::config_invalid, "config must be an object");
  for (const char* key : {"fonts", "vocab", "plan", "seeds", "output_dir",
                          "translator_backend", "sources"})
    if (!j.contains(key))
      fail(Errc::config_invalid, std::string("config missing section: ") + key);

  PipelineConfig cfg;
  const Json& fonts = j.at("fonts");
  cfg.fonts_manifest =
      resolve_path(base_dir, fonts.at("manifest").get<std::string>());
  cfg.charsets_dir =
      resolve_path(base_dir, fonts.at("charsets").get<std::string>());
  cfg.vocab_dir =
      resolve_path(base_dir, j.at("vocab").at("dir").get<std::string>());

  const Json& plan = j.at("plan");
  cfg.scale = plan.at("scale").get<double>();
  if (plan.contains("tolerance")) cfg.tolerance = plan.at("tolerance").get<double>();

  cfg.master_seed = j.at("seeds").at("master").get<uint64_t>();
  cfg.output_dir = resolve_path(base_dir, j.at("output_dir").get<std::string>());

  const Json& backend = j.at("translator_backend");
  cfg.backend_kind = backend.at("kind").get<std::string>();
  if (cfg.backend_kind == "dictionary") {
    cfg.lexicon_dir =
        resolve_path(base_dir, backend.at("lexicons").get<std::string>());
  } else if (cfg.backend_kind == "http") {
    cfg.http.host = backend.at("host").get<std::string>();
    cfg.http.port = backend.at("port").get<int>();
    if (backend.contains("path")) cfg.http.path = backend.at("path").get<std::string>();
    if (backend.contains("timeout_ms"))
      cfg.http.timeout_ms = backend.at("timeout_ms").get<int>();
    if (backend.contains("retries")) cfg.http.retries = backend.at("retries").get<int>();
  } else if (cfg.backend_kind != "none") {
    fail(Errc::config_invalid,
         "translator_backend.kind must be none, dictionary, or http");
  }

  const Json& sources = j.at("sources");
  cfg.sources_dir = resolve_path(base_dir, sources.at("dir").get<std::string>());
  cfg.palette_path =
      resolve_path(base_dir, sources.at("palette").get<std::string>());
  if (sources.contains("shape_index"))
    cfg.shape_index_path =
        resolve_path(base_dir, sources.at("shape_index").get<std::string>());
  if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
  return cfg;
}

Json PipelineConfig::to_json() const {
  Json j;
  j["fonts"] = Json{{"manifest", fonts_manifest}, {"charsets", charsets_dir}};
  j["vocab"] = Json{{"dir", vocab_dir}};
  j["plan"] = Json{{"scale", scale}, {"tolerance", tolerance}};
  j["seeds"] = Json{{"master", master_seed}};
  j["output_dir"] = output_dir;
  Json backend;
  backend["kind"] = backend_kind;
  if (backend_kind == "dictionary") backend["lexicons"] = lexicon_dir;
  if (backend_kind == "http") {
    backend["host"] = http.host;
    backend["port"] = http.port;
    backend["path"] = http.path;
    backend["timeout_ms"] = http.timeout_ms;
    backend["retries"] = http.retries;
  }
  j["translator_backend"] = std::move(backend);
  Json sources;
  sources["dir"] = sources_dir;
  sources["palette"] = palette_path;
  if (!shape_index_path.empty()) sources["shape_index"] = shape_index_path;
  j["sources"] = std::move(sources);
  return j;
}

std::string PipelineConfig::config_hash() const {
  uint64_t h = stable_hash(to_json().dump());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

RunManifest run_pipeline(const PipelineConfig& cfg) {
  if (cfg.output_dir.empty())
    fail(Errc::config_invalid, "output_dir is empty");
  DatasetPlan plan = plan_dataset(cfg.scale);

  FontCatalog catalog = FontCatalog::load_manifest(cfg.fonts_manifest);
  std::map<Lang, CharSet> charsets;
  std::map<Lang, Vocabulary> vocabs;
  for (Lang lang : kAllLangs) {
    std::string code = lang_code(lang);
    CharSet cs =
        load_charset((fs::path(cfg.charsets_dir) / (code + ".txt")).string());
    if (cs.language != lang)
      fail(Errc::config_invalid, "charset file language mismatch for " + code);
    charsets.emplace(lang, std::move(cs));
    vocabs.emplace(lang, load_vocab(
        (fs::path(cfg.vocab_dir) / (code + ".txt")).string(), charsets.at(lang)));
  }
  catalog.attach_charsets(charsets);

  Palette palette = load_palette(cfg.palette_path);
  Renderer renderer(catalog, palette);

  std::unique_ptr<TranslationBackend> backend;
  TransformMode mode = TransformMode::random_substitution;
  if (cfg.backend_kind == "dictionary") {
    backend = std::make_unique<DictionaryBackend>(cfg.lexicon_dir);
    mode = TransformMode::dictionary;
  } else if (cfg.backend_kind == "http") {
    backend = std::make_unique<HttpBackend>(cfg.http);
    mode = TransformMode::external_translator;
  }

  Transformer transformer(catalog);
  for (const auto& [lang, v] : vocabs) transformer.add_vocabulary(v);
  for (const auto& [lang, c] : charsets) transformer.add_charset(c);
  if (backend) transformer.set_backend(backend.get());

  ShapeIndex shapes;
  bool have_shapes = false;
  if (!cfg.shape_index_path.empty()) {
    shapes = ShapeIndex::load(cfg.shape_index_path);
    have_shapes = true;
  }
  std::map<Lang, std::unique_ptr<Augmenter>> augmenters;
  for (Lang lang : kAllLangs)
    augmenters.emplace(
        lang, std::make_unique<Augmenter>(
                  vocabs.at(lang), charsets.at(lang),
                  lang == Lang::cn && have_shapes ? &shapes : nullptr));

  // source corpus, sorted for a stable cycle order
  std::vector<DesignDocument> sources;
  std::vector<std::string> source_names;
  if (!fs::is_directory(cfg.sources_dir))
    fail(Errc::io, "sources directory not found: " + cfg.sources_dir);
  {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(cfg.sources_dir))
      if (e.is_regular_file() && e.path().extension() == ".json")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& p : files) {
      DesignDocument doc = document_from_json(load_json_file(p.string()));
      validate_document(doc);
      sources.push_back(std::move(doc));
      source_names.push_back(p.filename().string());
    }
  }

  fs::create_directories(fs::path(cfg.output_dir) / "images");
  std::string manifest_path =
      (fs::path(cfg.output_dir) / "manifest.jsonl").string();

  RunManifest result;
  result.manifest_path = manifest_path;
  result.config_hash = cfg.config_hash();
  result.master_seed = cfg.master_seed;

  // resume state
  std::set<std::string> completed;
  std::size_t prior_failed = 0;
  bool have_header = false;
  bool have_quota_warning = false;
  if (fs::exists(manifest_path)) {
    std::string content = load_text_file(manifest_path);
    std::size_t keep_bytes = content.size();
    std::size_t pos = 0, line_no = 0;
    bool any_valid = false;
    while (pos < content.size()) {
      std::size_t start = pos;
      std::size_t nl = content.find('\n', pos);
      std::size_t end = nl == std::string::npos ? content.size() : nl;
      pos = nl == std::string::npos ? content.size() : nl + 1;
      ++line_no;
      std::string_view line(content.data() + start, end - start);
      if (line.empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || !j.contains("kind")) {
        // A torn final line is a crash artifact: drop it and redo the row.
        if (pos >= content.size()) {
          keep_bytes = start;
          break;
        }
        fail(Errc::manifest_corrupt,
             manifest_path + ":" + std::to_string(line_no) + ": invalid row");
      }
      any_valid = true;
      std::string kind = j.at("kind").get<std::string>();
      if (kind == "header") {
        std::string h = j.at("config_hash").get<std::string>();
        if (h != result.config_hash)
          fail(Errc::config_invalid,
               "output dir was produced by a different config (hash " + h + ")");
        have_header = true;
      } else if (kind == "sample") {
        completed.insert(j.at("id").get<std::string>());
      } else if (kind == "error") {
        completed.insert(j.at("id").get<std::string>());
        ++prior_failed;
      } else if (kind == "warning") {
        if (j.at("code").get<std::string>() == "quota_unmet")
          have_quota_warning = true;
      }
    }
    if (any_valid && !have_header)
      fail(Errc::manifest_corrupt, manifest_path + ": missing header row");
    if (keep_bytes < content.size())
      fs::resize_file(manifest_path, keep_bytes);
  }

  std::ofstream out(manifest_path, std::ios::binary | std::ios::app);
  if (!out) fail(Errc::io, "cannot append to " + manifest_path);
  if (!have_header) {
    Json header;
    header["kind"] = "header";
    header["config_hash"] = result.config_hash;
    header["master_seed"] = cfg.master_seed;
    out << header.dump() << '\n';
    out.flush();
  }

  if (sources.empty()) {
    if (!have_quota_warning) {
      Json warning;
      warning["kind"] = "warning";
      warning["code"] = "quota_unmet";
      warning["message"] = "no source documents; produced 0 samples";
      out << warning.dump() << '\n';
      out.flush();
    }
    result.warnings.push_back("quota_unmet: no source documents");
    result.stats = manifest_stats(manifest_path);
    return result;
  }

  // job list in manifest order
  std::vector<Job> jobs;
  uint64_t total_scheduled = 0;
  for (const PlanRow& row : plan.rows) {
    for (bool glyph : {true, false}) {
      uint64_t quota = glyph ? row.glyph_pairs : row.design_pairs;
      total_scheduled += quota;
      for (uint64_t i = 0; i < quota; ++i) {
        std::string id = row.name + (glyph ? "-glyph-" : "-design-") +
                         std::to_string(i);
        if (completed.count(id)) {
          ++result.resumed;
          continue;
        }
        Job job;
        job.seq = jobs.size();
        job.row_name = row.name;
        job.language = row.language;
        job.glyph = glyph;
        job.index = i;
        job.id = id;
        jobs.push_back(std::move(job));
      }
    }
  }

  int workers = cfg.workers;
  if (const char* env = std::getenv("GLYPHFORGE_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1 || v > 256)
      fail(Errc::config_invalid, "GLYPHFORGE_WORKERS must be a count");
    workers = static_cast<int>(v);
  }
  if (workers < 1)
    workers = static_cast<int>(
        std::max(1u, std::min(16u, std::thread::hardware_concurrency())));
  workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers),
                            std::max<std::size_t>(1, jobs.size())));

  auto process = [&](const Job& job) -> Json {
    const DesignDocument& src = sources[job.index % sources.size()];
    const std::string& src_name = source_names[job.index % sources.size()];
    uint64_t seed = stable_hash_mix(
        cfg.master_seed, job.row_name + (job.glyph ? "-glyph" : "-design"),
        job.index);

    DesignDocument doc;
    if (job.language.has_value()) {
      if (*job.language == Lang::en)
        doc = src;
      else
        doc = transformer.transform_document(src, *job.language, mode, seed,
                                             cfg.tolerance);
    } else {
      doc = transformer.transform_document_mixed(src, mode, seed,
                                                 cfg.tolerance);
    }

    Image img = job.glyph
                    ? renderer.render_glyph_image(doc)
                    : renderer.render_design_image(
                          doc, std::array<uint8_t, 3>{255, 255, 255});
    std::string image_rel = "images/" + job.id + ".png";
    write_file_atomic((fs::path(cfg.output_dir) / image_rel).string(),
                      png::encode(img));

    Json augs = Json::array();
    for (std::size_t s = 0; s < doc.spans.size(); ++s) {
      const Augmenter& aug = *augmenters.at(doc.spans[s].language);
      std::vector<AugmentationRecord> recs = aug.hard_negatives(
          doc.spans[s].content, 1, stable_hash_mix(seed, "aug", s));
      for (const AugmentationRecord& r : recs) augs.push_back(record_to_json(r));
    }

    Json row;
    row["kind"] = "sample";
    row["id"] = job.id;
    row["language"] = job.row_name;
    row["sample_kind"] = job.glyph ? "glyph" : "design";
    row["source"] = src_name;
    row["image"] = image_rel;
    row["tier"] = tier_name(tier_of_count(glyph_char_count(doc.spans)));
    row["prompt"] = serialize_prompt(prompt_of(doc));
    row["augmentations"] = std::move(augs);
    return row;
  };

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Json> ready;
  std::atomic<std::size_t> next_job{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      std::size_t j = next_job.fetch_add(1, std::memory_order_relaxed);
      if (j >= jobs.size()) return;
      Json row;
      try {
        row = process(jobs[j]);
      } catch (const Error& e) {
        row = Json{{"kind", "error"},
                   {"id", jobs[j].id},
                   {"language", jobs[j].row_name},
                   {"sample_kind", jobs[j].glyph ? "glyph" : "design"},
                   {"error", errc_name(e.code())},
                   {"message", e.what()}};
      } catch (const std::exception& e) {
        row = Json{{"kind", "error"},
                   {"id", jobs[j].id},
                   {"language", jobs[j].row_name},
                   {"sample_kind", jobs[j].glyph ? "glyph" : "design"},
                   {"error", errc_name(Errc::io)},
                   {"message", e.what()}};
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        ready.emplace(j, std::move(row));
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);

  std::size_t failed = prior_failed;
  bool over_budget = false;
  for (std::size_t expect = 0; expect < jobs.size(); ++expect) {
    Json row;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return ready.count(expect) != 0; });
      row = std::move(ready.at(expect));
      ready.erase(expect);
    }
    out << row.dump() << '\n';
    out.flush();
    if (!out) {
      stop.store(true);
      for (std::thread& t : pool) t.join();
      fail(Errc::io, "short write to " + manifest_path);
    }
    if (row.at("kind").get<std::string>() == "error") {
      ++failed;
      ++result.failed;
      if (failed * 10 > total_scheduled) {
        over_budget = true;
        stop.store(true);
        break;
      }
    } else {
      ++result.produced;
    }
  }
  stop.store(true);
  cv.notify_all();
  for (std::thread& t : pool) t.join();
  out.close();

  if (over_budget)
    fail(Errc::partial_failure,
         "aborted: " + std::to_string(failed) + " failures exceed 10% of " +
             std::to_string(total_scheduled) + " scheduled samples");

  result.failed = failed;
  result.stats = manifest_stats(manifest_path);
  return result;
}

Json manifest_stats(const std::string& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open manifest " + manifest_path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  std::map<std::string, std::pair<uint64_t, uint64_t>> languages;  // glyph, design
  std::map<std::string, uint64_t> tiers;
  std::map<std::string, uint64_t> ops;
  std::map<std::string, uint64_t> errors;
  uint64_t samples = 0, error_rows = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    Json j = Json::parse(lines[i], nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("kind")) {
      if (i + 1 == lines.size()) break;  // crash artifact
      fail(Errc::manifest_corrupt,
           manifest_path + ":" + std::to_string(i + 1) + ": invalid row");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "sample") {
      ++samples;
      auto& counts = languages[j.at("language").get<std::string>()];
      if (j.at("sample_kind").get<std::string>() == "glyph")
        ++counts.first;
      else
        ++counts.second;
      ++tiers[j.at("tier").get<std::string>()];
      for (const Json& rec : j.at("augmentations"))
        for (const Json& op : rec.at("ops"))
          ++ops[op.at("kind").get<std::string>()];
    } else if (kind == "error") {
      ++error_rows;
      ++errors[j.at("error").get<std::string>()];
    } else if (kind != "header" && kind != "warning") {
      fail(Errc::manifest_corrupt,
           manifest_path + ":" + std::to_string(i + 1) + ": unknown row kind");
    }
  }

  Json langs = Json::object();
  for (const auto& [name, counts] : languages) {
    Json entry;
    entry["glyph"] = counts.first;
    entry["design"] = counts.second;
    entry["total"] = counts.first + counts.second;
    langs[name] = std::move(entry);
  }
  Json j;
  j["total_rows"] = samples + error_rows;
  j["samples"] = samples;
  j["languages"] = std::move(langs);
  j["tiers"] = tiers;
  j["augment_ops"] = ops;
  j["errors"] = errors;
  return j;
}

}  // namespace glyphforge
