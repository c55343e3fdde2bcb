// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/font_catalog.hpp"
#include "core/model.hpp"
#include "core/vocab.hpp"

namespace glyphforge {

enum class TransformMode {
  random_substitution,
  dictionary,
  external_translator,
};

const char* transform_mode_name(TransformMode m) noexcept;
TransformMode transform_mode_from_name(const std::string& name);

// Inclusive non-whitespace scalar count band for tolerance tau in [0, 1).
struct CountBand {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool contains(std::size_t n) const noexcept { return n >= lo && n <= hi; }
};
CountBand count_band(std::size_t n, double tau);

// Translates English text into a target language. Implementations must return
// UTF-8 and must not return empty text for non-empty input.
class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string translate(const std::string& text, Lang target) = 0;
};

// Offline word-for-word backend over tab-separated `english<TAB>target`
// lexicons named en-<code>.tsv. Unknown tokens pass through unchanged; source
// casing transfers onto the replacement (all-caps, initial-cap).
class DictionaryBackend final : public TranslationBackend {
 public:
  explicit DictionaryBackend(const std::string& lexicon_dir);
  std::string translate(const std::string& text, Lang target) override;

 private:
  std::map<Lang, std::map<std::string, std::string>> tables_;
};

struct HttpBackendConfig {
  std::string host;
  int port = 80;
  std::string path = "/translate";
  int timeout_ms = 2000;
  int retries = 2;
};

// POSTs {"text","source","target"} JSON and expects {"text"} back. Connection
// failures surface as BackendTimeout, bad payloads as
// BackendMalformedResponse; both are retried up to cfg.retries extra attempts.
class HttpBackend final : public TranslationBackend {
 public:
  explicit HttpBackend(HttpBackendConfig cfg);
  std::string translate(const std::string& text, Lang target) override;

 private:
  HttpBackendConfig cfg_;
};

class Transformer {
 public:
  explicit Transformer(const FontCatalog& catalog);

  void add_vocabulary(Vocabulary vocab);
  void add_charset(CharSet charset);
  void set_backend(TranslationBackend* backend) noexcept { backend_ = backend; }

  // Replaces text with uniformly drawn vocabulary words (alphabetic targets)
  // or charset scalars (character-based targets); the non-whitespace scalar
  // count of the result stays within the tau band of the input's.
  std::string substitute_random(const std::string& text, Lang target,
                                uint64_t seed, double tau) const;

  // Rewrites every span into the target language, keeping geometry, colors,
  // background, and tags, then remaps fonts. dictionary with target en is the
  // identity.
  DesignDocument transform_document(const DesignDocument& doc, Lang target,
                                    TransformMode mode, uint64_t seed,
                                    double tau) const;

  // Per-span independently sampled target languages; spans that draw en keep
  // their content verbatim.
  DesignDocument transform_document_mixed(const DesignDocument& doc,
                                          TransformMode mode, uint64_t seed,
                                          double tau) const;

  // Gives each span a font for its language that covers its content,
  // preferring the span's current font category, then the lowest id.
  DesignDocument remap_fonts(const DesignDocument& doc) const;

  std::string translate(const std::string& text, Lang target) const;

  const Vocabulary& vocabulary(Lang lang) const;
  const CharSet& charset(Lang lang) const;
  bool has_vocabulary(Lang lang) const noexcept { return vocabs_.count(lang) != 0; }
  bool has_charset(Lang lang) const noexcept { return charsets_.count(lang) != 0; }

 private:
  std::string fit_to_band(const std::string& text, Lang target,
                          std::size_t source_count, uint64_t seed,
                          double tau) const;
  std::string transform_span_text(const std::string& content, Lang target,
                                  TransformMode mode, uint64_t span_seed,
                                  double tau) const;

  const FontCatalog* catalog_;
  std::map<Lang, Vocabulary> vocabs_;
  std::map<Lang, CharSet> charsets_;
  TranslationBackend* backend_ = nullptr;
};

}  // namespace glyphforge
