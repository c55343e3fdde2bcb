// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "core/truetype.hpp"
#include "core/vocab.hpp"

namespace glyphforge {

enum class FontLicense : uint8_t { ofl, other };
enum class FontCategory : uint8_t { serif, sans, script, display, unknown };

const char* font_license_name(FontLicense l) noexcept;
const char* font_category_name(FontCategory c) noexcept;
FontLicense font_license_from_name(std::string_view s);
FontCategory font_category_from_name(std::string_view s);

struct FontEntry {
  FontRef id;
  std::string family;
  std::string file;  // resolved path
  FontLicense license = FontLicense::other;
  FontCategory category = FontCategory::unknown;
  Lang language = Lang::en;
};

struct CatalogStats {
  // language -> (font_count, ofl_count), only languages present
  std::map<Lang, std::pair<int, int>> per_language;
};

// Entries are cheap metadata; font files parse lazily and are cached per
// path, so a manifest can describe many entries over few files.
class FontCatalog {
 public:
  FontCatalog() = default;

  // Parses the file eagerly; coverage must be non-empty. The new entry
  // takes the next free id for the language's font prefix.
  const FontEntry& register_font(const std::string& file, Lang language,
                                 FontLicense license,
                                 FontCategory category = FontCategory::unknown,
                                 std::string family = "");

  // Adds an entry with an explicit id (manifest path); file existence is
  // checked, parsing deferred.
  const FontEntry& add_entry(FontEntry entry);

  // JSON array of {id, family, file, license, language, category}; relative
  // file paths resolve against the manifest's directory.
  static FontCatalog load_manifest(const std::string& manifest_path);

  const FontEntry* find(FontRef id) const noexcept;
  const FontEntry& get(FontRef id) const;
  const std::vector<FontEntry>& entries() const noexcept { return entries_; }

  // Parsed font for an entry (cached, thread-safe).
  const ttf::Font& font(const FontEntry& entry) const;

  // Non-whitespace scalars of text missing from the entry's coverage,
  // sorted unique.
  std::vector<char32_t> coverage_check(const FontEntry& entry,
                                       const std::string& text) const;

  // Charsets used by fonts_for coverage screening.
  void attach_charsets(std::map<Lang, CharSet> charsets);
  const CharSet* charset_for(Lang language) const noexcept;

  // Entries declared for `language` whose coverage contains the language's
  // charset (when attached) and required_text's scalars, ordered by id.
  std::vector<const FontEntry*> fonts_for(
      Lang language, const std::optional<std::string>& required_text = {}) const;

  CatalogStats stats() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const ttf::Font>> fonts;
  };

  std::vector<FontEntry> entries_;
  std::map<Lang, CharSet> charsets_;
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

}  // namespace glyphforge
