// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/font_catalog.hpp"

#include <algorithm>
#include <filesystem>

#include "core/unicode.hpp"

namespace glyphforge {

const char* font_license_name(FontLicense l) noexcept {
  return l == FontLicense::ofl ? "OFL" : "other";
}

const char* font_category_name(FontCategory c) noexcept {
  switch (c) {
    case FontCategory::serif: return "serif";
    case FontCategory::sans: return "sans";
    case FontCategory::script: return "script";
    case FontCategory::display: return "display";
    case FontCategory::unknown: return "unknown";
  }
  return "unknown";
}

FontLicense font_license_from_name(std::string_view s) {
  if (s == "OFL" || s == "ofl") return FontLicense::ofl;
  if (s == "other") return FontLicense::other;
  fail(Errc::config_invalid, "unknown font license '" + std::string(s) + "'");
}

FontCategory font_category_from_name(std::string_view s) {
  if (s == "serif") return FontCategory::serif;
  if (s == "sans") return FontCategory::sans;
  if (s == "script") return FontCategory::script;
  if (s == "display") return FontCategory::display;
  if (s == "unknown" || s.empty()) return FontCategory::unknown;
  fail(Errc::config_invalid, "unknown font category '" + std::string(s) + "'");
}

const FontEntry& FontCatalog::register_font(const std::string& file, Lang language,
                                            FontLicense license, FontCategory category,
                                            std::string family) {
  auto parsed = std::make_shared<const ttf::Font>(ttf::Font::load_file(file));
  if (parsed->coverage().empty())
    fail(Errc::empty_coverage, file + ": font maps no characters");

  FontPrefix prefix = font_prefix_for(language);
  int next_id = 0;
  for (const auto& e : entries_)
    if (e.id.prefix == prefix) next_id = std::max(next_id, e.id.id + 1);

  FontEntry entry;
  entry.id = FontRef{prefix, next_id};
  entry.family = family.empty() ? std::filesystem::path(file).stem().string() : family;
  entry.file = file;
  entry.license = license;
  entry.category = category;
  entry.language = language;

  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->fonts[file] = parsed;
  }
  entries_.push_back(std::move(entry));
  return entries_.back();
}

const FontEntry& FontCatalog::add_entry(FontEntry entry) {
  if (find(entry.id))
    fail(Errc::config_invalid, "duplicate font id " + entry.id.tag());
  if (!std::filesystem::exists(entry.file))
    fail(Errc::io, "font file missing: " + entry.file);
  entries_.push_back(std::move(entry));
  return entries_.back();
}

FontCatalog FontCatalog::load_manifest(const std::string& manifest_path) {
  Json j = load_json_file(manifest_path);
  if (!j.is_array()) fail(Errc::config_invalid, manifest_path + ": expected array");
  std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();

  FontCatalog cat;
  for (const auto& item : j) {
    FontEntry e;
    e.id = font_ref_from_tag(item.at("id").get<std::string>());
    e.family = item.value("family", "");
    std::filesystem::path file = item.at("file").get<std::string>();
    e.file = file.is_absolute() ? file.string() : (base / file).string();
    e.license = font_license_from_name(item.value("license", "other"));
    e.language = lang_from_code_or_throw(item.at("language").get<std::string>());
    e.category = font_category_from_name(item.value("category", "unknown"));
    cat.add_entry(std::move(e));
  }
  return cat;
}

const FontEntry* FontCatalog::find(FontRef id) const noexcept {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const FontEntry& FontCatalog::get(FontRef id) const {
  if (const FontEntry* e = find(id)) return *e;
  fail(Errc::no_usable_font, "no font with id " + id.tag());
}

const ttf::Font& FontCatalog::font(const FontEntry& entry) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->fonts.find(entry.file);
    if (it != cache_->fonts.end()) return *it->second;
  }
  auto parsed = std::make_shared<const ttf::Font>(ttf::Font::load_file(entry.file));
  if (parsed->coverage().empty())
    fail(Errc::empty_coverage, entry.file + ": font maps no characters");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, _] = cache_->fonts.emplace(entry.file, std::move(parsed));
  return *it->second;
}

std::vector<char32_t> FontCatalog::coverage_check(const FontEntry& entry,
                                                  const std::string& text) const {
  const ttf::Font& f = font(entry);
  std::vector<char32_t> missing;
  for (char32_t cp : uni::decode_utf8(text)) {
    if (uni::is_whitespace(cp)) continue;
    if (f.glyph_index(cp) == 0) missing.push_back(cp);
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  return missing;
}

void FontCatalog::attach_charsets(std::map<Lang, CharSet> charsets) {
  charsets_ = std::move(charsets);
}

const CharSet* FontCatalog::charset_for(Lang language) const noexcept {
  auto it = charsets_.find(language);
  return it == charsets_.end() ? nullptr : &it->second;
}

std::vector<const FontEntry*> FontCatalog::fonts_for(
    Lang language, const std::optional<std::string>& required_text) const {
  std::vector<const FontEntry*> out;
  const CharSet* cs = charset_for(language);
  for (const auto& e : entries_) {
    // Fonts group by script prefix: alphabetic languages share the en pool.
    if (font_prefix_for(e.language) != font_prefix_for(language)) continue;
    const ttf::Font& f = font(e);
    bool ok = true;
    if (cs) {
      for (char32_t cp : cs->scalars)
        if (f.glyph_index(cp) == 0) {
          ok = false;
          break;
        }
    }
    if (ok && required_text) {
      for (char32_t cp : uni::decode_utf8(*required_text)) {
        if (uni::is_whitespace(cp)) continue;
        if (f.glyph_index(cp) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(&e);
  }
  std::sort(out.begin(), out.end(), [](const FontEntry* a, const FontEntry* b) {
    if (a->id.prefix != b->id.prefix) return a->id.prefix < b->id.prefix;
    return a->id.id < b->id.id;
  });
  if (out.empty())
    fail(Errc::no_usable_font,
         std::string("no usable font for language ") + lang_code(language));
  return out;
}

CatalogStats FontCatalog::stats() const {
  CatalogStats s;
  for (const auto& e : entries_) {
    auto& [count, ofl] = s.per_language[e.language];
    ++count;
    if (e.license == FontLicense::ofl) ++ofl;
  }
  return s;
}

}  // namespace glyphforge
