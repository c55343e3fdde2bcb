// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/transform.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "core/error.hpp"
#include "core/json_util.hpp"
#include "core/rng.hpp"
#include "core/unicode.hpp"
#include "httplib.h"

namespace glyphforge {

namespace {

std::size_t scalar_count(const std::u32string& s) {
  std::size_t n = 0;
  for (char32_t c : s)
    if (!uni::is_whitespace(c)) ++n;
  return n;
}

std::size_t scalar_count_utf8(const std::string& s) {
  return scalar_count(uni::decode_utf8(s));
}

bool is_ascii_letter(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

// Splits a token into leading affix, letter core, trailing affix.
void split_affixes(const std::u32string& tok, std::u32string& lead,
                   std::u32string& core, std::u32string& tail) {
  std::size_t b = 0, e = tok.size();
  while (b < e && !is_ascii_letter(tok[b])) ++b;
  while (e > b && !is_ascii_letter(tok[e - 1])) --e;
  lead = tok.substr(0, b);
  core = tok.substr(b, e - b);
  tail = tok.substr(e);
}

bool all_upper_ascii(const std::u32string& s) {
  bool seen = false;
  for (char32_t c : s) {
    if (c >= U'a' && c <= U'z') return false;
    if (c >= U'A' && c <= U'Z') seen = true;
  }
  return seen;
}

}  // namespace

const char* transform_mode_name(TransformMode m) noexcept {
  switch (m) {
    case TransformMode::random_substitution: return "random_substitution";
    case TransformMode::dictionary: return "dictionary";
    case TransformMode::external_translator: return "external_translator";
  }
  return "?";
}

TransformMode transform_mode_from_name(const std::string& name) {
  if (name == "random_substitution") return TransformMode::random_substitution;
  if (name == "dictionary") return TransformMode::dictionary;
  if (name == "external_translator") return TransformMode::external_translator;
  fail(Errc::config_invalid, "unknown transform mode: " + name);
}

CountBand count_band(std::size_t n, double tau) {
  if (!(tau >= 0.0) || tau >= 1.0)
    fail(Errc::config_invalid, "tolerance must lie in [0, 1)");
  CountBand b;
  double dn = static_cast<double>(n);
  b.lo = static_cast<std::size_t>(std::ceil((1.0 - tau) * dn));
  b.hi = static_cast<std::size_t>(std::floor((1.0 + tau) * dn));
  return b;
}

DictionaryBackend::DictionaryBackend(const std::string& lexicon_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(lexicon_dir))
    fail(Errc::io, "lexicon directory not found: " + lexicon_dir);
  for (Lang lang : kAllLangs) {
    if (lang == Lang::en) continue;
    fs::path p = fs::path(lexicon_dir) / ("en-" + std::string(lang_code(lang)) + ".tsv");
    if (!fs::exists(p)) continue;
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(Errc::io, "cannot open lexicon " + p.string());
    std::map<std::string, std::string> table;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::size_t t = line.find('\t');
      if (t == std::string::npos)
        fail(Errc::config_invalid, p.string() + ": missing tab separator");
      std::string key = uni::lower_utf8(line.substr(0, t));
      std::string val = uni::nfc_utf8(line.substr(t + 1));
      if (key.empty() || val.empty())
        fail(Errc::config_invalid, p.string() + ": blank lexicon entry");
      table[key] = val;
    }
    tables_[lang] = std::move(table);
  }
}

std::string DictionaryBackend::translate(const std::string& text, Lang target) {
  if (text.empty()) return "";
  if (target == Lang::en) return text;
  auto it = tables_.find(target);
  if (it == tables_.end())
    fail(Errc::io, "no lexicon loaded for " + std::string(lang_code(target)));
  const auto& table = it->second;

  std::u32string u = uni::nfc(uni::decode_utf8(text));
  std::u32string out;
  std::size_t i = 0;
  while (i < u.size()) {
    if (uni::is_whitespace(u[i])) {
      out.push_back(u[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < u.size() && !uni::is_whitespace(u[j])) ++j;
    std::u32string tok = u.substr(i, j - i);
    std::u32string lead, core, tail;
    split_affixes(tok, lead, core, tail);
    auto hit = core.empty()
                   ? table.end()
                   : table.find(uni::lower_utf8(uni::encode_utf8(core)));
    if (hit == table.end()) {
      out += tok;
    } else {
      std::u32string repl = uni::decode_utf8(hit->second);
      if (script_class(target) == ScriptClass::alphabetic) {
        if (all_upper_ascii(core) && core.size() > 1) {
          for (char32_t& c : repl) c = uni::to_upper(c);
        } else if (core[0] >= U'A' && core[0] <= U'Z' && !repl.empty()) {
          repl[0] = uni::to_upper(repl[0]);
        }
      }
      out += lead;
      out += repl;
      out += tail;
    }
    i = j;
  }
  return uni::encode_utf8(uni::nfc(out));
}

HttpBackend::HttpBackend(HttpBackendConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.host.empty()) fail(Errc::config_invalid, "backend host is empty");
  if (cfg_.port < 1 || cfg_.port > 65535)
    fail(Errc::config_invalid, "backend port out of range");
  if (cfg_.timeout_ms < 1) fail(Errc::config_invalid, "backend timeout invalid");
  if (cfg_.retries < 0) fail(Errc::config_invalid, "backend retries invalid");
}

std::string HttpBackend::translate(const std::string& text, Lang target) {
  if (text.empty()) return "";
  Json body;
  body["text"] = text;
  body["source"] = "en";
  body["target"] = lang_code(target);
  std::string payload = body.dump();

  Error last(Errc::backend_timeout, "backend unreachable");
  for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
    try {
      httplib::Client client(cfg_.host, cfg_.port);
      client.set_connection_timeout(0, cfg_.timeout_ms * 1000);
      client.set_read_timeout(0, cfg_.timeout_ms * 1000);
      client.set_write_timeout(0, cfg_.timeout_ms * 1000);
      httplib::Result res =
          client.Post(cfg_.path, payload, "application/json");
      if (!res)
        fail(Errc::backend_timeout,
             "no response from " + cfg_.host + ":" + std::to_string(cfg_.port));
      if (res->status != 200)
        fail(Errc::backend_malformed,
             "backend returned HTTP " + std::to_string(res->status));
      Json parsed = Json::parse(res->body, nullptr, false);
      if (parsed.is_discarded() || !parsed.is_object() ||
          !parsed.contains("text") || !parsed["text"].is_string())
        fail(Errc::backend_malformed, "backend response is not {\"text\": ...}");
      std::string got = parsed["text"].get<std::string>();
      if (got.empty())
        fail(Errc::backend_malformed, "backend returned empty translation");
      if (uni::encode_utf8(uni::decode_utf8(got)) != got)
        fail(Errc::backend_malformed, "backend response is not valid UTF-8");
      return got;
    } catch (const Error& e) {
      last = e;
    }
  }
  throw last;
}

Transformer::Transformer(const FontCatalog& catalog) : catalog_(&catalog) {}

void Transformer::add_vocabulary(Vocabulary vocab) {
  Lang lang = vocab.language;
  vocabs_.insert_or_assign(lang, std::move(vocab));
}

void Transformer::add_charset(CharSet charset) {
  Lang lang = charset.language;
  charsets_.insert_or_assign(lang, std::move(charset));
}

const Vocabulary& Transformer::vocabulary(Lang lang) const {
  auto it = vocabs_.find(lang);
  if (it == vocabs_.end())
    fail(Errc::config_invalid,
         "no vocabulary loaded for " + std::string(lang_code(lang)));
  return it->second;
}

const CharSet& Transformer::charset(Lang lang) const {
  auto it = charsets_.find(lang);
  if (it == charsets_.end())
    fail(Errc::config_invalid,
         "no charset loaded for " + std::string(lang_code(lang)));
  return it->second;
}

std::string Transformer::substitute_random(const std::string& text, Lang target,
                                           uint64_t seed, double tau) const {
  std::u32string u = uni::nfc(uni::decode_utf8(text));
  std::size_t n = scalar_count(u);
  if (n == 0) return "";
  CountBand band = count_band(n, tau);
  Rng rng(seed);

  if (script_class(target) == ScriptClass::character_based) {
    const CharSet& cs = charset(target);
    std::size_t m = band.lo + rng.below(band.hi - band.lo + 1);
    std::u32string out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      out.push_back(cs.scalars[rng.below(cs.scalars.size())]);
    return uni::encode_utf8(out);
  }

  const Vocabulary& vocab = vocabulary(target);
  if (vocab.words.empty()) fail(Errc::empty_corpus, "vocabulary is empty");
  std::vector<std::size_t> lens(vocab.words.size());
  std::size_t min_len = SIZE_MAX;
  for (std::size_t i = 0; i < vocab.words.size(); ++i) {
    lens[i] = scalar_count_utf8(vocab.words[i]);
    min_len = std::min(min_len, lens[i]);
  }

  std::vector<std::size_t> picked;
  std::size_t count = 0;
  for (int round = 0; round < 16; ++round) {
    picked.clear();
    count = 0;
    while (count < band.lo) {
      std::size_t w = rng.below(vocab.words.size());
      picked.push_back(w);
      count += lens[w];
    }
    if (count <= band.hi) break;
  }
  // trim then pad with fitting words until the band is entered
  while (count > band.hi && !picked.empty()) {
    count -= lens[picked.back()];
    picked.pop_back();
  }
  while (count < band.lo) {
    std::size_t budget = band.hi - count;
    if (min_len > budget)
      fail(Errc::char_count_unattainable,
           "no vocabulary word fits the remaining budget of " +
               std::to_string(budget));
    std::size_t w = vocab.words.size();
    for (int tries = 0; tries < 8; ++tries) {
      std::size_t cand = rng.below(vocab.words.size());
      if (lens[cand] <= budget) {
        w = cand;
        break;
      }
    }
    if (w == vocab.words.size()) {
      for (std::size_t i = 0; i < lens.size(); ++i)
        if (lens[i] == min_len) {
          w = i;
          break;
        }
    }
    picked.push_back(w);
    count += lens[w];
  }
  if (count < band.lo || count > band.hi)
    fail(Errc::char_count_unattainable,
         "could not reach " + std::to_string(band.lo) + ".." +
             std::to_string(band.hi) + " scalars");

  std::string out;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    if (i) out.push_back(' ');
    out += vocab.words[picked[i]];
  }
  return out;
}

std::string Transformer::translate(const std::string& text, Lang target) const {
  if (backend_ == nullptr)
    fail(Errc::config_invalid, "no translation backend configured");
  return backend_->translate(text, target);
}

std::string Transformer::fit_to_band(const std::string& text, Lang target,
                                     std::size_t source_count, uint64_t seed,
                                     double tau) const {
  CountBand band = count_band(source_count, tau);
  std::u32string u = uni::nfc(uni::decode_utf8(text));
  std::size_t count = scalar_count(u);
  if (band.contains(count)) return uni::encode_utf8(u);

  Rng rng(seed);
  if (script_class(target) == ScriptClass::character_based) {
    std::u32string body;
    for (char32_t c : u)
      if (!uni::is_whitespace(c)) body.push_back(c);
    if (body.size() > band.hi) body.resize(band.hi);
    const CharSet& cs = charset(target);
    while (body.size() < band.lo)
      body.push_back(cs.scalars[rng.below(cs.scalars.size())]);
    return uni::encode_utf8(body);
  }

  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t c : u) {
    if (uni::is_whitespace(c)) {
      if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));

  while (count > band.hi && !words.empty()) {
    count -= words.back().size();
    words.pop_back();
  }
  if (count < band.lo) {
    const Vocabulary& vocab = vocabulary(target);
    if (vocab.words.empty()) fail(Errc::empty_corpus, "vocabulary is empty");
    std::vector<std::size_t> lens(vocab.words.size());
    std::size_t min_len = SIZE_MAX;
    for (std::size_t i = 0; i < vocab.words.size(); ++i) {
      lens[i] = scalar_count_utf8(vocab.words[i]);
      min_len = std::min(min_len, lens[i]);
    }
    while (count < band.lo) {
      std::size_t budget = band.hi - count;
      if (min_len > budget)
        fail(Errc::char_count_unattainable,
             "no vocabulary word fits the remaining budget of " +
                 std::to_string(budget));
      std::size_t w = vocab.words.size();
      for (int tries = 0; tries < 8; ++tries) {
        std::size_t cand = rng.below(vocab.words.size());
        if (lens[cand] <= budget) {
          w = cand;
          break;
        }
      }
      if (w == vocab.words.size()) {
        for (std::size_t i = 0; i < lens.size(); ++i)
          if (lens[i] == min_len) {
            w = i;
            break;
          }
      }
      words.push_back(uni::decode_utf8(vocab.words[w]));
      count += lens[w];
    }
  }
  if (count < band.lo || count > band.hi)
    fail(Errc::char_count_unattainable,
         "translated text cannot enter " + std::to_string(band.lo) + ".." +
             std::to_string(band.hi));

  std::u32string joined;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) joined.push_back(U' ');
    joined += words[i];
  }
  return uni::encode_utf8(joined);
}

std::string Transformer::transform_span_text(const std::string& content,
                                             Lang target, TransformMode mode,
                                             uint64_t span_seed,
                                             double tau) const {
  if (mode == TransformMode::random_substitution)
    return substitute_random(content, target, span_seed, tau);
  std::string translated = translate(content, target);
  return fit_to_band(translated, target, scalar_count_utf8(content), span_seed,
                     tau);
}

DesignDocument Transformer::transform_document(const DesignDocument& doc,
                                               Lang target, TransformMode mode,
                                               uint64_t seed,
                                               double tau) const {
  count_band(1, tau);
  if (target == Lang::en) {
    if (mode == TransformMode::dictionary) return doc;
    fail(Errc::config_invalid,
         "target en is only valid in dictionary mode (identity)");
  }
  for (const TextSpan& s : doc.spans)
    if (s.language != Lang::en)
      fail(Errc::config_invalid, "source document spans must be English");

  DesignDocument out = doc;
  for (std::size_t i = 0; i < out.spans.size(); ++i) {
    uint64_t span_seed = stable_hash_mix(seed, "span", i);
    out.spans[i].content = uni::nfc_utf8(transform_span_text(
        doc.spans[i].content, target, mode, span_seed, tau));
    out.spans[i].language = target;
  }
  return remap_fonts(out);
}

DesignDocument Transformer::transform_document_mixed(const DesignDocument& doc,
                                                     TransformMode mode,
                                                     uint64_t seed,
                                                     double tau) const {
  count_band(1, tau);
  for (const TextSpan& s : doc.spans)
    if (s.language != Lang::en)
      fail(Errc::config_invalid, "source document spans must be English");

  DesignDocument out = doc;
  for (std::size_t i = 0; i < out.spans.size(); ++i) {
    Rng pick(stable_hash_mix(seed, "mixed", i));
    Lang target = kAllLangs[pick.below(kAllLangs.size())];
    if (target == Lang::en) continue;
    uint64_t span_seed = stable_hash_mix(seed, "span", i);
    out.spans[i].content = uni::nfc_utf8(transform_span_text(
        doc.spans[i].content, target, mode, span_seed, tau));
    out.spans[i].language = target;
  }
  return remap_fonts(out);
}

DesignDocument Transformer::remap_fonts(const DesignDocument& doc) const {
  DesignDocument out = doc;
  for (TextSpan& span : out.spans) {
    std::vector<const FontEntry*> usable =
        catalog_->fonts_for(span.language, span.content);
    const FontEntry* current = catalog_->find(span.font);
    FontCategory want =
        current ? current->category : FontCategory::unknown;
    const FontEntry* chosen = nullptr;
    for (const FontEntry* e : usable)
      if (e->category == want) {
        chosen = e;
        break;
      }
    if (chosen == nullptr) chosen = usable.front();
    span.font = chosen->id;
  }
  return out;
}

}  // namespace glyphforge
