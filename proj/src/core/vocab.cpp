// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "core/vocab.hpp"

#include <algorithm>
#include <fstream>

#include "core/unicode.hpp"

namespace glyphforge {

namespace {

constexpr std::size_t kVocabCap = 5000;

// Parses `key=value` attributes out of a `# name attr=... attr=...` header.
std::string header_attr(const std::string& line, const std::string& key) {
  std::string needle = key + "=";
  std::size_t at = line.find(needle);
  if (at == std::string::npos) return {};
  std::size_t begin = at + needle.size();
  std::size_t end = line.find(' ', begin);
  return line.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
}

}  // namespace

bool CharSet::contains(char32_t cp) const noexcept {
  return std::binary_search(scalars.begin(), scalars.end(), cp);
}

CharSet load_charset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open charset " + path);
  CharSet cs;
  bool saw_header = false;
  std::string line;
  std::vector<char32_t> scalars;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!saw_header && line.find("glyphforge-charset") != std::string::npos) {
        saw_header = true;
        cs.language = lang_from_code_or_throw(header_attr(line, "language"));
        std::string size_attr = header_attr(line, "size");
        if (size_attr.empty()) fail(Errc::config_invalid, path + ": header lacks size");
        cs.declared_size = std::stoi(size_attr);
      }
      continue;
    }
    std::u32string u = uni::decode_utf8(line);
    if (u.size() != 1)
      fail(Errc::config_invalid, path + ": line is not a single scalar: '" + line + "'");
    scalars.push_back(u[0]);
  }
  if (!saw_header) fail(Errc::config_invalid, path + ": missing charset header");
  std::sort(scalars.begin(), scalars.end());
  if (std::adjacent_find(scalars.begin(), scalars.end()) != scalars.end())
    fail(Errc::config_invalid, path + ": duplicate scalar");
  if (static_cast<int>(scalars.size()) != cs.declared_size)
    fail(Errc::config_invalid,
         path + ": declared size " + std::to_string(cs.declared_size) +
             " but found " + std::to_string(scalars.size()));
  cs.scalars = std::move(scalars);
  return cs;
}

Vocabulary load_vocab(const std::string& path, const CharSet& charset) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open vocabulary " + path);
  Vocabulary v;
  v.language = charset.language;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!saw_header && line.find("glyphforge-vocab") != std::string::npos) {
        saw_header = true;
        Lang l = lang_from_code_or_throw(header_attr(line, "language"));
        if (l != charset.language)
          fail(Errc::config_invalid, path + ": language mismatch with charset");
      }
      continue;
    }
    std::size_t t = line.find('\t');
    std::string word = t == std::string::npos ? line : line.substr(0, t);
    if (word.empty()) continue;
    for (char32_t cp : uni::decode_utf8(word)) {
      if (!charset.contains(cp))
        fail(Errc::config_invalid,
             path + ": word '" + word + "' has out-of-charset scalar");
    }
    v.words.push_back(std::move(word));
    if (v.words.size() > kVocabCap)
      fail(Errc::config_invalid, path + ": more than 5000 words");
  }
  if (v.words.empty()) fail(Errc::empty_corpus, path + ": no words");
  return v;
}

Vocabulary build_vocab(Lang language,
                       const std::vector<std::pair<std::string, uint64_t>>& corpus,
                       const CharSet& charset) {
  if (corpus.empty()) fail(Errc::empty_corpus, "corpus yields no pairs");

  // merge duplicates by summed count, drop out-of-charset words
  std::vector<std::pair<std::string, uint64_t>> merged;
  {
    std::vector<std::pair<std::string, uint64_t>> sorted = corpus;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [word, count] : sorted) {
      bool ok = !word.empty();
      for (char32_t cp : uni::decode_utf8(word))
        if (!charset.contains(cp)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (!merged.empty() && merged.back().first == word)
        merged.back().second += count;
      else
        merged.emplace_back(word, count);
    }
  }

  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (merged.size() > kVocabCap) merged.resize(kVocabCap);

  Vocabulary v;
  v.language = language;
  v.words.reserve(merged.size());
  for (auto& [word, _] : merged) v.words.push_back(word);
  return v;
}

std::vector<std::string> segment(const std::string& text, Lang language) {
  return script_class(language) == ScriptClass::alphabetic ? uni::split_runs(text)
                                                           : uni::split_scalars(text);
}

}  // namespace glyphforge
