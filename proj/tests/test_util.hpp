// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace gftest {

inline std::filesystem::path repo_root() { return GF_REPO_ROOT; }
inline std::filesystem::path assets_dir() { return repo_root() / "assets"; }
inline std::filesystem::path fixtures_dir() {
  return repo_root() / "tests" / "data";
}

// Per-test scratch directory, wiped on entry so reruns start clean.
inline std::filesystem::path fresh_tmp(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("glyphforge_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f),
                     std::istreambuf_iterator<char>());
}

}  // namespace gftest
