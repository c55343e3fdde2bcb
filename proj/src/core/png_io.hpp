// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/raster.hpp"

namespace glyphforge::png {

// 8-bit RGB PNG, fixed zlib level and filter strategy so the same pixels
// always produce the same bytes.
std::vector<uint8_t> encode(const Image& img);

// Accepts 8-bit gray, RGB, RGBA (alpha dropped), non-interlaced.
Image decode(const std::vector<uint8_t>& bytes);

void write_file(const std::string& path, const Image& img);
Image read_file(const std::string& path);

}  // namespace glyphforge::png
