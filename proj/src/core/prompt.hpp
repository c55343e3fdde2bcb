// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "core/model.hpp"

namespace glyphforge {

// Prompt text layout:
//   Background: <caption> [Tags: <t1>, <t2>, ...] Text: Text "<content>" in
//   <color-INT>, <PREFIX-font-INT>. Text "..." ...
// Embedded double quotes and backslashes in span content are
// backslash-escaped. Any text before the first `Text "` clause is treated
// as header material (caption, optional tags).
DesignPrompt parse_prompt(const std::string& raw);

// Emits the canonical single-line form; parse(serialize(p)) == p for any
// prompt that itself came out of parse_prompt.
std::string serialize_prompt(const DesignPrompt& p);

}  // namespace glyphforge
