#!/usr/bin/env python3
# Copyright (c) 2026 GlyphForge Authors. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Emits src/core/nfc_data.inc: canonical decompositions, primary composition
# pairs, and combining classes, as sorted arrays for binary search. Hangul
# syllables are excluded; they are handled algorithmically.

import os
import sys
import unicodedata

HANGUL_S = 0xAC00
HANGUL_END = 0xD7A3

MAX_CP = 0x110000


def is_hangul_syllable(cp):
    return HANGUL_S <= cp <= HANGUL_END


def main():
    out_path = os.path.join(
        os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
        "src", "core", "nfc_data.inc",
    )

    decomps = []  # (cp, [scalars...]) full canonical (NFD) expansion
    ccc = []  # (cp, class)
    pairs = []  # (a, b, composed)

    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF or is_hangul_syllable(cp):
            continue
        ch = chr(cp)
        k = unicodedata.combining(ch)
        if k:
            ccc.append((cp, k))
        nfd = unicodedata.normalize("NFD", ch)
        if nfd != ch:
            decomps.append((cp, [ord(c) for c in nfd]))
        raw = unicodedata.decomposition(ch)
        if raw and not raw.startswith("<"):
            parts = [int(p, 16) for p in raw.split()]
            if len(parts) == 2 and unicodedata.combining(chr(parts[0])) == 0:
                # primary composite iff composing the pair yields cp back
                if unicodedata.normalize("NFC", chr(parts[0]) + chr(parts[1])) == ch:
                    pairs.append((parts[0], parts[1], cp))

    max_len = max(len(d) for _, d in decomps)
    pairs.sort(key=lambda t: (t[0], t[1]))

    with open(out_path, "w", newline="\n") as f:
        w = f.write
        w("// Generated by tools/dev/gen_nfc_table.py; do not edit.\n")
        w(f"// unicodedata from python {sys.version.split()[0]}, "
          f"unidata_version {unicodedata.unidata_version}\n\n")
        w(f"inline constexpr int kNfcMaxDecomp = {max_len};\n\n")

        w("struct NfcDecomp { char32_t cp; unsigned char n; char32_t out[%d]; };\n" % max_len)
        w("inline constexpr NfcDecomp kNfcDecomps[] = {\n")
        for cp, d in decomps:
            padded = d + [0] * (max_len - len(d))
            w("  {0x%X, %d, {%s}},\n" % (cp, len(d), ", ".join("0x%X" % x for x in padded)))
        w("};\n\n")

        w("struct NfcPair { char32_t a; char32_t b; char32_t composed; };\n")
        w("inline constexpr NfcPair kNfcPairs[] = {\n")
        for a, b, c in pairs:
            w("  {0x%X, 0x%X, 0x%X},\n" % (a, b, c))
        w("};\n\n")

        w("struct NfcCcc { char32_t cp; unsigned char ccc; };\n")
        w("inline constexpr NfcCcc kNfcCcc[] = {\n")
        for cp, k in ccc:
            w("  {0x%X, %d},\n" % (cp, k))
        w("};\n")

    print(f"wrote {out_path}: {len(decomps)} decomps, {len(pairs)} pairs, {len(ccc)} ccc")


if __name__ == "__main__":
    main()
