#!/usr/bin/env python3
# Copyright 2026 the memlens project
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates core/src/unicode_tables.inc from Python's unicodedata.

The label canonicalizer needs four pieces of Unicode data: full lowercase
mappings, category-P ranges, whitespace ranges, and the canonical
decomposition/composition tables for NFC. Freezing them into a source file
keeps canonicalization deterministic and independent of system locales or
an ICU installation.

Run from the repository root:

    python3 scripts/gen_unicode_tables.py > core/src/unicode_tables.inc
"""

import sys
import unicodedata

MAX_CP = 0x110000

# Hangul syllables decompose algorithmically; keep them out of the tables.
HANGUL_FIRST = 0xAC00
HANGUL_LAST = 0xD7A3


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_FIRST <= cp <= HANGUL_LAST


def canonical_decomposition(cp: int):
    """Single-step canonical decomposition, or None."""
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(part, 16) for part in raw.split()]


def full_decomposition(cp: int):
    """Recursively expanded canonical decomposition."""
    step = canonical_decomposition(cp)
    if step is None:
        return [cp]
    out = []
    for part in step:
        out.extend(full_decomposition(part))
    return out


def ranges_for(predicate):
    ranges = []
    start = None
    for cp in range(MAX_CP):
        if predicate(cp):
            if start is None:
                start = cp
        elif start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def main() -> None:
    out = sys.stdout

    lower_entries = []
    for cp in range(MAX_CP):
        ch = chr(cp)
        lowered = ch.lower()
        if lowered != ch:
            cps = [ord(c) for c in lowered]
            if len(cps) > 3:
                raise AssertionError(f"lowercase of U+{cp:04X} longer than 3")
            lower_entries.append((cp, cps))

    punct_ranges = ranges_for(
        lambda cp: unicodedata.category(chr(cp)).startswith("P"))

    def is_space(cp: int) -> bool:
        if cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85):
            return True
        return unicodedata.category(chr(cp)) in ("Zs", "Zl", "Zp")

    space_ranges = ranges_for(is_space)

    decomp_entries = []
    pool = []
    for cp in range(MAX_CP):
        if is_hangul_syllable(cp):
            continue
        if canonical_decomposition(cp) is None:
            continue
        expansion = full_decomposition(cp)
        decomp_entries.append((cp, len(pool), len(expansion)))
        pool.extend(expansion)

    ccc_entries = []
    for cp in range(MAX_CP):
        ccc = unicodedata.combining(chr(cp))
        if ccc:
            ccc_entries.append((cp, ccc))

    # A pair (a, b) recomposes to cp iff cp canonically decomposes to
    # exactly (a, b) and NFC agrees; the round-trip check drops the
    # composition exclusions without needing the exclusion list itself.
    compose_entries = []
    for cp in range(MAX_CP):
        if is_hangul_syllable(cp):
            continue
        step = canonical_decomposition(cp)
        if step is None or len(step) != 2:
            continue
        a, b = step
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            compose_entries.append(((a << 32) | b, cp))
    compose_entries.sort()

    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
    out.write(f"// Unicode data version: {unicodedata.unidata_version}\n\n")

    out.write("struct LowerEntry {\n"
              "  char32_t cp;\n"
              "  char32_t out[3];\n"
              "  unsigned char len;\n"
              "};\n\n")
    out.write(f"constexpr LowerEntry kLowerMap[{len(lower_entries)}] = {{\n")
    for cp, cps in lower_entries:
        padded = cps + [0] * (3 - len(cps))
        body = ", ".join(f"0x{c:04X}" for c in padded)
        out.write(f"  {{0x{cp:04X}, {{{body}}}, {len(cps)}}},\n")
    out.write("};\n\n")

    def emit_ranges(name, ranges):
        out.write("constexpr CodepointRange "
                  f"{name}[{len(ranges)}] = {{\n")
        for first, last in ranges:
            out.write(f"  {{0x{first:04X}, 0x{last:04X}}},\n")
        out.write("};\n\n")

    out.write("struct CodepointRange {\n"
              "  char32_t first;\n"
              "  char32_t last;\n"
              "};\n\n")
    emit_ranges("kPunctuationRanges", punct_ranges)
    emit_ranges("kWhitespaceRanges", space_ranges)

    out.write("struct DecompEntry {\n"
              "  char32_t cp;\n"
              "  unsigned int offset;\n"
              "  unsigned char len;\n"
              "};\n\n")
    out.write(f"constexpr DecompEntry kDecompMap[{len(decomp_entries)}] = {{\n")
    for cp, offset, length in decomp_entries:
        out.write(f"  {{0x{cp:04X}, {offset}, {length}}},\n")
    out.write("};\n\n")
    out.write(f"constexpr char32_t kDecompPool[{len(pool)}] = {{\n")
    for i in range(0, len(pool), 8):
        chunk = ", ".join(f"0x{c:04X}" for c in pool[i:i + 8])
        out.write(f"  {chunk},\n")
    out.write("};\n\n")

    out.write("struct CccEntry {\n"
              "  char32_t cp;\n"
              "  unsigned char ccc;\n"
              "};\n\n")
    out.write(f"constexpr CccEntry kCccMap[{len(ccc_entries)}] = {{\n")
    for cp, ccc in ccc_entries:
        out.write(f"  {{0x{cp:04X}, {ccc}}},\n")
    out.write("};\n\n")

    out.write("struct ComposeEntry {\n"
              "  unsigned long long key;  // (first << 32) | second\n"
              "  char32_t composite;\n"
              "};\n\n")
    out.write(f"constexpr ComposeEntry kComposeMap[{len(compose_entries)}] "
              "= {\n")
    for key, cp in compose_entries:
        out.write(f"  {{0x{key:016X}ULL, 0x{cp:04X}}},\n")
    out.write("};\n")


if __name__ == "__main__":
    main()
