#!/usr/bin/env python3
# Copyright 2026 The sentropy Authors
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
"""Regenerates the Unicode data tables consumed by src/unicode.cpp.

Rewrites src/unicode_tables.inc (character classification, canonical
decomposition, combining classes, primary composites) and
tests/nfc_vectors.inc (NFC test vectors frozen from Python's unicodedata,
which serves as the reference normalizer).

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import random
import sys
import unicodedata
from pathlib import Path

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172  # handled algorithmically, kept out of the tables
SURROGATE_LO, SURROGATE_HI = 0xD800, 0xDFFF


def is_hangul_syllable(cp):
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def is_surrogate(cp):
    return SURROGATE_LO <= cp <= SURROGATE_HI


def iter_codepoints():
    for cp in range(MAX_CP):
        if not is_surrogate(cp):
            yield cp


def build_ranges(predicate):
    ranges = []
    start = None
    prev = None
    for cp in iter_codepoints():
        if predicate(cp):
            if start is None:
                start = cp
            elif cp != prev + 1:
                ranges.append((start, prev))
                start = cp
            prev = cp
    if start is not None:
        ranges.append((start, prev))
    return ranges


def collect():
    data = {}

    # Full canonical decomposition (NFD), Hangul excluded.
    decomp = []
    pool = []
    for cp in iter_codepoints():
        if is_hangul_syllable(cp):
            continue
        nfd = unicodedata.normalize("NFD", chr(cp))
        if nfd != chr(cp):
            expansion = [ord(c) for c in nfd]
            decomp.append((cp, len(pool), len(expansion)))
            pool.extend(expansion)
    data["decomp"] = decomp
    data["pool"] = pool

    # Nonzero canonical combining classes.
    data["ccc"] = [
        (cp, unicodedata.combining(chr(cp)))
        for cp in iter_codepoints()
        if unicodedata.combining(chr(cp)) != 0
    ]

    # Primary composites: one-level canonical pair decompositions that the
    # reference normalizer actually recombines (this bakes in the
    # composition exclusions).
    pairs = []
    for cp in iter_codepoints():
        if is_hangul_syllable(cp):
            continue
        raw = unicodedata.decomposition(chr(cp))
        if not raw or raw.startswith("<"):
            continue
        fields = raw.split()
        if len(fields) != 2:
            continue
        a, b = int(fields[0], 16), int(fields[1], 16)
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort()
    data["pairs"] = pairs

    data["letters"] = build_ranges(
        lambda cp: unicodedata.category(chr(cp)).startswith("L")
    )
    data["digits"] = build_ranges(lambda cp: unicodedata.category(chr(cp)) == "Nd")
    extra_space = {0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85, 0x2028, 0x2029}
    data["spaces"] = build_ranges(
        lambda cp: cp in extra_space or unicodedata.category(chr(cp)) == "Zs"
    )

    lower = []
    for cp in iter_codepoints():
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            lower.append((cp, ord(low)))
    data["lower"] = lower

    return data


def emit_tables(data, path):
    out = []
    w = out.append
    w("// Generated by scripts/gen_unicode_tables.py from Python unicodedata")
    w(f"// (Unicode {unicodedata.unidata_version}). Do not edit by hand.")
    w("")
    w("// clang-format off")

    def rows(items, fmt, per_line):
        for i in range(0, len(items), per_line):
            chunk = ", ".join(fmt(x) for x in items[i : i + per_line])
            w(f"    {chunk},")

    w(f"inline constexpr DecompEntry kDecompEntries[{len(data['decomp'])}] = {{")
    rows(data["decomp"], lambda e: f"{{0x{e[0]:X}, {e[1]}, {e[2]}}}", 4)
    w("};")
    w("")
    w(f"inline constexpr char32_t kDecompPool[{len(data['pool'])}] = {{")
    rows(data["pool"], lambda c: f"0x{c:X}", 8)
    w("};")
    w("")
    w(f"inline constexpr CombiningEntry kCombiningClasses[{len(data['ccc'])}] = {{")
    rows(data["ccc"], lambda e: f"{{0x{e[0]:X}, {e[1]}}}", 6)
    w("};")
    w("")
    w(f"inline constexpr CompositionPair kCompositionPairs[{len(data['pairs'])}] = {{")
    rows(data["pairs"], lambda e: f"{{0x{e[0]:X}, 0x{e[1]:X}, 0x{e[2]:X}}}", 4)
    w("};")
    w("")

    def range_table(name, ranges):
        w(f"inline constexpr CharRange {name}[{len(ranges)}] = {{")
        rows(ranges, lambda r: f"{{0x{r[0]:X}, 0x{r[1]:X}}}", 6)
        w("};")
        w("")

    range_table("kLetterRanges", data["letters"])
    range_table("kDigitRanges", data["digits"])
    range_table("kSpaceRanges", data["spaces"])

    w(f"inline constexpr LowerEntry kLowerPairs[{len(data['lower'])}] = {{")
    rows(data["lower"], lambda e: f"{{0x{e[0]:X}, 0x{e[1]:X}}}", 5)
    w("};")
    w("// clang-format on")
    w("")
    path.write_text("\n".join(out), encoding="utf-8")
    print(f"wrote {path} ({len(data['decomp'])} decompositions, "
          f"{len(data['pairs'])} composites, {len(data['letters'])} letter ranges)")


def nfc_vector_inputs():
    cases = [
        "",
        "plain ascii, nothing to do.",
        "é",                      # decomposed acute
        "é",                       # already composed
        "Café au lait",
        "q̣̇",                # reorder: dot below sorts first
        "q̣̇",
        "Å",                       # singleton: Angstrom sign
        "ḍ̇",                 # composed base, trailing mark reorders
        "á̧",                # blocked composition candidate
        "á̧",
        "й",                 # Cyrillic short i
        "ἄ",           # Greek alpha + psili + oxia
        "가",                 # Hangul LV
        "각",           # Hangul LVT
        "각",                 # syllable + trailing jamo
        "豈",                       # CJK compatibility singleton
        "Å",                 # A + ring
        "Å",
        "ộ",                # o + circumflex + dot below
        "Ǯ",                 # ezh + caron
        "ṩ",
        "ྲྀ",                 # Tibetan, composition exclusion territory
        "中文文本不变。",
        "mixed 中文 and ascii é!",
        "ą́",           # a + ogonek + acute
        "ṩ",
        "Έ",                 # Greek capital epsilon + acute
        "ΐ",           # iota + dialytika + tonos
        "퓛",                       # Hangul syllable stays put
    ]
    rng = random.Random(20260819)
    bases = "aeiounszcαιи中"
    marks = ["̀", "́", "̂", "̈", "̣", "̧", "̨", "̌"]
    for _ in range(20):
        parts = []
        for _ in range(rng.randint(1, 6)):
            parts.append(rng.choice(bases))
            for _ in range(rng.randint(0, 3)):
                parts.append(rng.choice(marks))
        cases.append("".join(parts))
    return cases


def esc_octal(raw):
    return '"' + "".join(f"\\{b:03o}" for b in raw.encode("utf-8")) + '"'


def emit_vectors(path):
    out = []
    w = out.append
    w("// Generated by scripts/gen_unicode_tables.py from Python unicodedata")
    w(f"// (Unicode {unicodedata.unidata_version}). Expected outputs come from")
    w("// unicodedata.normalize('NFC', ...), the reference normalizer.")
    w("// Do not edit by hand.")
    w("")
    w("// clang-format off")
    cases = nfc_vector_inputs()
    w(f"inline constexpr NfcVector kNfcVectors[{len(cases)}] = {{")
    for s in cases:
        nfc = unicodedata.normalize("NFC", s)
        w(f"    {{{esc_octal(s)}, {esc_octal(nfc)}}},")
    w("};")
    w("// clang-format on")
    w("")
    path.write_text("\n".join(out), encoding="utf-8")
    print(f"wrote {path} ({len(cases)} vectors)")


def main():
    root = Path(__file__).resolve().parent.parent
    data = collect()
    emit_tables(data, root / "src" / "unicode_tables.inc")
    emit_vectors(root / "tests" / "nfc_vectors.inc")
    return 0


if __name__ == "__main__":
    sys.exit(main())
