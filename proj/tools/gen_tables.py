#!/usr/bin/env python3
#
# Copyright 2026 The Adversarial Text Normalizer Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Regenerates the character-class and confusable tables under data/.

The generated files are checked in; the runtime never consults Unicode
decomposition data, only these tables. Run from the repository root:

    python3 tools/gen_tables.py
"""

import os
import unicodedata

VERSION = "2026.1"
DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def ascii_printable(s):
    return len(s) > 0 and all(0x20 <= ord(c) <= 0x7E for c in s)


def nfkc_ascii(cp, alnum_only=True):
    out = unicodedata.normalize("NFKC", chr(cp))
    if out == chr(cp) or not ascii_printable(out):
        return None
    if alnum_only and not out.isalnum():
        return None
    return out


def write_table(path, name, comment, rows):
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# {comment}\n")
        f.write("# Generated by tools/gen_tables.py; edit the generator, not this file.\n")
        f.write(f"#@ name={name}\n#@ version={VERSION}\n")
        seen = set()
        for src, repl in rows:
            key = tuple(src)
            if key in seen:
                continue
            seen.add(key)
            assert all(c >= 0x80 for c in src), src
            assert ascii_printable(repl), (src, repl)
            hexes = " ".join(f"{c:04X}" for c in src)
            f.write(f"{hexes}\t{repl}\n")


def math_alphanumeric():
    rows = []
    for cp in range(0x1D400, 0x1D800):
        r = nfkc_ascii(cp)
        if r is not None and len(r) == 1:
            rows.append(([cp], r))
    # Dotless i and j have no ASCII decomposition.
    rows.append(([0x1D6A4], "i"))
    rows.append(([0x1D6A5], "j"))
    # Letterlike symbols fill the reserved holes in the styled alphabets.
    for cp in range(0x2100, 0x2150):
        r = nfkc_ascii(cp)
        if r is not None and len(r) == 1:
            rows.append(([cp], r))
    return sorted(rows)


def fullwidth():
    return [([cp], chr(cp - 0xFEE0)) for cp in range(0xFF01, 0xFF5F)]


def enclosed_alphanumerics():
    rows = []
    for cp in range(0x2460, 0x2500):
        r = nfkc_ascii(cp, alnum_only=False)
        if r is not None:
            rows.append(([cp], r))
    # Negative circled and double circled numbers have no decomposition.
    for i, cp in enumerate(range(0x24EB, 0x24F5)):
        rows.append(([cp], str(11 + i)))
    for i, cp in enumerate(range(0x24F5, 0x24FF)):
        rows.append(([cp], str(1 + i)))
    rows.append(([0x24FF], "0"))
    # Enclosed Alphanumeric Supplement: squared, circled and negative forms
    # plus regional indicators, which are the emoji-letter alphabets.
    for cp in range(0x1F100, 0x1F150):
        r = nfkc_ascii(cp, alnum_only=False)
        if r is not None:
            rows.append(([cp], r))
    for i in range(26):
        letter = chr(ord("A") + i)
        rows.append(([0x1F130 + i], letter))
        rows.append(([0x1F150 + i], letter))
        rows.append(([0x1F170 + i], letter))
        rows.append(([0x1F1E6 + i], letter))
    # Emoji presentation sequences: longest match wins over the bare letter.
    for cp in (0x1F170, 0x1F171, 0x1F17E, 0x1F17F):
        rows.append(([cp, 0xFE0F], chr(ord("A") + cp - 0x1F170)))
    return sorted(rows)


CYRILLIC = {
    0x0410: "A", 0x0412: "B", 0x0421: "C", 0x0415: "E", 0x041D: "H",
    0x0406: "I", 0x0408: "J", 0x041A: "K", 0x041C: "M", 0x041E: "O",
    0x0420: "P", 0x0405: "S", 0x0422: "T", 0x0425: "X", 0x04AE: "Y",
    0x051A: "Q", 0x051C: "W", 0x04C0: "I",
    0x0430: "a", 0x0441: "c", 0x0435: "e", 0x0456: "i", 0x0458: "j",
    0x043E: "o", 0x0440: "p", 0x0455: "s", 0x0445: "x", 0x0443: "y",
    0x04BB: "h", 0x0501: "d", 0x051B: "q", 0x051D: "w", 0x04CF: "l",
    0x0451: "e", 0x0457: "i",
}

GREEK = {
    0x0391: "A", 0x0392: "B", 0x0395: "E", 0x0396: "Z", 0x0397: "H",
    0x0399: "I", 0x039A: "K", 0x039C: "M", 0x039D: "N", 0x039F: "O",
    0x03A1: "P", 0x03A4: "T", 0x03A5: "Y", 0x03A7: "X", 0x03F9: "C",
    0x03BF: "o", 0x03BD: "v", 0x03B9: "i", 0x03B1: "a", 0x03BA: "k",
    0x03C1: "p", 0x03C5: "u", 0x03F2: "c", 0x03F3: "j",
}

LATIN_EXTRA = {
    0x0131: "i", 0x0237: "j", 0x0142: "l", 0x0141: "L", 0x00F8: "o",
    0x00D8: "O", 0x0111: "d", 0x0110: "D", 0x0127: "h", 0x0126: "H",
    0x0167: "t", 0x0166: "T", 0x0180: "b", 0x0251: "a", 0x0261: "g",
    0x0269: "i", 0x00E6: "ae", 0x00C6: "AE", 0x0153: "oe", 0x0152: "OE",
}

SMALL_CAPITALS = {
    0x1D00: "a", 0x0299: "b", 0x1D04: "c", 0x1D05: "d", 0x1D07: "e",
    0xA730: "f", 0x0262: "g", 0x029C: "h", 0x026A: "i", 0x1D0A: "j",
    0x1D0B: "k", 0x029F: "l", 0x1D0D: "m", 0x0274: "n", 0x1D0F: "o",
    0x1D18: "p", 0x0280: "r", 0xA731: "s", 0x1D1B: "t", 0x1D1C: "u",
    0x1D20: "v", 0x1D21: "w", 0x028F: "y", 0x1D22: "z",
}


def lookalikes():
    rows = []
    # Accented Latin letters whose canonical decomposition starts with an
    # ASCII letter.
    for cp in range(0x00C0, 0x0250):
        base = unicodedata.normalize("NFD", chr(cp))[0]
        if base != chr(cp) and base.isascii() and base.isalpha():
            rows.append(([cp], base))
    for table in (LATIN_EXTRA, CYRILLIC, GREEK, SMALL_CAPITALS):
        rows.extend(([cp], r) for cp, r in table.items())
    # Modifier (superscript/subscript) letters.
    for lo, hi in ((0x02B0, 0x0300), (0x1D2C, 0x1D6B), (0x2070, 0x20A0)):
        for cp in range(lo, hi):
            r = nfkc_ascii(cp)
            if r is not None and len(r) == 1 and r.isalpha():
                rows.append(([cp], r))
    # Latin ligatures.
    for cp in range(0xFB00, 0xFB07):
        rows.append(([cp], unicodedata.normalize("NFKC", chr(cp))))
    return sorted(rows)


ZERO_WIDTH = [
    (0x00AD, 0x00AD), (0x034F, 0x034F), (0x061C, 0x061C), (0x180E, 0x180E),
    (0x200B, 0x200F), (0x202A, 0x202E), (0x2060, 0x2064), (0x2066, 0x206F),
    (0xFEFF, 0xFEFF),
]

WHITESPACE = [
    (0x0009, 0x000D), (0x0020, 0x0020), (0x0085, 0x0085), (0x00A0, 0x00A0),
    (0x1680, 0x1680), (0x2000, 0x200A), (0x2028, 0x2029), (0x202F, 0x202F),
    (0x205F, 0x205F), (0x3000, 0x3000),
]


def in_ranges(cp, ranges):
    return any(lo <= cp <= hi for lo, hi in ranges)


def to_ranges(cps):
    out = []
    for cp in sorted(cps):
        if out and out[-1][1] + 1 == cp:
            out[-1][1] = cp
        else:
            out.append([cp, cp])
    return out


def punctuation():
    cps = set()
    for cp in range(0x21, 0x7F):
        if not chr(cp).isalnum():
            cps.add(cp)
    for cp in range(0x80, 0x30000):
        if unicodedata.category(chr(cp)).startswith("P"):
            cps.add(cp)
    return {cp for cp in cps
            if not in_ranges(cp, ZERO_WIDTH) and not in_ranges(cp, WHITESPACE)}


def write_charclass(path):
    with open(path, "w", encoding="utf-8") as f:
        f.write("# Character classes used by the normalizer passes.\n")
        f.write("# Generated by tools/gen_tables.py; edit the generator, not this file.\n")
        f.write("# <class>\\t<hex> or <class>\\t<hex>..<hex>\n")
        f.write(f"#@ version={VERSION}\n")
        for name, ranges in (("zero_width", ZERO_WIDTH),
                             ("whitespace", WHITESPACE),
                             ("punctuation", to_ranges(punctuation()))):
            for lo, hi in ranges:
                if lo == hi:
                    f.write(f"{name}\t{lo:04X}\n")
                else:
                    f.write(f"{name}\t{lo:04X}..{hi:04X}\n")


def main():
    conf = os.path.join(DATA, "confusables")
    os.makedirs(conf, exist_ok=True)
    write_charclass(os.path.join(DATA, "charclass.tsv"))
    write_table(os.path.join(conf, "math_alphanumeric.tsv"), "math_alphanumeric",
                "Mathematical Alphanumeric Symbols and Letterlike Symbols.",
                math_alphanumeric())
    write_table(os.path.join(conf, "fullwidth.tsv"), "fullwidth",
                "Fullwidth ASCII variants.", fullwidth())
    write_table(os.path.join(conf, "enclosed_alphanumerics.tsv"),
                "enclosed_alphanumerics",
                "Enclosed Alphanumerics, their supplement and regional indicators.",
                enclosed_alphanumerics())
    write_table(os.path.join(conf, "lookalikes.tsv"), "lookalikes",
                "Curated accented, Cyrillic, Greek and small-capital look-alikes.",
                lookalikes())


if __name__ == "__main__":
    main()
