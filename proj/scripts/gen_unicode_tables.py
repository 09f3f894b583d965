#!/usr/bin/env python3
"""Regenerates include/wikinames/unicode/ucd_tables.inc and the frozen
normalization test vectors under tests/data/.

Script property ranges come from the `regex` module's bundled Unicode
database; combining classes, canonical decompositions, and composition
pairs come from Python's `unicodedata`. The output is committed so that
building the project does not require Python.

Usage: python3 scripts/gen_unicode_tables.py
"""

import random
import sys
import unicodedata
from pathlib import Path

try:
    import regex
except ImportError:
    sys.exit("the 'regex' package is required: pip install regex")

REPO = Path(__file__).resolve().parent.parent
OUT_INC = REPO / "include" / "wikinames" / "unicode" / "ucd_tables.inc"
OUT_NFC = REPO / "tests" / "data" / "nfc_cases.tsv"

MAX_CP = 0x110000
SURROGATES = range(0xD800, 0xE000)
HANGUL_SYLLABLES = range(0xAC00, 0xD7A4)

# The first five ids are fixed; code refers to them by constant.
PINNED_SCRIPTS = ["Unknown", "Common", "Inherited", "Latin", "Ethiopic"]

# Long script property values through Unicode 16. Names the regex module
# does not know are skipped with a warning.
OTHER_SCRIPTS = """
Adlam Ahom Anatolian_Hieroglyphs Arabic Armenian Avestan Balinese Bamum
Bassa_Vah Batak Bengali Bhaiksuki Bopomofo Brahmi Braille Buginese Buhid
Canadian_Aboriginal Carian Caucasian_Albanian Chakma Cham Cherokee Chorasmian
Coptic Cuneiform Cypriot Cypro_Minoan Cyrillic Deseret Devanagari Dives_Akuru
Dogra Duployan Egyptian_Hieroglyphs Elbasan Elymaic Garay Georgian Glagolitic
Gothic Grantha Greek Gujarati Gunjala_Gondi Gurmukhi Gurung_Khema Han Hangul
Hanifi_Rohingya Hanunoo Hatran Hebrew Hiragana Imperial_Aramaic
Inscriptional_Pahlavi Inscriptional_Parthian Javanese Kaithi Kannada Katakana
Kawi Kayah_Li Kharoshthi Khitan_Small_Script Khmer Khojki Khudawadi Kirat_Rai
Lao Lepcha Limbu Linear_A Linear_B Lisu Lycian Lydian Mahajani Makasar
Malayalam Mandaic Manichaean Marchen Masaram_Gondi Medefaidrin Meetei_Mayek
Mende_Kikakui Meroitic_Cursive Meroitic_Hieroglyphs Miao Modi Mongolian Mro
Multani Myanmar Nabataean Nag_Mundari Nandinagari New_Tai_Lue Newa Nko Nushu
Nyiakeng_Puachue_Hmong Ogham Ol_Chiki Ol_Onal Old_Hungarian Old_Italic
Old_North_Arabian Old_Permic Old_Persian Old_Sogdian Old_South_Arabian
Old_Turkic Old_Uyghur Oriya Osage Osmanya Pahawh_Hmong Palmyrene Pau_Cin_Hau
Phags_Pa Phoenician Psalter_Pahlavi Rejang Runic Samaritan Saurashtra Sharada
Shavian Siddham SignWriting Sinhala Sogdian Sora_Sompeng Soyombo Sundanese
Sunuwar Syloti_Nagri Syriac Tagalog Tagbanwa Tai_Le Tai_Tham Tai_Viet Takri
Tamil Tangsa Tangut Telugu Thaana Thai Tibetan Tifinagh Tirhuta Todhri Toto
Tulu_Tigalari Ugaritic Vai Vithkuqi Wancho Warang_Citi Yezidi Yi
Zanabazar_Square
""".split()


def all_code_points_string():
    chunks = []
    for cp in range(MAX_CP):
        if cp in SURROGATES:
            continue
        chunks.append(chr(cp))
    return "".join(chunks)


def script_ranges():
    """Returns (names, ranges) where ranges is a sorted list of
    (first, last, script_id)."""
    haystack = all_code_points_string()
    names = list(PINNED_SCRIPTS)
    ranges = []
    for name in PINNED_SCRIPTS[1:] + OTHER_SCRIPTS:
        try:
            pat = regex.compile(r"[\p{Script=%s}]+" % name, regex.V1)
        except regex.error:
            print(f"warning: script {name} unknown to regex, skipped",
                  file=sys.stderr)
            continue
        if name in names:
            sid = names.index(name)
        else:
            names.append(name)
            sid = len(names) - 1
        for m in pat.finditer(haystack):
            first = ord(haystack[m.start()])
            last = ord(haystack[m.end() - 1])
            # The haystack skips surrogates, so a run crossing U+D7FF..U+E000
            # needs splitting back into real ranges.
            if first < SURROGATES.start and last >= SURROGATES.stop:
                ranges.append((first, SURROGATES.start - 1, sid))
                ranges.append((SURROGATES.stop, last, sid))
            else:
                ranges.append((first, last, sid))
    ranges.sort()
    # Merge adjacent same-script ranges.
    merged = []
    for r in ranges:
        if merged and merged[-1][2] == r[2] and merged[-1][1] + 1 == r[0]:
            merged[-1] = (merged[-1][0], r[1], r[2])
        else:
            merged.append(list(r))
            merged[-1] = tuple(merged[-1])
    return names, merged


def combining_classes():
    out = []
    for cp in range(MAX_CP):
        if cp in SURROGATES:
            continue
        ccc = unicodedata.combining(chr(cp))
        if ccc:
            out.append((cp, ccc))
    return out


def full_decompositions():
    """cp -> full canonical decomposition (NFD), excluding Hangul syllables
    (handled algorithmically) and identity mappings."""
    out = []
    for cp in range(MAX_CP):
        if cp in SURROGATES or cp in HANGUL_SYLLABLES:
            continue
        c = chr(cp)
        d = unicodedata.normalize("NFD", c)
        if d != c:
            out.append((cp, [ord(x) for x in d]))
    return out


def composition_pairs():
    """(starter, combining) -> composed, for canonical pairs that are not
    composition-excluded. Hangul is algorithmic and omitted."""
    out = []
    for cp in range(MAX_CP):
        if cp in SURROGATES or cp in HANGUL_SYLLABLES:
            continue
        c = chr(cp)
        raw = unicodedata.decomposition(c)
        if not raw or raw.startswith("<"):
            continue
        parts = [int(p, 16) for p in raw.split()]
        if len(parts) != 2:
            continue
        # Composition-excluded characters do not recompose under NFC.
        if unicodedata.normalize("NFC", unicodedata.normalize("NFD", c)) != c:
            continue
        out.append((parts[0], parts[1], cp))
    out.sort()
    return out


def write_tables():
    names, ranges = script_ranges()
    cccs = combining_classes()
    decomps = full_decompositions()
    comps = composition_pairs()

    decomp_data = []
    decomp_index = []
    for cp, seq in decomps:
        decomp_index.append((cp, len(decomp_data), len(seq)))
        decomp_data.extend(seq)

    lines = []
    lines.append("// Generated by scripts/gen_unicode_tables.py; do not edit.")
    lines.append(f"// Script data: regex {regex.__version__}; "
                 f"normalization data: UCD {unicodedata.unidata_version}.")
    lines.append("")
    lines.append("inline constexpr const char* kScriptNames[] = {")
    for i in range(0, len(names), 6):
        lines.append("    " + " ".join(f'"{n}",' for n in names[i:i + 6]))
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr CodePointRange kScriptRanges[] = {")
    for first, last, sid in ranges:
        lines.append(f"    {{0x{first:X}, 0x{last:X}, {sid}}},")
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr CombiningClassEntry kCombiningClasses[] = {")
    for cp, ccc in cccs:
        lines.append(f"    {{0x{cp:X}, {ccc}}},")
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr DecompositionEntry kDecompositions[] = {")
    for cp, off, ln in decomp_index:
        lines.append(f"    {{0x{cp:X}, {off}, {ln}}},")
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr char32_t kDecompositionData[] = {")
    for i in range(0, len(decomp_data), 8):
        lines.append("    " + " ".join(f"0x{v:X}," for v in decomp_data[i:i + 8]))
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr CompositionEntry kCompositions[] = {")
    for a, b, composed in comps:
        key = (a << 21) | b
        lines.append(f"    {{0x{key:X}, 0x{composed:X}}},")
    lines.append("};")
    lines.append("")

    OUT_INC.parent.mkdir(parents=True, exist_ok=True)
    OUT_INC.write_text("\n".join(lines), encoding="utf-8")
    print(f"wrote {OUT_INC}: {len(ranges)} script ranges, {len(cccs)} ccc "
          f"entries, {len(decomp_index)} decompositions, {len(comps)} "
          f"composition pairs")


HAND_CASES = [
    "Ame\u0301lie",          # compose acute onto e
    "Am\u00e9lie",           # already NFC
    "\u212b",                # angstrom sign, singleton to A-ring
    "q\u0307\u0323",         # reorder ccc 230 after ccc 220
    "s\u0323\u0307",         # compose through reordering
    "e\u0304\u0301",         # macron composes, acute blocked
    "\u1100\u1161\u11a8",    # Hangul LVT
    "\u1100\u1161",          # Hangul LV
    "\uac00\u11a8",          # LV syllable + trailing jamo
    "\u0958",                # composition exclusion (stays decomposed)
    "\u0915\u093c",          # the same pair, presented decomposed
    "\u1e0b\u0323",          # d-dot-above + dot-below
    "\u0644\u0627",          # Arabic lam+alef (no canonical composition)
    "\u1218\u1295\u1308\u1235",  # Ethiopic, no combining behavior
    "Addis Ababa",
    "\u00c5ngstr\u00f6m",
    "",                      # empty string
    "\u0301",                # lone combining mark
    "a\u0300\u0316\u0301",   # mixed ccc ordering around a base
]


def write_nfc_cases():
    rng = random.Random(20260825)
    pool = (
        [chr(c) for c in range(0x61, 0x7b)]
        + [chr(c) for c in range(0x300, 0x315)]
        + ["\u0323", "\u0304", "\u0316", "\u05b7", "\u3099"]
        + [chr(c) for c in range(0x1100, 0x1108)]
        + [chr(c) for c in range(0x1161, 0x1169)]
        + [chr(c) for c in range(0x11a8, 0x11b0)]
        + [chr(c) for c in range(0x1200, 0x1210)]
        + ["\u00e9", "\u212b", "\u0415", "\u0301", "\u1e0b", "\uac00"]
    )
    cases = list(HAND_CASES)
    for _ in range(220):
        n = rng.randint(1, 12)
        cases.append("".join(rng.choice(pool) for _ in range(n)))

    OUT_NFC.parent.mkdir(parents=True, exist_ok=True)
    with OUT_NFC.open("w", encoding="utf-8") as f:
        f.write("# input<TAB>nfc, code points escaped as \\uXXXX / \\UXXXXXXXX\n")
        for s in cases:
            f.write(escape(s) + "\t" + escape(unicodedata.normalize("NFC", s))
                    + "\n")
    print(f"wrote {OUT_NFC}: {len(cases)} cases")


def escape(s):
    out = []
    for ch in s:
        cp = ord(ch)
        if 0x20 <= cp < 0x7f and ch not in "\\\t":
            out.append(ch)
        elif cp <= 0xFFFF:
            out.append(f"\\u{cp:04x}")
        else:
            out.append(f"\\U{cp:08x}")
    return "".join(out)


if __name__ == "__main__":
    write_tables()
    write_nfc_cases()
