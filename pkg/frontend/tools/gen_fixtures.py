"""Regenerate the formatter parity fixtures and the casefold table.

Run from the repository root after changing gateway/render.py:

    python3 frontend/tools/gen_fixtures.py

Writes tests/fixtures/render_fixtures.json (expected CLI output for a set
of listing/info states, produced by the canonical Python renderer) and
src/casefold_data.ts (every BMP code point whose Unicode case folding
differs from itself, so the TypeScript sort key matches str.casefold).
"""

import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

from usb2usb.gateway.render import info_line, listing_lines  # noqa: E402

FRONTEND = ROOT / "frontend"


def entry(name, size, is_dir=False):
    return {"name": name, "path": "/" + name, "size_bytes": size,
            "is_dir": is_dir, "mtime": None}


LISTING_CASES = {
    "empty": [],
    "basic": [
        entry("zeta.bin", 1234),
        entry("Alpha.txt", 1),
        entry("music", 0, is_dir=True),
        entry("Docs", 0, is_dir=True),
    ],
    "case_and_width": [
        entry("b.bin", 0),
        entry("A.BIN", 9_999_999_999),
        entry("a.bin", 10_000_000_000),   # 11 digits: field must widen
        entry("B.bin", 7),
    ],
    "unicode_folding": [
        entry("straße.txt", 10),
        entry("STRASSE.txt", 20),
        entry("İstanbul.doc", 30),
        entry("istanbul.doc", 40),
        entry("文件.dat", 50),
        entry("ſoft.txt", 60),
        entry("café", 0, is_dir=True),
        entry("CAFE", 0, is_dir=True),
    ],
    "spaces_and_marks": [
        entry("Budget Report.txt", 600),
        entry("budget~1.txt", 5),
        entry("#notes#", 0, is_dir=True),
        entry("_draft_", 42),
    ],
}

INFO_CASES = {
    "fat16": {"label": "ALPHA", "variant": "FAT16",
              "total_bytes": 16630272, "free_bytes": 16628224},
    "fat32_default_label": {"label": "NO NAME", "variant": "FAT32",
                            "total_bytes": 66059264, "free_bytes": 0},
}


def main():
    fixtures = {
        "listings": {
            name: {"entries": entries, "lines": listing_lines(entries)}
            for name, entries in LISTING_CASES.items()
        },
        "infos": {
            name: {"volume": volume, "line": info_line(volume)}
            for name, volume in INFO_CASES.items()
        },
    }
    out = FRONTEND / "tests" / "fixtures" / "render_fixtures.json"
    out.write_text(json.dumps(fixtures, ensure_ascii=False, indent=2) + "\n",
                   encoding="utf-8")

    folds = {}
    for cp in range(0x10000):
        ch = chr(cp)
        folded = ch.casefold()
        if folded != ch:
            folds[cp] = folded
    lines = [
        "// Generated by tools/gen_fixtures.py; do not edit by hand.",
        "// Maps each BMP code point to its Unicode case folding when the",
        "// folding differs from the character itself.",
        "export const FOLDS: ReadonlyMap<number, string> = new Map([",
    ]
    for cp, folded in folds.items():
        lines.append(f"  [{cp}, {json.dumps(folded, ensure_ascii=True)}],")
    lines.append("]);")
    (FRONTEND / "src" / "casefold_data.ts").write_text(
        "\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out.relative_to(ROOT)} ({len(fixtures['listings'])} listings, "
          f"{len(fixtures['infos'])} infos) and casefold_data.ts "
          f"({len(folds)} folds)")


if __name__ == "__main__":
    main()
