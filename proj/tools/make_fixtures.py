#!/usr/bin/env python3
"""Regenerates the bundled b-file fixtures.

Writes one b-file per sequence under data/fixtures/ and the embedded copy
src/fixtures_data.inc. Run from the repository root after editing FIXTURES.
"""

import pathlib

# (a_number, offset, terms)
FIXTURES = [
    ("A051003", 1, [
        666, 1666, 2666, 3666, 4666, 5666, 6660, 6661, 6662, 6663, 6664,
        6665, 6666, 6667,
    ]),
    ("A033865", 0, [
        0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 11, 33, 44, 55, 66, 77, 88, 99,
        121, 22, 33, 22, 55, 66, 77,
    ]),
    ("A006960", 1, [
        196, 887, 1675, 7436, 13783, 52514, 94039, 187088, 1067869,
        10755470, 18211171,
    ]),
    ("A131744", 1, [
        1, 9, 9, 5, 5, 9, 9, 5, 5, 9, 1, 3, 13, 17, 1, 3, 13, 17, 9, 5, 5,
        9, 9, 5, 5, 9, 1, 3, 13, 17,
    ]),
    ("A003001", 1, [
        10, 25, 39, 77, 679, 6788, 68889, 2677889, 26888999, 3778888999,
        277777788888899,
    ]),
    ("A135385", 1, [
        0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 2592,
        24547284284866560000000000,
    ]),
    ("A135473", 3, [
        1, 3, 8, 21, 54, 138, 355, 924, 2432, 6461, 17301, 46657, 126656,
        345972, 950611,
    ]),
    ("A090822", 1, [
        1, 1, 2, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1, 1, 2, 2, 2, 3, 2, 1, 1, 2,
        1, 1, 2, 2, 2, 3, 1, 1, 2, 1, 1,
    ]),
    ("A094004", 1, [
        1, 4, 5, 8, 9, 14, 15, 66, 68, 70, 123, 124, 125, 132, 133, 134,
        135, 136, 138, 139, 140, 142, 143, 144, 145, 146, 147, 148, 149,
        150,
    ]),
    ("A134204", 0, [
        2, 3, 5, 7, 13, 17, 19, 23, 41, 31, 29, 37, 11, 67, 59, 61, 83, 53,
        73, 79, 101, 109, 89, 233,
    ]),
    ("A133242", 1, [
        12, 201, 379, 474, 588, 868, 932, 1604, 1942, 2006, 3084, 4800,
        7800,
    ]),
    ("A057641", 1, [
        0, 0, 1, 0, 4, 0, 7, 2, 7, 5, 13, 0, 17, 9, 12, 8, 23, 5, 27, 8,
        21, 20, 34, 1, 33, 25,
    ]),
]


def bfile_text(offset, terms):
    return "".join(f"{offset + i} {t}\n" for i, t in enumerate(terms))


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    fixture_dir = root / "data" / "fixtures"
    fixture_dir.mkdir(parents=True, exist_ok=True)

    inc_lines = [
        "// Generated by tools/make_fixtures.py; do not edit by hand.",
        "// Each entry is the byte-exact content of the matching file under",
        "// data/fixtures/.",
        "",
    ]
    for a_number, offset, terms in FIXTURES:
        text = bfile_text(offset, terms)
        (fixture_dir / f"b{a_number[1:]}.txt").write_text(text)
        inc_lines.append(f'{{"{a_number}", R"({text})"}},')
    (root / "src" / "fixtures_data.inc").write_text("\n".join(inc_lines) + "\n")


if __name__ == "__main__":
    main()
