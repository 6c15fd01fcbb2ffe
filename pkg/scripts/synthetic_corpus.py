#!/usr/bin/env python3
"""Build a synthetic corpus with known numeral-feature counts.

The corpus interleaves filler prose with planted numeral expressions whose
feature sets are disjoint by construction: junction-word numerals carry no
líng or liǎng, liǎng numerals carry no gaps, and so on. The accompanying
manifest records the planted tallies, so a scan of the corpus can be
checked for exact agreement.

Usage:
    python scripts/synthetic_corpus.py --out corpus.txt --manifest manifest.json
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hannum import (  # noqa: E402
    Era,
    RenderOptions,
    TwoStyle,
    render_elliptic,
    render_integer,
)

# Filler characters, none of which belong to the numeral inventory.
_FILLER = "山水風雲花鳥草木石門窗庭院詩書畫琴棋酒茶燈火夜晨霧雨雪"
_PUNCT = "。，、"

# Values whose Zhou renderings (junction word on) use yòu and nothing else.
# The junction appears after a tens or hundreds compound, so every value
# here keeps a non-initial tens compound or unit digit.
_YOU_VALUES = (15, 25, 150, 210, 350, 115)
# Values whose Contemporary renderings need líng and never the digit 2.
_LING_VALUES = (105, 1001, 1050, 10005, 30070, 900009)
# Gap-free values rendered with the liǎng style.
_LIANG_VALUES = (2222, 22000, 250, 2_000_000, 235, 20_000_000_000)
# Values with defined elliptic forms, avoiding gaps and the digit 2.
_ELLIPTIC_VALUES = (150, 1500, 15000, 3400, 56000, 780)
# Feature-free plain values.
_PLAIN_VALUES = (7, 64, 111, 999, 86400, 123456)


def _filler(rng: random.Random, lo: int = 4, hi: int = 12) -> str:
    body = "".join(
        rng.choice(_FILLER) for _ in range(rng.randint(lo, hi))
    )
    return body + rng.choice(_PUNCT)


def build_corpus(
    seed: int = 7, repeats: int = 4
) -> tuple[str, dict[str, object]]:
    """Return (corpus text, manifest) with exact planted tallies."""
    rng = random.Random(seed)
    liang_opts = RenderOptions(two_style=TwoStyle.PREFER_LIANG)
    you_opts = RenderOptions(use_you=True)

    planted: list[tuple[str, str]] = []  # (surface, feature tag)
    for _ in range(repeats):
        for v in _YOU_VALUES:
            planted.append(
                (render_integer(v, Era.ZHOU_BRONZE, you_opts).text(), "you")
            )
        for v in _LING_VALUES:
            planted.append((render_integer(v).text(), "ling"))
        for v in _LIANG_VALUES:
            planted.append(
                (render_integer(v, Era.CONTEMPORARY, liang_opts).text(),
                 "liang")
            )
        for v in _ELLIPTIC_VALUES:
            planted.append((render_elliptic(v).text(), "elliptic"))
        for v in _PLAIN_VALUES:
            planted.append((render_integer(v).text(), "plain"))
    rng.shuffle(planted)

    pieces = [_filler(rng)]
    for surface, _ in planted:
        pieces.append(surface)
        pieces.append(_filler(rng))
        if rng.random() < 0.3:
            pieces.append("\n")
    text = "".join(pieces) + "\n"

    tags = [tag for _, tag in planted]
    manifest: dict[str, object] = {
        "seed": seed,
        "repeats": repeats,
        "planted": {
            "expressions": len(planted),
            "with_you": tags.count("you"),
            "with_ling": tags.count("ling"),
            "with_liang": tags.count("liang"),
            "elliptic": tags.count("elliptic"),
            "plain": tags.count("plain"),
            "errors": 0,
        },
    }
    return text, manifest


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("corpus.txt"))
    ap.add_argument("--manifest", type=Path, default=Path("manifest.json"))
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeats", type=int, default=4)
    args = ap.parse_args(argv)

    text, manifest = build_corpus(seed=args.seed, repeats=args.repeats)
    args.out.write_text(text, encoding="utf-8")
    args.manifest.write_text(
        json.dumps(manifest, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {args.out} ({len(text)} chars) and {args.manifest}")
    planted = manifest["planted"]
    print(json.dumps(planted, ensure_ascii=False))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
