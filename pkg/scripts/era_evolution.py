#!/usr/bin/env python3
"""Show how the same integers are named at each historical stage.

Usage:
    python scripts/era_evolution.py [N ...]

With no arguments a default set of instructive values is used. For each
value the script prints one row per era grammar: surface form, token
notation, and the era's acceptance verdicts for the other grammars'
renderings are left to the classifier demo at the end.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hannum import (  # noqa: E402
    CHRONOLOGY,
    Era,
    RenderOptions,
    TwoStyle,
    classify,
    era_profile,
    render_elliptic,
    render_integer,
    token_notation,
)

DEFAULT_VALUES = (15, 105, 150, 1089, 2222, 11520, 1_305_000_080)


def show_value(n: int) -> None:
    print(f"\n=== {n:,} ===")
    for era in CHRONOLOGY:
        profile = era_profile(era)
        if n > profile.max_value or (n == 0 and not profile.zero_expressible):
            print(f"  {era.value:<15} (out of range for this era)")
            continue
        expr = render_integer(n, era)
        notation = " ".join(token_notation(t) for t in expr.tokens)
        print(f"  {era.value:<15} {expr.text():<16} {notation}")
    if n <= era_profile(Era.CONTEMPORARY).max_value:
        liang = render_integer(
            n, Era.CONTEMPORARY, RenderOptions(two_style=TwoStyle.PREFER_LIANG)
        )
        if liang.text() != render_integer(n).text():
            print(f"  {'+ liang style':<15} {liang.text()}")
        try:
            ell = render_elliptic(n)
        except Exception:
            pass
        else:
            print(f"  {'+ elliptic':<15} {ell.text()}")


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("values", nargs="*", type=int, default=None)
    args = ap.parse_args(argv)
    values = args.values or list(DEFAULT_VALUES)

    for n in values:
        show_value(n)

    print("\n=== era-consistency demo ===")
    for text in ("十有五", "百五", "一百五", "一百零五", "兩千五百"):
        report = classify(text)
        names = ", ".join(e.value for e in report.consistent) or "(none)"
        print(f"  {text:<8} consistent with: {names}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
