#!/usr/bin/env python3
"""Micro-benchmark for the render and parse hot paths.

Usage:
    python scripts/bench_roundtrip.py [--number 200000]

Prints per-operation timings and a projection for the exhaustive
all-era round-trip sweep used by the test suite.
"""

from __future__ import annotations

import argparse
import sys
import time
import timeit
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hannum import Era, classify, era_profile, parse, render_integer  # noqa: E402


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--number", type=int, default=200_000)
    args = ap.parse_args(argv)
    n_iter = args.number

    cases = {
        "small (42)": 42,
        "mid (987,654)": 987_654,
        "large (1,305,000,080)": 1_305_000_080,
    }
    grand_us = 0.0
    for label, value in cases.items():
        expr = render_integer(value)
        t_render = timeit.timeit(
            lambda v=value: render_integer(v), number=n_iter
        )
        t_parse = timeit.timeit(
            lambda tk=expr.tokens: parse(tk, Era.CONTEMPORARY), number=n_iter
        )
        r_us = t_render / n_iter * 1e6
        p_us = t_parse / n_iter * 1e6
        grand_us += r_us + p_us
        print(f"{label:<24} render {r_us:6.2f} us   parse {p_us:6.2f} us")

    t_classify = timeit.timeit(
        lambda: classify("一百零五"), number=max(n_iter // 20, 1)
    )
    print(
        f"{'classify (一百零五)':<24} "
        f"{t_classify / max(n_iter // 20, 1) * 1e6:6.2f} us"
    )

    pair_us = grand_us / (2 * len(cases))
    total_pairs = sum(
        min(10**6, era_profile(era).max_value) + 10**5 for era in Era
    )
    print(
        f"\nexhaustive sweep projection: {total_pairs:,} pairs "
        f"at ~{pair_us:.1f} us/pair (render+parse) "
        f"~= {total_pairs * pair_us / 1e6:.0f} s"
    )

    start = time.perf_counter()
    bad = 0
    for n in range(0, 50_000):
        if parse(render_integer(n).tokens, Era.CONTEMPORARY).value != n:
            bad += 1
    elapsed = time.perf_counter() - start
    print(
        f"measured: 50,000 contemporary round-trips in {elapsed:.2f}s "
        f"({bad} failures)"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
