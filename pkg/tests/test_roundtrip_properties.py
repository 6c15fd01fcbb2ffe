"""Property-based invariants for the render/parse pair."""

import pytest
from hypothesis import given, settings, strategies as st

from hannum import (
    EllipsisUnavailable,
    Era,
    MorphemeKind,
    RenderOptions,
    Script,
    TwoStyle,
    classify,
    era_profile,
    parse,
    parse_text,
    render_integer,
)


def lower_bound(era: Era) -> int:
    return 0 if era_profile(era).zero_expressible else 1


def values_for(era: Era):
    return st.integers(min_value=lower_bound(era), max_value=era_profile(era).max_value)


eras = st.sampled_from(list(Era))


def independent_gap_count(n: int) -> int:
    """Count rank gaps straight off the decimal string.

    Within a 4-digit myriad group, a gap separates consecutive nonzero
    digits whose ranks are not adjacent. Across groups, the outer rank word
    itself fills its slot, so a following group opens a gap only when its
    leading thousands digit is zero or when a whole group was skipped.
    This is deliberately not the renderer's algorithm.
    """
    s = str(n)
    s = "0" * ((-len(s)) % 4) + s
    groups = [s[i:i + 4] for i in range(0, len(s), 4)]
    count = 0
    seen_nonempty = False
    skipped_empty = False
    for g in groups:
        ranks = [3 - i for i, ch in enumerate(g) if ch != "0"]
        if not ranks:
            skipped_empty = skipped_empty or seen_nonempty
            continue
        if seen_nonempty and (skipped_empty or ranks[0] < 3):
            count += 1
        skipped_empty = False
        count += sum(1 for a, b in zip(ranks, ranks[1:]) if a - b > 1)
        seen_nonempty = True
    return count


class TestRoundTrip:
    @given(era=eras, data=st.data())
    @settings(max_examples=400, deadline=None)
    def test_render_parse_identity(self, era, data):
        n = data.draw(values_for(era), label="n")
        rendered = render_integer(n, era)
        assert parse(rendered.tokens, era).value == n

    @given(era=eras, data=st.data())
    @settings(max_examples=200, deadline=None)
    def test_lenient_parse_also_recovers(self, era, data):
        # A trailing bare digit from a ling-free era is ambiguous without
        # the era, so the lenient reader may pick the elliptic reading; it
        # must then say so. Unflagged inputs must recover exactly.
        n = data.draw(values_for(era), label="n")
        rendered = render_integer(n, era)
        outcome = parse(rendered.tokens, None)
        if any("elliptic" in d for d in outcome.diagnostics):
            assert parse(rendered.tokens, era).value == n
        else:
            assert outcome.value == n

    @given(era=eras, data=st.data())
    @settings(max_examples=200, deadline=None)
    def test_determinism(self, era, data):
        n = data.draw(values_for(era), label="n")
        assert render_integer(n, era).tokens == render_integer(n, era).tokens

    @given(n=st.integers(min_value=0, max_value=10**12 - 1),
           script=st.sampled_from([Script.TRADITIONAL, Script.SIMPLIFIED,
                                   Script.PINYIN]))
    @settings(max_examples=300, deadline=None)
    def test_surface_round_trip(self, n, script):
        text = render_integer(n).text(script)
        assert parse_text(text, "contemporary").value == n

    @given(era=eras, data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_you_round_trip_where_optional(self, era, data):
        profile = era_profile(era)
        if profile.you_policy.name == "FORBIDDEN":
            return
        n = data.draw(values_for(era), label="n")
        for flag in (True, False):
            rendered = render_integer(n, era, RenderOptions(use_you=flag))
            assert parse(rendered.tokens, era).value == n


class TestStyleProperties:
    @given(n=st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=300, deadline=None)
    def test_er_and_liang_agree_on_value(self, n):
        plain = render_integer(n)
        styled = render_integer(
            n, Era.CONTEMPORARY, RenderOptions(two_style=TwoStyle.PREFER_LIANG)
        )
        assert parse(styled.tokens, Era.CONTEMPORARY).value == plain.value == n

    @given(n=st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=300, deadline=None)
    def test_liang_placement_constraints(self, n):
        styled = render_integer(
            n, Era.CONTEMPORARY, RenderOptions(two_style=TwoStyle.PREFER_LIANG)
        )
        toks = styled.tokens
        for i, t in enumerate(toks):
            if t.kind is not MorphemeKind.LIANG:
                continue
            assert i + 1 < len(toks), "liang never sits in a final unit slot"
            nxt = toks[i + 1]
            assert nxt.kind is MorphemeKind.PIVOT
            assert nxt.exponent >= 2

    @given(n=st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=300, deadline=None)
    def test_elliptic_is_full_minus_final_pivot(self, n):
        try:
            short = render_integer(
                n, Era.CONTEMPORARY, RenderOptions(elliptic=True)
            )
        except EllipsisUnavailable:
            return
        full = render_integer(n)
        assert short.tokens == full.tokens[:-1]
        assert short.elliptic and not short.incorporable
        assert parse(short.tokens, Era.CONTEMPORARY).value == n

    @given(data=st.data())
    @settings(max_examples=200, deadline=None)
    def test_leading_ten_one_round_trip(self, data):
        n = data.draw(st.integers(min_value=10, max_value=10**6), label="n")
        rendered = render_integer(
            n, Era.CONTEMPORARY, RenderOptions(leading_ten_one=True)
        )
        assert parse(rendered.tokens, Era.CONTEMPORARY).value == n


class TestLingProperties:
    @given(n=st.integers(min_value=0, max_value=10**12 - 1))
    @settings(max_examples=500, deadline=None)
    def test_ling_count_equals_gap_count(self, n):
        rendered = render_integer(n)
        lings = sum(1 for t in rendered.tokens if t.kind is MorphemeKind.LING)
        if n == 0:
            assert lings == 1  # the standalone zero word itself
        else:
            assert lings == independent_gap_count(n)

    @given(era=eras, data=st.data())
    @settings(max_examples=200, deadline=None)
    def test_ling_free_eras_never_emit_ling(self, era, data):
        if era_profile(era).ling_policy.name == "REQUIRED":
            return
        n = data.draw(values_for(era), label="n")
        rendered = render_integer(n, era)
        assert all(t.kind is not MorphemeKind.LING for t in rendered.tokens)


class TestChronolectProperties:
    @given(era=eras, data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_classifier_accepts_own_render(self, era, data):
        n = data.draw(values_for(era), label="n")
        rendered = render_integer(n, era)
        report = classify(rendered.tokens)
        assert era in report.consistent
        assert report.verdict_for(era).value == n

    @given(n=st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=150, deadline=None)
    def test_expression_value_property(self, n):
        rendered = render_integer(n)
        assert rendered.value == n
