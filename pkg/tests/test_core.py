"""Morpheme inventory, era profiles, and surface tables."""

import pytest

from hannum.core import (
    CHRONOLOGY,
    DAN,
    EARLY_ERAS,
    LIANG,
    LING,
    LING_ALT,
    OUTER_EXPONENTS,
    RANK_EXPONENTS,
    YOU,
    Era,
    EraProfile,
    LeadingOnePolicy,
    LingPolicy,
    Morpheme,
    MorphemeKind,
    NonGenerableMorpheme,
    OneBeforeInnerMultiplicand,
    RenderOptions,
    Script,
    TwoStyle,
    YouPolicy,
    digit,
    era_profile,
    pivot,
    surface,
    token_notation,
)


class TestMorphemes:
    def test_digit_factory_range(self):
        for v in range(1, 10):
            m = digit(v)
            assert m.kind is MorphemeKind.DIGIT
            assert m.value == v
        for bad in (0, 10, -1):
            with pytest.raises(ValueError):
                digit(bad)

    def test_pivot_factory_exponents(self):
        assert RANK_EXPONENTS == (1, 2, 3, 4, 8)
        for e in RANK_EXPONENTS:
            m = pivot(e)
            assert m.kind is MorphemeKind.PIVOT
            assert m.exponent == e
        for bad in (0, 5, 6, 7, 9):
            with pytest.raises(ValueError):
                pivot(bad)

    def test_outer_exponents(self):
        assert set(OUTER_EXPONENTS) == {4, 8}

    def test_factories_intern(self):
        assert digit(5) is digit(5)
        assert pivot(4) is pivot(4)

    def test_invalid_combinations_rejected(self):
        with pytest.raises(ValueError):
            Morpheme(MorphemeKind.DIGIT)  # digit needs a value
        with pytest.raises(ValueError):
            Morpheme(MorphemeKind.PIVOT, value=3)  # pivot needs an exponent
        with pytest.raises(ValueError):
            Morpheme(MorphemeKind.LING, value=1)

    def test_liang_is_a_two(self):
        assert LIANG.kind is MorphemeKind.LIANG
        assert LIANG.value == 2

    def test_notation(self):
        assert token_notation(digit(5)) == "[5]"
        assert token_notation(LIANG) == "[2v]"
        assert token_notation(pivot(1)) == "[10]"
        assert token_notation(pivot(2)) == "[10^2]"
        assert token_notation(pivot(8)) == "[10^8]"
        assert token_notation(LING) == "líng"
        assert token_notation(YOU) == "yòu"
        assert token_notation(DAN) == "dān"
        assert token_notation(LING_ALT) == "lìng"


class TestSurfaces:
    def test_traditional_and_simplified(self):
        assert surface(pivot(4), Script.TRADITIONAL) == "萬"
        assert surface(pivot(4), Script.SIMPLIFIED) == "万"
        assert surface(pivot(8), Script.TRADITIONAL) == "億"
        assert surface(pivot(8), Script.SIMPLIFIED) == "亿"
        assert surface(LIANG, Script.TRADITIONAL) == "兩"
        assert surface(LIANG, Script.SIMPLIFIED) == "两"
        assert surface(LING, Script.TRADITIONAL) == "零"
        assert surface(YOU, Script.TRADITIONAL) == "有"

    def test_pinyin_tone_marks(self):
        assert surface(digit(1), Script.PINYIN) == "yī"
        assert surface(digit(2), Script.PINYIN) == "èr"
        assert surface(LIANG, Script.PINYIN) == "liǎng"
        assert surface(pivot(8), Script.PINYIN) == "yì"
        assert surface(LING, Script.PINYIN) == "líng"
        assert surface(YOU, Script.PINYIN) == "yòu"

    def test_tokens_script_uses_notation(self):
        assert surface(digit(7), Script.TOKENS) == "[7]"
        assert surface(DAN, Script.TOKENS) == "dān"

    def test_parse_only_morphemes_have_no_han_surface(self):
        for m in (DAN, LING_ALT):
            for script in (Script.TRADITIONAL, Script.SIMPLIFIED, Script.PINYIN):
                with pytest.raises(NonGenerableMorpheme):
                    surface(m, script)


class TestEras:
    def test_chronology_order(self):
        assert CHRONOLOGY == (
            Era.SHANG_ORACLE,
            Era.ZHOU_BRONZE,
            Era.WARRING_STATES,
            Era.SUANSHUSHU,
            Era.DUNHUANG,
            Era.NINE_CHAPTERS,
            Era.SONG_QIN,
            Era.CONTEMPORARY,
        )

    def test_early_eras(self):
        assert EARLY_ERAS == {
            Era.SHANG_ORACLE,
            Era.ZHOU_BRONZE,
            Era.WARRING_STATES,
        }

    def test_from_string_aliases(self):
        assert Era.from_string("sss") is Era.SUANSHUSHU
        assert Era.from_string("Suan Shu Shu") is Era.SUANSHUSHU
        assert Era.from_string("song") is Era.SONG_QIN
        assert Era.from_string("qin") is Era.SONG_QIN
        assert Era.from_string("modern") is Era.CONTEMPORARY
        assert Era.from_string("NINE-CHAPTERS") is Era.NINE_CHAPTERS
        with pytest.raises(ValueError):
            Era.from_string("tang")

    def test_labels_and_periods_exist(self):
        for era in Era:
            assert era.label
            assert era.period


class TestProfiles:
    def test_every_era_has_a_profile(self):
        for era in Era:
            profile = era_profile(era)
            assert isinstance(profile, EraProfile)
            assert profile.era is era

    def test_you_policies(self):
        assert era_profile(Era.SHANG_ORACLE).you_policy is YouPolicy.OPTIONAL_DEFAULT_OFF
        assert era_profile(Era.ZHOU_BRONZE).you_policy is YouPolicy.OPTIONAL_DEFAULT_ON
        assert era_profile(Era.WARRING_STATES).you_policy is YouPolicy.OPTIONAL_DEFAULT_OFF
        for era in (
            Era.SUANSHUSHU,
            Era.DUNHUANG,
            Era.NINE_CHAPTERS,
            Era.SONG_QIN,
            Era.CONTEMPORARY,
        ):
            assert era_profile(era).you_policy is YouPolicy.FORBIDDEN

    def test_ling_policies(self):
        for era in (
            Era.SHANG_ORACLE,
            Era.ZHOU_BRONZE,
            Era.WARRING_STATES,
            Era.SUANSHUSHU,
            Era.DUNHUANG,
            Era.NINE_CHAPTERS,
        ):
            assert era_profile(era).ling_policy is LingPolicy.FORBIDDEN
        assert era_profile(Era.SONG_QIN).ling_policy is LingPolicy.REQUIRED
        assert era_profile(Era.CONTEMPORARY).ling_policy is LingPolicy.REQUIRED

    def test_leading_one_policies(self):
        omit = LeadingOnePolicy.OMIT_BEFORE_HIGHEST
        for era in (
            Era.SHANG_ORACLE,
            Era.ZHOU_BRONZE,
            Era.WARRING_STATES,
            Era.SUANSHUSHU,
        ):
            assert era_profile(era).leading_one_policy is omit
        assert (
            era_profile(Era.DUNHUANG).leading_one_policy
            is LeadingOnePolicy.REQUIRED_EXCEPT_LEADING_TEN
        )
        assert (
            era_profile(Era.NINE_CHAPTERS).leading_one_policy
            is LeadingOnePolicy.REQUIRED_ALL
        )
        assert (
            era_profile(Era.SONG_QIN).leading_one_policy
            is LeadingOnePolicy.REQUIRED_ALL
        )
        assert (
            era_profile(Era.CONTEMPORARY).leading_one_policy
            is LeadingOnePolicy.REQUIRED_EXCEPT_LEADING_TEN
        )

    def test_inner_multiplicand_policy(self):
        require = OneBeforeInnerMultiplicand.REQUIRE
        omit = OneBeforeInnerMultiplicand.OMIT
        assert era_profile(Era.DUNHUANG).inner_multiplicand_one is omit
        assert era_profile(Era.SUANSHUSHU).inner_multiplicand_one is omit
        assert era_profile(Era.NINE_CHAPTERS).inner_multiplicand_one is require
        assert era_profile(Era.SONG_QIN).inner_multiplicand_one is require
        assert era_profile(Era.CONTEMPORARY).inner_multiplicand_one is require

    def test_liang_elliptic_zero_only_contemporary(self):
        for era in Era:
            profile = era_profile(era)
            expected = era is Era.CONTEMPORARY
            assert profile.liang_allowed is expected
            assert profile.elliptic_allowed is expected
            assert profile.zero_expressible is expected

    def test_max_values(self):
        for era in (
            Era.SHANG_ORACLE,
            Era.ZHOU_BRONZE,
            Era.WARRING_STATES,
            Era.SUANSHUSHU,
            Era.DUNHUANG,
            Era.NINE_CHAPTERS,
        ):
            assert era_profile(era).max_value == 10**8 - 1
        assert era_profile(Era.SONG_QIN).max_value == 10**12 - 1
        assert era_profile(Era.CONTEMPORARY).max_value == 10**12 - 1

    def test_era_profile_accepts_strings(self):
        assert era_profile("sss") is era_profile(Era.SUANSHUSHU)


class TestRenderOptions:
    def test_defaults(self):
        opts = RenderOptions()
        assert opts.script is Script.TRADITIONAL
        assert opts.two_style is TwoStyle.ALWAYS_ER
        assert opts.use_you is None
        assert opts.elliptic is False
        assert opts.leading_ten_one is False
