"""Shared inventory for Han numeral transduction.

Defines the closed morpheme set (digits, the liang variant of 2, five
multiplicative pivots, the gap word ling, the conjunction you, and two
parse-only gap words), the rank scale, the per-script surface tables, and the
eight era profiles that parameterize both generation and parsing.

The rank scale is 10, 10^2, 10^3 (inner pivots) and 10^4, 10^8 (outer
pivots). Numbers are named by myriads: each outer pivot takes a coefficient
of 1..9999 built from the inner pivots, so no further rank is ever needed
below 10^12, and none can be registered.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

__all__ = [
    "CHRONOLOGY",
    "EARLY_ERAS",
    "Era",
    "EraProfile",
    "LeadingOnePolicy",
    "LingPolicy",
    "Morpheme",
    "MorphemeKind",
    "NonGenerableMorpheme",
    "OUTER_EXPONENTS",
    "OneBeforeInnerMultiplicand",
    "PivotClass",
    "RANKS",
    "RANK_EXPONENTS",
    "Rank",
    "RenderOptions",
    "Script",
    "SurfaceForm",
    "TwoStyle",
    "YouPolicy",
    "DAN",
    "LIANG",
    "LING",
    "LING_ALT",
    "YOU",
    "digit",
    "era_profile",
    "pivot",
    "surface",
    "token_notation",
]


class NonGenerableMorpheme(ValueError):
    """A parse-only morpheme was asked for in a Han or pinyin script."""


# ---------------------------------------------------------------------------
# Ranks
# ---------------------------------------------------------------------------

RANK_EXPONENTS: tuple[int, ...] = (1, 2, 3, 4, 8)
OUTER_EXPONENTS: frozenset[int] = frozenset({4, 8})


@unique
class PivotClass(Enum):
    INNER = "inner"
    OUTER = "outer"


@dataclass(frozen=True, slots=True)
class Rank:
    """One registrable multiplicative rank. Only five exist."""

    exponent: int

    def __post_init__(self) -> None:
        if self.exponent not in RANK_EXPONENTS:
            raise ValueError(
                f"no rank at 10^{self.exponent}: the scale is exactly "
                f"{{10^e for e in {RANK_EXPONENTS}}}"
            )

    @property
    def value(self) -> int:
        return 10**self.exponent

    @property
    def pivot_class(self) -> PivotClass:
        if self.exponent in OUTER_EXPONENTS:
            return PivotClass.OUTER
        return PivotClass.INNER


RANKS: tuple[Rank, ...] = tuple(Rank(e) for e in RANK_EXPONENTS)


# ---------------------------------------------------------------------------
# Morphemes
# ---------------------------------------------------------------------------


@unique
class MorphemeKind(Enum):
    DIGIT = "digit"
    LIANG = "liang"        # the variant surface form of 2
    PIVOT = "pivot"
    LING = "ling"          # rank-gap link; also the standalone zero word
    YOU = "you"            # additive conjunction of the early inscriptions
    DAN = "dan"            # historical gap link, parse-only
    LING_ALT = "ling-alt"  # the "another" graph used as a gap link, parse-only


@dataclass(frozen=True, slots=True)
class Morpheme:
    """One numeral morpheme. Digits carry value, pivots carry exponent."""

    kind: MorphemeKind
    value: int | None = None
    exponent: int | None = None

    def __post_init__(self) -> None:
        if self.kind is MorphemeKind.DIGIT:
            if self.value is None or not 1 <= self.value <= 9 or self.exponent is not None:
                raise ValueError("digit morphemes carry a value in 1..9 and no exponent")
        elif self.kind is MorphemeKind.LIANG:
            if self.value != 2 or self.exponent is not None:
                raise ValueError("the liang morpheme always has value 2")
        elif self.kind is MorphemeKind.PIVOT:
            if self.value is not None:
                raise ValueError("pivot morphemes carry no digit value")
            Rank(self.exponent if self.exponent is not None else -1)
        else:
            if self.value is not None or self.exponent is not None:
                raise ValueError(f"{self.kind.value} carries neither value nor exponent")

    def __repr__(self) -> str:
        return token_notation(self)


_DIGITS: dict[int, Morpheme] = {v: Morpheme(MorphemeKind.DIGIT, value=v) for v in range(1, 10)}
_PIVOTS: dict[int, Morpheme] = {e: Morpheme(MorphemeKind.PIVOT, exponent=e) for e in RANK_EXPONENTS}

LIANG = Morpheme(MorphemeKind.LIANG, value=2)
LING = Morpheme(MorphemeKind.LING)
YOU = Morpheme(MorphemeKind.YOU)
DAN = Morpheme(MorphemeKind.DAN)
LING_ALT = Morpheme(MorphemeKind.LING_ALT)


def digit(value: int) -> Morpheme:
    """The digit morpheme for value 1..9 (interned)."""
    try:
        return _DIGITS[value]
    except KeyError:
        raise ValueError(f"digit value out of range: {value!r}") from None


def pivot(exponent: int) -> Morpheme:
    """The pivot morpheme for 10^exponent (interned); rejects unknown ranks."""
    try:
        return _PIVOTS[exponent]
    except KeyError:
        Rank(exponent)  # raises with the registrable-rank message
        raise AssertionError("unreachable")


def token_notation(m: Morpheme) -> str:
    """Bracket notation used for token-level display: [5], [10^4], ling, you."""
    k = m.kind
    if k is MorphemeKind.DIGIT:
        return f"[{m.value}]"
    if k is MorphemeKind.LIANG:
        return "[2v]"
    if k is MorphemeKind.PIVOT:
        return "[10]" if m.exponent == 1 else f"[10^{m.exponent}]"
    return {
        MorphemeKind.LING: "líng",
        MorphemeKind.YOU: "yòu",
        MorphemeKind.DAN: "dān",
        MorphemeKind.LING_ALT: "lìng",
    }[k]


# ---------------------------------------------------------------------------
# Scripts and surface tables
# ---------------------------------------------------------------------------


@unique
class Script(Enum):
    TRADITIONAL = "traditional"
    SIMPLIFIED = "simplified"
    PINYIN = "pinyin"
    TOKENS = "tokens"


@dataclass(frozen=True, slots=True)
class SurfaceForm:
    """The written realizations of one generable morpheme."""

    morpheme: Morpheme
    traditional: str
    simplified: str
    pinyin: str  # citation tone; no sandhi is applied in any context


_SURFACE_ROWS: tuple[tuple[Morpheme, str, str, str], ...] = (
    (digit(1), "一", "一", "yī"),
    (digit(2), "二", "二", "èr"),
    (digit(3), "三", "三", "sān"),
    (digit(4), "四", "四", "sì"),
    (digit(5), "五", "五", "wǔ"),
    (digit(6), "六", "六", "liù"),
    (digit(7), "七", "七", "qī"),
    (digit(8), "八", "八", "bā"),
    (digit(9), "九", "九", "jiǔ"),
    (LIANG, "兩", "两", "liǎng"),
    (pivot(1), "十", "十", "shí"),
    (pivot(2), "百", "百", "bǎi"),
    (pivot(3), "千", "千", "qiān"),
    (pivot(4), "萬", "万", "wàn"),
    (pivot(8), "億", "亿", "yì"),
    (LING, "零", "零", "líng"),
    (YOU, "有", "有", "yòu"),
)

SURFACE_FORMS: dict[Morpheme, SurfaceForm] = {
    row[0]: SurfaceForm(*row) for row in _SURFACE_ROWS
}


def surface(morpheme: Morpheme, script: Script) -> str:
    """Written form of one morpheme in one script.

    Token notation is defined for every morpheme; the Han and pinyin scripts
    cover only generable morphemes and raise NonGenerableMorpheme for the
    parse-only gap words.
    """
    if script is Script.TOKENS:
        return token_notation(morpheme)
    form = SURFACE_FORMS.get(morpheme)
    if form is None:
        raise NonGenerableMorpheme(
            f"{token_notation(morpheme)} is recognized on input only and has no "
            f"generation surface"
        )
    if script is Script.TRADITIONAL:
        return form.traditional
    if script is Script.SIMPLIFIED:
        return form.simplified
    return form.pinyin


# ---------------------------------------------------------------------------
# Era profiles
# ---------------------------------------------------------------------------


@unique
class Era(Enum):
    """The eight profiled stages, in chronological order."""

    SHANG_ORACLE = "shang-oracle"
    ZHOU_BRONZE = "zhou-bronze"
    WARRING_STATES = "warring-states"
    SUANSHUSHU = "suanshushu"
    DUNHUANG = "dunhuang"
    NINE_CHAPTERS = "nine-chapters"
    SONG_QIN = "song-qin"
    CONTEMPORARY = "contemporary"

    @property
    def label(self) -> str:
        return _ERA_LABELS[self]

    @property
    def period(self) -> str:
        return _ERA_PERIODS[self]

    @classmethod
    def from_string(cls, name: str) -> "Era":
        """Resolve a user-supplied era name, tolerating case and separators."""
        key = name.strip().lower().replace("-", "").replace("_", "").replace(" ", "")
        try:
            return _ERA_ALIASES[key]
        except KeyError:
            known = ", ".join(e.value for e in cls)
            raise ValueError(f"unknown era {name!r}; expected one of: {known}") from None


CHRONOLOGY: tuple[Era, ...] = tuple(Era)

_ERA_LABELS: dict[Era, str] = {
    Era.SHANG_ORACLE: "Shang oracle bones",
    Era.ZHOU_BRONZE: "Zhou bronze inscriptions",
    Era.WARRING_STATES: "Warring States inscriptions",
    Era.SUANSHUSHU: "Suan shu shu bamboo strips",
    Era.DUNHUANG: "Dunhuang manuscripts",
    Era.NINE_CHAPTERS: "Nine Chapters received text",
    Era.SONG_QIN: "Song mathematical usage",
    Era.CONTEMPORARY: "Contemporary standard",
}

_ERA_PERIODS: dict[Era, str] = {
    Era.SHANG_ORACLE: "13th to 11th centuries BCE",
    Era.ZHOU_BRONZE: "11th to 5th centuries BCE",
    Era.WARRING_STATES: "5th to 3rd centuries BCE",
    Era.SUANSHUSHU: "early 2nd century BCE",
    Era.DUNHUANG: "1st to 10th centuries CE",
    Era.NINE_CHAPTERS: "7th century CE redaction",
    Era.SONG_QIN: "13th century CE",
    Era.CONTEMPORARY: "20th century onward",
}

_ERA_ALIASES: dict[str, Era] = {e.value.replace("-", ""): e for e in Era}
_ERA_ALIASES.update(
    {
        "shang": Era.SHANG_ORACLE,
        "oracle": Era.SHANG_ORACLE,
        "zhou": Era.ZHOU_BRONZE,
        "bronze": Era.ZHOU_BRONZE,
        "warring": Era.WARRING_STATES,
        "sss": Era.SUANSHUSHU,
        "ninechapters": Era.NINE_CHAPTERS,
        "nine": Era.NINE_CHAPTERS,
        "songqin": Era.SONG_QIN,
        "song": Era.SONG_QIN,
        "qin": Era.SONG_QIN,
        "modern": Era.CONTEMPORARY,
    }
)

# Eras whose script fuses digit and pivot into one graph, so [1]-usage before
# pivots is unrecoverable; parsing accepts both shapes everywhere.
EARLY_ERAS: frozenset[Era] = frozenset(
    {Era.SHANG_ORACLE, Era.ZHOU_BRONZE, Era.WARRING_STATES}
)


@unique
class YouPolicy(Enum):
    FORBIDDEN = "forbidden"
    OPTIONAL_DEFAULT_OFF = "optional-default-off"
    OPTIONAL_DEFAULT_ON = "optional-default-on"


@unique
class LingPolicy(Enum):
    FORBIDDEN = "forbidden"   # rank gaps are plain juxtaposition
    REQUIRED = "required"     # one ling per rank gap, no more, no fewer


@unique
class LeadingOnePolicy(Enum):
    # [1] before every pivot except the numeral's first; no exception.
    OMIT_BEFORE_HIGHEST = "omit-before-highest"
    # [1] before every pivot including the numeral's first, even a leading ten.
    REQUIRED_ALL = "required-all"
    # [1] before every pivot, but optional before a numeral-initial ten.
    REQUIRED_EXCEPT_LEADING_TEN = "required-except-leading-ten"


@unique
class OneBeforeInnerMultiplicand(Enum):
    """[1] before an inner pivot that is the sole multiplier of an outer pivot."""

    OMIT = "omit"       # [10][10^4], [10^2][10^4], [10^3][10^4]
    REQUIRE = "require"  # [1][10][10^4] and so on, subject to leading-ten rules


@dataclass(frozen=True, slots=True)
class EraProfile:
    """Everything era-dependent about naming an integer."""

    era: Era
    you_policy: YouPolicy
    ling_policy: LingPolicy
    leading_one_policy: LeadingOnePolicy
    inner_multiplicand_one: OneBeforeInnerMultiplicand
    liang_allowed: bool
    elliptic_allowed: bool
    zero_expressible: bool
    max_value: int


_PROFILES: dict[Era, EraProfile] = {
    Era.SHANG_ORACLE: EraProfile(
        era=Era.SHANG_ORACLE,
        you_policy=YouPolicy.OPTIONAL_DEFAULT_OFF,
        ling_policy=LingPolicy.FORBIDDEN,
        leading_one_policy=LeadingOnePolicy.OMIT_BEFORE_HIGHEST,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.OMIT,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**8 - 1,
    ),
    Era.ZHOU_BRONZE: EraProfile(
        era=Era.ZHOU_BRONZE,
        you_policy=YouPolicy.OPTIONAL_DEFAULT_ON,
        ling_policy=LingPolicy.FORBIDDEN,
        leading_one_policy=LeadingOnePolicy.OMIT_BEFORE_HIGHEST,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.OMIT,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**8 - 1,
    ),
    Era.WARRING_STATES: EraProfile(
        era=Era.WARRING_STATES,
        you_policy=YouPolicy.OPTIONAL_DEFAULT_OFF,
        ling_policy=LingPolicy.FORBIDDEN,
        leading_one_policy=LeadingOnePolicy.OMIT_BEFORE_HIGHEST,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.OMIT,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**8 - 1,
    ),
    Era.SUANSHUSHU: EraProfile(
        era=Era.SUANSHUSHU,
        you_policy=YouPolicy.FORBIDDEN,
        ling_policy=LingPolicy.FORBIDDEN,
        leading_one_policy=LeadingOnePolicy.OMIT_BEFORE_HIGHEST,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.OMIT,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**8 - 1,
    ),
    Era.DUNHUANG: EraProfile(
        era=Era.DUNHUANG,
        you_policy=YouPolicy.FORBIDDEN,
        ling_policy=LingPolicy.FORBIDDEN,
        leading_one_policy=LeadingOnePolicy.REQUIRED_EXCEPT_LEADING_TEN,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.OMIT,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**8 - 1,
    ),
    Era.NINE_CHAPTERS: EraProfile(
        era=Era.NINE_CHAPTERS,
        you_policy=YouPolicy.FORBIDDEN,
        ling_policy=LingPolicy.FORBIDDEN,
        leading_one_policy=LeadingOnePolicy.REQUIRED_ALL,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.REQUIRE,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**8 - 1,
    ),
    Era.SONG_QIN: EraProfile(
        era=Era.SONG_QIN,
        you_policy=YouPolicy.FORBIDDEN,
        ling_policy=LingPolicy.REQUIRED,
        leading_one_policy=LeadingOnePolicy.REQUIRED_ALL,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.REQUIRE,
        liang_allowed=False,
        elliptic_allowed=False,
        zero_expressible=False,
        max_value=10**12 - 1,
    ),
    Era.CONTEMPORARY: EraProfile(
        era=Era.CONTEMPORARY,
        you_policy=YouPolicy.FORBIDDEN,
        ling_policy=LingPolicy.REQUIRED,
        leading_one_policy=LeadingOnePolicy.REQUIRED_EXCEPT_LEADING_TEN,
        inner_multiplicand_one=OneBeforeInnerMultiplicand.REQUIRE,
        liang_allowed=True,
        elliptic_allowed=True,
        zero_expressible=True,
        max_value=10**12 - 1,
    ),
}


def era_profile(era: Era | str) -> EraProfile:
    """The frozen profile for an era (accepts the enum or a loose name)."""
    if isinstance(era, str):
        era = Era.from_string(era)
    return _PROFILES[era]


# ---------------------------------------------------------------------------
# Render options
# ---------------------------------------------------------------------------


@unique
class TwoStyle(Enum):
    ALWAYS_ER = "er"
    PREFER_LIANG = "liang"
    # Recitation style: er in every slot, like ALWAYS_ER, but only legal where
    # the era recognizes the liang variant at all.
    READING = "reading"


@dataclass(frozen=True, slots=True)
class RenderOptions:
    """Caller-controlled rendering choices.

    use_you: None defers to the era default; True demands the conjunction and
    is rejected where the profile forbids it. leading_ten_one is honored only
    under profiles where [1] before a numeral-initial ten is optional and is
    ignored elsewhere.
    """

    script: Script = Script.TRADITIONAL
    two_style: TwoStyle = TwoStyle.ALWAYS_ER
    use_you: bool | None = None
    elliptic: bool = False
    leading_ten_one: bool = False


DEFAULT_OPTIONS = RenderOptions()
