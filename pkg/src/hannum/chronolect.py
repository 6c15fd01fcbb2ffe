"""Era consistency analysis for Han numeral expressions.

Every era grammar is run over the same token sequence; the report records
which grammars accept it, the value each one reads, and the surface features
that narrow the plausible date range. Eras are treated as grammars, not as
probability models: the result is a consistency set, never a likelihood.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CHRONOLOGY,
    EARLY_ERAS,
    Era,
    Morpheme,
    MorphemeKind,
    token_notation,
)
from .parse import (
    Features,
    NumeralParseError,
    ParseErrorKind,
    ScriptHint,
    parse,
    tokenize,
)

__all__ = [
    "EraVerdict",
    "EraConsistencyReport",
    "classify",
    "feature_profile",
]


@dataclass(frozen=True, slots=True)
class EraVerdict:
    """One era grammar's ruling on a token sequence.

    Exactly one of value and error is set: value when the grammar accepts,
    error when it rejects. Different eras may accept the same sequence at
    different values (juxtaposition versus elliptic readings).
    """

    era: Era
    value: int | None = None
    error: NumeralParseError | None = None

    def __post_init__(self) -> None:
        if (self.value is None) == (self.error is None):
            raise ValueError("verdict needs exactly one of value or error")

    @property
    def accepts(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict[str, object]:
        if self.value is not None:
            return {
                "era": self.era.value,
                "verdict": "accepts",
                "value": self.value,
            }
        err = self.error
        assert err is not None
        return {
            "era": self.era.value,
            "verdict": "rejects",
            "error": {
                "kind": err.kind.value,
                "position": err.position,
                "message": err.message,
            },
        }


@dataclass(frozen=True, slots=True)
class EraConsistencyReport:
    """Which era grammars accept an expression, and why that dates it.

    verdicts holds all eight rulings in chronological order. consistent is
    the accepting subset, also chronological, and may be empty. notes are
    plain-language dating rationales keyed to the observed features.
    """

    input_tokens: tuple[Morpheme, ...]
    verdicts: tuple[EraVerdict, ...]
    features: Features
    consistent: tuple[Era, ...]
    notes: tuple[str, ...] = ()

    @property
    def earliest_consistent(self) -> Era | None:
        return self.consistent[0] if self.consistent else None

    @property
    def latest_consistent(self) -> Era | None:
        return self.consistent[-1] if self.consistent else None

    def verdict_for(self, era: Era | str) -> EraVerdict:
        key = era if isinstance(era, Era) else Era.from_string(era)
        for v in self.verdicts:
            if v.era is key:
                return v
        raise KeyError(key)

    def as_dict(self) -> dict[str, object]:
        earliest = self.earliest_consistent
        latest = self.latest_consistent
        return {
            "input_tokens": [token_notation(t) for t in self.input_tokens],
            "features": self.features.as_dict(),
            "verdicts": [v.as_dict() for v in self.verdicts],
            "consistent_eras": [e.value for e in self.consistent],
            "earliest_consistent": earliest.value if earliest else None,
            "latest_consistent": latest.value if latest else None,
            "notes": list(self.notes),
        }


def _coerce_tokens(source: object) -> tuple[Morpheme, ...]:
    if isinstance(source, str):
        return tokenize(source, ScriptHint.AUTO)
    toks = tuple(getattr(source, "tokens", source))
    if not toks:
        raise NumeralParseError(
            ParseErrorKind.EMPTY_INPUT, 0, "no tokens to classify"
        )
    return toks


def _presence_features(toks: tuple[Morpheme, ...]) -> Features:
    """Raw surface flags for sequences no grammar accepts.

    elliptic stays False here because ellipsis is a reading, not a token.
    """
    kinds = [t.kind for t in toks]
    uses_you = MorphemeKind.YOU in kinds
    uses_dan = MorphemeKind.DAN in kinds or MorphemeKind.LING_ALT in kinds
    uses_ling = uses_dan or MorphemeKind.LING in kinds
    liang_present = MorphemeKind.LIANG in kinds
    leading_one = (
        len(toks) >= 2
        and toks[0].kind is MorphemeKind.DIGIT
        and toks[0].value == 1
        and toks[1].kind is MorphemeKind.PIVOT
    )
    one_inner = False
    for j in range(len(toks) - 2):
        a, b, c = toks[j], toks[j + 1], toks[j + 2]
        if (
            a.kind is MorphemeKind.DIGIT
            and a.value == 1
            and b.kind is MorphemeKind.PIVOT
            and b.exponent in (1, 2, 3)
            and c.kind is MorphemeKind.PIVOT
            and c.exponent in (4, 8)
        ):
            one_inner = True
            break
    return Features(
        uses_you=uses_you,
        uses_ling=uses_ling,
        uses_dan_or_lingalt=uses_dan,
        liang_present=liang_present,
        elliptic=False,
        leading_one_before_highest=leading_one,
        one_before_inner_multiplicand=one_inner,
    )


_YOU_NOTE = (
    "contains yòu → pre-3rd-century BCE pattern; later grammars drop the "
    "junction word entirely"
)
_YOU_FREQUENCY_NOTE = (
    "Shang oracle, Zhou bronze, and Warring States numerals share one "
    "grammar; what differs is attested yòu frequency (roughly 5% of Shang "
    "records, 98% of Zhou records, 8% of Warring States records), so the "
    "three are never separated by accept/reject alone"
)
_LING_NOTE = (
    "contains líng → 12th c. CE onward; after a long lapse the word only "
    "returned to everyday numerals in the late 19th or early 20th centuries"
)
_DAN_NOTE = (
    "contains dān or lìng → 13th-century gap word, read as líng; only the "
    "Song and Qin-dynasty grammar admits it"
)
_LIANG_NOTE = "contains liǎng in an exact numeral → 20th c. onward"
_ELLIPTIC_NOTE = (
    "final pivot omitted after a trailing digit → elliptic reading, a "
    "contemporary colloquial habit"
)
_EMPTY_NOTE = "no era grammar accepts this sequence as an exact numeral"


def _notes(features: Features, consistent: tuple[Era, ...]) -> tuple[str, ...]:
    notes: list[str] = []
    if features.uses_you:
        notes.append(_YOU_NOTE)
    if any(e in EARLY_ERAS for e in consistent):
        notes.append(_YOU_FREQUENCY_NOTE)
    if features.uses_dan_or_lingalt:
        notes.append(_DAN_NOTE)
    elif features.uses_ling:
        notes.append(_LING_NOTE)
    if features.liang_present:
        notes.append(_LIANG_NOTE)
    if features.elliptic:
        notes.append(_ELLIPTIC_NOTE)
    if not consistent:
        notes.append(_EMPTY_NOTE)
    return tuple(notes)


def classify(source: object) -> EraConsistencyReport:
    """Run every era grammar over one expression and report the verdicts.

    source may be a token sequence, an object with a tokens attribute, or a
    text string (tokenized with automatic script detection). Tokenization
    errors propagate; grammar rejections become per-era Rejects verdicts.
    """
    toks = _coerce_tokens(source)
    verdicts: list[EraVerdict] = []
    consistent: list[Era] = []
    for era in CHRONOLOGY:
        try:
            outcome = parse(toks, era)
        except NumeralParseError as exc:
            verdicts.append(EraVerdict(era=era, error=exc))
        else:
            verdicts.append(EraVerdict(era=era, value=outcome.value))
            consistent.append(era)

    try:
        features = parse(toks, None).features
    except NumeralParseError:
        features = _presence_features(toks)

    consistent_t = tuple(consistent)
    return EraConsistencyReport(
        input_tokens=toks,
        verdicts=tuple(verdicts),
        features=features,
        consistent=consistent_t,
        notes=_notes(features, consistent_t),
    )


def feature_profile(source: object) -> Features:
    """The boolean feature vector of an expression, without a value claim.

    Uses the lenient parse's features when the lenient grammar accepts the
    sequence; otherwise falls back to raw token presence flags.
    """
    toks = _coerce_tokens(source)
    try:
        return parse(toks, None).features
    except NumeralParseError:
        return _presence_features(toks)
