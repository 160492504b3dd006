"""Lexicon-and-rule sentiment scoring of review text.

Valence lookup comes from a word->rating lexicon; rules adjust per-token
valence for boosters, negation, and ALL-CAPS emphasis, then the summed
valence is squashed to a compound score in [-1, 1]. All rule constants are
configuration with the defaults below.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources

from .report import StageReport
from .tabular import Column, Table

COMPOUND_ALPHA = 15.0
BOOSTER_INCREMENT = 0.293
NEGATION_FACTOR = -0.74
CAPS_INCREMENT = 0.733
EXCLAIM_INCREMENT = 0.292
MAX_EXCLAIM = 4
CONTEXT_WINDOW = 3

POSITIVE_THRESHOLD = 0.05
NEGATIVE_THRESHOLD = -0.05

NEGATIONS = frozenset(
    """not cannot never no none neither nor nothing nobody nowhere without
    hardly scarcely rarely seldom lack lacks lacked lacking""".split()
)

_B = BOOSTER_INCREMENT
BOOSTERS = {
    "absolutely": _B, "amazingly": _B, "awfully": _B, "completely": _B,
    "considerably": _B, "decidedly": _B, "deeply": _B, "enormously": _B,
    "entirely": _B, "especially": _B, "exceptionally": _B, "extremely": _B,
    "fully": _B, "greatly": _B, "highly": _B, "hugely": _B, "incredibly": _B,
    "intensely": _B, "majorly": _B, "more": _B, "most": _B, "particularly": _B,
    "purely": _B, "quite": _B, "really": _B, "remarkably": _B, "so": _B,
    "substantially": _B, "thoroughly": _B, "totally": _B, "tremendously": _B,
    "unbelievably": _B, "unusually": _B, "utterly": _B, "very": _B,
    "almost": -_B, "barely": -_B, "kinda": -_B, "less": -_B, "little": -_B,
    "marginally": -_B, "occasionally": -_B, "partly": -_B, "slightly": -_B,
    "somewhat": -_B, "sorta": -_B,
}

# Frequent English function words; used only by the language heuristic.
STOP_WORDS = frozenset(
    """the a an and or but if then is are was were be been being to of in on
    at for with it this that these those we i you he she they my our your his
    her their its had has have having not no nor so very there here from by
    as me us him them what which who whom when where why how all any both
    each few many some such only own same than too just also would could
    should will shall can may might must do does did doing about into over
    under after before again further once during out off up down""".split()
)

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_HTML_RE = re.compile(r"<[^>]+>")
_PUNCT_RUN_RE = re.compile(r"([!?.,;:])\1+")
_WS_RE = re.compile(r"\s+")
_EDGE_PUNCT = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~"


@dataclass(frozen=True)
class Lexicon:
    """Word -> valence map; words are stored lowercase."""

    entries: dict[str, float]

    def __post_init__(self):
        for word, valence in self.entries.items():
            if word != word.lower():
                raise ValueError(f"lexicon word not lowercase: {word!r}")
            if not math.isfinite(valence):
                raise ValueError(f"non-finite valence for {word!r}")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SentimentScore:
    pos: float
    neg: float
    neu: float
    compound: float

    def __post_init__(self):
        if not -1.0 <= self.compound <= 1.0:
            raise ValueError(f"compound out of range: {self.compound}")


def _load_tsv_map(path) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("\t")
            if key:
                out[key] = value
    return out


def load_lexicon(path) -> Lexicon:
    """Read a word<TAB>valence file ('#' comments allowed)."""
    raw = _load_tsv_map(path)
    return Lexicon({w.lower(): float(v) for w, v in raw.items()})


def _data_path(name: str):
    return resources.files("rentlab.data").joinpath(name)


def default_lexicon() -> Lexicon:
    with resources.as_file(_data_path("lexicon.tsv")) as path:
        return load_lexicon(path)


def load_contractions(path=None) -> dict[str, str]:
    if path is not None:
        return _load_tsv_map(path)
    with resources.as_file(_data_path("contractions.tsv")) as p:
        return _load_tsv_map(p)


def load_emoji_map(path=None) -> dict[str, str]:
    if path is not None:
        return _load_tsv_map(path)
    with resources.as_file(_data_path("emoji.tsv")) as p:
        return _load_tsv_map(p)


_CONTRACTIONS: dict[str, str] | None = None
_EMOJI: dict[str, str] | None = None


def _contractions() -> dict[str, str]:
    global _CONTRACTIONS
    if _CONTRACTIONS is None:
        _CONTRACTIONS = load_contractions()
    return _CONTRACTIONS


def _emoji() -> dict[str, str]:
    global _EMOJI
    if _EMOJI is None:
        _EMOJI = load_emoji_map()
    return _EMOJI


def _match_case(replacement: str, original: str) -> str:
    if original.isupper() and len(original) > 1:
        return replacement.upper()
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def clean_text(
    raw: str,
    contractions: dict[str, str] | None = None,
    emoji_map: dict[str, str] | None = None,
) -> str:
    """Normalize review text for scoring.

    URLs and HTML tags are removed, emojis become their textual aliases,
    contractions are expanded (case-preserving), runs of identical punctuation
    collapse to one, and whitespace is normalized to single spaces.
    """
    contractions = _contractions() if contractions is None else contractions
    emoji_map = _emoji() if emoji_map is None else emoji_map
    text = _URL_RE.sub(" ", raw)
    text = _HTML_RE.sub(" ", text)
    for symbol, alias in emoji_map.items():
        if symbol in text:
            text = text.replace(symbol, f" {alias} ")
    if contractions:
        pattern = re.compile(
            r"\b(" + "|".join(re.escape(c) for c in sorted(contractions, key=len, reverse=True)) + r")\b",
            re.IGNORECASE,
        )
        text = pattern.sub(
            lambda m: _match_case(contractions[m.group(0).lower()], m.group(0)), text
        )
    text = _PUNCT_RUN_RE.sub(r"\1", text)
    text = _WS_RE.sub(" ", text)
    return text.strip()


def lexicon_lookup(word: str, lex: Lexicon) -> float | None:
    """Case-insensitive exact-match valence; None when unknown."""
    return lex.entries.get(word.lower())


def _tokenize(text: str) -> list[str]:
    tokens = []
    for chunk in text.split():
        stripped = chunk.strip(_EDGE_PUNCT)
        if stripped:
            tokens.append(stripped)
    return tokens


def _mixed_case(tokens: list[str]) -> bool:
    alpha = [t for t in tokens if any(ch.isalpha() for ch in t)]
    upper = sum(1 for t in alpha if t.isupper())
    return 0 < upper < len(alpha)


def score(text: str, lex: Lexicon) -> SentimentScore:
    """Score cleaned text; tokens are matched to the lexicon and adjusted by
    the booster/negation/caps window rules, then the sum is normalized to a
    compound score s/sqrt(s^2 + alpha)."""
    tokens = _tokenize(text)
    if not tokens:
        return SentimentScore(0.0, 0.0, 1.0, 0.0)
    mixed = _mixed_case(tokens)
    adjusted: list[float] = []
    neutral = 0
    for i, token in enumerate(tokens):
        valence = lexicon_lookup(token, lex)
        if valence is None or valence == 0.0:
            neutral += 1
            continue
        v = valence
        if mixed and token.isupper():
            v += CAPS_INCREMENT * (1.0 if v > 0 else -1.0)
        window = [t.lower() for t in tokens[max(0, i - CONTEXT_WINDOW) : i]]
        for prior in window:
            boost = BOOSTERS.get(prior)
            if boost is not None:
                v += boost * (1.0 if v > 0 else -1.0)
        if any(w in NEGATIONS for w in window):
            v *= NEGATION_FACTOR
        adjusted.append(v)

    total = sum(adjusted)
    if total != 0.0:
        emphasis = min(text.count("!"), MAX_EXCLAIM) * EXCLAIM_INCREMENT
        total += emphasis if total > 0 else -emphasis
    compound = total / math.sqrt(total * total + COMPOUND_ALPHA)
    compound = max(-1.0, min(1.0, compound))

    pos_mass = sum(v + 1.0 for v in adjusted if v > 0)
    neg_mass = sum(-v + 1.0 for v in adjusted if v < 0)
    zero_mass = float(neutral + sum(1 for v in adjusted if v == 0.0))
    mass = pos_mass + neg_mass + zero_mass
    if mass == 0.0:
        return SentimentScore(0.0, 0.0, 1.0, 0.0)
    return SentimentScore(pos_mass / mass, neg_mass / mass, zero_mass / mass, compound)


def classify_compound(compound: float) -> str:
    if compound >= POSITIVE_THRESHOLD:
        return "positive"
    if compound <= NEGATIVE_THRESHOLD:
        return "negative"
    return "neutral"


def classify(s: SentimentScore) -> str:
    """Map compound to positive/negative/neutral at the +-0.05 band edges."""
    return classify_compound(s.compound)


def looks_english(text: str, min_tokens: int = 5, min_stop_ratio: float = 0.05) -> bool:
    """Stop-word-ratio heuristic; short texts pass by default."""
    tokens = [t.lower() for t in _tokenize(text)]
    if len(tokens) < min_tokens:
        return True
    hits = sum(1 for t in tokens if t in STOP_WORDS)
    return hits / len(tokens) >= min_stop_ratio


def score_reviews(
    reviews: Table,
    lex: Lexicon,
    comments_col: str = "comments",
    report: StageReport | None = None,
) -> Table:
    """Clean and score every comment, appending pos/neg/neu/compound/label.

    Rows failing the English heuristic are dropped (and counted in the
    report). Empty or missing comments get missing sentiment cells so the
    host-average fill can overwrite them.
    """
    comments = reviews.values(comments_col)
    keep: list[int] = []
    dropped = 0
    cleaned: list[str | None] = []
    for i, comment in enumerate(comments):
        text = clean_text(comment) if comment is not None else ""
        if text and not looks_english(text):
            dropped += 1
            continue
        keep.append(i)
        cleaned.append(text if text else None)

    out = reviews.take(keep)
    pos, neg, neu, compound, label = [], [], [], [], []
    scored = 0
    for text in cleaned:
        if text is None:
            pos.append(None)
            neg.append(None)
            neu.append(None)
            compound.append(None)
            label.append(None)
            continue
        s = score(text, lex)
        pos.append(s.pos)
        neg.append(s.neg)
        neu.append(s.neu)
        compound.append(s.compound)
        label.append(classify(s))
        scored += 1
    out = out.with_column("pos", Column("numeric", tuple(pos)))
    out = out.with_column("neg", Column("numeric", tuple(neg)))
    out = out.with_column("neu", Column("numeric", tuple(neu)))
    out = out.with_column("compound", Column("numeric", tuple(compound)))
    out = out.with_column("label", Column("text", tuple(label)))
    if report is not None:
        report.add("score_reviews", comments_col, scored, f"dropped_non_english={dropped}")
    return out


def fill_missing_sentiment(
    table: Table,
    host_col: str = "host_id",
    report: StageReport | None = None,
) -> Table:
    """Replace missing compounds with the host's mean compound (global mean
    when the host has no scored reviews) and rebuild labels for filled rows."""
    compounds = table.values("compound")
    hosts = table.values(host_col)
    sums: dict = {}
    counts: dict = {}
    g_sum = 0.0
    g_cnt = 0
    for h, c in zip(hosts, compounds):
        if c is None:
            continue
        g_sum += c
        g_cnt += 1
        if h is not None:
            sums[h] = sums.get(h, 0.0) + c
            counts[h] = counts.get(h, 0) + 1
    global_mean = g_sum / g_cnt if g_cnt else 0.0

    labels = list(table.values("label")) if "label" in table else [None] * table.n_rows
    filled = 0
    new_compound = []
    for i, (h, c) in enumerate(zip(hosts, compounds)):
        if c is not None:
            new_compound.append(c)
            continue
        value = sums[h] / counts[h] if h is not None and counts.get(h) else global_mean
        value = max(-1.0, min(1.0, value))
        new_compound.append(value)
        labels[i] = classify_compound(value)
        filled += 1
    out = table.with_column("compound", Column("numeric", tuple(new_compound)))
    if "label" in table:
        out = out.with_column("label", Column("text", tuple(labels)))
    if report is not None:
        report.add("fill_missing_sentiment", "compound", filled, f"global_mean={global_mean!r}")
    return out
