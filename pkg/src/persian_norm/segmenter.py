"""Dot-protected, verb-aware sentence segmentation.

Terminal punctuation splits first, with dots inside decimals, dates,
abbreviations, URLs and emails protected.  Long unpunctuated segments fall
back to splitting after sentence-final verb groups detected by a stem+suffix
lexicon (a pluggable stand-in for a full POS tagger).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .resources import lexicon_entries
from .scanner import SemioticClass, scan

TERMINAL_MARKS = ".!?؟"
DEFAULT_VERB_SPLIT_THRESHOLD = 30

_DOT_BEARING = {
    SemioticClass.DECIMAL,
    SemioticClass.DATE,
    SemioticClass.URL,
    SemioticClass.EMAIL,
    SemioticClass.ABBREV_FA,
    SemioticClass.ABBREV_EN,
}

ZWNJ = "‌"


@dataclass(frozen=True)
class VerbLexicon:
    past_stems: frozenset
    present_stems: frozenset
    past_suffixes: tuple
    present_suffixes: tuple
    auxiliaries: frozenset
    full_forms: frozenset

    def __post_init__(self):
        if not self.past_stems:
            raise ValueError("verb lexicon has no past stems")


@lru_cache(maxsize=None)
def default_lexicon() -> VerbLexicon:
    groups = lexicon_entries()
    return VerbLexicon(
        past_stems=frozenset(groups.get("past", ())),
        present_stems=frozenset(groups.get("present", ())),
        past_suffixes=tuple(groups.get("suffix_past", ())),
        present_suffixes=tuple(groups.get("suffix_present", ())),
        auxiliaries=frozenset(groups.get("aux", ())),
        full_forms=frozenset(groups.get("full", ())),
    )


def _strip_prefix(token: str) -> tuple[str, bool]:
    for prefix in ("نمی" + ZWNJ, "می" + ZWNJ, "نمی", "می"):
        if token.startswith(prefix) and len(token) > len(prefix):
            return token[len(prefix):], True
    if token.startswith("نیا") and len(token) > 3:
        # negation of an alef-madda initial stem: ن + آمد -> نیامد
        return "آ" + token[3:], False
    if token.startswith("ن") and len(token) > 1:
        return token[1:], False
    return token, False


def _is_verb(token: str, lexicon: VerbLexicon) -> bool:
    token = token.strip("".join(TERMINAL_MARKS) + "،؛:,;()«»\"'")
    if not token:
        return False
    if token in lexicon.full_forms or token in lexicon.auxiliaries:
        return True
    stemmed, has_present_prefix = _strip_prefix(token)
    for candidate in {token, stemmed}:
        for suffix in lexicon.past_suffixes:
            if candidate.endswith(suffix):
                stem = candidate[:len(candidate) - len(suffix)] if suffix else candidate
                if stem in lexicon.past_stems:
                    return True
    if has_present_prefix:
        for suffix in ("",) + lexicon.present_suffixes:
            if stemmed.endswith(suffix):
                stem = stemmed[:len(stemmed) - len(suffix)] if suffix else stemmed
                if stem in lexicon.present_stems:
                    return True
    return False


def detect_verb_positions(tokens: list[str], lexicon: VerbLexicon | None = None) -> list[int]:
    """Indices of verb-group ends; consecutive verb tokens form one group."""
    lexicon = lexicon or default_lexicon()
    flags = [_is_verb(t, lexicon) for t in tokens]
    positions = []
    for i, flag in enumerate(flags):
        if flag and (i + 1 == len(flags) or not flags[i + 1]):
            positions.append(i)
    return positions


def protect_non_terminal_dots(text: str) -> list[tuple[int, int]]:
    """Intervals covering every dot that must not split a sentence."""
    intervals = []
    for span in scan(text):
        if span.cls in _DOT_BEARING and "." in span.raw:
            intervals.append((span.start, span.end))
    return sorted(intervals)


def _in_intervals(pos: int, intervals: list[tuple[int, int]]) -> bool:
    return any(s <= pos < e for s, e in intervals)


def _split_on_terminals(text: str, protected) -> list[str]:
    segments = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in TERMINAL_MARKS and not _in_intervals(i, protected):
            # consume a full run of terminal marks ("...", "?!", "؟؟")
            j = i
            while j + 1 < n and text[j + 1] in TERMINAL_MARKS:
                j += 1
            segments.append(text[start:j + 1])
            start = j + 1
            i = j + 1
        else:
            i += 1
    if start < n:
        segments.append(text[start:])
    return segments


def _verb_split(segment: str, lexicon: VerbLexicon) -> list[str]:
    tokens = segment.split()
    positions = detect_verb_positions(tokens, lexicon)
    pieces = []
    prev = 0
    for pos in positions:
        if pos + 1 >= len(tokens):
            break
        pieces.append(" ".join(tokens[prev:pos + 1]))
        prev = pos + 1
    pieces.append(" ".join(tokens[prev:]))
    return [p for p in pieces if p]


def split_sentences(text: str, lexicon: VerbLexicon | None = None,
                    verb_split_threshold: int = DEFAULT_VERB_SPLIT_THRESHOLD) -> list[str]:
    """Split a paragraph into sentences."""
    lexicon = lexicon or default_lexicon()
    protected = protect_non_terminal_dots(text)
    sentences = []
    for segment in _split_on_terminals(text, protected):
        stripped = segment.strip()
        if not stripped:
            continue
        has_terminal = stripped[-1] in TERMINAL_MARKS
        if not has_terminal and len(stripped.split()) > verb_split_threshold:
            sentences.extend(_verb_split(stripped, lexicon))
        else:
            sentences.append(stripped)
    return sentences


def evaluate_segmentation(predicted: list[str], gold: list[str]) -> float:
    """Fraction of gold sentences reproduced exactly (whitespace-normalized)."""
    if not gold:
        raise ValueError("gold list is empty")
    norm = lambda s: re.sub(r"\s+", " ", s).strip()
    predicted_set = {norm(p) for p in predicted}
    hits = sum(1 for g in gold if norm(g) in predicted_set)
    return hits / len(gold)
