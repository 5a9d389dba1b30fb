"""Spoken-form rewriting for classified spans.

Each semiotic class has a family of legitimate spoken renderings; a
``SelectionPolicy`` picks one (fixed index, seeded random, or the full
enumeration for augmentation).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .numwords import ZWNJ, cardinal_words, decimal_words, grouped_digit_words, ordinal_words
from .resources import date_templates, table
from .scanner import (
    Calendar,
    CalendarDate,
    MONTH_NAMES,
    PhoneKind,
    SemioticClass,
    ascii_digits,
)


class PolicyMode(Enum):
    FIXED = "FIXED"
    SEEDED_RANDOM = "SEEDED_RANDOM"
    ENUMERATE_ALL = "ENUMERATE_ALL"


@dataclass(frozen=True)
class SelectionPolicy:
    mode: PolicyMode = PolicyMode.FIXED
    index: int = 0
    seed: int = 0

    @classmethod
    def fixed(cls, index: int = 0) -> "SelectionPolicy":
        return cls(mode=PolicyMode.FIXED, index=index)

    @classmethod
    def seeded(cls, seed: int) -> "SelectionPolicy":
        return cls(mode=PolicyMode.SEEDED_RANDOM, seed=seed)

    def choose(self, options: list[str], rng: random.Random | None = None) -> str:
        if not options:
            raise ValueError("no options to choose from")
        if self.mode is PolicyMode.FIXED:
            if self.index >= len(options):
                return options[0]
            return options[self.index]
        if self.mode is PolicyMode.SEEDED_RANDOM:
            rng = rng if rng is not None else random.Random(self.seed)
            return rng.choice(options)
        raise ValueError("ENUMERATE_ALL has no single choice")


@lru_cache(maxsize=None)
def compositions(n: int, parts: tuple[int, ...] = (3, 2)) -> tuple[tuple[int, ...], ...]:
    """All orderings of ``parts`` summing to n, larger parts first."""
    if n == 0:
        return ((),)
    out = []
    for p in parts:
        if p <= n:
            for rest in compositions(n - p, parts):
                out.append((p,) + rest)
    return tuple(out)


# --- dates -----------------------------------------------------------------

def date_variants(d: CalendarDate) -> list[str]:
    months = MONTH_NAMES[d.calendar]
    fields = {
        "day_ordinal": ordinal_words(d.day, first_form="اول"),
        "day_cardinal": cardinal_words(d.day),
        "month_name": months[d.month - 1],
        "month_number": cardinal_words(d.month),
        "year_cardinal": cardinal_words(d.year),
    }
    return [tpl.format(**fields) for tpl in date_templates()]


def verbalize_date(d: CalendarDate, policy: SelectionPolicy | None = None,
                   rng: random.Random | None = None) -> str:
    policy = policy or SelectionPolicy.fixed(0)
    return policy.choose(date_variants(d), rng)


# --- times -----------------------------------------------------------------

def time_variants(hour: int, minute: int, second: int | None = None) -> list[str]:
    if not (0 <= hour <= 23 and 0 <= minute <= 59):
        raise ValueError(f"invalid time {hour}:{minute}")
    if second is not None and not 0 <= second <= 59:
        raise ValueError(f"invalid second {second}")
    h = cardinal_words(hour)
    if minute == 0 and second is None:
        base = [h, h]  # the zero is never read
    else:
        m = cardinal_words(minute)
        with_units = f"{h} و {m} دقیقه"
        bare = f"{h} و {m}"
        if second is not None:
            s = cardinal_words(second)
            with_units += f" و {s} ثانیه"
            bare += f" و {s}"
        base = [with_units, bare]
    variants = base + [f"ساعت {v}" for v in base]
    seen, out = set(), []
    for v in variants:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def verbalize_time(hour: int, minute: int, second: int | None = None,
                   policy: SelectionPolicy | None = None,
                   rng: random.Random | None = None) -> str:
    policy = policy or SelectionPolicy.fixed(0)
    return policy.choose(time_variants(hour, minute, second), rng)


# --- phone numbers ---------------------------------------------------------

def _grouped_variants(digits: str) -> list[str]:
    out = []
    for sizes in compositions(len(digits)):
        out.append(grouped_digit_words(digits, list(sizes)))
    return out


def phone_variants(digits: str, kind: PhoneKind) -> list[str]:
    digits = ascii_digits(digits)
    if kind is PhoneKind.MOBILE:
        # the 4-digit prefix is always read the same way: صفر + 3-digit cardinal
        prefix = f"صفر {cardinal_words(int(digits[1:4]))}"
        return [f"{prefix} {rest}" for rest in _grouped_variants(digits[4:])]
    if len(digits) == 11:
        # landline with area code 0XX
        prefix = grouped_digit_words(digits[:3], [3])
        return [f"{prefix} {rest}" for rest in _grouped_variants(digits[3:])]
    return _grouped_variants(digits)


def verbalize_phone(digits: str, kind: PhoneKind,
                    policy: SelectionPolicy | None = None,
                    rng: random.Random | None = None) -> str:
    policy = policy or SelectionPolicy.fixed(0)
    return policy.choose(phone_variants(digits, kind), rng)


# --- special numbers -------------------------------------------------------

def grouped_id_variants(digits: str, cls: SemioticClass) -> list[str]:
    digits = ascii_digits(digits)
    if cls is SemioticClass.SHEBA:
        prefix = f"آی آر"
        body = digits[2:] if digits.startswith("IR") else digits
        return [f"{prefix} {rest}" for rest in _grouped_variants(body)]
    if cls is SemioticClass.CARD_NUMBER:
        # cards default to the fixed 2x8 grouping; other splits follow
        fixed = grouped_digit_words(digits, [2] * 8)
        rest = [v for v in _grouped_variants(digits) if v != fixed]
        return [fixed] + rest
    return _grouped_variants(digits)


def verbalize_grouped_id(digits: str, cls: SemioticClass,
                         policy: SelectionPolicy | None = None,
                         rng: random.Random | None = None) -> str:
    policy = policy or SelectionPolicy.fixed(0)
    return policy.choose(grouped_id_variants(digits, cls), rng)


# --- symbols, currencies, abbreviations ------------------------------------

_CLASS_TABLES = {
    SemioticClass.SYMBOL: "symbols",
    SemioticClass.CURRENCY: "currencies",
    SemioticClass.MATH_SYMBOL: "math_symbols",
}


def verbalize_symbol(token: str, cls: SemioticClass = SemioticClass.SYMBOL) -> str:
    tbl = table(_CLASS_TABLES[cls])
    if token not in tbl:
        raise KeyError(f"{token!r} not in {cls.value} table")
    return tbl[token]


def verbalize_fraction(numerator: int, denominator: int) -> str:
    return f"{cardinal_words(numerator)} {ordinal_words(denominator)}"


@lru_cache(maxsize=None)
def _letter_names() -> dict[str, str]:
    return table("letter_names").as_dict()


def spell_latin_letters(token: str) -> str:
    names = _letter_names()
    letters = [names[ch.lower()] for ch in token if ch.isalpha()]
    return ZWNJ.join(letters)


def expand_abbreviation(token: str) -> str:
    """Expand a Persian abbreviation or spell a Latin one letter by letter."""
    fa = table("abbrev_fa")
    if token in fa:
        return fa[token]
    if re.fullmatch(r"[A-Za-z.]+", token) and any(c.isalpha() for c in token):
        return spell_latin_letters(token)
    return token


# --- URLs and emails -------------------------------------------------------

URL_PATH_LIMIT = 10


@lru_cache(maxsize=None)
def _url_words(style: str = "latin") -> dict[str, str]:
    return table(f"url_words_{style}").as_dict()


def verbalize_url_email(raw: str, style: str = "latin") -> str:
    """Spell out URL/email separators; long URL paths are dropped."""
    words = _url_words(style)
    m = re.match(r"(?P<scheme>[a-zA-Z]+)://(?P<rest>.*)", raw)
    if m:
        host, _, path = m.group("rest").partition("/")
        if path and (len(path) > URL_PATH_LIMIT or "%" in path):
            path = ""
        raw = m.group("scheme") + "://" + host + ("/" + path if path else "")
    parts = []
    for ch in raw:
        if ch in words:
            parts.append(" " + words[ch] + " ")
        else:
            parts.append(ch)
    return re.sub(r"\s+", " ", "".join(parts)).strip()
