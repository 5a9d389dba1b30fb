"""Persian text normalization for text and speech applications.

Canonicalizes raw Persian text (character, digit and punctuation variants,
markup entities, emojis) and rewrites non-standard words — numbers, dates,
times, phone numbers, IDs, URLs, symbols, abbreviations — into the words a
Persian speaker would pronounce.  Includes a dot-protected, verb-aware
sentence segmenter and a command-line interface.
"""

from .charset import (
    decode_markup_entities,
    fold_characters,
    fold_digits,
    fold_punctuation,
    strip_emojis,
)
from .numwords import (
    cardinal_words,
    decimal_words,
    grouped_digit_words,
    ordinal_words,
    words_to_number,
)
from .pipeline import (
    Mode,
    PipelineConfig,
    enumerate_verbalizations,
    normalize_general,
    normalize_speech,
)
from .scanner import (
    Calendar,
    CalendarDate,
    PhoneKind,
    SemioticClass,
    SemioticSpan,
    classify_phone,
    infer_calendar,
    scan,
    validate_card,
    validate_national_id,
    validate_sheba,
)
from .segmenter import (
    VerbLexicon,
    default_lexicon,
    detect_verb_positions,
    evaluate_segmentation,
    protect_non_terminal_dots,
    split_sentences,
)
from .verbalize import (
    PolicyMode,
    SelectionPolicy,
    expand_abbreviation,
    verbalize_date,
    verbalize_grouped_id,
    verbalize_phone,
    verbalize_symbol,
    verbalize_time,
    verbalize_url_email,
)

__version__ = "0.1.0"

__all__ = [
    "Calendar",
    "CalendarDate",
    "Mode",
    "PhoneKind",
    "PipelineConfig",
    "PolicyMode",
    "SelectionPolicy",
    "SemioticClass",
    "SemioticSpan",
    "VerbLexicon",
    "cardinal_words",
    "classify_phone",
    "decimal_words",
    "decode_markup_entities",
    "default_lexicon",
    "detect_verb_positions",
    "enumerate_verbalizations",
    "evaluate_segmentation",
    "expand_abbreviation",
    "fold_characters",
    "fold_digits",
    "fold_punctuation",
    "grouped_digit_words",
    "infer_calendar",
    "normalize_general",
    "normalize_speech",
    "ordinal_words",
    "protect_non_terminal_dots",
    "scan",
    "split_sentences",
    "strip_emojis",
    "validate_card",
    "validate_national_id",
    "validate_sheba",
    "verbalize_date",
    "verbalize_grouped_id",
    "verbalize_phone",
    "verbalize_symbol",
    "verbalize_time",
    "verbalize_url_email",
    "words_to_number",
]
