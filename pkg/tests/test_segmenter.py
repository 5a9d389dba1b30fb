import pytest

from persian_norm import (
    VerbLexicon,
    default_lexicon,
    detect_verb_positions,
    evaluate_segmentation,
    split_sentences,
)
from persian_norm.cli import evaluate_gold_fixture, read_gold_fixture
from persian_norm.resources import fixture_path
from persian_norm.segmenter import protect_non_terminal_dots


def test_basic_terminal_split():
    text = "هوا سرد بود. بچه‌ها در خانه ماندند."
    assert split_sentences(text) == [
        "هوا سرد بود.",
        "بچه‌ها در خانه ماندند.",
    ]


def test_question_marks_both_scripts():
    text = "آیا آمدی؟ بله آمدم. Are you sure?"
    assert split_sentences(text) == [
        "آیا آمدی؟", "بله آمدم.", "Are you sure?",
    ]


def test_exclamation():
    assert split_sentences("چه روز خوبی! همه خوشحال بودند.") == [
        "چه روز خوبی!", "همه خوشحال بودند.",
    ]


def test_ellipsis_single_boundary():
    out = split_sentences("قطار رسید... مسافران سوار شدند.")
    assert out == ["قطار رسید...", "مسافران سوار شدند."]


def test_decimal_dot_protected():
    out = split_sentences("عدد پی برابر 3.14 است. این مقدار مهم است.")
    assert out == ["عدد پی برابر 3.14 است.", "این مقدار مهم است."]


def test_abbreviation_dot_protected():
    out = split_sentences("برای جزئیات ر.ک فصل سوم. آنجا مثال هست.")
    assert out == ["برای جزئیات ر.ک فصل سوم.", "آنجا مثال هست."]


def test_url_dot_protected():
    out = split_sentences("سایت example.com را ببینید. مفید است.")
    assert out == ["سایت example.com را ببینید.", "مفید است."]


def test_email_dot_protected():
    out = split_sentences("به a@b.com بنویسید. پاسخ می‌رسد.")
    assert out == ["به a@b.com بنویسید.", "پاسخ می‌رسد."]


def test_protected_intervals_cover_dots():
    text = "عدد 3.14 و سایت a.ir و ایمیل x@y.com"
    intervals = protect_non_terminal_dots(text)
    dot_positions = [i for i, c in enumerate(text) if c == "."]
    for pos in dot_positions:
        assert any(s <= pos < e for s, e in intervals)


def test_character_conservation():
    texts = [
        "هوا سرد بود. بچه‌ها ماندند! آیا رفتند؟",
        "عدد 3.14 است. سایت b.com هم هست.",
        "بدون علامت پایانی",
    ]
    for text in texts:
        joined = "".join(split_sentences(text))
        assert joined.replace(" ", "") == text.replace(" ", "")


def test_short_unpunctuated_kept_whole():
    text = "دانش‌آموزان به مدرسه رفتند"
    assert split_sentences(text) == [text]


def test_long_unpunctuated_verb_split():
    text = (
        "دانش‌آموزان صبح زود با کیف‌های سنگین خود به مدرسه رفتند "
        "معلم درس تازه جغرافیا را با دقت و حوصله توضیح داد "
        "بچه‌ها زنگ تفریح در حیاط بزرگ مدرسه بازی کردند "
        "سپس همه با خوشحالی به خانه‌های خود رفتند"
    )
    out = split_sentences(text)
    assert out == [
        "دانش‌آموزان صبح زود با کیف‌های سنگین خود به مدرسه رفتند",
        "معلم درس تازه جغرافیا را با دقت و حوصله توضیح داد",
        "بچه‌ها زنگ تفریح در حیاط بزرگ مدرسه بازی کردند",
        "سپس همه با خوشحالی به خانه‌های خود رفتند",
    ]


def test_threshold_controls_fallback():
    text = "دانش‌آموزان به مدرسه رفتند معلم درس داد"
    assert split_sentences(text, verb_split_threshold=30) == [text]
    assert len(split_sentences(text, verb_split_threshold=3)) == 2


def test_verb_positions_group_collapse():
    # consecutive verb tokens count as one group ending at the last one
    tokens = "محصول را برداشت کردند سپس فروختند".split()
    positions = detect_verb_positions(tokens)
    assert positions == [3, 5]


def test_verb_negated_form():
    tokens = "او هرگز نیامد".split()
    assert detect_verb_positions(tokens) == [2]


def test_verb_present_with_prefix():
    tokens = "پرنده‌ها کوچ می‌کنند".split()
    assert detect_verb_positions(tokens) == [2]


def test_future_auxiliary():
    tokens = "من آنجا خواهم بود".split()
    assert 3 in detect_verb_positions(tokens)


def test_custom_lexicon():
    lex = VerbLexicon(
        past_stems=frozenset({"رفت"}),
        present_stems=frozenset(),
        past_suffixes=("", "ند"),
        present_suffixes=(),
        auxiliaries=frozenset(),
        full_forms=frozenset(),
    )
    assert detect_verb_positions("او رفت".split(), lex) == [1]
    assert detect_verb_positions("او آمد".split(), lex) == []


def test_lexicon_requires_past_stems():
    with pytest.raises(ValueError):
        VerbLexicon(
            past_stems=frozenset(),
            present_stems=frozenset(),
            past_suffixes=(),
            present_suffixes=(),
            auxiliaries=frozenset(),
            full_forms=frozenset(),
        )


def test_empty_input():
    assert split_sentences("") == []
    assert split_sentences("   ") == []


def test_determinism():
    text = "هوا سرد بود. عدد 3.14 مهم است. آیا رفتی؟"
    assert split_sentences(text) == split_sentences(text)


def test_evaluate_segmentation_scoring():
    gold = ["الف.", "ب.", "ج."]
    assert evaluate_segmentation(["الف.", "ب.", "ج."], gold) == 1.0
    assert evaluate_segmentation(["الف.", "ب. ج."], gold) == pytest.approx(1 / 3)
    with pytest.raises(ValueError):
        evaluate_segmentation(["الف."], [])


def test_evaluate_whitespace_normalized():
    assert evaluate_segmentation(["الف  ب."], ["الف ب."]) == 1.0


def test_gold_fixture_shape():
    paragraphs = read_gold_fixture(fixture_path("segmentation_gold.txt"))
    assert len(paragraphs) >= 40
    assert sum(len(p) for p in paragraphs) >= 120
    for sentences in paragraphs:
        assert sentences


def test_gold_fixture_accuracy():
    accuracy = evaluate_gold_fixture(fixture_path("segmentation_gold.txt"))
    assert accuracy >= 0.85
