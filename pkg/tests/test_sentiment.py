import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rentlab.report import StageReport
from rentlab.sentiment import (
    COMPOUND_ALPHA,
    Lexicon,
    classify,
    classify_compound,
    clean_text,
    fill_missing_sentiment,
    lexicon_lookup,
    looks_english,
    score,
    score_reviews,
)
from rentlab.tabular import Table


def compound_of(total: float) -> float:
    return total / math.sqrt(total * total + COMPOUND_ALPHA)


class TestLexiconFixtures:
    """The six dictionary-subset ratings are mandatory fixtures."""

    @pytest.mark.parametrize(
        "word,valence",
        [
            ("Tragedy", -3.4),
            ("Insane", -1.7),
            ("Flattery", 0.4),
            ("Stealthily", 0.1),
            ("Awesome", 1.8),
            ("Amazing", 1.8),
        ],
    )
    def test_fixture_word(self, lexicon, word, valence):
        assert lexicon_lookup(word, lexicon) == valence

    def test_unknown_word_absent(self, lexicon):
        assert lexicon_lookup("xyzzy", lexicon) is None

    def test_lookup_case_insensitive(self, lexicon):
        assert lexicon_lookup("AWESOME", lexicon) == lexicon_lookup("awesome", lexicon)

    def test_lexicon_size(self, lexicon):
        assert len(lexicon) >= 1000

    def test_lowercase_enforced(self):
        with pytest.raises(ValueError):
            Lexicon({"Bad": 1.0})

    def test_finite_valence_enforced(self):
        with pytest.raises(ValueError):
            Lexicon({"bad": math.inf})


class TestCleanText:
    def test_url_and_punct_run(self):
        assert clean_text("Great stay!!! http://x.co") == "Great stay!"

    def test_contraction_expansion(self):
        assert clean_text("can't wait") == "cannot wait"

    def test_contraction_keeps_capitalization(self):
        assert clean_text("Can't wait") == "Cannot wait"

    def test_empty(self):
        assert clean_text("") == ""

    def test_html_tags_stripped(self):
        assert clean_text("nice <br/> place <b>really</b>") == "nice place really"

    def test_emoji_alias(self):
        out = clean_text("loved it \U0001f60d")
        assert "heart eyes" in out

    def test_whitespace_normalized(self):
        assert clean_text("a\t b\n\nc") == "a b c"

    def test_question_run_collapsed(self):
        assert clean_text("why??? how???") == "why? how?"


class TestScore:
    def test_single_word_awesome(self, lexicon):
        s = score("awesome", lexicon)
        assert s.compound == pytest.approx(1.8 / math.sqrt(18.24), abs=1e-9)
        assert s.compound == pytest.approx(0.4215, abs=1e-3)

    def test_empty_text(self, lexicon):
        s = score("", lexicon)
        assert s.compound == 0.0
        assert s.neu == 1.0

    def test_all_unknown_text(self, lexicon):
        s = score("qwerty zxcvb plmokn", lexicon)
        assert s.compound == 0.0
        assert s.neu == 1.0

    def test_negation_flips_and_lowers(self, lexicon):
        plain = score("awesome", lexicon)
        negated = score("not awesome", lexicon)
        assert negated.compound < plain.compound
        assert negated.compound < 0 < plain.compound
        assert negated.compound == pytest.approx(compound_of(1.8 * -0.74), abs=1e-9)

    def test_booster_raises_magnitude(self, lexicon):
        plain = score("good", lexicon)
        boosted = score("very good", lexicon)
        assert boosted.compound > plain.compound

    def test_dampener_lowers_magnitude(self, lexicon):
        plain = score("good", lexicon)
        damped = score("slightly good", lexicon)
        assert 0 < damped.compound < plain.compound

    def test_caps_emphasis_amid_mixed_case(self, lexicon):
        plain = score("this was great honestly", lexicon)
        shouted = score("this was GREAT honestly", lexicon)
        assert shouted.compound > plain.compound

    def test_all_caps_text_gets_no_emphasis(self, lexicon):
        # no mixed-case differential -> no caps boost
        upper = score("GREAT STAY", lexicon)
        lower = score("great stay", lexicon)
        assert upper.compound == pytest.approx(lower.compound, abs=1e-12)

    def test_exclamations_amplify_up_to_four(self, lexicon):
        base = score("great", lexicon)
        one = score("great!", lexicon)
        four = score("great! ! ! !", lexicon)
        five = score("great! ! ! ! !", lexicon)
        assert base.compound < one.compound < four.compound
        assert five.compound == pytest.approx(four.compound, abs=1e-12)

    def test_hand_summed_phrase(self, lexicon):
        # great=3.1; recommend=1.9 boosted by "highly" (+0.293)
        s = score("great location, highly recommend", lexicon)
        expected = compound_of(3.1 + 1.9 + 0.293)
        assert s.compound == pytest.approx(expected, abs=1e-9)
        assert s.compound > 0.05

    def test_mass_proportions_sum_to_one(self, lexicon):
        s = score("great awful unknownword", lexicon)
        assert s.pos + s.neg + s.neu == pytest.approx(1.0, abs=1e-6)
        assert s.pos > 0 and s.neg > 0 and s.neu > 0

    def test_deterministic(self, lexicon):
        text = "really wonderful place, not cheap but SUPERB value!!"
        a = score(clean_text(text), lexicon)
        b = score(clean_text(text), lexicon)
        assert a == b


NON_MODIFIER_WORDS = ["place", "great", "awful", "house", "clean", "dirty", "stay", "room"]


@settings(max_examples=120, deadline=None)
@given(st.lists(st.sampled_from(NON_MODIFIER_WORDS), max_size=8))
def test_compound_bounded_and_positive_append_monotone(lexicon, words):
    text = " ".join(words)
    s = score(text, lexicon)
    assert -1.0 < s.compound < 1.0
    appended = score(text + (" " if text else "") + "great", lexicon)
    assert appended.compound >= s.compound - 1e-12


@settings(max_examples=80, deadline=None)
@given(st.lists(st.sampled_from(NON_MODIFIER_WORDS + ["not", "very"]), min_size=1, max_size=10))
def test_proportions_sum_to_one_when_matched(lexicon, words):
    s = score(" ".join(words), lexicon)
    if any(w in ("great", "awful", "clean", "dirty") for w in words):
        assert s.pos + s.neg + s.neu == pytest.approx(1.0, abs=1e-6)


class TestClassify:
    def test_zero_is_neutral(self):
        assert classify_compound(0.0) == "neutral"

    def test_positive_threshold(self):
        assert classify_compound(0.4215) == "positive"
        assert classify_compound(0.05) == "positive"
        assert classify_compound(0.049999) == "neutral"

    def test_negative_threshold(self):
        assert classify_compound(-0.34) == "negative"
        assert classify_compound(-0.05) == "negative"
        assert classify_compound(-0.049999) == "neutral"

    def test_classify_uses_compound_only(self, lexicon):
        s = score("awesome", lexicon)
        assert classify(s) == classify_compound(s.compound)


def _reviews(comments, hosts=None):
    data = {
        "listing_id": ("integer", list(range(1, len(comments) + 1))),
        "comments": ("text", comments),
    }
    if hosts is not None:
        data["host_id"] = ("integer", hosts)
    return Table.from_dict(data)


class TestScoreReviews:
    def test_positive_review_labeled(self, lexicon):
        out = score_reviews(_reviews(["great location, highly recommend"]), lexicon)
        assert out.values("compound")[0] > 0.05
        assert out.values("label")[0] == "positive"

    def test_five_columns_appended(self, lexicon):
        out = score_reviews(_reviews(["nice place"]), lexicon)
        for col in ("pos", "neg", "neu", "compound", "label"):
            assert col in out.names

    def test_non_english_dropped_and_counted(self, lexicon):
        report = StageReport()
        comments = [
            "great stay, we loved the house and the pool",
            "la casa estaba muy bonita cerca del centro excelente anfitrion gracias",
            "lovely spot, would happily stay again",
        ]
        out = score_reviews(_reviews(comments), lexicon, report=report)
        assert out.n_rows == 2
        assert any("dropped_non_english=1" in e.flags for e in report.entries)

    def test_empty_comment_has_missing_sentiment(self, lexicon):
        out = score_reviews(_reviews(["", "great spot"]), lexicon)
        assert out.values("compound")[0] is None
        assert out.values("compound")[1] is not None

    def test_row_count_never_grows(self, lexicon):
        out = score_reviews(_reviews(["a", "b", "c"]), lexicon)
        assert out.n_rows <= 3


class TestFillMissingSentiment:
    def _scored(self, hosts, compounds):
        return Table.from_dict(
            {
                "host_id": ("integer", hosts),
                "compound": ("numeric", compounds),
                "label": ("text", [None] * len(hosts)),
            }
        )

    def test_host_mean(self):
        t = self._scored([1, 1, 1], [0.2, 0.4, None])
        out = fill_missing_sentiment(t)
        assert out.values("compound")[2] == pytest.approx(0.3, abs=1e-12)
        assert out.values("label")[2] == "positive"

    def test_no_missing_identity(self):
        t = self._scored([1, 2], [0.1, -0.1])
        out = fill_missing_sentiment(t)
        assert out.values("compound") == (0.1, -0.1)

    def test_unscored_host_gets_global_mean(self):
        t = self._scored([1, 1, 2], [0.2, 0.4, None])
        out = fill_missing_sentiment(t)
        assert out.values("compound")[2] == pytest.approx(0.3, abs=1e-12)


class TestLanguageHeuristic:
    def test_short_text_passes(self):
        assert looks_english("ok")

    def test_english_passes(self):
        assert looks_english("the house was great and we loved it")

    def test_no_stopwords_fails(self):
        assert not looks_english("casa bonita centro excelente anfitrion gracias")
