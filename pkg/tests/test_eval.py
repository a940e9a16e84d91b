import random

import pytest

from lexinduce import LanguageMismatch, LexicalEntry, evaluate


def e(rep, lang="en", pos="n"):
    return LexicalEntry(rep, lang, pos)


def en(rep, pos="n"):
    return LexicalEntry(rep, "en", pos)


def ca(rep, pos="n"):
    return LexicalEntry(rep, "ca", pos)


def test_direct_counting():
    pred = {(en("a"), ca("b1")), (en("a"), ca("b2"))}
    gold = {(en("a"), ca("b1"))}
    r = evaluate(pred, gold)
    assert r.precision == 0.5 and r.recall == 1.0 and r.coverage == 1.0
    assert r.f1 == pytest.approx(2 * 0.5 * 1.0 / 1.5)
    assert (r.predicted, r.gold, r.correct) == (2, 1, 1)


def test_bwp_restriction_can_empty_the_denominator():
    pred = {(en("a"), ca("oov"))}
    gold = {(en("a"), ca("b"))}
    r = evaluate(pred, gold)
    assert r.bwp_denominator == 0 and r.bwp == 0.0 and r.precision == 0.0
    assert any("bwp" in w for w in r.warnings)


def test_empty_prediction_reports_zero_with_warning():
    r = evaluate(set(), {(en("a"), ca("b"))})
    assert r.precision == 0.0 and r.recall == 0.0 and r.f1 == 0.0
    assert any("precision" in w for w in r.warnings)


def test_coverage_counts_distinct_gold_sources():
    gold = {(en("a"), ca("b")), (en("a"), ca("b2")), (en("x"), ca("y"))}
    pred = {(en("a"), ca("anything"))}
    assert evaluate(pred, gold).coverage == 0.5


def test_pair_identity_is_rep_pos():
    gold = {(en("a", "n"), ca("b", "n"))}
    pred = {(en("a", "v"), ca("b", "n"))}
    assert evaluate(pred, gold).correct == 0


def test_language_mismatch():
    with pytest.raises(LanguageMismatch):
        evaluate({(en("a"), ca("b"))}, {(en("a"), e("b", "fr"))})
    with pytest.raises(LanguageMismatch):
        # orientation matters
        evaluate({(en("a"), ca("b"))}, {(ca("b"), en("a"))})


def test_bwr_uses_input_vocab():
    gold = {(en("a"), ca("b")), (en("missing"), ca("b2"))}
    pred = {(en("a"), ca("b"))}
    vocab = {"en": [en("a")], "ca": [ca("b")]}
    r = evaluate(pred, gold, vocab)
    assert r.bwr_denominator == 1 and r.bwr == 1.0
    assert r.recall == 0.5


def random_sets(rng):
    reps = [f"w{i}" for i in range(12)]
    mk = lambda: {(en(rng.choice(reps)), ca(rng.choice(reps))) for _ in range(rng.randrange(0, 15))}
    return mk(), mk()


def test_identities_on_random_sets():
    rng = random.Random(4242)
    for _ in range(100):
        pred, gold = random_sets(rng)
        # saturated vocabularies: every word is available
        vocab = {
            "en": [a for a, _ in pred | gold],
            "ca": [b for _, b in pred | gold],
        }
        r = evaluate(pred, gold, vocab)
        for v in (r.precision, r.recall, r.f1, r.coverage, r.bwp, r.bwr):
            assert 0.0 <= v <= 1.0
        if r.precision + r.recall > 0:
            assert r.f1 == pytest.approx(2 * r.precision * r.recall / (r.precision + r.recall), abs=1e-12)
        else:
            assert r.f1 == 0.0
        assert r.correct <= min(r.predicted, r.gold)
        # BWR saturation: input vocab covers every gold word
        assert r.bwr == pytest.approx(r.recall, abs=1e-12)
        # BWP saturation: if every predicted word occurs in gold vocabulary
        gold_src = {a for a, _ in gold}
        gold_tgt = {b for _, b in gold}
        if all(a in gold_src and b in gold_tgt for a, b in pred):
            assert r.bwp == pytest.approx(r.precision, abs=1e-12)


def test_permutation_invariance():
    rng = random.Random(9)
    pred, gold = random_sets(rng)
    r1 = evaluate(sorted(pred), sorted(gold))
    r2 = evaluate(sorted(pred, reverse=True), sorted(gold, reverse=True))
    assert r1 == r2
