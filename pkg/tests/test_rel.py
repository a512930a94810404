# coding: utf-8
#

import pytest

from monopres.catalog import builtin_theory
from monopres.exceptions import DimensionError, UnsupportedTheoryError
from monopres.multirel import (MultiRel, eval_mrel, format_word_mrel,
                               parse_word_mrel)
from monopres.rel import (Rel, compose_rel, encode_rel,
                          enumerate_canonical_words_rel, enumerate_rel,
                          eval_rel, format_rel, normalize_word_rel, parse_rel,
                          quotient, tensor_rel, word_eval_rel, word_to_term_rel)
from monopres.terms import parse_term

R = builtin_theory("R")


def test_quotient():
    r = MultiRel.from_rows([[2, 0], [0, 5]])
    assert quotient(r) == Rel.from_rows([[1, 0], [0, 1]])
    assert quotient(MultiRel.zeros(2, 0)) == Rel.zeros(2, 0)


def test_compose_rel():
    a = Rel.from_rows([[1, 1]])
    b = Rel.from_rows([[1], [1]])
    assert compose_rel(a, b) == Rel.from_rows([[1]])
    assert compose_rel(Rel.zeros(2, 0), Rel.zeros(0, 3)) == Rel.zeros(2, 3)
    assert tensor_rel(a, b) == Rel.from_rows([[1, 1, 0], [0, 0, 1], [0, 0, 1]])
    with pytest.raises(DimensionError):
        compose_rel(a, a)


def test_eval_rel():
    for text, expect in [
        ("delta ; mu", [[1]]),
        ("gamma", [[0, 1], [1, 0]]),
        ("delta ; delta * id:1 ; id:1 * mu", [[1, 1]]),
    ]:
        got = eval_rel(parse_term(text, R))
        assert got == Rel.from_rows(expect), "Term: %s, Got: %s" % (text, got)

    # the qualitative relation holds in rel and fails in mrel
    t = parse_term("delta ; mu", R)
    assert eval_rel(t) == eval_rel(parse_term("id:1", R))
    assert eval_mrel(t, R) != eval_mrel(parse_term("id:1", R), R)


def test_eval_rel_unsupported():
    with pytest.raises(UnsupportedTheoryError):
        eval_rel(parse_term("mu", builtin_theory("M")), builtin_theory("M"))


def test_rel_text():
    r = Rel.from_rows([[1, 0], [1, 1]])
    assert format_rel(r) == "2 2\n1 0;1 1"
    assert parse_rel("2 2\n1 0;1 1") == r
    with pytest.raises(DimensionError):
        parse_rel("1 1\n2")


def test_normalize_rel():
    for text, expect in [
        ("W0 W0 E H Z", "W0 E H Z"),
        ("W0 W1 W0 E H H Z", "W1 W0 E H H Z"),
        ("H W0 E H Z", "W1 E H H Z"),
    ]:
        word = parse_word_mrel(text)
        got = normalize_word_rel(word)
        assert format_word_mrel(got) == expect, text
        assert word_eval_rel(got) == word_eval_rel(word)


def test_encode_rel():
    assert format_word_mrel(encode_rel(Rel.from_rows([[1]]))) == "W0 E H Z"
    for r in enumerate_rel(2, 2):
        word = encode_rel(r)
        assert word_eval_rel(word) == r
        assert normalize_word_rel(word) == word


def test_canonical_words_rel():
    for m, n in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        words = enumerate_canonical_words_rel(m, n)
        assert len(words) == 2 ** (m * n)
        assert {word_eval_rel(w) for w in words} == set(enumerate_rel(m, n))


def test_word_to_term_rel():
    for text in ["W0 E H Z", "W1 E W0 E H H Z", "E H Z"]:
        word = parse_word_mrel(text)
        assert eval_rel(word_to_term_rel(word)) == word_eval_rel(word)
