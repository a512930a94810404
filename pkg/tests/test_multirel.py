# coding: utf-8
#

import pytest

from monopres.catalog import builtin_theory
from monopres.exceptions import (DimensionError, FormatError, TermTypeError,
                                 WordSyntaxError, WordTypeError)
from monopres.multirel import (RULES_B, E, H, MonotoneMap, MultiRel, W, Z,
                               compose_mrel, encode_mrel,
                               enumerate_canonical_words_mrel, enumerate_monotone,
                               enumerate_mrel, equiv_B, eval_monotone, eval_mrel,
                               format_matrix, format_word_mrel, is_normal,
                               normalize_word_mrel, parse_mrel, parse_word_mrel,
                               reachable_monotone, rewrite_successors, tensor_mrel,
                               word_eval_mrel, word_measure, word_to_term_mrel,
                               word_type)
from monopres.terms import parse_term

B = builtin_theory("B")
M = builtin_theory("M")


def mrel(rows, cols=None):
    return MultiRel.from_rows(rows, cols)


def test_eval_mrel():
    for text, expect in [
        ("delta ; mu", mrel([[2]])),
        ("mu", mrel([[1], [1]])),
        ("delta", mrel([[1, 1]])),
        ("eta", mrel([], 1)),
        ("eps", mrel([[]], 0)),
        ("gamma", mrel([[0, 1], [1, 0]])),
        ("id:2", MultiRel.identity(2)),
        ("delta ; delta * id:1 ; id:1 * mu", mrel([[1, 2]])),
        ("(delta ; mu) ; (delta ; mu)", mrel([[4]])),
        ("eta ; eps", mrel([], 0)),
    ]:
        got = eval_mrel(parse_term(text, B))
        assert got == expect, "Term: %s, Expect: %s, Got: %s" % (text, expect, got)


def test_compose_tensor():
    a = mrel([[1, 2]])
    b = mrel([[1], [3]])
    assert compose_mrel(a, b) == mrel([[7]])
    assert tensor_mrel(a, b) == mrel([[1, 2, 0], [0, 0, 1], [0, 0, 3]])
    assert compose_mrel(mrel([[]], 0), mrel([], 2)) == MultiRel.zeros(1, 2)
    with pytest.raises(DimensionError):
        compose_mrel(a, a)


def test_entries_unbounded():
    r = mrel([[2 ** 40]])
    assert compose_mrel(r, r) == mrel([[2 ** 80]])


def test_matrix_text():
    r = mrel([[1, 1], [0, 2]])
    assert format_matrix(r) == "2 2\n1 1;0 2"
    assert parse_mrel("2 2\n1 1;0 2") == r
    assert parse_mrel("2 2\n1 1\n0 2\n") == r
    assert format_matrix(mrel([[2]])) == "1 1\n2"
    assert format_matrix(mrel([], 3)) == "0 3\n"
    assert parse_mrel("0 3") == mrel([], 3)

    for text, error in [
        ("", FormatError),
        ("2\n1 1", FormatError),
        ("1 1\n-1", FormatError),
        ("1 1\nx", FormatError),
        ("2 1\n1", DimensionError),
        ("1 2\n1", DimensionError),
    ]:
        with pytest.raises(error):
            parse_mrel(text)


def test_parse_word():
    word = parse_word_mrel("W0 W0 E H Z")
    assert word == (W(0), W(0), E, H, Z)
    assert format_word_mrel(word) == "W0 W0 E H Z"
    for text in ["W0 E H", "Z H", "X Z", "W Z"]:
        with pytest.raises(WordSyntaxError):
            parse_word_mrel(text)


def test_word_type():
    for text, expect in [
        ("Z", (0, 0)),
        ("H H Z", (0, 2)),
        ("E E H Z", (2, 1)),
        ("W1 E H H Z", (1, 2)),
    ]:
        assert word_type(parse_word_mrel(text)) == expect, text

    # W needs a row and the column
    for text in ["W0 H Z", "W1 E H Z"]:
        with pytest.raises(WordTypeError):
            word_type(parse_word_mrel(text))


def test_encode_mrel():
    for rows, cols, expect in [
        ([[2]], 1, "W0 W0 E H Z"),
        ([], 0, "Z"),
        ([], 2, "H H Z"),
        ([[0, 1], [1, 0]], 2, "W1 E W0 E H H Z"),
        ([[1, 2]], 2, "W1 W1 W0 E H H Z"),
    ]:
        r = mrel(rows, cols)
        word = encode_mrel(r)
        assert format_word_mrel(word) == expect
        assert word_eval_mrel(word) == r
        assert is_normal(word)


def test_normalize():
    for text, expect in [
        ("H E Z", "E H Z"),
        ("H W0 E H Z", "W1 E H H Z"),
        ("W0 W1 E H H Z", "W1 W0 E H H Z"),
        ("W0 W0 E H Z", "W0 W0 E H Z"),
        ("E H Z", "E H Z"),
    ]:
        word = parse_word_mrel(text)
        got = format_word_mrel(normalize_word_mrel(word))
        assert got == expect, "Word: %s, Expect: %s, Got: %s" % (text, expect, got)
        assert word_eval_mrel(word) == word_eval_mrel(normalize_word_mrel(word))


def test_rewrite_successors():
    word = parse_word_mrel("H W0 E H Z")
    steps = rewrite_successors(word, RULES_B)
    assert [label for label, _ in steps] == ["HW"]
    _, after = steps[0]
    assert format_word_mrel(after) == "W1 H E H Z"
    assert word_measure(after) < word_measure(word)


def test_canonical_words_count():
    for m, n, bound in [(1, 1, 2), (1, 2, 1), (2, 2, 1), (2, 1, 2)]:
        words = enumerate_canonical_words_mrel(m, n, bound)
        assert len(words) == (bound + 1) ** (m * n)
        values = {word_eval_mrel(w) for w in words}
        assert values == set(enumerate_mrel(m, n, bound))


def test_word_to_term():
    for text in ["W0 W0 E H Z", "W1 E W0 E H H Z", "H Z", "E Z", "Z"]:
        word = parse_word_mrel(text)
        t = word_to_term_mrel(word)
        assert eval_mrel(t) == word_eval_mrel(word), text


def test_equiv_B():
    t1 = parse_term("gamma ; mu", B)
    t2 = parse_term("mu", B)
    assert equiv_B(t1, t2)
    assert not equiv_B(parse_term("delta ; mu", B), parse_term("id:1", B))
    with pytest.raises(TermTypeError):
        equiv_B(parse_term("mu", B), parse_term("id:1", B))


def test_monotone():
    assert eval_monotone(parse_term("mu", M)) == MonotoneMap(2, 1, (0, 0))
    assert eval_monotone(parse_term("(eta * id:1) ; mu", M)) == MonotoneMap(1, 1, (0,))
    assert eval_monotone(parse_term("id:1 * eta", M)) == MonotoneMap(1, 2, (0,))
    assert len(enumerate_monotone(2, 2)) == 3
    assert len(enumerate_monotone(3, 2)) == 4

    # every monotone map within the bounds is the value of an evaluated term
    reached = reachable_monotone(2, 4)
    for m in range(3):
        for n in range(3):
            values = {f for f in reached if (f.m, f.n) == (m, n)}
            assert values == set(enumerate_monotone(m, n)), (m, n)
    assert reached[MonotoneMap(2, 1, (0, 0))] == 1
    assert reached[MonotoneMap(0, 2, ())] == 2
    assert reached[MonotoneMap(1, 1, (0,))] == 0
