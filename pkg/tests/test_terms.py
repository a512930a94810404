# coding: utf-8
#

import random

import pytest

from monopres.catalog import builtin_theory
from monopres.exceptions import (CrossingUnavailableError, TermSyntaxError,
                                 TermTypeError, UnknownGeneratorError)
from monopres.terms import (Compose, Generator, Identity, Slice, Tensor,
                            boundary, from_slices, parse_term, print_term,
                            random_term, reverse_stairs, size, slice_form,
                            stairs)

B = builtin_theory("B")
G = builtin_theory("G")


def test_parse_term():
    t = parse_term("(eta * id:1) ; mu", B)
    assert t == Compose(Tensor(Generator("eta"), Identity(("1",))), Generator("mu"))

    # ";" binds looser than "*", both to the left
    t = parse_term("mu * eta ; mu", B)
    assert t == Compose(Tensor(Generator("mu"), Generator("eta")), Generator("mu"))
    t = parse_term("delta ; mu ; delta", B)
    assert t == Compose(Compose(Generator("delta"), Generator("mu")), Generator("delta"))

    assert parse_term("id(OP)", G) == Identity(("O", "P"))
    assert parse_term("id(I)", G) == Identity(())


def test_parse_term_errors():
    for text in ["", "mu ;", "(mu", "mu )", "mu $ eta"]:
        with pytest.raises(TermSyntaxError):
            parse_term(text, B)

    with pytest.raises(UnknownGeneratorError):
        parse_term("mu ; nu", B)
    # id:n only makes sense over a single atomic type
    with pytest.raises(TermSyntaxError):
        parse_term("id:2", G)

    with pytest.raises(TermSyntaxError) as excinfo:
        parse_term("mu ; ?", B)
    assert excinfo.value.position == 5
    assert "position 5" in str(excinfo.value)


def test_print_term():
    for text in [
        "(eta * id:1) ; mu",
        "delta ; mu",
        "mu * id:1 ; mu",
        "id:1 * (mu * id:1)",
        "id:0",
    ]:
        t = parse_term(text, B)
        assert parse_term(print_term(t, B), B) == t

    assert print_term(parse_term("(eta * id:1) ; mu", B), B) == "eta * id:1 ; mu"
    assert print_term(Identity(("O",)), G) == "id(O)"
    assert print_term(Identity(()), G) == "id(I)"


def test_boundary():
    for text, expect in [
        ("mu", (2, 1)),
        ("eta", (0, 1)),
        ("delta ; mu", (1, 1)),
        ("mu * eps", (3, 1)),
        ("id:3", (3, 3)),
        ("(eta * id:1) ; mu", (1, 1)),
    ]:
        src, tgt = boundary(parse_term(text, B), B)
        assert (len(src), len(tgt)) == expect, text

    with pytest.raises(TermTypeError):
        boundary(parse_term("mu ; mu", B), B)
    with pytest.raises(TermTypeError):
        boundary(parse_term("etaO ; muP", G), G)


def test_size():
    assert size(parse_term("id:4", B)) == 0
    assert size(parse_term("(mu * id:1) ; mu", B)) == 2
    assert size(parse_term("delta ; gamma ; mu * eta", B)) == 4


def test_slice_form():
    t = parse_term("(mu * eta) ; delta * id:1", B)
    slices = slice_form(t, B)
    assert slices == [
        Slice((), "mu", ()),
        Slice(("1",), "eta", ()),
        Slice((), "delta", ("1",)),
    ]
    again = from_slices(slices, ("1", "1"))
    assert boundary(again, B) == boundary(t, B)
    assert from_slices([], ("1",)) == Identity(("1",))


def test_slice_form_tensor():
    # the top factor is whiskered by the source of the bottom one
    t = parse_term("mu * delta", B)
    assert slice_form(t, B) == [
        Slice((), "mu", ("1",)),
        Slice(("1",), "delta", ()),
    ]


def test_stairs():
    one = "1"
    assert stairs(B, one, ()) == Identity((one,))
    t = stairs(B, one, (one, one))
    assert size(t) == 2
    assert boundary(t, B) == ((one,) * 3, (one,) * 3)
    assert [s.gen for s in slice_form(t, B)] == ["gamma", "gamma"]

    t = reverse_stairs(B, (one, one), one)
    assert size(t) == 2

    t = stairs(G, "P", ("O", "O"))
    assert boundary(t, G) == (("P", "O", "O"), ("O", "O", "P"))
    with pytest.raises(CrossingUnavailableError):
        stairs(G, "O", ("P",))
    with pytest.raises(CrossingUnavailableError):
        stairs(builtin_theory("M"), "1", ("1",))


def test_random_term():
    rng = random.Random(3)
    for _ in range(20):
        t = random_term(B, ("1", "1"), 5, rng)
        src, _ = boundary(t, B)
        assert src == ("1", "1")
        assert size(t) <= 5
