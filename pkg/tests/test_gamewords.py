# coding: utf-8
#

import pytest

from monopres.exceptions import CycleError, WordSyntaxError, WordTypeError
from monopres.games import (GENERATOR_NAMES, enumerate_strategies, eval_games,
                            generator_strategy, make_strategy, parse_game)
from monopres.gamewords import (GameLetter, Z, apply_letter, encode_strategy,
                                format_gameword, gameword_eval,
                                gameword_to_term, parse_gameword)


def test_parse_gameword():
    word = parse_gameword("A0 W^P0 E^P H^P Z")
    assert word == (GameLetter("A", "", 0), GameLetter("W", "P", 0),
                    GameLetter("E", "P"), GameLetter("H", "P"), Z)
    assert format_gameword(word) == "A0 W^P0 E^P H^P Z"
    for text in ["H^P", "Z H^O", "W0 Z", "H^X Z"]:
        with pytest.raises(WordSyntaxError):
            parse_gameword(text)


def test_encode_generators():
    for name, expect in [
        ("etaOP", "A0 W^P0 E^P H^P Z"),
        ("epsOP", "B0 W^O0 E^O H^O Z"),
        ("gammaOP", "W^P1 E^P W^O0 E^O H^O H^P Z"),
        ("etaP", "H^P Z"),
        ("epsO", "E^O Z"),
    ]:
        got = format_gameword(encode_strategy(generator_strategy(name)))
        assert got == expect, "Generator: %s, Expect: %s, Got: %s" % (name, expect, got)


def test_encode_eval():
    for name in GENERATOR_NAMES:
        s = generator_strategy(name)
        word = encode_strategy(s)
        assert gameword_eval(word) == s, name
        assert eval_games(gameword_to_term(word)) == s, name

    for a, b in [("P", "P"), ("O", "O"), ("I", "OP"), ("PO", "I"), ("OP", "P")]:
        for s in enumerate_strategies(parse_game(a), parse_game(b)):
            assert gameword_eval(encode_strategy(s)) == s


def test_distinct_encodings():
    strategies = enumerate_strategies(parse_game("P"), parse_game("OP"))
    words = {encode_strategy(s) for s in strategies}
    assert len(words) == len(strategies)


def test_apply_letter_errors():
    # W^P needs both ends to be P
    with pytest.raises(WordTypeError):
        gameword_eval(parse_gameword("W^P0 E^O H^P Z"))
    with pytest.raises(WordTypeError):
        gameword_eval(parse_gameword("W^P0 W^P0 E^P H^P Z"))
    # A needs a source P with dependencies
    with pytest.raises(WordTypeError):
        gameword_eval(parse_gameword("A0 E^P Z"))
    with pytest.raises(WordTypeError):
        gameword_eval((GameLetter("H", "P"),))


def test_apply_letter_cycle():
    # the target order P before O already loops with t1->t0
    s = make_strategy("P", "PO", [("t1", "t0")])
    with pytest.raises(CycleError):
        apply_letter(GameLetter("W", "P", 0), s)
