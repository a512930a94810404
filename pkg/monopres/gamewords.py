# coding: utf-8
#

"""Canonical words for strategies between filiform games.

Grammar ``Z | A_i w | B_i w | W^X_i w | E^X w | H^X w`` with X one of O, P.
Letters act on the strategy of the rest of the word (read right to left):

    Z       the empty strategy I→I
    H^X     a new target move X at position 0, without dependency
    E^X     a new source move X at position 0, without dependency
    W^X_i   a dependency between source move 0 and target move i, both X;
            from the source for P, from the target for O
    A_i     source move 0 (P, with dependencies) becomes target move i (O)
    B_i     target move 0 (O, with dependencies) becomes source move i (P)

Insertion depths follow the available crossings: O only passes O, so
W^O_i and A_i need target moves 0..i-1 to be O and B_i needs source moves
0..i-1 to be P.
"""

import logging
import re
from typing import FrozenSet, List, NamedTuple, Optional, Set, Tuple

from monopres._proto import OPPONENT, PROPONENT, Side
from monopres.catalog import builtin_theory
from monopres.exceptions import (CycleError, EncodingError, WordSyntaxError,
                                 WordTypeError)
from monopres.games import (Dep, Game, MoveRef, Strategy, is_acyclic, src, tgt)
from monopres.terms import (Generator, Identity, Term, compose_all,
                            reverse_stairs, size, stairs, tensor_all)
from monopres.theory import EqTheory

logger = logging.getLogger(__name__)


class GameLetter(NamedTuple):
    kind: str  # one of Z H E W A B
    polarity: str = ""
    index: int = -1

    def __str__(self):
        if self.kind == "Z":
            return "Z"
        if self.kind in ("A", "B"):
            return "%s%d" % (self.kind, self.index)
        if self.kind == "W":
            return "W^%s%d" % (self.polarity, self.index)
        return "%s^%s" % (self.kind, self.polarity)


GameWord = Tuple[GameLetter, ...]

Z = GameLetter("Z")

_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"^(?:(?P<ab>[AB])(?P<abi>\d+)|W\^(?P<wx>[OP])(?P<wi>\d+)|(?P<he>[HE])\^(?P<hex>[OP])|(?P<z>Z))$")


def parse_gameword(text: str) -> GameWord:
    """
    Raises:
        WordSyntaxError

    Examples:
        parse_gameword("A0 W^P0 E^P H^P Z")
    """
    letters = []
    for m in _TOKEN.finditer(text):
        lm = _LETTER.match(m.group())
        if not lm:
            raise WordSyntaxError("unknown letter %r" % m.group(), m.start())
        if letters and letters[-1] == Z:
            raise WordSyntaxError("Z must be the last letter", m.start())
        if lm.group("ab"):
            letters.append(GameLetter(lm.group("ab"), "", int(lm.group("abi"))))
        elif lm.group("wx"):
            letters.append(GameLetter("W", lm.group("wx"), int(lm.group("wi"))))
        elif lm.group("he"):
            letters.append(GameLetter(lm.group("he"), lm.group("hex")))
        else:
            letters.append(Z)
    if not letters or letters[-1] != Z:
        raise WordSyntaxError("a word ends with Z", len(text))
    return tuple(letters)


def format_gameword(word: GameWord) -> str:
    return " ".join(str(letter) for letter in word)


## letter actions

def _shift(deps: FrozenSet[Dep], side: Side, at: int, by: int) -> FrozenSet[Dep]:
    def _move(ref: MoveRef) -> MoveRef:
        if ref.side == side and ref.index >= at:
            return MoveRef(side, ref.index + by)
        return ref
    return frozenset((_move(a), _move(b)) for a, b in deps)


def _touching(deps: FrozenSet[Dep], ref: MoveRef) -> List[Dep]:
    return [d for d in deps if ref in d]


def _relocate(deps: FrozenSet[Dep], old: MoveRef, new: MoveRef) -> FrozenSet[Dep]:
    return frozenset(tuple(new if r == old else r for r in d) for d in deps)


def _w_dep(polarity: str, i: int) -> Dep:
    if polarity == PROPONENT:
        return (src(0), tgt(i))
    return (tgt(i), src(0))


def _check_acyclic(s: Strategy, letter: GameLetter) -> Strategy:
    if not is_acyclic(s):
        raise CycleError("%s closes a cycle in %s→%s" % (letter, s.src, s.tgt))
    return s


def apply_letter(letter: GameLetter, s: Strategy) -> Strategy:
    """
    Raises:
        WordTypeError, CycleError
    """
    kind, x, i = letter
    if kind == "H":
        return Strategy(s.src, Game((x,)) + s.tgt, _shift(s.deps, Side.TGT, 0, 1))
    if kind == "E":
        return Strategy(Game((x,)) + s.src, s.tgt, _shift(s.deps, Side.SRC, 0, 1))
    if kind == "W":
        if not len(s.src) or s.src[0] != x:
            raise WordTypeError("%s needs source move 0 to be %s in %s→%s" % (letter, x, s.src, s.tgt))
        if not 0 <= i < len(s.tgt) or s.tgt[i] != x:
            raise WordTypeError("%s needs target move %d to be %s in %s→%s" % (letter, i, x, s.src, s.tgt))
        if x == OPPONENT and any(m != OPPONENT for m in s.tgt[:i]):
            raise WordTypeError("%s needs target moves before %d to be O" % (letter, i))
        dep = _w_dep(x, i)
        if dep in s.deps:
            raise WordTypeError("%s repeats a dependency" % (letter,))
        return _check_acyclic(Strategy(s.src, s.tgt, s.deps | {dep}), letter)
    if kind == "A":
        if not len(s.src) or s.src[0] != PROPONENT or not _touching(s.deps, src(0)):
            raise WordTypeError("%s needs source move 0 to be P with dependencies" % (letter,))
        if not 0 <= i <= len(s.tgt) or any(m != OPPONENT for m in s.tgt[:i]):
            raise WordTypeError("%s needs target moves before %d to be O" % (letter, i))
        deps = _shift(s.deps, Side.TGT, i, 1)
        deps = _relocate(deps, src(0), tgt(i))
        deps = _shift(deps, Side.SRC, 1, -1)
        tgt_moves = s.tgt.moves[:i] + (OPPONENT,) + s.tgt.moves[i:]
        return _check_acyclic(Strategy(Game(s.src.moves[1:]), Game(tgt_moves), deps), letter)
    if kind == "B":
        if not len(s.tgt) or s.tgt[0] != OPPONENT or not _touching(s.deps, tgt(0)):
            raise WordTypeError("%s needs target move 0 to be O with dependencies" % (letter,))
        if not 0 <= i <= len(s.src) or any(m != PROPONENT for m in s.src[:i]):
            raise WordTypeError("%s needs source moves before %d to be P" % (letter, i))
        deps = _shift(s.deps, Side.SRC, i, 1)
        deps = _relocate(deps, tgt(0), src(i))
        deps = _shift(deps, Side.TGT, 1, -1)
        src_moves = s.src.moves[:i] + (PROPONENT,) + s.src.moves[i:]
        return _check_acyclic(Strategy(Game(src_moves), Game(s.tgt.moves[1:]), deps), letter)
    raise WordTypeError("unknown letter %r" % (letter,))


def gameword_eval(word: GameWord) -> Strategy:
    """
    Examples:
        gameword_eval(parse_gameword("A0 W^P0 E^P H^P Z")) is etaOP
    """
    if not word or word[-1] != Z or Z in word[:-1]:
        raise WordTypeError("a word has exactly one Z, at the end: %r" % format_gameword(word))
    s = Strategy(Game(), Game())
    for letter in reversed(word[:-1]):
        s = apply_letter(letter, s)
    return s


## encoding

def _remove_move(s: Strategy, ref: MoveRef) -> Strategy:
    """ drop a dependency-free move """
    deps = _shift(s.deps, ref.side, ref.index + 1, -1)
    if ref.side == Side.SRC:
        return Strategy(Game(s.src.moves[:ref.index] + s.src.moves[ref.index + 1:]), s.tgt, deps)
    return Strategy(s.src, Game(s.tgt.moves[:ref.index] + s.tgt.moves[ref.index + 1:]), deps)


def _progress_steps(s: Strategy) -> List[Tuple[GameLetter, Strategy]]:
    """ inverse W, E and H steps, in the order they are tried """
    steps = []
    if len(s.src):
        x = s.src[0]
        admissible = []
        for i in range(len(s.tgt)):
            if x == OPPONENT and any(m != OPPONENT for m in s.tgt[:i]):
                break
            if s.tgt[i] == x and _w_dep(x, i) in s.deps:
                admissible.append(i)
        if admissible:
            i = max(admissible)
            steps.append((GameLetter("W", x, i), Strategy(s.src, s.tgt, s.deps - {_w_dep(x, i)})))
        if not _touching(s.deps, src(0)):
            steps.append((GameLetter("E", x), _remove_move(s, src(0))))
    if len(s.tgt) and not _touching(s.deps, tgt(0)):
        steps.append((GameLetter("H", s.tgt[0]), _remove_move(s, tgt(0))))
    return steps


def _has_same_side_dep(s: Strategy, ref: MoveRef) -> bool:
    return any(a.side == b.side for a, b in _touching(s.deps, ref))


def _bend_steps(s: Strategy) -> List[Tuple[GameLetter, Strategy]]:
    """ inverse B then inverse A steps; moves with same-side dependencies first, then smallest depth """
    b_moves = []
    for i, m in enumerate(s.src.moves):
        if m != PROPONENT:
            break
        if _touching(s.deps, src(i)):
            b_moves.append(i)
    a_moves = []
    for i, m in enumerate(s.tgt.moves):
        if m != OPPONENT:
            break
        if _touching(s.deps, tgt(i)):
            a_moves.append(i)
    b_moves.sort(key=lambda i: (not _has_same_side_dep(s, src(i)), i))
    a_moves.sort(key=lambda i: (not _has_same_side_dep(s, tgt(i)), i))

    steps = []
    for i in b_moves:
        # source move i (P) goes back to target move 0 (O)
        deps = _shift(s.deps, Side.TGT, 0, 1)
        deps = _relocate(deps, src(i), tgt(0))
        deps = _shift(deps, Side.SRC, i + 1, -1)
        prev = Strategy(Game(s.src.moves[:i] + s.src.moves[i + 1:]), Game((OPPONENT,)) + s.tgt, deps)
        if is_acyclic(prev):
            steps.append((GameLetter("B", "", i), prev))
    for i in a_moves:
        # target move i (O) goes back to source move 0 (P)
        deps = _shift(s.deps, Side.SRC, 0, 1)
        deps = _relocate(deps, tgt(i), src(0))
        deps = _shift(deps, Side.TGT, i + 1, -1)
        prev = Strategy(Game((PROPONENT,)) + s.src, Game(s.tgt.moves[:i] + s.tgt.moves[i + 1:]), deps)
        if is_acyclic(prev):
            steps.append((GameLetter("A", "", i), prev))
    return steps


def encode_strategy(s: Strategy) -> GameWord:
    """
    Deterministic depth-first search over inverse letters: W (greatest
    admissible target), E and H first, then the bends B and A. A state
    already on the current path is skipped.

    Raises:
        EncodingError
    """
    on_path: Set[Strategy] = set()

    def _search(state: Strategy) -> Optional[List[GameLetter]]:
        if not len(state.src) and not len(state.tgt):
            return [Z]
        on_path.add(state)
        try:
            for letter, prev in _progress_steps(state) + _bend_steps(state):
                if prev in on_path:
                    continue
                rest = _search(prev)
                if rest is not None:
                    return [letter] + rest
            return None
        finally:
            on_path.discard(state)

    letters = _search(s)
    if letters is None:
        raise EncodingError("no canonical word reaches %s→%s with %d deps" % (s.src, s.tgt, s.size))
    word = tuple(letters)
    logger.debug("encode %s→%s: %s", s.src, s.tgt, format_gameword(word))
    return word


## terms

def gameword_to_term(word: GameWord, theory: Optional[EqTheory] = None) -> Term:
    """
    Expand a word into a term over G; the contract is
    eval_games(gameword_to_term(w)) == gameword_eval(w)
    """
    theory = theory or builtin_theory("G")
    sig = theory.signature
    states = [Strategy(Game(), Game())]
    for letter in reversed(word[:-1]):
        states.append(apply_letter(letter, states[-1]))
    states.reverse()  # states[k] is the strategy of word[k:]

    def _id(moves) -> Term:
        return Identity(tuple(moves))

    def _chain(steps: List[Term], source) -> Term:
        return compose_all([t for t in steps if size(t) > 0], tuple(source))

    def _expand(k: int) -> Term:
        letter = word[k]
        if letter.kind == "Z":
            return Identity(())
        inner = _expand(k + 1)
        prev = states[k + 1]
        a, b = prev.src.moves, prev.tgt.moves
        x, i = letter.polarity, letter.index
        if letter.kind == "H":
            return _chain([inner, tensor_all([Generator("eta" + x), _id(b)])], a)
        if letter.kind == "E":
            return _chain([tensor_all([Generator("eps" + x), _id(a)]), inner], (x,) + a)
        if letter.kind == "W":
            rest = a[1:]
            return _chain([
                tensor_all([Generator("delta" + x), _id(rest)]),
                tensor_all([_id((x,)), inner]),
                tensor_all([stairs(sig, x, b[:i]), _id(b[i:])]),
                tensor_all([_id(b[:i]), Generator("mu" + x), _id(b[i + 1:])]),
            ], a)
        if letter.kind == "A":
            rest = a[1:]
            return _chain([
                tensor_all([Generator("etaOP"), _id(rest)]),
                tensor_all([_id((OPPONENT,)), inner]),
                tensor_all([stairs(sig, OPPONENT, b[:i]), _id(b[i:])]),
            ], rest)
        if letter.kind == "B":
            rest = b[1:]
            return _chain([
                tensor_all([reverse_stairs(sig, a[:i], PROPONENT), _id(a[i:])]),
                tensor_all([_id((PROPONENT,)), inner]),
                tensor_all([Generator("epsOP"), _id(rest)]),
            ], a[:i] + (PROPONENT,) + a[i:])
        raise WordTypeError("unknown letter %r" % (letter,))

    return _expand(0)
