# coding: utf-8
#

"""Filiform games and first-order causality strategies.

A game is a word over O (Opponent) and P (Proponent), played left to right.
A strategy A→B is a set of dependencies between moves of A and B: a move
of arena polarity -1 justifies a move of arena polarity +1. Source moves
have their polarity inverted in the arena.
"""

import dataclasses
import logging
import random
import re
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from monopres._proto import EMPTY_WORD, OPPONENT, PROPONENT, Polarity, Side
from monopres.abstract import AbstractModel
from monopres.catalog import builtin_theory
from monopres.exceptions import (BoundExceededError, FormatError,
                                 GameMismatchError, MoveRangeError,
                                 UnknownGeneratorError, WordSyntaxError)
from monopres.terms import Term
from monopres.theory import EqTheory, TypeWord, parse_type_word

logger = logging.getLogger(__name__)

GAME_ATOMS = (OPPONENT, PROPONENT)


@dataclasses.dataclass(frozen=True)
class Game:
    moves: Tuple[str, ...] = ()

    def __post_init__(self):
        for m in self.moves:
            if m not in GAME_ATOMS:
                raise WordSyntaxError("a game is a word over O and P, got %r" % m)

    def __len__(self):
        return len(self.moves)

    def __getitem__(self, index):
        return self.moves[index]

    def __add__(self, other: "Game") -> "Game":
        return Game(self.moves + other.moves)

    def __str__(self):
        return "".join(self.moves) or EMPTY_WORD


def parse_game(text: str) -> Game:
    """
    Examples:
        parse_game("OP"), parse_game("I")
    """
    return Game(parse_type_word(text, GAME_ATOMS))


class MoveRef(NamedTuple):
    side: Side
    index: int

    def __str__(self):
        return "(%s,%d)" % (self.side.value, self.index)


def src(i: int) -> MoveRef:
    return MoveRef(Side.SRC, i)


def tgt(i: int) -> MoveRef:
    return MoveRef(Side.TGT, i)


Dep = Tuple[MoveRef, MoveRef]


@dataclasses.dataclass(frozen=True)
class Strategy:
    src: Game
    tgt: Game
    deps: FrozenSet[Dep] = frozenset()

    @property
    def size(self) -> int:
        return len(self.deps)

    def sorted_deps(self) -> List[Dep]:
        return sorted(self.deps)

    def __str__(self):
        return format_strategy(self)


def make_strategy(src_text: str, tgt_text: str, deps: Iterable[Tuple[str, str]] = ()) -> Strategy:
    """
    Examples:
        make_strategy("PP", "P", [("s0", "t0"), ("s1", "t0")])
    """
    def _ref(text: str) -> MoveRef:
        side = Side.SRC if text[0] == "s" else Side.TGT
        return MoveRef(side, int(text[1:]))

    return Strategy(parse_game(src_text), parse_game(tgt_text),
                    frozenset((_ref(a), _ref(b)) for a, b in deps))


def move_letter(s: Strategy, ref: MoveRef) -> str:
    g = s.src if ref.side == Side.SRC else s.tgt
    if not 0 <= ref.index < len(g):
        raise MoveRangeError("move %s out of range for %s→%s" % (ref, s.src, s.tgt))
    return g[ref.index]


def arena_polarity(s: Strategy, ref: MoveRef) -> Polarity:
    """ source moves are inverted, target moves keep their polarity """
    p = Polarity.of_letter(move_letter(s, ref))
    if ref.side == Side.SRC:
        return Polarity(-p)
    return p


def _moves(s: Strategy) -> List[MoveRef]:
    return [src(i) for i in range(len(s.src))] + [tgt(j) for j in range(len(s.tgt))]


def causal_graph(s: Strategy) -> nx.DiGraph:
    """ game orders plus dependencies """
    g = nx.DiGraph()
    g.add_nodes_from(_moves(s))
    g.add_edges_from((src(i), src(i + 1)) for i in range(len(s.src) - 1))
    g.add_edges_from((tgt(j), tgt(j + 1)) for j in range(len(s.tgt) - 1))
    g.add_edges_from(s.deps)
    return g


def check_strategy(s: Strategy) -> List[str]:
    """
    Returns:
        violation messages, empty for a valid strategy

    Raises:
        MoveRangeError
    """
    violations = []
    for a, b in sorted(s.deps):
        pa, pb = arena_polarity(s, a), arena_polarity(s, b)
        if pa != Polarity.OPPONENT or pb != Polarity.PROPONENT:
            violations.append("polarity: %s->%s links %s to %s" % (a, b, _sign(pa), _sign(pb)))
    try:
        cycle = nx.find_cycle(causal_graph(s))
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        path = [str(u) for u, _ in cycle] + [str(cycle[0][0])]
        violations.append("cycle: %s" % " -> ".join(path))
    return violations


def _sign(p: Polarity) -> str:
    return "+" if p == Polarity.PROPONENT else "-"


def is_acyclic(s: Strategy) -> bool:
    return nx.is_directed_acyclic_graph(causal_graph(s))


# nodes of a composition: ("A", i) source of s, ("B", j) middle game, ("C", k) target of t

def left_node(ref: MoveRef) -> Tuple[str, int]:
    return ("A" if ref.side == Side.SRC else "B", ref.index)


def right_node(ref: MoveRef) -> Tuple[str, int]:
    return ("B" if ref.side == Side.SRC else "C", ref.index)


def composition_graph(s: Strategy, t: Strategy) -> nx.DiGraph:
    """
    Dependencies of s and t glued along the middle game; game orders are left out

    Raises:
        GameMismatchError
    """
    if s.tgt != t.src:
        raise GameMismatchError("cannot compose %s→%s with %s→%s" % (s.src, s.tgt, t.src, t.tgt))
    g = nx.DiGraph()
    g.add_edges_from((left_node(a), left_node(b)) for a, b in s.deps)
    g.add_edges_from((right_node(a), right_node(b)) for a, b in t.deps)
    return g


def outer_moves(s: Strategy, t: Strategy) -> Dict[Tuple[str, int], MoveRef]:
    outer = {("A", i): src(i) for i in range(len(s.src))}
    outer.update({("C", k): tgt(k) for k in range(len(t.tgt))})
    return outer


def compose_strategies(s: Strategy, t: Strategy) -> Strategy:
    """
    s then t: reachability through the dependencies of both strategies,
    restricted to the outer games

    Raises:
        GameMismatchError
    """
    g = composition_graph(s, t)
    result = Strategy(s.src, t.tgt)
    outer = outer_moves(s, t)
    deps = set()
    for node, ref in outer.items():
        if node not in g or arena_polarity(result, ref) != Polarity.OPPONENT:
            continue
        for other in nx.descendants(g, node):
            if other in outer and arena_polarity(result, outer[other]) == Polarity.PROPONENT:
                deps.add((ref, outer[other]))
    logger.debug("compose %d deps with %d deps through %s: %d deps", s.size, t.size, s.tgt, len(deps))
    return Strategy(s.src, t.tgt, frozenset(deps))


def identity_strategy(a: Game) -> Strategy:
    """ copycat: the Opponent instance of each move justifies its Proponent instance """
    deps = []
    for i, letter in enumerate(a.moves):
        if letter == PROPONENT:
            deps.append((src(i), tgt(i)))
        else:
            deps.append((tgt(i), src(i)))
    return Strategy(a, a, frozenset(deps))


def before_game(a: Game, b: Game) -> Game:
    return a + b


def _shift_ref(ref: MoveRef, src_offset: int, tgt_offset: int) -> MoveRef:
    if ref.side == Side.SRC:
        return src(ref.index + src_offset)
    return tgt(ref.index + tgt_offset)


def before_strategy(s: Strategy, t: Strategy) -> Strategy:
    """ s ⊲ t, all moves of s come before those of t """
    shifted = {(_shift_ref(a, len(s.src), len(s.tgt)), _shift_ref(b, len(s.src), len(s.tgt)))
               for a, b in t.deps}
    return Strategy(s.src + t.src, s.tgt + t.tgt, s.deps | frozenset(shifted))


_GENERATOR_TABLE: Dict[str, Tuple[str, str, Tuple[Tuple[str, str], ...]]] = {
    "muO": ("OO", "O", (("t0", "s0"), ("t0", "s1"))),
    "etaO": ("I", "O", ()),
    "deltaO": ("O", "OO", (("t0", "s0"), ("t1", "s0"))),
    "epsO": ("O", "I", ()),
    "gammaO": ("OO", "OO", (("t1", "s0"), ("t0", "s1"))),
    "muP": ("PP", "P", (("s0", "t0"), ("s1", "t0"))),
    "etaP": ("I", "P", ()),
    "deltaP": ("P", "PP", (("s0", "t0"), ("s0", "t1"))),
    "epsP": ("P", "I", ()),
    "gammaP": ("PP", "PP", (("s0", "t1"), ("s1", "t0"))),
    "gammaOP": ("PO", "OP", (("s0", "t1"), ("t0", "s1"))),
    "etaOP": ("I", "OP", (("t0", "t1"),)),
    "epsOP": ("PO", "I", (("s0", "s1"),)),
}

GENERATOR_NAMES = tuple(_GENERATOR_TABLE)


def generator_strategy(name: str) -> Strategy:
    """
    Raises:
        UnknownGeneratorError
    """
    if name not in _GENERATOR_TABLE:
        raise UnknownGeneratorError("no strategy for generator %r" % name)
    src_text, tgt_text, deps = _GENERATOR_TABLE[name]
    return make_strategy(src_text, tgt_text, deps)


def enumerate_games(max_length: int) -> List[Game]:
    games = [Game()]
    frontier = [Game()]
    for _ in range(max_length):
        frontier = [g + Game((letter,)) for g in frontier for letter in GAME_ATOMS]
        games.extend(frontier)
    return games


def candidate_deps(src_game: Game, tgt_game: Game) -> List[Dep]:
    """ every pair from an arena -1 move to an arena +1 move """
    probe = Strategy(src_game, tgt_game)
    moves = _moves(probe)
    negative = [m for m in moves if arena_polarity(probe, m) == Polarity.OPPONENT]
    positive = [m for m in moves if arena_polarity(probe, m) == Polarity.PROPONENT]
    return [(a, b) for a in negative for b in positive]


def enumerate_strategies(src_game: Game, tgt_game: Game, max_moves: int = 10) -> List[Strategy]:
    """
    All strategies src_game→tgt_game; acyclicity is closed under subsets so
    the search drops a dependency as soon as it closes a cycle

    Raises:
        BoundExceededError
    """
    if len(src_game) + len(tgt_game) > max_moves:
        raise BoundExceededError("%d moves exceed the enumeration bound %d" % (
            len(src_game) + len(tgt_game), max_moves))
    candidates = candidate_deps(src_game, tgt_game)
    g = causal_graph(Strategy(src_game, tgt_game))
    results = []

    def _search(pos: int, chosen: List[Dep]):
        if pos == len(candidates):
            results.append(Strategy(src_game, tgt_game, frozenset(chosen)))
            return
        _search(pos + 1, chosen)
        a, b = candidates[pos]
        if not nx.has_path(g, b, a):
            # a dep may coincide with a game-order edge, which must survive the backtrack
            present = g.has_edge(a, b)
            g.add_edge(a, b)
            chosen.append((a, b))
            _search(pos + 1, chosen)
            chosen.pop()
            if not present:
                g.remove_edge(a, b)

    _search(0, [])
    return results


def random_strategy(src_game: Game, tgt_game: Game, rng: random.Random, p: float = 0.3) -> Strategy:
    """
    Each candidate dep is drawn with probability p, in a shuffled order;
    a drawn dep that would close a cycle is rejected and the draw goes on
    """
    candidates = candidate_deps(src_game, tgt_game)
    rng.shuffle(candidates)
    g = causal_graph(Strategy(src_game, tgt_game))
    chosen = []
    for a, b in candidates:
        if rng.random() >= p:
            continue
        if nx.has_path(g, b, a):
            logger.debug("drop %s->%s, it closes a cycle", a, b)
            continue
        g.add_edge(a, b)
        chosen.append((a, b))
    return Strategy(src_game, tgt_game, frozenset(chosen))


def random_game(max_length: int, rng: random.Random) -> Game:
    return Game(tuple(rng.choice(GAME_ATOMS) for _ in range(rng.randint(0, max_length))))


## strategy text form

_DEP_LINE = re.compile(r"^\(\s*(src|tgt)\s*,\s*(\d+)\s*\)\s*->\s*\(\s*(src|tgt)\s*,\s*(\d+)\s*\)$")


def format_strategy(s: Strategy) -> str:
    lines = [str(s.src), str(s.tgt)]
    lines.extend("%s->%s" % (a, b) for a, b in s.sorted_deps())
    return "\n".join(lines)


def parse_strategy(text: str) -> Strategy:
    """
    Raises:
        FormatError
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if len(lines) < 2:
        raise FormatError("a strategy needs a source and a target game")
    deps = set()
    for line in lines[2:]:
        m = _DEP_LINE.match(line)
        if not m:
            raise FormatError("malformed dependency %r" % line)
        deps.add((MoveRef(Side(m.group(1)), int(m.group(2))), MoveRef(Side(m.group(3)), int(m.group(4)))))
    return Strategy(parse_game(lines[0]), parse_game(lines[1]), frozenset(deps))


## model

# theory D through L -> P, R -> O
_DUAL_ATOMS = {"L": PROPONENT, "R": OPPONENT}
_DUAL_GENERATORS = {"cup": "etaOP", "cap": "epsOP"}


class GamesModel(AbstractModel):
    name = "games"
    theories = ("G", "D")

    def identity(self, word: TypeWord) -> Strategy:
        return identity_strategy(Game(tuple(_DUAL_ATOMS.get(a, a) for a in word)))

    def generator(self, name: str) -> Strategy:
        return generator_strategy(_DUAL_GENERATORS.get(name, name))

    def compose(self, f: Strategy, g: Strategy) -> Strategy:
        return compose_strategies(f, g)

    def tensor(self, f: Strategy, g: Strategy) -> Strategy:
        return before_strategy(f, g)

    def format(self, value: Strategy) -> str:
        return format_strategy(value)


def eval_games(t: Term, theory: Optional[EqTheory] = None) -> Strategy:
    """
    Examples:
        eval_games(parse_term("etaOP ; (epsO * id(P))", G)) is the empty strategy I→P
    """
    return GamesModel().evaluate(t, theory or builtin_theory("G"))
