# coding: utf-8
#

"""Multirelations between finite ordinals and their canonical words.

A multirelation m→n is an m×n matrix of naturals; composition is the matrix
product and the tensor is the block diagonal sum. Canonical words follow the
grammar ``Z | W_i w | E w | H w`` and are read right to left:

    Z       the empty multirelation 0→0
    H w     adds a zero column at index 0
    E w     adds a zero row at index 0
    W_i w   increments entry (0, i)
"""

import itertools
import logging
import re
from typing import (Callable, Dict, Iterator, List, NamedTuple, Optional,
                    Sequence, Tuple)

import numpy as np

from monopres.abstract import AbstractModel
from monopres.catalog import builtin_theory
from monopres.exceptions import (DimensionError, FormatError, TermTypeError,
                                 UnknownGeneratorError, WordSyntaxError,
                                 WordTypeError)
from monopres.terms import (Generator, Identity, Slice, Term, boundary, compose_all, from_slices, size,
                            stairs, tensor_all)
from monopres.theory import EqTheory, TypeWord, as_signature
from monopres.utils import count_inversions

logger = logging.getLogger(__name__)


class MultiRel(object):
    """ m×n matrix of naturals, entries are python ints (unbounded) """
    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        if entries.ndim != 2:
            raise DimensionError("a multirelation is a 2-dimensional matrix")
        self.entries = entries

    @classmethod
    def zeros(cls, m: int, n: int) -> "MultiRel":
        return cls(np.zeros((m, n), dtype=object))

    @classmethod
    def identity(cls, n: int) -> "MultiRel":
        r = cls.zeros(n, n)
        for i in range(n):
            r.entries[i, i] = 1
        return r

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "MultiRel":
        """
        Args:
            rows: list of rows
            cols: column count, needed when rows is empty

        Raises:
            DimensionError: ragged rows
            ValueError: negative entries
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        r = cls.zeros(len(rows), cols)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError("row %d has %d entries, expect %d" % (i, len(row), cols))
            for j, v in enumerate(row):
                if int(v) < 0:
                    raise ValueError("negative entry", v)
                r.entries[i, j] = int(v)
        return r

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def to_lists(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.entries.tolist()]

    def __eq__(self, other):
        if not isinstance(other, MultiRel):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.shape, tuple(self.entries.flat)))

    def __repr__(self):
        return "MultiRel(%d×%d, %s)" % (self.rows, self.cols, self.to_lists())


def compose_mrel(r1: MultiRel, r2: MultiRel) -> MultiRel:
    """
    r1 then r2, the matrix product over (ℕ, +, ×)

    Raises:
        DimensionError
    """
    if r1.cols != r2.rows:
        raise DimensionError("cannot compose %d×%d with %d×%d" % (r1.rows, r1.cols, r2.rows, r2.cols))
    if r1.cols == 0:
        return MultiRel.zeros(r1.rows, r2.cols)
    return MultiRel(np.dot(r1.entries, r2.entries))


def block_diagonal(a: np.ndarray, b: np.ndarray, dtype) -> np.ndarray:
    m1, n1 = a.shape
    m2, n2 = b.shape
    out = np.zeros((m1 + m2, n1 + n2), dtype=dtype)
    out[:m1, :n1] = a
    out[m1:, n1:] = b
    return out


def tensor_mrel(r1: MultiRel, r2: MultiRel) -> MultiRel:
    return MultiRel(block_diagonal(r1.entries, r2.entries, object))


def cardinal(r: MultiRel) -> int:
    return sum(int(v) for v in r.entries.flat)


def enumerate_mrel(m: int, n: int, max_entry: int) -> Iterator[MultiRel]:
    for values in itertools.product(range(max_entry + 1), repeat=m * n):
        rows = [values[i * n:(i + 1) * n] for i in range(m)]
        yield MultiRel.from_rows(rows, n)


## matrix text form: "m n" header, rows separated by ";"

def format_matrix(r) -> str:
    """ works for MultiRel and Rel """
    m, n = r.entries.shape
    body = ";".join(" ".join(str(int(v)) for v in row) for row in r.entries.tolist())
    if m * n == 0:
        body = ""
    return "%d %d\n%s" % (m, n, body)


def parse_matrix(text: str) -> Tuple[int, int, List[List[int]]]:
    """
    Raises:
        FormatError, DimensionError
    """
    lines = [line.strip() for line in text.strip().splitlines()]
    if not lines or not lines[0]:
        raise FormatError("empty matrix", 0)
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise FormatError("matrix header must be 'm n', got %r" % lines[0], 0)
    m, n = int(header[0]), int(header[1])
    body = ";".join(line for line in lines[1:] if line)
    rows = [row.split() for row in body.split(";") if row.strip()]
    if m * n == 0:
        if rows:
            raise DimensionError("matrix %d×%d has no entries" % (m, n))
        return m, n, [[] for _ in range(m)]
    if len(rows) != m:
        raise DimensionError("expect %d rows, got %d" % (m, len(rows)))
    result = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DimensionError("row %d has %d entries, expect %d" % (i, len(row), n))
        try:
            values = [int(v) for v in row]
        except ValueError:
            raise FormatError("non integer entry in row %d: %r" % (i, " ".join(row)))
        if any(v < 0 for v in values):
            raise FormatError("negative entry in row %d" % i)
        result.append(values)
    return m, n, result


def parse_mrel(text: str) -> MultiRel:
    m, n, rows = parse_matrix(text)
    return MultiRel.from_rows(rows, n)


## canonical words

class Letter(NamedTuple):
    kind: str  # one of Z W E H
    index: int = -1

    def __str__(self):
        if self.kind == "W":
            return "W%d" % self.index
        return self.kind


Z = Letter("Z")
E = Letter("E")
H = Letter("H")


def W(i: int) -> Letter:
    return Letter("W", i)


MrelWord = Tuple[Letter, ...]

_WORD_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"^(?:W(?P<index>\d+)|(?P<kind>[ZEH]))$")

RULES_B = ("HW", "HE", "WW")
RULES_R = RULES_B + ("WWi",)

RULE_TEXT = {
    "HW": "H W_i => W_i+1 H",
    "HE": "H E => E H",
    "WW": "W_i W_j => W_j W_i when i<j",
    "WWi": "W_i W_i => W_i",
}


def parse_word_mrel(text: str) -> MrelWord:
    """
    Raises:
        WordSyntaxError

    Examples:
        parse_word_mrel("W0 W0 E H Z")
    """
    letters = []
    for m in _WORD_TOKEN.finditer(text):
        lm = _LETTER.match(m.group())
        if not lm:
            raise WordSyntaxError("unknown letter %r" % m.group(), m.start())
        if letters and letters[-1] == Z:
            raise WordSyntaxError("Z must be the last letter", m.start())
        if lm.group("index") is not None:
            letters.append(W(int(lm.group("index"))))
        else:
            letters.append(Letter(lm.group("kind")))
    if not letters or letters[-1] != Z:
        raise WordSyntaxError("a word ends with Z", len(text))
    return tuple(letters)


def format_word_mrel(word: MrelWord) -> str:
    return " ".join(str(letter) for letter in word)


def word_type(word: MrelWord) -> Tuple[int, int]:
    """
    Boundary m→n of a word

    Raises:
        WordTypeError
    """
    if not word or word[-1] != Z or Z in word[:-1]:
        raise WordTypeError("a word has exactly one Z, at the end: %r" % format_word_mrel(word))
    m, n = 0, 0
    for letter in reversed(word[:-1]):
        if letter.kind == "H":
            n += 1
        elif letter.kind == "E":
            m += 1
        elif letter.kind == "W":
            if m < 1 or not 0 <= letter.index < n:
                raise WordTypeError("%s is not applicable to a %d→%d word" % (letter, m, n))
        else:
            raise WordTypeError("unknown letter %r" % (letter,))
    return m, n


def evaluate_letters(word: MrelWord, dtype, bump: Callable) -> np.ndarray:
    """ letter actions read right to left; bump updates entry (0, i) """
    word_type(word)
    arr = np.zeros((0, 0), dtype=dtype)
    for letter in reversed(word[:-1]):
        m, n = arr.shape
        if letter.kind == "H":
            arr = np.hstack([np.zeros((m, 1), dtype=dtype), arr])
        elif letter.kind == "E":
            arr = np.vstack([np.zeros((1, n), dtype=dtype), arr])
        else:
            arr[0, letter.index] = bump(arr[0, letter.index])
    return arr


def word_eval_mrel(word: MrelWord) -> MultiRel:
    return MultiRel(evaluate_letters(word, object, lambda v: v + 1))


def encode_rows(rows: List[List[int]], cols: int) -> MrelWord:
    """ the greedy canonical word of a matrix given by rows """
    letters = []
    for row in rows:
        row = list(row)
        while any(row):
            k = max(i for i, v in enumerate(row) if v > 0)
            letters.append(W(k))
            row[k] -= 1
        letters.append(E)
    letters.extend([H] * cols)
    letters.append(Z)
    return tuple(letters)


def encode_mrel(r: MultiRel) -> MrelWord:
    """
    Examples:
        [[2]] -> W0 W0 E H Z
    """
    return encode_rows(r.to_lists(), r.cols)


def _rewrite_pair(a: Letter, b: Letter, rules: Sequence[str]) -> Optional[Tuple[str, Tuple[Letter, ...]]]:
    if a.kind == "H" and b.kind == "W" and "HW" in rules:
        return "HW", (W(b.index + 1), H)
    if a.kind == "H" and b.kind == "E" and "HE" in rules:
        return "HE", (E, H)
    if a.kind == "W" and b.kind == "W":
        if a.index < b.index and "WW" in rules:
            return "WW", (b, a)
        if a.index == b.index and "WWi" in rules:
            return "WWi", (a,)
    return None


def rewrite_successors(word: MrelWord, rules: Sequence[str] = RULES_B) -> List[Tuple[str, MrelWord]]:
    """ every one-step rewrite of word, with the rule label """
    results = []
    for p in range(len(word) - 1):
        step = _rewrite_pair(word[p], word[p + 1], rules)
        if step:
            label, replacement = step
            results.append((label, word[:p] + replacement + word[p + 2:]))
    return results


def is_normal(word: MrelWord, rules: Sequence[str] = RULES_B) -> bool:
    return all(_rewrite_pair(word[p], word[p + 1], rules) is None for p in range(len(word) - 1))


def normalize_word(word: MrelWord, rules: Sequence[str] = RULES_B) -> MrelWord:
    """ rewrite the leftmost redex until none is left """
    word_type(word)
    steps = 0
    while True:
        for p in range(len(word) - 1):
            step = _rewrite_pair(word[p], word[p + 1], rules)
            if step:
                word = word[:p] + step[1] + word[p + 2:]
                steps += 1
                break
        else:
            logger.debug("normal form after %d steps: %s", steps, format_word_mrel(word))
            return word


def normalize_word_mrel(word: MrelWord) -> MrelWord:
    """
    Examples:
        H W0 E H Z -> W1 E H H Z
    """
    return normalize_word(word, RULES_B)


def word_measure(word: MrelWord) -> Tuple[int, int, int, int]:
    """ termination measure, strictly decreased by every rewrite step """
    body = [letter for letter in word if letter.kind != "Z"]
    h_inv = count_inversions(body, lambda a, b: a.kind == "H" and b.kind != "H")
    ew_inv = count_inversions(body, lambda a, b: a.kind == "E" and b.kind == "W")
    w_inv = count_inversions(body, lambda a, b: a.kind == "W" and b.kind == "W" and a.index < b.index)
    return len(word), h_inv, ew_inv, w_inv


def enumerate_words_mrel(max_length: int) -> List[MrelWord]:
    """ every well-typed word with at most max_length letters, Z included """
    results = []

    def _grow(word: MrelWord, m: int, n: int):
        results.append(word)
        if len(word) >= max_length:
            return
        _grow((H,) + word, m, n + 1)
        _grow((E,) + word, m + 1, n)
        if m >= 1:
            for i in range(n):
                _grow((W(i),) + word, m, n)

    if max_length >= 1:
        _grow((Z,), 0, 0)
    return results


def enumerate_canonical_words(m: int, n: int, max_entry: int, rules: Sequence[str] = RULES_B) -> List[MrelWord]:
    """
    Normal words of boundary m→n whose entries stay below max_entry

    Words are grown from Z by prepending letters from the grammar, never
    creating a redex, so encode is not involved.
    """
    results = []

    def _grow(word: MrelWord, rows: int, cols: int, top: Tuple[int, ...]):
        if rows == m and cols == n:
            results.append(word)
        head = word[0]
        if cols < n and _rewrite_pair(H, head, rules) is None:
            _grow((H,) + word, rows, cols + 1, top)
        if rows < m and cols == n and _rewrite_pair(E, head, rules) is None:
            _grow((E,) + word, rows + 1, cols, (0,) * cols)
        if rows >= 1:
            for i in range(cols):
                if top[i] < max_entry and _rewrite_pair(W(i), head, rules) is None:
                    bumped = top[:i] + (top[i] + 1,) + top[i + 1:]
                    _grow((W(i),) + word, rows, cols, bumped)

    _grow((Z,), 0, 0, ())
    return results


def enumerate_canonical_words_mrel(m: int, n: int, max_entry: int) -> List[MrelWord]:
    return enumerate_canonical_words(m, n, max_entry, RULES_B)


def word_to_term(word: MrelWord, theory: EqTheory) -> Term:
    """
    Expand a word into a term over B (or R)

        H w    w ; (eta * id:n)
        E w    (eps * id:m) ; w
        W_i w  (delta * id:m-1) ; (id:1 * w) ; (stairs_i * id:n-i) ; (id:i * mu * id:n-i-1)
    """
    m, n = word_type(word)
    sig = theory.signature
    one = sig.atoms[0]

    def _expand(pos: int, m: int, n: int) -> Term:
        letter = word[pos]
        if letter.kind == "Z":
            return Identity(())
        if letter.kind == "H":
            inner = _expand(pos + 1, m, n - 1)
            return _then(inner, tensor_all([Generator("eta"), Identity(sig.power(n - 1))]))
        if letter.kind == "E":
            inner = _expand(pos + 1, m - 1, n)
            return _then(tensor_all([Generator("eps"), Identity(sig.power(m - 1))]), inner)
        i = letter.index
        inner = _expand(pos + 1, m, n)
        steps = [
            tensor_all([Generator("delta"), Identity(sig.power(m - 1))]),
            tensor_all([Identity((one,)), inner]),
            tensor_all([stairs(sig, one, sig.power(i)), Identity(sig.power(n - i))]),
            tensor_all([Identity(sig.power(i)), Generator("mu"), Identity(sig.power(n - i - 1))]),
        ]
        return compose_all([t for t in steps if size(t) > 0], (one,) * (m + 1))

    return _expand(0, m, n)


def _is_identity(t: Term) -> bool:
    return isinstance(t, Identity)


def _then(a: Term, b: Term) -> Term:
    if _is_identity(a):
        return b
    if _is_identity(b):
        return a
    return compose_all([a, b])


def word_to_term_mrel(word: MrelWord) -> Term:
    return word_to_term(word, builtin_theory("B"))


## models

BIALGEBRA_GENERATORS = {
    "mu": ([[1], [1]], 1),
    "eta": ([], 1),
    "delta": ([[1, 1]], 2),
    "eps": ([[]], 0),
    "gamma": ([[0, 1], [1, 0]], 2),
}


class MultiRelModel(AbstractModel):
    """ the bicommutative bialgebra structure on the ordinal 1 """
    name = "mrel"
    theories = ("B", "R")

    def identity(self, word: TypeWord) -> MultiRel:
        return MultiRel.identity(len(word))

    def generator(self, name: str) -> MultiRel:
        if name not in BIALGEBRA_GENERATORS:
            raise UnknownGeneratorError("no multirelation for generator %r" % name)
        rows, cols = BIALGEBRA_GENERATORS[name]
        return MultiRel.from_rows(rows, cols)

    def compose(self, f: MultiRel, g: MultiRel) -> MultiRel:
        return compose_mrel(f, g)

    def tensor(self, f: MultiRel, g: MultiRel) -> MultiRel:
        return tensor_mrel(f, g)

    def format(self, value: MultiRel) -> str:
        return format_matrix(value)


def eval_mrel(t: Term, theory: Optional[EqTheory] = None) -> MultiRel:
    """
    Examples:
        eval_mrel(parse_term("delta ; mu", B)) == [[2]]
    """
    return MultiRelModel().evaluate(t, theory or builtin_theory("B"))


def equiv_B(t1: Term, t2: Term, theory: Optional[EqTheory] = None) -> bool:
    """
    Raises:
        TermTypeError: boundaries differ
    """
    theory = theory or builtin_theory("B")
    b1 = boundary(t1, theory)
    b2 = boundary(t2, theory)
    if b1 != b2:
        raise TermTypeError("boundaries differ: %d→%d vs %d→%d" % (
            len(b1[0]), len(b1[1]), len(b2[0]), len(b2[1])))
    return eval_mrel(t1, theory) == eval_mrel(t2, theory)


class MonotoneMap(NamedTuple):
    m: int
    n: int
    image: Tuple[int, ...]


def identity_monotone(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n)))


def compose_monotone(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    if f.n != g.m:
        raise DimensionError("cannot compose %d→%d with %d→%d" % (f.m, f.n, g.m, g.n))
    return MonotoneMap(f.m, g.n, tuple(g.image[x] for x in f.image))


def tensor_monotone(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    return MonotoneMap(f.m + g.m, f.n + g.n, f.image + tuple(f.n + x for x in g.image))


def enumerate_monotone(m: int, n: int) -> List[MonotoneMap]:
    return [MonotoneMap(m, n, image) for image in itertools.combinations_with_replacement(range(n), m)]


class MonotoneModel(AbstractModel):
    """ monotone maps between finite ordinals, the monoid structure on 1 """
    name = "monotone"
    theories = ("M",)

    def identity(self, word: TypeWord) -> MonotoneMap:
        return identity_monotone(len(word))

    def generator(self, name: str) -> MonotoneMap:
        if name == "mu":
            return MonotoneMap(2, 1, (0, 0))
        if name == "eta":
            return MonotoneMap(0, 1, ())
        raise UnknownGeneratorError("no monotone map for generator %r" % name)

    def compose(self, f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
        return compose_monotone(f, g)

    def tensor(self, f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
        return tensor_monotone(f, g)

    def format(self, value: MonotoneMap) -> str:
        return "%d %d\n%s" % (value.m, value.n, " ".join(str(x) for x in value.image))


def eval_monotone(t: Term, theory: Optional[EqTheory] = None) -> MonotoneMap:
    return MonotoneModel().evaluate(t, theory or builtin_theory("M"))


def reachable_monotone(max_dim: int, max_size: int) -> Dict[MonotoneMap, int]:
    """
    Monotone maps that are values of M-terms of at most max_size generators

    Breadth first over slice sequences starting at id:0 .. id:max_dim. Every
    sequence is rebuilt with from_slices and evaluated with eval_monotone;
    sequences reaching a known value are not extended.

    Returns:
        map -> size of the smallest term found
    """
    theory = builtin_theory("M")
    sig = as_signature(theory)
    seen: Dict[MonotoneMap, int] = {}
    frontier: List[Tuple[TypeWord, List[Slice]]] = []
    for m in range(max_dim + 1):
        source = sig.power(m)
        seen[eval_monotone(from_slices([], source), theory)] = 0
        frontier.append((source, []))
    for n_gens in range(1, max_size + 1):
        next_frontier = []
        for source, slices in frontier:
            current = source
            for s in slices:
                g = sig.generator(s.gen)
                current = s.left + g.target + s.right
            for g in sig.generators:
                k = len(g.source)
                for pos in range(len(current) - k + 1):
                    step = Slice(current[:pos], g.name, current[pos + k:])
                    f = eval_monotone(from_slices(slices + [step], source), theory)
                    if f not in seen:
                        seen[f] = n_gens
                        next_frontier.append((source, slices + [step]))
        frontier = next_frontier
    logger.debug("monotone maps reached by %d generators: %d", max_size, len(seen))
    return seen
