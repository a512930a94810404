# coding: utf-8
#

"""Relations between finite ordinals, the qualitative quotient of multirelations."""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence

import numpy as np

from monopres.abstract import AbstractModel
from monopres.catalog import builtin_theory
from monopres.exceptions import DimensionError, UnknownGeneratorError
from monopres.multirel import (BIALGEBRA_GENERATORS, RULES_R, MrelWord,
                               MultiRel, block_diagonal, encode_rows, enumerate_canonical_words,
                               evaluate_letters, format_matrix, normalize_word,
                               parse_matrix, word_to_term)
from monopres.terms import Term
from monopres.theory import EqTheory, TypeWord

logger = logging.getLogger(__name__)


class Rel(object):
    """ m×n boolean matrix """
    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        if entries.ndim != 2:
            raise DimensionError("a relation is a 2-dimensional matrix")
        self.entries = entries.astype(bool)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Rel":
        return cls(np.zeros((m, n), dtype=bool))

    @classmethod
    def identity(cls, n: int) -> "Rel":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "Rel":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        r = np.zeros((len(rows), cols), dtype=bool)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError("row %d has %d entries, expect %d" % (i, len(row), cols))
            r[i, :] = [bool(v) for v in row]
        return cls(r)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def to_lists(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.entries.tolist()]

    def __eq__(self, other):
        if not isinstance(other, Rel):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.shape, self.entries.tobytes()))

    def __repr__(self):
        return "Rel(%d×%d, %s)" % (self.rows, self.cols, self.to_lists())


def quotient(r: MultiRel) -> Rel:
    """ entrywise nonzero test """
    return Rel(np.array([[v != 0 for v in row] for row in r.entries.tolist()], dtype=bool).reshape(r.shape))


def compose_rel(a: Rel, b: Rel) -> Rel:
    """ boolean matrix product, a then b """
    if a.cols != b.rows:
        raise DimensionError("cannot compose %d×%d with %d×%d" % (a.rows, a.cols, b.rows, b.cols))
    # (m, k, 1) & (1, k, p) reduced over k; an empty k gives False everywhere
    product = np.logical_and(a.entries[:, :, None], b.entries[None, :, :])
    return Rel(np.logical_or.reduce(product, axis=1))


def tensor_rel(a: Rel, b: Rel) -> Rel:
    return Rel(block_diagonal(a.entries, b.entries, bool))


def enumerate_rel(m: int, n: int) -> Iterator[Rel]:
    for values in itertools.product((0, 1), repeat=m * n):
        yield Rel.from_rows([values[i * n:(i + 1) * n] for i in range(m)], n)


def parse_rel(text: str) -> Rel:
    m, n, rows = parse_matrix(text)
    if any(v not in (0, 1) for row in rows for v in row):
        raise DimensionError("relation entries are 0 or 1")
    return Rel.from_rows(rows, n)


def format_rel(r: Rel) -> str:
    return format_matrix(r)


def word_eval_rel(word: MrelWord) -> Rel:
    return Rel(evaluate_letters(word, bool, lambda v: True))


def encode_rel(r: Rel) -> MrelWord:
    """
    Examples:
        [[1]] -> W0 E H Z
    """
    return encode_rows(r.to_lists(), r.cols)


def normalize_word_rel(word: MrelWord) -> MrelWord:
    """
    Examples:
        W0 W0 E H Z -> W0 E H Z
    """
    return normalize_word(word, RULES_R)


def enumerate_canonical_words_rel(m: int, n: int) -> List[MrelWord]:
    return enumerate_canonical_words(m, n, 1, RULES_R)


def word_to_term_rel(word: MrelWord) -> Term:
    return word_to_term(word, builtin_theory("R"))


class RelModel(AbstractModel):
    """ the qualitative bialgebra structure on the ordinal 1 """
    name = "rel"
    theories = ("B", "R")

    def identity(self, word: TypeWord) -> Rel:
        return Rel.identity(len(word))

    def generator(self, name: str) -> Rel:
        if name not in BIALGEBRA_GENERATORS:
            raise UnknownGeneratorError("no relation for generator %r" % name)
        rows, cols = BIALGEBRA_GENERATORS[name]
        return Rel.from_rows(rows, cols)

    def compose(self, f: Rel, g: Rel) -> Rel:
        return compose_rel(f, g)

    def tensor(self, f: Rel, g: Rel) -> Rel:
        return tensor_rel(f, g)

    def format(self, value: Rel) -> str:
        return format_rel(value)


def eval_rel(t: Term, theory: Optional[EqTheory] = None) -> Rel:
    """
    Examples:
        eval_rel(parse_term("delta ; mu", R)) == [[1]]
    """
    return RelModel().evaluate(t, theory or builtin_theory("R"))
