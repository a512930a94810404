# coding: utf-8
#

"""Morphisms of the free strict monoidal category over a signature.

Terms are plain trees, never quotiented: two terms are equal as morphisms
when a model says so.

Text syntax::

    term ::= "id:" nat | "id(" word ")" | name | term ";" term | term "*" term | "(" term ")"

``f ; g`` is "f then g", ``*`` is the tensor; ``;`` binds looser than ``*``
and both associate to the left.
"""

import dataclasses
import logging
import random
import re
from typing import List, Optional, Sequence, Tuple, Union

from monopres.exceptions import (CrossingUnavailableError, SignatureError,
                                 TermSyntaxError, TermTypeError,
                                 UnknownGeneratorError)
from monopres.theory import (AtomicType, EqTheory, Signature, TypeWord,
                             as_signature, format_type_word)

logger = logging.getLogger(__name__)

SignatureLike = Union[EqTheory, Signature]


class Term:
    """ base class of term nodes """


@dataclasses.dataclass(frozen=True)
class Identity(Term):
    word: TypeWord


@dataclasses.dataclass(frozen=True)
class Generator(Term):
    name: str


@dataclasses.dataclass(frozen=True)
class Compose(Term):
    first: Term
    then: Term


@dataclasses.dataclass(frozen=True)
class Tensor(Term):
    top: Term
    bottom: Term


@dataclasses.dataclass(frozen=True)
class Slice:
    left: TypeWord
    gen: str
    right: TypeWord


def boundary(t: Term, theory: SignatureLike) -> Tuple[TypeWord, TypeWord]:
    """
    Source and target words of a term

    Raises:
        TermTypeError: on a Compose node whose inner words differ
        UnknownGeneratorError
    """
    sig = as_signature(theory)
    if isinstance(t, Identity):
        for letter in t.word:
            if letter not in sig.atoms:
                raise TermTypeError("undeclared atomic type %r" % letter)
        return t.word, t.word
    if isinstance(t, Generator):
        g = sig.generator(t.name)
        return g.source, g.target
    if isinstance(t, Compose):
        src, mid = boundary(t.first, sig)
        mid2, tgt = boundary(t.then, sig)
        if mid != mid2:
            raise TermTypeError("cannot compose %s: %s ≠ %s" % (
                print_term(t, sig), sig.format_word(mid), sig.format_word(mid2)))
        return src, tgt
    if isinstance(t, Tensor):
        s1, t1 = boundary(t.top, sig)
        s2, t2 = boundary(t.bottom, sig)
        return s1 + s2, t1 + t2
    raise TypeError("not a term: %r" % (t,))


def compose(f: Term, g: Term, theory: Optional[SignatureLike] = None) -> Term:
    """ f then g; the boundary is checked when a signature is given """
    t = Compose(f, g)
    if theory is not None:
        boundary(t, theory)
    return t


def tensor(f: Term, g: Term) -> Term:
    return Tensor(f, g)


def compose_all(terms: Sequence[Term], source: TypeWord = ()) -> Term:
    if not terms:
        return Identity(source)
    result = terms[0]
    for t in terms[1:]:
        result = Compose(result, t)
    return result


def tensor_all(terms: Sequence[Term]) -> Term:
    """ tensor product with empty identities dropped """
    kept = [t for t in terms if t != Identity(())]
    if not kept:
        return Identity(())
    result = kept[0]
    for t in kept[1:]:
        result = Tensor(result, t)
    return result


def whisker(left: TypeWord, t: Term, right: TypeWord) -> Term:
    return tensor_all([Identity(left), t, Identity(right)])


def size(t: Term) -> int:
    if isinstance(t, Identity):
        return 0
    if isinstance(t, Generator):
        return 1
    if isinstance(t, Compose):
        return size(t.first) + size(t.then)
    if isinstance(t, Tensor):
        return size(t.top) + size(t.bottom)
    raise TypeError("not a term: %r" % (t,))


def slice_form(t: Term, theory: SignatureLike) -> List[Slice]:
    """ one generator per slice, read left to right """
    sig = as_signature(theory)
    if isinstance(t, Identity):
        return []
    if isinstance(t, Generator):
        sig.generator(t.name)
        return [Slice((), t.name, ())]
    if isinstance(t, Compose):
        boundary(t, sig)
        return slice_form(t.first, sig) + slice_form(t.then, sig)
    if isinstance(t, Tensor):
        src_bottom, _ = boundary(t.bottom, sig)
        _, tgt_top = boundary(t.top, sig)
        slices = [Slice(s.left, s.gen, s.right + src_bottom) for s in slice_form(t.top, sig)]
        slices += [Slice(tgt_top + s.left, s.gen, s.right) for s in slice_form(t.bottom, sig)]
        return slices
    raise TypeError("not a term: %r" % (t,))


def from_slices(slices: Sequence[Slice], source: TypeWord) -> Term:
    terms = [whisker(s.left, Generator(s.gen), s.right) for s in slices]
    return compose_all(terms, source)


def _crossing_name(sig: Signature, over: AtomicType, under: AtomicType) -> str:
    g = sig.crossing(over, under)
    if g is None:
        raise CrossingUnavailableError(
            "crossing unavailable: %s⊗%s -> %s⊗%s" % (over, under, under, over))
    return g.name


def stairs(theory: SignatureLike, wire: AtomicType, past: TypeWord) -> Term:
    """
    Carry the wire at position 0 past the wires of `past`

    Returns:
        a composite of |past| crossings, or the identity of `wire` when past is empty

    Raises:
        CrossingUnavailableError: a needed crossing is not declared
    """
    sig = as_signature(theory)
    steps = []
    for j, under in enumerate(past):
        name = _crossing_name(sig, wire, under)
        steps.append(whisker(past[:j], Generator(name), past[j + 1:]))
    return compose_all(steps, (wire,) + tuple(past))


def reverse_stairs(theory: SignatureLike, past: TypeWord, wire: AtomicType) -> Term:
    """ carry the wire at position |past| back to position 0 """
    sig = as_signature(theory)
    steps = []
    for j in reversed(range(len(past))):
        name = _crossing_name(sig, past[j], wire)
        steps.append(whisker(past[:j], Generator(name), past[j + 1:]))
    return compose_all(steps, tuple(past) + (wire,))


def random_term(theory: SignatureLike, source: TypeWord, max_size: int, rng: random.Random) -> Term:
    """ a random slice sequence of at most max_size generators starting at source """
    sig = as_signature(theory)
    current = tuple(source)
    slices = []
    for _ in range(rng.randint(0, max_size)):
        choices = []
        for g in sig.generators:
            k = len(g.source)
            for pos in range(len(current) - k + 1):
                if current[pos:pos + k] == g.source:
                    choices.append((pos, g))
        if not choices:
            break
        pos, g = rng.choice(choices)
        k = len(g.source)
        slices.append(Slice(current[:pos], g.name, current[pos + k:]))
        current = current[:pos] + g.target + current[pos + k:]
    return from_slices(slices, tuple(source))


## text form

_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<idn>id:(?P<n>\d+))
  | (?P<idw>id\((?P<word>[^()]*)\))
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[;*()])
""", re.VERBOSE)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError("unexpected character %r" % text[pos], pos)
        if m.group("space") is None:
            if m.group("idn") is not None:
                tokens.append(("idn", m.group("n"), pos))
            elif m.group("idw") is not None:
                tokens.append(("idw", m.group("word"), pos))
            elif m.group("name") is not None:
                tokens.append(("name", m.group("name"), pos))
            else:
                tokens.append((m.group("op"), m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _TermParser:
    def __init__(self, text: str, sig: Signature):
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise TermSyntaxError("expected %r, got %r" % (kind, tok[1] or "end of input"), tok[2])
        return tok

    def parse(self) -> Term:
        t = self.sequence()
        tok = self.peek()
        if tok[0] != "end":
            raise TermSyntaxError("unexpected %r" % tok[1], tok[2])
        return t

    def sequence(self) -> Term:
        t = self.product()
        while self.peek()[0] == ";":
            self.advance()
            t = Compose(t, self.product())
        return t

    def product(self) -> Term:
        t = self.atom()
        while self.peek()[0] == "*":
            self.advance()
            t = Tensor(t, self.atom())
        return t

    def atom(self) -> Term:
        kind, value, pos = self.advance()
        if kind == "(":
            t = self.sequence()
            self.expect(")")
            return t
        if kind == "idn":
            try:
                return Identity(self.sig.power(int(value)))
            except SignatureError as e:
                raise TermSyntaxError(str(e.args[0]), pos)
        if kind == "idw":
            try:
                return Identity(self.sig.parse_word(value))
            except TermSyntaxError:
                raise
            except Exception as e:
                raise TermSyntaxError("bad word %r: %s" % (value, e), pos)
        if kind == "name":
            if not self.sig.has_generator(value):
                raise UnknownGeneratorError("unknown generator %r at position %d" % (value, pos))
            return Generator(value)
        raise TermSyntaxError("expected a term, got %r" % (value or "end of input"), pos)


def parse_term(text: str, theory: SignatureLike) -> Term:
    """
    Raises:
        TermSyntaxError, UnknownGeneratorError

    Examples:
        parse_term("(eta * id:1) ; mu", B)
    """
    return _TermParser(text, as_signature(theory)).parse()


def print_term(t: Term, theory: SignatureLike) -> str:
    sig = as_signature(theory)

    def _fmt(t: Term, level: int) -> str:
        # level 0: sequence allowed, 1: product allowed, 2: atoms only
        if isinstance(t, Identity):
            if sig.is_pro:
                return "id:%d" % len(t.word)
            return "id(%s)" % format_type_word(t.word)
        if isinstance(t, Generator):
            return t.name
        if isinstance(t, Compose):
            s = "%s ; %s" % (_fmt(t.first, 0), _fmt(t.then, 1))
            return s if level == 0 else "(%s)" % s
        if isinstance(t, Tensor):
            s = "%s * %s" % (_fmt(t.top, 1), _fmt(t.bottom, 2))
            return s if level <= 1 else "(%s)" % s
        raise TypeError("not a term: %r" % (t,))

    return _fmt(t, 0)
