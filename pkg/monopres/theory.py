# coding: utf-8
#

"""Signatures and monoidal equational theories.

A signature declares atomic types and typed generators; a theory adds
labelled relations, pairs of terms with the same boundary.
"""

import dataclasses
import logging
from typing import TYPE_CHECKING, Dict, Iterable, Optional, Sequence, Tuple, Union

from monopres._proto import EMPTY_WORD
from monopres.exceptions import (SignatureError, UnknownGeneratorError,
                                 WordSyntaxError)

if TYPE_CHECKING:  # pragma: no cover
    from monopres.terms import Term

logger = logging.getLogger(__name__)

AtomicType = str
TypeWord = Tuple[AtomicType, ...]

CROSSING = "crossing"


def parse_type_word(text: str, atoms: Sequence[AtomicType]) -> TypeWord:
    """
    Read a word of atomic types, longest atom name first

    Args:
        text: e.g. "OP", "11", "I" (empty word)
        atoms: declared atomic types

    Raises:
        WordSyntaxError
    """
    text = "".join(text.split())
    if text in ("", EMPTY_WORD) and EMPTY_WORD not in atoms:
        return ()
    names = sorted(atoms, key=len, reverse=True)
    letters = []
    pos = 0
    while pos < len(text):
        for name in names:
            if text.startswith(name, pos):
                letters.append(name)
                pos += len(name)
                break
        else:
            raise WordSyntaxError("unknown atomic type in %r" % text, pos)
    return tuple(letters)


def format_type_word(word: TypeWord) -> str:
    if not word:
        return EMPTY_WORD
    return "".join(word)


@dataclasses.dataclass(frozen=True)
class GeneratorDecl:
    name: str
    source: TypeWord
    target: TypeWord
    kind: str = ""

    @property
    def is_crossing(self) -> bool:
        return self.kind == CROSSING


@dataclasses.dataclass(frozen=True)
class Signature:
    atoms: Tuple[AtomicType, ...]
    generators: Tuple[GeneratorDecl, ...]

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise SignatureError("duplicate atomic types", self.atoms)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise SignatureError("duplicate generator names", names)

    @property
    def is_pro(self) -> bool:
        """ one atomic type, objects are natural numbers """
        return len(self.atoms) == 1

    def generator(self, name: str) -> GeneratorDecl:
        for g in self.generators:
            if g.name == name:
                return g
        raise UnknownGeneratorError("unknown generator %r" % name)

    def has_generator(self, name: str) -> bool:
        return any(g.name == name for g in self.generators)

    def power(self, n: int) -> TypeWord:
        """ the word 1⊗...⊗1 of a PRO signature """
        if not self.is_pro:
            raise SignatureError("id:n needs a signature with a single atomic type")
        return (self.atoms[0],) * n

    def crossing(self, over: AtomicType, under: AtomicType) -> Optional[GeneratorDecl]:
        """ the crossing generator over⊗under -> under⊗over, if declared """
        for g in self.generators:
            if g.is_crossing and g.source == (over, under) and g.target == (under, over):
                return g
        return None

    def parse_word(self, text: str) -> TypeWord:
        return parse_type_word(text, self.atoms)

    def format_word(self, word: TypeWord) -> str:
        if self.is_pro:
            return str(len(word))
        return format_type_word(word)


@dataclasses.dataclass(frozen=True)
class Relation:
    label: str
    lhs: "Term"
    rhs: "Term"


@dataclasses.dataclass(frozen=True)
class EqTheory:
    name: str
    signature: Signature
    relations: Tuple[Relation, ...] = ()
    description: str = ""

    @property
    def atoms(self) -> Tuple[AtomicType, ...]:
        return self.signature.atoms

    @property
    def generators(self) -> Tuple[GeneratorDecl, ...]:
        return self.signature.generators

    def relation(self, label: str) -> Relation:
        for r in self.relations:
            if r.label == label:
                return r
        raise KeyError(label)

    def generator_names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)


@dataclasses.dataclass(frozen=True)
class Violation:
    label: str
    reason: str

    def __str__(self):
        return "%s: %s" % (self.label, self.reason)


def as_signature(theory: Union[EqTheory, Signature]) -> Signature:
    if isinstance(theory, EqTheory):
        return theory.signature
    return theory


def make_signature(atoms: Iterable[AtomicType], generators: Dict[str, Tuple[str, str]]) -> Signature:
    """
    Build a signature from word texts

    Examples:
        make_signature(["1"], {"mu": ("11", "1"), "eta": ("I", "1")})
    """
    atoms = tuple(atoms)
    decls = []
    for name, (src, tgt) in generators.items():
        decls.append(GeneratorDecl(name, parse_type_word(src, atoms), parse_type_word(tgt, atoms)))
    return Signature(atoms, tuple(decls))
