# coding: utf-8
#

"""Theory catalog: the text form of equational theories and the builtin ones.

Text form, one declaration per line, ``#`` starts a comment::

    theory B
    about bicommutative bialgebras
    atoms 1
    gen mu : 11 -> 1
    gen gamma : 11 -> 11 [crossing]
    rel mult-comm : gamma ; mu = mu
"""

import logging
import re
from typing import List, Tuple

from monopres._proto import THEORY_NAMES
from monopres.exceptions import (BaseError, FormatError, UnknownTheoryError)
from monopres.terms import boundary, parse_term, print_term
from monopres.theory import (CROSSING, EqTheory, GeneratorDecl, Relation,
                             Signature, Violation, format_type_word,
                             parse_type_word)
from monopres.utils import cache_return, with_package_resource

logger = logging.getLogger(__name__)

_GEN_LINE = re.compile(r"^(?P<name>\S+)\s*:\s*(?P<src>[^-]*?)\s*->\s*(?P<tgt>[^\[]*?)\s*(\[(?P<kind>\w+)\])?$")
_REL_LINE = re.compile(r"^(?P<label>\S+)\s*:\s*(?P<lhs>[^=]+?)\s*=\s*(?P<rhs>[^=]+?)$")


def validate_theory(theory: EqTheory) -> List[Violation]:
    """
    Check the boundary condition of every relation

    Returns:
        list of Violation, empty when the theory is valid

    Examples:
        a relation mu = eta gives [Violation("...", "source mismatch 2≠0")]
    """
    sig = theory.signature
    violations = []
    for g in sig.generators:
        for letter in g.source + g.target:
            if letter not in sig.atoms:
                violations.append(Violation(g.name, "undeclared atomic type %r" % letter))
    for r in theory.relations:
        try:
            ls, lt = boundary(r.lhs, sig)
            rs, rt = boundary(r.rhs, sig)
        except BaseError as e:
            violations.append(Violation(r.label, str(e)))
            continue
        if ls != rs:
            violations.append(Violation(r.label, "source mismatch %s≠%s" % (sig.format_word(ls), sig.format_word(rs))))
        if lt != rt:
            violations.append(Violation(r.label, "target mismatch %s≠%s" % (sig.format_word(lt), sig.format_word(rt))))
    return violations


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_theory(text: str) -> EqTheory:
    """
    Raises:
        FormatError: malformed declaration
        TermSyntaxError, UnknownGeneratorError: inside a relation
    """
    name = ""
    about = ""
    atoms: Tuple[str, ...] = ()
    decls = []
    pending_rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "theory":
            name = rest
        elif keyword == "about":
            about = rest
        elif keyword == "atoms":
            atoms = tuple(rest.split())
        elif keyword == "gen":
            m = _GEN_LINE.match(rest)
            if not m:
                raise FormatError("malformed generator on line %d: %r" % (lineno, raw))
            kind = m.group("kind") or ""
            if kind and kind != CROSSING:
                raise FormatError("unknown generator flag %r on line %d" % (kind, lineno))
            decls.append(GeneratorDecl(
                m.group("name"),
                parse_type_word(m.group("src"), atoms),
                parse_type_word(m.group("tgt"), atoms),
                kind))
        elif keyword == "rel":
            m = _REL_LINE.match(rest)
            if not m:
                raise FormatError("malformed relation on line %d: %r" % (lineno, raw))
            pending_rels.append((m.group("label"), m.group("lhs"), m.group("rhs")))
        else:
            raise FormatError("unknown keyword %r on line %d" % (keyword, lineno))
    if not name:
        raise FormatError("missing 'theory NAME' line")
    if not atoms:
        raise FormatError("missing 'atoms' line")

    sig = Signature(atoms, tuple(decls))
    relations = tuple(Relation(label, parse_term(lhs, sig), parse_term(rhs, sig))
                      for label, lhs, rhs in pending_rels)
    return EqTheory(name, sig, relations, about)


def format_theory(theory: EqTheory) -> str:
    lines = ["theory %s" % theory.name]
    if theory.description:
        lines.append("about %s" % theory.description)
    lines.append("atoms %s" % " ".join(theory.atoms))
    for g in theory.generators:
        line = "gen %s : %s -> %s" % (g.name, format_type_word(g.source), format_type_word(g.target))
        if g.kind:
            line += " [%s]" % g.kind
        lines.append(line)
    for r in theory.relations:
        lines.append("rel %s : %s = %s" % (r.label, print_term(r.lhs, theory), print_term(r.rhs, theory)))
    return "\n".join(lines) + "\n"


@cache_return
def builtin_theory(name: str) -> EqTheory:
    """
    Args:
        name: one of M, B, R, D, G

    Raises:
        UnknownTheoryError
    """
    if name not in THEORY_NAMES:
        raise UnknownTheoryError("unknown theory %r, expect one of %s" % (name, ", ".join(THEORY_NAMES)))
    with with_package_resource("theories/%s.theory" % name) as path:
        text = path.read_text(encoding="utf-8")
    theory = parse_theory(text)
    logger.debug("loaded theory %s: %d generators, %d relations",
                 name, len(theory.generators), len(theory.relations))
    return theory
