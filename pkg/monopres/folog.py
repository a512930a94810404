# coding: utf-8
#

"""Quantifier-only first-order sequents, proofs and their strategies.

Formulas are atoms under a prefix of quantifiers. A proof of A ⊢ B is
interpreted as a strategy game(A) → game(B): every binder move (∀ on the
right, ∃ on the left) justifies every witness move (∀ on the left, ∃ on the
right) whose witness term mentions the bound variable.
"""

import dataclasses
import logging
import re
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from monopres._proto import OPPONENT, PROPONENT, Polarity, Side
from monopres.exceptions import (ArityError, AxiomError, EigenvariableError,
                                 FormatError, FormulaSyntaxError,
                                 RuleMismatchError)
from monopres.games import (Game, MoveRef, Strategy, arena_polarity,
                            compose_strategies, composition_graph, left_node,
                            outer_moves, right_node)

logger = logging.getLogger(__name__)


class FoTerm:
    """ first-order term """


@dataclasses.dataclass(frozen=True)
class Var(FoTerm):
    name: str

    def __str__(self):
        return self.name


@dataclasses.dataclass(frozen=True)
class App(FoTerm):
    fn: str
    args: Tuple[FoTerm, ...] = ()

    def __str__(self):
        return "%s(%s)" % (self.fn, ",".join(map(str, self.args)))


class Formula:
    pass


@dataclasses.dataclass(frozen=True)
class Atom(Formula):
    pred: str
    args: Tuple[FoTerm, ...] = ()

    def __str__(self):
        if not self.args:
            return self.pred
        return "%s(%s)" % (self.pred, ",".join(map(str, self.args)))


@dataclasses.dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def __str__(self):
        return "forall %s. %s" % (self.var, self.body)


@dataclasses.dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def __str__(self):
        return "exists %s. %s" % (self.var, self.body)


Quantified = Union[Forall, Exists]


@dataclasses.dataclass(frozen=True)
class Sequent:
    left: Formula
    right: Formula

    def __str__(self):
        return "%s |- %s" % (self.left, self.right)


def term_vars(t: FoTerm) -> Set[str]:
    if isinstance(t, Var):
        return {t.name}
    out: Set[str] = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def free_vars(f: Union[FoTerm, Formula]) -> Set[str]:
    if isinstance(f, FoTerm):
        return term_vars(f)
    if isinstance(f, Atom):
        out: Set[str] = set()
        for a in f.args:
            out |= term_vars(a)
        return out
    return free_vars(f.body) - {f.var}


def _subst_term(t: FoTerm, var: str, value: FoTerm) -> FoTerm:
    if isinstance(t, Var):
        return value if t.name == var else t
    return App(t.fn, tuple(_subst_term(a, var, value) for a in t.args))


def _fresh(name: str, avoid: Set[str]) -> str:
    while name in avoid:
        name += "'"
    return name


def substitute(f: Formula, var: str, value: FoTerm) -> Formula:
    """
    f[value/var], renaming bound variables that would capture a variable of value

    Examples:
        (exists y. P(x,y))[f(y)/x] -> exists y'. P(f(y),y')
    """
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(_subst_term(a, var, value) for a in f.args))
    if f.var == var:
        return f
    body = f.body
    bound = f.var
    if bound in term_vars(value) and var in free_vars(body):
        bound = _fresh(bound, term_vars(value) | free_vars(body))
        body = substitute(body, f.var, Var(bound))
    return type(f)(bound, substitute(body, var, value))


def alpha_equal(a: Formula, b: Formula) -> bool:
    if isinstance(a, Atom) or isinstance(b, Atom):
        return a == b
    if type(a) is not type(b):
        return False
    if a.var == b.var:
        return alpha_equal(a.body, b.body)
    fresh = _fresh(a.var, free_vars(a.body) | free_vars(b.body) | {b.var})
    return alpha_equal(substitute(a.body, a.var, Var(fresh)), substitute(b.body, b.var, Var(fresh)))


def game_of_formula(f: Formula) -> Game:
    """ one move per quantifier, outermost first: ∀ is O, ∃ is P """
    moves = []
    while not isinstance(f, Atom):
        moves.append(OPPONENT if isinstance(f, Forall) else PROPONENT)
        f = f.body
    return Game(tuple(moves))


def game_of_sequent(s: Sequent) -> Tuple[Game, Game]:
    return game_of_formula(s.left), game_of_formula(s.right)


## arities

def _collect_term(t: FoTerm, table: Dict[str, int]):
    if isinstance(t, App):
        _record(table, "function " + t.fn, len(t.args))
        for a in t.args:
            _collect_term(a, table)


def _record(table: Dict[str, int], symbol: str, arity: int):
    if table.setdefault(symbol, arity) != arity:
        raise ArityError("%s used with %d and %d arguments" % (symbol, table[symbol], arity))


def _collect_formula(f: Formula, table: Dict[str, int]):
    while not isinstance(f, Atom):
        f = f.body
    _record(table, "predicate " + f.pred, len(f.args))
    for a in f.args:
        _collect_term(a, table)


def check_arities(formulas: Sequence[Formula], terms: Sequence[FoTerm] = ()) -> Dict[str, int]:
    """
    Raises:
        ArityError
    """
    table: Dict[str, int] = {}
    for f in formulas:
        _collect_formula(f, table)
    for t in terms:
        _collect_term(t, table)
    return table


## axioms

def _match_term(pattern: FoTerm, t: FoTerm, holes: Set[str], binding: Dict[str, FoTerm]) -> bool:
    if isinstance(pattern, Var) and pattern.name in holes:
        if pattern.name in binding:
            return binding[pattern.name] == t
        binding[pattern.name] = t
        return True
    if isinstance(pattern, Var) or isinstance(t, Var):
        return pattern == t
    if pattern.fn != t.fn or len(pattern.args) != len(t.args):
        return False
    return all(_match_term(p, a, holes, binding) for p, a in zip(pattern.args, t.args))


def match_axiom(pair: Tuple[Atom, Atom], left: Atom, right: Atom) -> bool:
    """ left ⊢ right is a substitution instance of the pair; free variables of the pair are holes """
    p, q = pair
    holes = free_vars(p) | free_vars(q)
    binding: Dict[str, FoTerm] = {}
    return _match_term(App(p.pred, p.args), App(left.pred, left.args), holes, binding) and \
        _match_term(App(q.pred, q.args), App(right.pred, right.args), holes, binding)


class AxiomSet(object):
    """
    Pairs of atoms (P, Q) with P ⊢ Q provable outright. Free variables of a
    pair are schematic; P ⊢ P always holds.
    """

    def __init__(self, pairs: Sequence[Tuple[Atom, Atom]] = ()):
        self.pairs = tuple(pairs)

    def contains(self, left: Atom, right: Atom) -> bool:
        if left == right:
            return True
        return any(match_axiom(pair, left, right) for pair in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


## proofs

class Proof:
    rule: str = ""

    @property
    def premises(self) -> Tuple["Proof", ...]:
        return ()


@dataclasses.dataclass(frozen=True)
class Ax(Proof):
    left: Atom
    right: Atom
    rule = "ax"


@dataclasses.dataclass(frozen=True)
class ForallL(Proof):
    witness: FoTerm
    sub: Proof
    rule = "forall-l"

    @property
    def premises(self):
        return (self.sub,)


@dataclasses.dataclass(frozen=True)
class ForallR(Proof):
    var: str
    sub: Proof
    rule = "forall-r"

    @property
    def premises(self):
        return (self.sub,)


@dataclasses.dataclass(frozen=True)
class ExistsL(Proof):
    var: str
    sub: Proof
    rule = "exists-l"

    @property
    def premises(self):
        return (self.sub,)


@dataclasses.dataclass(frozen=True)
class ExistsR(Proof):
    witness: FoTerm
    sub: Proof
    rule = "exists-r"

    @property
    def premises(self):
        return (self.sub,)


@dataclasses.dataclass(frozen=True)
class Cut(Proof):
    formula: Formula
    first: Proof
    second: Proof
    rule = "cut"

    @property
    def premises(self):
        return (self.first, self.second)


def proof_size(p: Proof) -> int:
    return 1 + sum(proof_size(q) for q in p.premises)


def _expect(f: Formula, kind: type, rule: str, side: str, path: str) -> Quantified:
    if not isinstance(f, kind):
        raise RuleMismatchError("%s expects %s on the %s, got %s" % (
            rule, "a universal formula" if kind is Forall else "an existential formula", side, f), path)
    return f


def premise_sequents(p: Proof, seq: Sequent, path: str = "root") -> List[Sequent]:
    """
    Sequents proved by the premises of p, once p is known to conclude seq

    Raises:
        RuleMismatchError, EigenvariableError
    """
    a, b = seq.left, seq.right
    if isinstance(p, Ax):
        return []
    if isinstance(p, ForallL):
        f = _expect(a, Forall, p.rule, "left", path)
        return [Sequent(substitute(f.body, f.var, p.witness), b)]
    if isinstance(p, ExistsR):
        f = _expect(b, Exists, p.rule, "right", path)
        return [Sequent(a, substitute(f.body, f.var, p.witness))]
    if isinstance(p, ForallR):
        f = _expect(b, Forall, p.rule, "right", path)
        if p.var in free_vars(a):
            raise EigenvariableError("%s is free in the left formula %s" % (p.var, a), path)
        if p.var in free_vars(f):
            raise EigenvariableError("%s is free in %s" % (p.var, f), path)
        return [Sequent(a, substitute(f.body, f.var, Var(p.var)))]
    if isinstance(p, ExistsL):
        f = _expect(a, Exists, p.rule, "left", path)
        if p.var in free_vars(b):
            raise EigenvariableError("%s is free in the right formula %s" % (p.var, b), path)
        if p.var in free_vars(f):
            raise EigenvariableError("%s is free in %s" % (p.var, f), path)
        return [Sequent(substitute(f.body, f.var, Var(p.var)), b)]
    if isinstance(p, Cut):
        return [Sequent(a, p.formula), Sequent(p.formula, b)]
    raise TypeError("not a proof: %r" % (p,))


def _proof_parts(p: Proof) -> Iterator[Union[Formula, FoTerm]]:
    if isinstance(p, Ax):
        yield p.left
        yield p.right
    elif isinstance(p, (ForallL, ExistsR)):
        yield p.witness
    elif isinstance(p, Cut):
        yield p.formula
    for q in p.premises:
        yield from _proof_parts(q)


def check_proof(p: Proof, seq: Sequent, axioms: Optional[AxiomSet] = None):
    """
    Check p proves seq; errors carry the path of the failing node

    Raises:
        ArityError, RuleMismatchError, EigenvariableError, AxiomError
    """
    axioms = axioms or AxiomSet()
    parts = list(_proof_parts(p))
    formulas = [seq.left, seq.right] + [x for x in parts if isinstance(x, Formula)]
    for pair in axioms:
        formulas.extend(pair)
    check_arities(formulas, [x for x in parts if isinstance(x, FoTerm)])
    _check(p, seq, axioms, "root")


def _check(p: Proof, seq: Sequent, axioms: AxiomSet, path: str):
    if isinstance(p, Ax):
        if not isinstance(seq.left, Atom) or not isinstance(seq.right, Atom):
            raise RuleMismatchError("ax concludes atoms, got %s" % seq, path)
        if not (alpha_equal(p.left, seq.left) and alpha_equal(p.right, seq.right)):
            raise RuleMismatchError("ax concludes %s |- %s, expect %s" % (p.left, p.right, seq), path)
        if not axioms.contains(seq.left, seq.right):
            raise AxiomError("%s is not an axiom" % seq, path)
        return
    for i, (q, s) in enumerate(zip(p.premises, premise_sequents(p, seq, path))):
        _check(q, s, axioms, "%s.%d" % (path, i))


def is_valid_proof(p: Proof, seq: Sequent, axioms: Optional[AxiomSet] = None) -> bool:
    try:
        check_proof(p, seq, axioms)
    except (ArityError, RuleMismatchError, EigenvariableError, AxiomError):
        return False
    return True


## interpretation

FreeDeps = Dict[str, Set[MoveRef]]


def _prepend(s: Strategy, free: FreeDeps, side: Side, letter: str) -> Tuple[Strategy, FreeDeps]:
    """ add a move in front of one side and shift what is already there """
    def shift(ref: MoveRef) -> MoveRef:
        return MoveRef(ref.side, ref.index + 1) if ref.side == side else ref

    if side == Side.SRC:
        src_game, tgt_game = Game((letter,)) + s.src, s.tgt
    else:
        src_game, tgt_game = s.src, Game((letter,)) + s.tgt
    deps = frozenset((shift(a), shift(b)) for a, b in s.deps)
    return Strategy(src_game, tgt_game, deps), {v: {shift(r) for r in refs} for v, refs in free.items()}


def _witness(s: Strategy, free: FreeDeps, side: Side, letter: str, t: FoTerm) -> Tuple[Strategy, FreeDeps]:
    s, free = _prepend(s, free, side, letter)
    move = MoveRef(side, 0)
    for v in term_vars(t):
        free.setdefault(v, set()).add(move)
    return s, free


def _binder(s: Strategy, free: FreeDeps, side: Side, letter: str, var: str) -> Tuple[Strategy, FreeDeps]:
    s, free = _prepend(s, free, side, letter)
    move = MoveRef(side, 0)
    deps = s.deps | frozenset((move, r) for r in free.pop(var, set()))
    return Strategy(s.src, s.tgt, deps), free


def _cut(s: Strategy, fs: FreeDeps, t: Strategy, ft: FreeDeps) -> Tuple[Strategy, FreeDeps]:
    st = compose_strategies(s, t)
    g = composition_graph(s, t)
    outer = outer_moves(s, t)
    free: FreeDeps = {}
    for v in set(fs) | set(ft):
        starts = {left_node(r) for r in fs.get(v, ())} | {right_node(r) for r in ft.get(v, ())}
        reached = set(starts)
        for node in starts:
            if node in g:
                reached |= nx.descendants(g, node)
        refs = {outer[n] for n in reached if n in outer and arena_polarity(st, outer[n]) == Polarity.PROPONENT}
        if refs:
            free[v] = refs
    return st, free


def _interpret(p: Proof, seq: Sequent) -> Tuple[Strategy, FreeDeps]:
    subs = premise_sequents(p, seq)
    if isinstance(p, Ax):
        return Strategy(Game(), Game()), {}
    if isinstance(p, Cut):
        s, fs = _interpret(p.first, subs[0])
        t, ft = _interpret(p.second, subs[1])
        return _cut(s, fs, t, ft)
    s, free = _interpret(p.premises[0], subs[0])
    if isinstance(p, ForallL):
        return _witness(s, free, Side.SRC, OPPONENT, p.witness)
    if isinstance(p, ExistsR):
        return _witness(s, free, Side.TGT, PROPONENT, p.witness)
    if isinstance(p, ForallR):
        return _binder(s, free, Side.TGT, OPPONENT, p.var)
    return _binder(s, free, Side.SRC, PROPONENT, p.var)


def interpret_proof(p: Proof, seq: Sequent, axioms: Optional[AxiomSet] = None, check: bool = True) -> Strategy:
    """
    Strategy game(A) → game(B) of a proof of A ⊢ B; variables left free by the
    whole proof contribute nothing

    Raises:
        ProofError, ArityError (when check is set)
    """
    if check:
        check_proof(p, seq, axioms)
    s, free = _interpret(p, seq)
    if free:
        logger.debug("globally free variables: %s", ", ".join(sorted(free)))
    return s


## text forms

_FORMULA_TOKEN = re.compile(r"\s*(?:(?P<turnstile>\|-|⊢)|(?P<quant>∀|∃)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[(),.]))")


def _formula_tokens(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _FORMULA_TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError("unexpected character %r" % text[pos:].lstrip()[:1], pos)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "quant":
            kind, value = "name", "forall" if value == "∀" else "exists"
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    return tokens


class _FormulaParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _formula_tokens(text)
        self.i = 0

    def peek(self) -> Tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", len(self.text))

    def take(self, value: Optional[str] = None, kind: Optional[str] = None) -> Tuple[str, str, int]:
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value or kind
            raise FormulaSyntaxError("expect %s, got %s" % (want, tok[1] or "end of input"), tok[2])
        self.i += 1
        return tok

    def done(self):
        tok = self.peek()
        if tok[0] != "end":
            raise FormulaSyntaxError("unexpected %r" % tok[1], tok[2])

    def formula(self) -> Formula:
        kind, value, pos = self.peek()
        if value == "(":
            self.take("(")
            f = self.formula()
            self.take(")")
            return f
        if kind == "name" and value in ("forall", "exists"):
            self.take()
            var = self.take(kind="name")[1]
            self.take(".")
            body = self.formula()
            return Forall(var, body) if value == "forall" else Exists(var, body)
        pred = self.take(kind="name")[1]
        return Atom(pred, self.arguments())

    def arguments(self) -> Tuple[FoTerm, ...]:
        if self.peek()[1] != "(":
            return ()
        self.take("(")
        args = []
        if self.peek()[1] != ")":
            args.append(self.term())
            while self.peek()[1] == ",":
                self.take(",")
                args.append(self.term())
        self.take(")")
        return tuple(args)

    def term(self) -> FoTerm:
        name = self.take(kind="name")[1]
        if self.peek()[1] == "(":
            return App(name, self.arguments())
        return Var(name)


def parse_formula(text: str) -> Formula:
    """
    A bare name is a variable inside terms and a proposition at formula level;
    constants are written c()

    Examples:
        parse_formula("forall x. exists y. P(x, f(y), c())")

    Raises:
        FormulaSyntaxError
    """
    p = _FormulaParser(text)
    f = p.formula()
    p.done()
    return f


def parse_fo_term(text: str) -> FoTerm:
    p = _FormulaParser(text)
    t = p.term()
    p.done()
    return t


def parse_sequent(text: str) -> Sequent:
    """
    Examples:
        parse_sequent("exists x. P(x) |- exists y. Q(y)")
    """
    p = _FormulaParser(text)
    left = p.formula()
    p.take(kind="turnstile")
    right = p.formula()
    p.done()
    return Sequent(left, right)


def _atom(text: str) -> Atom:
    f = parse_formula(text)
    if not isinstance(f, Atom):
        raise FormulaSyntaxError("expect an atom, got %s" % text)
    return f


_SEXP_TOKEN = re.compile(r'\s*(?:(?P<open>\()|(?P<close>\))|"(?P<quoted>[^"]*)"|(?P<bare>[^\s()"]+))')

SExp = Union[str, list]


def _parse_sexps(text: str) -> List[SExp]:
    stack: List[list] = [[]]
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _SEXP_TOKEN.match(text, pos)
        if not m:
            raise FormatError("unexpected character %r" % text[pos:].lstrip()[:1], pos)
        if m.lastgroup == "open":
            stack.append([])
        elif m.lastgroup == "close":
            if len(stack) == 1:
                raise FormatError("unbalanced )", m.start("close"))
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(m.group(m.lastgroup))
        pos = m.end()
    if len(stack) != 1:
        raise FormatError("unbalanced (", len(text))
    return stack[0]


_ARGS = {"ax": 2, "forall-l": 2, "forall-r": 2, "exists-l": 2, "exists-r": 2, "cut": 3, "axiom": 2}


def _shape(e: SExp) -> Tuple[str, list]:
    if not isinstance(e, list) or not e or not isinstance(e[0], str):
        raise FormatError("expect (rule ...), got %r" % (e,))
    rule, args = e[0], e[1:]
    if rule not in _ARGS:
        raise FormatError("unknown rule %r" % rule)
    if len(args) != _ARGS[rule]:
        raise FormatError("%s takes %d arguments, got %d" % (rule, _ARGS[rule], len(args)))
    return rule, args


def _text(e: SExp) -> str:
    if not isinstance(e, str):
        raise FormatError("expect a formula, term or variable, got a list")
    return e


def _proof_of(e: SExp) -> Proof:
    rule, args = _shape(e)
    if rule == "ax":
        return Ax(_atom(_text(args[0])), _atom(_text(args[1])))
    if rule == "cut":
        return Cut(parse_formula(_text(args[0])), _proof_of(args[1]), _proof_of(args[2]))
    if rule == "axiom":
        raise FormatError("axiom declarations come before the proof")
    head, sub = _text(args[0]), _proof_of(args[1])
    if rule == "forall-l":
        return ForallL(parse_fo_term(head), sub)
    if rule == "exists-r":
        return ExistsR(parse_fo_term(head), sub)
    var = parse_fo_term(head)
    if not isinstance(var, Var):
        raise FormatError("%s binds a variable, got %s" % (rule, head))
    return ForallR(var.name, sub) if rule == "forall-r" else ExistsL(var.name, sub)


def parse_proof(text: str) -> Proof:
    """
    Examples:
        parse_proof('(exists-l x (exists-r "f(x)" (ax "P(x)" "Q(f(x))")))')

    Raises:
        FormatError, FormulaSyntaxError
    """
    exps = _parse_sexps(text)
    if len(exps) != 1:
        raise FormatError("expect one proof, got %d expressions" % len(exps))
    return _proof_of(exps[0])


def parse_proof_file(text: str) -> Tuple[AxiomSet, Proof]:
    """ leading (axiom P Q) entries, then one proof """
    exps = _parse_sexps(text)
    pairs = []
    while exps and isinstance(exps[0], list) and exps[0] and exps[0][0] == "axiom":
        _, args = _shape(exps.pop(0))
        pairs.append((_atom(_text(args[0])), _atom(_text(args[1]))))
    if len(exps) != 1:
        raise FormatError("expect one proof after the axioms, got %d expressions" % len(exps))
    return AxiomSet(pairs), _proof_of(exps[0])


def _quote(value) -> str:
    s = str(value)
    if re.fullmatch(r"[^\s()\"]+", s):
        return s
    return '"%s"' % s


def format_proof(p: Proof) -> str:
    if isinstance(p, Ax):
        return "(ax %s %s)" % (_quote(p.left), _quote(p.right))
    if isinstance(p, Cut):
        return "(cut %s %s %s)" % (_quote(p.formula), format_proof(p.first), format_proof(p.second))
    head = p.witness if isinstance(p, (ForallL, ExistsR)) else p.var
    return "(%s %s %s)" % (p.rule, _quote(head), format_proof(p.premises[0]))
