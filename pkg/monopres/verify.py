# coding: utf-8
#

"""Executable checks: relations hold in their models, canonical forms are in
bijection with semantic objects, rewriting terminates with unique normal
forms, strategies compose, and proofs interpret to the expected strategies.

Every suite is deterministic given the settings (bounds and seed).
"""

import dataclasses
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from monopres._proto import ModelName
from monopres.abstract import AbstractModel
from monopres.catalog import builtin_theory
from monopres.exceptions import BaseError, EigenvariableError, EncodingError, InputError
from monopres.folog import (Ax, AxiomSet, ExistsL, ExistsR, check_proof,
                            interpret_proof, parse_fo_term, parse_formula,
                            parse_proof_file, parse_sequent)
from monopres.games import (Game, before_strategy, check_strategy,
                            compose_strategies, enumerate_games,
                            enumerate_strategies, eval_games,
                            format_strategy, generator_strategy,
                            identity_strategy, make_strategy, parse_game, random_game,
                            random_strategy)
from monopres.gamewords import (encode_strategy, format_gameword,
                                gameword_eval, gameword_to_term)
from monopres.models import get_model
from monopres.multirel import (RULES_B, RULES_R, MrelWord, encode_mrel,
                               enumerate_canonical_words_mrel,
                               enumerate_mrel, enumerate_monotone,
                               enumerate_words_mrel, eval_mrel,
                               format_word_mrel, is_normal, parse_word_mrel,
                               reachable_monotone, rewrite_successors,
                               word_eval_mrel, word_measure, word_to_term_mrel)
from monopres.rel import (encode_rel, enumerate_canonical_words_rel,
                          enumerate_rel, eval_rel, normalize_word_rel,
                          quotient, word_eval_rel, word_to_term_rel)
from monopres.settings import Settings
from monopres.terms import (boundary, compose, from_slices, parse_term,
                            print_term, random_term, slice_form, tensor)
from monopres.theory import EqTheory

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class SuiteReport:
    suite: str
    instances: int = 0
    failures: List[str] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, describe: Callable[[], str]):
        """ count one instance; describe is only called on failure """
        self.instances += 1
        if not passed:
            self.failures.append(describe())

    def merge(self, other: "SuiteReport"):
        self.instances += other.instances
        self.failures.extend(other.failures)

    def text(self, limit: int = 10) -> str:
        status = "ok" if self.ok else "FAILED"
        lines = ["%s: %s, %d instances, %d failures" % (self.suite, status, self.instances, len(self.failures))]
        for f in self.failures[:limit]:
            lines.append("  " + f)
        if len(self.failures) > limit:
            lines.append("  ... %d more" % (len(self.failures) - limit))
        return "\n".join(lines)

    def porcelain(self) -> str:
        return "%s,%d,%d" % (self.suite, self.instances, len(self.failures))


def _one_line(text: str) -> str:
    return text.replace("\n", " / ")


## relations

SOUNDNESS = (
    ("M", ModelName.MONOTONE),
    ("B", ModelName.MREL),
    ("B", ModelName.REL),
    ("R", ModelName.REL),
    ("D", ModelName.GAMES),
    ("G", ModelName.GAMES),
)


def check_relations(theory: EqTheory, model: AbstractModel) -> SuiteReport:
    """
    Evaluate both sides of every relation of the theory in the model

    Examples:
        check_relations(builtin_theory("R"), get_model("mrel")) fails on qualitative
    """
    report = SuiteReport("relations-%s-%s" % (theory.name, model.name))
    for r in theory.relations:
        try:
            lhs = model.evaluate(r.lhs, theory)
            rhs = model.evaluate(r.rhs, theory)
        except BaseError as e:
            report.check(False, lambda: "%s: %s" % (r.label, e))
            continue
        report.check(model.equal(lhs, rhs), lambda: "%s: %s ≠ %s" % (
            r.label, _one_line(model.format(lhs)), _one_line(model.format(rhs))))
    return report


def relations_suite(settings: Settings) -> SuiteReport:
    report = SuiteReport("relations")
    for name, model_name in SOUNDNESS:
        report.merge(check_relations(builtin_theory(name), get_model(model_name)))
    return report


## round trips and bijections

def _dims(max_dim: int) -> List[Tuple[int, int]]:
    return [(m, n) for m in range(max_dim + 1) for n in range(max_dim + 1)]


def _game_pairs(bound: int) -> List[Tuple[Game, Game]]:
    games = enumerate_games(bound)
    return [(a, b) for a in games for b in games if len(a) + len(b) <= bound]


def roundtrip_suite(model: str, settings: Settings) -> SuiteReport:
    """ encode then evaluate every semantic object within the bounds """
    report = SuiteReport("roundtrip-%s" % model)
    if model == "mrel":
        for m, n in _dims(settings["mrel_max_dim"]):
            for r in enumerate_mrel(m, n, settings["mrel_max_entry"]):
                w = encode_mrel(r)
                report.check(word_eval_mrel(w) == r and is_normal(w, RULES_B),
                             lambda: "%r encodes to %s" % (r, format_word_mrel(w)))
    elif model == "rel":
        for m, n in _dims(settings["rel_max_dim"]):
            for r in enumerate_rel(m, n):
                w = encode_rel(r)
                report.check(word_eval_rel(w) == r and is_normal(w, RULES_R),
                             lambda: "%r encodes to %s" % (r, format_word_mrel(w)))
    elif model == "games":
        for a, b in _game_pairs(settings["games_exhaustive_bound"]):
            for s in enumerate_strategies(a, b, settings["enumerate_max_moves"]):
                try:
                    w = encode_strategy(s)
                except EncodingError as e:
                    report.check(False, lambda: str(e))
                    continue
                report.check(gameword_eval(w) == s, lambda: "%s encodes to %s" % (
                    _one_line(format_strategy(s)), format_gameword(w)))
    else:
        raise InputError("no round trip for model %r" % model)
    return report


def bijection_counts(model: str, settings: Settings) -> SuiteReport:
    """ canonical words per boundary against semantic objects per boundary """
    report = SuiteReport("bijection-%s" % model)
    if model == "mrel":
        c = settings["mrel_max_entry"]
        for m, n in _dims(settings["mrel_max_dim"]):
            words = enumerate_canonical_words_mrel(m, n, c)
            values = {word_eval_mrel(w) for w in words}
            objects = sum(1 for _ in enumerate_mrel(m, n, c))
            report.check(len(words) == len(values) == objects == (c + 1) ** (m * n),
                         lambda: "%d×%d: %d words, %d values, %d multirelations" % (
                             m, n, len(words), len(values), objects))
    elif model == "rel":
        c = settings["mrel_max_entry"]
        for m, n in _dims(settings["rel_max_dim"]):
            words = enumerate_canonical_words_rel(m, n)
            values = {word_eval_rel(w) for w in words}
            report.check(len(words) == len(values) == 2 ** (m * n),
                         lambda: "%d×%d: %d words, %d relations" % (m, n, len(words), len(values)))
            # W_i W_i => W_i forgets multiplicities and nothing else
            for w in enumerate_canonical_words_mrel(m, n, c):
                expect = encode_rel(quotient(word_eval_mrel(w)))
                got = normalize_word_rel(w)
                report.check(got == expect, lambda: "%s normalizes to %s, expect %s" % (
                    format_word_mrel(w), format_word_mrel(got), format_word_mrel(expect)))
    elif model == "monotone":
        max_dim = settings["monotone_max_dim"]
        reached = reachable_monotone(max_dim, settings["monotone_max_size"])
        for m, n in _dims(max_dim):
            values = {f for f in reached if (f.m, f.n) == (m, n)}
            expect = set(enumerate_monotone(m, n))
            report.check(values == expect, lambda: "%d→%d: %d term values, %d monotone maps" % (
                m, n, len(values), len(expect)))
    elif model == "games":
        for a, b in _game_pairs(settings["games_exhaustive_bound"]):
            strategies = enumerate_strategies(a, b, settings["enumerate_max_moves"])
            words = set()
            for s in strategies:
                try:
                    words.add(encode_strategy(s))
                except EncodingError:
                    pass
            report.check(len(words) == len(strategies),
                         lambda: "%s→%s: %d strategies, %d canonical words" % (a, b, len(strategies), len(words)))
        for src_text, tgt_text, expect in (("I", "OP", 2), ("I", "PO", 1)):
            got = len(enumerate_strategies(parse_game(src_text), parse_game(tgt_text)))
            report.check(got == expect, lambda: "%s→%s: %d strategies, expect %d" % (src_text, tgt_text, got, expect))
    else:
        raise InputError("no bijection count for model %r" % model)
    return report


## rewriting

def _normal_forms(word: MrelWord, rules: Sequence[str], memo: Dict[MrelWord, frozenset]) -> frozenset:
    if word not in memo:
        successors = rewrite_successors(word, rules)
        if not successors:
            memo[word] = frozenset([word])
        else:
            memo[word] = frozenset().union(*(_normal_forms(w, rules, memo) for _, w in successors))
    return memo[word]


def rewriting_suite(settings: Settings, rules: Sequence[str] = RULES_B) -> SuiteReport:
    """
    Every rewrite step decreases the measure and keeps the value; every order
    of rule application reaches the same normal form
    """
    name = "rewriting-R" if "WWi" in rules else "rewriting-B"
    report = SuiteReport(name)
    evaluate = word_eval_rel if "WWi" in rules else word_eval_mrel
    memo: Dict[MrelWord, frozenset] = {}
    for w in enumerate_words_mrel(settings["word_max_length"]):
        for label, v in rewrite_successors(w, rules):
            report.check(word_measure(v) < word_measure(w), lambda: "%s: %s -> %s does not decrease %s -> %s" % (
                label, format_word_mrel(w), format_word_mrel(v), word_measure(w), word_measure(v)))
            report.check(evaluate(v) == evaluate(w), lambda: "%s: %s -> %s changes the value" % (
                label, format_word_mrel(w), format_word_mrel(v)))
        forms = _normal_forms(w, rules, memo)
        report.check(len(forms) == 1, lambda: "%s has normal forms %s" % (
            format_word_mrel(w), ", ".join(sorted(format_word_mrel(f) for f in forms))))
    w = parse_word_mrel("H W0 E H Z")
    forms = _normal_forms(w, RULES_B, {})
    report.check(forms == {parse_word_mrel("W1 E H H Z")},
                 lambda: "H W0 E H Z has normal forms %s" % ", ".join(format_word_mrel(f) for f in forms))
    return report


## words against terms

def letter_term_suite(kind: str, settings: Settings) -> SuiteReport:
    """ the term of a word evaluates to the value of the word """
    report = SuiteReport("letters-%s" % kind)
    if kind == "mrel":
        for w in enumerate_words_mrel(settings["letter_term_max_length"]):
            report.check(eval_mrel(word_to_term_mrel(w)) == word_eval_mrel(w),
                         lambda: "%s in B" % format_word_mrel(w))
            report.check(eval_rel(word_to_term_rel(w)) == word_eval_rel(w),
                         lambda: "%s in R" % format_word_mrel(w))
    elif kind == "games":
        g = builtin_theory("G")
        for a, b in _game_pairs(settings["games_letter_term_bound"]):
            for s in enumerate_strategies(a, b, settings["enumerate_max_moves"]):
                w = encode_strategy(s)
                t = gameword_to_term(w, g)
                report.check(eval_games(t, g) == s, lambda: "%s: %s" % (format_gameword(w), print_term(t, g)))
    else:
        raise InputError("no letter terms for %r" % kind)
    return report


## functoriality

FUNCTORIALITY = (("M", ModelName.MONOTONE), ("B", ModelName.MREL), ("R", ModelName.REL), ("G", ModelName.GAMES))


def functoriality_suite(settings: Settings) -> SuiteReport:
    """
    eval(f ; g) and eval(f * g) against the model operations, slice forms
    evaluate like the term they came from, and the quotient commutes with eval
    """
    report = SuiteReport("functoriality")
    rng = random.Random(settings["seed"])
    max_size = settings["functoriality_max_size"]
    for name, model_name in FUNCTORIALITY:
        theory = builtin_theory(name)
        model = get_model(model_name)
        atoms = theory.atoms
        for _ in range(settings["functoriality_samples"]):
            source = tuple(rng.choice(atoms) for _ in range(rng.randint(0, 3)))
            f = random_term(theory, source, max_size // 2, rng)
            _, mid = boundary(f, theory)
            g = random_term(theory, mid, max_size // 2, rng)
            h = random_term(theory, tuple(rng.choice(atoms) for _ in range(rng.randint(0, 2))), max_size // 2, rng)
            vf, vg, vh = (model.evaluate(t, theory) for t in (f, g, h))
            report.check(model.equal(model.evaluate(compose(f, g, theory), theory), model.compose(vf, vg)),
                         lambda: "%s: compose %s with %s" % (name, print_term(f, theory), print_term(g, theory)))
            report.check(model.equal(model.evaluate(tensor(f, h), theory), model.tensor(vf, vh)),
                         lambda: "%s: tensor %s with %s" % (name, print_term(f, theory), print_term(h, theory)))
            rebuilt = from_slices(slice_form(f, theory), source)
            report.check(model.equal(model.evaluate(rebuilt, theory), vf),
                         lambda: "%s: slice form of %s" % (name, print_term(f, theory)))
            if name == "B":
                report.check(quotient(vf) == eval_rel(f, theory),
                             lambda: "quotient of %s" % print_term(f, theory))
    return report


## composition

def composition_closure_fuzz(samples: int, size_bound: int, seed: int,
                             p: float = 0.3, triples: Optional[int] = None) -> SuiteReport:
    """
    Random composable strategies compose to strategies; identity and
    associativity laws on random triples; fixed zig-zag and unit derivations
    """
    report = SuiteReport("closure")
    rng = random.Random(seed)
    half = max(size_bound // 2, 0)
    for _ in range(samples):
        a, b, c = random_game(half, rng), random_game(half, rng), random_game(half, rng)
        s, t = random_strategy(a, b, rng, p), random_strategy(b, c, rng, p)
        st = compose_strategies(s, t)
        problems = check_strategy(st)
        report.check(not problems, lambda: "%s ; %s: %s" % (
            _one_line(format_strategy(s)), _one_line(format_strategy(t)), "; ".join(problems)))
        report.check(compose_strategies(identity_strategy(a), s) == s == compose_strategies(s, identity_strategy(b)),
                     lambda: "identity law fails on %s" % _one_line(format_strategy(s)))
    for _ in range(samples if triples is None else triples):
        a, b, c, d = (random_game(half, rng) for _ in range(4))
        s, t, u = random_strategy(a, b, rng, p), random_strategy(b, c, rng, p), random_strategy(c, d, rng, p)
        left = compose_strategies(compose_strategies(s, t), u)
        right = compose_strategies(s, compose_strategies(t, u))
        report.check(left == right, lambda: "associativity fails on %s / %s / %s" % (
            _one_line(format_strategy(s)), _one_line(format_strategy(t)), _one_line(format_strategy(u))))

    g = builtin_theory("G")
    for a in enumerate_games(3):
        cc = identity_strategy(a)
        report.check(compose_strategies(cc, cc) == cc, lambda: "copycat on %s is not idempotent" % a)
    d = builtin_theory("D")
    games = get_model(ModelName.GAMES)
    for r in d.relations:
        report.check(games.evaluate(r.lhs, d) == games.evaluate(r.rhs, d), lambda: "zig-zag %s" % r.label)
    derived = eval_games(compose(parse_term("etaOP", g), parse_term("epsO * id(P)", g), g), g)
    report.check(derived == generator_strategy("etaP"), lambda: "etaOP ; (epsO * id(P)) is %s" % _one_line(str(derived)))
    # interchange: dependencies do not travel along the order of a tensor
    lhs = compose_strategies(before_strategy(identity_strategy(Game(("P",))), generator_strategy("etaP")),
                             before_strategy(generator_strategy("epsP"), identity_strategy(Game(("P",)))))
    report.check(lhs == make_strategy("P", "P"), lambda: "(id ⊲ etaP) ; (epsP ⊲ id) is %s" % _one_line(str(lhs)))
    return report


def closure_suite(settings: Settings) -> SuiteReport:
    return composition_closure_fuzz(settings["fuzz_samples"], settings["games_fuzz_bound"], settings["seed"],
                                    settings["fuzz_dep_probability"], settings["fuzz_triples"])


## logic

PERMUTED_SEQUENT = "exists y. exists x. P(x,y) |- exists z. Q(z)"
PERMUTED_AXIOM = (parse_formula("P(u,v)"), parse_formula("Q(w)"))


def _permuted_shapes(t_text: str):
    t = parse_fo_term(t_text)
    leaf = Ax(parse_formula("P(x,y)"), parse_formula("Q(%s)" % t_text))
    outer = ExistsL("y", ExistsL("x", ExistsR(t, leaf)))
    inner = ExistsL("y", ExistsR(t, ExistsL("x", leaf)))
    return outer, inner


def permutation_suite(settings: Optional[Settings] = None) -> SuiteReport:
    """
    An existential witness commutes with an unrelated existential binder:
    both proof shapes agree when x is not free in the witness, the permuted
    one is rejected when it is
    """
    report = SuiteReport("permutation")
    seq = parse_sequent(PERMUTED_SEQUENT)
    axioms = AxiomSet([PERMUTED_AXIOM])
    for t_text, deps in (("c()", 0), ("f(y)", 1)):
        outer, inner = _permuted_shapes(t_text)
        s1 = interpret_proof(outer, seq, axioms)
        s2 = interpret_proof(inner, seq, axioms)
        report.check(s1 == s2 and s1.size == deps, lambda: "witness %s: %s vs %s" % (
            t_text, _one_line(str(s1)), _one_line(str(s2))))
    outer, inner = _permuted_shapes("f(x)")
    s1 = interpret_proof(outer, seq, axioms)
    report.check(s1 == make_strategy("PP", "P", [("s1", "t0")]), lambda: "witness f(x): %s" % _one_line(str(s1)))
    try:
        check_proof(inner, seq, axioms)
    except EigenvariableError:
        report.check(True, str)
    else:
        report.check(False, lambda: "witness f(x): the permuted proof checks")
    return report


EXAMPLE_SEQUENT = "exists x. exists y. P(x,y) |- exists z. Q(z)"

EXAMPLE_WITNESSES = (
    ("f(x,y)", [("s0", "t0"), ("s1", "t0")]),
    ("f(x)", [("s0", "t0")]),
    ("c()", []),
)

# generator -> (sequent, proof file)
DEFINABLE: Dict[str, Tuple[str, str]] = {
    "muP": ("exists x. exists y. P(x,y) |- exists z. Q(z)",
            '(axiom "P(u,v)" "Q(w)") (exists-l x (exists-l y (exists-r "f(x,y)" (ax "P(x,y)" "Q(f(x,y))"))))'),
    "etaP": ("P |- exists z. Q(z)",
             '(axiom P "Q(w)") (exists-r "c()" (ax P "Q(c())"))'),
    "deltaP": ("exists x. P(x) |- exists y. exists z. Q(y,z)",
               '(axiom "P(u)" "Q(v,w)") (exists-l x (exists-r x (exists-r x (ax "P(x)" "Q(x,x)"))))'),
    "epsP": ("exists x. P(x) |- Q",
             '(axiom "P(u)" Q) (exists-l x (ax "P(x)" Q))'),
    "gammaP": ("exists x. exists y. P(x,y) |- exists z. exists w. Q(z,w)",
               '(axiom "P(u,v)" "Q(r,w)") (exists-l x (exists-l y (exists-r y (exists-r x (ax "P(x,y)" "Q(y,x)")))))'),
    "muO": ("forall x. forall y. P(x,y) |- forall z. Q(z)",
            '(axiom "P(u,v)" "Q(w)") (forall-r z (forall-l z (forall-l z (ax "P(z,z)" "Q(z)"))))'),
    "etaO": ("P |- forall z. Q(z)",
             '(axiom P "Q(w)") (forall-r z (ax P "Q(z)"))'),
    "deltaO": ("forall x. P(x) |- forall y. forall z. Q(y,z)",
               '(axiom "P(u)" "Q(v,w)") (forall-r y (forall-r z (forall-l "f(y,z)" (ax "P(f(y,z))" "Q(y,z)"))))'),
    "epsO": ("forall x. P(x) |- Q",
             '(axiom "P(u)" Q) (forall-l "c()" (ax "P(c())" Q))'),
    "gammaO": ("forall x. forall y. P(x,y) |- forall z. forall w. Q(z,w)",
               '(axiom "P(u,v)" "Q(r,w)") (forall-r z (forall-r w (forall-l w (forall-l z (ax "P(w,z)" "Q(z,w)")))))'),
    "gammaOP": ("exists x. forall y. P(x,y) |- forall z. exists w. Q(z,w)",
                '(axiom "P(u,v)" "Q(r,w)") (exists-l x (forall-r z (forall-l z (exists-r x (ax "P(x,z)" "Q(z,x)")))))'),
    "etaOP": ("P |- forall z. exists w. Q(z,w)",
              '(axiom P "Q(r,w)") (forall-r z (exists-r z (ax P "Q(z,z)")))'),
    "epsOP": ("exists x. forall y. P(x,y) |- Q",
              '(axiom "P(u,v)" Q) (exists-l x (forall-l x (ax "P(x,x)" Q)))'),
}


def definability_suite(settings: Optional[Settings] = None) -> SuiteReport:
    """ each generator strategy is the interpretation of a proof """
    report = SuiteReport("definability")
    seq = parse_sequent(EXAMPLE_SEQUENT)
    axioms = AxiomSet([(parse_formula("P(x,y)"), parse_formula("Q(z)"))])
    for t_text, deps in EXAMPLE_WITNESSES:
        p = ExistsL("x", ExistsL("y", ExistsR(parse_fo_term(t_text), Ax(
            parse_formula("P(x,y)"), parse_formula("Q(%s)" % t_text)))))
        s = interpret_proof(p, seq, axioms)
        expect = make_strategy("PP", "P", deps)
        report.check(s == expect, lambda: "witness %s: %s" % (t_text, _one_line(str(s))))
    for name, (sequent_text, proof_text) in DEFINABLE.items():
        try:
            axioms, p = parse_proof_file(proof_text)
            s = interpret_proof(p, parse_sequent(sequent_text), axioms)
        except BaseError as e:
            report.check(False, lambda: "%s: %s" % (name, e))
            continue
        expect = generator_strategy(name)
        report.check(s == expect and not check_strategy(s), lambda: "%s: %s" % (name, _one_line(str(s))))
    return report


## registry

SUITES: Dict[str, Callable[[Settings], SuiteReport]] = {
    "relations": relations_suite,
    "roundtrip-mrel": lambda st: roundtrip_suite("mrel", st),
    "roundtrip-rel": lambda st: roundtrip_suite("rel", st),
    "roundtrip-games": lambda st: roundtrip_suite("games", st),
    "bijection-mrel": lambda st: bijection_counts("mrel", st),
    "bijection-rel": lambda st: bijection_counts("rel", st),
    "bijection-monotone": lambda st: bijection_counts("monotone", st),
    "bijection-games": lambda st: bijection_counts("games", st),
    "rewriting-B": lambda st: rewriting_suite(st, RULES_B),
    "rewriting-R": lambda st: rewriting_suite(st, RULES_R),
    "letters-mrel": lambda st: letter_term_suite("mrel", st),
    "letters-games": lambda st: letter_term_suite("games", st),
    "functoriality": functoriality_suite,
    "closure": closure_suite,
    "permutation": permutation_suite,
    "definability": definability_suite,
}


def run_suite(name: str, settings: Settings) -> SuiteReport:
    """
    Raises:
        InputError: unknown suite
    """
    if name not in SUITES:
        raise InputError("unknown suite %r, expect one of %s" % (name, ", ".join(SUITES)))
    logger.info("suite %s: start", name)
    try:
        report = SUITES[name](settings)
    except BaseError as e:
        report = SuiteReport(name)
        report.check(False, lambda: "aborted: %s" % e)
    logger.info("suite %s: %d instances, %d failures", name, report.instances, len(report.failures))
    return report


def run_suites(names: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> List[SuiteReport]:
    """ reports come back in the requested order whatever the worker count """
    names = list(names or SUITES)
    settings = settings or Settings()
    for name in names:
        if name not in SUITES:
            raise InputError("unknown suite %r, expect one of %s" % (name, ", ".join(SUITES)))
    with ThreadPoolExecutor(max_workers=settings["workers"]) as pool:
        return list(pool.map(lambda n: run_suite(n, settings), names))
