# coding: utf-8
#

from __future__ import absolute_import, print_function

import argparse
import logging
import sys

from monopres import enable_pretty_logging
from monopres.catalog import builtin_theory, format_theory, validate_theory
from monopres.exceptions import BaseError, InputError, ProofError, StrategyError
from monopres.folog import check_proof, interpret_proof, parse_proof_file, parse_sequent
from monopres.games import (check_strategy, enumerate_strategies, format_strategy, parse_game,
                            parse_strategy)
from monopres.gamewords import encode_strategy, format_gameword, gameword_eval, gameword_to_term, parse_gameword
from monopres.models import default_model, get_model
from monopres.multirel import (encode_mrel, enumerate_mrel, enumerate_monotone, format_matrix, format_word_mrel,
                               normalize_word_mrel, parse_mrel, parse_word_mrel, word_to_term_mrel)
from monopres.rel import encode_rel, enumerate_rel, normalize_word_rel, parse_rel, word_to_term_rel
from monopres.render import render, strategy_drawing, term_drawing
from monopres.settings import Settings
from monopres.terms import boundary, parse_term, print_term
from monopres.utils import read_text_argument
from monopres.verify import SUITES, run_suites
from monopres.version import __version__

logger = logging.getLogger(__name__)

WORD_THEORIES = ("B", "R", "G")


def _one_line(text: str) -> str:
    return text.replace("\n", " / ")


def _theory(args):
    return builtin_theory(args.theory)


def _model(args, theory):
    return get_model(args.model) if getattr(args, "model", None) else default_model(theory)


def _emit(drawing, args) -> bool:
    """ write pictures asked for by --svg/--png; True if something was written """
    written = False
    if getattr(args, "svg", None):
        render(drawing, "svg", args.svg)
        written = True
    if getattr(args, "png", None):
        render(drawing, "png", args.png)
        written = True
    return written


def cmd_version(args):
    print("monopres version: %s" % __version__)


def cmd_eval(args):
    theory = _theory(args)
    t = parse_term(read_text_argument(args.term), theory)
    model = _model(args, theory)
    value = model.evaluate(t, theory)
    print(_one_line(model.format(value)) if args.porcelain else model.format(value))


def _word_codec(name: str):
    """ parse, format, normalize of the canonical words of a theory """
    if name == "B":
        return parse_word_mrel, format_word_mrel, normalize_word_mrel
    if name == "R":
        return parse_word_mrel, format_word_mrel, normalize_word_rel
    if name == "G":
        return parse_gameword, format_gameword, lambda w: encode_strategy(gameword_eval(w))
    raise InputError("canonical words exist for theories %s, not %s" % (", ".join(WORD_THEORIES), name))


def cmd_normalize(args):
    theory = _theory(args)
    parse, fmt, normalize = _word_codec(theory.name)
    if args.word:
        word = parse(read_text_argument(args.word))
        try:
            print(fmt(normalize(word)))
        except StrategyError as e:
            # a G word that types to no strategy is malformed input
            raise InputError("ill-typed word: %s" % e) from e
        return
    if not args.term:
        raise InputError("normalize needs a term or --word")
    t = parse_term(read_text_argument(args.term), theory)
    value = default_model(theory).evaluate(t, theory)
    print(fmt(_encode_value(theory.name, value)))


def _encode_value(name: str, value):
    if name == "B":
        return encode_mrel(value)
    if name == "R":
        return encode_rel(value)
    return encode_strategy(value)


def cmd_equiv(args):
    theory = _theory(args)
    t1 = parse_term(read_text_argument(args.term1), theory)
    t2 = parse_term(read_text_argument(args.term2), theory)
    b1, b2 = boundary(t1, theory), boundary(t2, theory)
    if b1 != b2:
        raise InputError("boundaries differ: %s→%s vs %s→%s" % (
            theory.signature.format_word(b1[0]), theory.signature.format_word(b1[1]),
            theory.signature.format_word(b2[0]), theory.signature.format_word(b2[1])))
    model = _model(args, theory)
    v1, v2 = model.evaluate(t1, theory), model.evaluate(t2, theory)
    if model.equal(v1, v2):
        print("equivalent")
        return
    print("not equivalent")
    if not args.porcelain:
        print(model.format(v1))
        print("--")
        print(model.format(v2))
    sys.exit(1)


def cmd_encode(args):
    theory = _theory(args)
    text = read_text_argument(args.value)
    if theory.name == "B":
        word = encode_mrel(parse_mrel(text))
        term = word_to_term_mrel(word)
        print(format_word_mrel(word))
    elif theory.name == "R":
        word = encode_rel(parse_rel(text))
        term = word_to_term_rel(word)
        print(format_word_mrel(word))
    elif theory.name == "G":
        word = encode_strategy(parse_strategy(text))
        term = gameword_to_term(word, theory)
        print(format_gameword(word))
    else:
        raise InputError("canonical words exist for theories %s, not %s" % (", ".join(WORD_THEORIES), theory.name))
    if args.term:
        print(print_term(term, theory))


def cmd_interpret(args):
    axioms, proof = parse_proof_file(read_text_argument(args.proof))
    s = interpret_proof(proof, parse_sequent(read_text_argument(args.sequent)), axioms)
    if not _emit(strategy_drawing(s), args):
        print(format_strategy(s))


def cmd_check(args):
    if args.file is None:
        theory = _theory(args)
        if args.dump:
            print(format_theory(theory), end="")
            return
        violations = validate_theory(theory)
        for v in violations:
            print(v)
        if violations:
            sys.exit(1)
        print("%s: %d generators, %d relations, ok" % (theory.name, len(theory.generators), len(theory.relations)))
        return
    text = read_text_argument(args.file)
    if args.sequent:
        axioms, proof = parse_proof_file(text)
        try:
            check_proof(proof, parse_sequent(read_text_argument(args.sequent)), axioms)
        except ProofError as e:
            print(e)
            sys.exit(1)
        print("ok")
        return
    problems = check_strategy(parse_strategy(text))
    for p in problems:
        print(p)
    if problems:
        sys.exit(1)
    print("ok")


def cmd_enumerate(args):
    theory = _theory(args)
    settings = Settings()
    name = theory.name
    if name in ("M", "B", "R"):
        try:
            m, n = int(args.src), int(args.tgt)
        except ValueError:
            raise InputError("dimensions are natural numbers, got %r and %r" % (args.src, args.tgt))
        if name == "M":
            for f in enumerate_monotone(m, n):
                print(" ".join(str(x) for x in f.image) or "-")
            return
        if name == "B":
            bound = args.bound if args.bound is not None else settings["mrel_max_entry"]
            for r in enumerate_mrel(m, n, bound):
                print("%s\t%s" % (format_word_mrel(encode_mrel(r)), _one_line(format_matrix(r))))
            return
        for r in enumerate_rel(m, n):
            print("%s\t%s" % (format_word_mrel(encode_rel(r)), _one_line(format_matrix(r))))
        return
    if name == "G":
        bound = args.bound if args.bound is not None else settings["enumerate_max_moves"]
        for s in enumerate_strategies(parse_game(args.src), parse_game(args.tgt), bound):
            print("%s\t%s" % (format_gameword(encode_strategy(s)), _one_line(format_strategy(s))))
        return
    raise InputError("nothing to enumerate for theory %s" % name)


def cmd_verify(args):
    settings = Settings()
    if args.seed is not None:
        settings["seed"] = args.seed
    if args.workers is not None:
        settings["workers"] = args.workers
    if args.bound is not None:
        settings["games_exhaustive_bound"] = args.bound
    reports = run_suites(args.suites or list(SUITES), settings)
    for r in reports:
        print(r.porcelain() if args.porcelain else r.text())
    if not all(r.ok for r in reports):
        sys.exit(1)


def cmd_render(args):
    if args.strategy:
        drawing = strategy_drawing(parse_strategy(read_text_argument(args.strategy)))
    elif args.term:
        theory = _theory(args)
        drawing = term_drawing(parse_term(read_text_argument(args.term), theory), theory)
    else:
        raise InputError("render needs a term or --strategy")
    if not _emit(drawing, args):
        print(render(drawing, "ascii"))


_theory_flag = dict(args=["-t", "--theory"], choices=["M", "B", "R", "D", "G"], default="B", help="builtin theory")
_model_flag = dict(args=["--model"], choices=["monotone", "mrel", "rel", "games"], help="model, default by theory")
_porcelain_flag = dict(args=["--porcelain"], action="store_true", help="machine readable output")
_svg_flag = dict(args=["--svg"], metavar="PATH", help="write an SVG picture")
_png_flag = dict(args=["--png"], metavar="PATH", help="write a PNG picture")
_sequent_flag = dict(args=["--sequent"], help="sequent 'A |- B', text or file")

_commands = [
    dict(action=cmd_version, command="version", help="show version"),
    dict(
        action=cmd_eval,
        command="eval",
        help="evaluate a term in a model",
        flags=[
            _theory_flag, _model_flag, _porcelain_flag,
            dict(args=["term"], help="term, text or file"),
        ],
    ),
    dict(
        action=cmd_normalize,
        command="normalize",
        help="canonical word of a word or a term",
        flags=[
            _theory_flag,
            dict(args=["--word"], help="word, text or file"),
            dict(args=["term"], nargs="?", help="term, text or file"),
        ],
    ),
    dict(
        action=cmd_equiv,
        command="equiv",
        help="exit 0 when two terms are equal in the model, 1 otherwise",
        flags=[
            _theory_flag, _model_flag, _porcelain_flag,
            dict(args=["term1"], help="term, text or file"),
            dict(args=["term2"], help="term, text or file"),
        ],
    ),
    dict(
        action=cmd_encode,
        command="encode",
        help="canonical word of a matrix or strategy file",
        flags=[
            _theory_flag,
            dict(args=["--term"], action="store_true", help="also print the term of the word"),
            dict(args=["value"], help="matrix or strategy, text or file"),
        ],
    ),
    dict(
        action=cmd_interpret,
        command="interpret",
        help="strategy of a proof",
        flags=[
            dict(args=["--sequent"], required=True, help="sequent 'A |- B', text or file"),
            _svg_flag, _png_flag,
            dict(args=["proof"], help="proof file, axioms first"),
        ],
    ),
    dict(
        action=cmd_check,
        command="check",
        help="validate a builtin theory, a strategy file or a proof file",
        flags=[
            _theory_flag, _sequent_flag,
            dict(args=["--dump"], action="store_true", help="print the theory text form"),
            dict(args=["file"], nargs="?", help="strategy file, or proof file with --sequent"),
        ],
    ),
    dict(
        action=cmd_enumerate,
        command="enumerate",
        help="semantic objects between two boundaries with their canonical words",
        flags=[
            _theory_flag,
            dict(args=["--bound"], type=int, help="max entry (B) or max moves (G)"),
            dict(args=["src"], help="dimension, or game for G"),
            dict(args=["tgt"], help="dimension, or game for G"),
        ],
    ),
    dict(
        action=cmd_verify,
        command="verify",
        help="run verification suites",
        flags=[
            _porcelain_flag,
            dict(args=["--seed"], type=int, help="random seed"),
            dict(args=["--bound"], type=int, help="exhaustive game bound"),
            dict(args=["--workers"], type=int, help="parallel suites"),
            dict(args=["suites"], nargs="*", help="suite names, default all: %s" % ", ".join(SUITES)),
        ],
    ),
    dict(
        action=cmd_render,
        command="render",
        help="draw a term or a strategy, ASCII unless --svg/--png",
        flags=[
            _theory_flag, _svg_flag, _png_flag,
            dict(args=["--strategy"], help="strategy, text or file"),
            dict(args=["term"], nargs="?", help="term, text or file"),
        ],
    ),
]


def main():
    # yapf: disable
    parser = argparse.ArgumentParser(
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-d", "--debug", action="store_true",
                        help="show debug log")

    subparser = parser.add_subparsers(dest='subparser')

    actions = {}
    for c in _commands:
        cmd_name = c['command']
        actions[cmd_name] = c['action']
        sp = subparser.add_parser(cmd_name, help=c.get('help'),
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        for f in c.get('flags', []):
            kwargs = f.copy()
            args = kwargs.pop('args')
            sp.add_argument(*args, **kwargs)

    args = parser.parse_args()
    enable_pretty_logging(logging.DEBUG if args.debug else logging.INFO)

    if args.debug:
        logger.debug("args: %s", args)

    if args.subparser:
        try:
            actions[args.subparser](args)
        except InputError as e:
            print("error: %s" % e, file=sys.stderr)
            sys.exit(2)
        except BaseError as e:
            print("error: %s" % e, file=sys.stderr)
            sys.exit(1)
        return

    parser.print_help()
    # yapf: enable


if __name__ == "__main__":
    main()
