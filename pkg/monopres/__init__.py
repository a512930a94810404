# coding: utf-8
#

"""Presentations of monoidal categories: terms over a signature, their
models (monotone maps, multirelations, relations, first-order causality
strategies), canonical words, and proofs interpreted as strategies."""

import logging

from monopres.catalog import builtin_theory, format_theory, parse_theory, validate_theory
from monopres.exceptions import *
from monopres.folog import check_proof, interpret_proof, parse_proof, parse_proof_file, parse_sequent
from monopres.games import (Game, Strategy, check_strategy, compose_strategies, enumerate_strategies, eval_games,
                            format_strategy, generator_strategy, identity_strategy, parse_strategy)
from monopres.gamewords import encode_strategy, gameword_eval, gameword_to_term, parse_gameword
from monopres.models import default_model, get_model
from monopres.multirel import (MultiRel, encode_mrel, equiv_B, eval_monotone, eval_mrel, normalize_word_mrel,
                               parse_word_mrel, word_eval_mrel, word_to_term_mrel)
from monopres.rel import Rel, encode_rel, eval_rel, normalize_word_rel, quotient
from monopres.settings import Settings
from monopres.terms import boundary, parse_term, print_term, slice_form, stairs
from monopres.verify import SuiteReport, run_suites
from monopres.version import __version__

logger = logging.getLogger(__name__)


def enable_pretty_logging(level=logging.DEBUG):
    if not logger.handlers: # pragma: no cover
        handler = logging.StreamHandler()
        formatter = logging.Formatter('[%(levelname)1.1s %(asctime)s %(module)s:%(lineno)d pid:%(process)d] %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    logger.setLevel(level)
