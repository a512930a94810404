#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import monopres as mp


def test_import():
    mp.builtin_theory
    mp.parse_term
    mp.print_term
    mp.eval_mrel
    mp.eval_rel
    mp.eval_games
    mp.eval_monotone
    mp.encode_mrel
    mp.encode_strategy
    mp.gameword_to_term
    mp.check_proof
    mp.interpret_proof
    mp.run_suites
    mp.Settings
    mp.BaseError
    mp.InputError
    mp.ProofError
    mp.__version__
