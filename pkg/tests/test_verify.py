# coding: utf-8
#

import pytest

from monopres.catalog import builtin_theory
from monopres.exceptions import InputError
from monopres.models import default_model, get_model
from monopres.settings import Settings
from monopres.verify import (SUITES, SuiteReport, bijection_counts, check_relations,
                             composition_closure_fuzz, roundtrip_suite, run_suite,
                             run_suites)


def small_settings() -> Settings:
    settings = Settings()
    for key, value in [
        ("mrel_max_dim", 2),
        ("mrel_max_entry", 1),
        ("rel_max_dim", 2),
        ("word_max_length", 5),
        ("letter_term_max_length", 5),
        ("monotone_max_dim", 2),
        ("monotone_max_size", 4),
        ("games_exhaustive_bound", 3),
        ("games_letter_term_bound", 2),
        ("games_fuzz_bound", 4),
        ("fuzz_samples", 30),
        ("fuzz_triples", 20),
        ("functoriality_samples", 10),
        ("functoriality_max_size", 4),
        ("seed", 7),
        ("workers", 2),
    ]:
        settings[key] = value
    return settings


def test_suite_report():
    report = SuiteReport("demo")
    report.check(True, lambda: "never called")
    report.check(False, lambda: "second instance")
    assert not report.ok
    assert report.porcelain() == "demo,2,1"
    assert report.text() == "demo: FAILED, 2 instances, 1 failures\n  second instance"

    other = SuiteReport("other", 3)
    other.merge(report)
    assert other.instances == 5
    assert other.failures == ["second instance"]

    many = SuiteReport("many")
    for i in range(12):
        many.check(False, lambda: "f%d" % i)
    assert many.text(limit=2).splitlines()[-1] == "  ... 10 more"


def test_check_relations():
    for name in ["M", "B", "R", "D", "G"]:
        theory = builtin_theory(name)
        report = check_relations(theory, default_model(theory))
        assert report.ok, report.text()
        assert report.instances == len(theory.relations)

    # multiplicities tell delta ; mu from id:1
    report = check_relations(builtin_theory("R"), get_model("mrel"))
    assert len(report.failures) == 1
    assert report.failures[0].startswith("qualitative: ")


def test_check_relations_unsupported():
    report = check_relations(builtin_theory("G"), get_model("mrel"))
    assert report.instances == len(builtin_theory("G").relations)
    assert not report.ok


def test_suites():
    settings = small_settings()
    for name in SUITES:
        report = run_suite(name, settings)
        assert report.ok, report.text()
        assert report.instances > 0, name


def test_run_suites():
    settings = small_settings()
    names = ["permutation", "relations", "definability"]
    reports = run_suites(names, settings)
    assert [r.suite for r in reports] == names

    with pytest.raises(InputError):
        run_suites(["relations", "nope"], settings)
    with pytest.raises(InputError):
        run_suite("nope", settings)


def test_closure_fuzz_deterministic():
    a = composition_closure_fuzz(20, 4, seed=3, triples=10)
    b = composition_closure_fuzz(20, 4, seed=3, triples=10)
    assert a == b
    assert a.ok, a.text()


def test_games_suites_default_bound():
    settings = Settings()
    assert settings["games_exhaustive_bound"] == 5
    for report in [roundtrip_suite("games", settings), bijection_counts("games", settings)]:
        assert report.ok, report.text()
        assert report.instances > 0


def test_monotone_bijection():
    settings = small_settings()
    settings["monotone_max_dim"] = 3
    settings["monotone_max_size"] = 6
    report = bijection_counts("monotone", settings)
    assert report.ok, report.text()
    assert report.instances == 16


def test_mrel_suites_default_bound():
    settings = Settings()
    report = bijection_counts("mrel", settings)
    assert report.ok, report.text()
    assert report.instances == 16
