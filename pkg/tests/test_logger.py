#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging

import pytest

from monopres import enable_pretty_logging


def test_enable_pretty_logging(caplog: pytest.LogCaptureFixture):
    logger = logging.getLogger("monopres")
    logger.setLevel(logging.WARNING)

    logger.info("should not be printed")
    enable_pretty_logging()
    logger.info("hello")
    enable_pretty_logging(logging.INFO)
    logger.info("world")
    logger.debug("should not be printed")

    assert "hello" in caplog.text
    assert "world" in caplog.text
    assert "should not be printed" not in caplog.text


def test_suite_logs(caplog: pytest.LogCaptureFixture):
    from monopres.verify import run_suite
    from monopres.settings import Settings

    enable_pretty_logging(logging.INFO)
    run_suite("permutation", Settings())
    assert "suite permutation: start" in caplog.text
    assert "0 failures" in caplog.text
