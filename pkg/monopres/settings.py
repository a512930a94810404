# coding: utf-8
#

import logging
import os
import pprint
from typing import Any

logger = logging.getLogger(__name__)

DEFAULT_SEED = int(os.getenv("MONOPRES_SEED", 42))
DEFAULT_WORKERS = int(os.getenv("MONOPRES_WORKERS", 4))


class Settings(object):
    """ Bounds and knobs of the verification suites; values are type checked on assignment """
    def __init__(self):
        self._defaults = {
            "mrel_max_dim": 3,
            "mrel_max_entry": 2,
            "rel_max_dim": 3,
            "word_max_length": 8,
            "letter_term_max_length": 8,
            "monotone_max_dim": 4,
            "monotone_max_size": 8,
            "games_exhaustive_bound": 5,
            "games_letter_term_bound": 4,
            "games_fuzz_bound": 8,
            "enumerate_max_moves": 10,
            "fuzz_samples": 1000,
            "fuzz_triples": 300,
            "fuzz_dep_probability": 0.3,
            "functoriality_samples": 200,
            "functoriality_max_size": 8,
            "seed": DEFAULT_SEED,
            "workers": DEFAULT_WORKERS,
        }

        self._deprecated_props = {
            "games_bound": "Use games_exhaustive_bound instead",
            "samples": "Use fuzz_samples instead",
        }

        self._prop_types = {
            "fuzz_dep_probability": (float, int),
        }
        for k, v in self._defaults.items():
            if k not in self._prop_types:
                self._prop_types[k] = type(v)

        self._set_methods = {
            "fuzz_dep_probability": self.__set_probability,
            "workers": self.__set_workers,
        }

    def __set_probability(self, value: float):
        assert isinstance(value, (int, float)), "fuzz_dep_probability must be a number"
        assert 0 <= value <= 1, "fuzz_dep_probability must be within [0, 1]"
        self._defaults["fuzz_dep_probability"] = float(value)

    def __set_workers(self, value: int):
        assert isinstance(value, int) and not isinstance(value, bool), "workers must be int"
        self._defaults["workers"] = max(1, value)

    def get(self, key: str) -> Any:
        return self._defaults.get(key)

    def _set(self, key: str, val: Any):
        if key in self._set_methods:
            return self._set_methods[key](val)

        if key in self._deprecated_props:
            reason = self._deprecated_props[key] or "{} is deprecated".format(key)
            logger.warning("settings[{}] deprecated: {}".format(key, reason))
            return

        if key not in self._prop_types:
            raise AttributeError("invalid attribute", key)

        # bool values are rejected for int keys
        if isinstance(val, bool) and self._prop_types[key] is not bool:
            raise TypeError("invalid type, only accept: %r" % self._prop_types[key])
        if not isinstance(val, self._prop_types[key]):
            raise TypeError("invalid type, only accept: %r" % self._prop_types[key])

        self._defaults[key] = val

    def __setitem__(self, key: str, val: Any):
        self._set(key, val)

    def __getitem__(self, key: str) -> Any:
        if key not in self._defaults:
            raise RuntimeError("invalid key", key)
        return self.get(key)

    def copy(self) -> "Settings":
        s = Settings()
        s._defaults = dict(self._defaults)
        return s

    def __repr__(self):
        return pprint.pformat(self._defaults)
