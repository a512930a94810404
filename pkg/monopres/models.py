# coding: utf-8
#

import logging
from typing import Dict, Type, Union

from monopres._proto import ModelName
from monopres.abstract import AbstractModel
from monopres.exceptions import UnknownTheoryError, UnsupportedTheoryError
from monopres.games import GamesModel
from monopres.multirel import MonotoneModel, MultiRelModel
from monopres.rel import RelModel
from monopres.theory import EqTheory

logger = logging.getLogger(__name__)

_MODELS: Dict[ModelName, Type[AbstractModel]] = {
    ModelName.MONOTONE: MonotoneModel,
    ModelName.MREL: MultiRelModel,
    ModelName.REL: RelModel,
    ModelName.GAMES: GamesModel,
}

_DEFAULT_MODELS = {
    "M": ModelName.MONOTONE,
    "B": ModelName.MREL,
    "R": ModelName.REL,
    "D": ModelName.GAMES,
    "G": ModelName.GAMES,
}


def get_model(name: Union[str, ModelName]) -> AbstractModel:
    """
    Raises:
        UnsupportedTheoryError: unknown model name
    """
    try:
        return _MODELS[ModelName(name)]()
    except ValueError:
        raise UnsupportedTheoryError("unknown model %r, expect one of %s" % (
            name, ", ".join(m.value for m in ModelName)))


def default_model(theory: Union[str, EqTheory]) -> AbstractModel:
    name = theory.name if isinstance(theory, EqTheory) else theory
    if name not in _DEFAULT_MODELS:
        raise UnknownTheoryError("no model for theory %r" % name)
    return get_model(_DEFAULT_MODELS[name])
