# coding: utf-8
#

import abc
import logging
from typing import Any, Tuple

from monopres.exceptions import UnsupportedTheoryError
from monopres.terms import Compose, Generator, Identity, Tensor, Term, boundary
from monopres.theory import EqTheory, TypeWord

logger = logging.getLogger(__name__)


class AbstractModel(abc.ABC):
    """
    A strict monoidal category in which terms are evaluated

    Subclasses give the image of identities and generators plus the
    composition and tensor of values; evaluate is the fold over a term.
    """
    name: str = ""
    theories: Tuple[str, ...] = ()

    @abc.abstractmethod
    def identity(self, word: TypeWord) -> Any:
        pass

    @abc.abstractmethod
    def generator(self, name: str) -> Any:
        pass

    @abc.abstractmethod
    def compose(self, f: Any, g: Any) -> Any:
        """ f then g """

    @abc.abstractmethod
    def tensor(self, f: Any, g: Any) -> Any:
        pass

    @abc.abstractmethod
    def format(self, value: Any) -> str:
        """ text form of a value """

    def equal(self, a: Any, b: Any) -> bool:
        return a == b

    def supports(self, theory: EqTheory) -> bool:
        return theory.name in self.theories

    def evaluate(self, term: Term, theory: EqTheory) -> Any:
        """
        Raises:
            UnsupportedTheoryError, TermTypeError
        """
        if not self.supports(theory):
            raise UnsupportedTheoryError("model %s does not interpret theory %s" % (self.name, theory.name))
        boundary(term, theory)
        return self._fold(term)

    def _fold(self, t: Term) -> Any:
        if isinstance(t, Identity):
            return self.identity(t.word)
        if isinstance(t, Generator):
            return self.generator(t.name)
        if isinstance(t, Compose):
            return self.compose(self._fold(t.first), self._fold(t.then))
        if isinstance(t, Tensor):
            return self.tensor(self._fold(t.top), self._fold(t.bottom))
        raise TypeError("not a term: %r" % (t,))
