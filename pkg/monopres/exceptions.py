# coding: utf-8
#
# BaseError
#   +- InputError
#   |   +- ParseError
#   |   |   +- TermSyntaxError
#   |   |   +- WordSyntaxError
#   |   |   +- FormulaSyntaxError
#   |   |   +- FormatError
#   |   +- UnknownTheoryError
#   |   +- UnknownGeneratorError
#   |   +- TermTypeError
#   |   |   +- CrossingUnavailableError
#   |   +- WordTypeError
#   |   +- DimensionError
#   |   +- GameMismatchError
#   |   +- MoveRangeError
#   |   +- ArityError
#   +- SignatureError
#   +- ModelError
#   |   +- UnsupportedTheoryError
#   |   +- BoundExceededError
#   +- StrategyError
#   |   +- PolarityError
#   |   +- CycleError
#   |   +- EncodingError
#   +- ProofError
#      +- RuleMismatchError
#      +- EigenvariableError
#      +- AxiomError

from typing import Optional


class BaseError(Exception):
    """ base error for monopres """


## InputError, command line exits with status 2
class InputError(BaseError): ...


class ParseError(InputError):
    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message, position)
        self.message = message
        self.position = position

    def __str__(self):
        if self.position is None:
            return self.message
        return "%s (at position %d)" % (self.message, self.position)


class TermSyntaxError(ParseError):...
class WordSyntaxError(ParseError):...
class FormulaSyntaxError(ParseError):...
class FormatError(ParseError):...

class UnknownTheoryError(InputError):...
class UnknownGeneratorError(InputError):...
class TermTypeError(InputError):...
class CrossingUnavailableError(TermTypeError):...
class WordTypeError(InputError):...
class DimensionError(InputError):...
class GameMismatchError(InputError):...
class MoveRangeError(InputError):...
class ArityError(InputError):...


class SignatureError(BaseError):...


## ModelError
class ModelError(BaseError): ...
class UnsupportedTheoryError(ModelError):...
class BoundExceededError(ModelError):...


## StrategyError
class StrategyError(BaseError): ...
class PolarityError(StrategyError):...
class CycleError(StrategyError):...
class EncodingError(StrategyError):... # no word reaches the strategy


## ProofError
class ProofError(BaseError):
    def __init__(self, message: str, path: str = "root"):
        super().__init__(message, path)
        self.message = message
        self.path = path

    def __str__(self):
        return "%s: %s" % (self.path, self.message)


class RuleMismatchError(ProofError):...
class EigenvariableError(ProofError):...
class AxiomError(ProofError):...
