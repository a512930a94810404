import enum

EMPTY_WORD = "I"
PRO_ATOM = "1"

# letters of polarized games
OPPONENT = "O"
PROPONENT = "P"


class Side(str, enum.Enum):
    SRC = "src"
    TGT = "tgt"


class Polarity(enum.IntEnum):
    OPPONENT = -1
    PROPONENT = 1

    @classmethod
    def of_letter(cls, letter: str) -> "Polarity":
        if letter == OPPONENT:
            return cls.OPPONENT
        if letter == PROPONENT:
            return cls.PROPONENT
        raise ValueError("Unknown polarity letter:", letter)


class ModelName(str, enum.Enum):
    MONOTONE = "monotone"
    MREL = "mrel"
    REL = "rel"
    GAMES = "games"


THEORY_NAMES = ("M", "B", "R", "D", "G")
