# coding: utf-8
#

import pytest

from monopres import catalog
from monopres.exceptions import (FormatError, SignatureError,
                                 UnknownGeneratorError, UnknownTheoryError,
                                 WordSyntaxError)
from monopres.theory import (GeneratorDecl, Signature, make_signature,
                             parse_type_word)

BAD_THEORY = """
theory X
atoms 1
gen mu : 11 -> 1
gen eta : I -> 1
rel broken : mu = eta   # source differs
"""


def test_parse_type_word():
    for text, atoms, expect in [
        ("11", ["1"], ("1", "1")),
        ("I", ["1"], ()),
        ("", ["O", "P"], ()),
        ("OPO", ["O", "P"], ("O", "P", "O")),
        ("L R", ["L", "R"], ("L", "R")),
    ]:
        got = parse_type_word(text, atoms)
        assert got == expect, "Text: %r, Expect: %s, Got: %s" % (text, expect, got)

    with pytest.raises(WordSyntaxError):
        parse_type_word("OX", ["O", "P"])


def test_signature():
    sig = make_signature(["1"], {"mu": ("11", "1"), "eta": ("I", "1")})
    assert sig.is_pro
    assert sig.power(3) == ("1", "1", "1")
    assert sig.generator("mu").source == ("1", "1")
    assert sig.format_word(("1", "1")) == "2"
    with pytest.raises(UnknownGeneratorError):
        sig.generator("delta")

    with pytest.raises(SignatureError):
        Signature(("1", "1"), ())
    with pytest.raises(SignatureError):
        Signature(("1",), (GeneratorDecl("f", (), ()), GeneratorDecl("f", (), ())))
    with pytest.raises(SignatureError):
        make_signature(["O", "P"], {}).power(2)


def test_builtin_theories():
    for name, generators, relations in [
        ("M", 2, 3),
        ("B", 5, 18),
        ("R", 5, 19),
        ("D", 2, 2),
        ("G", 13, 27),
    ]:
        theory = catalog.builtin_theory(name)
        assert theory.name == name
        assert len(theory.generators) == generators
        assert len(theory.relations) == relations
        assert catalog.validate_theory(theory) == []

    with pytest.raises(UnknownTheoryError):
        catalog.builtin_theory("Q")


def test_crossings():
    g = catalog.builtin_theory("G").signature
    assert g.crossing("P", "O").name == "gammaOP"
    assert g.crossing("O", "O").name == "gammaO"
    assert g.crossing("O", "P") is None
    assert catalog.builtin_theory("D").signature.crossing("L", "R") is None


def test_format_parse_theory():
    for name in ["M", "B", "D", "G"]:
        theory = catalog.builtin_theory(name)
        again = catalog.parse_theory(catalog.format_theory(theory))
        assert again == theory


def test_validate_theory():
    theory = catalog.parse_theory(BAD_THEORY)
    violations = catalog.validate_theory(theory)
    assert len(violations) == 1
    assert violations[0].label == "broken"
    assert violations[0].reason == "source mismatch 2≠0"
    assert str(violations[0]) == "broken: source mismatch 2≠0"


def test_parse_theory_errors():
    for text in [
        "atoms 1\n",
        "theory X\n",
        "theory X\natoms 1\ngen mu 11 -> 1\n",
        "theory X\natoms 1\ngen mu : 11 -> 1 [braided]\n",
        "theory X\natoms 1\nlemma foo\n",
    ]:
        with pytest.raises(FormatError):
            catalog.parse_theory(text)

    with pytest.raises(UnknownGeneratorError):
        catalog.parse_theory("theory X\natoms 1\ngen mu : 11 -> 1\nrel r : nu = mu\n")
