# coding: utf-8
#

import pytest

from monopres.exceptions import (ArityError, AxiomError, EigenvariableError,
                                 FormatError, FormulaSyntaxError,
                                 RuleMismatchError)
from monopres.folog import (App, Atom, AxiomSet, Ax, Cut, Exists, ExistsL,
                            ExistsR, Forall, ForallL, ForallR, Var,
                            alpha_equal, check_arities, check_proof,
                            format_proof, free_vars, game_of_formula,
                            game_of_sequent, interpret_proof, is_valid_proof,
                            parse_fo_term, parse_formula, parse_proof,
                            parse_proof_file, parse_sequent, proof_size,
                            substitute)
from monopres.games import generator_strategy, identity_strategy, make_strategy, parse_game

F = parse_formula


def test_parse_formula():
    f = F("forall x. exists y. P(x, f(y), c())")
    assert f == Forall("x", Exists("y", Atom("P", (Var("x"), App("f", (Var("y"),)), App("c")))))
    assert str(f) == "forall x. exists y. P(x,f(y),c())"
    assert F("∀x. P(x)") == F("forall x. P(x)")
    assert F("(exists x. (P(x)))") == Exists("x", Atom("P", (Var("x"),)))
    assert F("Q") == Atom("Q")

    for text in ["forall . P", "P(x", "P(x) Q", "forall x P(x)", "P(x) $"]:
        with pytest.raises(FormulaSyntaxError):
            F(text)


def test_parse_sequent():
    seq = parse_sequent("exists x. P(x) ⊢ exists y. Q(y)")
    assert seq.left == F("exists x. P(x)")
    assert str(seq) == "exists x. P(x) |- exists y. Q(y)"
    assert game_of_sequent(seq) == (parse_game("P"), parse_game("P"))
    with pytest.raises(FormulaSyntaxError):
        parse_sequent("P Q")


def test_free_vars():
    for text, expect in [
        ("P(x,y)", {"x", "y"}),
        ("forall x. P(x,y)", {"y"}),
        ("exists x. forall y. P(x,y)", set()),
        ("P(f(x),c())", {"x"}),
    ]:
        assert free_vars(F(text)) == expect, text
    assert free_vars(parse_fo_term("g(u,h(v))")) == {"u", "v"}


def test_substitute():
    # renaming avoids the capture of y
    got = substitute(F("exists y. P(x,y)"), "x", parse_fo_term("f(y)"))
    assert str(got) == "exists y'. P(f(y),y')"
    got = substitute(F("forall x. P(x,y)"), "y", parse_fo_term("f(x)"))
    assert str(got) == "forall x'. P(x',f(x))"
    # bound occurrences stay
    assert substitute(F("forall x. P(x)"), "x", parse_fo_term("c()")) == F("forall x. P(x)")
    assert substitute(F("P(x,z)"), "x", parse_fo_term("c()")) == F("P(c(),z)")


def test_alpha_equal():
    assert alpha_equal(F("forall x. P(x)"), F("forall y. P(y)"))
    assert alpha_equal(F("forall x. exists y. P(x,y)"), F("forall y. exists x. P(y,x)"))
    assert not alpha_equal(F("forall x. P(x)"), F("exists x. P(x)"))
    assert not alpha_equal(F("forall x. P(x,y)"), F("forall y. P(y,y)"))


def test_game_of_formula():
    for text, expect in [
        ("P", "I"),
        ("forall x. P(x)", "O"),
        ("forall x. exists y. P(x,y)", "OP"),
        ("exists x. exists y. forall z. P(x,y,z)", "PPO"),
    ]:
        assert str(game_of_formula(F(text))) == expect, text


def test_check_arities():
    table = check_arities([F("P(f(x))"), F("forall y. P(f(y))")])
    assert table == {"predicate P": 1, "function f": 1}
    with pytest.raises(ArityError) as excinfo:
        check_arities([F("P(x)"), F("P(x,y)")])
    assert str(excinfo.value) == "predicate P used with 1 and 2 arguments"
    with pytest.raises(ArityError):
        check_arities([F("P(f(x))")], [parse_fo_term("f(x,y)")])


def test_axiom_set():
    axioms = AxiomSet([(F("P(u)"), F("Q(u)"))])
    assert len(axioms) == 1
    assert axioms.contains(F("R(x)"), F("R(x)"))
    assert axioms.contains(F("P(f(a))"), F("Q(f(a))"))
    assert not axioms.contains(F("P(a)"), F("Q(b)"))
    assert not axioms.contains(F("Q(a)"), F("P(a)"))


def test_check_proof_errors():
    seq = parse_sequent("forall x. P(x) |- Q")
    with pytest.raises(RuleMismatchError) as excinfo:
        check_proof(ForallR("x", Ax(F("P(x)"), F("Q"))), seq)
    assert excinfo.value.path == "root"

    p = ForallL(Var("y"), ExistsR(Var("y"), Ax(F("P(y)"), F("Q"))))
    with pytest.raises(RuleMismatchError) as excinfo:
        check_proof(p, seq)
    assert excinfo.value.path == "root.0"
    assert str(excinfo.value).startswith("root.0: exists-r expects an existential formula")

    with pytest.raises(EigenvariableError):
        check_proof(ForallR("x", Ax(F("P(x)"), F("Q(x)"))), parse_sequent("P(x) |- forall x. Q(x)"))

    with pytest.raises(AxiomError):
        check_proof(Ax(F("P"), F("Q")), parse_sequent("P |- Q"))
    with pytest.raises(RuleMismatchError):
        check_proof(Ax(F("P"), F("R")), parse_sequent("P |- Q"), AxiomSet([(F("P"), F("R"))]))

    assert not is_valid_proof(Ax(F("P"), F("Q")), parse_sequent("P |- Q"))
    assert is_valid_proof(Ax(F("P"), F("Q")), parse_sequent("P |- Q"), AxiomSet([(F("P"), F("Q"))]))


def _witness_proof(t_text):
    return ExistsL("x", ExistsL("y", ExistsR(parse_fo_term(t_text), Ax(
        F("P(x,y)"), F("Q(%s)" % t_text)))))


def test_interpret_proof():
    seq = parse_sequent("exists x. exists y. P(x,y) |- exists z. Q(z)")
    axioms = AxiomSet([(F("P(x,y)"), F("Q(z)"))])
    for t_text, deps in [
        ("f(x,y)", [("s0", "t0"), ("s1", "t0")]),
        ("f(x)", [("s0", "t0")]),
        ("f(y)", [("s1", "t0")]),
        ("c()", []),
    ]:
        got = interpret_proof(_witness_proof(t_text), seq, axioms)
        assert got == make_strategy("PP", "P", deps), t_text
    assert interpret_proof(_witness_proof("f(x,y)"), seq, axioms) == generator_strategy("muP")


def test_interpret_universal():
    # forall-r binds z, both forall-l witnesses mention it: muO
    axioms, p = parse_proof_file(
        '(axiom "P(u,v)" "Q(w)") (forall-r z (forall-l z (forall-l z (ax "P(z,z)" "Q(z)"))))')
    s = interpret_proof(p, parse_sequent("forall x. forall y. P(x,y) |- forall z. Q(z)"), axioms)
    assert s == generator_strategy("muO")


def test_interpret_cut():
    axioms = AxiomSet([(F("P(u)"), F("Q(u)")), (F("Q(u)"), F("R(u)"))])
    seq = parse_sequent("exists x. P(x) |- exists z. R(z)")
    first = ExistsL("x", ExistsR(Var("x"), Ax(F("P(x)"), F("Q(x)"))))
    second = ExistsL("y", ExistsR(Var("y"), Ax(F("Q(y)"), F("R(y)"))))
    p = Cut(F("exists y. Q(y)"), first, second)
    assert proof_size(p) == 7
    assert interpret_proof(p, seq, axioms) == identity_strategy(parse_game("P"))

    broken = Cut(F("exists y. Q(y)"), first, ForallR("y", second.sub))
    with pytest.raises(RuleMismatchError) as excinfo:
        check_proof(broken, seq, axioms)
    assert excinfo.value.path == "root.1"


def test_eigenvariable_permutation():
    # the witness f(x) cannot move above the binder of x
    seq = parse_sequent("exists y. exists x. P(x,y) |- exists z. Q(z)")
    axioms = AxiomSet([(F("P(u,v)"), F("Q(w)"))])
    leaf = Ax(F("P(x,y)"), F("Q(f(x))"))
    p = ExistsL("y", ExistsR(parse_fo_term("f(x)"), ExistsL("x", leaf)))
    with pytest.raises(EigenvariableError) as excinfo:
        check_proof(p, seq, axioms)
    assert excinfo.value.path == "root.0.0"

    p = ExistsL("y", ExistsL("x", ExistsR(parse_fo_term("f(x)"), leaf)))
    assert interpret_proof(p, seq, axioms) == make_strategy("PP", "P", [("s1", "t0")])


def test_proof_text():
    p = _witness_proof("f(x,y)")
    text = format_proof(p)
    assert text == '(exists-l x (exists-l y (exists-r "f(x,y)" (ax "P(x,y)" "Q(f(x,y))"))))'
    assert parse_proof(text) == p
    assert parse_proof("(ax P Q)") == Ax(Atom("P"), Atom("Q"))

    axioms, q = parse_proof_file('(axiom P "Q(w)")\n(exists-r "c()" (ax P "Q(c())"))')
    assert list(axioms) == [(Atom("P"), F("Q(w)"))]
    assert q == ExistsR(App("c"), Ax(Atom("P"), F("Q(c())")))

    for text in [
        "(ax P)",
        "(ax P Q",
        "(ax P Q))",
        "(lemma P Q)",
        "(ax P Q) (ax P Q)",
        '(forall-r "f(x)" (ax P Q))',
        "(exists-r (x) (ax P Q))",
    ]:
        with pytest.raises(FormatError):
            parse_proof(text)
    with pytest.raises(FormatError):
        parse_proof_file("(ax P Q) (axiom P Q)")
