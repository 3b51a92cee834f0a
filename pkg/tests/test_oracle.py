import pytest

from gtesunion.auxgraph import cad, positive_step_reachable
from gtesunion.gtes import Gtes
from gtesunion.oracle import (CapacityError, context_reachability, counterexample_search,
                              enumerate_terms, oracle_word, universe_size)
from gtesunion.problem import load_example
from gtesunion.terms import Context1, Signature, height, parse_term, plug
from gtesunion.completion import word_problem


def test_enumeration_order_and_count():
    sig = Signature.of(("#", 0), ("$", 0), ("f", 1))
    u = enumerate_terms(sig, 2)
    assert [str(t) for t in u.terms] == ["#", "$", "f(#)", "f($)", "f(f(#))", "f(f($))"]
    assert len(u) == universe_size(sig, 2) == 6
    sig2 = Signature.of(("#", 0), ("f", 2))
    assert universe_size(sig2, 2) == 1 + 1 + 3 == len(enumerate_terms(sig2, 2))
    assert all(height(t) == h for h, lvl in enumerate(enumerate_terms(sig2, 3).by_height) for t in lvl)


def test_capacity():
    sig = Signature.of(("#", 0), ("$", 0), ("f", 2))
    with pytest.raises(CapacityError):
        enumerate_terms(sig, 4)
    with pytest.raises(CapacityError):
        counterexample_search(sig, Gtes(), Gtes(), 4)


def test_oracle_word():
    e = Gtes([(parse_term("f(f(#))"), parse_term("#"))])
    assert oracle_word(e, parse_term("f(f(f(#)))"), parse_term("f(#)"))
    assert not oracle_word(e, parse_term("f(#)"), parse_term("#"))


@pytest.mark.parametrize("name,pair", [
    ("ex2", ("#", "f(#)")), ("ex5", ("#", "$")), ("ex8", ("f(#,L)", "f($,b)"))])
def test_counterexamples(name, pair):
    p = load_example(name)
    s, t = counterexample_search(p.sig, p.E, p.F, 1)
    assert (str(s), str(t)) == pair
    assert word_problem(p.sig, Gtes(list(p.E) + list(p.F)), Gtes(), s, t)
    assert not word_problem(p.sig, p.E, Gtes(), s, t)
    assert not word_problem(p.sig, p.F, Gtes(), s, t)


@pytest.mark.parametrize("name", ["ex1", "ex3", "ex7"])
def test_no_counterexample_for_yes(name):
    p = load_example(name)
    assert counterexample_search(p.sig, p.E, p.F, 2) is None


def test_context_witness():
    p = load_example("ex1")
    c = cad(p.sig, p.E, p.F)
    names = c.graph.names
    by_name = {names[a]: a for a in c.graph.vertices}
    ok, ctx = context_reachability(c.R_U, c.C_U, by_name["f(#)"], by_name["#"], witness=True)
    assert ok and str(ctx) in ("f(HOLE)", "g(HOLE)")
    assert str(plug(Context1.from_term(ctx), parse_term("#"))) in ("f(#)", "g(#)")
    assert not context_reachability(c.R_U, c.C_U, by_name["#"], by_name["f(#)"])


def test_context_self_loop():
    p = load_example("ex2")
    c = cad(p.sig, p.E, p.F)
    assert context_reachability(c.R_U, c.C_U, 1, 1)
    assert positive_step_reachable(c.graph, 1) == {1}


def test_context_cap():
    p = load_example("ex1")
    c = cad(p.sig, p.E, p.F)
    with pytest.raises(CapacityError):
        context_reachability(c.R_U, list(c.C_U) * 3, 1, 1)
