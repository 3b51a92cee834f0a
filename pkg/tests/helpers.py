"""Shared strategies and a rule-set comparator for the test suite."""
from __future__ import annotations

import random
from typing import Dict, Iterable, List, Optional, Set, Tuple

from hypothesis import strategies as st_

from gtesunion.completion import Gtrs
from gtesunion.fuzz import FuzzParams, random_problem
from gtesunion.gtes import Gtes
from gtesunion.terms import Signature, Term

FlatRule = Tuple[str, Tuple[str, ...], str]

SIG = Signature.of(("#", 0), ("$", 0), ("g", 1), ("f", 2))


def parse_rules(lines: Iterable[str]) -> Set[FlatRule]:
    """'f(A, B) -> C' or '# -> A'; uppercase letters stand for classes."""
    out = set()
    for line in lines:
        lhs, rhs = (x.strip() for x in line.split("->"))
        if "(" in lhs:
            sym, rest = lhs.split("(", 1)
            args = tuple(a.strip() for a in rest.rstrip(")").split(","))
        else:
            sym, args = lhs, ()
        out.add((sym, args, rhs))
    return out


def rules_of(R: Gtrs) -> Set[FlatRule]:
    return {(R.sig.name(r.symbol), tuple(str(a) for a in r.args), str(r.rhs)) for r in R}


def same_up_to_renaming(a: Set[FlatRule], b: Set[FlatRule]) -> bool:
    """Is there a bijection on class names carrying rule set a onto b?"""
    if len(a) != len(b):
        return False
    ra, rb = sorted(a), list(b)

    def names(rules) -> Set[str]:
        return {c for _, args, rhs in rules for c in args + (rhs,)}

    if len(names(a)) != len(names(b)):
        return False

    def extend(m: Dict[str, str], x: Tuple[str, ...], y: Tuple[str, ...]) -> Optional[Dict[str, str]]:
        m = dict(m)
        used = set(m.values())
        for p, q in zip(x, y):
            if p in m:
                if m[p] != q:
                    return None
            elif q in used:
                return None
            else:
                m[p] = q
                used.add(q)
        return m

    def go(i: int, m: Dict[str, str], left: List[FlatRule]) -> bool:
        if i == len(ra):
            return True
        sym, args, rhs = ra[i]
        for j, (s2, args2, rhs2) in enumerate(left):
            if s2 != sym or len(args2) != len(args):
                continue
            m2 = extend(m, args + (rhs,), args2 + (rhs2,))
            if m2 is not None and go(i + 1, m2, left[:j] + left[j + 1:]):
                return True
        return False

    return go(0, {}, rb)


def gen_term(rng: random.Random, sig: Signature, h: int) -> Term:
    consts = sig.of_arity(0)
    funs = [(s, a) for s, a in sig.symbols if a > 0]
    if h == 0 or not funs or rng.random() < 0.3:
        return Term(rng.choice(consts))
    s, a = rng.choice(funs)
    return Term(s, [gen_term(rng, sig, h - 1) for _ in range(a)])


@st_.composite
def terms(draw, sig: Signature = SIG, max_height: int = 3) -> Term:
    seed = draw(st_.integers(0, 2**32 - 1))
    return gen_term(random.Random(seed), sig, draw(st_.integers(0, max_height)))


@st_.composite
def gtes(draw, sig: Signature = SIG, max_eqs: int = 4, max_height: int = 3) -> Gtes:
    n = draw(st_.integers(0, max_eqs))
    return Gtes([(draw(terms(sig, max_height)), draw(terms(sig, max_height))) for _ in range(n)])


@st_.composite
def problems(draw):
    return random_problem(random.Random(draw(st_.integers(0, 2**32 - 1))), FuzzParams())
