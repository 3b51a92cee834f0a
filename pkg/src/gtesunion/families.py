"""Scalable problem families, one per main case, for timing runs."""
from __future__ import annotations

from typing import Callable, Dict

from .gtes import Gtes, gtes_size
from .problem import Problem
from .terms import Signature, Term


def tower(sym: str, k: int, base: Term) -> Term:
    t = base
    for _ in range(k):
        t = Term(sym, [t])
    return t


def comb(k: int, leaf: Term, pad: Term) -> Term:
    t = leaf
    for _ in range(k):
        t = Term("f", [t, pad])
    return t


def unary_family(k: int) -> Problem:
    # the first example stretched: f^k and g^k glued at # in E and at $ in F
    sig = Signature.of(("#", 0), ("$", 0), ("f", 1), ("g", 1))
    h, d = Term("#"), Term("$")
    e = Gtes([(tower("f", k, h), tower("g", k, h))])
    f = Gtes([(tower("f", k, d), tower("g", k, d))])
    return Problem(sig, e, f, name=f"unary-{k}")


def both_total_family(k: int) -> Problem:
    # residues mod k against residues mod 2k: F refines E, verdict yes
    sig = Signature.of(("#", 0), ("f", 1))
    h = Term("#")
    return Problem(sig, Gtes([(tower("f", k, h), h)]), Gtes([(tower("f", 2 * k, h), h)]),
                   name=f"both-total-{k}")


def one_total_family(k: int) -> Problem:
    # E sends every compound term to $, F folds a comb of depth k onto #
    sig = Signature.of(("#", 0), ("$", 0), ("f", 2))
    h, d = Term("#"), Term("$")
    e = Gtes([(Term("f", [x, y]), d) for x in (h, d) for y in (h, d)])
    f = Gtes([(comb(k, h, h), h)])
    return Problem(sig, e, f, name=f"one-total-{k}")


def none_total_family(k: int) -> Problem:
    # combs over disjoint constants, glued in E and in F
    sig = Signature.of(("#", 0), ("$", 0), ("L", 0), ("b", 0), ("f", 2))
    h, d, l, b = (Term(c) for c in "#$Lb")
    e = Gtes([(comb(k, h, h), d)])
    f = Gtes([(comb(k, l, l), b)])
    return Problem(sig, e, f, name=f"none-total-{k}")


FAMILIES: Dict[str, Callable[[int], Problem]] = {
    "Unary": unary_family,
    "BothTotal": both_total_family,
    "OneTotalHigherArity": one_total_family,
    "NoneTotalHigherArity": none_total_family,
}


def of_size(family: Callable[[int], Problem], n: int) -> Problem:
    """Smallest member whose combined size |E| + |F| reaches n."""
    lo, hi = 1, 1
    while _size(family(hi)) < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _size(family(mid)) < n:
            lo = mid + 1
        else:
            hi = mid
    return family(lo)


def _size(p: Problem) -> int:
    return gtes_size(p.E) + gtes_size(p.F)
