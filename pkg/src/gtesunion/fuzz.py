"""Random small problems and the consistency checks run over them."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .completion import is_reduced
from .decide import BOTH_TOTAL, case2_check, decide_union, npdfs
from .gtes import Gtes
from .oracle import MAX_TERMS, counterexample_search, universe_size
from .problem import Problem
from .terms import Signature, Term

CONST_NAMES = ["#", "$", "L", "b"]
FUN_NAMES = {1: ["g", "h", "k"], 2: ["f", "p", "q"]}


@dataclass
class FuzzParams:
    max_symbols: int = 4
    max_arity: int = 2
    max_height: int = 3
    max_equations: int = 5
    oracle_height: int = 4


def random_signature(rng: random.Random, params: FuzzParams) -> Signature:
    n = rng.randint(2, params.max_symbols)
    consts = rng.randint(1, min(n - 1, len(CONST_NAMES)) if n > 1 else 1)
    syms: List[Tuple[str, int]] = [(CONST_NAMES[i], 0) for i in range(consts)]
    used = {1: 0, 2: 0}
    for _ in range(n - consts):
        a = rng.randint(1, params.max_arity)
        syms.append((FUN_NAMES[a][used[a]], a))
        used[a] += 1
    return Signature(tuple(syms))


def random_term(rng: random.Random, sig: Signature, height: int) -> Term:
    consts = sig.of_arity(0)
    funs = [(s, a) for s, a in sig.symbols if a > 0]
    if height == 0 or not funs or rng.random() < 0.35:
        return Term(rng.choice(consts))
    s, a = rng.choice(funs)
    return Term(s, [random_term(rng, sig, height - 1) for _ in range(a)])


def random_gtes(rng: random.Random, sig: Signature, params: FuzzParams,
                pool: List[Term]) -> Gtes:
    eqs = []
    for _ in range(rng.randint(0, params.max_equations)):
        # reusing earlier terms makes the two systems interact
        side = [rng.choice(pool) if pool and rng.random() < 0.4
                else random_term(rng, sig, rng.randint(0, params.max_height)) for _ in range(2)]
        pool.extend(side)
        eqs.append((side[0], side[1]))
    return Gtes(eqs)


def random_problem(rng: random.Random, params: Optional[FuzzParams] = None) -> Problem:
    params = params or FuzzParams()
    sig = random_signature(rng, params)
    pool: List[Term] = []
    e = random_gtes(rng, sig, params, pool)
    f = random_gtes(rng, sig, params, pool)
    return Problem(sig, e, f)


def feasible_height(sig: Signature, want: int, cap: int = MAX_TERMS) -> int:
    h = want
    while h > 0 and universe_size(sig, h) > cap:
        h -= 1
    return h


@dataclass
class FuzzOutcome:
    index: int
    verdict: bool
    case: str
    oracle_height: int
    counterexample: Optional[Tuple[Term, Term]]
    failures: List[str] = field(default_factory=list)


def check_problem(p: Problem, index: int = 0, params: Optional[FuzzParams] = None) -> FuzzOutcome:
    params = params or FuzzParams()
    v = decide_union(p.sig, p.E, p.F)
    w = decide_union(p.sig, p.F, p.E)
    h = feasible_height(p.sig, params.oracle_height)
    cex = counterexample_search(p.sig, p.E, p.F, h)
    out = FuzzOutcome(index, v.union_is_congruence, v.case.tag, h, cex)
    if v.union_is_congruence != w.union_is_congruence:
        out.failures.append("asymmetric verdict")
    if v.union_is_congruence and cex is not None:
        out.failures.append(f"verdict yes but {cex[0]} ~ {cex[1]} separates")
    c = v.aux
    assert c is not None
    for name, R in (("E", c.R_E), ("F", c.R_F), ("union", c.R_U)):
        if not is_reduced(R):
            out.failures.append(f"R_{name} not reduced")
    if p.sig.is_unary() and v.case.tag == BOTH_TOTAL:
        if npdfs(c.graph) != case2_check(c.inc):
            out.failures.append("npdfs and case2 disagree")
    return out


def run_fuzz(seed: int, count: int, params: Optional[FuzzParams] = None) -> List[FuzzOutcome]:
    rng = random.Random(seed)
    return [check_problem(random_problem(rng, params), i, params) for i in range(count)]
