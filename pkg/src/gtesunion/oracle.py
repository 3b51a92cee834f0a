"""Brute-force reference implementations used to cross-check the fast path.

Nothing here calls the closure, completion or auxiliary graph code; only
terms, equation systems and subterm dags are shared.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .closure import Partition
from .gtes import Gtes, SubtermDag, build_dag
from .terms import HOLE, Signature, Term

MAX_TERMS = 20_000
MAX_CONTEXT_CLASSES = 8


class CapacityError(RuntimeError):
    """The requested brute-force search is larger than the hard cap."""


def naive_closure(dag: SubtermDag, tau: Iterable[Tuple[int, int]]) -> Partition:
    """Congruence closure by repeated global re-hashing until nothing merges."""
    n = len(dag)
    cls = list(range(n))
    pairs = list(tau)

    def relabel(groups: Dict[int, int]) -> List[int]:
        # groups maps old class -> merged class; chase to fixpoint
        def top(c: int) -> int:
            while groups.get(c, c) != c:
                c = groups[c]
            return c
        return [top(c) for c in cls]

    while True:
        merge: Dict[int, int] = {}

        def link(x: int, y: int) -> None:
            while merge.get(x, x) != x:
                x = merge[x]
            while merge.get(y, y) != y:
                y = merge[y]
            if x != y:
                merge[max(x, y)] = min(x, y)

        for u, v in pairs:
            link(cls[u], cls[v])
        seen: Dict[Tuple, int] = {}
        for v in range(n):
            key = (dag.label[v],) + tuple(cls[c] for c in dag.children[v])
            w = seen.setdefault(key, v)
            link(cls[v], cls[w])
        new = relabel(merge)
        if new == cls:
            break
        cls = new
    return Partition.from_roots(cls)


def oracle_word(e: Gtes, s: Term, t: Term) -> bool:
    """s <->*_E t, deciding via the closure over sub(E) plus sub(s), sub(t)."""
    dag, tau, _ = build_dag(e, Gtes([(s, s), (t, t)]))
    p = naive_closure(dag, tau)
    return p.find(dag.vertex(s)) == p.find(dag.vertex(t))


def universe_size(sig: Signature, H: int) -> int:
    upto = 0  # number of terms of height <= h - 1
    for h in range(H + 1):
        upto = sum(upto ** a if a else 1 for _, a in sig.symbols)
    return upto


@dataclass
class TermUniverse:
    sig: Signature
    H: int
    by_height: List[List[Term]]

    @property
    def terms(self) -> List[Term]:
        return [t for level in self.by_height for t in level]

    def __len__(self) -> int:
        return sum(len(level) for level in self.by_height)


def enumerate_terms(sig: Signature, H: int, cap: int = MAX_TERMS) -> TermUniverse:
    """All terms of height <= H: by height, then symbol order, then children."""
    total = universe_size(sig, H)
    if total > cap:
        raise CapacityError(f"{total} terms of height <= {H} exceed the cap of {cap}")
    levels: List[List[Term]] = [[Term(s) for s, a in sig.symbols if a == 0]]
    flat: List[Term] = list(levels[0])
    for h in range(1, H + 1):
        lower = len(flat) - len(levels[-1])  # index where height h-1 starts
        level: List[Term] = []
        for s, a in sig.symbols:
            if a == 0:
                continue
            for idx in itertools.product(range(len(flat)), repeat=a):
                if max(idx) >= lower:
                    level.append(Term(s, [flat[i] for i in idx]))
        levels.append(level)
        flat.extend(level)
    return TermUniverse(sig, H, levels)


def _classes_over(terms: Sequence[Term], e: Gtes, f: Gtes) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    dag, tau_e, tau_f = build_dag(e, f)
    for t in terms:
        dag.intern(t)
    pe = naive_closure(dag, tau_e)
    pf = naive_closure(dag, tau_f)
    pu = naive_closure(dag, tau_e + tau_f)
    ids = [dag.vertex(t) for t in terms]
    return (np.array([pe.names[v] for v in ids]),
            np.array([pf.names[v] for v in ids]),
            np.array([pu.names[v] for v in ids]))


def counterexample_search(sig: Signature, e: Gtes, f: Gtes, H: int,
                          cap: int = MAX_TERMS) -> Optional[Tuple[Term, Term]]:
    """First pair (s, t) of height <= H with s ~ t under E u F but under neither E nor F.

    Pairs are ordered by the enumeration index of s, then of t. The three
    congruences are computed once over a dag holding every enumerated term,
    which answers exactly what pairwise oracle_word calls would.
    """
    terms = enumerate_terms(sig, H, cap).terms
    cE, cF, cU = _classes_over(terms, e, f)
    groups: Dict[int, np.ndarray] = {}
    order = np.argsort(cU, kind="stable")
    bounds = np.flatnonzero(np.diff(cU[order])) + 1
    for chunk in np.split(order, bounds):
        if len(chunk) > 1:
            groups[int(cU[chunk[0]])] = chunk
    for i in range(len(terms)):
        g = groups.get(int(cU[i]))
        if g is None:
            continue
        later = g[np.searchsorted(g, i, side="right"):]
        if len(later) == 0:
            continue
        hit = np.flatnonzero((cE[later] != cE[i]) & (cF[later] != cF[i]))
        if len(hit):
            return terms[i], terms[int(later[hit[0]])]
    return None


def _representatives(rules: Dict[Tuple[int, ...], int], sig: Signature) -> Dict[int, Term]:
    rep: Dict[int, Term] = {}
    changed = True
    while changed:
        changed = False
        for key, c in sorted(rules.items()):
            if c in rep:
                continue
            if all(a in rep for a in key[1:]):
                rep[c] = Term(sig.name(key[0]), [rep[a] for a in key[1:]])
                changed = True
    return rep


def context_reachability(R, C: Sequence, a: int, b: int,
                         witness: bool = False):
    """Does some proper 1-context delta with hole depth <= |C| take b to a?

    Level k holds the classes reached by contexts whose hole sits at depth k;
    other argument positions are filled with representative terms of their
    classes. With witness=True the context term is returned as well.
    """
    k = len(C)
    if k > MAX_CONTEXT_CLASSES:
        raise CapacityError(f"{k} classes exceed the context search cap of {MAX_CONTEXT_CLASSES}")
    rules = {r.key: r.rhs for r in R}
    sig = R.sig
    rep = _representatives(rules, sig)
    hole = Term(HOLE)
    frontier: Dict[int, Term] = {b: hole}  # class -> context taking b there
    reached: Dict[int, Term] = {}
    for _ in range(k):
        nxt: Dict[int, Term] = {}
        for key, c in sorted(rules.items()):
            args = key[1:]
            for i, x in enumerate(args):
                if x in frontier and c not in nxt:
                    kids = [rep[y] for y in args]
                    kids[i] = frontier[x]
                    nxt[c] = Term(sig.name(key[0]), kids)
        for c, ctx in nxt.items():
            reached.setdefault(c, ctx)
        frontier = nxt
        if not frontier:
            break
    ok = a in reached
    if witness:
        return ok, reached.get(a)
    return ok
