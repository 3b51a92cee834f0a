"""Main-case classification and the four decision procedures."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set, Tuple

from .auxgraph import AuxGraph, Cad, IncMaps, cad
from .closure import Partition
from .gtes import Gtes
from .terms import Signature

UNARY = "Unary"
BOTH_TOTAL = "BothTotal"
ONE_TOTAL = "OneTotalHigherArity"
NONE_TOTAL = "NoneTotalHigherArity"


@dataclass(frozen=True)
class MainCase:
    tag: str
    which_total: str  # "E", "F", "both" or "neither"


@dataclass
class Verdict:
    union_is_congruence: bool
    case: MainCase
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    aux: Optional[Cad] = None
    millis: float = 0.0

    def __bool__(self) -> bool:
        return self.union_is_congruence


@dataclass
class SearchStats:
    """Visit counters, one entry per vertex; checked against the visiting bounds."""

    outer: Dict[int, int] = field(default_factory=dict)
    inner: Dict[int, int] = field(default_factory=dict)
    sessions: int = 0

    def bump(self, d: Dict[int, int], v: int) -> None:
        d[v] = d.get(v, 0) + 1


def classify(sig: Signature, total_E: bool, total_F: bool) -> MainCase:
    which = {(True, True): "both", (True, False): "E",
             (False, True): "F", (False, False): "neither"}[(total_E, total_F)]
    if total_E and total_F:
        return MainCase(BOTH_TOTAL, which)
    if sig.is_unary():
        return MainCase(UNARY, which)
    if total_E or total_F:
        return MainCase(ONE_TOTAL, which)
    return MainCase(NONE_TOTAL, which)


def _all_keep(g: AuxGraph, keeps: Dict[int, bool], start: int, good: Set[int],
              stats: Optional[SearchStats], report: Dict[str, Any],
              include_start: bool) -> bool:
    """Every vertex reachable from start satisfies keeps.

    Reachability is by walks of length >= 1, or >= 0 with include_start.
    `good` holds vertices already known to reach only keeping vertices
    (themselves included); successful searches add what they saw.
    """
    seen: Set[int] = set()
    stack = [start] if include_start else list(g.adj[start])
    while stack:
        b = stack.pop()
        if b in seen or b in good:
            continue
        seen.add(b)
        if stats is not None:
            stats.bump(stats.inner, b)
        if not keeps[b]:
            report.update(vertex=start, reached=b)
            return False
        stack.extend(c for c in g.adj[b] if c not in seen and c not in good)
    good.update(seen)
    return True


def npdfs(g: AuxGraph, stats: Optional[SearchStats] = None,
          report: Optional[Dict[str, Any]] = None, include_start: bool = True) -> bool:
    """Nested partial depth first search over AUX[E;F].

    With include_start=False only vertices at positive distance from the
    outer vertex are tested, which accepts some instances that are in fact
    no-instances (see tests/test_decide.py); the default also tests the
    outer vertex itself.
    """
    report = {} if report is None else report
    good_E: Set[int] = set()
    good_F: Set[int] = set()
    for a in g.vertices:
        if stats is not None:
            stats.bump(stats.outer, a)
        fail_E: Dict[str, Any] = {}
        fail_F: Dict[str, Any] = {}
        if g.equal_E[a] and _all_keep(g, g.keeps_E, a, good_E, stats, fail_E, include_start):
            continue
        if g.equal_F[a] and _all_keep(g, g.keeps_F, a, good_F, stats, fail_F, include_start):
            continue
        report.update(vertex=a, equal_E=g.equal_E[a], equal_F=g.equal_F[a],
                      reached_E=fail_E.get("reached"), reached_F=fail_F.get("reached"))
        return False
    return True


def pdfs(g: AuxGraph, stats: Optional[SearchStats] = None,
         report: Optional[Dict[str, Any]] = None, include_start: bool = True) -> bool:
    """Partial depth first search; expects the E side to be total.

    include_start=True also tests keeps_F of each session's start vertex.
    """
    report = {} if report is None else report
    for a in g.vertices:
        if not g.equal_E[a] and not g.equal_F[a]:
            report.update(vertex=a, reason="class equals neither an E- nor an F-class")
            return False
    visited: Set[int] = set()
    for a in g.vertices:
        if stats is not None:
            stats.bump(stats.outer, a)
        if g.equal_E[a] or a in visited:
            continue
        if stats is not None:
            stats.sessions += 1
        # without include_start the start vertex stays unmarked and is only
        # tested when a cycle leads back to it
        if include_start:
            stack = [a]
        else:
            stack = [b for b in reversed(g.adj[a]) if b not in visited]
        while stack:
            b = stack.pop()
            if b in visited:
                continue
            visited.add(b)
            if stats is not None:
                stats.bump(stats.inner, b)
            if not g.keeps_F[b]:
                report.update(vertex=a, reached=b)
                return False
            stack.extend(c for c in reversed(g.adj[b]) if c not in visited)
    return True


def case2_check(inc: IncMaps, report: Optional[Dict[str, Any]] = None) -> bool:
    for a in sorted(inc.num_E):
        if inc.num_E[a] != 1 and inc.num_F[a] != 1:
            if report is not None:
                report.update(union_class=a, num_E=inc.num_E[a], num_F=inc.num_F[a])
            return False
    return True


def case4_check(tau_E: List[Tuple[int, int]], tau_F: List[Tuple[int, int]],
                rho_E: Partition, rho_F: Partition,
                report: Optional[Dict[str, Any]] = None) -> bool:
    bad_E = next(((u, v) for u, v in tau_E if rho_F.find(u) != rho_F.find(v)), None)
    if bad_E is None:
        return True
    bad_F = next(((u, v) for u, v in tau_F if rho_E.find(u) != rho_E.find(v)), None)
    if bad_F is None:
        return True
    if report is not None:
        report.update(equation_E=bad_E, equation_F=bad_F)
    return False


def decide_union(sig: Signature, e: Gtes, f: Gtes) -> Verdict:
    """Is <->*_{E u F} equal to <->*_E u <->*_F ?"""
    t0 = time.perf_counter()
    c = cad(sig, e, f)
    total_E, total_F, _ = c.total()
    case = classify(sig, total_E, total_F)
    diag: Dict[str, Any] = {}
    if case.tag == BOTH_TOTAL:
        ok = case2_check(c.inc, diag)
    elif case.tag == UNARY:
        ok = npdfs(c.graph, report=diag)
    elif case.tag == ONE_TOTAL:
        g = c.graph if total_E else c.graph.swapped()
        ok = pdfs(g, report=diag)
        if not total_E:
            diag["swapped"] = True
    else:
        ok = case4_check(c.tau_E, c.tau_F, c.rho_E, c.rho_F, diag)
    _name_vertices(c, diag)
    return Verdict(ok, case, diag, c, (time.perf_counter() - t0) * 1000.0)


def _name_vertices(c: Cad, diag: Dict[str, Any]) -> None:
    # union classes and dag vertices become readable terms in reports
    for k in ("vertex", "reached", "reached_E", "reached_F", "union_class"):
        v = diag.get(k)
        if isinstance(v, int) and not isinstance(v, bool):
            diag[k] = c.graph.names[v]
    for k in ("equation_E", "equation_F"):
        v = diag.get(k)
        if isinstance(v, tuple):
            diag[k] = f"{c.dag.hat[v[0]]} = {c.dag.hat[v[1]]}"
