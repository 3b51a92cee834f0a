"""The auxiliary graph AUX[E;F] and everything needed to build it.

One subterm dag for (E, F) is closed three times: under the E pairs, the F
pairs and both. A single walk over the dag then produces the three
completions, the inclusion maps between their classes, the rule counters
and the adjacency lists.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Set, Tuple

from .closure import Partition, congruence_closure
from .completion import ClassConstant, Gtrs, Key, constants_of, is_total, product_exceeds
from .gtes import Gtes, SubtermDag, build_dag, signature_flag
from .terms import Signature


@dataclass
class IncMaps:
    inc_E: Set[Tuple[int, int]]
    inc_F: Set[Tuple[int, int]]
    num_E: Dict[int, int]
    num_F: Dict[int, int]


class ClassNames(Mapping):
    """Union class -> printed representative, rendered on first lookup.

    Printing every representative up front costs the sum of their sizes,
    which is quadratic on deep towers.
    """

    def __init__(self, dag: SubtermDag, rep: Dict[int, int]) -> None:
        self._dag, self._rep = dag, rep
        self._cache: Dict[int, str] = {}

    def __getitem__(self, a: int) -> str:
        if a not in self._cache:
            self._cache[a] = str(self._dag.hat[self._rep[a]])
        return self._cache[a]

    def __iter__(self) -> Iterator[int]:
        return iter(self._rep)

    def __len__(self) -> int:
        return len(self._rep)


@dataclass
class AuxGraph:
    """Vertices are union classes 1..k; adj[a] lists arc heads in key order."""

    adj: Dict[int, List[int]]
    equal_E: Dict[int, bool]
    equal_F: Dict[int, bool]
    keeps_E: Dict[int, bool]
    keeps_F: Dict[int, bool]
    names: Mapping = field(default_factory=dict)

    @property
    def vertices(self) -> List[int]:
        return sorted(self.adj)

    def arcs(self) -> Set[Tuple[int, int]]:
        return {(a, b) for a, succ in self.adj.items() for b in succ}

    def swapped(self) -> "AuxGraph":
        return AuxGraph(self.adj, self.equal_F, self.equal_E, self.keeps_F, self.keeps_E, self.names)

    def dump(self) -> str:
        def yn(x: bool) -> str:
            return "1" if x else "0"

        lines = []
        for a in self.vertices:
            succ = ",".join(self.names.get(b, str(b)) for b in self.adj[a])
            lines.append(
                f"{self.names.get(a, str(a))} {yn(self.equal_E[a])} {yn(self.equal_F[a])} "
                f"{yn(self.keeps_E[a])} {yn(self.keeps_F[a])} -> {succ}")
        return "\n".join(lines)


@dataclass
class Cad:
    sig: Signature
    dag: SubtermDag
    tau_E: List[Tuple[int, int]]
    tau_F: List[Tuple[int, int]]
    rho_E: Partition
    rho_F: Partition
    rho_U: Partition
    C_E: List[ClassConstant]
    C_F: List[ClassConstant]
    C_U: List[ClassConstant]
    R_E: Gtrs
    R_F: Gtrs
    R_U: Gtrs
    inc: IncMaps
    graph: AuxGraph
    flag: bool

    def total(self) -> Tuple[bool, bool, bool]:
        return (is_total(self.sig, self.flag, self.C_E, self.R_E),
                is_total(self.sig, self.flag, self.C_F, self.R_F),
                is_total(self.sig, self.flag, self.C_U, self.R_U))

    @property
    def n(self) -> int:
        return len(self.dag)


def cad(sig: Signature, e: Gtes, f: Gtes) -> Cad:
    dag, tau_E, tau_F = build_dag(e, f)
    rho_E = congruence_closure(dag, tau_E)
    rho_F = congruence_closure(dag, tau_F)
    rho_U = congruence_closure(dag, tau_E + tau_F)
    nE, nF, nU = rho_E.names, rho_F.names, rho_U.names

    R_E, R_F, R_U = Gtrs(sig), Gtrs(sig), Gtrs(sig)
    inc_E: Set[Tuple[int, int]] = set()
    inc_F: Set[Tuple[int, int]] = set()
    for x in range(len(dag)):
        sid = sig.id(dag.label[x])
        kids = dag.children[x]
        ku: Key = (sid,) + tuple(nU[c] for c in kids)
        if R_U.add(ku, nU[x]):
            R_U.counter_E[ku] = 0
            R_U.counter_F[ku] = 0
        # each fresh E-side rule sits under the union rule read off the same vertex
        if R_E.add((sid,) + tuple(nE[c] for c in kids), nE[x]):
            R_U.counter_E[ku] += 1
        if R_F.add((sid,) + tuple(nF[c] for c in kids), nF[x]):
            R_U.counter_F[ku] += 1
        inc_E.add((nU[x], nE[x]))
        inc_F.add((nU[x], nF[x]))

    num_E: Dict[int, int] = {a: 0 for a in rho_U.class_names()}
    num_F: Dict[int, int] = dict(num_E)
    for a, _ in inc_E:
        num_E[a] += 1
    for a, _ in inc_F:
        num_F[a] += 1

    rep_U = rho_U.representative
    equal_E = {a: rho_E.card(nE[rep_U[a]]) == rho_U.card(a) for a in rho_U.class_names()}
    equal_F = {a: rho_F.card(nF[rep_U[a]]) == rho_U.card(a) for a in rho_U.class_names()}

    keeps_E = {a: True for a in rho_U.class_names()}
    keeps_F = dict(keeps_E)
    adj_sets: Dict[int, Set[int]] = {a: set() for a in rho_U.class_names()}
    for key in R_U.keys():
        a = R_U.get(key)
        assert a is not None
        args = key[1:]
        # a counter never exceeds its product, so "differs" means "falls short"
        if product_exceeds([num_E[b] for b in args], R_U.counter_E[key]):
            keeps_E[a] = False
        if product_exceeds([num_F[b] for b in args], R_U.counter_F[key]):
            keeps_F[a] = False
        adj_sets[a].update(args)

    adj = {a: sorted(s) for a, s in adj_sets.items()}
    names = ClassNames(dag, {a: rep_U[a] for a in rho_U.class_names()})
    _, flag = signature_flag(sig, e, f)
    return Cad(
        sig, dag, tau_E, tau_F, rho_E, rho_F, rho_U,
        constants_of(rho_E), constants_of(rho_F), constants_of(rho_U),
        R_E, R_F, R_U,
        IncMaps(inc_E, inc_F, num_E, num_F),
        AuxGraph(adj, equal_E, equal_F, keeps_E, keeps_F, names),
        flag)


def positive_step_reachable(g: AuxGraph, a: int) -> Set[int]:
    seen: Set[int] = set()
    stack = list(g.adj[a])
    while stack:
        b = stack.pop()
        if b in seen:
            continue
        seen.add(b)
        stack.extend(c for c in g.adj[b] if c not in seen)
    return seen
