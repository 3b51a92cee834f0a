"""Ground term equation systems and the shared subterm dag of a pair (E, F)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Set, Tuple

from .terms import Signature, Term, check_term, iter_nodes, size

Equation = Tuple[Term, Term]


def _key(eq: Equation) -> Tuple[str, str]:
    return (str(eq[0]), str(eq[1]))


class Gtes:
    """A deduplicated set of ground equations, iterated in canonical key order.

    (l, r) and (r, l) are distinct entries; orientation never matters for
    the generated congruence.
    """

    __slots__ = ("equations", "duplicates")

    def __init__(self, equations: Iterable[Equation] = ()) -> None:
        seen: Dict[Tuple[str, str], Equation] = {}
        n = 0
        for l, r in equations:
            n += 1
            seen.setdefault(_key((l, r)), (l, r))
        self.equations: Tuple[Equation, ...] = tuple(seen[k] for k in sorted(seen))
        self.duplicates = n - len(self.equations)

    def __iter__(self) -> Iterator[Equation]:
        return iter(self.equations)

    def __len__(self) -> int:
        return len(self.equations)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Gtes) and self.equations == other.equations

    def __hash__(self) -> int:
        return hash(self.equations)

    def __repr__(self) -> str:
        return "Gtes({" + ", ".join(f"{l} = {r}" for l, r in self.equations) + "})"

    def check(self, sig: Signature) -> None:
        for l, r in self.equations:
            check_term(l, sig)
            check_term(r, sig)


def gtes_size(e: Gtes) -> int:
    return sum(size(l) + size(r) for l, r in e)


def union(e: Gtes, f: Gtes) -> Gtes:
    return Gtes(list(e) + list(f))


def st(e: Gtes) -> Set[Term]:
    out: Set[Term] = set()
    for l, r in e:
        out.update(iter_nodes(l))
        out.update(iter_nodes(r))
    return out


def signature_flag(sig: Signature, e: Gtes, f: Gtes) -> Tuple[Set[int], bool]:
    used: Set[int] = set()
    for g in (e, f):
        for l, r in g:
            for side in (l, r):
                for u in iter_nodes(side):
                    used.add(sig.id(u.sym))
    return used, len(used) == len(sig)


@dataclass
class SubtermDag:
    """Hash-consed dag; vertex ids are assigned bottom-up, children first."""

    label: List[str] = field(default_factory=list)
    children: List[Tuple[int, ...]] = field(default_factory=list)
    hat: List[Term] = field(default_factory=list)
    index: Dict[Term, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.label)

    def intern(self, t: Term) -> int:
        v = self.index.get(t)
        if v is not None:
            return v
        # postorder walk so that every child is interned before its parent
        stack: List[Tuple[Term, bool]] = [(t, False)]
        while stack:
            u, ready = stack.pop()
            if u in self.index:
                continue
            if ready:
                kids = tuple(self.index[a] for a in u.args)
                self.index[u] = len(self.label)
                self.label.append(u.sym)
                self.children.append(kids)
                self.hat.append(u)
            else:
                stack.append((u, True))
                for a in reversed(u.args):
                    if a not in self.index:
                        stack.append((a, False))
        return self.index[t]

    def vertex(self, t: Term) -> int:
        return self.index[t]


def build_dag(e: Gtes, f: Gtes) -> Tuple[SubtermDag, List[Tuple[int, int]], List[Tuple[int, int]]]:
    dag = SubtermDag()
    tau_e = [(dag.intern(l), dag.intern(r)) for l, r in e]
    tau_f = [(dag.intern(l), dag.intern(r)) for l, r in f]
    return dag, tau_e, tau_f
