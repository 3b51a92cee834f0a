"""Congruence closure on a subterm dag.

Downey-Sethi-Tarjan style: a signature table keyed by (label, child classes)
plus per-class use lists, always relinking the smaller class into the larger.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .gtes import SubtermDag


class Partition:
    """Named partition of dag vertices. Names are 1..k, ordered by least member."""

    __slots__ = ("names", "cardinality", "representative")

    def __init__(self, names: Sequence[int]) -> None:
        self.names: Tuple[int, ...] = tuple(names)
        k = max(self.names, default=0)
        card = [0] * (k + 1)
        rep = [-1] * (k + 1)
        for v, c in enumerate(self.names):
            card[c] += 1
            if rep[c] < 0:
                rep[c] = v
        self.cardinality: Tuple[int, ...] = tuple(card)
        self.representative: Tuple[int, ...] = tuple(rep)

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "Partition":
        name: Dict[int, int] = {}
        out = []
        for r in roots:
            if r not in name:
                name[r] = len(name) + 1
            out.append(name[r])
        return cls(out)

    def __len__(self) -> int:
        return len(self.cardinality) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.names == other.names

    def __repr__(self) -> str:
        return f"Partition({list(self.classes())})"

    @property
    def k(self) -> int:
        return len(self)

    def find(self, v: int) -> int:
        if not 0 <= v < len(self.names):
            raise IndexError(f"vertex {v} out of range")
        return self.names[v]

    def card(self, c: int) -> int:
        return self.cardinality[c]

    def class_names(self) -> range:
        return range(1, len(self) + 1)

    def classes(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(len(self))]
        for v, c in enumerate(self.names):
            out[c - 1].append(v)
        return out


def congruence_closure(dag: SubtermDag, tau: Iterable[Tuple[int, int]]) -> Partition:
    n = len(dag)
    parent = list(range(n))
    members: List[List[int]] = [[v] for v in range(n)]
    uses: List[List[int]] = [[] for _ in range(n)]
    label = dag.label
    children = dag.children

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def sig(v: int) -> Tuple:
        return (label[v],) + tuple(find(c) for c in children[v])

    table: Dict[Tuple, int] = {}
    pending: List[Tuple[int, int]] = list(tau)
    for v in range(n):
        for c in set(children[v]):
            uses[c].append(v)
        if children[v]:
            key = sig(v)
            other = table.get(key)
            if other is None:
                table[key] = v
            else:
                pending.append((v, other))

    while pending:
        u, v = pending.pop()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        if len(members[ru]) < len(members[rv]):
            ru, rv = rv, ru
        # rv is absorbed: its users need fresh signatures
        moved = uses[rv]
        for p in moved:
            key = sig(p)
            if table.get(key) == p:
                del table[key]
        parent[rv] = ru
        members[ru].extend(members[rv])
        members[rv] = []
        uses[rv] = []
        for p in moved:
            key = sig(p)
            q = table.get(key)
            if q is None:
                table[key] = p
            elif find(q) != find(p):
                pending.append((p, q))
            uses[ru].append(p)

    return Partition.from_roots([find(v) for v in range(n)])
