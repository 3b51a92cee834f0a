"""Fast ground completion with class constants, totality, normal forms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .closure import Partition, congruence_closure
from .gtes import Gtes, SubtermDag, build_dag, signature_flag
from .terms import Signature, Term, size, subterms

Key = Tuple[int, ...]  # (symbol id, arg class, ..., arg class)


class CompletionError(RuntimeError):
    """Raised when rewriting exceeds its defensive step bound."""


@dataclass(frozen=True)
class ClassConstant:
    name: int
    cardinality: int


@dataclass(frozen=True)
class Rule:
    symbol: int
    args: Tuple[int, ...]
    rhs: int

    @property
    def key(self) -> Key:
        return (self.symbol,) + self.args


def class_term(c: int) -> Term:
    """The class constant c as a term over the extended signature."""
    return Term(f"[{c}]")


def class_of(t: Term) -> Optional[int]:
    s = t.sym
    if not t.args and s.startswith("[") and s.endswith("]") and s[1:-1].isdigit():
        return int(s[1:-1])
    return None


class Gtrs:
    """Flat rules sigma(a1..am) -> a kept in an ordered map keyed by lhs.

    counter_E / counter_F are the satellite counters used by the
    auxiliary graph construction; plain completions leave them at zero.
    """

    def __init__(self, sig: Signature) -> None:
        self.sig = sig
        self._rules: Dict[Key, int] = {}
        self._order: Optional[List[Key]] = None
        self.counter_E: Dict[Key, int] = {}
        self.counter_F: Dict[Key, int] = {}

    def add(self, key: Key, rhs: int) -> bool:
        """Insert unless the lhs is present; returns True on insertion."""
        if key in self._rules:
            return False
        self._rules[key] = rhs
        self._order = None
        return True

    def __contains__(self, key: object) -> bool:
        return key in self._rules

    def __len__(self) -> int:
        return len(self._rules)

    def get(self, key: Key) -> Optional[int]:
        return self._rules.get(key)

    def keys(self) -> List[Key]:
        if self._order is None:
            self._order = sorted(self._rules)
        return self._order

    def rules(self) -> Iterator[Rule]:
        for k in self.keys():
            yield Rule(k[0], k[1:], self._rules[k])

    def __iter__(self) -> Iterator[Rule]:
        return self.rules()

    def size(self) -> int:
        # lhs occurrences plus the rhs constant
        return sum(len(k) + 1 for k in self._rules)

    def format_rule(self, r: Rule) -> str:
        name = self.sig.name(r.symbol)
        lhs = name if not r.args else f"{name}({','.join(f'[{a}]' for a in r.args)})"
        return f"{lhs} -> [{r.rhs}]"

    def __repr__(self) -> str:
        return "Gtrs{" + "; ".join(self.format_rule(r) for r in self) + "}"


@dataclass
class Completion:
    dag: SubtermDag
    partition: Partition
    constants: List[ClassConstant]
    rules: Gtrs
    bstep: Set[Tuple[int, int]]
    flag: bool

    def find_term(self, t: Term) -> int:
        return self.partition.find(self.dag.vertex(t))


def constants_of(p: Partition) -> List[ClassConstant]:
    return [ClassConstant(c, p.card(c)) for c in p.class_names()]


def rules_from(sig: Signature, dag: SubtermDag, p: Partition) -> Tuple[Gtrs, Set[Tuple[int, int]]]:
    """Read off R and BSTEP; arcs point from a rule's rhs to its arguments."""
    R = Gtrs(sig)
    bstep: Set[Tuple[int, int]] = set()
    names = p.names
    for x in range(len(dag)):
        args = tuple(names[c] for c in dag.children[x])
        rhs = names[x]
        R.add((sig.id(dag.label[x]),) + args, rhs)
        for a in args:
            bstep.add((rhs, a))
    return R, bstep


def fgc(sig: Signature, e: Gtes, f: Gtes) -> Completion:
    dag, tau_e, _ = build_dag(e, f)
    p = congruence_closure(dag, tau_e)
    R, bstep = rules_from(sig, dag, p)
    _, flag = signature_flag(sig, e, f)
    return Completion(dag, p, constants_of(p), R, bstep, flag)


def power_exceeds(base: int, exp: int, bound: int) -> bool:
    """base**exp > bound, stopping as soon as the running product passes bound."""
    acc = 1
    for _ in range(exp):
        acc *= base
        if acc > bound:
            return True
    return acc > bound


def product_exceeds(factors: Sequence[int], bound: int) -> bool:
    acc = 1
    for x in factors:
        acc *= x
        if acc > bound:
            return True
    return acc > bound


def is_total(sig: Signature, flag: bool, C: Sequence[ClassConstant], R: Gtrs) -> bool:
    if not flag or len(R) == 0:
        return False
    count: Dict[int, int] = {}
    for key in R.keys():
        count[key[0]] = count.get(key[0], 0) + 1
    k = len(C)
    for sid, (_, m) in enumerate(sig.symbols):
        # at most |C|^m distinct lhs exist for sigma, so fewer means a gap
        if power_exceeds(k, m, count.get(sid, 0)):
            return False
    return True


def normal_form(R: Gtrs, t: Term) -> Term:
    """Bottom-up innermost normalisation with flat rules."""
    bound = 10 * size(t) * (len(R) + 1)
    steps = 0
    sig = R.sig
    stack: List[Tuple[Term, bool]] = [(t, False)]
    memo: Dict[Term, Term] = {}
    while stack:
        u, ready = stack.pop()
        if u in memo:
            continue
        if not ready:
            stack.append((u, True))
            stack.extend((a, False) for a in u.args if a not in memo)
            continue
        args = [memo[a] for a in u.args]
        out = Term(u.sym, args) if u.args else u
        if u.sym in sig:
            cls = [class_of(a) for a in args]
            if all(c is not None for c in cls):
                rhs = R.get((sig.id(u.sym),) + tuple(cls))  # type: ignore[arg-type]
                if rhs is not None:
                    steps += 1
                    if steps > bound:
                        raise CompletionError("normal form step bound exceeded")
                    out = class_term(rhs)
        memo[u] = out
    return memo[t]


def word_problem(sig: Signature, e: Gtes, f: Gtes, s: Term, t: Term) -> bool:
    """s <->*_E t, by completing E against F widened with s = s and t = t."""
    widened = Gtes(list(f) + [(s, s), (t, t)])
    comp = fgc(sig, e, widened)
    return normal_form(comp.rules, s) == normal_form(comp.rules, t)


def rule_lhs(R: Gtrs, r: Rule) -> Term:
    return Term(R.sig.name(r.symbol), [class_term(a) for a in r.args])


def is_reduced(R: Gtrs) -> bool:
    """Every lhs irreducible by the other rules, every rhs irreducible by R."""
    rules = list(R)
    lhs = [rule_lhs(R, r) for r in rules]
    owners: Dict[Term, List[int]] = {}
    for i, l in enumerate(lhs):
        owners.setdefault(l, []).append(i)
    for i, r in enumerate(rules):
        for u in subterms(lhs[i]):
            if any(j != i for j in owners.get(u, ())):
                return False
        if class_term(r.rhs) in owners:
            return False
    return True
