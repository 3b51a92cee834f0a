"""Ground terms over a ranked signature, positions and 1-contexts."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

HOLE = "HOLE"

_TOKEN = re.compile(r"\s*([^\s(),=]+|[(),])")
# brackets are kept free for class constants such as [3]
_NAME = re.compile(r"^[^\s(),=\[\]]+$")


class TermError(ValueError):
    """Malformed term, position or signature."""


def valid_name(name: str) -> bool:
    return bool(_NAME.match(name))


@dataclass(frozen=True)
class Signature:
    """Ranked alphabet. Symbol ids follow declaration order."""

    symbols: Tuple[Tuple[str, int], ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: Dict[str, int] = {}
        for i, (name, arity) in enumerate(self.symbols):
            if not valid_name(name):
                raise TermError(f"bad symbol name {name!r}")
            if name == HOLE:
                raise TermError(f"{HOLE} is reserved")
            if name in index:
                raise TermError(f"symbol {name!r} declared twice")
            if arity < 0:
                raise TermError(f"negative arity for {name!r}")
            index[name] = i
        if not any(a == 0 for _, a in self.symbols):
            raise TermError("signature has no constants")
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *pairs: Tuple[str, int]) -> "Signature":
        return cls(tuple(pairs))

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.symbols)

    def id(self, name: str) -> int:
        return self._index[name]

    def arity(self, name: str) -> int:
        return self.symbols[self._index[name]][1]

    def name(self, sid: int) -> str:
        return self.symbols[sid][0]

    @property
    def max_arity(self) -> int:
        return max(a for _, a in self.symbols)

    def of_arity(self, m: int) -> List[str]:
        return [s for s, a in self.symbols if a == m]

    def is_unary(self) -> bool:
        return self.max_arity <= 1


class Term:
    """Immutable ground term; equality is structural."""

    __slots__ = ("sym", "args", "_hash")

    def __init__(self, sym: str, args: Sequence["Term"] = ()) -> None:
        self.sym = sym
        self.args: Tuple[Term, ...] = tuple(args)
        self._hash = hash((sym, self.args))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Term):
            return NotImplemented
        # iterative, deep unary terms would overflow the C stack otherwise
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a._hash != b._hash or a.sym != b.sym or len(a.args) != len(b.args):
                return False
            stack.extend(zip(a.args, b.args))
        return True

    def __lt__(self, other: "Term") -> bool:
        return str(self) < str(other)

    def __repr__(self) -> str:
        return f"Term({str(self)!r})"

    def __str__(self) -> str:
        if not self.args:
            return self.sym
        out: List[str] = []
        push = out.append
        stack: List[object] = [self]
        while stack:
            u = stack.pop()
            if u.__class__ is str:
                push(u)  # type: ignore[arg-type]
                continue
            args = u.args  # type: ignore[attr-defined]
            push(u.sym)  # type: ignore[attr-defined]
            if not args:
                continue
            push("(")
            items: List[object] = [")"]
            for x in reversed(args[1:]):
                items.append(x)
                items.append(",")
            items.append(args[0])
            stack.extend(items)
        return "".join(out)

    def __getitem__(self, pos: Sequence[int]) -> "Term":
        return subterm_at(self, pos)


def const(name: str) -> Term:
    return Term(name)


def app(name: str, *args: Term) -> Term:
    return Term(name, args)


def check_term(t: Term, sig: Signature) -> None:
    """Raise TermError unless t is well formed over sig."""
    stack = [t]
    while stack:
        u = stack.pop()
        if u.sym not in sig:
            raise TermError(f"undeclared symbol {u.sym!r}")
        if sig.arity(u.sym) != len(u.args):
            raise TermError(
                f"{u.sym!r} has arity {sig.arity(u.sym)} but got {len(u.args)} arguments")
        stack.extend(u.args)


def iter_nodes(t: Term) -> Iterator[Term]:
    # preorder
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(u.args))


def size(t: Term) -> int:
    return sum(1 for _ in iter_nodes(t))


def height(t: Term) -> int:
    best = 0
    stack = [(t, 0)]
    while stack:
        u, d = stack.pop()
        if d > best:
            best = d
        stack.extend((a, d + 1) for a in u.args)
    return best


def subterms(t: Term) -> Set[Term]:
    return set(iter_nodes(t))


def positions(t: Term) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []
    stack: List[Tuple[Term, Tuple[int, ...]]] = [(t, ())]
    while stack:
        u, p = stack.pop()
        out.append(p)
        for i in range(len(u.args), 0, -1):
            stack.append((u.args[i - 1], p + (i,)))
    return out


def subterm_at(t: Term, pos: Sequence[int]) -> Term:
    for i in pos:
        if not 1 <= i <= len(t.args):
            raise TermError(f"invalid position {tuple(pos)}")
        t = t.args[i - 1]
    return t


def replace_at(t: Term, pos: Sequence[int], s: Term) -> Term:
    if not pos:
        return s
    i = pos[0]
    if not 1 <= i <= len(t.args):
        raise TermError(f"invalid position {tuple(pos)}")
    args = list(t.args)
    args[i - 1] = replace_at(args[i - 1], pos[1:], s)
    return Term(t.sym, args)


@dataclass(frozen=True)
class Context1:
    """A term with exactly one occurrence of the hole constant."""

    term: Term
    addr: Tuple[int, ...]

    def __post_init__(self) -> None:
        holes = [p for p in positions(self.term) if subterm_at(self.term, p).sym == HOLE]
        if holes != [tuple(self.addr)]:
            raise TermError("context must contain exactly one hole at addr")

    @classmethod
    def from_term(cls, t: Term) -> "Context1":
        holes = [p for p in positions(t) if subterm_at(t, p).sym == HOLE]
        if len(holes) != 1:
            raise TermError(f"expected one hole, found {len(holes)}")
        return cls(t, holes[0])

    def is_proper(self) -> bool:
        return len(self.addr) > 0

    def __str__(self) -> str:
        return str(self.term)


HOLE_TERM = Term(HOLE)
EMPTY_CONTEXT = Context1(HOLE_TERM, ())


def plug(c: Context1, t: Term) -> Term:
    return replace_at(c.term, c.addr, t)


def parse_term(text: str, sig: Optional[Signature] = None) -> Term:
    """Parse `f(t1,...,tm)` syntax; checks arities when sig is given."""
    toks: List[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermError(f"unexpected character {text[pos]!r} in {text!r}")
        toks.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not toks:
        raise TermError("empty term")
    # explicit stack of open applications, so depth is not bounded by recursion
    k = 0
    stack: List[Tuple[str, List[Term]]] = []
    while True:
        if k >= len(toks) or toks[k] in "(),":
            raise TermError(f"expected a symbol in {text!r}")
        name = toks[k]
        k += 1
        if k < len(toks) and toks[k] == "(":
            stack.append((name, []))
            k += 1
            continue
        node = Term(name)
        while stack:
            stack[-1][1].append(node)
            if k < len(toks) and toks[k] == ",":
                k += 1
                break
            if k >= len(toks) or toks[k] != ")":
                raise TermError(f"missing ')' in {text!r}")
            k += 1
            name, args = stack.pop()
            node = Term(name, args)
        else:
            break
    t = node
    if k != len(toks):
        raise TermError(f"trailing input in {text!r}")
    if sig is not None:
        check_term(t, sig)
    return t
