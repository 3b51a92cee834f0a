"""Reading and writing `.gtes` problem files."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .gtes import Gtes
from .terms import Signature, Term, TermError, check_term, parse_term, valid_name

SECTIONS = ("signature", "equations E", "equations F")


class ProblemError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None) -> None:
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


@dataclass
class Problem:
    sig: Signature
    E: Gtes
    F: Gtes
    duplicates: int = 0
    name: str = ""


def parse_problem(text: str, name: str = "") -> Problem:
    section: Optional[str] = None
    decls: List[Tuple[str, int]] = []
    eqs: Dict[str, List[Tuple[Term, Term, int]]] = {"equations E": [], "equations F": []}
    seen_sections: List[str] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        header = " ".join(line.split())
        if header in SECTIONS:
            if header in seen_sections:
                raise ProblemError(f"section '{header}' repeated", no)
            seen_sections.append(header)
            section = header
            continue
        if section is None:
            raise ProblemError(f"content before any section header: {line!r}", no)
        if section == "signature":
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ProblemError(f"expected 'name arity', got {line!r}", no)
            if not valid_name(parts[0]):
                raise ProblemError(f"invalid symbol name {parts[0]!r}", no)
            decls.append((parts[0], int(parts[1])))
        else:
            if line.count("=") != 1:
                raise ProblemError(f"expected 'lhs = rhs', got {line!r}", no)
            lhs, rhs = line.split("=")
            try:
                eqs[section].append((parse_term(lhs), parse_term(rhs), no))
            except TermError as exc:
                raise ProblemError(str(exc), no) from None
    if "signature" not in seen_sections:
        raise ProblemError("missing 'signature' section")
    try:
        sig = Signature(tuple(decls))
    except TermError as exc:
        raise ProblemError(str(exc)) from None
    systems = []
    dups = 0
    for key in ("equations E", "equations F"):
        for l, r, no in eqs[key]:
            try:
                check_term(l, sig)
                check_term(r, sig)
            except TermError as exc:
                raise ProblemError(str(exc), no) from None
        g = Gtes((l, r) for l, r, _ in eqs[key])
        dups += g.duplicates
        systems.append(g)
    return Problem(sig, systems[0], systems[1], dups, name)


def read_problem(path: str) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read(), name=path)


def format_problem(p: Problem) -> str:
    out = ["signature"]
    out += [f"  {s} {a}" for s, a in p.sig.symbols]
    for title, g in (("equations E", p.E), ("equations F", p.F)):
        out.append(title)
        out += [f"  {l} = {r}" for l, r in g]
    return "\n".join(out) + "\n"


CORPUS = tuple(f"ex{i}" for i in range(1, 9))
# verdicts of the eight bundled examples
EXPECTED = {"ex1": True, "ex2": False, "ex3": True, "ex4": False,
            "ex5": False, "ex6": True, "ex7": True, "ex8": False}
EXPECTED_CASE = {"ex1": "Unary", "ex2": "Unary", "ex3": "BothTotal", "ex4": "BothTotal",
                 "ex5": "OneTotalHigherArity", "ex6": "OneTotalHigherArity",
                 "ex7": "NoneTotalHigherArity", "ex8": "NoneTotalHigherArity"}


def corpus_text(name: str) -> str:
    return resources.files("gtesunion").joinpath("data", f"{name}.gtes").read_text("utf-8")


def load_example(name: str) -> Problem:
    return parse_problem(corpus_text(name), name=name)
