"""Decide whether the union of two ground congruences is a congruence."""
from .terms import Signature, Term, Context1, parse_term, plug, size, height, subterms
from .gtes import Gtes, build_dag, gtes_size, st, signature_flag, union
from .closure import Partition, congruence_closure
from .completion import fgc, is_total, normal_form, word_problem, is_reduced
from .auxgraph import cad, positive_step_reachable
from .decide import MainCase, Verdict, classify, decide_union, npdfs, pdfs, case2_check, case4_check
from .problem import Problem, parse_problem, read_problem, load_example

__all__ = [
    "Signature", "Term", "Context1", "parse_term", "plug", "size", "height", "subterms",
    "Gtes", "build_dag", "gtes_size", "st", "signature_flag", "union",
    "Partition", "congruence_closure",
    "fgc", "is_total", "normal_form", "word_problem", "is_reduced",
    "cad", "positive_step_reachable",
    "MainCase", "Verdict", "classify", "decide_union", "npdfs", "pdfs", "case2_check", "case4_check",
    "Problem", "parse_problem", "read_problem", "load_example",
]
