# walk through the eight bundled problems and look at the auxiliary graphs
from gtesunion import decide_union, load_example, fgc, union, Gtes
from gtesunion.problem import CORPUS, corpus_text

for name in CORPUS:
    p = load_example(name)
    v = decide_union(p.sig, p.E, p.F)
    print(f"{name}: {'yes' if v else 'no':3}  {v.case.tag:22} n={v.aux.n}")

# ex1: f and g are glued at # by E and at $ by F
print(corpus_text("ex1"))
p = load_example("ex1")
print(fgc(p.sig, p.E, p.F).rules)              # R<E,F>
print(fgc(p.sig, p.F, p.E).rules)              # R<F,E>
print(fgc(p.sig, union(p.E, p.F), Gtes()).rules)  # union completion

# one line per union class: name equal_E equal_F keeps_E keeps_F -> successors
v = decide_union(p.sig, p.E, p.F)
print(v.aux.graph.dump())

# ex6: only E is total, so the search follows keeps_F from every vertex that is not an E-class
p = load_example("ex6")
v = decide_union(p.sig, p.E, p.F)
print(v.case, v.aux.total())
print(v.aux.graph.dump())

# ex8: neither side total; the diagnostics name one E and one F equation
p = load_example("ex8")
print(decide_union(p.sig, p.E, p.F).diagnostics)
