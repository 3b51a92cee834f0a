# brute force search for pairs joined by E u F but by neither E nor F
from gtesunion import decide_union, load_example, parse_problem, word_problem, Gtes
from gtesunion.oracle import counterexample_search, enumerate_terms
from gtesunion.fuzz import feasible_height

for name in ("ex2", "ex4", "ex5", "ex8"):
    p = load_example(name)
    h = feasible_height(p.sig, 3)   # binary symbols blow up fast, stay under the cap
    s, t = counterexample_search(p.sig, p.E, p.F, h)
    both = Gtes(list(p.E) + list(p.F))
    print(name, h, s, t,
          word_problem(p.sig, both, Gtes(), s, t),   # True
          word_problem(p.sig, p.E, Gtes(), s, t),    # False
          word_problem(p.sig, p.F, Gtes(), s, t))    # False

# how many terms the search has to look at
p = load_example("ex8")
for h in range(3):
    print(h, len(enumerate_terms(p.sig, h)))

# a unary instance where the outer vertex itself fails keeps_F:
# s(#) ~ g(#) by E, g(#) ~ g($) by F, but s(#) and g($) are apart in both
p = parse_problem("""
signature
  # 0
  $ 0
  s 1
  g 1
equations E
  s(#) = g(#)
equations F
  # = $
""")
v = decide_union(p.sig, p.E, p.F)
print(bool(v), v.diagnostics)
print(counterexample_search(p.sig, p.E, p.F, 2))
