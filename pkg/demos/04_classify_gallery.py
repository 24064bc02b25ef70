"""
The classifier: which M are sums of two cubes?
==============================================

classify() reduces M modulo cube factors, pattern-matches the canonical
form against the theorem table, and emits a cited verdict.  Undecided
targets trigger bounded searches.
"""

from cubesum import EisensteinInt, KElement, W, classify
from cubesum.search import SearchBudget


def show(m, scope="K", budget=SearchBudget()):
    v = classify(m, scope, budget)
    text = f"classify({m}, {scope}) = {v.status} [{v.rule}]"
    if v.witness:
        text += f"  witness ({v.witness[0]}, {v.witness[1]})"
    if v.trivial_solutions is not None:
        text += "  " + ", ".join(f"({a}, {b})" for a, b in v.trivial_solutions)
    print(text)


# the classical verdicts of Euler and Legendre
for m in (1, 2, 3, 4, 5):
    show(m, "Q")

# Legendre was wrong about 6: a bounded search finds the witness
show(6, "Q")

# Diophantus' 7 is solvable; for the rational class the classifier cites
# the literature (the constructions are outside its scope)
show(7, "Q")

# 3p for p = 61: blocked theorems, rescued by the Lucas identity
show(183, "Q")

# 9 is in the cube class of beta: explicit construction
show(9, "Q")

# associates can behave differently: 18 is blocked, 18w is solvable
show(18)
show(EisensteinInt(0, 18))

# same for the norm-19 primary factor and its unit twists
pi19 = EisensteinInt(-2, 3)
show(pi19)
show(W * pi19)

# Exceptional A makes the difference at norm 73
show(EisensteinInt(1, 9))

# fractional targets work too (the cube class is what matters)
show(KElement(EisensteinInt(2), 27), "Q")
