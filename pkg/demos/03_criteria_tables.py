"""
Condition (I) and the Exceptional primes
========================================

For split p = pi·conj(pi), condition (I) asks whether conj(pi) is a cube
in O/pi; Exceptional A asks for an irreducible factor congruent to a
rational integer mod 9 (equivalently 4p = x² + 243y²); Exceptional B asks
whether 3 is a cube mod p.  A and B always agree, an instance check of
cubic reciprocity.
"""

from cubesum import (
    condition_I_table,
    exceptional_A,
    exceptional_A_set,
    exceptional_B_set,
    first_exceptional_A_1mod9,
    prime_report,
)

# the a+b table: to check (I) it is enough that a+b is a cube mod p
print("p     a     b     a+b   cube?")
for row in condition_I_table(73):
    print(f"{row['p']:<5} {row['a']:<5} {row['b']:<5} {row['a+b']:<5} {row['cube']}")

# the Exceptional A primes up to 200, each with its 4p = x² + 243y² witness
print("\nExceptional A up to 200:")
for p in exceptional_A_set(200):
    _, (x, y) = exceptional_A(p)
    print(f"  {p}: 4·{p} = {x}² + 243·{y}²")

print("\nExceptional B up to 100:", exceptional_B_set(100))
print("first five Exceptional A with p = 1 mod 9:", first_exceptional_A_1mod9())

# one aggregated report
print("\n", prime_report(61).to_json(), sep="")
