"""Walk through the radical functor on a quotient J/I of Z^4-graded ideals.

Run: python3 demos/radical_walkthrough.py
"""

from posdet import MonomialIdeal
from posdet.boxmod import from_ideal_pair, pullback_functor, annihilator_and_dim, compare_graded
from posdet.homological import betti_table, classify

names = ["a", "b", "c", "d"]
t = (4, 3, 2, 4)
I = MonomialIdeal(4, [(4, 0, 0, 4), (2, 3, 0, 0), (0, 3, 2, 0), (0, 3, 0, 1)])
J = MonomialIdeal(4, [(3, 0, 0, 3), (3, 1, 0, 0), (0, 2, 0, 0)])

M = from_ideal_pair(I, J, t)
R = pullback_functor(M, "r")
print("I       =", I.to_text(names))
print("J       =", J.to_text(names))
print("sqrt(I) =", I.radical().to_text(names))
print("sqrt(J) =", J.radical().to_text(names))

# r*M lives on the unit box and agrees with the quotient of radicals
Q = from_ideal_pair(I.radical(), J.radical(), (1, 1, 1, 1))
print("r*M matches sqrt(J)/sqrt(I):", compare_graded(R, Q).equal)

print("dim M =", annihilator_and_dim(M)[1], " dim r*M =", annihilator_and_dim(R)[1])
cM, cR = classify(M), classify(R)
print(f"depth M = {cM.depth}, depth r*M = {cR.depth}")

print("\nBetti numbers of M (i, degree, value):")
for line in betti_table(M).lines():
    print(" ", line)
print("Betti numbers of r*M:")
for line in betti_table(R).lines():
    print(" ", line)
