"""A module that is not generalized Cohen-Macaulay whose radical image is CM.

M = (x2)/(x1^2 x2 x3, x1^2 x2^2), positively (2,2,1)-determined.

Run: python3 demos/generalized_cm.py
"""

from posdet import MonomialIdeal
from posdet.boxmod import from_ideal_pair, pullback_functor, annihilator_and_dim
from posdet.homological import classify

names = ["x1", "x2", "x3"]
I = MonomialIdeal(3, [(2, 1, 1), (2, 2, 0)])
J = MonomialIdeal(3, [(0, 1, 0)])
M = from_ideal_pair(I, J, (2, 2, 1))
R = pullback_functor(M, "r")

ann, d = annihilator_and_dim(M)
print("ann(M) =", ann.to_text(names))
for F in ann.dim_and_minimal_primes()[1]:
    print("  minimal prime on variables", sorted(names[i] for i in range(3) if i not in F),
          "of dimension", len(F))
for label, X in (("M", M), ("r*M", R)):
    c = classify(X)
    print(f"{label:4} dim={c.dim} depth={c.depth} CM={c.is_CM} generalized CM={c.is_gen_CM}")
