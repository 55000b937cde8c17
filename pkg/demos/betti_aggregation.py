"""Betti numbers of M against those of r*M.

Degree by degree the inequality beta_{i,a}(M) >= beta_{i,a}(r*M) can fail,
while summing beta_{i,a}(M) over all a with sqrt(a) = b always dominates
beta_{i,b}(r*M).  Both are shown on S/(x^2) and on S/(x^2, xy).

Run: python3 demos/betti_aggregation.py
"""

from collections import defaultdict

from posdet import MonomialIdeal
from posdet.boxmod import from_ideal_pair, pullback_functor
from posdet.homological import betti_table
from posdet.lattice import map_sqrt


def compare(label, I, t):
    S = MonomialIdeal.unit(I.n)
    M = from_ideal_pair(I, S, t)
    BM, BR = betti_table(M), betti_table(pullback_functor(M, "r"))
    agg = defaultdict(int)
    for (i, a), v in BM.items():
        agg[(i, map_sqrt(a))] += v
    print(f"== {label}, t = {t}")
    for (i, b), v in BR.items():
        same = BM[i, b]
        flag = "" if same >= v else "   <- per-degree comparison fails"
        print(f"  i={i} b={b}: beta(r*M)={v}  beta_b(M)={same}  "
              f"sum over sqrt(a)=b: {agg[(i, b)]}{flag}")
        assert agg[(i, b)] >= v


compare("S/(x^2)", MonomialIdeal(1, [(2,)]), (2,))
compare("S/(x^2, xy)", MonomialIdeal(2, [(2, 0), (1, 1)]), (2, 1))
