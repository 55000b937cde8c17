"""Monomial ideals given by their minimal generators."""

from itertools import combinations

from .lattice import leq, map_r, map_sqrt, box_enumerate, zero, one

__all__ = ["MonomialIdeal", "minimalize"]


def _check_gen(g, n):
    g = tuple(int(x) for x in g)
    if len(g) != n:
        raise ValueError(f"generator {g} does not have arity {n}")
    if any(x < 0 for x in g):
        raise ValueError(f"negative exponent in {g}")
    return g


def _minimal(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    keep = []
    for g in gens:
        if not any(leq(h, g) for h in keep):
            keep.append(g)
    return tuple(sorted(keep))


class MonomialIdeal:
    """A monomial ideal in K[x_1..x_n]; generators are kept minimal and lex-sorted.

    The zero ideal has no generators, the unit ideal has the single
    generator 0.  Two ideals are equal iff their generator tuples are.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n, gens=()):
        self.n = int(n)
        self.gens = _minimal(_check_gen(g, self.n) for g in gens)

    @classmethod
    def unit(cls, n):
        return cls(n, [zero(n)])

    @classmethod
    def zero_ideal(cls, n):
        return cls(n, [])

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and (self.n, self.gens) == (other.n, other.gens)

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {list(self.gens)})"

    def __len__(self):
        return len(self.gens)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == (zero(self.n),)

    def contains(self, u):
        """x^u in I."""
        if len(u) != self.n:
            raise ValueError("arity mismatch")
        if any(x < 0 for x in u):
            raise ValueError(f"negative exponent in {u}")
        return any(leq(g, u) for g in self.gens)

    def __contains__(self, u):
        return self.contains(tuple(u))

    def issubset(self, other):
        return all(other.contains(g) for g in self.gens)

    def colon(self, u):
        """I : x^u."""
        u = _check_gen(u, self.n)
        return MonomialIdeal(self.n, [tuple(max(g - x, 0) for g, x in zip(gen, u))
                                      for gen in self.gens])

    def tight_bound(self):
        """Componentwise max exponent over G(I), floored at 1."""
        return tuple(max([1] + [g[i] for g in self.gens]) for i in range(self.n))

    def is_t_determined(self, t):
        return all(leq(g, t) for g in self.gens)

    def radical(self):
        """sqrt(I) by taking the support of every generator."""
        return MonomialIdeal(self.n, [map_sqrt(g) for g in self.gens])

    def radical_by_degrees(self, t=None):
        """sqrt(I) via the criterion x^a in sqrt(I) iff x^{r(a)} in I.

        Only squarefree degrees are inspected; the survivors are minimalized.
        """
        t = self.tight_bound() if t is None else tuple(t)
        if not self.is_t_determined(t):
            raise ValueError("ideal is not t-determined")
        gens = [a for a in box_enumerate(zero(self.n), one(self.n))
                if self.contains(map_r(a, t))]
        return MonomialIdeal(self.n, gens)

    def sum(self, other):
        return MonomialIdeal(self.n, self.gens + other.gens)

    def dim_and_minimal_primes(self):
        """Krull dimension of S/I and its minimal primes.

        A prime P_F = (x_i : i not in F) is returned as the frozenset F.  The
        search is exhaustive over subsets, largest first.
        """
        if self.is_unit:
            raise ValueError("unit ideal has no primes")
        n = self.n
        supports = [frozenset(i for i, x in enumerate(g) if x > 0) for g in self.gens]
        faces = []
        for k in range(n, -1, -1):
            for F in combinations(range(n), k):
                F = frozenset(F)
                # P_F contains I iff no generator is supported inside F
                if any(s <= F for s in supports):
                    continue
                if not any(F < G for G in faces):
                    faces.append(F)
        dim = max(len(F) for F in faces)
        return dim, sorted(faces, key=lambda F: (-len(F), sorted(F)))

    def dim(self):
        return self.dim_and_minimal_primes()[0]

    def to_text(self, names):
        return ", ".join(monomial_text(g, names) for g in self.gens) if self.gens else "0"


def minimalize(gens, n=None):
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("arity needed for an empty generator list")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


def monomial_text(g, names):
    parts = []
    for x, v in zip(g, names):
        if x == 1:
            parts.append(v)
        elif x > 1:
            parts.append(f"{v}^{x}")
    return "*".join(parts) if parts else "1"
