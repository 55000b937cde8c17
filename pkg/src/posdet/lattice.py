"""Exponent vectors, the componentwise order and the degree maps.

Degrees are plain tuples of ints.  The maps ``map_r``, ``map_sqrt``,
``map_s`` and ``map_p`` are the order preserving maps whose pullbacks give
the functors used throughout the package.
"""

from itertools import product

__all__ = [
    "zero", "one", "unit", "indicator", "add", "sub", "cmul", "cmin", "cmax",
    "leq", "map_r", "map_sqrt", "map_s", "map_p", "supports",
    "box_enumerate", "box_size", "check_bound",
]


def zero(n):
    return (0,) * n


def one(n):
    return (1,) * n


def unit(n, i):
    """The i-th unit vector (0-based)."""
    return tuple(1 if j == i else 0 for j in range(n))


def indicator(n, F):
    """0/1 vector of the index set F."""
    return tuple(1 if j in F else 0 for j in range(n))


def _same_length(a, b):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def add(a, b):
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    _same_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


def cmul(a, b):
    """Componentwise product a*b."""
    _same_length(a, b)
    return tuple(x * y for x, y in zip(a, b))


def cmin(a, b):
    _same_length(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def cmax(a, b):
    _same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def leq(a, b):
    """Componentwise order on Z^n."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def _nonneg(a):
    if any(x < 0 for x in a):
        raise ValueError(f"degree map needs a >= 0, got {a}")


def check_bound(t):
    """Validate a bound vector (t >= 1) and return it as a tuple."""
    t = tuple(int(x) for x in t)
    if any(x < 1 for x in t):
        raise ValueError(f"bound vector must be >= 1, got {t}")
    return t


def map_r(a, t):
    """t_i where a_i > 0, else 0."""
    _same_length(a, t)
    _nonneg(a)
    return tuple(ti if ai > 0 else 0 for ai, ti in zip(a, t))


def map_sqrt(a):
    _nonneg(a)
    return tuple(1 if ai > 0 else 0 for ai in a)


def map_s(a, t):
    """t_i where a_i >= 1, else t_i - 1."""
    _same_length(a, t)
    _nonneg(a)
    return tuple(ti if ai >= 1 else ti - 1 for ai, ti in zip(a, t))


def map_p(a, t):
    """Componentwise min(a, t)."""
    _same_length(a, t)
    _nonneg(a)
    return tuple(min(ai, ti) for ai, ti in zip(a, t))


def supports(a, t):
    """Return (supp(a), supp^t(a)) as frozensets of 0-based indices."""
    _same_length(a, t)
    _nonneg(a)
    supp = frozenset(i for i, x in enumerate(a) if x > 0)
    supp_t = frozenset(i for i, (x, y) in enumerate(zip(a, t)) if x >= y)
    return supp, supp_t


def box_enumerate(lo, hi):
    """All degrees lo <= a <= hi in lexicographic (ascending) order.

    Lex order is a linear extension of the componentwise order, so every
    degree comes after all degrees below it.
    """
    if not leq(lo, hi):
        raise ValueError(f"empty window: {lo} is not <= {hi}")
    return [tuple(p) for p in product(*(range(l, h + 1) for l, h in zip(lo, hi)))]


def box_size(lo, hi):
    size = 1
    for l, h in zip(lo, hi):
        size *= max(h - l + 1, 0)
    return size
