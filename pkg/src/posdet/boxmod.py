"""Z^n-graded modules presented on a finite degree window.

A ``BoxModule`` stores one vector space dimension per degree of a window
``lo <= a <= hi`` and one matrix per unit step ``a -> a + e_i`` inside the
window.  When ``determined`` is set, the module is zero in every degree not
``>= lo`` and multiplication by ``x_i`` from a degree with ``a_i >= hi_i`` is
the identity; this is exactly the data of a positively ``(hi - lo)``-
determined module shifted to start at ``lo``.  With ``lo = 0`` and ``hi = t``
it is the usual box ``[0, t]``.
"""

from dataclasses import dataclass
from itertools import combinations
import random

from .lattice import (
    add, sub, cmul, cmin, cmax, leq, unit, zero, one, indicator,
    map_r, map_s, map_p, box_enumerate, check_bound,
)
from .linalg import QQ, Matrix, Subspace, Subquotient, induced_map, kernel_basis

__all__ = [
    "BoxModule", "MonomialMatrix", "ProfileVerdict",
    "from_ideal_pair", "from_presentation", "free_box", "zero_box",
    "pullback_functor", "window_reindex", "extend_window", "restrict_window",
    "alexander_dual", "kdual", "direct_sum", "quotient_module", "generated_submodule",
    "hilbert_function", "minimal_generators", "annihilator_and_dim", "ass_primes",
    "nat_transforms", "compare_graded", "is_determined", "radical_vanishes",
    "hom_basis", "random_morphism", "is_morphism",
]


class BoxModule:
    """Finite window presentation of a multigraded module.

    ``dims`` maps every window degree to a dimension; ``edges[(a, i)]`` is the
    ``dims[a + e_i] x dims[a]`` matrix of multiplication by ``x_i``.
    """

    def __init__(self, lo, hi, dims, edges, determined=True, field=QQ, verify=True):
        self.lo, self.hi = tuple(lo), tuple(hi)
        if len(self.lo) != len(self.hi):
            raise ValueError("window corners have different lengths")
        if not leq(self.lo, self.hi):
            raise ValueError(f"empty window {self.lo}..{self.hi}")
        self.n = len(self.lo)
        self.field = field
        self.determined = bool(determined)
        self.dims = {a: int(dims.get(a, 0)) for a in box_enumerate(self.lo, self.hi)}
        self.edges = {}
        for a in self.dims:
            for i in range(self.n):
                if a[i] < self.hi[i]:
                    b = a[:i] + (a[i] + 1,) + a[i + 1:]
                    m = edges.get((a, i))
                    if m is None:
                        m = Matrix.zeros(self.dims[b], self.dims[a], field)
                    if m.shape != (self.dims[b], self.dims[a]):
                        raise ValueError(f"edge {a},{i} has shape {m.shape}, expected "
                                         f"{(self.dims[b], self.dims[a])}")
                    self.edges[(a, i)] = m
        if verify:
            self.verify_commutativity()

    # -- basic data ---------------------------------------------------------

    @property
    def t(self):
        return sub(self.hi, self.lo)

    def window(self):
        return box_enumerate(self.lo, self.hi)

    def __repr__(self):
        return (f"BoxModule(n={self.n}, window={self.lo}..{self.hi}, "
                f"total_dim={self.total_dim()}, determined={self.determined})")

    def total_dim(self):
        return sum(self.dims.values())

    def is_zero(self):
        return not any(self.dims.values())

    def in_window(self, a):
        return leq(self.lo, a) and leq(a, self.hi)

    def clamp(self, a):
        """Window degree representing degree a, or None where the module is zero."""
        a = tuple(a)
        if self.in_window(a):
            return a
        if not self.determined:
            raise ValueError(f"degree {a} is outside the window of an undetermined module")
        if not leq(self.lo, a):
            return None
        return cmin(a, self.hi)

    def dim_at(self, a):
        c = self.clamp(a)
        return 0 if c is None else self.dims[c]

    def edge(self, a, i):
        return self.edges[(tuple(a), i)]

    def verify_commutativity(self):
        """Check x_i x_j = x_j x_i on every square of the window."""
        for a in self.dims:
            for i in range(self.n):
                if a[i] >= self.hi[i]:
                    continue
                ai = a[:i] + (a[i] + 1,) + a[i + 1:]
                for j in range(i + 1, self.n):
                    if a[j] >= self.hi[j]:
                        continue
                    aj = a[:j] + (a[j] + 1,) + a[j + 1:]
                    lhs = self.edges[(aj, i)] @ self.edges[(a, j)]
                    rhs = self.edges[(ai, j)] @ self.edges[(a, i)]
                    if lhs != rhs:
                        raise ValueError(f"square at {a} in directions {i},{j} does not commute")
        return True

    def evaluate_action(self, a, b):
        """Matrix of multiplication by x^b out of degree a.

        The target is the window degree ``min(a + b, hi)``; steps past ``hi``
        are identities, which needs the determined flag.  Degrees beyond the
        window are accepted for determined modules and read through ``clamp``.
        """
        a, b = tuple(a), tuple(b)
        if any(x < 0 for x in b):
            raise ValueError(f"negative exponent {b}")
        if not self.in_window(a):
            if not self.determined:
                raise ValueError(f"degree {a} outside the window")
            c = self.clamp(a)
            if c is None:
                target = self.clamp(add(a, b))
                return Matrix.zeros(0 if target is None else self.dims[target], 0, self.field)
            a = c
        if not self.determined and not leq(add(a, b), self.hi):
            raise ValueError("action leaves the window of an undetermined module")
        c = list(a)
        mat = None
        for i in range(self.n):
            steps = min(b[i], self.hi[i] - c[i])
            for _ in range(steps):
                e = self.edges[(tuple(c), i)]
                mat = e if mat is None else e @ mat
                c[i] += 1
        if mat is None:
            return Matrix.identity(self.dims[a], self.field)
        return mat


@dataclass
class ProfileVerdict:
    equal: bool
    degree: tuple = None
    path: tuple = None
    detail: str = ""

    def __bool__(self):
        return self.equal


# -- monomial matrices and free modules ---------------------------------------

class MonomialMatrix:
    """Degree-preserving map of free modules  sum S(-b_k) -> sum S(-a_j).

    ``entries[(j, k)]`` is the scalar of entry (j, k); the monomial part is
    forced to be ``x^(b_k - a_j)``.
    """

    def __init__(self, row_shifts, col_shifts, entries=None, field=QQ):
        self.row_shifts = [tuple(a) for a in row_shifts]
        self.col_shifts = [tuple(b) for b in col_shifts]
        self.field = field
        self.entries = {}
        for (j, k), c in (entries or {}).items():
            c = field(c)
            if not c:
                continue
            if not (0 <= j < len(self.row_shifts) and 0 <= k < len(self.col_shifts)):
                raise ValueError(f"entry ({j},{k}) out of range")
            if not leq(self.row_shifts[j], self.col_shifts[k]):
                raise ValueError(f"entry ({j},{k}): source shift {self.col_shifts[k]} is not "
                                 f">= target shift {self.row_shifts[j]}")
            self.entries[(j, k)] = c

    @property
    def shape(self):
        return (len(self.row_shifts), len(self.col_shifts))

    def exponent(self, j, k):
        return sub(self.col_shifts[k], self.row_shifts[j])

    def at_degree(self, c):
        """Scalar matrix of the degree-c component, with the row/col summands present."""
        rows = [j for j, a in enumerate(self.row_shifts) if leq(a, c)]
        cols = [k for k, b in enumerate(self.col_shifts) if leq(b, c)]
        z = self.field(0)
        m = Matrix._raw([[self.entries.get((j, k), z) for k in cols] for j in rows],
                        len(rows), len(cols), self.field)
        return m, rows, cols

    def scalar_part(self):
        """Entries whose monomial is 1 (what survives after tensoring with K)."""
        return {jk: c for jk, c in self.entries.items()
                if self.row_shifts[jk[0]] == self.col_shifts[jk[1]]}

    def compose(self, other):
        """self @ other (other maps into self's source)."""
        if self.col_shifts != other.row_shifts:
            raise ValueError("shift lists do not match")
        out = {}
        by_row = {}
        for (k, l), c in other.entries.items():
            by_row.setdefault(k, []).append((l, c))
        p = self.field.characteristic
        for (j, k), c in self.entries.items():
            for l, d in by_row.get(k, ()):
                x = out.get((j, l), 0) + c * d
                out[(j, l)] = x % p if p else x
        return MonomialMatrix(self.row_shifts, other.col_shifts, out, self.field)

    def is_zero(self):
        return not self.entries

    def is_minimal(self):
        return not self.scalar_part()

    def radicalize(self):
        from .lattice import map_sqrt
        return MonomialMatrix([map_sqrt(a) for a in self.row_shifts],
                              [map_sqrt(b) for b in self.col_shifts],
                              self.entries, self.field)

    def __repr__(self):
        return f"MonomialMatrix(rows={self.row_shifts}, cols={self.col_shifts}, entries={self.entries})"


def _free_index(shifts, c):
    return [j for j, a in enumerate(shifts) if leq(a, c)]


def _inclusion(shifts, c, i, field):
    """Matrix of x_i: F_c -> F_{c+e_i} on a free module with the given shifts."""
    src = _free_index(shifts, c)
    d = c[:i] + (c[i] + 1,) + c[i + 1:]
    dst = _free_index(shifts, d)
    pos = {j: r for r, j in enumerate(dst)}
    m = Matrix.zeros(len(dst), len(src), field)
    for col, j in enumerate(src):
        m.rows[pos[j]][col] = field(1)
    return m


def free_box(shifts, lo, hi, field=QQ):
    """The free module sum S(-a_j) on the window lo..hi."""
    shifts = [tuple(a) for a in shifts]
    lo, hi = tuple(lo), tuple(hi)
    dims, edges = {}, {}
    for c in box_enumerate(lo, hi):
        dims[c] = len(_free_index(shifts, c))
        for i in range(len(c)):
            if c[i] < hi[i]:
                edges[(c, i)] = _inclusion(shifts, c, i, field)
    determined = all(leq(lo, a) and leq(a, hi) for a in shifts)
    return BoxModule(lo, hi, dims, edges, determined=determined, field=field)


def zero_box(lo, hi, field=QQ):
    return BoxModule(lo, hi, {}, {}, determined=True, field=field)


# -- constructors --------------------------------------------------------------

def from_ideal_pair(I, J, t, field=QQ):
    """The module J/I on the box [0, t]."""
    t = check_bound(t)
    if I.n != J.n or len(t) != I.n:
        raise ValueError("arity mismatch")
    if not I.issubset(J):
        raise ValueError("I is not contained in J")
    if not (I.is_t_determined(t) and J.is_t_determined(t)):
        raise ValueError(f"ideals are not {t}-determined")
    lo = zero(I.n)
    dims = {a: int(J.contains(a) and not I.contains(a)) for a in box_enumerate(lo, t)}
    edges = {}
    for a, d in dims.items():
        for i in range(I.n):
            if a[i] < t[i]:
                b = a[:i] + (a[i] + 1,) + a[i + 1:]
                edges[(a, i)] = Matrix.identity(1, field) if d and dims[b] else \
                    Matrix.zeros(dims[b], d, field)
    return BoxModule(lo, t, dims, edges, determined=True, field=field)


def from_presentation(phi, t, field=None):
    """Cokernel of a monomial matrix F_1 -> F_0 on the box [0, t]."""
    t = check_bound(t)
    field = field or phi.field
    if field != phi.field:
        phi = MonomialMatrix(phi.row_shifts, phi.col_shifts,
                             {jk: field(c) for jk, c in phi.entries.items()}, field)
    lo = zero(len(t))
    for a in phi.row_shifts + phi.col_shifts:
        if len(a) != len(t) or not (leq(lo, a) and leq(a, t)):
            raise ValueError(f"shift {a} is not in [0, {t}]")
    quots = {}
    for c in box_enumerate(lo, t):
        m, rows, _ = phi.at_degree(c)
        quots[c] = Subquotient(Subspace.column_space(m), Subspace.full(len(rows), field))
    return _box_from_subquotients(quots, phi.row_shifts, lo, t, True, field)


def _box_from_subquotients(quots, shifts, lo, hi, determined, field):
    """Assemble a box whose degree-c piece is quots[c] inside a free module."""
    dims = {c: q.dim for c, q in quots.items()}
    edges = {}
    for c, q in quots.items():
        for i in range(len(c)):
            if c[i] < hi[i]:
                d = c[:i] + (c[i] + 1,) + c[i + 1:]
                edges[(c, i)] = induced_map(_inclusion(shifts, c, i, field), q, quots[d])
    return BoxModule(lo, hi, dims, edges, determined=determined, field=field)


# -- functors -----------------------------------------------------------------

def _require_box(M):
    if any(M.lo):
        raise ValueError("operation needs an N^n-graded box starting at 0")
    if not M.determined:
        raise ValueError("operation needs the determined flag")


def pullback_functor(M, q, hi=None, determined=None):
    """q^*M: degree a carries M_{q(a)}, x_i acts as x^{q(a+e_i)-q(a)}.

    ``q`` is ``"r"``, ``"s"``, ``"p1"``, ``"pt"`` (all taken with t = M.t) or a
    callable on degrees.  The named maps land on [0, 1] (``pt`` on [0, t]);
    pass ``hi`` to evaluate on a larger window.
    """
    if isinstance(q, str):
        _require_box(M)
        t = M.hi
        maps = {
            "r": lambda a: map_r(a, t),
            "s": lambda a: map_s(a, t),
            "p1": lambda a: map_p(a, one(M.n)),
            "pt": lambda a: map_p(a, t),
        }
        if q not in maps:
            raise ValueError(f"unknown degree map {q!r}")
        default_hi = t if q == "pt" else one(M.n)
        qf = maps[q]
        if determined is None:
            determined = True
    else:
        if hi is None:
            raise ValueError("a custom degree map needs an explicit window")
        qf, default_hi = q, None
        if determined is None:
            determined = False
    hi = tuple(hi) if hi is not None else default_hi
    lo = zero(M.n)
    dims, edges = {}, {}
    for a in box_enumerate(lo, hi):
        dims[a] = M.dim_at(qf(a))
    for a in box_enumerate(lo, hi):
        qa = qf(a)
        for i in range(M.n):
            if a[i] < hi[i]:
                b = a[:i] + (a[i] + 1,) + a[i + 1:]
                qb = qf(b)
                if not leq(qa, qb):
                    raise ValueError(f"degree map is not order preserving at {a}, {b}")
                edges[(a, i)] = M.evaluate_action(qa, sub(qb, qa))
    return BoxModule(lo, hi, dims, edges, determined=determined, field=M.field)


def extend_window(M, hi):
    """Re-present a determined module on the larger window lo..hi."""
    hi = tuple(hi)
    if not M.determined:
        raise ValueError("only determined modules can be extended")
    if not leq(M.hi, hi):
        raise ValueError("new window must contain the old one")
    dims, edges = {}, {}
    for c in box_enumerate(M.lo, hi):
        cc = cmin(c, M.hi)
        dims[c] = M.dims[cc]
        for i in range(M.n):
            if c[i] < hi[i]:
                edges[(c, i)] = M.edges[(cc, i)] if c[i] < M.hi[i] else \
                    Matrix.identity(dims[c], M.field)
    return BoxModule(M.lo, hi, dims, edges, determined=True, field=M.field)


def restrict_window(M, lo, hi, determined=False):
    """The data of M on a sub-window (no claim about what lies outside)."""
    lo, hi = tuple(lo), tuple(hi)
    if not (M.in_window(lo) and M.in_window(hi)):
        raise ValueError("sub-window is not inside the window")
    dims = {c: M.dims[c] for c in box_enumerate(lo, hi)}
    edges = {k: m for k, m in M.edges.items() if k[0] in dims and k[0][k[1]] < hi[k[1]]}
    return BoxModule(lo, hi, dims, edges, determined=determined, field=M.field)


def generated_submodule(M, gens):
    """Submodule generated by homogeneous subspaces ``gens[a]`` (span propagation)."""
    spans = {}
    for c in M.window():
        vecs = [list(v) for v in gens[c].basis] if c in gens else []
        for i in range(M.n):
            if c[i] > M.lo[i]:
                b = c[:i] + (c[i] - 1,) + c[i + 1:]
                e = M.edges[(b, i)]
                vecs.extend(e @ v for v in spans[b].basis)
        spans[c] = Subspace(M.dims[c], vecs, M.field)
    return spans


def quotient_module(M, subs, determined=None):
    """M / N for a submodule given by degreewise subspaces."""
    quots = {c: Subquotient(subs[c], Subspace.full(M.dims[c], M.field)) for c in M.window()}
    dims = {c: q.dim for c, q in quots.items()}
    edges = {}
    for (c, i), e in M.edges.items():
        d = c[:i] + (c[i] + 1,) + c[i + 1:]
        edges[(c, i)] = induced_map(e, quots[c], quots[d])
    det = M.determined if determined is None else determined
    return BoxModule(M.lo, M.hi, dims, edges, determined=det, field=M.field)


def window_reindex(M, mode, a):
    """Shift ``"shift"`` (sigma_a), ``"truncate_low"`` (tau_{>=a}) or ``"truncate_high"`` (tau^a).

    tau^a is the quotient by the submodule generated by every homogeneous
    piece of degree not <= a; it is returned on the window lo..a.
    """
    a = tuple(a)
    if len(a) != M.n:
        raise ValueError("arity mismatch")
    if mode == "shift":
        dims = {add(c, a): d for c, d in M.dims.items()}
        edges = {(add(c, a), i): m for (c, i), m in M.edges.items()}
        return BoxModule(add(M.lo, a), add(M.hi, a), dims, edges,
                         determined=M.determined, field=M.field)
    if mode == "truncate_low":
        lo = cmax(M.lo, a)
        if not leq(lo, M.hi):
            raise ValueError("truncation leaves an empty window")
        res = restrict_window(M, lo, M.hi, determined=M.determined)
        return res
    if mode == "truncate_high":
        if not leq(M.lo, a):
            raise ValueError("truncation leaves an empty window")
        if not leq(a, M.hi):
            M = extend_window(M, cmax(M.hi, a))
        gens = {c: Subspace.full(M.dims[c], M.field) for c in M.window() if not leq(c, a)}
        Q = quotient_module(M, generated_submodule(M, gens), determined=False)
        return restrict_window(Q, Q.lo, a, determined=False)
    raise ValueError(f"unknown mode {mode!r}")


def kdual(M):
    """Hom_K(M, K): degree a carries (M_{-a})^*, x_i acts by transposes."""
    lo, hi = tuple(-x for x in M.hi), tuple(-x for x in M.lo)
    dims = {tuple(-x for x in c): d for c, d in M.dims.items()}
    edges = {}
    for c in box_enumerate(lo, hi):
        for i in range(M.n):
            if c[i] < hi[i]:
                src = tuple(-x for x in c)
                src = src[:i] + (src[i] - 1,) + src[i + 1:]
                edges[(c, i)] = M.edges[(src, i)].T
    return BoxModule(lo, hi, dims, edges, determined=False, field=M.field)


def alexander_dual(M):
    """A_t(M) on [0, t]: degree a carries (M_{t - a})^* with transposed edges."""
    _require_box(M)
    t = M.hi
    dims, edges = {}, {}
    for a in M.window():
        dims[a] = M.dims[sub(t, a)]
        for i in range(M.n):
            if a[i] < t[i]:
                src = sub(t, a)
                src = src[:i] + (src[i] - 1,) + src[i + 1:]
                edges[(a, i)] = M.edges[(src, i)].T
    return BoxModule(zero(M.n), t, dims, edges, determined=True, field=M.field)


def direct_sum(M, N):
    if (M.lo, M.hi, M.field) != (N.lo, N.hi, N.field):
        raise ValueError("direct sum needs equal windows and fields")
    dims = {c: M.dims[c] + N.dims[c] for c in M.dims}
    edges = {}
    for k, e in M.edges.items():
        f = N.edges[k]
        rows = [r + [M.field(0)] * f.ncols for r in e.rows] + \
               [[M.field(0)] * e.ncols + r for r in f.rows]
        edges[k] = Matrix._raw(rows, e.nrows + f.nrows, e.ncols + f.ncols, M.field)
    return BoxModule(M.lo, M.hi, dims, edges, determined=M.determined and N.determined,
                     field=M.field)


# -- invariants ----------------------------------------------------------------

def hilbert_function(M):
    return dict(sorted(M.dims.items()))


def minimal_generators(M):
    """Degreewise complements of the part generated from below.

    Returns ``{a: (below, [generator vectors])}`` for every window degree.
    """
    out = {}
    for c in M.window():
        vecs = []
        for i in range(M.n):
            if c[i] > M.lo[i]:
                b = c[:i] + (c[i] - 1,) + c[i + 1:]
                e = M.edges[(b, i)]
                vecs.extend(e.column(j) for j in range(e.ncols))
        below = Subspace(M.dims[c], vecs, M.field)
        q = Subquotient(below, Subspace.full(M.dims[c], M.field))
        lift = q.lift()
        out[c] = (below, [lift.column(j) for j in range(q.dim)])
    return out


def is_determined(M, t):
    """Check that x_i is bijective out of every window degree with a_i - lo_i >= t_i."""
    for (a, i), e in M.edges.items():
        if a[i] - M.lo[i] >= t[i]:
            if e.nrows != e.ncols or e.rank() != e.ncols:
                return False
    return True


def radical_vanishes(M):
    """r^*M = 0 iff M_a = 0 for all a with every a_i in {0, t_i}."""
    _require_box(M)
    return all(M.dims[map_r(a, M.hi)] == 0 for a in box_enumerate(zero(M.n), one(M.n)))


def annihilator_and_dim(M):
    """Monomial annihilator (on [0, t]) and Krull dimension; dim 0-module is -1."""
    from .ideals import MonomialIdeal
    if not M.determined:
        raise ValueError("annihilator needs a determined module")
    if M.is_zero():
        return MonomialIdeal.unit(M.n), -1
    gens = minimal_generators(M)
    gen_degrees = [c for c, (_, g) in gens.items() if g]
    found = []
    for b in box_enumerate(zero(M.n), M.t):
        if any(leq(g, b) for g in found):
            continue
        if all(M.evaluate_action(a, b).is_zero() for a in gen_degrees):
            found.append(b)
    ann = MonomialIdeal(M.n, found)
    return ann, ann.dim()


def ass_primes(M):
    """Associated primes P_F, returned as the sets F.

    P_F is associated iff some window degree carries 0 != u with
    x_i^{t_i} u = 0 for i outside F and x^{t e_F} u != 0.
    """
    if not M.determined:
        raise ValueError("associated primes need a determined module")
    t = M.t
    out = []
    for k in range(M.n, -1, -1):
        for F in combinations(range(M.n), k):
            F = frozenset(F)
            survive = tuple(t[i] if i in F else 0 for i in range(M.n))
            for a in M.window():
                d = M.dims[a]
                if not d:
                    continue
                kill = [M.evaluate_action(a, tuple(t[i] if j == i else 0 for j in range(M.n)))
                        for i in range(M.n) if i not in F]
                rows = [r for m in kill for r in m.rows]
                V = kernel_basis(Matrix(rows, len(rows), d, M.field)) if rows else \
                    Subspace.full(d, M.field)
                if not V.dim:
                    continue
                if not (M.evaluate_action(a, survive) @ V.matrix()).is_zero():
                    out.append(F)
                    break
    return sorted(out, key=lambda F: (-len(F), sorted(F)))


def nat_transforms(M):
    """Degreewise matrices of Phi: M -> r^*M and Psi: s^*M -> sigma_{1-t}M.

    ``Phi[a]`` (a in [0, t]) maps M_a to M_{r(a)}; ``Psi[a]`` (a in [0, 1])
    maps M_{s(a)} to M_{a + t - 1}.
    """
    _require_box(M)
    t = M.hi
    tm1 = sub(t, one(M.n))
    phi = {a: M.evaluate_action(a, cmul(a, tm1)) for a in M.window()}
    psi = {}
    for a in box_enumerate(zero(M.n), one(M.n)):
        sa = map_s(a, t)
        psi[a] = M.evaluate_action(sa, sub(add(a, tm1), sa))
    return phi, psi


def compare_graded(M, N):
    """Compare dimensions and ranks of every x^b action inside the window."""
    if (M.lo, M.hi) != (N.lo, N.hi):
        return ProfileVerdict(False, detail=f"windows differ: {M.lo}..{M.hi} vs {N.lo}..{N.hi}")
    for a in M.window():
        if M.dims[a] != N.dims[a]:
            return ProfileVerdict(False, degree=a,
                                  detail=f"dim {M.dims[a]} vs {N.dims[a]} at {a}")
    for a in M.window():
        if not M.dims[a]:
            continue
        acts = {zero(M.n): (None, None)}
        for b in box_enumerate(zero(M.n), sub(M.hi, a)):
            if b == zero(M.n):
                continue
            i = max(j for j in range(M.n) if b[j])
            prev = b[:i] + (b[i] - 1,) + b[i + 1:]
            src = add(a, prev)
            pm, pn = acts[prev]
            em, en = M.edges[(src, i)], N.edges[(src, i)]
            am = em if pm is None else em @ pm
            an = en if pn is None else en @ pn
            acts[b] = (am, an)
            if am.rank() != an.rank():
                return ProfileVerdict(False, degree=a, path=(a, b),
                                      detail=f"rank of x^{b} from {a} differs")
    return ProfileVerdict(True)


# -- morphisms -----------------------------------------------------------------

def is_morphism(M, N, f):
    for (a, i), e in M.edges.items():
        b = a[:i] + (a[i] + 1,) + a[i + 1:]
        if N.edges[(a, i)] @ f[a] != f[b] @ e:
            return False
    return True


def hom_basis(M, N):
    """Basis of the degree-preserving morphisms M -> N on the common window."""
    if (M.lo, M.hi) != (N.lo, N.hi):
        raise ValueError("windows differ")
    field = M.field
    index = {}
    for a in M.window():
        for r in range(N.dims[a]):
            for c in range(M.dims[a]):
                index[(a, r, c)] = len(index)
    nvar = len(index)
    rows = []
    for (a, i), e in M.edges.items():
        b = a[:i] + (a[i] + 1,) + a[i + 1:]
        ne = N.edges[(a, i)]
        for r in range(N.dims[b]):
            for c in range(M.dims[a]):
                row = [field(0)] * nvar
                # (N_edge f_a)[r][c] - (f_b M_edge)[r][c]
                for k in range(N.dims[a]):
                    if ne.rows[r][k]:
                        row[index[(a, k, c)]] += ne.rows[r][k]
                for k in range(M.dims[b]):
                    if e.rows[k][c]:
                        row[index[(b, r, k)]] -= e.rows[k][c]
                if any(row):
                    rows.append(row)
    if rows:
        K = kernel_basis(Matrix(rows, len(rows), nvar, field)).basis
    else:
        K = Matrix.identity(nvar, field).rows
    basis = []
    for v in K:
        f = {}
        for a in M.window():
            f[a] = Matrix([[v[index[(a, r, c)]] for c in range(M.dims[a])]
                           for r in range(N.dims[a])], N.dims[a], M.dims[a], field)
        basis.append(f)
    return basis


def random_morphism(M, N, rng=None, coeffs=(-2, -1, 1, 2)):
    """Random combination of a basis of Hom(M, N); zero map if Hom is zero."""
    rng = rng if rng is not None else random.Random(0)
    basis = hom_basis(M, N)
    f = {a: Matrix.zeros(N.dims[a], M.dims[a], M.field) for a in M.window()}
    for g in basis:
        c = rng.choice(coeffs)
        f = {a: f[a] + g[a].scale(c) for a in f}
    return f
