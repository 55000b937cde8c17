"""Betti numbers, free resolutions, Ext windows and depth-type classification."""

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .lattice import leq, sub, zero, one, box_enumerate, map_sqrt
from .linalg import Matrix, Subspace, Subquotient, kernel_basis
from .boxmod import (
    BoxModule, MonomialMatrix, minimal_generators, annihilator_and_dim,
    from_presentation, free_box, pullback_functor, _free_index, _inclusion,
    _box_from_subquotients,
)

__all__ = [
    "BettiTable", "FreeComplex", "Classification",
    "betti_table", "taylor_oracle", "minimal_resolution", "radicalize_resolution",
    "ext_window", "ext_window_b", "classify",
]


class BettiTable:
    """Multigraded Betti numbers: ``(i, a) -> beta_{i,a}``, zeros dropped."""

    def __init__(self, n, entries=None):
        self.n = n
        self.entries = {(i, tuple(a)): v for (i, a), v in (entries or {}).items() if v}

    def __getitem__(self, key):
        return self.entries.get((key[0], tuple(key[1])), 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"

    def items(self):
        return sorted(self.entries.items())

    def projdim(self):
        """Largest homological index with a nonzero entry; -1 for the zero module."""
        return max((i for i, _ in self.entries), default=-1)

    def row(self, i):
        return {a: v for (j, a), v in self.entries.items() if j == i}

    def shifts(self, i):
        """Sorted multiset of shifts in homological position i."""
        out = []
        for a, v in sorted(self.row(i).items()):
            out.extend([a] * v)
        return out

    def totals(self):
        """Aggregate to beta_{i,j} by total degree j."""
        agg = defaultdict(int)
        for (i, a), v in self.entries.items():
            agg[(i, sum(a))] += v
        return dict(sorted(agg.items()))

    def lines(self, total=False):
        if total:
            return [f"{i}  {j}  {v}" for (i, j), v in self.totals().items()]
        return [f"{i}  ({','.join(map(str, a))})  {v}" for (i, a), v in self.items()]


def betti_table(M):
    """Betti numbers from the Koszul complex of M, one degree at a time.

    beta_{i,a} is the homology at position i of
    ``... -> sum_{|F|=i} M_{a-e_F} -> sum_{|F|=i-1} M_{a-e_F} -> ...``.
    """
    if not M.determined:
        raise ValueError("Betti numbers need a determined module")
    n, field = M.n, M.field
    entries = {}
    for a in M.window():
        avail = [j for j in range(n) if a[j] > M.lo[j]]
        groups, offsets, sizes = [], [], []
        for i in range(len(avail) + 1):
            subsets = list(combinations(avail, i))
            offs, total = {}, 0
            for F in subsets:
                offs[F] = total
                total += M.dims[tuple(x - (1 if j in F else 0) for j, x in enumerate(a))]
            groups.append(subsets)
            offsets.append(offs)
            sizes.append(total)
        if not any(sizes):
            continue
        ranks = [0] * (len(avail) + 2)
        for i in range(1, len(avail) + 1):
            if not sizes[i] or not sizes[i - 1]:
                continue
            d = Matrix.zeros(sizes[i - 1], sizes[i], field)
            for F in groups[i]:
                src = tuple(x - (1 if j in F else 0) for j, x in enumerate(a))
                col0 = offsets[i][F]
                for pos, j in enumerate(F):
                    G = F[:pos] + F[pos + 1:]
                    e = M.edges[(src, j)]
                    row0 = offsets[i - 1][G]
                    sign = -1 if pos % 2 else 1
                    for r, erow in enumerate(e.rows):
                        drow = d.rows[row0 + r]
                        for c, x in enumerate(erow):
                            if x:
                                drow[col0 + c] = field(sign * x)
            ranks[i] = d.rank()
        for i in range(len(avail) + 1):
            b = sizes[i] - ranks[i] - ranks[i + 1]
            if b:
                entries[(i, a)] = b
    return BettiTable(n, entries)


def taylor_oracle(I, field=None, max_gens=12):
    """Betti numbers of S/I from the Taylor complex tensored with K."""
    from .linalg import QQ
    field = field or QQ
    gens = list(I.gens)
    if len(gens) > max_gens:
        raise ValueError(f"{len(gens)} generators exceed the Taylor cap {max_gens}")
    n = I.n
    by_degree = defaultdict(lambda: defaultdict(list))
    for k in range(len(gens) + 1):
        for F in combinations(range(len(gens)), k):
            lcm = tuple(max([0] + [gens[j][i] for j in F]) for i in range(n))
            by_degree[lcm][k].append(F)
    entries = {}
    for a, cells in by_degree.items():
        top = max(cells)
        ranks = defaultdict(int)
        for k in range(1, top + 1):
            src, dst = cells.get(k, []), cells.get(k - 1, [])
            if not src or not dst:
                continue
            pos = {F: r for r, F in enumerate(dst)}
            d = Matrix.zeros(len(dst), len(src), field)
            for c, F in enumerate(src):
                for p, _ in enumerate(F):
                    G = F[:p] + F[p + 1:]
                    if G in pos:
                        d.rows[pos[G]][c] = field(-1 if p % 2 else 1)
            ranks[k] = d.rank()
        for k in range(top + 1):
            b = len(cells.get(k, [])) - ranks[k] - ranks[k + 1]
            if b:
                entries[(k, a)] = b
    return BettiTable(n, entries)


class FreeComplex:
    """0 <- F_0 <- F_1 <- ... with ``differentials[i-1]``: F_i -> F_{i-1}."""

    def __init__(self, shifts, differentials, field):
        self.shifts = [[tuple(a) for a in s] for s in shifts]
        self.differentials = list(differentials)
        self.field = field
        if len(self.differentials) != len(self.shifts) - 1:
            raise ValueError("need one differential per adjacent pair")
        for i, d in enumerate(self.differentials):
            if d.row_shifts != self.shifts[i] or d.col_shifts != self.shifts[i + 1]:
                raise ValueError(f"differential {i + 1} does not match the shifts")
        self.check_complex()

    @property
    def length(self):
        return len(self.shifts) - 1

    def check_complex(self):
        for i in range(1, len(self.differentials)):
            if not self.differentials[i - 1].compose(self.differentials[i]).is_zero():
                raise ValueError(f"d_{i} d_{i + 1} != 0")
        return True

    def is_minimal(self):
        return all(d.is_minimal() for d in self.differentials)

    def homology_dims(self, c):
        """dim H_i of the degree-c strand, i = 0..length."""
        out = []
        for i in range(len(self.shifts)):
            size = len(_free_index(self.shifts[i], c))
            rk_out = self.differentials[i - 1].at_degree(c)[0].rank() if i > 0 else 0
            rk_in = self.differentials[i].at_degree(c)[0].rank() if i < self.length else 0
            out.append(size - rk_out - rk_in)
        return out

    def is_acyclic_on(self, lo, hi):
        return all(not any(self.homology_dims(c)[1:]) for c in box_enumerate(lo, hi))

    def cokernel_box(self, t):
        """H_0 = coker(d_1) on the box [0, t]."""
        if self.length == 0:
            return free_box(self.shifts[0], zero(len(t)), t, self.field)
        return from_presentation(self.differentials[0], t)

    def tor_table(self):
        """Betti numbers read from this (possibly non-minimal) resolution: H(F (x) K)."""
        n = len(self.shifts[0][0]) if self.shifts[0] else 0
        degrees = sorted({a for s in self.shifts for a in s})
        entries = {}
        for a in degrees:
            idx = [[j for j, b in enumerate(s) if b == a] for s in self.shifts]
            ranks = [0] * (len(self.shifts) + 1)
            for i in range(1, len(self.shifts)):
                d = self.differentials[i - 1]
                if idx[i] and idx[i - 1]:
                    z = self.field(0)
                    m = Matrix._raw([[d.entries.get((j, k), z) for k in idx[i]] for j in idx[i - 1]],
                                    len(idx[i - 1]), len(idx[i]), self.field)
                    ranks[i] = m.rank()
            for i in range(len(self.shifts)):
                b = len(idx[i]) - ranks[i] - ranks[i + 1]
                if b:
                    entries[(i, a)] = b
        return BettiTable(n, entries)

    def __repr__(self):
        return f"FreeComplex(ranks={[len(s) for s in self.shifts]})"


def minimal_resolution(M):
    """Minimal free resolution by repeated generator extraction and syzygies."""
    if not M.determined:
        raise ValueError("resolution needs a determined module")
    field, window = M.field, M.window()
    gens = minimal_generators(M)
    shifts0, vecs = [], []
    for c in window:
        for v in gens[c][1]:
            shifts0.append(c)
            vecs.append(v)
    kernels = {}
    for c in window:
        idx = _free_index(shifts0, c)
        cols = [M.evaluate_action(shifts0[j], sub(c, shifts0[j])) @ vecs[j] for j in idx]
        eps = Matrix.from_columns(cols, M.dims[c], field) if cols else \
            Matrix.zeros(M.dims[c], 0, field)
        kernels[c] = kernel_basis(eps)
    shifts, diffs = [shifts0], []
    prev = shifts0
    while any(K.dim for K in kernels.values()):
        if len(diffs) > M.n:
            raise RuntimeError("resolution longer than the number of variables")
        new_shifts, entries = [], {}
        for c in window:
            below = []
            for i in range(M.n):
                if c[i] > M.lo[i]:
                    b = c[:i] + (c[i] - 1,) + c[i + 1:]
                    inc = _inclusion(prev, b, i, field)
                    below.extend(inc @ v for v in kernels[b].basis)
            q = Subquotient(Subspace(kernels[c].ambient, below, field), kernels[c])
            lift = q.lift()
            idx = _free_index(prev, c)
            for col in range(q.dim):
                k = len(new_shifts)
                new_shifts.append(c)
                for r, j in enumerate(idx):
                    if lift.rows[r][col]:
                        entries[(j, k)] = lift.rows[r][col]
        d = MonomialMatrix(prev, new_shifts, entries, field)
        diffs.append(d)
        shifts.append(new_shifts)
        kernels = {c: kernel_basis(d.at_degree(c)[0]) for c in window}
        prev = new_shifts
    return FreeComplex(shifts, diffs, field)


def radicalize_resolution(F):
    """Replace every shift a by sqrt(a) and every x^(b-a) by x^(sqrt b - sqrt a)."""
    for s in F.shifts:
        for a in s:
            if any(x < 0 for x in a):
                raise ValueError(f"negative shift {a}")
    return FreeComplex([[map_sqrt(a) for a in s] for s in F.shifts],
                       [d.radicalize() for d in F.differentials], F.field)


def _dual_complex(F, c):
    """Hom(F, S(-c)) as monomial matrices: delta_p maps dual F_p to dual F_{p+1}."""
    dual_shifts = [[sub(c, a) for a in s] for s in F.shifts]
    deltas = []
    for p, d in enumerate(F.differentials):
        entries = {(k, j): x for (j, k), x in d.entries.items()}
        deltas.append(MonomialMatrix(dual_shifts[p + 1], dual_shifts[p], entries, F.field))
    return dual_shifts, deltas


def ext_window(M, c, p, window=None, resolution=None):
    """Ext^p(M, S(-c)) on a finite window, with its module structure.

    The default window is [c - t, c], on which the result is a determined box.
    """
    c = tuple(c)
    if M.lo != zero(M.n):
        raise ValueError("Ext windows need an N^n-graded module")
    F = resolution or minimal_resolution(M)
    lo, hi = window if window is not None else (sub(c, M.hi), c)
    lo, hi = tuple(lo), tuple(hi)
    field = M.field
    all_shifts = [a for s in F.shifts for a in s]
    determined = leq(c, hi) and all(leq(lo, sub(c, a)) for a in all_shifts)
    if p < 0 or p > F.length:
        return BoxModule(lo, hi, {}, {}, determined=determined, field=field, verify=False)
    dual_shifts, deltas = _dual_complex(F, c)
    quots = {}
    for b in box_enumerate(lo, hi):
        size = len(_free_index(dual_shifts[p], b))
        big = kernel_basis(deltas[p].at_degree(b)[0]) if p < F.length else \
            Subspace.full(size, field)
        sub_ = Subspace.column_space(deltas[p - 1].at_degree(b)[0]) if p > 0 else \
            Subspace.zero(size, field)
        quots[b] = Subquotient(sub_, big)
    return _box_from_subquotients(quots, dual_shifts[p], lo, hi, determined, field)


def ext_window_b(M, p, resolution=None):
    """Both sides of r^*Ext^p(M, S(-t)) vs Ext^p(s^*M, S(-1)) on [0, 1]."""
    left = pullback_functor(ext_window(M, M.hi, p, resolution=resolution), "r")
    sM = pullback_functor(M, "s")
    right = ext_window(sM, one(M.n), p, (zero(M.n), one(M.n)))
    return left, right


@dataclass
class Classification:
    projdim: int
    depth: int
    dim: int
    is_CM: bool
    is_seq_CM: bool
    is_gen_CM: bool


def _depth_dim(M):
    pd = betti_table(M).projdim()
    _, d = annihilator_and_dim(M)
    return M.n - pd, d


def classify(M, resolution=None):
    """Projective dimension, depth, dimension and the CM-type flags.

    The zero module gets ``projdim = depth = dim = -1`` and all flags False.
    """
    if M.is_zero():
        return Classification(-1, -1, -1, False, False, False)
    n = M.n
    F = resolution or minimal_resolution(M)
    projdim = F.length
    depth = n - projdim
    _, dim = annihilator_and_dim(M)
    exts = {i: ext_window(M, M.hi, i, resolution=F) for i in range(n + 1)}
    gen_cm = all(annihilator_and_dim(E)[1] <= 0 for i, E in exts.items() if i != n - dim)
    seq_cm = True
    for i in range(n + 1):
        E = exts[n - i]
        if E.is_zero():
            continue
        e_depth, e_dim = _depth_dim(E)
        if e_dim != i or e_depth != i:
            seq_cm = False
            break
    return Classification(projdim, depth, dim, depth == dim, seq_cm, gen_cm)
