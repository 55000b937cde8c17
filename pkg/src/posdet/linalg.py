"""Exact dense linear algebra over Q or a prime field.

Matrices act on column vectors: a map K^m -> K^k is a k x m ``Matrix``.
Everything is exact; rationals are ``fractions.Fraction`` (always reduced),
prime-field residues are ints in [0, p).
"""

from fractions import Fraction

__all__ = [
    "Rationals", "PrimeField", "QQ", "GF", "field_from_string",
    "Matrix", "Subspace", "Subquotient",
    "rref_rank", "kernel_basis", "subquotient", "homology_dim", "induced_map",
]


class Rationals:
    characteristic = 0

    def __call__(self, x):
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not a prime")
        self.characteristic = p

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, str):
            return self(Fraction(x))
        return int(x) % p

    def inv(self, x):
        if x % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.characteristic)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def field_from_string(spec):
    """Parse ``q`` or ``fp:<p>``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq"):
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(spec[3:])
    raise ValueError(f"unknown field {spec!r}; use 'q' or 'fp:<p>'")


class Matrix:
    """Dense matrix with exact entries; treat as immutable."""

    __slots__ = ("nrows", "ncols", "rows", "field")

    def __init__(self, rows, nrows=None, ncols=None, field=QQ):
        rows = [list(r) for r in rows]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("entry count does not match shape")
        self.nrows, self.ncols, self.field = nrows, ncols, field
        self.rows = [[field(x) for x in r] for r in rows]

    @classmethod
    def _raw(cls, rows, nrows, ncols, field):
        m = cls.__new__(cls)
        m.rows, m.nrows, m.ncols, m.field = rows, nrows, ncols, field
        return m

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        z = field(0)
        return cls._raw([[z] * ncols for _ in range(nrows)], nrows, ncols, field)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field(0), field(1)
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], n, n, field)

    @classmethod
    def from_columns(cls, cols, nrows, field=QQ):
        cols = list(cols)
        return cls([[c[i] for c in cols] for i in range(nrows)], nrows, len(cols), field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    @property
    def T(self):
        return Matrix._raw([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                           self.ncols, self.nrows, self.field)

    def _check_field(self, other):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check_field(other)
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            p = self.field.characteristic
            z = self.field(0)
            cols = other.T.rows
            out = []
            for r in self.rows:
                nz = [(k, x) for k, x in enumerate(r) if x]
                row = []
                for c in cols:
                    s = z
                    for k, x in nz:
                        y = c[k]
                        if y:
                            s += x * y
                    row.append(s % p if p else s)
                out.append(row)
            return Matrix._raw(out, self.nrows, other.ncols, self.field)
        # vector
        if len(other) != self.ncols:
            raise ValueError("vector length mismatch")
        p = self.field.characteristic
        res = []
        for r in self.rows:
            s = sum((x * y for x, y in zip(r, other) if x and y), self.field(0))
            res.append(s % p if p else s)
        return res

    def _elementwise(self, other, op):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        p = self.field.characteristic
        rows = [[op(x, y) % p if p else op(x, y) for x, y in zip(r, s)]
                for r, s in zip(self.rows, other.rows)]
        return Matrix._raw(rows, self.nrows, self.ncols, self.field)

    def __add__(self, other):
        return self._elementwise(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._elementwise(other, lambda x, y: x - y)

    def scale(self, c):
        c = self.field(c)
        p = self.field.characteristic
        rows = [[(c * x) % p if p else c * x for x in r] for r in self.rows]
        return Matrix._raw(rows, self.nrows, self.ncols, self.field)

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return f"Matrix({self.nrows}x{self.ncols})"
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    def to_lists(self):
        return [list(r) for r in self.rows]

    def select_rows(self, idx):
        return Matrix._raw([list(self.rows[i]) for i in idx], len(idx), self.ncols, self.field)

    def select_columns(self, idx):
        return Matrix._raw([[r[j] for j in idx] for r in self.rows], self.nrows, len(idx), self.field)

    def rref(self):
        return rref_rank(self)[1]

    def rank(self):
        return rref_rank(self)[0]

    def kernel(self):
        return kernel_basis(self)


def _rref_rows(rows, ncols, field):
    """In-place reduced row echelon form of a list of rows; returns pivots."""
    p = field.characteristic
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = field.inv(prow[c])
        if p:
            prow = [(x * inv) % p for x in prow]
        else:
            prow = [x * inv for x in prow]
        rows[r] = prow
        support = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                row = rows[i]
                f = row[c]
                if f:
                    if p:
                        for j in support:
                            row[j] = (row[j] - f * prow[j]) % p
                    else:
                        for j in support:
                            row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref_rank(m):
    """Return (rank, rref matrix, pivot columns)."""
    rows = [list(r) for r in m.rows]
    pivots = _rref_rows(rows, m.ncols, m.field)
    return len(pivots), Matrix._raw(rows, m.nrows, m.ncols, m.field), pivots


class Subspace:
    """Subspace of K^ambient with a basis in reduced echelon form."""

    __slots__ = ("ambient", "basis", "pivots", "field")

    def __init__(self, ambient, vectors=(), field=QQ):
        rows = [[field(x) for x in v] for v in vectors]
        if any(len(v) != ambient for v in rows):
            raise ValueError("vector length does not match ambient dimension")
        pivots = _rref_rows(rows, ambient, field)
        self.ambient, self.field = ambient, field
        self.basis = rows[:len(pivots)]
        self.pivots = pivots

    @classmethod
    def full(cls, ambient, field=QQ):
        return cls(ambient, Matrix.identity(ambient, field).rows, field)

    @classmethod
    def zero(cls, ambient, field=QQ):
        return cls(ambient, (), field)

    @classmethod
    def column_space(cls, m):
        return cls(m.nrows, m.T.rows, m.field)

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        """Basis vectors as the columns of an ambient x dim matrix."""
        return Matrix._raw([[b[i] for b in self.basis] for i in range(self.ambient)],
                           self.ambient, self.dim, self.field)

    def coords(self, v):
        """Coordinates of v in the echelon basis; ValueError if v is outside."""
        p = self.field.characteristic
        c = [v[j] for j in self.pivots]
        resid = list(v)
        for coef, b in zip(c, self.basis):
            if coef:
                for j, x in enumerate(b):
                    if x:
                        resid[j] = resid[j] - coef * x
        if p:
            resid = [x % p for x in resid]
        if any(resid):
            raise ValueError("vector is not in the subspace")
        return c

    def contains(self, v):
        try:
            self.coords(v)
        except ValueError:
            return False
        return True

    def contains_space(self, other):
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel_basis(m):
    """Null space of m as a Subspace of K^ncols."""
    rank, r, pivots = rref_rank(m)
    field = m.field
    p = field.characteristic
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [field(0)] * m.ncols
        v[f] = field(1)
        for i, pc in enumerate(pivots):
            x = -r.rows[i][f]
            v[pc] = x % p if p else x
        vecs.append(v)
    assert len(vecs) + rank == m.ncols
    return Subspace(m.ncols, vecs, field)


class Subquotient:
    """The quotient big/sub of two nested subspaces of one ambient space.

    Quotient coordinates are attached to the non-pivot big-coordinates of
    ``sub``; ``lift`` picks the corresponding big basis vectors as section.
    """

    def __init__(self, sub, big):
        if sub.ambient != big.ambient:
            raise ValueError("ambient mismatch")
        field = big.field
        self.sub, self.big, self.field = sub, big, field
        try:
            sub_coords = [big.coords(v) for v in sub.basis]
        except ValueError:
            raise ValueError("sub is not contained in bigger") from None
        k = big.dim
        rows = [list(c) for c in sub_coords]
        self._sub_pivots = _rref_rows(rows, k, field)
        self._sub_rref = rows[:len(self._sub_pivots)]
        pivset = set(self._sub_pivots)
        self.free = [j for j in range(k) if j not in pivset]
        p = field.characteristic
        # projection: big-coordinates -> quotient coordinates
        proj = []
        for q in self.free:
            row = []
            for j in range(k):
                # coefficient of reduce(e_j) at position q
                if j == q:
                    row.append(field(1))
                elif j in pivset:
                    i = self._sub_pivots.index(j)
                    x = -self._sub_rref[i][q]
                    row.append(x % p if p else x)
                else:
                    row.append(field(0))
            proj.append(row)
        self.projection = Matrix._raw(proj, len(self.free), k, field)

    @property
    def dim(self):
        return len(self.free)

    def lift(self):
        """ambient x dim matrix whose columns lift the quotient basis."""
        cols = [self.big.basis[q] for q in self.free]
        return Matrix._raw([[c[i] for c in cols] for i in range(self.big.ambient)],
                           self.big.ambient, len(cols), self.field)

    def project(self, v):
        """Quotient coordinates of an ambient vector lying in big."""
        return self.projection @ self.big.coords(v)

    def project_matrix(self, m):
        """Apply ``project`` to every column of an ambient x k matrix."""
        cols = [self.project(m.column(j)) for j in range(m.ncols)]
        return Matrix._raw([[c[i] for c in cols] for i in range(self.dim)],
                           self.dim, m.ncols, self.field)


def subquotient(ambient, sub, bigger):
    """Return (dimension, projection) of bigger/sub, both Subspaces of K^ambient."""
    if sub.ambient != ambient or bigger.ambient != ambient:
        raise ValueError("ambient dimension mismatch")
    q = Subquotient(sub, bigger)
    return q.dim, q.projection


def homology_dim(f, g):
    """dim ker g / im f for A --f--> B --g--> C; requires g f = 0."""
    if f.nrows != g.ncols:
        raise ValueError("f and g are not composable")
    if not (g @ f).is_zero():
        raise ValueError("composition g*f is nonzero")
    return g.ncols - g.rank() - f.rank()


def induced_map(f, source, target):
    """Matrix of the map on subquotients induced by f.

    ``source`` and ``target`` are ``(sub, big)`` Subspace pairs or
    ``Subquotient`` objects.
    """
    if not isinstance(source, Subquotient):
        source = Subquotient(*source)
    if not isinstance(target, Subquotient):
        target = Subquotient(*target)
    if f.ncols != source.big.ambient or f.nrows != target.big.ambient:
        raise ValueError("f does not match the ambient dimensions")
    for v in source.sub.basis:
        if not target.sub.contains(f @ v):
            raise ValueError("f does not map sub into sub")
    for v in source.big.basis:
        if not target.big.contains(f @ v):
            raise ValueError("f does not map bigger into bigger")
    return target.project_matrix(f @ source.lift())
