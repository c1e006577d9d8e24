"""Exact dense matrices and the normal forms built on them.

Conventions:

* ``rref`` works over Q and F_p and returns ``(R, pivots, T)`` with
  ``T @ A == R``.
* ``hnf`` is row style: ``U @ A == H``, pivots positive, entries above a
  pivot reduced into ``[0, pivot)``.
* ``snf`` pivots on the entry of least absolute value and returns
  ``P @ A @ Q == D``.
* Linear algebra over Z/n lifts to Z and appends ``n * I`` as extra
  relation columns.

The ``_*_rows`` helpers operate on plain lists of lists and are what the
hot paths in :mod:`regobj.abcat` call directly.
"""

from fractions import Fraction

from .errors import BadSpec, NoSolution, ShapeMismatch, WrongRing
from .exact import ZZ, Ring, parse_ring


class Matrix:
    """Immutable dense matrix over a :class:`~regobj.exact.Ring`."""

    __slots__ = ("ring", "rows", "cols", "_e", "_hash")

    def __init__(self, ring, entries, rows=None, cols=None):
        ring = parse_ring(ring)
        norm = ring.normalize
        data = tuple(tuple(norm(v) for v in row) for row in entries)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise BadSpec(f"ragged or mis-sized matrix, expected {rows}x{cols}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._e = data
        self._hash = None

    @classmethod
    def _raw(cls, ring, data, rows, cols):
        # trusted constructor: data already normalized tuples
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = rows
        m.cols = cols
        m._e = data
        m._hash = None
        return m

    @classmethod
    def from_rows(cls, ring, rows_list, cols=None):
        rows_list = [list(r) for r in rows_list]
        return cls(ring, rows_list, len(rows_list), cols if cols is not None else (len(rows_list[0]) if rows_list else 0))

    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero
        return cls._raw(ring, tuple((z,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls._raw(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def diag(cls, ring, values, rows=None, cols=None):
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        e = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            e[i][i] = v
        return cls(ring, e, rows, cols)

    @classmethod
    def from_columns(cls, ring, columns, rows):
        columns = [list(c) for c in columns]
        return cls(ring, [[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @property
    def entries(self):
        return self._e

    @property
    def shape(self):
        return self.rows, self.cols

    def tolist(self):
        return [list(r) for r in self._e]

    def column(self, j):
        return [row[j] for row in self._e]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, idx):
        i, j = idx
        return self._e[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, self._e))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.ring}, {self.tolist()!r}, {self.rows}, {self.cols})"

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise WrongRing(f"ring mismatch: {self.ring} vs {other.ring}")

    def __matmul__(self, other):
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        prod = _mul_rows(self._e, other._e, other.cols)
        m = self.ring.modulus
        z = self.ring.zero
        if m:
            data = tuple(tuple(v % m for v in r) for r in prod)
        else:
            data = tuple(tuple(v + z for v in r) for r in prod) if self.ring.is_field else tuple(map(tuple, prod))
        return Matrix._raw(self.ring, data, self.rows, other.cols)

    def __add__(self, other):
        self._check_ring(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        add = self.ring.add
        data = tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self._e, other._e))
        return Matrix._raw(self.ring, data, self.rows, self.cols)

    def __neg__(self):
        neg = self.ring.neg
        return Matrix._raw(self.ring, tuple(tuple(neg(a) for a in r) for r in self._e), self.rows, self.cols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ring.normalize(c)
        mul = self.ring.mul
        return Matrix._raw(self.ring, tuple(tuple(mul(c, a) for a in r) for r in self._e), self.rows, self.cols)

    @property
    def T(self):
        return Matrix._raw(self.ring, tuple(zip(*self._e)) if self.rows else tuple(() for _ in range(self.cols)),
                           self.cols, self.rows)

    def is_zero(self):
        return all(v == 0 for r in self._e for v in r)

    def submatrix(self, rows, cols):
        return Matrix(self.ring, [[self._e[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def hstack(self, other):
        self._check_ring(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack needs equal row counts")
        return Matrix._raw(self.ring, tuple(a + b for a, b in zip(self._e, other._e)), self.rows, self.cols + other.cols)

    def vstack(self, other):
        self._check_ring(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack needs equal column counts")
        return Matrix._raw(self.ring, self._e + other._e, self.rows + other.rows, self.cols)

    def lift(self):
        """The same entries read as integers (canonical residues for Z/n, F_p)."""
        if self.ring.kind == "Q":
            raise WrongRing("cannot lift rational matrix to Z")
        return Matrix._raw(ZZ, self._e, self.rows, self.cols)

    def change_ring(self, ring):
        return Matrix(ring, self._e, self.rows, self.cols)

    def to_json(self):
        if self.ring.kind == "Q":
            ent = [[_frac_str(v) for v in r] for r in self._e]
        else:
            ent = [list(r) for r in self._e]
        return {"ring": str(self.ring), "rows": self.rows, "cols": self.cols, "entries": ent}

    @classmethod
    def from_json(cls, obj):
        try:
            ring = parse_ring(obj["ring"])
            rows, cols = int(obj["rows"]), int(obj["cols"])
            entries = obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"bad matrix JSON: {exc}") from None
        if rows < 0 or cols < 0 or not isinstance(entries, list):
            raise BadSpec("bad matrix JSON shape")
        if rows and cols == 0:
            entries = entries or [[] for _ in range(rows)]
        try:
            return cls(ring, entries, rows, cols)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise BadSpec(f"bad matrix entries: {exc}") from None


def _frac_str(v):
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _mul_rows(a, b, bcols):
    if not b:
        return [[0] * bcols for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _ident(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# --------------------------------------------------------------- fields


def _rref_rows(a, ncols, ring):
    """Reduce ``a`` (list of rows, mutated) over a field. Returns (pivots, T)."""
    m = len(a)
    t = _ident(m)
    if ring.kind == "Q":
        t = [[Fraction(v) for v in r] for r in t]
    mod = ring.modulus
    inv = ring.inv
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        t[r], t[p] = t[p], t[r]
        iv = inv(a[r][c])
        if mod:
            a[r] = [(v * iv) % mod for v in a[r]]
            t[r] = [(v * iv) % mod for v in t[r]]
        else:
            a[r] = [v * iv for v in a[r]]
            t[r] = [v * iv for v in t[r]]
        pr, pt = a[r], t[r]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                if mod:
                    a[i] = [(x - f * y) % mod for x, y in zip(a[i], pr)]
                    t[i] = [(x - f * y) % mod for x, y in zip(t[i], pt)]
                else:
                    a[i] = [x - f * y for x, y in zip(a[i], pr)]
                    t[i] = [x - f * y for x, y in zip(t[i], pt)]
        pivots.append(c)
        r += 1
    return pivots, t


def _require_field(A, op):
    if not A.ring.is_field:
        raise WrongRing(f"{op} needs a field, got {A.ring}")


def rref(A):
    """Reduced row echelon form over Q or F_p: returns ``(R, pivots, T)``."""
    _require_field(A, "rref")
    a = [list(r) for r in A.entries]
    pivots, t = _rref_rows(a, A.cols, A.ring)
    return Matrix(A.ring, a, A.rows, A.cols), pivots, Matrix(A.ring, t, A.rows, A.rows)


def rank(A):
    if A.ring.is_field:
        return len(rref(A)[1])
    if A.ring.kind == "Z":
        return sum(1 for d in snf(A).invariant_factors)
    raise WrongRing("rank is defined here only over fields and Z")


# ------------------------------------------------------------------ Z


def _hnf_rows(a, ncols, track=True):
    """Row-style HNF of ``a`` in place. Returns U (or None) with U·A = H."""
    m = len(a)
    u = _ident(m) if track else None
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(a[i][c]), i))
            if p != r:
                a[r], a[p] = a[p], a[r]
                if track:
                    u[r], u[p] = u[p], u[r]
            piv = a[r][c]
            done = True
            for i in range(r + 1, m):
                v = a[i][c]
                if v:
                    q = v // piv
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                        if track:
                            u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            if track:
                u[r] = [-x for x in u[r]]
        piv = a[r][c]
        for i in range(r):
            q = a[i][c] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                if track:
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return u


def _require_z(A, op):
    if A.ring.kind != "Z":
        raise WrongRing(f"{op} needs the integers, got {A.ring}")


def hnf(A):
    """Row-style Hermite normal form over Z: returns ``(H, U)`` with ``U @ A == H``."""
    _require_z(A, "hnf")
    a = [list(r) for r in A.entries]
    u = _hnf_rows(a, A.cols)
    return Matrix._raw(ZZ, tuple(map(tuple, a)), A.rows, A.cols), Matrix._raw(ZZ, tuple(map(tuple, u)), A.rows, A.rows)


def _snf_rows(a, m, n, track=True):
    """Smith form of ``a`` (m×n, mutated). Returns (diag, P, Q) with P·A·Q = D."""
    P = _ident(m) if track else None
    Q = _ident(n) if track else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in Q:
                row[i], row[j] = row[j], row[i]

    def addrow(dst, src, q):  # row dst -= q * row src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        if track:
            P[dst] = [x - q * y for x, y in zip(P[dst], P[src])]

    def addcol(dst, src, q):  # col dst -= q * col src
        for row in a:
            row[dst] -= q * row[src]
        if track:
            for row in Q:
                row[dst] -= q * row[src]

    t = 0
    k = min(m, n)
    while t < k:
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            piv = a[t][t]
            clean = True
            for i in range(t + 1, m):
                v = a[i][t]
                if v:
                    addrow(i, t, v // piv)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                v = a[t][j]
                if v:
                    addcol(j, t, v // piv)
                    if a[t][j]:
                        clean = False
            if clean:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                addrow(t, bad, -1)
                clean = False
            # move the smallest nonzero entry of row/column t to the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, m):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, n):
                v = a[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                P[t] = [-x for x in P[t]]
        t += 1
    return [a[i][i] for i in range(t)], P, Q


class SNFResult:
    """``P @ A @ Q == D`` with ``D`` diagonal and each entry dividing the next."""

    __slots__ = ("D", "P", "Q", "invariant_factors")

    def __init__(self, D, P, Q, invariant_factors):
        self.D = D
        self.P = P
        self.Q = Q
        self.invariant_factors = invariant_factors

    def __repr__(self):
        return f"SNFResult(invariant_factors={self.invariant_factors})"


def snf(A):
    """Smith normal form over Z."""
    _require_z(A, "snf")
    a = [list(r) for r in A.entries]
    d, P, Q = _snf_rows(a, A.rows, A.cols)
    D = Matrix.diag(ZZ, d, A.rows, A.cols)
    return SNFResult(D, Matrix._raw(ZZ, tuple(map(tuple, P)), A.rows, A.rows),
                     Matrix._raw(ZZ, tuple(map(tuple, Q)), A.cols, A.cols), list(d))


def _reduce_by_hnf(x, h):
    """Reduce vector ``x`` modulo the lattice whose HNF rows are ``h``."""
    x = list(x)
    for row in h:
        c = next((j for j, v in enumerate(row) if v), None)
        if c is None:
            continue
        q = x[c] // row[c]
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return x


def _kernel_z_rows(a, m, n):
    """Generators (as rows, HNF-reduced) of {x in Z^n : A x = 0}."""
    if n == 0:
        return []
    d, _, Q = _snf_rows([list(r) for r in a], m, n)
    r = len(d)
    gens = [[Q[i][j] for i in range(n)] for j in range(r, n)]
    if not gens:
        return []
    _hnf_rows(gens, n, track=False)
    return [g for g in gens if any(g)]


def _solve_z_rows(a, m, n, b):
    """One integer solution of A x = b (canonical modulo ker A) or None."""
    if m == 0:
        return [0] * n
    d, P, Q = _snf_rows([list(r) for r in a], m, n)
    pb = [sum(p * v for p, v in zip(row, b)) for row in P]
    y = [0] * n
    for i, di in enumerate(d):
        if pb[i] % di:
            return None
        y[i] = pb[i] // di
    if any(pb[i] for i in range(len(d), m)):
        return None
    x = [sum(Q[i][j] * y[j] for j in range(n)) for i in range(n)]
    gens = [[Q[i][j] for i in range(n)] for j in range(len(d), n)]
    if gens:
        _hnf_rows(gens, n, track=False)
        x = _reduce_by_hnf(x, gens)
    return x


def _mod_lattice_rows(a, m, n, mod):
    """HNF rows of {x in Z^n : A x ≡ 0 mod ``mod``} (a full-rank lattice)."""
    ext = [list(r) + [mod if i == j else 0 for j in range(m)] for i, r in enumerate(a)]
    gens = _kernel_z_rows(ext, m, n + m)
    gens = [g[:n] for g in gens] + [[mod if i == j else 0 for j in range(n)] for i in range(n)]
    _hnf_rows(gens, n, track=False)
    return [g for g in gens if any(g)]


def _solve_mod_rows(a, m, n, b, mod):
    ext = [list(r) + [mod if i == j else 0 for j in range(m)] for i, r in enumerate(a)]
    x = _solve_z_rows(ext, m, n + m, b)
    if x is None:
        return None
    lat = _mod_lattice_rows(a, m, n, mod)
    return [v % mod for v in _reduce_by_hnf(x[:n], lat)]


def solve(A, b):
    """Return one ``x`` with ``A @ x == b`` or raise :class:`NoSolution`.

    ``b`` may be a column matrix or a sequence. The returned column is the
    normal-form representative of its coset modulo ``ker A``: free variables
    zero over a field, HNF-reduced over Z and Z/n (which over Z/n is the
    lexicographically least solution with entries in ``[0, n)``).
    """
    if isinstance(b, Matrix):
        A._check_ring(b)
        if b.cols != 1:
            raise ShapeMismatch("solve expects a single column")
        bv = b.column(0)
    else:
        bv = [A.ring.normalize(v) for v in b]
    if len(bv) != A.rows:
        raise ShapeMismatch(f"rhs has {len(bv)} rows, matrix has {A.rows}")
    ring = A.ring
    n = A.cols
    if ring.is_field:
        aug = [list(r) + [v] for r, v in zip(A.entries, bv)]
        pivots, _ = _rref_rows(aug, n + 1, ring)
        if n in pivots:
            raise NoSolution("inconsistent system")
        x = [ring.zero] * n
        for r, c in enumerate(pivots):
            x[c] = aug[r][n]
    elif ring.kind == "Z":
        x = _solve_z_rows(A.entries, A.rows, n, bv)
    else:
        x = _solve_mod_rows(A.entries, A.rows, n, bv, ring.modulus)
    if x is None:
        raise NoSolution("inconsistent system")
    return Matrix(ring, [[v] for v in x], n, 1)


def kernel_basis(A):
    """Columns spanning ``ker A``: a basis over fields, generators over Z and Z/n.

    Over a field the basis is returned in reduced column echelon form,
    over Z and Z/n the generators are the HNF rows of the kernel lattice.
    """
    ring = A.ring
    n = A.cols
    if ring.is_field:
        a = [list(r) for r in A.entries]
        pivots, _ = _rref_rows(a, n, ring)
        free = [c for c in range(n) if c not in pivots]
        vecs = []
        for f in free:
            v = [ring.zero] * n
            v[f] = ring.one
            for r, c in enumerate(pivots):
                v[c] = ring.neg(a[r][f])
            vecs.append(v)
        if vecs:
            _rref_rows(vecs, n, ring)
        return Matrix.from_columns(ring, vecs, n) if vecs else Matrix.zeros(ring, n, 0)
    if ring.kind == "Z":
        gens = _kernel_z_rows(A.entries, A.rows, n)
    else:
        gens = _mod_lattice_rows(A.entries, A.rows, n, ring.modulus)
        gens = [[v % ring.modulus for v in g] for g in gens]
        gens = [g for g in gens if any(g)]
    return Matrix.from_columns(ring, gens, n) if gens else Matrix.zeros(ring, n, 0)


def block_diag(ring, blocks):
    r = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    e = [[0] * c for _ in range(r)]
    i0 = j0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                e[i0 + i][j0 + j] = b[i, j]
        i0 += b.rows
        j0 += b.cols
    return Matrix(ring, e, r, c)


def det(A):
    """Determinant over Z or a field (fraction-free Bareiss for Z)."""
    if A.rows != A.cols:
        raise ShapeMismatch("det needs a square matrix")
    n = A.rows
    if n == 0:
        return A.ring.one
    if A.ring.is_field:
        ring = A.ring
        a = [list(r) for r in A.entries]
        d = ring.one
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c] != 0), None)
            if p is None:
                return ring.zero
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = ring.neg(d)
            d = ring.mul(d, a[c][c])
            iv = ring.inv(a[c][c])
            for i in range(c + 1, n):
                f = ring.mul(a[i][c], iv)
                a[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[i], a[c])]
        return d
    _require_z(A, "det")
    a = [list(r) for r in A.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


__all__ = [
    "Matrix", "SNFResult", "rref", "rank", "hnf", "snf", "solve", "kernel_basis",
    "block_diag", "det", "Ring",
]
