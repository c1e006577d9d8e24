"""Finite group-graded algebras over F_p and their graded module theory.

An algebra is given by structure constants ``mul[i][j][k]`` (b_i·b_j =
Σ_k mul[i][j][k] b_k) on a homogeneous basis with degrees ``deg[i]`` in a
finite group. Everything here is exhaustive: elements of a component are
enumerated as coefficient vectors, and module maps are the F_p-solution
spaces of the linearity equations, enumerated in coefficient order.
"""

import itertools

import numpy as np

from .errors import BadSpec, TooLarge
from .exact import Fp
from .matops import Matrix, kernel_basis, rank
from .rings import FiniteRing

DEFAULT_BUDGET = 10**6


class FiniteGroup:
    """A finite group from its Cayley table (``table[a][b]`` = a·b)."""

    def __init__(self, table, check=True):
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0] if t.ndim == 2 else 0
        if n == 0 or t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise BadSpec("Cayley table must be a square grid of element indices")
        self.order = n
        self.table = t
        ids = [e for e in range(n) if (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()]
        if not ids:
            raise BadSpec("no identity element")
        self.e = ids[0]
        inv = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hit = np.flatnonzero((t[a] == self.e) & (t[:, a] == self.e))
            if hit.size == 0:
                raise BadSpec(f"element {a} has no inverse")
            inv[a] = hit[0]
        self.inv = inv
        if check and n <= 64:
            if (t[t] != t[:, t]).any():
                raise BadSpec("group operation is not associative")

    @classmethod
    def cyclic(cls, n):
        x = np.arange(n)
        return cls((x[:, None] + x[None]) % n)

    @classmethod
    def trivial(cls):
        return cls([[0]])

    def mul(self, a, b):
        return int(self.table[a, b])

    def to_json(self):
        return {"order": self.order, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj["order"])
            g = cls(obj["table"])
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"bad group JSON: {exc}") from None
        if g.order != n:
            raise BadSpec("group order does not match its table")
        return g

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class GradedAlgebra:
    """A G-graded associative unital F_p-algebra on a homogeneous basis."""

    def __init__(self, p, group, deg, mul, one, check=True, name=None):
        Fp(p)  # rejects non-primes
        self.p = p
        self.group = group if isinstance(group, FiniteGroup) else FiniteGroup(group)
        self.deg = tuple(int(d) for d in deg)
        self.dim = len(self.deg)
        d = self.dim
        c = np.asarray(mul, dtype=np.int64) % p if d else np.zeros((0, 0, 0), dtype=np.int64)
        if c.shape != (d, d, d):
            raise BadSpec(f"structure constants must be {d}×{d}×{d}")
        if any(not 0 <= s < self.group.order for s in self.deg):
            raise BadSpec("degree outside the group")
        self.mul = c
        self.one = np.asarray(one, dtype=np.int64) % p
        if self.one.shape != (d,):
            raise BadSpec("unit has the wrong length")
        self.name = name
        if check:
            self.validate()

    def validate(self):
        d, p, c, G = self.dim, self.p, self.mul, self.group
        for i, j, k in zip(*np.nonzero(c)):
            if self.deg[k] != G.mul(self.deg[i], self.deg[j]):
                raise BadSpec(f"b_{i}·b_{j} has a component outside degree deg(b_{i})deg(b_{j})")
        # (b_i b_j) b_k = b_i (b_j b_k)
        left = np.einsum("ijm,mkn->ijkn", c, c) % p
        right = np.einsum("jkm,imn->ijkn", c, c) % p
        if (left != right).any():
            raise BadSpec("multiplication is not associative")
        eye = np.eye(d, dtype=np.int64)
        if (self.product(np.repeat(self.one[None], d, 0), eye) != eye).any() or \
                (self.product(eye, np.repeat(self.one[None], d, 0)) != eye).any():
            raise BadSpec("the given unit is not a two-sided identity")
        if self.one[[i for i in range(d) if self.deg[i] != G.e]].any():
            raise BadSpec("the unit must be homogeneous of degree e")

    # ------------------------------------------------------ arithmetic

    def product(self, x, y):
        """Row-wise products of coefficient arrays (N, dim) × (N, dim)."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("ni,nj,ijk->nk", x, y, self.mul) % self.p

    def component(self, s):
        """Basis indices of degree s."""
        return [i for i in range(self.dim) if self.deg[i] == s]

    def component_elements(self, s, budget=DEFAULT_BUDGET):
        """All elements of R_s as coefficient vectors, in coefficient order."""
        return _span_all(self.p, [np.eye(self.dim, dtype=np.int64)[i] for i in self.component(s)],
                         self.dim, budget)

    def left_matrices(self):
        """L[a] with L[a] @ v = b_a · v (column coefficient vectors)."""
        return np.transpose(self.mul, (0, 2, 1))

    def right_matrices(self):
        """Rt[a] with Rt[a] @ v = v · b_a."""
        return np.transpose(self.mul, (1, 2, 0))

    @property
    def order(self):
        return self.p ** self.dim

    def to_json(self):
        return {"p": self.p, "group": self.group.to_json(), "dim": self.dim, "deg": list(self.deg),
                "mul": self.mul.tolist(), "one": self.one.tolist()}

    @classmethod
    def from_json(cls, obj):
        try:
            p = int(obj["p"])
            G = FiniteGroup.from_json(obj["group"])
            d = int(obj["dim"])
            R = cls(p, G, obj["deg"], obj["mul"], obj["one"])
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"bad graded algebra JSON: {exc}") from None
        if R.dim != d:
            raise BadSpec("dim does not match the degree list")
        return R

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"GradedAlgebra{label}(p={self.p}, dim={self.dim}, |G|={self.group.order})"


def _span_all(p, vectors, dim, budget):
    r = len(vectors)
    if p ** r > budget:
        raise TooLarge("component enumeration", p ** r, budget)
    if r == 0:
        return np.zeros((1, dim), dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(p), repeat=r)), dtype=np.int64)
    return (coeffs @ np.array(vectors, dtype=np.int64)) % p


class GradedModule:
    """A graded left module given by action matrices.

    ``act[a]`` is the dim × dim matrix of v ↦ b_a·v on column coefficient
    vectors; ``deg[i]`` is the degree of the i-th basis vector.
    """

    def __init__(self, algebra, deg, act, check=True):
        self.algebra = algebra
        self.deg = tuple(int(d) for d in deg)
        self.dim = len(self.deg)
        self.act = np.asarray(act, dtype=np.int64).reshape(algebra.dim, self.dim, self.dim) % algebra.p
        if check:
            self.validate()

    def validate(self):
        R, G, p = self.algebra, self.algebra.group, self.algebra.p
        for a in range(R.dim):
            for k, i in zip(*np.nonzero(self.act[a])):
                if self.deg[k] != G.mul(R.deg[a], self.deg[i]):
                    raise BadSpec("action does not respect the grading")
        # b_a (b_b v) = (b_a b_b) v
        lhs = np.einsum("akm,bmi->abki", self.act, self.act) % p
        rhs = np.einsum("abc,cki->abki", R.mul, self.act) % p
        if (lhs != rhs).any():
            raise BadSpec("action is not associative")
        unit = np.einsum("a,aki->ki", R.one, self.act) % p
        if (unit != np.eye(self.dim, dtype=np.int64)).any():
            raise BadSpec("the unit does not act as the identity")

    def __repr__(self):
        return f"GradedModule(dim={self.dim}, deg={self.deg})"


def regular_module(R):
    """R as a graded left module over itself."""
    return GradedModule(R, R.deg, R.left_matrices(), check=False)


def suspension(M, s):
    """M(s): same action, component at t equal to the old component at t·s."""
    G = M.algebra.group
    sinv = int(G.inv[s])
    return GradedModule(M.algebra, [G.mul(d, sinv) for d in M.deg], M.act, check=False)


def shift(R, s):
    """The suspension R(s) of the regular module."""
    return suspension(regular_module(R), s)


def direct_sum(modules):
    R = modules[0].algebra
    dim = sum(m.dim for m in modules)
    act = np.zeros((R.dim, dim, dim), dtype=np.int64)
    deg = []
    off = 0
    for m in modules:
        act[:, off:off + m.dim, off:off + m.dim] = m.act
        deg.extend(m.deg)
        off += m.dim
    return GradedModule(R, deg, act, check=False)


# ------------------------------------------------------- hom spaces


class HomBasis:
    """Solution space of the linearity equations for maps src -> dst.

    ``basis`` is (r, dst_dim, src_dim); ``pivots`` are flat entry positions
    where the basis is the identity, so coordinates of a member are its
    entries at ``pivots``.
    """

    def __init__(self, p, basis, pivots, shape):
        self.p = p
        self.basis = basis
        self.pivots = pivots
        self.shape = shape

    @property
    def rank(self):
        return self.basis.shape[0]

    @property
    def size(self):
        return self.p ** self.rank

    def combine(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if self.rank == 0:
            return np.zeros((coeffs.shape[0],) + self.shape, dtype=np.int64)
        return np.einsum("nt,tij->nij", coeffs, self.basis) % self.p

    def coords(self, mats):
        flat = np.asarray(mats, dtype=np.int64).reshape(len(mats), -1)
        return flat[:, self.pivots] % self.p

    def all(self, budget=DEFAULT_BUDGET):
        if self.size > budget:
            raise TooLarge("graded hom enumeration", self.size, budget)
        coeffs = np.array(list(itertools.product(range(self.p), repeat=self.rank)), dtype=np.int64) \
            if self.rank else np.zeros((1, 0), dtype=np.int64)
        return self.combine(coeffs)


def hom_basis(p, src_acts, dst_acts, src_dim, dst_dim, allowed=None):
    """Maps F (dst × src) with F·S_a = D_a·F for all a, supported on ``allowed``."""
    if allowed is None:
        allowed = np.ones((dst_dim, src_dim), dtype=bool)
    unknowns = [(r, c) for r in range(dst_dim) for c in range(src_dim) if allowed[r, c]]
    n = len(unknowns)
    if n == 0:
        return HomBasis(p, np.zeros((0, dst_dim, src_dim), dtype=np.int64), [], (dst_dim, src_dim))
    cols = []
    for r, c in unknowns:
        E = np.zeros((dst_dim, src_dim), dtype=np.int64)
        E[r, c] = 1
        parts = [((E @ S) - (D @ E)).ravel() for S, D in zip(src_acts, dst_acts)]
        cols.append(np.concatenate(parts) % p if parts else np.zeros(0, dtype=np.int64))
    A = np.array(cols, dtype=np.int64).T % p
    # drop zero equations before the exact elimination
    A = A[A.any(axis=1)] if A.size else A
    if A.shape[0] == 0:
        K = np.eye(n, dtype=np.int64)
    else:
        kb = kernel_basis(Matrix(Fp(p), A.tolist(), A.shape[0], n))
        K = np.array(kb.entries, dtype=np.int64).reshape(n, kb.cols).T  # rows are basis vectors
    basis = np.zeros((K.shape[0], dst_dim, src_dim), dtype=np.int64)
    pivots = []
    for t, v in enumerate(K):
        for u, (r, c) in enumerate(unknowns):
            basis[t, r, c] = v[u]
        lead = int(np.flatnonzero(v)[0])
        r, c = unknowns[lead]
        pivots.append(r * src_dim + c)
    return HomBasis(p, basis, pivots, (dst_dim, src_dim))


def graded_hom_basis(M, N):
    """Degree-preserving R-linear maps M -> N."""
    allowed = np.array([[N.deg[k] == M.deg[i] for i in range(M.dim)] for k in range(N.dim)],
                       dtype=bool).reshape(N.dim, M.dim)
    return hom_basis(M.algebra.p, M.act, N.act, M.dim, N.dim, allowed)


def graded_hom(M, N, budget=DEFAULT_BUDGET):
    """All graded morphisms M -> N as an array (count, N.dim, M.dim)."""
    return graded_hom_basis(M, N).all(budget)


def _has_inner_inverse_mats(fs, gs, p):
    """For each f, whether some g has f·g·f = f."""
    out = np.zeros(fs.shape[0], dtype=bool)
    for t, f in enumerate(fs):
        fgf = np.einsum("ij,njk,kl->nil", f, gs, f) % p
        out[t] = bool((fgf == f[None]).all(axis=(1, 2)).any())
    return out


def _all_have_inner_inverse(fs, gs, p):
    for f in fs:
        fgf = np.einsum("ij,njk,kl->nil", f, gs, f) % p
        if not (fgf == f[None]).all(axis=(1, 2)).any():
            return False
    return True


# ---------------------------------------------------- regularity tests


def gr_regular_witnesses(R, budget=DEFAULT_BUDGET):
    """Per degree s: (elements of R_s, least y ∈ R_{s⁻¹} index with x y x = x, or -1)."""
    G = R.group
    out = {}
    for s in range(G.order):
        X = R.component_elements(s, budget)
        Y = R.component_elements(int(G.inv[s]), budget)
        wit = np.full(X.shape[0], -1, dtype=np.int64)
        for t, x in enumerate(X):
            xs = np.repeat(x[None], Y.shape[0], 0)
            xyx = R.product(R.product(xs, Y), xs)
            hit = np.flatnonzero((xyx == x[None]).all(axis=1))
            if hit.size:
                wit[t] = hit[0]
        out[s] = (X, wit)
    return out


def is_gr_regular(R, budget=DEFAULT_BUDGET):
    """Every homogeneous x has y ∈ R_{deg(x)⁻¹} with x·y·x = x."""
    if R.order > budget:
        raise TooLarge("gr-regularity check", R.order, budget)
    return all((wit >= 0).all() for _, wit in gr_regular_witnesses(R, budget).values())


def is_suspension_regular(R, s, budget=DEFAULT_BUDGET):
    """Every graded f: R -> R(s) has some graded g: R(s) -> R with f∘g∘f = f."""
    Rm, Rs = regular_module(R), shift(R, s)
    fs = graded_hom(Rm, Rs, budget)
    gs = graded_hom(Rs, Rm, budget)
    return _all_have_inner_inverse(fs, gs, R.p)


def hom_bijection_ok(R, s, budget=DEFAULT_BUDGET):
    """f ↦ f(1) is a bijection Hom_gr(R, R(s)) -> R_s."""
    fs = graded_hom(regular_module(R), shift(R, s), budget)
    images = {tuple(int(v) for v in (f @ R.one) % R.p) for f in fs}
    comp = {tuple(int(v) for v in x) for x in R.component_elements(s, budget)}
    return len(images) == fs.shape[0] and images == comp


def is_strongly_graded(R):
    """R_s · R_{s⁻¹} spans R_e for every s."""
    G, p = R.group, R.p
    e_dim = len(R.component(G.e))
    for s in range(G.order):
        prods = [R.mul[i, j] for i in R.component(s) for j in R.component(int(G.inv[s]))]
        r = rank(Matrix(Fp(p), [list(map(int, v)) for v in prods], len(prods), R.dim)) if prods else 0
        if r != e_dim:
            return False
    return True


def _restricted_action(R, target):
    """Action of the R_e basis on span{b_i : i in target} by left multiplication."""
    e_idx = R.component(R.group.e)
    L = R.left_matrices()
    return [L[a][np.ix_(target, target)] for a in e_idx]


def is_Re_regular_component(R, s, budget=DEFAULT_BUDGET):
    """R_s is R_e-regular as a left R_e-module."""
    return _is_Re_regular_on(R, R.component(s), budget)


def is_Re_regular(R, budget=DEFAULT_BUDGET):
    """R itself is R_e-regular as a left R_e-module."""
    return _is_Re_regular_on(R, list(range(R.dim)), budget)


def _is_Re_regular_on(R, target, budget):
    p = R.p
    e_idx = R.component(R.group.e)
    if not target:
        return True
    src = _restricted_action(R, e_idx)
    dst = _restricted_action(R, target)
    fs = hom_basis(p, src, dst, len(e_idx), len(target)).all(budget)
    gs = hom_basis(p, dst, src, len(target), len(e_idx)).all(budget)
    return _all_have_inner_inverse(fs, gs, p)


# ---------------------------------------------------------- rings


def smash_product(R, budget=DEFAULT_BUDGET):
    """R#G on the basis b_i p_s, (b_i p_s)(b_j p_t) = b_i (b_j)_{s t⁻¹} p_t."""
    G, p, d = R.group, R.p, R.dim
    n = G.order
    size = p ** (d * n)
    if size > budget:
        raise TooLarge("smash product", size, budget)
    # T[(i,s), (j,t), (k,t')]
    T = np.zeros((d, n, d, n, d, n), dtype=np.int64)
    for s in range(n):
        for t in range(n):
            st = G.mul(s, int(G.inv[t]))
            for j in range(d):
                if R.deg[j] == st:
                    T[:, s, j, t, :, t] = R.mul[:, j, :]
    T = T.reshape(d * n, d * n, d * n)
    unit = np.zeros((d, n), dtype=np.int64)
    unit[:, :] = R.one[:, None]
    unit = unit.ravel()

    def mul_digits(x, y):
        xt = np.einsum("ni,ijk->njk", x, T) % p
        return np.einsum("njk,nj->nk", xt, y) % p

    def label(i):
        coords = ring._codec.decode(np.array([i]))[0].reshape(d, n)
        return coords.tolist()

    ring = FiniteRing.from_codec([p] * (d * n), mul_digits, unit, labels=label)
    return ring


def _ring_from_hom_basis(hb, unit_matrix, budget):
    p = hb.p
    if hb.size > budget:
        raise TooLarge("endomorphism ring", hb.size, budget)
    unit = hb.coords(unit_matrix[None])[0]

    def mul_digits(x, y):
        return hb.coords(np.einsum("nij,njk->nik", hb.combine(x), hb.combine(y)) % p)

    def label(i):
        return hb.combine(ring._codec.decode(np.array([i])))[0].tolist()

    ring = FiniteRing.from_codec([p] * hb.rank, mul_digits, unit, labels=label)
    return ring


def end_gr_of_U(R, budget=DEFAULT_BUDGET):
    """End in R-gr of U = ⊕_s R(s), as a FiniteRing under composition."""
    U = direct_sum([shift(R, s) for s in range(R.group.order)])
    hb = graded_hom_basis(U, U)
    return _ring_from_hom_basis(hb, np.eye(U.dim, dtype=np.int64), budget)


def end_Re_of_R(R, budget=DEFAULT_BUDGET):
    """End_{R_e}(R) for R as a left R_e-module (ungraded)."""
    idx = list(range(R.dim))
    acts = _restricted_action(R, idx)
    hb = hom_basis(R.p, acts, acts, R.dim, R.dim)
    return _ring_from_hom_basis(hb, np.eye(R.dim, dtype=np.int64), budget)


# --------------------------------------------------------- builders


def group_algebra(p, G, graded=True):
    """F_p[G]; naturally graded (b_g in degree g) or concentrated in degree e."""
    n = G.order
    mul = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            mul[a, b, G.mul(a, b)] = 1
    one = np.zeros(n, dtype=np.int64)
    one[G.e] = 1
    deg = list(range(n)) if graded else [G.e] * n
    return GradedAlgebra(p, G, deg, mul, one, name=f"F{p}[C{n}]" + ("" if graded else " trivial"))


def trivially_graded(p, mul, one, G, name=None):
    return GradedAlgebra(p, G, [G.e] * len(one), mul, one, name=name)


def truncated_poly(p, n, G=None, x_degree=None):
    """F_p[x]/x^n with basis 1, x, ..., x^{n-1}; x may sit in a nonzero degree."""
    G = G or FiniteGroup.trivial()
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mul[i, j, i + j] = 1
    xd = G.e if x_degree is None else x_degree
    deg = [G.e]
    for _ in range(1, n):
        deg.append(G.mul(deg[-1], xd))
    one = np.eye(n, dtype=np.int64)[0]
    return GradedAlgebra(p, G, deg, mul, one, name=f"F{p}[x]/x^{n}")


def field_power(p, n, G=None):
    """F_p × ... × F_p (n factors) in degree e."""
    G = G or FiniteGroup.trivial()
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        mul[i, i, i] = 1
    return trivially_graded(p, mul, np.ones(n, dtype=np.int64), G, name=f"F{p}^{n}")


def upper_triangular(p, G, off_degree):
    """2×2 upper triangular matrices: e11, e22 in degree e, e12 in ``off_degree``."""
    # basis e11, e12, e22
    mul = np.zeros((3, 3, 3), dtype=np.int64)
    mul[0, 0, 0] = 1   # e11 e11 = e11
    mul[0, 1, 1] = 1   # e11 e12 = e12
    mul[1, 2, 1] = 1   # e12 e22 = e12
    mul[2, 2, 2] = 1   # e22 e22 = e22
    one = np.array([1, 0, 1], dtype=np.int64)
    return GradedAlgebra(p, G, [G.e, off_degree, G.e], mul, one, name=f"T2(F{p})")


def product_algebra(A, B):
    """A × B with componentwise grading (same group)."""
    if A.p != B.p or A.group != B.group:
        raise BadSpec("factors must share p and the group")
    da, db = A.dim, B.dim
    mul = np.zeros((da + db,) * 3, dtype=np.int64)
    mul[:da, :da, :da] = A.mul
    mul[da:, da:, da:] = B.mul
    one = np.concatenate([A.one, B.one])
    name = f"{A.name}×{B.name}" if A.name and B.name else None
    return GradedAlgebra(A.p, A.group, list(A.deg) + list(B.deg), mul, one, name=name)


def prime_field_extension(p, n):
    """F_{p^n} for a fixed irreducible polynomial (n ≤ 3), trivially graded."""
    polys = {(2, 2): [1, 1], (2, 3): [1, 1, 0], (3, 2): [1, 0], (3, 3): [1, 2, 0]}
    # x^n = -(c0 + c1 x + ...): stored as c with x^n + Σ c_i x^i irreducible
    c = polys[(p, n)]
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            v = np.zeros(2 * n - 1, dtype=np.int64)
            v[i + j] = 1
            for k in range(2 * n - 2, n - 1, -1):
                if v[k]:
                    coef = v[k]
                    v[k] = 0
                    for t in range(n):
                        v[k - n + t] = (v[k - n + t] - coef * c[t]) % p
            mul[i, j] = v[:n] % p
    return trivially_graded(p, mul, np.eye(n, dtype=np.int64)[0], FiniteGroup.trivial(), name=f"F{p}^{n}ext")


def matrix_algebra(p, n=2, G=None, degrees=None):
    """n×n matrices over F_p; with ``degrees`` = (g_1..g_n), e_ij has degree g_i g_j⁻¹."""
    G = G or FiniteGroup.trivial()
    gs = degrees or [G.e] * n
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    d = n * n
    mul = np.zeros((d, d, d), dtype=np.int64)
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                mul[a, b, idx[(i, l)]] = 1
    deg = [G.mul(gs[i], int(G.inv[gs[j]])) for (i, j) in idx]
    one = np.zeros(d, dtype=np.int64)
    for i in range(n):
        one[idx[(i, i)]] = 1
    return GradedAlgebra(p, G, deg, mul, one, name=f"M{n}(F{p})")


def as_ring(R, budget=DEFAULT_BUDGET):
    """The underlying (ungraded) algebra as a FiniteRing on coefficient vectors."""
    if R.order > budget:
        raise TooLarge("algebra ring", R.order, budget)

    def label(i):
        return ring._codec.decode(np.array([i]))[0].tolist()

    ring = FiniteRing.from_codec([R.p] * R.dim, R.product, R.one, labels=label)
    return ring


def family():
    """The deterministic test family: p ∈ {2, 3}, dim ≤ 3, |G| ≤ 3."""
    out = []
    for p in (2, 3):
        T, C2, C3 = FiniteGroup.trivial(), FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)
        out.append(field_power(p, 1))
        out.append(field_power(p, 1, C2))
        out.append(field_power(p, 1, C3))
        out.append(field_power(p, 2))
        out.append(field_power(p, 3, C2))
        out.append(group_algebra(p, C2))
        out.append(group_algebra(p, C2, graded=False))
        out.append(group_algebra(p, C3))
        out.append(group_algebra(p, C3, graded=False))
        out.append(truncated_poly(p, 2))
        out.append(truncated_poly(p, 2, C2, 1))
        out.append(truncated_poly(p, 3, C3, 1))
        out.append(upper_triangular(p, C2, 1))
        out.append(upper_triangular(p, C3, 1))
        out.append(upper_triangular(p, T, 0))
        out.append(product_algebra(field_power(p, 1, C2), group_algebra(p, C2)))
        out.append(product_algebra(field_power(p, 1, C2), truncated_poly(p, 2, C2, 1)))
        out.append(prime_field_extension(p, 2))
        out.append(prime_field_extension(p, 3))
    return out
