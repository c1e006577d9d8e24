"""Diagonal abelian groups Z/d_1 ⊕ ... ⊕ Z/d_k (d_i = 0 meaning Z).

Every finitely presented module is handled in these coordinates after its
relations are put in Smith form; moduli are never 1. A homomorphism
⊕Z/a_i -> ⊕Z/b_j is an integer matrix whose column i holds the image of
the i-th generator, rows reduced modulo b_j.

Two layers live here: small list-based routines for single morphisms
(kernels, images, splittings) and numpy-vectorized hom spaces used by the
exhaustive searches.
"""

from functools import lru_cache
from math import gcd, prod

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InfiniteHom, TooLarge
from .matops import _hnf_rows, _ident, _kernel_z_rows, _snf_rows, _solve_z_rows


def hom_count(dst, src):
    """|Hom(Z/src, Z/dst)|, or 0 for the infinite case Hom(Z, Z)."""
    if dst == 0:
        return 0 if src == 0 else 1
    return gcd(src, dst)


def hom_step(dst, src):
    """Generator of Hom(Z/src, Z/dst) inside Z/dst (0 when the hom-set is zero)."""
    if dst == 0:
        return 1 if src == 0 else 0
    return dst // gcd(src, dst)


def reduce_vec(v, mods):
    return [x % m if m else x for x, m in zip(v, mods)]


def reduce_mat(a, mods):
    """Reduce row j of ``a`` modulo ``mods[j]``."""
    return [[x % m for x in row] if m else list(row) for row, m in zip(a, mods)]


def matmul(a, b, inner=None):
    if not a:
        return []
    if not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a] if inner is None else [[0] * inner for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def compose(g, f, mods, ncols):
    """Core matrix of g∘f, reduced modulo the target moduli ``mods``."""
    if not g:
        return []
    if not f or not f[0]:
        return [[0] * ncols for _ in g]
    return reduce_mat(matmul(g, f), mods)


def zero_mat(r, c):
    return [[0] * c for _ in range(r)]


def is_zero(a):
    return all(not x for row in a for x in row)


def transpose(a, nrows=None):
    if not a:
        return [[] for _ in range(nrows or 0)]
    return [list(c) for c in zip(*a)]


def inverse_unimodular(p):
    n = len(p)
    a = [list(r) for r in p]
    u = _hnf_rows(a, n)
    return u


def _echelon_solve(basis_rows, v):
    """Solve sum_k w_k basis_rows[k] = v for HNF rows, or None."""
    w = []
    v = list(v)
    for row in basis_rows:
        c = next(j for j, x in enumerate(row) if x)
        q, r = divmod(v[c], row[c])
        if r:
            return None
        w.append(q)
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    if any(v):
        return None
    return w


def _quotient(basis_rows, ambient_mods):
    """Normal form of colspan(K) / (diag(ambient_mods) Z^n) where colspan(K) ⊇ it.

    ``basis_rows`` are the HNF rows of the lattice K. Returns
    ``(moduli, gens, P)`` where ``gens`` (n × k, as rows of length k) are the
    new generators in ambient coordinates and ``P`` maps K-coordinates to the
    new core coordinates.
    """
    r = len(basis_rows)
    n = len(ambient_mods)
    w_cols = []
    for i, m in enumerate(ambient_mods):
        if m:
            e = [0] * n
            e[i] = m
            w = _echelon_solve(basis_rows, e)
            assert w is not None, "relations must lie in the lattice"
            w_cols.append(w)
    if r == 0:
        return (), [[] for _ in range(n)], []
    w = [[c[k] for c in w_cols] for k in range(r)] if w_cols else [[] for _ in range(r)]
    d, P, _ = _snf_rows(w, r, len(w_cols))
    full = list(d) + [0] * (r - len(d))
    core = [i for i in range(r) if full[i] != 1]
    pinv = inverse_unimodular(P)
    # generators in ambient coords: K · Pinv[:, core]; K = basis_rows^T
    kp = [[sum(basis_rows[k][row] * pinv[k][c] for k in range(r)) for c in core] for row in range(n)]
    kp = reduce_mat(kp, ambient_mods)
    return tuple(full[i] for i in core), kp, [P[i] for i in core]


def kernel(a, b, phi):
    """Kernel of ``phi``: ⊕Z/a -> ⊕Z/b. Returns ``(moduli, inclusion)``."""
    na, nb = len(a), len(b)
    if na == 0:
        return (), zero_mat(0, 0)
    ext = [list(phi[j]) + [b[j] if k == j else 0 for k in range(nb)] for j in range(nb)]
    if nb:
        gens = _kernel_z_rows(ext, nb, na + nb)
        gens = [g[:na] for g in gens]
    else:
        gens = _ident(na)
    gens += [[a[i] if k == i else 0 for k in range(na)] for i in range(na) if a[i]]
    _hnf_rows(gens, na, track=False)
    basis = [g for g in gens if any(g)]
    mods, incl, _ = _quotient(basis, a)
    return mods, incl


def image(a, b, phi):
    """Image split of ``phi``. Returns ``(moduli, j, corestriction)``."""
    na, nb = len(a), len(b)
    rows = [[phi[j][i] for j in range(nb)] for i in range(na)]
    rows += [[b[j] if k == j else 0 for k in range(nb)] for j in range(nb) if b[j]]
    _hnf_rows(rows, nb, track=False)
    basis = [r for r in rows if any(r)]
    mods, j, P = _quotient(basis, b)
    # coordinates of phi's columns in the lattice basis, then in core coords
    x = [_echelon_solve(basis, [phi[jj][i] for jj in range(nb)]) for i in range(na)]
    fprime = [[sum(P[c][k] * x[i][k] for k in range(len(basis))) for i in range(na)] for c in range(len(mods))]
    return mods, j, reduce_mat(fprime, mods)


@lru_cache(maxsize=1 << 16)
def _solve_cached(rows, ncols, rhs):
    # the per-row systems below repeat heavily across a hom-set
    sol = _solve_z_rows([list(r) for r in rows], len(rows), ncols, list(rhs))
    return None if sol is None else tuple(sol)


def _solve(mat, m, n, rhs):
    return _solve_cached(tuple(map(tuple, mat)), n, tuple(rhs))


def retraction(a, b, phi):
    """r with r∘phi = id for phi: ⊕Z/a -> ⊕Z/b, or None."""
    na, nb = len(a), len(b)
    r = []
    for k in range(na):
        ak = a[k]
        steps = [hom_step(ak, bj) for bj in b]
        mat = [[steps[j] * phi[j][i] for j in range(nb)] + [ak if t == i else 0 for t in range(na)]
               for i in range(na)]
        rhs = [1 if i == k else 0 for i in range(na)]
        sol = _solve(mat, na, nb + na, rhs)
        if sol is None:
            return None
        row = [steps[j] * sol[j] for j in range(nb)]
        r.append(reduce_vec(row, [ak] * nb))
    return r


def section(u, a, phi):
    """s with phi∘s = id for phi: ⊕Z/u -> ⊕Z/a, or None."""
    nu, na = len(u), len(a)
    cols = []
    for k in range(na):
        ak = a[k]
        steps = [hom_step(uj, ak) for uj in u]
        mat = [[phi[i][j] * steps[j] for j in range(nu)] + [a[i] if t == i else 0 for t in range(na)]
               for i in range(na)]
        rhs = [1 if i == k else 0 for i in range(na)]
        sol = _solve(mat, na, nu + na, rhs)
        if sol is None:
            return None
        cols.append(reduce_vec([steps[j] * sol[j] for j in range(nu)], u))
    return [[cols[k][j] for k in range(na)] for j in range(nu)]


def is_mono(a, b, phi):
    return len(kernel(a, b, phi)[0]) == 0


def is_epi(a, b, phi):
    # the cokernel Z^nb / (colspan phi + diag(b)) must vanish
    nb = len(b)
    rows = [[phi[jj][i] for jj in range(nb)] for i in range(len(a))]
    rows += [[b[jj] if k == jj else 0 for k in range(nb)] for jj in range(nb) if b[jj]]
    if not rows:
        return nb == 0
    d, _, _ = _snf_rows(transpose(rows, nb), nb, len(rows), track=False)
    return len(d) == nb and all(x == 1 for x in d)


def order(mods):
    if any(m == 0 for m in mods):
        return 0
    return prod(mods)


def elements(mods):
    """All elements of a finite diagonal group as an (N, k) array, lexicographic."""
    k = len(mods)
    n = prod(mods)
    idx = np.arange(n, dtype=np.int64)
    out = np.zeros((n, k), dtype=np.int64)
    for i in range(k - 1, -1, -1):
        out[:, i] = idx % mods[i]
        idx //= mods[i]
    return out


class HomSpace:
    """Hom(⊕Z/src, ⊕Z/dst) as a finite set indexed 0..size-1.

    Entries are ordered row-major and the first entry is the most
    significant digit, so index order equals ``itertools.product`` order
    over the allowed values of each entry.
    """

    def __init__(self, src, dst):
        self.src = tuple(src)
        self.dst = tuple(dst)
        na, nb = len(src), len(dst)
        self.counts = np.array([[hom_count(d, s) for s in src] for d in dst], dtype=np.int64).reshape(nb, na)
        if (self.counts == 0).any():
            raise InfiniteHom("Hom(Z, Z) component makes the hom-set infinite")
        self.steps = np.array([[hom_step(d, s) for s in src] for d in dst], dtype=np.int64).reshape(nb, na)
        self.size = int(prod(int(c) for c in self.counts.ravel()))
        flat = [int(c) for c in self.counts.ravel()]
        radix = [1] * len(flat)
        for t in range(len(flat) - 2, -1, -1):
            radix[t] = radix[t + 1] * flat[t + 1]
        # huge spaces are only ever budget-checked, never indexed
        dtype = np.int64 if self.size < 1 << 62 else object
        self.radix = np.array(radix, dtype=dtype).reshape(nb, na)
        self.dmods = np.array([d if d else 1 for d in dst], dtype=np.int64).reshape(nb, 1)
        self._dst_free = np.array([d == 0 for d in dst]).reshape(nb, 1)

    def check_budget(self, budget):
        if self.size > budget:
            raise TooLarge(f"Hom({self.src}, {self.dst})", self.size, budget)

    def decode(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        digits = (idx[:, None, None] // self.radix[None]) % self.counts[None]
        return digits * self.steps[None]

    def encode(self, phis):
        phis = np.asarray(phis, dtype=np.int64)
        red = np.where(self._dst_free[None], phis, phis % self.dmods[None])
        steps = np.where(self.steps == 0, 1, self.steps)
        digits = red // steps[None]
        return (digits * self.radix[None]).sum(axis=(1, 2))

    def all(self):
        return self.decode(np.arange(self.size, dtype=np.int64))

    def reduce(self, phis):
        return np.where(self._dst_free[None], phis, phis % self.dmods[None])


def batch_compose(g, f, dst):
    """g∘f for stacked core matrices, reduced modulo ``dst``."""
    out = np.matmul(g, f)
    mods = np.array([d if d else 1 for d in dst], dtype=np.int64).reshape(-1, 1)
    free = np.array([d == 0 for d in dst]).reshape(-1, 1)
    return np.where(free, out, out % mods)


def automorphisms(mods, want=6, seed=0, tries=400):
    """A few automorphisms of a finite diagonal group (deterministic sample).

    Used only to coarsen searches into orbits; the caller's correctness
    never depends on these generating the full automorphism group.
    """
    if not mods:
        return []
    space = HomSpace(mods, mods)
    elems = elements(mods)
    n = elems.shape[0]
    rng = np.random.default_rng(seed)
    out = []
    seen = set()
    cand = rng.integers(0, space.size, size=min(tries, max(space.size, 1)))
    for idx in cand:
        idx = int(idx)
        if idx in seen:
            continue
        seen.add(idx)
        phi = space.decode([idx])[0]
        imgs = (elems @ phi.T) % np.array(mods, dtype=np.int64)
        if np.unique(imgs, axis=0).shape[0] == n:
            out.append(phi)
            if len(out) >= want:
                break
    return out


def orbit_labels(space, left=(), right=()):
    """Connected components of Hom(src, dst) under f -> l∘f and f -> f∘r.

    Returns ``(labels, representatives)``; representatives are the least
    index in each class, in increasing order.
    """
    n = space.size
    if n == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    phis = space.decode(idx)
    src_e, dst_e = [], []
    for l in left:
        img = space.encode(batch_compose(l[None], phis, space.dst))
        src_e.append(idx)
        dst_e.append(img)
    for r in right:
        img = space.encode(batch_compose(phis, r[None], space.dst))
        src_e.append(idx)
        dst_e.append(img)
    if not src_e:
        return idx.copy(), idx.copy()
    s = np.concatenate(src_e)
    d = np.concatenate(dst_e)
    g = coo_matrix((np.ones(s.size, dtype=np.int8), (s, d)), shape=(n, n))
    _, labels = connected_components(g, directed=True, connection="weak")
    _, reps = np.unique(labels, return_index=True)
    return labels, np.sort(reps)


def has_inner_inverse(phi, candidates, a, b):
    """Exhaustive: some g in ``candidates`` with phi∘g∘phi = phi.

    ``phi`` is nb × na, candidates is (N, na, nb). Returns the least index
    of a witness or -1.
    """
    phi = np.asarray(phi, dtype=np.int64).reshape(len(b), len(a))
    if candidates.shape[0] == 0:
        return -1
    fg = batch_compose(phi[None], candidates, b)
    fgf = batch_compose(fg, phi[None], b)
    ok = (fgf == phi[None]).all(axis=(1, 2))
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else -1
