"""Concrete categories: vector spaces, finitely presented modules, finite sets.

Finitely presented modules over Z or Z/n are stored as the user gave them
(generators plus a relations matrix) and carry a cached Smith form of their
relations. All additive computations happen in the resulting diagonal
coordinates (see :mod:`regobj._diag`); user-facing matrices are mapped back
and are canonical, so morphism equality is a plain comparison.
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod

import numpy as np

from . import _diag
from .errors import (
    BadSpec, EmptyDomain, InfiniteHom, MixedVariant, NotEpi, NotFinite, NotMono,
    ShapeMismatch, WrongBase, WrongRing,
)
from .exact import ZZ, Ring, parse_ring
from .matops import Matrix, kernel_basis, rref, solve

DEFAULT_BUDGET = 10**6


# ---------------------------------------------------------------- objects


@dataclass(frozen=True)
class VectSpace:
    ring: Ring
    dim: int

    variant = "vect"

    def __post_init__(self):
        if not self.ring.is_field:
            raise BadSpec(f"vector spaces need a field, got {self.ring}")
        if self.dim < 0:
            raise BadSpec("negative dimension")

    @property
    def gens(self):
        return self.dim

    @property
    def is_finite(self):
        return self.ring.is_finite or self.dim == 0

    @property
    def order(self):
        return self.ring.modulus ** self.dim if self.ring.is_finite else (1 if self.dim == 0 else 0)

    def is_zero(self):
        return self.dim == 0

    def to_json(self):
        return {"variant": "vect", "ring": str(self.ring), "dim": self.dim}

    def __str__(self):
        return f"{self.ring}^{self.dim}"


@dataclass(frozen=True)
class FPModule:
    """Z^gens modulo the column span of ``relations`` (plus n·Z^gens over Z/n)."""

    base: Ring
    gens: int
    relations: Matrix = field(default=None)

    variant = "fpmod"

    def __post_init__(self):
        if self.base.kind not in ("Z", "Zn"):
            raise BadSpec(f"finitely presented modules live over Z or Z/n, got {self.base}")
        if self.gens < 0:
            raise BadSpec("negative generator count")
        rel = self.relations
        if rel is None:
            rel = Matrix.zeros(self.base, self.gens, 0)
            object.__setattr__(self, "relations", rel)
        if rel.ring != self.base:
            raise BadSpec(f"relations over {rel.ring}, module over {self.base}")
        if rel.rows != self.gens:
            raise BadSpec(f"relations must have {self.gens} rows, got {rel.rows}")

    @cached_property
    def _snf(self):
        g = self.gens
        a = [list(r) for r in self.relations.entries]
        n = self.base.modulus
        if n:
            for i in range(g):
                a[i] = a[i] + [n if k == i else 0 for k in range(g)]
        ncols = len(a[0]) if g else 0
        d, P, _ = _diag._snf_rows(a, g, ncols)
        full = list(d) + [0] * (g - len(d))
        core = [i for i in range(g) if full[i] != 1]
        pinv = _diag.inverse_unimodular(P) if g else []
        pc = [P[i] for i in core]
        pinvc = [[pinv[r][i] for i in core] for r in range(g)]
        return tuple(full[i] for i in core), pc, pinvc

    @property
    def moduli(self):
        """Orders of the cyclic summands in Smith form (0 = infinite cyclic)."""
        return self._snf[0]

    @property
    def invariant_factors(self):
        return [m for m in self.moduli if m]

    @property
    def free_rank(self):
        return sum(1 for m in self.moduli if m == 0)

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        """Number of elements, or 0 when infinite."""
        return _diag.order(self.moduli)

    def is_zero(self):
        return not self.moduli

    def to_core(self, x):
        pc = self._snf[1]
        return _diag.reduce_vec([sum(p * v for p, v in zip(row, x)) for row in pc], self.moduli)

    def from_core(self, y):
        pinvc = self._snf[2]
        x = [sum(p * v for p, v in zip(row, y)) for row in pinvc]
        n = self.base.modulus
        return [v % n for v in x] if n else x

    def to_json(self):
        return {"variant": "fpmod", "base": str(self.base), "gens": self.gens,
                "relations": self.relations.to_json()}

    def __str__(self):
        parts = [f"Z/{m}" if m else "Z" for m in self.moduli] or ["0"]
        return " + ".join(parts) + ("" if self.base == ZZ else f" over {self.base}")


@dataclass(frozen=True)
class FinSet:
    size: int

    variant = "finset"

    def __post_init__(self):
        if self.size < 0:
            raise BadSpec("negative set size")

    def to_json(self):
        return {"variant": "finset", "size": self.size}


def isomorphic(A, B):
    """Isomorphism test by invariants (dimension, or invariant factors plus free rank)."""
    if type(A) is not type(B):
        return False
    if isinstance(A, VectSpace):
        return A.ring == B.ring and A.dim == B.dim
    if isinstance(A, FinSet):
        return A.size == B.size
    return A.base == B.base and A.moduli == B.moduli


def module(moduli, base=ZZ):
    """Diagonal presentation ⊕ Z/m (m = 0 for a free summand)."""
    base = parse_ring(base)
    moduli = list(moduli)
    n = base.modulus
    if n:
        for m in moduli:
            if m == 0 or n % m:
                raise BadSpec(f"Z/{m} is not a Z/{n}-module")
    rel = Matrix.diag(base, moduli, len(moduli), len(moduli))
    return FPModule(base, len(moduli), rel)


def cyclic(m, base=ZZ):
    return module([m], base)


def zero_object(like):
    if isinstance(like, VectSpace):
        return VectSpace(like.ring, 0)
    if isinstance(like, FinSet):
        return FinSet(0)
    return FPModule(like.base, 0)


def make_object(spec):
    """Build an object from its JSON form (or return it unchanged)."""
    if isinstance(spec, (VectSpace, FPModule, FinSet)):
        return spec
    if not isinstance(spec, dict):
        raise BadSpec(f"object spec must be a mapping, got {type(spec).__name__}")
    variant = spec.get("variant")
    try:
        if variant == "vect":
            return VectSpace(parse_ring(spec["ring"]), int(spec["dim"]))
        if variant == "finset":
            return FinSet(int(spec["size"]))
        if variant == "fpmod":
            base = parse_ring(spec["base"])
            gens = int(spec["gens"])
            rel = spec.get("relations")
            if rel is None:
                rel = Matrix.zeros(base, gens, 0)
            elif isinstance(rel, Matrix):
                pass
            elif isinstance(rel, dict):
                rel = Matrix.from_json(rel)
            else:
                rel = Matrix(base, rel, gens, len(rel[0]) if rel else 0)
            if rel.ring != base:
                if rel.ring == ZZ and base.modulus:
                    rel = rel.change_ring(base)
                else:
                    raise BadSpec(f"relations over {rel.ring}, base {base}")
            return FPModule(base, gens, rel)
    except KeyError as exc:
        raise BadSpec(f"missing field {exc} in object spec") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, BadSpec):
            raise
        raise BadSpec(str(exc)) from None
    raise BadSpec(f"unknown variant {variant!r}")


# -------------------------------------------------------------- morphisms


class Morphism:
    """Additive morphism, stored canonically.

    For modules the canonical data is the matrix in Smith coordinates
    (``core``); ``matrix`` is the canonical representative in the user's
    generators. For vector spaces both coincide.
    """

    __slots__ = ("domain", "codomain", "_core", "_matrix")

    def __init__(self, domain, codomain, matrix):
        domain, codomain = make_object(domain), make_object(codomain)
        _check_additive_pair(domain, codomain)
        ring = _ring_of(domain)
        if not isinstance(matrix, Matrix):
            matrix = Matrix(ring, matrix, codomain.gens, domain.gens)
        if matrix.ring != ring:
            if matrix.ring == ZZ and ring.modulus:
                matrix = matrix.change_ring(ring)
            else:
                raise WrongRing(f"matrix over {matrix.ring}, objects over {ring}")
        if matrix.shape != (codomain.gens, domain.gens):
            raise ShapeMismatch(f"matrix shape {matrix.shape}, expected {(codomain.gens, domain.gens)}")
        self.domain = domain
        self.codomain = codomain
        if isinstance(domain, VectSpace):
            self._core = matrix.entries
            self._matrix = matrix
            return
        f = [list(r) for r in matrix.lift().entries] if ring.modulus else [list(r) for r in matrix.entries]
        pc_m = codomain._snf[1]
        b = codomain.moduli
        # well-definedness: relations of the domain must land in those of the codomain
        rel = domain.relations.lift() if ring.modulus else domain.relations
        if rel.cols:
            img = _diag.reduce_mat(_diag.matmul(_diag.matmul(pc_m, f), [list(r) for r in rel.entries]), b)
            if not _diag.is_zero(img):
                raise BadSpec("matrix does not respect the domain relations")
        pinvc_u = domain._snf[2]
        core = _diag.reduce_mat(_diag.matmul(_diag.matmul(pc_m, f), pinvc_u), b) if pc_m and pinvc_u else \
            [[0] * len(domain.moduli) for _ in b]
        self._core = tuple(map(tuple, core))
        self._matrix = None

    @classmethod
    def _from_core(cls, domain, codomain, core):
        m = cls.__new__(cls)
        m.domain = domain
        m.codomain = codomain
        if isinstance(domain, VectSpace):
            mat = core if isinstance(core, Matrix) else Matrix(domain.ring, core, codomain.dim, domain.dim)
            m._core = mat.entries
            m._matrix = mat
        else:
            m._core = tuple(tuple(r) for r in core)
            m._matrix = None
        return m

    @property
    def core(self):
        return self._core

    @property
    def matrix(self):
        if self._matrix is None:
            dom, cod = self.domain, self.codomain
            pc_u = dom._snf[1]
            phi = [list(r) for r in self._core]
            cols = _diag.reduce_mat(_diag.matmul(phi, pc_u), cod.moduli) if phi and pc_u else \
                [[0] * dom.gens for _ in cod.moduli]
            pinvc_m = cod._snf[2]
            if pinvc_m and pinvc_m[0]:
                f = _diag.matmul(pinvc_m, cols)
            else:
                f = [[0] * dom.gens for _ in range(cod.gens)]
            n = cod.base.modulus
            if n:
                f = [[v % n for v in r] for r in f]
            self._matrix = Matrix(cod.base, f, cod.gens, dom.gens)
        return self._matrix

    @property
    def ring(self):
        return _ring_of(self.domain)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self._core == other._core

    def __hash__(self):
        return hash((self.domain, self.codomain, self._core))

    def __repr__(self):
        return f"Morphism({self.domain} -> {self.codomain}, {self.matrix.tolist()})"

    def __matmul__(self, other):
        return compose(self, other)

    def __add__(self, other):
        _same_hom(self, other)
        if isinstance(self.domain, VectSpace):
            return Morphism._from_core(self.domain, self.codomain, self.matrix + other.matrix)
        s = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self._core, other._core)]
        return Morphism._from_core(self.domain, self.codomain, _diag.reduce_mat(s, self.codomain.moduli))

    def __neg__(self):
        if isinstance(self.domain, VectSpace):
            return Morphism._from_core(self.domain, self.codomain, -self.matrix)
        s = [[-x for x in r] for r in self._core]
        return Morphism._from_core(self.domain, self.codomain, _diag.reduce_mat(s, self.codomain.moduli))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(self.domain, VectSpace):
            return Morphism._from_core(self.domain, self.codomain, self.matrix.scale(c))
        s = [[c * x for x in r] for r in self._core]
        return Morphism._from_core(self.domain, self.codomain, _diag.reduce_mat(s, self.codomain.moduli))

    def is_zero(self):
        return all(not x for r in self._core for x in r)

    def to_json(self):
        return {"domain": self.domain.to_json(), "codomain": self.codomain.to_json(),
                "matrix": self.matrix.to_json()}


def _same_hom(f, g):
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ShapeMismatch("morphisms are not in the same hom-set")


def _ring_of(obj):
    if isinstance(obj, VectSpace):
        return obj.ring
    if isinstance(obj, FPModule):
        return obj.base
    raise MixedVariant("finite sets have no additive structure")


def _check_additive_pair(A, B):
    if isinstance(A, FinSet) or isinstance(B, FinSet):
        raise MixedVariant("additive operation on a finite set")
    if type(A) is not type(B) or _ring_of(A) != _ring_of(B):
        raise MixedVariant(f"objects {A} and {B} live in different categories")


@dataclass(frozen=True)
class SetMap:
    """A function between finite sets {0..n-1} -> {0..m-1}."""

    domain: FinSet
    codomain: FinSet
    table: tuple

    def __post_init__(self):
        t = tuple(int(v) for v in self.table)
        if len(t) != self.domain.size or any(not 0 <= v < self.codomain.size for v in t):
            raise BadSpec("map table does not define a function")
        object.__setattr__(self, "table", t)

    def __call__(self, x):
        return self.table[x]

    def __matmul__(self, other):
        return compose(self, other)

    def to_json(self):
        return {"domain": self.domain.to_json(), "codomain": self.codomain.to_json(), "map": list(self.table)}


def make_morphism(spec):
    if isinstance(spec, (Morphism, SetMap)):
        return spec
    try:
        dom = make_object(spec["domain"])
        cod = make_object(spec["codomain"])
        if isinstance(dom, FinSet):
            return SetMap(dom, cod, tuple(spec["map"]))
        mat = spec["matrix"]
        if isinstance(mat, dict):
            mat = Matrix.from_json(mat)
        return Morphism(dom, cod, mat)
    except KeyError as exc:
        raise BadSpec(f"missing field {exc} in morphism spec") from None
    except TypeError as exc:
        raise BadSpec(str(exc)) from None


def identity(obj):
    if isinstance(obj, FinSet):
        return SetMap(obj, obj, tuple(range(obj.size)))
    if isinstance(obj, VectSpace):
        return Morphism._from_core(obj, obj, Matrix.identity(obj.ring, obj.dim))
    n = len(obj.moduli)
    return Morphism._from_core(obj, obj, _diag.reduce_mat(_diag._ident(n), obj.moduli))


def zero_morphism(A, B):
    if isinstance(A, VectSpace):
        return Morphism._from_core(A, B, Matrix.zeros(A.ring, B.dim, A.dim))
    return Morphism._from_core(A, B, _diag.zero_mat(len(B.moduli), len(A.moduli)))


def compose(g, f):
    """g∘f."""
    if isinstance(f, SetMap) or isinstance(g, SetMap):
        if not (isinstance(f, SetMap) and isinstance(g, SetMap)):
            raise MixedVariant("cannot compose a set map with an additive morphism")
        if f.codomain != g.domain:
            raise ShapeMismatch("codomain of f is not the domain of g")
        return SetMap(f.domain, g.codomain, tuple(g.table[x] for x in f.table))
    if f.codomain != g.domain:
        raise ShapeMismatch(f"cannot compose: {f.codomain} is not {g.domain}")
    if isinstance(f.domain, VectSpace):
        return Morphism._from_core(f.domain, g.codomain, g.matrix @ f.matrix)
    core = _diag.compose([list(r) for r in g._core], [list(r) for r in f._core],
                         g.codomain.moduli, len(f.domain.moduli))
    return Morphism._from_core(f.domain, g.codomain, core)


# ------------------------------------------------ kernels, images, sums


def _diag_object(base, moduli):
    return module(moduli, base) if moduli else FPModule(base, 0)


def _cols_matrix(ring, cols, rows):
    return Matrix.from_columns(ring, cols, rows) if cols else Matrix.zeros(ring, rows, 0)


def _require_additive(f):
    if not isinstance(f, Morphism):
        raise MixedVariant("additive operation on a finite-set map")


def kernel(f):
    """``(K, i)`` with ``i: K -> domain(f)`` the kernel inclusion."""
    _require_additive(f)
    U, M = f.domain, f.codomain
    if isinstance(U, VectSpace):
        kb = kernel_basis(f.matrix)
        K = VectSpace(U.ring, kb.cols)
        return K, Morphism._from_core(K, U, kb)
    mods, incl = _diag.kernel(U.moduli, M.moduli, [list(r) for r in f._core])
    K = _diag_object(U.base, mods)
    return K, Morphism._from_core(K, U, incl)


class SubobjectSplit:
    """Factorization f = j∘f′ through the image, plus the kernel inclusion."""

    __slots__ = ("kernel_object", "kernel_inclusion", "image_object", "image_inclusion", "corestriction")

    def __init__(self, kernel_object, kernel_inclusion, image_object, image_inclusion, corestriction):
        self.kernel_object = kernel_object
        self.kernel_inclusion = kernel_inclusion
        self.image_object = image_object
        self.image_inclusion = image_inclusion
        self.corestriction = corestriction

    @property
    def j(self):
        return self.image_inclusion

    @property
    def fprime(self):
        return self.corestriction


def image_parts(f):
    """``(Im, j, f′)`` without computing the kernel."""
    _require_additive(f)
    U, M = f.domain, f.codomain
    if isinstance(U, VectSpace):
        R, pivots, _ = rref(f.matrix)
        ring = U.ring
        Im = VectSpace(ring, len(pivots))
        j = f.matrix.submatrix(range(M.dim), pivots)
        fp = R.submatrix(range(len(pivots)), range(U.dim))
        return Im, Morphism._from_core(Im, M, j), Morphism._from_core(U, Im, fp)
    mods, jm, fp = _diag.image(U.moduli, M.moduli, [list(r) for r in f._core])
    Im = _diag_object(U.base, mods)
    return Im, Morphism._from_core(Im, M, jm), Morphism._from_core(U, Im, fp)


def image(f):
    Im, j, fp = image_parts(f)
    K, i = kernel(f)
    return SubobjectSplit(K, i, Im, j, fp)


def cokernel(f):
    """``(C, p)`` with ``p: codomain(f) -> C`` the quotient map."""
    _require_additive(f)
    U, M = f.domain, f.codomain
    if isinstance(U, VectSpace):
        ring = U.ring
        # complement the column space: rows of T below the rank kill im f
        R, pivots, T = rref(f.matrix)
        r = len(pivots)
        C = VectSpace(ring, M.dim - r)
        p = T.submatrix(range(r, M.dim), range(M.dim))
        return C, Morphism._from_core(M, C, p)
    b = M.moduli
    nb = len(b)
    phi = f._core
    gens = [[phi[j][i] for j in range(nb)] for i in range(len(U.moduli))]
    gens += [[b[j] if k == j else 0 for k in range(nb)] for j in range(nb) if b[j]]
    if nb == 0:
        C = FPModule(M.base, 0)
        return C, Morphism._from_core(M, C, [])
    mat = _diag.transpose(gens, nb) if gens else [[] for _ in range(nb)]
    d, P, _ = _diag._snf_rows(mat, nb, len(gens))
    full = list(d) + [0] * (nb - len(d))
    core = [i for i in range(nb) if full[i] != 1]
    mods = tuple(full[i] for i in core)
    C = _diag_object(M.base, mods)
    p = _diag.reduce_mat([P[i] for i in core], mods)
    return C, Morphism._from_core(M, C, p)


def direct_sum(objects):
    """``(S, injections, projections)`` for a list of objects of one category."""
    objects = [make_object(o) for o in objects]
    if not objects:
        raise BadSpec("direct sum of an empty list needs a category; use zero_object")
    first = objects[0]
    for o in objects[1:]:
        _check_additive_pair(first, o)
    _ring_of(first)
    if isinstance(first, VectSpace):
        S = VectSpace(first.ring, sum(o.dim for o in objects))
    else:
        base = first.base
        gens = sum(o.gens for o in objects)
        rels = [o.relations for o in objects]
        ncols = sum(r.cols for r in rels)
        e = [[0] * ncols for _ in range(gens)]
        i0 = j0 = 0
        for r in rels:
            for i in range(r.rows):
                for j in range(r.cols):
                    e[i0 + i][j0 + j] = r[i, j]
            i0 += r.rows
            j0 += r.cols
        S = FPModule(base, gens, Matrix(base, e, gens, ncols))
    ring = _ring_of(first)
    total = S.gens
    inj, proj = [], []
    off = 0
    for o in objects:
        g = o.gens
        im = [[1 if r == off + c else 0 for c in range(g)] for r in range(total)]
        pm = [[1 if c == off + r else 0 for c in range(total)] for r in range(g)]
        inj.append(Morphism(o, S, Matrix(ring, im, total, g)))
        proj.append(Morphism(S, o, Matrix(ring, pm, g, total)))
        off += g
    return S, inj, proj


def is_mono(f):
    if isinstance(f, SetMap):
        return len(set(f.table)) == len(f.table)
    if isinstance(f.domain, VectSpace):
        return len(rref(f.matrix)[1]) == f.domain.dim
    return _diag.is_mono(f.domain.moduli, f.codomain.moduli, [list(r) for r in f._core])


def is_epi(f):
    if isinstance(f, SetMap):
        return len(set(f.table)) == f.codomain.size
    if isinstance(f.domain, VectSpace):
        return len(rref(f.matrix)[1]) == f.codomain.dim
    return _diag.is_epi(f.domain.moduli, f.codomain.moduli, [list(r) for r in f._core])


def is_iso(f):
    return is_mono(f) and is_epi(f)


# ---------------------------------------------------------- splittings


def find_retraction(i, method="solve"):
    """r with r∘i = id for a monomorphism i, or None when im(i) is not a summand.

    ``method="search"`` scans Hom(codomain, domain) instead of solving the
    linear system; it needs a finite hom-set.
    """
    _require_additive(i)
    if not is_mono(i):
        raise NotMono("find_retraction needs a monomorphism")
    A, M = i.domain, i.codomain
    if method == "search":
        return _search_one_sided(i, left=True)
    if isinstance(A, VectSpace):
        # r·i = I  <=>  i^T r^T = I
        it = i.matrix.T
        cols = [solve(it, [1 if k == c else 0 for k in range(A.dim)]).column(0) for c in range(A.dim)]
        r = Matrix.from_columns(A.ring, cols, M.dim).T if cols else Matrix.zeros(A.ring, A.dim, M.dim)
        return Morphism._from_core(M, A, r)
    r = _diag.retraction(A.moduli, M.moduli, [list(x) for x in i._core])
    if r is None:
        return None
    return Morphism._from_core(M, A, r)


def find_section(p, method="solve"):
    """s with p∘s = id for an epimorphism p, or None when ker(p) is not a summand."""
    _require_additive(p)
    if not is_epi(p):
        raise NotEpi("find_section needs an epimorphism")
    U, A = p.domain, p.codomain
    if method == "search":
        return _search_one_sided(p, left=False)
    if isinstance(U, VectSpace):
        cols = [solve(p.matrix, [1 if k == c else 0 for k in range(A.dim)]).column(0) for c in range(A.dim)]
        s = Matrix.from_columns(U.ring, cols, U.dim) if cols else Matrix.zeros(U.ring, U.dim, 0)
        return Morphism._from_core(A, U, s)
    s = _diag.section(U.moduli, A.moduli, [list(x) for x in p._core])
    if s is None:
        return None
    return Morphism._from_core(A, U, s)


def _search_one_sided(f, left):
    ident = identity(f.domain if left else f.codomain)
    for g in hom_enumerate(f.codomain, f.domain):
        if (compose(g, f) if left else compose(f, g)) == ident:
            return g
    return None


# --------------------------------------------------------- enumeration


def hom_space(U, M):
    """The :class:`regobj._diag.HomSpace` behind Hom(U, M)."""
    _check_additive_pair(U, M)
    if isinstance(U, VectSpace):
        if not U.ring.is_finite and U.dim and M.dim:
            raise InfiniteHom(f"Hom({U}, {M}) over Q is infinite")
        p = U.ring.modulus or 2
        return _diag.HomSpace((p,) * U.dim, (p,) * M.dim)
    if U.base != M.base:
        raise MixedVariant("modules over different bases")
    return _diag.HomSpace(U.moduli, M.moduli)


def hom_size(U, M):
    return hom_space(U, M).size


def hom_enumerate(U, M, budget=DEFAULT_BUDGET):
    """All morphisms U -> M in a fixed order; raises TooLarge or InfiniteHom."""
    U, M = make_object(U), make_object(M)
    space = hom_space(U, M)
    space.check_budget(budget)
    return [Morphism._from_core(U, M, phi.tolist()) for phi in space.all()]


def hom_sample(U, M, n, seed=0):
    """``n`` morphisms drawn uniformly (with replacement) from Hom(U, M)."""
    space = hom_space(U, M)
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, space.size, size=n)
    return [Morphism._from_core(U, M, phi.tolist()) for phi in space.decode(idx)]


def morphisms_from_core_array(U, M, arr):
    return [Morphism._from_core(U, M, phi.tolist()) for phi in arr]


def elements(M):
    """Elements of a finite object as core coordinate tuples (lexicographic)."""
    if isinstance(M, VectSpace):
        if not M.ring.is_finite:
            raise NotFinite(f"{M} is infinite")
        return [tuple(r) for r in _diag.elements((M.ring.modulus,) * M.dim).tolist()]
    if not M.is_finite:
        raise NotFinite(f"{M} is infinite")
    return [tuple(r) for r in _diag.elements(M.moduli).tolist()]


def element_morphism(M, y):
    """The morphism R -> M sending 1 to the element with core coordinates ``y``."""
    if isinstance(M, VectSpace):
        R = VectSpace(M.ring, 1)
        return Morphism._from_core(R, M, Matrix(M.ring, [[v] for v in y], M.dim, 1))
    n = M.base.modulus
    R = FPModule(M.base, 1) if not n else module([n], M.base)
    return Morphism._from_core(R, M, [[v] for v in y])


def subobject_generated(M, gens):
    """``(N, inclusion)`` for the submodule generated by core vectors ``gens``."""
    if isinstance(M, VectSpace):
        ring = M.ring
        N0 = VectSpace(ring, len(gens))
        f = Morphism._from_core(N0, M, Matrix.from_columns(ring, gens, M.dim) if gens else Matrix.zeros(ring, M.dim, 0))
        Im, j, _ = image_parts(f)
        return Im, j
    gens = [list(g) for g in gens if any(g)]
    mods = tuple(_element_order(M.moduli, g) for g in gens)
    D = _diag_object(M.base, mods)
    f = Morphism._from_core(D, M, [[g[r] for g in gens] for r in range(len(M.moduli))])
    Im, j, _ = image_parts(f)
    return Im, j


def _element_order(mods, y):
    o = 1
    for m, v in zip(mods, y):
        if m == 0:
            if v:
                return 0
            continue
        k = m // gcd(m, v)
        o = o * k // gcd(o, k)
    return o


def subgroups(M):
    """All subobjects of a finite module as frozensets of core tuples."""
    els = elements(M)
    mods = M.moduli if isinstance(M, FPModule) else (M.ring.modulus,) * M.dim
    zero = tuple(0 for _ in mods)

    def add(x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, mods))

    def join(H, x):
        out = set(H)
        frontier = list(H)
        while frontier:
            nxt = []
            for h in frontier:
                s = add(h, x)
                if s not in out:
                    out.add(s)
                    nxt.append(s)
            frontier = nxt
        return frozenset(out)

    seen = {frozenset([zero])}
    queue = [frozenset([zero])]
    while queue:
        H = queue.pop()
        for x in els:
            if x not in H:
                K = join(H, x)
                if K not in seen:
                    seen.add(K)
                    queue.append(K)
    return sorted(seen, key=lambda H: (len(H), sorted(H)))


def subobject_of(M, H):
    """``(N, inclusion)`` realizing the element set H ⊆ M as a subobject."""
    gens = []
    cur = {tuple(0 for _ in next(iter(H)))}
    mods = M.moduli if isinstance(M, FPModule) else (M.ring.modulus,) * M.dim
    for x in sorted(H):
        if x not in cur:
            gens.append(list(x))
            cur = set(_span(cur, x, mods))
    return subobject_generated(M, gens)


def _span(H, x, mods):
    out = set(H)
    frontier = list(H)
    while frontier:
        nxt = []
        for h in frontier:
            s = tuple((a + b) % m for a, b, m in zip(h, x, mods))
            if s not in out:
                out.add(s)
                nxt.append(s)
        frontier = nxt
    return out


def element_set(j):
    """Image of a morphism from a finite object, as a set of core tuples."""
    return frozenset(tuple(v) for v in _apply_all(j))


def _apply_all(f):
    dom = f.domain
    mods = dom.moduli if isinstance(dom, FPModule) else (dom.ring.modulus,) * dom.dim
    cmods = f.codomain.moduli if isinstance(dom, FPModule) else (dom.ring.modulus,) * f.codomain.dim
    els = _diag.elements(mods)
    phi = np.array(f._core, dtype=np.int64).reshape(len(cmods), len(mods))
    out = els @ phi.T
    m = np.array([c if c else 1 for c in cmods], dtype=np.int64)
    return (out % m).tolist() if len(cmods) else [[] for _ in range(els.shape[0])]


# ------------------------------------------------ module-level analysis


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def primary_parts(m):
    """Prime-power factors of m, e.g. 12 -> [4, 3]."""
    return [p ** k for p, k in _prime_factors(m)]


def is_projective(M):
    """Over Z/n: M is a summand of a free module iff each p-part is free."""
    M = make_object(M)
    if not isinstance(M, FPModule) or not M.base.modulus:
        raise WrongBase("is_projective is defined for modules over Z/n")
    n = M.base.modulus
    for p, k in _prime_factors(n):
        pk = p ** k
        for d in M.invariant_factors:
            part = 1
            while d % p == 0:
                d //= p
                part *= p
            if part != 1 and part != pk:
                return False
    return True


def radical_and_socle(M):
    """Inclusions of J(M) (intersection of maximal subobjects) and s(M) (socle).

    For a finite abelian group with r the product of the primes dividing
    its exponent: J(M) = rM and s(M) = {x : rx = 0}.
    """
    M = make_object(M)
    if isinstance(M, VectSpace):
        zero = zero_object(M)
        return zero_morphism(zero, M), identity(M)
    if not M.is_finite:
        raise NotFinite("radical_and_socle needs a finite module")
    r = prod(p for p, _ in _prime_factors(M.invariant_factors[-1])) if M.moduli else 1
    mult = identity(M).scale(r)
    _, jr, _ = image_parts(mult)
    _, soc = kernel(mult)
    return jr, soc


# ----------------------------------------------------------- finite sets


def geninv_function(f):
    """A generalized inverse of a map of finite sets.

    Picks the least preimage of each point of the image and the least
    element of the domain elsewhere, then reflexivizes g -> g∘f∘g.
    """
    if not isinstance(f, SetMap):
        raise MixedVariant("geninv_function takes a map of finite sets")
    U, M = f.domain, f.codomain
    if U.size == 0:
        if M.size == 0:
            return SetMap(M, U, ())
        raise EmptyDomain("no map from a nonempty set to the empty set")
    first = {}
    for u, m in enumerate(f.table):
        first.setdefault(m, u)
    g = SetMap(M, U, tuple(first.get(m, 0) for m in range(M.size)))
    return compose(compose(g, f), g)
