"""Finite rings by multiplication table, and brute-force ring analyzers.

Element 0 is the zero and element 1 the identity (they coincide only in
the trivial ring). Small rings keep explicit ``order × order`` tables;
rings built from coordinates (algebras over F_p, endomorphism rings) may
stay implicit above ``TABLE_BUDGET`` and are then multiplied on demand.
"""

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import BadSpec, TooLarge

TABLE_BUDGET = 2048
FULL_CHECK_ORDER = 256
SPOT_CHECKS = 2000


class _Codec:
    """Indices <-> digit vectors in ⊕ Z/counts, with 1 swapped to the unit."""

    def __init__(self, counts, mul_digits, unit_digits):
        self.counts = np.asarray(counts, dtype=np.int64)
        k = self.counts.size
        radix = np.ones(k, dtype=np.int64)
        for t in range(k - 2, -1, -1):
            radix[t] = radix[t + 1] * self.counts[t + 1]
        self.radix = radix
        self.size = int(np.prod(self.counts)) if k else 1
        self.mul_digits = mul_digits
        raw_unit = int((np.asarray(unit_digits, dtype=np.int64) * radix).sum()) if k else 0
        self.raw_unit = raw_unit
        # public index i is raw index perm(i): swap 1 <-> raw unit
        self._swap = raw_unit if self.size > 1 else 0

    def _perm(self, idx):
        if self._swap in (0, 1):
            return idx
        out = idx.copy()
        out[idx == 1] = self._swap
        out[idx == self._swap] = 1
        return out

    def decode(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        if idx.size == self.size and self.size > 64 and (idx == np.arange(self.size)).all():
            return self.all_digits
        raw = self._perm(idx)
        return (raw[:, None] // self.radix[None]) % self.counts[None]

    @property
    def all_digits(self):
        if not hasattr(self, "_all"):
            raw = self._perm(np.arange(self.size, dtype=np.int64))
            self._all = (raw[:, None] // self.radix[None]) % self.counts[None]
        return self._all

    def mul_by(self, u, xs, left=True):
        """u·x (or x·u) for one element u and many x.

        Multiplication by a fixed element is additive, hence an integer
        matrix on digit vectors: its columns are the products with the
        coordinate generators.
        """
        k = self.counts.size
        if k == 0:
            return np.zeros(np.asarray(xs).shape, dtype=np.int64)
        eye = np.eye(k, dtype=np.int64)
        us = np.repeat(self.decode(np.array([u])), k, axis=0)
        cols = self.mul_digits(us, eye) if left else self.mul_digits(eye, us)
        L = cols % self.counts[None]             # row t = digits of u·g_t
        X = self.decode(xs).astype(np.float64)
        out = np.rint(X @ L.astype(np.float64)).astype(np.int64)
        return self.encode(out)

    def encode(self, digits):
        digits = np.asarray(digits, dtype=np.int64) % self.counts[None]
        raw = (digits * self.radix[None]).sum(axis=1)
        return self._perm(raw)

    def add(self, a, b):
        return self.encode(self.decode(a) + self.decode(b))

    def neg(self, a):
        return self.encode(-self.decode(a))

    def mul(self, a, b):
        return self.encode(self.mul_digits(self.decode(a), self.decode(b)))


class FiniteRing:
    """A finite ring on elements 0..order-1."""

    def __init__(self, add, mul, labels=None, check=True):
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        n = add.shape[0] if add.ndim == 2 else 0
        if n == 0 or add.shape != (n, n) or mul.shape != (n, n):
            raise BadSpec("ring tables must be square and of equal size")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise BadSpec("table entries out of range")
        self.order = n
        self._add = add
        self._mul = mul
        self._codec = None
        self._labels = labels
        self._gens = None
        if check:
            self.validate()

    @classmethod
    def from_codec(cls, counts, mul_digits, unit_digits, labels=None, check=True):
        """Ring on ⊕ Z/counts with coordinate-wise addition.

        ``mul_digits`` maps two (N, k) digit arrays to their (N, k) product.
        The additive generators are the coordinate unit vectors.
        """
        codec = _Codec(counts, mul_digits, unit_digits)
        self = cls.__new__(cls)
        self.order = codec.size
        self._codec = codec
        self._labels = labels
        k = codec.counts.size
        eye = np.eye(k, dtype=np.int64)
        self._gens = codec.encode(eye) if k else np.zeros(0, dtype=np.int64)
        self._add = self._mul = None
        if self.order <= TABLE_BUDGET:
            self._materialize()
        if check:
            self.validate()
        return self

    def _materialize(self):
        n = self.order
        a = np.repeat(np.arange(n, dtype=np.int64), n)
        b = np.tile(np.arange(n, dtype=np.int64), n)
        self._add = self._codec.add(a, b).reshape(n, n)
        self._mul = self._codec.mul(a, b).reshape(n, n)

    @property
    def has_tables(self):
        return self._mul is not None

    @property
    def add_table(self):
        self._need_tables("add_table")
        return self._add

    @property
    def mul_table(self):
        self._need_tables("mul_table")
        return self._mul

    def _need_tables(self, what):
        if self._mul is None:
            raise TooLarge(f"{what} of a ring of order {self.order}", self.order, TABLE_BUDGET)

    @property
    def additive_generators(self):
        """Indices generating the additive group (all elements if unknown)."""
        if self._gens is None:
            return np.arange(self.order, dtype=np.int64)
        return self._gens

    def mul_vec(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._mul is not None:
            return self._mul[a, b]
        if a.size == 1 and b.size > 1:
            return self._codec.mul_by(int(a.ravel()[0]), b.ravel(), left=True).reshape(b.shape)
        if b.size == 1 and a.size > 1:
            return self._codec.mul_by(int(b.ravel()[0]), a.ravel(), left=False).reshape(a.shape)
        a, b = np.broadcast_arrays(a, b)
        return self._codec.mul(a.ravel(), b.ravel()).reshape(a.shape)

    def add_vec(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._add is not None:
            return self._add[a, b]
        a, b = np.broadcast_arrays(a, b)
        return self._codec.add(a.ravel(), b.ravel()).reshape(a.shape)

    def mul(self, a, b):
        return int(self.mul_vec(np.array([a]), np.array([b]))[0])

    def add(self, a, b):
        return int(self.add_vec(np.array([a]), np.array([b]))[0])

    @property
    def neg(self):
        if not hasattr(self, "_neg"):
            if self._add is not None:
                self._neg = np.argmax(self._add == 0, axis=1)
            else:
                self._neg = self._codec.neg(np.arange(self.order, dtype=np.int64))
        return self._neg

    def label(self, i):
        if self._labels is None:
            return i
        if callable(self._labels):
            return self._labels(i)
        return self._labels[i]

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    # ---------------------------------------------------------- checks

    def validate(self, rng=None):
        """Check the ring axioms: exhaustively up to order 256, sampled above."""
        n = self.order
        one = 1 if n > 1 else 0
        x = np.arange(n, dtype=np.int64)
        if (self.add_vec(0, x) != x).any():
            raise BadSpec("0 is not an additive identity")
        if (self.mul_vec(one, x) != x).any() or (self.mul_vec(x, one) != x).any():
            raise BadSpec("1 is not a two-sided identity")
        if (self.add_vec(x, self.neg) != 0).any():
            raise BadSpec("missing additive inverses")
        if n <= FULL_CHECK_ORDER and self._mul is not None:
            A, M = self._add, self._mul
            if (A != A.T).any():
                raise BadSpec("addition is not commutative")
            if not _assoc_ok(A):
                raise BadSpec("addition is not associative")
            if not _assoc_ok(M):
                raise BadSpec("multiplication is not associative")
            if not _distrib_ok(A, M):
                raise BadSpec("multiplication does not distribute over addition")
            return
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, SPOT_CHECKS))
        if (self.add_vec(a, b) != self.add_vec(b, a)).any():
            raise BadSpec("addition is not commutative")
        if (self.add_vec(self.add_vec(a, b), c) != self.add_vec(a, self.add_vec(b, c))).any():
            raise BadSpec("addition is not associative")
        if (self.mul_vec(self.mul_vec(a, b), c) != self.mul_vec(a, self.mul_vec(b, c))).any():
            raise BadSpec("multiplication is not associative")
        if (self.mul_vec(a, self.add_vec(b, c)) != self.add_vec(self.mul_vec(a, b), self.mul_vec(a, c))).any():
            raise BadSpec("left distributivity fails")
        if (self.mul_vec(self.add_vec(a, b), c) != self.add_vec(self.mul_vec(a, c), self.mul_vec(b, c))).any():
            raise BadSpec("right distributivity fails")

    # --------------------------------------------------------- JSON

    def to_json(self):
        out = {"order": self.order, "add": self.add_table.tolist(), "mul": self.mul_table.tolist()}
        if self._labels is not None:
            out["labels"] = [self.label(i) for i in range(self.order)]
        return out

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj["order"])
            add, mul = obj["add"], obj["mul"]
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"bad ring JSON: {exc}") from None
        ring = cls(add, mul, obj.get("labels"))
        if ring.order != n:
            raise BadSpec("order does not match the tables")
        return ring

    def __repr__(self):
        return f"FiniteRing(order={self.order})"


def _assoc_ok(T, chunk=32):
    """(ab)c == a(bc) for all triples, in slices over a."""
    for lo in range(0, T.shape[0], chunk):
        Ta = T[lo:lo + chunk]
        # T[Ta][i, b, c] = (a_i b) c ;  Ta[:, T][i, b, c] = a_i (b c)
        if (T[Ta] != Ta[:, T]).any():
            return False
    return True


def _distrib_ok(A, M, chunk=32):
    """a(b+c) = ab+ac and (a+b)c = ac+bc for all triples."""
    for lo in range(0, A.shape[0], chunk):
        Ma = M[lo:lo + chunk]
        if (Ma[:, A] != A[Ma[:, :, None], Ma[:, None, :]]).any():
            return False
        Aa = A[lo:lo + chunk]
        if (M[Aa] != A[Ma[:, None, :], M[None, :, :]]).any():
            return False
    return True


def from_elements(elements, add, mul, zero, one, labels=None):
    """Tabulate a ring given hashable elements and Python operations."""
    elements = list(elements)
    elements.remove(zero)
    if one != zero:
        elements.remove(one)
        elements = [zero, one] + elements
    else:
        elements = [zero] + elements
    index = {e: i for i, e in enumerate(elements)}
    A = [[index[add(x, y)] for y in elements] for x in elements]
    M = [[index[mul(x, y)] for y in elements] for x in elements]
    return FiniteRing(A, M, labels if labels is not None else elements)


def zmod_ring(n):
    """Z/n as a FiniteRing (element i is the residue i)."""
    x = np.arange(n)
    return FiniteRing((x[:, None] + x[None]) % n, (x[:, None] * x[None]) % n, list(range(n)))


def product_ring(R, S):
    """R × S on pairs of element indices."""
    n, m = R.order, S.order
    pairs = [(r, s) for r in range(n) for s in range(m)]
    one = (1 if n > 1 else 0, 1 if m > 1 else 0)
    return from_elements(
        pairs,
        lambda x, y: (R.add(x[0], y[0]), S.add(x[1], y[1])),
        lambda x, y: (R.mul(x[0], y[0]), S.mul(x[1], y[1])),
        (0, 0), one,
    )


# ---------------------------------------------------------------- analyzers


def units(R):
    """Boolean mask of invertible elements."""
    if R.has_tables:
        M = R._mul
        return ((M == 1) & (M.T == 1)).any(axis=1) if R.order > 1 else np.array([True])
    n = R.order
    x = np.arange(n, dtype=np.int64)
    out = np.zeros(n, dtype=bool)
    for u in range(n):
        left = R.mul_vec(u, x) == 1
        out[u] = bool((left & (R.mul_vec(x, u) == 1)).any())
    return out


def _some_units(R, want=6, seed=0, tries=200):
    n = R.order
    x = np.arange(n, dtype=np.int64)
    rng = np.random.default_rng(seed)
    found = []
    for u in rng.integers(0, n, size=min(tries, n)):
        u = int(u)
        if u <= 1 or u in found:
            continue
        inv = np.flatnonzero(R.mul_vec(u, x) == 1)
        if inv.size and R.mul(int(inv[0]), u) == 1:
            found.append(u)
            if len(found) >= want:
                break
    return found


def unit_orbits(R):
    """Representatives of the classes a ~ u·a·v (u, v units), least index first.

    Only a sample of units is used, so classes may be finer than the true
    two-sided orbits; both are invariant for regularity.
    """
    n = R.order
    x = np.arange(n, dtype=np.int64)
    us = _some_units(R)
    if not us:
        return x
    src = np.concatenate([x for _ in us] * 2)
    dst = np.concatenate([R.mul_vec(u, x) for u in us] + [R.mul_vec(x, u) for u in us])
    g = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(g, directed=True, connection="weak")
    _, reps = np.unique(labels, return_index=True)
    return np.sort(reps)


def regular_witnesses(R, elems=None):
    """For each element a, the least b with a·b·a = a, or -1."""
    n = R.order
    elems = np.arange(n, dtype=np.int64) if elems is None else np.asarray(elems, dtype=np.int64)
    out = np.full(elems.size, -1, dtype=np.int64)
    if R.has_tables:
        M = R._mul
        for start in range(0, elems.size, 256):
            a = elems[start:start + 256]
            aba = M[M[a, :], a[:, None]]
            hit = aba == a[:, None]
            has = hit.any(axis=1)
            out[start:start + 256] = np.where(has, hit.argmax(axis=1), -1)
        return out
    x = np.arange(n, dtype=np.int64)
    for k, a in enumerate(elems):
        hit = np.flatnonzero(R.mul_vec(R.mul_vec(a, x), a) == a)
        out[k] = hit[0] if hit.size else -1
    return out


def is_vn_regular(R):
    """Every a has some b with a·b·a = a (exhaustive over b).

    Implicit rings are reduced to classes under multiplication by units
    first; a·b·a = a is preserved by a -> u·a·v.
    """
    elems = np.arange(R.order, dtype=np.int64) if R.has_tables else unit_orbits(R)
    for lo in range(0, elems.size, 256):
        if (regular_witnesses(R, elems[lo:lo + 256]) < 0).any():
            return False
    return True


def is_semiprime(R):
    """No x ≠ 0 with x·r·x = 0 for all r."""
    n = R.order
    x = np.arange(n, dtype=np.int64)
    dead = np.ones(n, dtype=bool)
    dead[0] = False
    gens = np.arange(n) if R.has_tables else R.additive_generators
    for r in gens:
        dead &= R.mul_vec(R.mul_vec(x, int(r)), x) == 0
        if not dead.any():
            return True
    return not dead.any()


def jacobson_radical(R):
    """Sorted element indices of {x : 1 - a·x is a unit for every a}."""
    if not R.has_tables:
        raise TooLarge(f"jacobson_radical of a ring of order {R.order}", R.order, TABLE_BUDGET)
    n = R.order
    if n == 1:
        return [0]
    unit = units(R)
    M, A, neg = R._mul, R._add, R.neg
    one_minus = A[1, neg[M]]           # [a, x] -> 1 - a·x
    ok = unit[one_minus].all(axis=0)
    return [int(i) for i in np.flatnonzero(ok)]


def is_two_sided_ideal(R, subset):
    s = np.array(sorted(subset), dtype=np.int64)
    inside = np.zeros(R.order, dtype=bool)
    inside[s] = True
    if not inside[0]:
        return False
    x = np.arange(R.order, dtype=np.int64)
    for e in s:
        if not inside[R.add_vec(e, s)].all():
            return False
        if not inside[R.mul_vec(x, e)].all() or not inside[R.mul_vec(e, x)].all():
            return False
    return True


def additive_closure(R, gens):
    """Sorted elements of the additive subgroup generated by ``gens``."""
    inside = np.zeros(R.order, dtype=bool)
    inside[0] = True
    frontier = np.array([0], dtype=np.int64)
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    while frontier.size:
        nxt = np.unique(R.add_vec(frontier[:, None], gens[None, :]).ravel()) if gens.size else frontier[:0]
        nxt = nxt[~inside[nxt]]
        inside[nxt] = True
        frontier = nxt
    return np.flatnonzero(inside)


def is_nilpotent_ideal(R, subset):
    """I^k = 0 for some k, where I^k is spanned by k-fold products."""
    ideal = np.array(sorted(int(v) for v in subset), dtype=np.int64)
    power = ideal
    for _ in range(R.order.bit_length() + 1):
        if (power == 0).all():
            return True
        prods = R.mul_vec(power[:, None], ideal[None, :]).ravel()
        nxt = additive_closure(R, prods)
        if np.array_equal(nxt, power):
            return False
        power = nxt
    return bool((power == 0).all())


def center_elements(R):
    n = R.order
    x = np.arange(n, dtype=np.int64)
    ok = np.ones(n, dtype=bool)
    gens = np.arange(n) if R.has_tables else R.additive_generators
    for g in gens:
        g = int(g)
        ok &= R.mul_vec(x, g) == R.mul_vec(g, x)
    return [int(i) for i in np.flatnonzero(ok)]


def subring(R, elements):
    """The FiniteRing on a subset closed under the operations (0 and 1 included)."""
    els = sorted(int(e) for e in elements)
    pos = {e: i for i, e in enumerate(els)}
    arr = np.array(els, dtype=np.int64)
    a = R.add_vec(arr[:, None], arr[None, :])
    m = R.mul_vec(arr[:, None], arr[None, :])
    try:
        A = np.vectorize(pos.__getitem__)(a)
        M = np.vectorize(pos.__getitem__)(m)
    except KeyError:
        raise BadSpec("subset is not closed under the ring operations") from None
    return FiniteRing(A, M, [R.label(e) for e in els])


def center(R):
    """Z(R) as a FiniteRing with inherited operations."""
    return subring(R, center_elements(R))


def is_commutative(R):
    return len(center_elements(R)) == R.order
