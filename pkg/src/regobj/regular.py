"""Generalized inverses, U-regularity decisions and ring analyzers.

A morphism f has a generalized inverse h (f∘h∘f = f, h∘f∘h = h) exactly
when its image is a summand of the codomain and its kernel a summand of the
domain. ``generalized_inverse`` builds h from the two splittings; the
exhaustive route scans Hom(codomain, domain) and serves as the oracle.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _diag
from .abcat import (
    DEFAULT_BUDGET, FPModule, Morphism, VectSpace, compose, cyclic, find_retraction,
    find_section, hom_space, identity, image_parts, is_epi, is_mono, make_object,
)
from .errors import BadSpec, NotCentral, NotEpi, NotFinite, NotMono, ShapeMismatch
from .exact import ZZ
from .rings import FiniteRing

IMAGE_NOT_SUMMAND = "image-not-summand"
KERNEL_NOT_SUMMAND = "kernel-not-summand"

#: hom-sets larger than this are reduced to automorphism orbits first
ORBIT_THRESHOLD = 4096



@dataclass(frozen=True)
class GenInvResult:
    """Outcome of :func:`generalized_inverse`.

    ``h`` is None when no generalized inverse exists; ``witness`` then names
    the splitting that failed. ``g`` is the inner inverse h was built from.
    """

    h: Optional[Morphism]
    witness: Optional[str] = None
    g: Optional[Morphism] = None
    alpha: Optional[Morphism] = None
    beta: Optional[Morphism] = None

    def __bool__(self):
        return self.h is not None

    @property
    def obstruction(self):
        return self.witness


# ------------------------------------------------------------- core path


def _cmp(g, f, mods, ncols):
    return _diag.compose(g, f, mods, ncols)


def geninv_core(a, b, phi):
    """Constructive generalized inverse on Smith coordinates.

    ``phi`` maps ⊕Z/a -> ⊕Z/b. Returns ``(h, None)`` or ``(None, witness)``.
    """
    na = len(a)
    mods, j, fp = _diag.image(a, b, phi)
    alpha = _diag.retraction(mods, b, j)
    if alpha is None:
        return None, IMAGE_NOT_SUMMAND
    beta = _diag.section(a, mods, fp)
    if beta is None:
        return None, KERNEL_NOT_SUMMAND
    g = _cmp(beta, alpha, a, len(b))
    h = _cmp(_cmp(g, phi, a, na), g, a, len(b))
    return h, None


def _is_geninv_core(a, b, phi, h):
    na, nb = len(a), len(b)
    fhf = _cmp(_cmp(phi, h, b, nb), phi, b, na)
    hfh = _cmp(_cmp(h, phi, a, na), h, a, nb)
    return _diag.reduce_mat(fhf, b) == _diag.reduce_mat(phi, b) and \
        _diag.reduce_mat(hfh, a) == _diag.reduce_mat(h, a)


def _check_contract(f, h):
    if compose(f, compose(h, f)) != f or compose(h, compose(f, h)) != h:
        raise AssertionError("generalized inverse contract violated")


def generalized_inverse(f, method="construct", budget=DEFAULT_BUDGET):
    """h with f∘h∘f = f and h∘f∘h = h, or the obstruction.

    ``method="search"`` scans Hom(codomain, domain) in index order instead
    (raises TooLarge beyond ``budget``).
    """
    if not isinstance(f, Morphism):
        raise BadSpec("generalized_inverse needs an additive morphism")
    if method == "search":
        return geninv_search(f, budget)
    if method != "construct":
        raise BadSpec(f"unknown method {method!r}")
    Im, j, fp = image_parts(f)
    alpha = find_retraction(j)
    if alpha is None:
        return GenInvResult(None, IMAGE_NOT_SUMMAND)
    beta = find_section(fp)
    if beta is None:
        return GenInvResult(None, KERNEL_NOT_SUMMAND, alpha=alpha)
    g = compose(beta, alpha)
    h = compose(g, compose(f, g))
    _check_contract(f, h)
    return GenInvResult(h, None, g=g, alpha=alpha, beta=beta)


def _split_witness(f):
    """Which splitting fails (image checked first), or None if both hold."""
    Im, j, fp = image_parts(f)
    if find_retraction(j) is None:
        return IMAGE_NOT_SUMMAND
    if find_section(fp) is None:
        return KERNEL_NOT_SUMMAND
    return None


def geninv_search(f, budget=DEFAULT_BUDGET):
    """Exhaustive route: least-index g in Hom(M, U) with f∘g∘f = f, h = g∘f∘g."""
    U, M = f.domain, f.codomain
    space = hom_space(M, U)
    space.check_budget(budget)
    a, b = space.dst, space.src
    phi = np.array(_core_ints(f), dtype=np.int64).reshape(len(b), len(a))
    k = _diag.has_inner_inverse(phi, space.all(), a, b)
    if k < 0:
        return GenInvResult(None, _split_witness(f))
    g = Morphism._from_core(M, U, _from_ints(M, U, space.decode([k])[0]))
    h = compose(g, compose(f, g))
    _check_contract(f, h)
    return GenInvResult(h, None, g=g)


def _core_ints(f):
    if isinstance(f.domain, VectSpace):
        return [list(r) for r in f.matrix.entries]
    return [list(r) for r in f.core]


def _from_ints(U, M, arr):
    arr = [[int(v) for v in r] for r in np.asarray(arr).reshape(len(_mods(M)), len(_mods(U)))]
    return arr


def _mods(obj):
    """Diagonal moduli of a finite additive object (vector spaces over F_p too)."""
    if isinstance(obj, VectSpace):
        return (obj.ring.modulus,) * obj.dim
    return obj.moduli


# -------------------------------------------------------- regular pairs


def _is_field_pair(U, M):
    return isinstance(U, VectSpace) and isinstance(M, VectSpace)


def _candidate_indices(space, U_mods, M_mods):
    """Indices to test: all of Hom(U, M), or orbit representatives when large."""
    if space.size <= ORBIT_THRESHOLD:
        return np.arange(space.size, dtype=np.int64)
    left = _diag.automorphisms(M_mods)
    right = _diag.automorphisms(U_mods)
    _, reps = _diag.orbit_labels(space, left, right)
    return reps


def regular_pair_report(U, M, budget=DEFAULT_BUDGET, sample=None, seed=0, enumerate_fields=False):
    """Decide U-regularity of M and explain a failure.

    Returns a dict with ``regular`` (bool), ``checked`` (number of morphisms
    examined), and for failures ``witness`` (a morphism U -> M without a
    generalized inverse) and ``obstruction``. With ``sample=n`` only n
    random morphisms are tested, so a True verdict is then not a proof.
    """
    U, M = make_object(U), make_object(M)
    if _is_field_pair(U, M) and not enumerate_fields:
        if U.ring != M.ring:
            raise BadSpec("vector spaces over different fields")
        return {"regular": True, "checked": 0, "shortcut": "semisimple"}
    space = hom_space(U, M)
    if sample is not None:
        idx = np.sort(np.random.default_rng(seed).integers(0, space.size, size=int(sample)))
    else:
        space.check_budget(budget)
        idx = _candidate_indices(space, _mods(U), _mods(M))
    a, b = space.src, space.dst
    phis = space.decode(idx) if idx.size else np.zeros((0, len(b), len(a)), dtype=np.int64)
    for t, phi in enumerate(phis):
        phi = phi.tolist()
        h, why = geninv_core(a, b, phi)
        if h is None:
            f = Morphism._from_core(U, M, phi)
            return {"regular": False, "checked": t + 1, "witness": f, "obstruction": why}
        if not _is_geninv_core(a, b, phi, h):
            raise AssertionError("generalized inverse contract violated")
    return {"regular": True, "checked": int(idx.size), "sampled": sample is not None}


def is_regular_pair(U, M, budget=DEFAULT_BUDGET, sample=None, seed=0):
    """True iff every morphism U -> M has a generalized inverse."""
    return regular_pair_report(U, M, budget, sample, seed)["regular"]


def is_regular_pair_search(U, M, budget=DEFAULT_BUDGET):
    """Oracle version: exhaustive inner-inverse search for every f.

    Orbit reduction (exact, see ``_candidate_indices``) keeps the outer loop
    small; the inner search always covers all of Hom(M, U).
    """
    U, M = make_object(U), make_object(M)
    fwd, back = hom_space(U, M), hom_space(M, U)
    fwd.check_budget(budget)
    back.check_budget(budget)
    cands = back.all()
    for phi in fwd.decode(_candidate_indices(fwd, _mods(U), _mods(M))):
        if _diag.has_inner_inverse(phi, cands, fwd.src, fwd.dst) < 0:
            return False
    return True


# ------------------------------------------------------- regular objects


def base_generator(M):
    """The base ring as an object of M's category."""
    if isinstance(M, VectSpace):
        return VectSpace(M.ring, 1)
    n = M.base.modulus
    return cyclic(n if n else 0, M.base)


def regular_object_report(M, budget=DEFAULT_BUDGET):
    """Decide whether M is R-regular for its base ring R."""
    M = make_object(M)
    if isinstance(M, VectSpace):
        return {"regular": True, "checked": 0, "shortcut": "semisimple"}
    if not isinstance(M, FPModule):
        raise BadSpec("regular objects are decided for vector spaces and modules")
    if M.base.modulus:
        return regular_pair_report(base_generator(M), M, budget)
    if M.is_zero():
        return {"regular": True, "checked": 0}
    # over Z: a torsion element of prime order p, else twice a free generator
    mods = M.moduli
    y = [0] * len(mods)
    torsion = [k for k, m in enumerate(mods) if m]
    if torsion:
        k = torsion[0]
        d = mods[k]
        p = next(q for q in range(2, d + 1) if d % q == 0)
        y[k] = d // p
    else:
        y[0] = 2
    R = cyclic(0, ZZ)
    f = Morphism._from_core(R, M, [[v] for v in y])
    res = generalized_inverse(f)
    assert res.h is None, "cyclic witness unexpectedly split"
    return {"regular": False, "checked": 1, "witness": f, "obstruction": res.witness}


def is_regular_object(M, budget=DEFAULT_BUDGET):
    return regular_object_report(M, budget)["regular"]


def regularity_transfer_check(kind, data, budget=DEFAULT_BUDGET):
    """Check one transfer rule on an instance: the implication must hold.

    kinds and ``data`` keys:
      * ``"epi"``: ``M``, ``pi: U -> U2`` epimorphism; M U-regular ⟹ M U2-regular.
      * ``"mono"``: ``U``, ``i: M2 -> M`` monomorphism; M U-regular ⟹ M2 U-regular.
      * ``"summand"``: ``M``, ``i: U2 -> U``, ``p: U -> U2`` with p∘i = id;
        M U-regular ⟹ M U2-regular.
    """
    if kind == "epi":
        pi, M = data["pi"], make_object(data["M"])
        if not is_epi(pi):
            raise NotEpi("the epi clause needs an epimorphism")
        before = is_regular_pair(pi.domain, M, budget)
        return (not before) or is_regular_pair(pi.codomain, M, budget)
    if kind == "mono":
        i, U = data["i"], make_object(data["U"])
        if not is_mono(i):
            raise NotMono("the mono clause needs a monomorphism")
        before = is_regular_pair(U, i.codomain, budget)
        return (not before) or is_regular_pair(U, i.domain, budget)
    if kind == "summand":
        i, p, M = data["i"], data["p"], make_object(data["M"])
        if compose(p, i) != identity(i.domain):
            raise BadSpec("p∘i is not the identity")
        before = is_regular_pair(i.codomain, M, budget)
        return (not before) or is_regular_pair(i.domain, M, budget)
    raise BadSpec(f"unknown transfer kind {kind!r}")


# --------------------------------------------------------- end rings


def _finite_end_space(M, budget):
    M = make_object(M)
    if isinstance(M, VectSpace) and not M.ring.is_finite and M.dim:
        raise NotFinite("End of a rational vector space is infinite")
    space = _diag.HomSpace(_mods(M), _mods(M))
    space.check_budget(budget)
    return M, space


def end_ring(M, budget=DEFAULT_BUDGET):
    """End(M) as a FiniteRing; a·b is the composite a∘b, labels are matrices."""
    M, space = _finite_end_space(M, budget)
    mods = space.dst
    steps = np.where(space.steps == 0, 1, space.steps).ravel()
    k = len(mods)

    def mul_digits(x, y):
        n = x.shape[0]
        g = (x * steps[None]).reshape(n, k, k)
        f = (y * steps[None]).reshape(n, k, k)
        gf = _diag.batch_compose(g, f, mods)
        return gf.reshape(n, k * k) // steps[None]

    unit = (np.eye(k, dtype=np.int64).ravel() // steps) if k else np.zeros(0, dtype=np.int64)

    def label(i):
        digits = ring._codec.decode(np.array([i]))[0]
        phi = (digits * steps).reshape(k, k).tolist()
        return Morphism._from_core(M, M, phi).matrix.tolist() if k else []

    ring = FiniteRing.from_codec(space.counts.ravel(), mul_digits, unit, labels=label)
    ring.object = M
    return ring


def end_element(R, i):
    """The endomorphism behind element ``i`` of a ring from :func:`end_ring`."""
    M = R.object
    k = len(_mods(M))
    digits = R._codec.decode(np.array([i]))[0]
    space = _diag.HomSpace(_mods(M), _mods(M))
    steps = np.where(space.steps == 0, 1, space.steps).ravel()
    return Morphism._from_core(M, M, (digits * steps).reshape(k, k).tolist())


def end_index(R, f):
    """Element index of an endomorphism in a ring from :func:`end_ring`."""
    M = R.object
    k = len(_mods(M))
    space = _diag.HomSpace(_mods(M), _mods(M))
    steps = np.where(space.steps == 0, 1, space.steps).ravel()
    phi = np.array(_core_ints(f), dtype=np.int64).reshape(1, k * k) if k else np.zeros((1, 0), dtype=np.int64)
    phi = space.reduce(phi.reshape(1, k, k)).reshape(1, k * k)
    return int(R._codec.encode(phi // steps[None])[0])


# ------------------------------------------------------ central lemma


def central_geninv(alpha, budget=DEFAULT_BUDGET):
    """For central α ∈ End(M): ``(β, decomposed)``.

    β is central with α∘β∘α = α and β∘α∘β = β (or None when no central inner
    inverse exists); it is built as b∘α∘b from the least-index central b with
    α∘b∘α = α. ``decomposed`` says whether M = Im(α) ⊕ Ker(α).
    """
    M = alpha.domain
    if alpha.codomain != M:
        raise ShapeMismatch("central_geninv needs an endomorphism")
    M, space = _finite_end_space(M, budget)
    mods = space.dst
    k = len(mods)
    ends = space.all()
    a = np.array(_core_ints(alpha), dtype=np.int64).reshape(k, k)
    if not (_diag.batch_compose(a[None], ends, mods) == _diag.batch_compose(ends, a[None], mods)).all():
        raise NotCentral("α does not commute with every endomorphism")
    # central elements commute with every additive generator of End(M)
    gens = space.decode(_generator_indices(space))
    central = np.ones(space.size, dtype=bool)
    for e in gens:
        central &= (_diag.batch_compose(e[None], ends, mods) == _diag.batch_compose(ends, e[None], mods)).all(axis=(1, 2))
    cidx = np.flatnonzero(central)
    aba = _diag.batch_compose(_diag.batch_compose(a[None], ends[cidx], mods), a[None], mods)
    hits = cidx[(aba == a[None]).all(axis=(1, 2))]
    if not hits.size:
        return None, _im_ker_decomposes(a, mods)
    b = ends[hits[0]][None]
    bab = _diag.batch_compose(_diag.batch_compose(b, a[None], mods), b, mods)[0]
    return Morphism._from_core(M, M, bab.tolist()), _im_ker_decomposes(a, mods)


def _generator_indices(space):
    flat = space.radix.ravel()
    return flat[space.counts.ravel() > 1]


def _im_ker_decomposes(a, mods):
    """Im(α) ∩ Ker(α) = 0 and |Im|·|Ker| = |M|."""
    el = _diag.elements(mods)
    m = np.array(mods, dtype=np.int64)
    img = (el @ a.T) % m if len(mods) else el
    in_ker = ~img.any(axis=1)
    n_ker = int(in_ker.sum())
    im_set = np.unique(img, axis=0)
    n_im = im_set.shape[0]
    im_of_im = (im_set @ a.T) % m if len(mods) else im_set
    meet = int((~im_of_im.any(axis=1)).sum())
    return meet == 1 and n_im * n_ker == el.shape[0]
