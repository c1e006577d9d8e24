"""Property batteries that machine-check the regularity theorems.

Each suite expands into a list of JSON-serializable cases; a case is
checked independently (possibly in a worker process) and yields a count of
checks and a list of failures carrying enough data to reproduce them. The
report is assembled in case order and contains no timings, so it is a pure
function of (suite, seed, budget).
"""

import itertools
import json
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import _diag, coalg, graded
from .abcat import (
    DEFAULT_BUDGET, FPModule, Morphism, VectSpace, compose, direct_sum, find_retraction,
    find_section, hom_space, identity, is_epi, is_mono, is_projective, module,
    radical_and_socle,
)
from .abcat import _prime_factors
from .exact import ZZ, Fp, Zn
from .matops import Matrix
from .families import abelian_groups, is_squarefree, modules_over
from .regular import (
    central_geninv, end_ring, generalized_inverse, geninv_core, is_regular_object,
    is_regular_pair,
)
from .rings import center, is_semiprime, is_vn_regular

SUITES = ("basic-transfer", "char-equivalence", "direct-sum", "central-lemma",
          "regular-objects", "end-rings", "graded", "coalgebra")

#: pairs with |Hom(U,M)|·|Hom(M,U)| above this use exact orbit transport
EXHAUSTIVE_PRODUCT = 1 << 20


def _mods_json(mods, n=0):
    return {"moduli": list(mods), "base": n}


def _from_mods(d):
    base = Zn(d["base"]) if d["base"] else None
    mods = tuple(d["moduli"])
    if base is None:
        return module(mods) if mods else FPModule(ZZ, 0)
    return module(mods, base) if mods else FPModule(base, 0)


def _fail(kind, **data):
    return {"kind": kind, "repro": json.loads(json.dumps(data, default=_jsonable))}


def _jsonable(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"cannot serialize {type(x).__name__}")


# ------------------------------------------------------ basic-transfer


def _field_matrices():
    for p, maxdim in ((2, 3), (3, 2)):
        for m in range(maxdim + 1):
            for n in range(maxdim + 1):
                yield {"what": "field", "p": p, "rows": m, "cols": n}


def check_field_completeness(case):
    """Every matrix over F_p of the given shape has a generalized inverse."""
    p, m, n = case["p"], case["rows"], case["cols"]
    U, M = VectSpace(Fp(p), n), VectSpace(Fp(p), m)
    failures, checks = [], 0
    for entries in itertools.product(range(p), repeat=m * n):
        rows = [list(entries[i * n:(i + 1) * n]) for i in range(m)]
        f = Morphism(U, M, Matrix(Fp(p), rows, m, n))
        res = generalized_inverse(f)
        checks += 1
        if res.h is None:
            failures.append(_fail("no-generalized-inverse", f=f))
            continue
        h = res.h
        if compose(f, compose(h, f)) != f or compose(h, compose(f, h)) != h:
            failures.append(_fail("identity-violated", f=f, h=h))
    return checks, failures


def _transfer_groups():
    return [g for g in abelian_groups(12)]


def _reg_table(groups, budget):
    return {(i, j): is_regular_pair(U, M, budget) for i, U in enumerate(groups) for j, M in enumerate(groups)}


def check_transfer(case, budget=DEFAULT_BUDGET):
    """All epi / mono / split-mono configurations from one source object."""
    groups = _transfer_groups()
    reg = _reg_table(groups, budget)
    i = case["index"]
    A = groups[i]
    failures, checks = [], 0
    for j, B in enumerate(groups):
        for f in _hom_list(A, B, budget):
            if is_epi(f):
                # epi clause: M A-regular ⟹ M B-regular, for every M
                for k, M in enumerate(groups):
                    checks += 1
                    if reg[(i, k)] and not reg[(j, k)]:
                        failures.append(_fail("epi-clause", pi=f, M=M))
                # epi-splitting: every epi between a regular pair has a section
                if reg[(i, j)]:
                    checks += 1
                    if find_section(f) is None:
                        failures.append(_fail("epi-without-section", f=f))
            if is_mono(f):
                # mono clause: M = B U-regular ⟹ A U-regular, for every U
                for k, U in enumerate(groups):
                    checks += 1
                    if reg[(k, j)] and not reg[(k, i)]:
                        failures.append(_fail("mono-clause", i=f, U=U))
                r = find_retraction(f)
                if r is not None:
                    # summand clause: A is a summand of B via (f, r)
                    checks += 1
                    if compose(r, f) != identity(A):
                        failures.append(_fail("bad-retraction", i=f, p=r))
                    for k, M in enumerate(groups):
                        checks += 1
                        if reg[(j, k)] and not reg[(i, k)]:
                            failures.append(_fail("summand-clause", i=f, p=r, M=M))
    return checks, failures


def _hom_list(U, M, budget):
    space = hom_space(U, M)
    space.check_budget(budget)
    return [Morphism._from_core(U, M, phi.tolist()) for phi in space.all()]


# ---------------------------------------------------- char-equivalence


def check_char_pair(case, budget=DEFAULT_BUDGET):
    """Constructive verdict = exhaustive verdict for every f: U -> M."""
    U, M = _from_mods(case["U"]), _from_mods(case["M"])
    fwd, back = hom_space(U, M), hom_space(M, U)
    fwd.check_budget(budget)
    back.check_budget(budget)
    a, b = fwd.src, fwd.dst
    phis = fwd.all()
    cons = np.zeros(fwd.size, dtype=bool)
    for t, phi in enumerate(phis):
        cons[t] = geninv_core(a, b, phi.tolist())[0] is not None
    if fwd.size * back.size <= EXHAUSTIVE_PRODUCT:
        labels = reps = np.arange(fwd.size)
    else:
        labels, reps = _diag.orbit_labels(fwd, _diag.automorphisms(b), _diag.automorphisms(a))
    cands = back.all()
    verdict_of_class = {}
    for r in reps:
        verdict_of_class[int(labels[r])] = _diag.has_inner_inverse(phis[r], cands, a, b) >= 0
    exh = np.array([verdict_of_class[int(l)] for l in labels], dtype=bool)
    failures = [_fail("verdict-mismatch", f=Morphism._from_core(U, M, phis[t].tolist()),
                      constructive=bool(cons[t]), exhaustive=bool(exh[t]))
                for t in np.flatnonzero(cons != exh)]
    return int(fwd.size), failures


# ---------------------------------------------------------- direct-sum


def _random_triples(seed, dual):
    rng = np.random.default_rng(seed + (1 if dual else 0))
    cache = {n: modules_over(n, 16) for n in range(2, 13)}
    out = []
    while len(out) < 200:
        n = int(rng.integers(2, 13))
        mods = cache[n]
        x, y, z = (mods[int(k)] for k in rng.integers(0, len(mods), size=3))
        if y.order * z.order > 16:
            continue
        out.append({"what": "dual" if dual else "sum", "n": n,
                    "A": list(x.moduli), "B": list(y.moduli), "C": list(z.moduli)})
    return out


def check_direct_sum(case, budget=DEFAULT_BUDGET):
    n = case["n"]
    A, B, C = (_from_mods({"moduli": case[k], "base": n}) for k in ("A", "B", "C"))
    S = direct_sum([B, C])[0]
    if case["what"] == "sum":
        # U = A, M1 = B, M2 = C
        hyp = is_regular_pair(A, B, budget) and is_regular_pair(A, C, budget)
        ok = (not hyp) or is_regular_pair(A, S, budget)
        return 1, [] if ok else [_fail("direct-sum", n=n, U=A, M1=B, M2=C)]
    # M = A, N1 = B, N2 = C
    hyp = is_regular_pair(B, A, budget) and is_regular_pair(C, A, budget)
    ok = (not hyp) or is_regular_pair(S, A, budget)
    return 1, [] if ok else [_fail("dual-direct-sum", n=n, M=A, N1=B, N2=C)]


# -------------------------------------------------------- central-lemma


def check_central(case, budget=DEFAULT_BUDGET):
    M = _from_mods(case["M"])
    space = _diag.HomSpace(M.moduli, M.moduli)
    space.check_budget(budget)
    ends = space.all()
    gens = space.decode(space.radix.ravel()[space.counts.ravel() > 1])
    central = np.ones(space.size, dtype=bool)
    for e in gens:
        central &= (_diag.batch_compose(e[None], ends, M.moduli)
                    == _diag.batch_compose(ends, e[None], M.moduli)).all(axis=(1, 2))
    failures, checks = [], 0
    for t in np.flatnonzero(central):
        alpha = Morphism._from_core(M, M, ends[t].tolist())
        beta, decomposed = central_geninv(alpha, budget)
        checks += 1
        if (beta is not None) != decomposed:
            failures.append(_fail("central-lemma", alpha=alpha, decomposed=decomposed,
                                  beta=beta if beta is not None else None))
        elif beta is not None and compose(alpha, compose(beta, alpha)) != alpha:
            failures.append(_fail("beta-not-inner-inverse", alpha=alpha, beta=beta))
    return checks, failures


# ------------------------------------------------------ regular-objects


def check_regular_objects(case, budget=DEFAULT_BUDGET):
    """Consequences for regular modules over Z/n, and the squarefree equivalence."""
    n = case["n"]
    failures, checks = [], 0
    mods = modules_over(n, 16)
    verdicts = []
    for M in mods:
        reg = is_regular_object(M, budget)
        verdicts.append(reg)
        if not reg or M.is_zero():
            continue
        J, s = radical_and_socle(M)
        checks += 2
        if J.domain.order != 1:
            failures.append(_fail("radical-nonzero", M=M))
        if s.domain.order != M.order:
            failures.append(_fail("socle-not-everything", M=M))
        E = end_ring(M, budget)
        checks += 3
        if not is_vn_regular(center(E)):
            failures.append(_fail("center-not-regular", M=M))
        if not is_semiprime(E):
            failures.append(_fail("end-not-semiprime", M=M))
        if not is_vn_regular(E):
            failures.append(_fail("end-not-regular", M=M))
    checks += 1
    if is_squarefree(n) != all(verdicts):
        failures.append(_fail("squarefree-equivalence", n=n, all_regular=all(verdicts)))
    # projectivity: U projective, M U-regular and a quotient of U^k (k ≤ 3) ⟹ M projective
    proj = [U for U in mods if is_projective(U)]
    for U in proj:
        for M in mods:
            if not any(_is_quotient(M.moduli, U.moduli * k) for k in (1, 2, 3)):
                continue
            if not is_regular_pair(U, M, budget):
                continue
            checks += 1
            if not is_projective(M):
                failures.append(_fail("quotient-not-projective", n=n, U=U, M=M))
    return checks, failures


def _is_quotient(small, big):
    """A finite abelian group is a quotient of another iff, prime by prime,
    its partition fits inside the other's."""
    def parts(mods):
        out = {}
        for m in mods:
            for p, e in _prime_factors(m):
                out.setdefault(p, []).append(e)
        return {p: sorted(v, reverse=True) for p, v in out.items()}
    ps, pb = parts(small), parts(big)
    for p, lam in ps.items():
        mu = pb.get(p, [])
        if len(lam) > len(mu) or any(l > m for l, m in zip(lam, mu)):
            return False
    return True


def check_z_torsion(case, budget=DEFAULT_BUDGET):
    failures = []
    groups = [G for G in abelian_groups(16) if not G.is_zero()]
    for G in groups:
        if is_regular_object(G, budget):
            failures.append(_fail("torsion-group-regular-over-Z", M=G))
    return len(groups), failures


# ------------------------------------------------------------- end-rings


def check_end_ring(case, budget=DEFAULT_BUDGET):
    U = _from_mods(case["U"])
    a = is_regular_pair(U, U, budget)
    b = is_vn_regular(end_ring(U, budget))
    return 1, [] if a == b else [_fail("end-ring-criterion", U=U, regular_pair=a, vn_regular=b)]


# ---------------------------------------------------------------- graded


def check_graded(case, budget=DEFAULT_BUDGET):
    R = graded.family()[case["index"]]
    G = R.group
    failures, checks = [], 0

    def fail(kind, **kw):
        failures.append(_fail(kind, algebra=R.to_json(), **kw))

    gr = graded.is_gr_regular(R, budget)
    susp = all(graded.is_suspension_regular(R, s, budget) for s in range(G.order))
    S = graded.smash_product(R, budget)
    E = graded.end_gr_of_U(R, budget)
    smash_reg = is_vn_regular(S)
    checks += 2
    if gr != susp:
        fail("gr-regular-vs-suspensions", gr_regular=gr, suspensions=susp)
    if gr != smash_reg:
        fail("gr-regular-vs-smash", gr_regular=gr, smash_regular=smash_reg)
    checks += 3
    if S.order != E.order:
        fail("smash-end-order", smash=S.order, end=E.order)
    if smash_reg != is_vn_regular(E):
        fail("smash-end-regularity")
    if is_semiprime(S) != is_semiprime(E):
        fail("smash-end-semiprime")
    comps = [graded.is_Re_regular_component(R, s, budget) for s in range(G.order)]
    checks += 1
    if gr and not all(comps):
        fail("component-corollary")
    if gr:
        checks += 1
        if not graded.is_Re_regular(R, budget):
            fail("R-not-Re-regular")
    if graded.is_strongly_graded(R):
        checks += 1
        if all(comps) and not gr:
            fail("strongly-graded-converse")
    if gr:
        checks += 2
        if not is_semiprime(graded.end_Re_of_R(R, budget)):
            fail("end-Re-not-semiprime")
        if not is_semiprime(E):
            fail("end-gr-not-semiprime")
    for s in range(G.order):
        checks += 1
        if not graded.hom_bijection_ok(R, s, budget):
            fail("hom-bijection", sigma=s)
    return checks, failures


# ------------------------------------------------------------- coalgebra


def check_coalgebra(case, budget=DEFAULT_BUDGET):
    C = coalg.family()[case["index"]]
    failures = []
    cs = coalg.is_cosemisimple(C, budget)
    rs = coalg.is_regular_comodule_self(C, budget)
    if cs != rs:
        failures.append(_fail("cosemisimple-equivalence", coalgebra=C.to_json(), cosemisimple=cs, regular=rs))
    if not coalg.radical_is_nilpotent_ideal(C, budget):
        failures.append(_fail("radical-not-nilpotent-ideal", coalgebra=C.to_json()))
    if not coalg.semisimple_dual_is_regular(C, budget):
        failures.append(_fail("semisimple-dual-not-regular", coalgebra=C.to_json()))
    return 3, failures


# --------------------------------------------------------------- driver


def suite_cases(name, seed):
    if name == "basic-transfer":
        return [dict(c, check="field") for c in _field_matrices()] + \
            [{"check": "transfer", "index": i} for i in range(len(_transfer_groups()))]
    if name == "char-equivalence":
        groups = abelian_groups(16)
        return [{"check": "char", "U": _mods_json(U.moduli), "M": _mods_json(M.moduli)}
                for U in groups for M in groups]
    if name == "direct-sum":
        return [dict(c, check="direct-sum") for c in _random_triples(seed, False) + _random_triples(seed, True)]
    if name == "central-lemma":
        return [{"check": "central", "M": _mods_json(M.moduli)} for M in abelian_groups(16)]
    if name == "regular-objects":
        return [{"check": "regular-objects", "n": n} for n in range(2, 13)] + [{"check": "z-torsion"}]
    if name == "end-rings":
        return [{"check": "end-ring", "U": _mods_json(U.moduli)} for U in abelian_groups(16)]
    if name == "graded":
        return [{"check": "graded", "index": i, "name": R.name} for i, R in enumerate(graded.family())]
    if name == "coalgebra":
        return [{"check": "coalgebra", "index": i, "name": C.name} for i, C in enumerate(coalg.family())]
    raise ValueError(f"unknown suite {name!r}")


_CHECKS = {
    "field": lambda c, b: check_field_completeness(c),
    "transfer": check_transfer,
    "char": check_char_pair,
    "direct-sum": check_direct_sum,
    "central": check_central,
    "regular-objects": check_regular_objects,
    "z-torsion": check_z_torsion,
    "end-ring": check_end_ring,
    "graded": check_graded,
    "coalgebra": check_coalgebra,
}


def run_case(args):
    case, budget = args
    checks, failures = _CHECKS[case["check"]](case, budget)
    return {"case": case, "checks": int(checks), "failures": failures}


def run_suite(name, seed=0, budget=DEFAULT_BUDGET, jobs=1):
    """Run one suite; the result is independent of ``jobs``."""
    cases = suite_cases(name, seed)
    work = [(c, budget) for c in cases]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_case, work, chunksize=1))
    else:
        results = [run_case(w) for w in work]
    failures = [dict(f, case=r["case"]) for r in results for f in r["failures"]]
    return {"suite": name, "cases": len(cases), "checks": sum(r["checks"] for r in results),
            "failures": failures}


def run(suite="all", seed=0, budget=DEFAULT_BUDGET, jobs=1):
    names = SUITES if suite == "all" else (suite,)
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    reports = [run_suite(n, seed, budget, jobs) for n in names]
    return {"suite": suite, "seed": seed, "budget": budget, "suites": reports,
            "failures": sum(len(r["failures"]) for r in reports)}


def dumps(report):
    """Canonical serialization used for byte-identical comparisons."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
