"""Command-line interface: JSON in, one JSON verdict out.

Exit codes: 0 for any computed verdict (true or false), 1 when ``verify``
finds property failures, 2 for malformed input, 3 when a budget is exceeded.
"""

import argparse
import contextlib
import json
import sys
import time

from . import coalg, graded, verify
from .abcat import (
    DEFAULT_BUDGET, SetMap, find_retraction, find_section,
    geninv_function, image_parts, is_epi, is_mono, make_morphism, make_object,
)
from .errors import NotFinite, RegobjError, TooLarge
from .matops import Matrix, hnf, snf
from .regular import (
    end_ring, generalized_inverse, regular_object_report, regular_pair_report,
)
from .rings import FiniteRing, is_semiprime, is_vn_regular, jacobson_radical


class InputError(Exception):
    """Unreadable or malformed input (exit 2)."""


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _matrix_json(f):
    return f.matrix.to_json()


def _load_ring(path, budget):
    """A FiniteRing from ring JSON, an algebra JSON, or an object (its End ring)."""
    obj = _load(path)
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "order" in obj and "mul" in obj:
        return FiniteRing.from_json(obj)
    if "p" in obj and "mul" in obj:
        return graded.as_ring(graded.GradedAlgebra.from_json(obj), budget)
    if "dual" in obj:
        return graded.as_ring(coalg.FiniteCoalgebra.from_json(obj).dual, budget)
    if "variant" in obj:
        return end_ring(make_object(obj), budget)
    raise InputError("expected ring, algebra, coalgebra or object JSON")


# ----------------------------------------------------------- commands


def cmd_geninv(args):
    f = make_morphism(_load(args.file))
    if isinstance(f, SetMap):
        h = geninv_function(f)
        return {"result": list(h.table), "obstruction": None}
    res = generalized_inverse(f, method=args.method, budget=args.budget)
    return {"result": _matrix_json(res.h) if res.h is not None else None, "obstruction": res.witness}


def cmd_explain(args):
    f = make_morphism(_load(args.file))
    if isinstance(f, SetMap):
        raise InputError("explain needs an additive morphism")
    Im, j, fp = image_parts(f)
    trace = {
        "f": _matrix_json(f),
        "image": {"object": Im.to_json(), "j": _matrix_json(j), "fprime": _matrix_json(fp),
                  "note": "f = j∘f′ with j the inclusion of the image"},
    }
    alpha = find_retraction(j)
    trace["retraction"] = {"alpha": _matrix_json(alpha) if alpha is not None else None,
                           "note": "α∘j = id exists iff the image is a summand"}
    if alpha is None:
        return {"result": trace, "obstruction": "image-not-summand"}
    beta = find_section(fp)
    trace["section"] = {"beta": _matrix_json(beta) if beta is not None else None,
                        "note": "f′∘β = id exists iff the kernel is a summand"}
    if beta is None:
        return {"result": trace, "obstruction": "kernel-not-summand"}
    res = generalized_inverse(f)
    trace["g"] = {"matrix": _matrix_json(res.g), "note": "g = β∘α satisfies f∘g∘f = f"}
    trace["h"] = {"matrix": _matrix_json(res.h), "note": "h = g∘f∘g also satisfies h∘f∘h = h"}
    return {"result": trace, "obstruction": None}


def cmd_regular_pair(args):
    U, M = make_object(_load(args.U)), make_object(_load(args.M))
    rep = regular_pair_report(U, M, args.budget, sample=args.sample, seed=args.seed)
    out = {"result": rep["regular"], "obstruction": rep.get("obstruction")}
    if "witness" in rep:
        out["witness"] = rep["witness"].to_json()
    if args.sample is not None:
        out["mode"] = "sampled"
        out["samples"] = args.sample
    return out


def cmd_regular_object(args):
    rep = regular_object_report(make_object(_load(args.M)), args.budget)
    out = {"result": rep["regular"], "obstruction": rep.get("obstruction")}
    if "witness" in rep:
        out["witness"] = rep["witness"].to_json()
    return out


def cmd_summand(args):
    f = make_morphism(_load(args.file))
    if isinstance(f, SetMap):
        raise InputError("summand needs an additive morphism")
    mono, epi = is_mono(f), is_epi(f)
    if not (mono or epi):
        raise InputError("summand needs a monomorphism or an epimorphism")
    result = {}
    if mono:
        r = find_retraction(f)
        result["retraction"] = _matrix_json(r) if r is not None else None
    if epi:
        s = find_section(f)
        result["section"] = _matrix_json(s) if s is not None else None
    result["summand"] = all(v is not None for v in result.values())
    return {"result": result, "obstruction": None}


def _load_matrix(path):
    obj = _load(path)
    if isinstance(obj, dict) and "matrix" in obj and "entries" not in obj:
        obj = obj["matrix"]
    return Matrix.from_json(obj)


def cmd_snf(args):
    res = snf(_load_matrix(args.file))
    out = {"invariant_factors": [int(d) for d in res.invariant_factors]}
    if args.full:
        out.update(D=res.D.to_json(), P=res.P.to_json(), Q=res.Q.to_json())
    return {"result": out, "obstruction": None}


def cmd_hnf(args):
    H, U = hnf(_load_matrix(args.file))
    return {"result": {"H": H.to_json(), "U": U.to_json()}, "obstruction": None}


def cmd_endring(args):
    return {"result": end_ring(make_object(_load(args.M)), args.budget).to_json(), "obstruction": None}


def cmd_vnregular(args):
    return {"result": is_vn_regular(_load_ring(args.file, args.budget)), "obstruction": None}


def cmd_semiprime(args):
    return {"result": is_semiprime(_load_ring(args.file, args.budget)), "obstruction": None}


def cmd_radical(args):
    return {"result": jacobson_radical(_load_ring(args.file, args.budget)), "obstruction": None}


def _load_algebra(path):
    return graded.GradedAlgebra.from_json(_load(path))


def cmd_grreg(args):
    return {"result": graded.is_gr_regular(_load_algebra(args.file), args.budget), "obstruction": None}


def cmd_smash(args):
    S = graded.smash_product(_load_algebra(args.file), args.budget)
    if args.summary:
        return {"result": {"order": S.order, "vn_regular": is_vn_regular(S), "semiprime": is_semiprime(S)},
                "obstruction": None}
    return {"result": S.to_json(), "obstruction": None}


def cmd_suspension_regular(args):
    R = _load_algebra(args.file)
    sigmas = [args.sigma] if args.sigma is not None else range(R.group.order)
    for s in sigmas:
        if not 0 <= s < R.group.order:
            raise InputError(f"sigma {s} is not an element of the group")
        if not graded.is_suspension_regular(R, s, args.budget):
            return {"result": False, "obstruction": f"sigma={s}"}
    return {"result": True, "obstruction": None}


def cmd_cosemisimple(args):
    obj = _load(args.file)
    C = coalg.FiniteCoalgebra.from_json(obj) if isinstance(obj, dict) and "dual" in obj else \
        coalg.FiniteCoalgebra(graded.GradedAlgebra.from_json(obj))
    return {"result": coalg.is_cosemisimple(C, args.budget), "obstruction": None}


def cmd_verify(args):
    report = verify.run(args.suite, seed=args.seed, budget=args.budget, jobs=args.jobs)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(verify.dumps(report))
    return {"result": report, "obstruction": None, "_exit": 1 if report["failures"] else 0}


# -------------------------------------------------------------- parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration budget (default 10^6)")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 for byte-stable output")

    p = argparse.ArgumentParser(prog="regobj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *files, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        for f in files:
            sp.add_argument(f)
        sp.set_defaults(func=func)
        return sp

    sp = add("geninv", cmd_geninv, "file", help="generalized inverse of a morphism")
    sp.add_argument("--method", choices=("construct", "search"), default="construct")
    add("explain", cmd_explain, "file", help="trace the constructive generalized inverse")
    sp = add("regular-pair", cmd_regular_pair, "U", "M", help="is M U-regular?")
    sp.add_argument("--sample", type=int, default=None, help="test N random morphisms only")
    sp.add_argument("--seed", type=int, default=0)
    add("regular-object", cmd_regular_object, "M", help="is M regular over its base ring?")
    add("summand", cmd_summand, "file", help="retraction/section of a mono/epi")
    sp = add("snf", cmd_snf, "file", help="Smith normal form of an integer matrix")
    sp.add_argument("--full", action="store_true", help="include D, P and Q")
    add("hnf", cmd_hnf, "file", help="Hermite normal form of an integer matrix")
    add("endring", cmd_endring, "M", help="endomorphism ring tables")
    add("vnregular", cmd_vnregular, "file", help="is a finite ring von Neumann regular?")
    add("semiprime", cmd_semiprime, "file", help="is a finite ring semiprime?")
    add("radical", cmd_radical, "file", help="Jacobson radical of a finite ring")
    add("grreg", cmd_grreg, "file", help="is a graded algebra gr-regular?")
    sp = add("smash", cmd_smash, "file", help="smash product with the grading group")
    sp.add_argument("--summary", action="store_true", help="order and verdicts instead of tables")
    sp = add("suspension-regular", cmd_suspension_regular, "file", help="is R(σ) R-regular in R-gr?")
    sp.add_argument("--sigma", type=int, default=None, help="group element (default: all)")
    add("cosemisimple", cmd_cosemisimple, "file", help="is a coalgebra cosemisimple?")
    sp = add("verify", cmd_verify, help="run a theorem-verification suite")
    sp.add_argument("suite", choices=verify.SUITES + ("all",))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes (output is unaffected)")
    sp.add_argument("--report", default=None, help="also write the report to this file")
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    start = time.perf_counter()
    try:
        out = args.func(args)
    except TooLarge as exc:
        print(f"regobj: budget exceeded: {exc}", file=stderr)
        return 3
    except NotFinite as exc:
        print(f"regobj: budget exceeded: {exc} (budget {args.budget})", file=stderr)
        return 3
    except (InputError, RegobjError, ValueError, KeyError, TypeError) as exc:
        print(f"regobj: {exc}", file=stderr)
        return 2
    code = out.pop("_exit", 0)
    elapsed = 0 if args.no_timing else int(round((time.perf_counter() - start) * 1000))
    verdict = {"command": args.command, "result": out.pop("result"), "obstruction": out.pop("obstruction")}
    verdict.update(out)
    verdict["elapsed_ms"] = elapsed
    stdout.write(json.dumps(verdict, ensure_ascii=False) + "\n")
    return code


def run_command(argv):
    """Run the CLI in-process; returns ``(exit_code, stdout_text, stderr_text)``."""
    import io
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
