"""Enumerable families of small objects used by the verification suites."""

from math import gcd

from .abcat import FPModule, module
from .exact import ZZ, Zn


def _partitions(n, largest=None):
    """Partitions of n into non-increasing positive parts."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factor_lists(order):
    """Invariant factors d1 | d2 | ... of every abelian group of this order."""
    if order == 1:
        return [()]
    parts = [(p, list(_partitions(e))) for p, e in sorted(_factor(order).items())]
    out = [()]
    for p, plist in parts:
        out = [(acc, part) for acc in out for part in plist]
        out = [_merge(acc, p, part) for acc, part in out]
    return sorted(out, key=lambda t: (len(t), t))


def _merge(acc, p, part):
    # acc: invariant factors so far (ascending); part: exponents (descending)
    acc = list(acc)
    exps = sorted(part)  # ascending
    n = max(len(acc), len(exps))
    acc = [1] * (n - len(acc)) + acc
    exps = [0] * (n - len(exps)) + exps
    return tuple(a * p ** e for a, e in zip(acc, exps))


def abelian_groups(max_order, base=ZZ):
    """All abelian groups of order ≤ max_order (iso classes), smallest first."""
    out = []
    for n in range(1, max_order + 1):
        for inv in invariant_factor_lists(n):
            out.append(module(inv, base) if inv else FPModule(base, 0))
    return out


def modules_over(n, max_order):
    """Z/n-modules of order ≤ max_order: groups whose exponent divides n."""
    out = []
    for order in range(1, max_order + 1):
        for inv in invariant_factor_lists(order):
            if all(n % d == 0 for d in inv):
                out.append(module(inv, Zn(n)) if inv else FPModule(Zn(n), 0))
    return out


def is_squarefree(n):
    return all(e == 1 for e in _factor(n).values())


def lcm(a, b):
    return a * b // gcd(a, b)
