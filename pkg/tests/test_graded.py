import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from regobj import graded
from regobj.errors import BadSpec, TooLarge
from regobj.graded import (
    FiniteGroup, GradedAlgebra, end_gr_of_U, field_power, graded_hom, group_algebra,
    is_gr_regular, is_Re_regular_component, is_strongly_graded, is_suspension_regular,
    matrix_algebra, regular_module, shift, smash_product, suspension, truncated_poly,
    upper_triangular,
)
from regobj.rings import from_elements, is_commutative, is_semiprime, is_vn_regular

C2, C3, T = FiniteGroup.cyclic(2), FiniteGroup.cyclic(3), FiniteGroup.trivial()
FAMILY = graded.family()


# -------------------------------------------------------------- oracles

def prod(R, x, y):
    """Product of coefficient tuples straight from the structure constants."""
    d, p = R.dim, R.p
    out = [0] * d
    for i in range(d):
        for j in range(d):
            if x[i] and y[j]:
                for k in range(d):
                    out[k] += x[i] * y[j] * int(R.mul[i, j, k])
    return tuple(v % p for v in out)


def elements(R):
    return list(itertools.product(range(R.p), repeat=R.dim))


def gr_regular_oracle(R):
    els = elements(R)
    for s in range(R.group.order):
        comp = set(R.component(s))
        for x in els:
            if any(x[i] for i in range(R.dim) if i not in comp):
                continue  # not homogeneous of degree s
            if not any(prod(R, prod(R, x, y), x) == x for y in els):
                return False
    return True


def graded_hom_count_oracle(R, s):
    """Count degree-preserving left-linear maps R -> R(s) by trying every matrix."""
    d, p, G = R.dim, R.p, R.group
    sinv = int(G.inv[s])
    new_deg = [G.mul(g, sinv) for g in R.deg]
    L = R.left_matrices()
    count = 0
    for flat in itertools.product(range(p), repeat=d * d):
        F = np.array(flat, dtype=np.int64).reshape(d, d)
        if any(F[k, i] and new_deg[k] != R.deg[i] for k in range(d) for i in range(d)):
            continue
        if all(((F @ L[a]) % p == (L[a] @ F) % p).all() for a in range(d)):
            count += 1
    return count


def smash_oracle(R):
    """R#G tabulated directly from (r p_s)(r' p_t) = r r'_{s t⁻¹} p_t."""
    G, d, p = R.group, R.dim, R.p
    n = G.order

    def component(x, g):
        return tuple(x[i] if R.deg[i] == g else 0 for i in range(d))

    def mul(a, b):
        out = [[0] * d for _ in range(n)]
        for s in range(n):
            for t in range(n):
                r = prod(R, a[s], component(b[t], G.mul(s, int(G.inv[t]))))
                out[t] = [(u + v) % p for u, v in zip(out[t], r)]
        return tuple(tuple(v) for v in out)

    def add(a, b):
        return tuple(tuple((u + v) % p for u, v in zip(x, y)) for x, y in zip(a, b))

    coords = list(itertools.product(range(p), repeat=d))
    els = list(itertools.product(coords, repeat=n))
    zero = tuple(tuple([0] * d) for _ in range(n))
    one = tuple(tuple(int(v) for v in R.one) for _ in range(n))
    return from_elements(els, add, mul, zero, one)


# -------------------------------------------------------------- examples

def test_gr_regular_examples():
    assert is_gr_regular(group_algebra(2, C2))
    assert not is_gr_regular(group_algebra(2, C2, graded=False))
    assert is_gr_regular(field_power(2, 2))


def test_suspension_examples():
    R = group_algebra(2, C2)
    M = regular_module(R)
    assert suspension(M, C2.e).deg == M.deg
    Rg = shift(R, 1)
    assert [i for i, d in enumerate(Rg.deg) if d == C2.e] == [1]  # span{g}
    for s, t in itertools.product(range(3), repeat=2):
        M3 = regular_module(group_algebra(3, C3))
        assert suspension(suspension(M3, s), t).deg == suspension(M3, C3.mul(t, s)).deg


def test_graded_hom_examples():
    R = group_algebra(2, C2)
    assert len(graded_hom(regular_module(R), shift(R, 1))) == 2
    assert len(graded_hom(regular_module(R), regular_module(R))) == 2
    zero = graded.GradedModule(R, [], np.zeros((2, 0, 0)))
    assert len(graded_hom(zero, regular_module(R))) == 1


def test_suspension_regular_examples():
    assert is_suspension_regular(group_algebra(2, C2), 1)
    assert not is_suspension_regular(group_algebra(2, C2, graded=False), C2.e)
    assert is_suspension_regular(field_power(3, 1), 0)


def test_smash_examples():
    S = smash_product(field_power(2, 1))
    assert S.order == 2
    S = smash_product(field_power(2, 1, C2))
    assert S.order == 4 and is_commutative(S) and is_vn_regular(S)
    S = smash_product(group_algebra(2, C2))
    assert S.order == 16 and is_vn_regular(S)


def test_end_gr_examples():
    assert end_gr_of_U(field_power(2, 1, C2)).order == 4
    assert end_gr_of_U(group_algebra(2, C2)).order == 16
    assert end_gr_of_U(field_power(3, 1)).order == 3


def test_component_examples():
    assert is_Re_regular_component(group_algebra(2, C2), 1)
    assert not is_Re_regular_component(truncated_poly(2, 2), 0)
    # a component that is zero
    assert is_Re_regular_component(field_power(2, 1, C2), 1)


def test_strongly_graded():
    assert is_strongly_graded(group_algebra(3, C3))
    assert not is_strongly_graded(field_power(2, 1, C2))
    assert is_strongly_graded(matrix_algebra(2, 2, C2, [0, 1]))


def test_validation():
    with pytest.raises(BadSpec):
        GradedAlgebra(4, T, [0], [[[1]]], [1])
    with pytest.raises(BadSpec):  # b1·b1 = b1 puts a degree-1 product in degree 1 ≠ 1+1
        GradedAlgebra(2, C2, [0, 1], [[[1, 0], [0, 1]], [[0, 1], [0, 1]]], [1, 0])
    with pytest.raises(BadSpec):  # wrong unit
        GradedAlgebra(2, T, [0, 0], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 0])
    with pytest.raises(BadSpec):
        FiniteGroup([[0, 1], [0, 1]])


def test_json_round_trip():
    for R in FAMILY[:8] + [matrix_algebra(3, 2, C2, [0, 1])]:
        R2 = GradedAlgebra.from_json(R.to_json())
        assert R2.to_json() == R.to_json()
        assert R2.group == R.group
    assert FiniteGroup.from_json(C3.to_json()) == C3


def test_budget_guard():
    with pytest.raises(TooLarge):
        smash_product(group_algebra(3, C3), budget=1000)


def test_family_shape():
    assert len(FAMILY) == 38
    assert {R.p for R in FAMILY} == {2, 3}
    assert max(R.dim for R in FAMILY) <= 3 and max(R.group.order for R in FAMILY) <= 3
    verdicts = {is_gr_regular(R) for R in FAMILY}
    assert verdicts == {True, False}
    assert any(is_strongly_graded(R) for R in FAMILY) and not all(is_strongly_graded(R) for R in FAMILY)


# ------------------------------------------------------------ properties

@pytest.mark.parametrize("R", FAMILY, ids=lambda R: f"{R.name}/p{R.p}/G{R.group.order}")
def test_gr_regular_against_oracle(R):
    assert is_gr_regular(R) == gr_regular_oracle(R)


@pytest.mark.parametrize("R", [R for R in FAMILY if R.p ** (R.dim * R.dim) <= 20000],
                         ids=lambda R: f"{R.name}/p{R.p}/G{R.group.order}")
def test_hom_bijection_against_oracle(R):
    for s in range(R.group.order):
        expected = R.p ** len(R.component(s))
        assert graded_hom_count_oracle(R, s) == expected
        assert len(graded_hom(regular_module(R), shift(R, s))) == expected


SMALL_SMASH = [R for R in FAMILY if R.p ** (R.dim * R.group.order) <= 81]


@settings(max_examples=len(SMALL_SMASH), deadline=None)
@given(st.sampled_from(SMALL_SMASH))
def test_smash_against_direct_tabulation(R):
    S, O = smash_product(R), smash_oracle(R)
    assert S.order == O.order
    assert is_vn_regular(S) == is_vn_regular(O)
    assert is_semiprime(S) == is_semiprime(O)


def test_upper_triangular_is_not_regular():
    for G, d in ((C2, 1), (C3, 1), (T, 0)):
        R = upper_triangular(2, G, d)
        assert not gr_regular_oracle(R) and not is_gr_regular(R)
