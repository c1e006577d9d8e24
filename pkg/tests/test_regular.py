import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import mor
from regobj.abcat import (
    VectSpace, compose, cyclic, direct_sum, find_section, hom_enumerate, hom_sample, identity,
    is_epi, is_projective, module, zero_morphism, zero_object,
)
from regobj.errors import BadSpec, NotCentral, NotEpi, TooLarge
from regobj.exact import QQ, Fp, Zn
from regobj.families import abelian_groups, modules_over
from regobj.regular import (
    IMAGE_NOT_SUMMAND, KERNEL_NOT_SUMMAND, central_geninv, end_index, end_ring, generalized_inverse,
    is_regular_object, is_regular_pair, is_regular_pair_search, regular_object_report,
    regular_pair_report, regularity_transfer_check,
)
from regobj.rings import center, is_semiprime, is_vn_regular, zmod_ring


def has_inner_inverse(f):
    """Oracle: exhaustive search for g with f∘g∘f = f."""
    return any(compose(compose(f, g), f) == f for g in hom_enumerate(f.codomain, f.domain))


def is_geninv(f, h):
    return compose(compose(f, h), f) == f and compose(compose(h, f), h) == h


# --------------------------------------------------------------- examples

def test_generalized_inverse_examples():
    V = VectSpace(Fp(2), 2)
    f = mor(V, V, [[1, 1], [0, 0]])
    res = generalized_inverse(f)
    assert res.h == mor(V, V, [[1, 0], [0, 0]])
    # the 16-candidate oracle agrees that this h works
    assert is_geninv(f, res.h)
    Z = module([0])
    res = generalized_inverse(mor(Z, Z, [[2]]))
    assert res.h is None and res.obstruction == IMAGE_NOT_SUMMAND and not res
    e = mor(cyclic(6), cyclic(6), [[3]])
    assert generalized_inverse(e).h == e


def test_obstruction_names():
    assert generalized_inverse(mor(cyclic(4), cyclic(2), [[1]])).witness == KERNEL_NOT_SUMMAND
    assert generalized_inverse(mor(cyclic(2), cyclic(4), [[2]])).witness == IMAGE_NOT_SUMMAND


def test_search_method_agrees_on_small_homs():
    for U, M in [(cyclic(4), cyclic(2)), (cyclic(6), cyclic(6)), (module([2, 4]), cyclic(4))]:
        for f in hom_enumerate(U, M):
            a = generalized_inverse(f)
            b = generalized_inverse(f, method="search")
            assert bool(a) == bool(b) == has_inner_inverse(f)
            if b:
                assert is_geninv(f, b.h)


def test_rational_morphisms():
    V2, V3 = VectSpace(QQ, 2), VectSpace(QQ, 3)
    f = mor(V3, V2, [["1/2", 3, -1], [1, 6, -2]])
    h = generalized_inverse(f).h
    assert is_geninv(f, h)


def test_is_regular_pair_examples():
    assert not is_regular_pair(cyclic(4), cyclic(2))
    assert is_regular_pair(cyclic(6), cyclic(6))
    assert is_regular_pair_search(cyclic(6), cyclic(6))
    for a in range(3):
        for b in range(3):
            U, M = VectSpace(Fp(2), a), VectSpace(Fp(2), b)
            assert is_regular_pair(U, M)
            assert regular_pair_report(U, M, enumerate_fields=True)["regular"]


def test_regular_pair_report_witness():
    rep = regular_pair_report(cyclic(4), cyclic(2))
    assert rep["regular"] is False and rep["obstruction"] == KERNEL_NOT_SUMMAND
    assert not generalized_inverse(rep["witness"])


def test_regular_pair_budget():
    with pytest.raises(TooLarge):
        is_regular_pair(module([2, 2, 2]), module([2, 2, 2]), budget=100)


def test_sampled_mode_only_finds_real_counterexamples():
    rep = regular_pair_report(module([4, 4]), module([2, 4]), sample=50, seed=3)
    assert rep["regular"] is False
    assert not generalized_inverse(rep["witness"])
    assert regular_pair_report(cyclic(6), cyclic(6), sample=10)["regular"] is True


def test_is_regular_object_examples():
    assert not is_regular_object(cyclic(2))
    assert is_regular_object(zero_object(cyclic(2)))
    assert is_regular_object(cyclic(6, Zn(6)))
    assert not is_regular_object(module([0]))  # ×2 on Z has a non-summand image
    assert is_regular_object(VectSpace(Fp(3), 2))
    rep = regular_object_report(cyclic(2))
    assert rep["obstruction"] == KERNEL_NOT_SUMMAND


def test_transfer_examples():
    Z6, Z3 = cyclic(6, Zn(6)), cyclic(3, Zn(6))
    pi = mor(Z6, Z3, [[1]])
    assert is_regular_pair(Z6, Z6)
    assert regularity_transfer_check("epi", {"pi": pi, "M": Z6})
    assert is_regular_pair(Z3, Z6)
    # every subgroup of Z/6 stays Z/6-regular
    for d in (1, 2, 3, 6):
        sub = cyclic(d, Zn(6)) if d > 1 else zero_object(Z6)
        i = mor(sub, Z6, [[6 // d]]) if d > 1 else zero_morphism(sub, Z6)
        assert regularity_transfer_check("mono", {"i": i, "U": Z6})
        assert is_regular_pair(Z6, sub)
    U = cyclic(4)
    assert regularity_transfer_check("summand", {"i": identity(U), "p": identity(U), "M": cyclic(2)})
    with pytest.raises(NotEpi):
        regularity_transfer_check("epi", {"pi": mor(cyclic(2), cyclic(4), [[2]]), "M": U})
    with pytest.raises(BadSpec):
        regularity_transfer_check("other", {})


def test_central_geninv_examples():
    Z4, Z6 = cyclic(4), cyclic(6)
    assert central_geninv(mor(Z4, Z4, [[2]])) == (None, False)
    beta, dec = central_geninv(mor(Z6, Z6, [[3]]))
    assert beta == mor(Z6, Z6, [[3]]) and dec
    beta, dec = central_geninv(zero_morphism(Z4, Z4))
    assert beta.is_zero() and dec
    V = module([2, 2])
    with pytest.raises(NotCentral):
        central_geninv(mor(V, V, [[1, 1], [0, 1]]))


def test_central_geninv_beta_is_central_and_reflexive():
    for M in abelian_groups(12):
        ends = hom_enumerate(M, M)
        for a in ends:
            if not all(compose(a, e) == compose(e, a) for e in ends):
                continue
            beta, dec = central_geninv(a)
            assert (beta is not None) == dec
            if beta is not None:
                assert is_geninv(a, beta)
                assert all(compose(beta, e) == compose(e, beta) for e in ends)


def test_end_ring_examples():
    R = end_ring(cyclic(4))
    assert R.order == 4
    assert np.array_equal(R.mul_table, zmod_ring(4).mul_table)
    assert end_ring(zero_object(cyclic(2))).order == 1
    R = end_ring(module([2, 2]))
    assert R.order == 16 and is_vn_regular(R) and is_semiprime(R)
    assert center(R).order == 2


def test_end_ring_is_composition():
    M = module([2, 4])
    R = end_ring(M)
    ends = hom_enumerate(M, M)
    index = {f: end_index(R, f) for f in ends}
    assert sorted(index.values()) == list(range(R.order))
    assert index[identity(M)] == 1 and index[zero_morphism(M, M)] == 0
    for a, b in itertools.product(ends, repeat=2):
        assert R.mul(index[a], index[b]) == index[compose(a, b)]
        assert R.add(index[a], index[b]) == index[a + b]


# ------------------------------------------------------------ properties

SMALL = [G for G in abelian_groups(16)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.integers(0, 10**6))
def test_geninv_contract_and_characterization(U, M, seed):
    f = hom_sample(U, M, 1, seed=seed)[0]
    res = generalized_inverse(f)
    assert bool(res) == has_inner_inverse(f)
    if res:
        assert is_geninv(f, res.h)
        assert compose(compose(f, res.g), f) == f


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(0, 3), st.integers(0, 3), st.data())
def test_field_case_always_invertible(p, a, b, data):
    U, M = VectSpace(Fp(p), a), VectSpace(Fp(p), b)
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=a, max_size=a), min_size=b, max_size=b))
    f = mor(U, M, rows) if a and b else zero_morphism(U, M)
    res = generalized_inverse(f)
    assert res and is_geninv(f, res.h)


def test_pair_decision_matches_search_oracle():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randrange(2, 13)
        mods = modules_over(n, 12)
        U, M = rng.choice(mods), rng.choice(mods)
        assert is_regular_pair(U, M) == is_regular_pair_search(U, M)


def test_direct_sum_closure_small():
    mods = modules_over(6, 12)
    for U in mods:
        reg = [M for M in mods if is_regular_pair(U, M)]
        for M1, M2 in itertools.combinations_with_replacement(reg, 2):
            if M1.order * M2.order <= 36:
                assert is_regular_pair(U, direct_sum([M1, M2])[0])


def test_epi_splitting_on_regular_pairs():
    for U in modules_over(12, 12):
        for M in modules_over(12, 12):
            if is_regular_pair(U, M):
                for f in hom_enumerate(U, M):
                    if is_epi(f):
                        assert find_section(f) is not None


def test_projectivity_corollary_small():
    for n in (4, 6, 8, 9):
        for U in modules_over(n, 16):
            if not is_projective(U):
                continue
            for M in modules_over(n, 16):
                if is_regular_pair(U, M) and any(is_epi(f) for f in hom_enumerate(U, M)):
                    assert is_projective(M)


def test_end_ring_criterion_small():
    for U in abelian_groups(12):
        assert is_regular_pair(U, U) == is_vn_regular(end_ring(U))
