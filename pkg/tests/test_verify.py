import json

import pytest

from regobj import verify
from regobj.families import abelian_groups, invariant_factor_lists, modules_over


def test_suite_names():
    assert verify.SUITES == ("basic-transfer", "char-equivalence", "direct-sum", "central-lemma",
                             "regular-objects", "end-rings", "graded", "coalgebra")
    with pytest.raises(ValueError):
        verify.suite_cases("nope", 0)


def test_abelian_group_counts():
    # number of abelian groups of order n, n = 1..16 (partition-count products)
    expected = [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]
    assert [len(invariant_factor_lists(n)) for n in range(1, 17)] == expected
    assert len(abelian_groups(16)) == sum(expected)
    for inv in invariant_factor_lists(72):
        assert all(b % a == 0 for a, b in zip(inv, inv[1:]))


def test_modules_over_are_killed_by_n():
    for n in range(2, 13):
        for M in modules_over(n, 16):
            assert M.order <= 16 and all(n % d == 0 for d in M.moduli)


def test_direct_sum_cases_are_seeded():
    a = verify.suite_cases("direct-sum", 42)
    assert len(a) == 400
    assert sum(c["what"] == "sum" for c in a) == 200
    assert a == verify.suite_cases("direct-sum", 42)
    assert a != verify.suite_cases("direct-sum", 43)
    for c in a:
        assert 2 <= c["n"] <= 12
        for k in "ABC":
            order = 1
            for d in c[k]:
                order *= d
            assert order <= 16 and all(c["n"] % d == 0 for d in c[k])


def test_exhaustive_suites_ignore_seed():
    for name in ("char-equivalence", "central-lemma", "end-rings", "graded", "coalgebra"):
        assert verify.suite_cases(name, 0) == verify.suite_cases(name, 99)


def test_case_descriptors_are_json():
    for name in verify.SUITES:
        cases = verify.suite_cases(name, 1)
        assert json.loads(json.dumps(cases)) == cases


def test_report_independent_of_jobs():
    one = verify.dumps(verify.run("coalgebra", seed=1, jobs=1))
    two = verify.dumps(verify.run("coalgebra", seed=1, jobs=2))
    assert one == two
    rep = json.loads(one)
    assert rep["failures"] == 0 and rep["suites"][0]["checks"] > 0


def test_small_suites_pass():
    rep = verify.run("end-rings", seed=0)
    assert rep["failures"] == 0 and rep["suites"][0]["cases"] == 25
