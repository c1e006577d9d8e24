import itertools
import sys
from pathlib import Path

import pytest

from regobj import Fp, FinSet, Matrix, QQ, VectSpace, ZZ, Zn, cyclic, make_morphism, module

DATA = Path(__file__).parent / "data"


def mor(dom, cod, entries):
    """Morphism from user-coordinate entries (a list of rows)."""
    ring = dom.base if hasattr(dom, "base") else dom.ring
    rows = len(entries)
    cols = len(entries[0]) if entries else 0
    return make_morphism({
        "domain": dom.to_json(),
        "codomain": cod.to_json(),
        "matrix": Matrix(ring, entries, rows, cols).to_json(),
    })


def all_matrices(ring_size, rows, cols):
    for flat in itertools.product(range(ring_size), repeat=rows * cols):
        yield [list(flat[r * cols:(r + 1) * cols]) for r in range(rows)]


@pytest.fixture
def data_dir():
    return DATA


__all__ = ["mor", "all_matrices", "Fp", "FinSet", "QQ", "VectSpace", "ZZ", "Zn", "cyclic", "module"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.CRITERIA):
        if number not in mod.RESULTS:
            continue
        ok, detail = mod.RESULTS[number]
        terminalreporter.write_line(
            f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {mod.CRITERIA[number]} -- {detail}")
