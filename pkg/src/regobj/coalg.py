"""Finite-dimensional coalgebras over F_p, handled through their dual algebras.

A coalgebra C of finite dimension is determined by the algebra A = C*
(comultiplication is the transpose of multiplication). Right C-comodules
are the same as left A-modules; C itself becomes the left A-module A* with
(a·φ)(x) = φ(x·a).
"""

import numpy as np

from .errors import BadSpec, TooLarge
from .graded import (
    DEFAULT_BUDGET, FiniteGroup, GradedAlgebra, _all_have_inner_inverse, as_ring,
    field_power, group_algebra, hom_basis, matrix_algebra, prime_field_extension,
    product_algebra, truncated_poly, upper_triangular,
)
from .rings import is_nilpotent_ideal, is_two_sided_ideal, is_vn_regular, jacobson_radical


class FiniteCoalgebra:
    """A coalgebra presented by its dual algebra (trivially graded)."""

    def __init__(self, dual, name=None):
        if not isinstance(dual, GradedAlgebra):
            raise BadSpec("the dual must be a structure-constant algebra")
        if dual.group.order != 1 and any(d != dual.group.e for d in dual.deg):
            raise BadSpec("the dual algebra must be trivially graded")
        self.dual = dual
        self.name = name or dual.name

    @property
    def dim(self):
        return self.dual.dim

    @property
    def p(self):
        return self.dual.p

    def comultiplication(self):
        """Δ(c_k) = Σ_{i,j} mul[i][j][k] c_i ⊗ c_j on the dual basis, as (k, i, j)."""
        return np.transpose(self.dual.mul, (2, 0, 1))

    def counit(self):
        """ε(c_i) = coefficient of b_i in the unit of the dual."""
        return self.dual.one.copy()

    def to_json(self):
        return {"dual": self.dual.to_json()}

    @classmethod
    def from_json(cls, obj):
        try:
            dual = obj["dual"]
        except (KeyError, TypeError):
            raise BadSpec("coalgebra JSON needs a 'dual' algebra") from None
        return cls(GradedAlgebra.from_json(dual))

    def __repr__(self):
        return f"FiniteCoalgebra({self.name or ''} dim={self.dim}, p={self.p})"


def _check_budget(C, budget):
    if C.dual.order > budget:
        raise TooLarge("coalgebra dual enumeration", C.dual.order, budget)


def is_cosemisimple(C, budget=DEFAULT_BUDGET):
    """The dual algebra has zero Jacobson radical."""
    _check_budget(C, budget)
    return jacobson_radical(as_ring(C.dual, budget)) == [0]


def dual_module_action(A):
    """Action matrices of A on A*: (a·φ)_i = Σ_k mul[i][a][k] φ_k."""
    return np.transpose(A.mul, (1, 0, 2))


def is_regular_comodule_self(C, budget=DEFAULT_BUDGET):
    """C is A-regular as a left A-module: every A-map A -> C has an inner inverse."""
    _check_budget(C, budget)
    A = C.dual
    d, p = A.dim, A.p
    on_A = A.left_matrices()
    on_C = dual_module_action(A)
    fs = hom_basis(p, on_A, on_C, d, d).all(budget)
    gs = hom_basis(p, on_C, on_A, d, d).all(budget)
    return _all_have_inner_inverse(fs, gs, p)


def thm_cosemisimple_equiv(C, budget=DEFAULT_BUDGET):
    """Whether cosemisimplicity and self-regularity agree on C."""
    return is_cosemisimple(C, budget) == is_regular_comodule_self(C, budget)


def radical_is_nilpotent_ideal(C, budget=DEFAULT_BUDGET):
    R = as_ring(C.dual, budget)
    J = jacobson_radical(R)
    return is_two_sided_ideal(R, J) and is_nilpotent_ideal(R, J)


def semisimple_dual_is_regular(C, budget=DEFAULT_BUDGET):
    """Cosemisimple ⟹ the dual algebra is von Neumann regular."""
    if not is_cosemisimple(C, budget):
        return True
    return is_vn_regular(as_ring(C.dual, budget))


def family():
    """Curated dual algebras: group algebras, truncated polynomials, products
    of fields, field extensions, triangular and 2×2 matrix algebras."""
    out = []
    T = FiniteGroup.trivial()
    for p in (2, 3):
        algs = [
            field_power(p, 1), field_power(p, 2), field_power(p, 3),
            group_algebra(p, FiniteGroup.cyclic(2), graded=False),
            group_algebra(p, FiniteGroup.cyclic(3), graded=False),
            truncated_poly(p, 2), truncated_poly(p, 3),
            product_algebra(field_power(p, 1), truncated_poly(p, 2)),
            prime_field_extension(p, 2), prime_field_extension(p, 3),
            upper_triangular(p, T, 0),
            matrix_algebra(p, 2),
        ]
        out.extend(FiniteCoalgebra(_flatten(a)) for a in algs)
    return out


def _flatten(A):
    """Re-grade over the trivial group (all members are already in degree e)."""
    if A.group.order == 1:
        return A
    return GradedAlgebra(A.p, FiniteGroup.trivial(), [0] * A.dim, A.mul, A.one, name=A.name)
