"""Exact generalized inverses and U-regularity decisions for small algebraic categories."""

from .abcat import (
    FinSet, FPModule, Morphism, SetMap, VectSpace, cyclic, find_retraction, find_section,
    geninv_function, make_morphism, make_object, module,
)
from .coalg import FiniteCoalgebra, is_cosemisimple
from .errors import (
    BadSpec, EmptyDomain, InfiniteHom, MixedVariant, NoInverse, NoSolution, NotCentral,
    NotEpi, NotFinite, NotMono, RegobjError, ShapeMismatch, TooLarge, WrongBase, WrongRing,
)
from .exact import ZZ, QQ, Fp, Zn
from .graded import (
    FiniteGroup, GradedAlgebra, GradedModule, graded_hom, is_gr_regular, is_Re_regular,
    is_suspension_regular, smash_product,
)
from .matops import Matrix, hnf, snf
from .regular import (
    central_geninv, end_ring, generalized_inverse, is_regular_object, is_regular_pair,
)
from .rings import FiniteRing, is_semiprime, is_vn_regular, jacobson_radical

__version__ = "0.1.0"

__all__ = [
    "FinSet",
    "FPModule",
    "Morphism",
    "SetMap",
    "VectSpace",
    "cyclic",
    "find_retraction",
    "find_section",
    "geninv_function",
    "make_morphism",
    "make_object",
    "module",
    "BadSpec",
    "EmptyDomain",
    "InfiniteHom",
    "MixedVariant",
    "NoInverse",
    "NoSolution",
    "NotCentral",
    "NotEpi",
    "NotFinite",
    "NotMono",
    "RegobjError",
    "ShapeMismatch",
    "TooLarge",
    "WrongBase",
    "WrongRing",
    "FiniteGroup",
    "GradedAlgebra",
    "GradedModule",
    "graded_hom",
    "is_gr_regular",
    "is_Re_regular",
    "is_suspension_regular",
    "smash_product",
    "central_geninv",
    "end_ring",
    "generalized_inverse",
    "is_regular_object",
    "is_regular_pair",
    "FiniteCoalgebra",
    "is_cosemisimple",
    "ZZ",
    "QQ",
    "Fp",
    "Zn",
    "Matrix",
    "hnf",
    "snf",
    "FiniteRing",
    "is_semiprime",
    "is_vn_regular",
    "jacobson_radical",
]
