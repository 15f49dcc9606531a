"""Exact computations with graded Frobenius superalgebras and the structures
built from them: the cocenter and diamond product, the Lie superalgebra W(A),
PBW normal forms, affine wreath product algebras and Sym(A)."""

from .algebra import AlgebraData, AxiomError, FrobeniusAlgebra, build_algebra, load_algebra, rescale_trace
from .builtins import builtin, standard_algebras
from .kernels import BACKEND
from .pbw import UElement, normal_order
from .symfunc import SymElement, sym_functions
from .verify import SUITES, run_suite
from .walgebra import WElement, bracket
from .wreath import TruncatedCocenter, WreathAlgebra, WreathElement

__version__ = "0.1.0"

__all__ = [
    "AlgebraData",
    "AxiomError",
    "BACKEND",
    "FrobeniusAlgebra",
    "SUITES",
    "SymElement",
    "TruncatedCocenter",
    "UElement",
    "WElement",
    "WreathAlgebra",
    "WreathElement",
    "bracket",
    "build_algebra",
    "builtin",
    "load_algebra",
    "normal_order",
    "rescale_trace",
    "run_suite",
    "standard_algebras",
    "sym_functions",
]
