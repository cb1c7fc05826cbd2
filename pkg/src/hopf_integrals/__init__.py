"""Integrals and cointegrals for coideal subalgebras of finite-dimensional Hopf algebras."""

from .scalars import CycScalar, CyclotomicField, cyclotomic_polynomial, omega, embed
from .linalg import Matrix, Subspace
from .algebra import FinDimAlgebra
from .hopf import HopfAlgebra, GroupLike, build_group_algebra, verify_hopf_axioms
from .integrals import CoidealSubalgebra, induced_subalgebra, left_integrals, right_integrals
from .cointegrals import Cointegral, g_cointegrals
from .taft import TaftAlgebra, build_taft

__version__ = "0.1.0"
