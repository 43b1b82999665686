"""Calculator for the normal-subgroup spaces of metabelian groups.

The package is organised bottom-up: ordinals, module lengths, the rank rule
engine, the Laurent-ring arithmetic behind the worked examples, the
Bieri-Strebel invariant, a catalog of named groups and a brute-force oracle.
"""

from .errors import (
    CBCalcError,
    ParseError,
    DescriptorError,
    NotComputable,
    VerificationFailure,
)
from .ordinal import Ordinal, ZERO, ONE, OMEGA, add, natural_sum, reduce, degree, omega_power, parse_ordinal, format_ordinal
from .modlen import (
    Critical,
    TorsionFree,
    Finite,
    Series,
    DirectSum,
    Extension,
    OrdinalInterval,
    length,
    reduced_length,
    krull_dim,
)
from .grouprank import COND, UNKNOWN, cb_rank, cb_space, cb_external, format_rank
from .laurent import LaurentRing, LaurentElement, MagnusMatrix
from .dsl import parse_dsl, parse_group, parse_module, parse_bs_module
from . import catalog, oracle, sigma

__version__ = "0.1.0"
