"""Level-l theta series of lattices from codes over F4 and F2 x F2."""

from .code_theta import compare_levels, theta_of_code, theta_of_code_enumerate
from .coset_theta import CosetLabel, check_coset_sum_identity, coset_theta_enumerate, coset_theta_formula
from .exactq import HomogPoly, LinearSystem, QSeries, SolutionSpace, solve_exact
from .quadfield import Level, RingKind, make_level
from .recovery import RecoveryProblem, recover, search_codes_for_theta
from .ringcodes import LinearCode, code_from_binary_pair, cwe, dual, span, swe

__version__ = "0.1.0"
