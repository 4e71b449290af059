"""Ergodic averages of polynomial orbits in primes on a-adic groups:
exact truncated arithmetic, dual characters, generalized Gauss-sum
multipliers, prime Weyl sums, and the multiplier-predicted limits."""

from .adic import (AdicInt, Digits, add_carry, add_mod, embed, eval_poly,
                   from_digits, include_in_window, is_generator, mul, neg,
                   rebase, scale, to_digits, unrebase)
from .basis import Basis, parse_basis
from .characters import (Character, ReducedPhase, char_eval, char_value,
                         parse_character, psi_restrict, reduce_phase,
                         unit_phase)
from .ergodic import (ComparisonReport, CylinderFunction, Spectrum, compare,
                      cylinder_from_dict, cylinder_to_dict, dft,
                      empirical_average, idft, predicted_limit, torus_average,
                      translate)
from .multipliers import (BudgetError, MultiplierValue, complete_exp_sum,
                          multiplier_natural, multiplier_prime, wiener_energy)
from .primes import prime_count, primes_in_range
from .weyl import (OrbitHistogram, adic_weyl_sum, orbit_histogram,
                   torus_weyl_sum)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
