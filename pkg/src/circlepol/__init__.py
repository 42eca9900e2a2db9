"""Discrete potentials, polarization, and extremal point configurations on
the unit circle.

The headline computation: for any nonincreasing convex kernel of the
geodesic distance, equally spaced points maximize the minimum of the
potential over the circle.  This package evaluates such potentials, finds
their minima, constructs the gap transport and homotopy underlying that
fact, and provides exact rational closed forms, energy identities, and
asymptotics for the inverse-power kernels.
"""

from .asymptotics import (AsymptoticRegime, asymptotic_ratio, classify_regime,
                          dominant_term, gamma_real, zeta_real)
from .circle_config import (TWO_PI, Arc, Configuration, apply_transport,
                            config_from_gaps, config_from_json, config_to_json,
                            coordinate_move, equally_spaced, geodesic_distance,
                            load_config_file, pair_move, reflect, rotate)
from .energy import (config_energy, energy_equally_spaced, energy_numeric_min,
                     polarization_via_energy)
from .errors import (DegenerateArcError, InvalidGapVectorsError,
                     OrderingBrokenError, PiGradeMismatchError,
                     StepTooLargeError)
from .exact_series import (ExactPolynomial, PiGradedSeries, RationalSeries,
                           bernoulli_numbers, exact_polarization_polynomial,
                           generalized_bernoulli_value, log_sinc_series,
                           sinc_power_coefficients, zeta_even_exact)
from .kernels import (CheckResult, Kernel, ValidationReport, custom_kernel,
                      log_kernel, power_kernel, riesz_kernel, validate_kernel)
from .optimizer import (OptimizeOptions, OptimizeResult, RestartRecord,
                        StrictnessReport, maximize_polarization, nelder_mead,
                        perturbation_test, project_gaps)
from .potential import (PolarizationResult, arc_minimum, minimum_on_arc,
                        polarization, potential_profile, potential_value,
                        potential_values)
from .transport import (InequalityReport, TransportPlan,
                        check_pair_inequality, homotopy_config, min_curve,
                        solve_gap_system, solve_transport)

__version__ = "0.1.0"

__all__ = [
    "TWO_PI",
    "Arc",
    "AsymptoticRegime",
    "CheckResult",
    "Configuration",
    "DegenerateArcError",
    "ExactPolynomial",
    "InequalityReport",
    "InvalidGapVectorsError",
    "Kernel",
    "OptimizeOptions",
    "OptimizeResult",
    "OrderingBrokenError",
    "PiGradeMismatchError",
    "PiGradedSeries",
    "PolarizationResult",
    "RationalSeries",
    "RestartRecord",
    "StepTooLargeError",
    "StrictnessReport",
    "TransportPlan",
    "ValidationReport",
    "apply_transport",
    "arc_minimum",
    "asymptotic_ratio",
    "bernoulli_numbers",
    "check_pair_inequality",
    "classify_regime",
    "config_energy",
    "config_from_gaps",
    "config_from_json",
    "config_to_json",
    "coordinate_move",
    "custom_kernel",
    "dominant_term",
    "energy_equally_spaced",
    "energy_numeric_min",
    "equally_spaced",
    "exact_polarization_polynomial",
    "gamma_real",
    "generalized_bernoulli_value",
    "geodesic_distance",
    "homotopy_config",
    "load_config_file",
    "log_kernel",
    "log_sinc_series",
    "maximize_polarization",
    "min_curve",
    "minimum_on_arc",
    "nelder_mead",
    "pair_move",
    "perturbation_test",
    "polarization",
    "polarization_via_energy",
    "potential_profile",
    "potential_value",
    "potential_values",
    "power_kernel",
    "project_gaps",
    "reflect",
    "riesz_kernel",
    "rotate",
    "sinc_power_coefficients",
    "solve_gap_system",
    "solve_transport",
    "validate_kernel",
    "zeta_even_exact",
    "zeta_real",
]
