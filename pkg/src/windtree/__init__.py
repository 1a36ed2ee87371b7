"""Exact and simulated diffusion rates for periodic wind-tree billiards.

The package covers square-tiled surfaces and their SL(2,Z) orbits,
unfolding of integer tables, Siegel-Veech constants of genus-zero strata,
the binomial identities behind the closed form, and a billiard simulator.
"""

from .errors import WindTreeError
from .exact import SVValue, delta_asymptotic, delta_closed_form, double_factorial, double_factorial_ratio
from .kernels import BACKEND
from .origami import Origami, genus, horizontal_cylinders, singularity_profile
from .profile import SingularityProfile
from .siegel_veech import lambda_plus_pipeline
from .table import WindTreeTable, family_table, unfold_to_origami
from .teichcurve import orbit, sum_lyapunov

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Origami",
    "SVValue",
    "SingularityProfile",
    "WindTreeError",
    "WindTreeTable",
    "delta_asymptotic",
    "delta_closed_form",
    "double_factorial",
    "double_factorial_ratio",
    "family_table",
    "genus",
    "horizontal_cylinders",
    "lambda_plus_pipeline",
    "orbit",
    "singularity_profile",
    "sum_lyapunov",
    "unfold_to_origami",
]
