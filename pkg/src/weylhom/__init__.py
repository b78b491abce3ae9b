"""Exact homomorphism spaces between Weyl modules of GL_n over prime fields."""

from .errors import InvalidInputError, ResourceCapError, WeylhomError
from .combinatorics import (Partition, Tableau, Weight, conjugate, dominates,
                            enumerate_rsst, enumerate_sst, in_lambda_g, in_P,
                            kostka, shift_tableau)
from .modp import FpScalar, HomStats, binom_mod, hom_stats, lp
from .weyl import (FormalSum, StraightenContext, WeylVector, apply_phi,
                   box_apply, straighten, two_row_identity, weight_space)
from .pairing import PairingContext
from .homspace import (HomSpaceResult, HomVector, box_image_formula, build_psi,
                       hom_dim_oracle, hom_space, is_hom)
from .theorems import (Verdict, carter_payne_witnesses, check_nonvanishing,
                       check_stability, sweep_dk)

__version__ = "0.1.0"

__all__ = [
    "InvalidInputError", "ResourceCapError", "WeylhomError",
    "Partition", "Weight", "Tableau", "conjugate", "dominates",
    "enumerate_rsst", "enumerate_sst", "kostka", "in_P", "in_lambda_g",
    "shift_tableau",
    "FpScalar", "HomStats", "binom_mod", "hom_stats", "lp",
    "FormalSum", "WeylVector", "StraightenContext", "box_apply",
    "weight_space", "straighten", "two_row_identity", "apply_phi",
    "PairingContext",
    "HomVector", "HomSpaceResult", "box_image_formula", "hom_space",
    "build_psi", "is_hom", "hom_dim_oracle",
    "Verdict", "check_stability", "check_nonvanishing",
    "carter_payne_witnesses", "sweep_dk",
    "__version__",
]
