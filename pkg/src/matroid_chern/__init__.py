"""Chern numbers of matroids from CSM cycles on Bergman fans and from closed forms."""

from .analysis import (ChernPair, TheoremReport, c1sq_alt, chern_rank3, conjecture_check,
                       melchior_gap, pg_chern, profile_identity_holds, uniform_chern,
                       verify_positivity, verify_ratio, verify_uniform_bounds)
from .bergman import (BergmanFan, MinkowskiWeight, chains, check_balanced, csm_cycle,
                      csm_weight, fundamental_class, ray, vertex_weight)
from .canon import KERNEL, canonical_family, matroid_canonical_form
from .corpus import builtin
from .errors import *  # noqa: F401,F403
from .geography import enumerate_rank3, geography, geography_csv, linear_spaces
from .intersection import (PLFunction, basis_pl, chern_number, divisor_apply,
                           exponent_vectors, lift)
from .lattice import (CharPoly, FlatLattice, RankTwoProfile, beta, beta_interval, char_poly,
                      mobius, rank2_profile)
from .matroid import Matroid, from_bases, from_rank2_flats, pg2, uniform
from .serialize import dumps, load, loads

__version__ = "0.1.0"
