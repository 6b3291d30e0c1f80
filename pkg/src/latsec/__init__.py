"""latsec: lattice coding toolkit for fading and MIMO wiretap channels.

Core objects: :class:`~latsec.lattices.Lattice` and
:class:`~latsec.lattices.MatrixLattice` (geometry and enumerative
invariants), lattice Gaussian measures (flatness factor, smoothing
parameter, exact discrete-Gaussian sampling), algebraic factories (number
fields, cyclic division algebras), the nested-lattice wiretap scheme, and
the fading/MIMO channel simulator.
"""

from .errors import (ConfigError, ConsistencyError, EnumerationLimit,
                     InvalidLattice, LatsecError, NestingError,
                     NotSmoothEnough, TailToleranceError)
from .gaussians import (DiscreteGaussianSampler, GaussianSpec, banaszczyk_tail,
                        flatness_factor, flatness_factor_grid,
                        linear_transform_check, regev_mixture_check,
                        smoothing_parameter, subgaussian_mgf_check)
from .lattices import Lattice, MatrixLattice, devectorize, vectorize
from .numberfields import (FractionalIdealBasis, NumberFieldCtx,
                           codifferent_ideal, codifferent_lattice,
                           ideal_lattice)
from .algebras import CyclicAlgebraCtx, RelativeExtension, algebra_codifferent, golden_algebra
from .rates import (GapConstants, RateBudget, achievable_rates,
                    compound_sets_check, rate_constants)
from .wiretap import WiretapCode, build_code, secrecy_threshold_check
from .channels import (ChannelRealization, FadingSpec, decode_map,
                       draw_channel, error_prob_mc, eve_observe,
                       leakage_estimate, lln_diagnostic, mmse_gdfe)

__version__ = "0.1.0"
