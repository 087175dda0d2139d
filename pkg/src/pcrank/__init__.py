"""pcrank: strict rankings from multiplicative pairwise-comparisons matrices.

Building blocks:

* :mod:`pcrank.core` - canonical PC matrices, the log/exp duality, I/O.
* :mod:`pcrank.consistency` - triad scans and inconsistency indicators.
* :mod:`pcrank.ranking` - ranking condition, characteristic sign matrices,
  admissible loci and weight extraction.
* :mod:`pcrank.projection` - orthogonal-projection consistencization and
  before/after locus diagnostics.
* :mod:`pcrank.phi` - the ranking objective and its gradient-descent
  minimizer.
* :mod:`pcrank.confspace` - configuration-space metric and path lengths.
* :mod:`pcrank.harness` - reproducible Monte-Carlo instability experiments.

Hot kernels run from a compiled extension when available; set
PCRANK_PURE_PYTHON=1 to force the numpy fallback.
"""

from ._kernels import BACKEND, HAVE_SPEEDUPS
from .consistency import (
    IndicatorKind,
    is_consistent,
    koczkodaj_index,
    max_triad_deviation,
    smooth_index,
    triads,
)
from .core import (
    AdditivePCMatrix,
    PCMatrix,
    UpperTriangleVector,
    from_additive,
    from_upper_coords,
    new_pc_matrix,
    pc_from_upper_logs,
    pc_from_weights,
    to_additive,
    upper_coords,
)
from .errors import PcrankError
from .harness import InstabilityStats, instability_experiment, random_pc_matrix
# the objective value function itself lives at pcrank.phi.phi; re-exporting
# it here would shadow the submodule name
from .phi import PhiConfig, PhiTrajectory, Termination, minimize_phi, phi_gradient
from .projection import LocusChangeReport, consistencize, locus_change_report, orthogonal_project
from .ranking import (
    CharacteristicRankingMatrix,
    LociStats,
    LocusIndex,
    Ranking,
    admissible_permutation,
    characteristic_matrix,
    enumerate_loci,
    is_admissible_locus,
    locus_index,
    ranking_from_matrix,
    satisfies_r_condition,
    weights_from_consistent,
)

__version__ = "0.1.0"
