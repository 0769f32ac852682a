"""Edge geometry of regular N-gons under the outer-billiards map.

Exact cyclotomic arithmetic (field), First Families and their derived
constructions (family), the tau/Df/Dc maps with certified exact orbits
(dynamics), closed-form generation periods (periods), algebraic
identification in the scaling field (fieldid), and point-cloud/SVG output
(cloudio, svg, cli).
"""

from .field import CycloNum, RationalPoly, SignCertificate, certified_sign, \
    root_of_unity, trig, to_float
from .family import (
    Tile, NGonSpec, MutationSpec, StarPointTable, LadderPoint, FamilyContext,
    build_ngon, heights_and_scales, family_tiles, star_points, s2_family,
    predicted_ds, web_step, mutation_spec, weave, dk_ladder, satellite_center,
    two_star_solve, sk_period, ngon_spec, volunteer_ds2,
)
from .dynamics import (
    MapSpec, OrbitResult, PointCloud, tau_step, find_period, web_generate,
    candle_trace, df_step, dc_step, tau_benchmark,
)
from .periods import (
    RecurrenceSpec, d_period, m_period, recurrence_solve, d3_count, ratio,
)
from .fieldid import IdentifyRequest, IdentifiedPoly, identify, eval_poly, \
    minimal_poly

__version__ = "0.1.0"
