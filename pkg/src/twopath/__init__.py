"""Which-path information, fringe visibility and complementarity in
two-path interference."""

from .decoherence import (
    EmissionModel,
    OverlapResult,
    QuadratureSpec,
    overlap_oracle,
    sinc_overlap,
    visibility_after_emission,
)
from .double_slit import (
    FringeGeometry,
    PatternPoint,
    density,
    interference_information_integral,
    pair_information,
)
from .information import (
    ComplementaritySplit,
    InformationTriple,
    complementarity_split,
    info_measures,
    shannon_sum,
)
from .interferometer import (
    OutputAmplitudes,
    PortProbabilities,
    output_amplitudes,
    port_probabilities,
    port_probabilities_with_decoherence,
)
from .montecarlo import (
    ExperimentRun,
    Mode,
    empirical_information,
    estimate_visibility,
    sample_pattern,
    sample_ports,
)
from .states import DetectorOverlap, TwoPathState, make_state, visibility

__version__ = "0.1.0"
