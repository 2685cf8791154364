"""Finite topologies, the lattice of topologies and ordinal compactification."""

from .compactify import (
    EventuallyConstantMap,
    PipelineReport,
    all_continuous_maps,
    extend_eventually_constant,
    ordinal_indexing,
    run_pipeline,
)
from .finspace import (
    Topology,
    closure,
    derived_set,
    generate_from_subbasis,
    interior,
    is_dense,
    is_limit_point,
    make_topology,
    standard_topology,
)
from .lattice import (
    Chain,
    canonical_form,
    classify_chain,
    deformation_chain,
    enumerate_topologies,
    homotopy_eval,
    is_refinement,
    join,
    meet,
)
from .ordinal import (
    CoverFamily,
    IntervalSet,
    Ordinal,
    OrdinalSpace,
    alexandroff_open,
    closure_o,
    derived_set_o,
    finite_subcover,
    is_dense_o,
    is_open,
)
from .separation import SeparationProfile, classify

__version__ = "0.1.0"
