"""Plane-saturated subgraphs of maximal planar graphs."""
from .constructions import (
    BoundReport,
    choose_bound_vertex,
    fig4_witness,
    fig7_witness,
    psr_gap_construction,
    psr_wheel_construction,
    wheel_coloring_bound,
)
from .drawing import (
    AMBIENT,
    PlaneDrawing,
    addable_pairs,
    compute_regions,
    decode_drawing,
    drawing_from_rotation,
    empty_drawing,
    encode_drawing,
    export_dot,
    insert_edge,
    place_isolated,
    trace_faces,
    validate_drawing,
)
from .errors import (
    ConstructionError,
    DecodeError,
    DrawingError,
    GraphError,
    NotAddableError,
    PlaneSatError,
    PreconditionError,
)
from .graph import (
    Coloring,
    EmbeddingMap,
    LabeledGraph,
    decode_graph,
    degree_gap_vertex,
    double_wheel,
    encode_graph,
    four_coloring,
    make_graph,
    neighbor_cycle,
    random_triangulation,
    spanning_embedding,
    verify_triangulation,
)
from .kernels import BACKEND
from .saturation import (
    SaturationReport,
    close_unlabeled,
    is_labeled_saturated,
    is_unlabeled_saturated,
    saturate_labeled,
    saturate_unlabeled,
)
from .search import (
    SearchResult,
    cross_check,
    enumerate_drawings,
    min_labeled_saturated,
    min_unlabeled_saturated,
)

__version__ = "0.1.0"
