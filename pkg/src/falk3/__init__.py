"""Exact computation of the third Falk invariant of signed graphic arrangements.

A signed graph on vertices 1..ell defines the hyperplanes x_i - x_j
(positive edge), x_i + x_j (negative edge) and x_i (loop).  The package
computes the third invariant phi3 two independent ways -- an exact-rank
oracle over the degree-3 exterior algebra and a closed-form subgraph
census, valid when no B2 sub-arrangement is present -- and cross-validates
them.
"""

from .algebra import (
    Triangle,
    boundary,
    dim_a2,
    dim_a2_rank,
    dim_span_f3,
    ideal3_rows,
    phi3_from_dims,
    phi3_oracle,
    rank_i3_2,
    rows_to_matrix,
    span_f3_rows,
    triangles,
    wedge,
)
from .census import Census, census, dim_i3_2_formula, phi3_formula
from .errors import (
    B2Present,
    DuplicateEdge,
    FalkError,
    InternalKindMismatch,
    LabelOutOfRange,
    NotACycle,
    ParseError,
    RankMismatch,
    SelfPairEdge,
    UnderlyingGraphMismatch,
    VertexOutOfRange,
)
from .generate import GenConfig, enumerate_all, random_no_b2, sample_stream
from .graph_io import parse_graph, parse_sigma, serialize
from .graphs import (
    Edge,
    SignedGraph,
    complete_doubled,
    complete_positive,
    loop,
    loop_apex_triangle,
    neg,
    pos,
)
from .rank import bigint_rank, exact_rank, modp_rank, warmup
from .report import FalkReport, build_report, render_text, to_json_dict

__version__ = "0.1.0"
