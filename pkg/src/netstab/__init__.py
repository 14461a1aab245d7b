"""Stability analysis of stock-market network identification.

Compares two edge-weight measures, sample Pearson correlation and
sign-coincidence frequency, by how stably they recover network structures
(threshold graphs, cliques, spanning trees) when returns follow a
Gaussian / Student-t mixture.
"""

from .divergence import (
    degree_divergence,
    histogram_divergence,
    set_divergence,
    topology_match,
)
from .errors import (
    BinMismatchError,
    ConfigError,
    DegenerateVariableError,
    KindMismatchError,
    MatrixFormatError,
    MeasureRangeError,
    NetstabError,
    NotPositiveDefiniteError,
    PriceFormatError,
    SampleSizeError,
    ShapeMismatchError,
)
from .fixtures import FIXTURE_IDS, fixture_path
from .ingestion import (
    PriceTable,
    build_truth,
    load_prices,
    repair_positive_definite,
    to_returns,
)
from .measures import (
    DependenceMatrix,
    MeasureKind,
    hypothesis_count_market_graph,
    load_dependence_csv,
    pearson_sample,
    pearson_true,
    save_dependence_csv,
    sign_probability,
    sign_sample,
    sign_true,
    spanning_tree_count,
)
from .montecarlo import (
    CenterMode,
    Characteristic,
    CurvePoint,
    ExperimentConfig,
    StabilityCurve,
    load_config,
    rng_for_replication,
    run_experiment,
    summarize_flatness,
    write_curves_csv,
)
from .sampler import (
    MixtureModel,
    SampleMatrix,
    cholesky,
    draw_gaussian,
    draw_mixture,
    draw_student,
    load_scale_matrix,
)
from .structures import (
    DegreeDistribution,
    EdgeWeightHistogram,
    MarketGraph,
    SetKind,
    SpanningTree,
    TreeTopology,
    VertexSet,
    complement,
    degree_distribution,
    edge_histogram,
    market_graph,
    max_clique,
    max_independent_set,
    maximum_spanning_tree,
    tree_topology,
)

__version__ = "0.1.0"
