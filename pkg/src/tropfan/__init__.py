"""Graphic matroids, Bergman fans in the chains-of-flats subdivision, and
moduli fans of radially aligned graphically stable tropical curves."""

from .bergman import (
    BalanceReport,
    Cone,
    Fan,
    QuotientVector,
    bergman_fan,
    fan_to_json,
    fans_equal,
    is_balanced,
    make_cone,
    primitive_normal,
    project_fan,
    project_vector,
    ray_of_flat,
)
from .graphs import (
    EdgeSet,
    Graph,
    complement,
    components,
    graph_rank,
    induced_subgraph,
    is_complete_multipartite,
    parse_graph,
    spanning_forest,
)
from .matroid import (
    AxiomReport,
    ChainOfFlats,
    Flat,
    SetSystem,
    all_chains,
    bases,
    circuits,
    closure,
    closure_table,
    enumerate_chains,
    enumerate_flats,
    flats_lattice,
    independent_sets,
    is_independent,
    proper_flats,
    rank,
    rank_table,
    verify_matroid_axioms,
)
from .tropmoduli import (
    InjectivityReport,
    MetricType,
    QnRelationsReport,
    QnVector,
    RadialType,
    TropicalType,
    caterpillar_cof,
    chain_gamma_stable,
    chain_to_json,
    count_stable_types,
    dist_vector,
    enumerate_types,
    flat_gamma_stable,
    is_gamma_stable,
    moduli_fan_rad,
    psi_cof_to_radial,
    psi_linear,
    psi_radial_to_cof,
    qn_relations_check,
    radial_alignments,
    radial_face_census,
    radial_faces,
    radial_from_json,
    radial_to_json,
    reduce,
    rho_split,
    splits,
    star_type,
    tropical_type,
    type_from_json,
    type_to_json,
    verify_injectivity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
