"""Rainbow independent sets: exact solvers, proof-driven witness
algorithms, extremal constructions, and the exact threshold f_G(n, m).

A colored family is an indexed list of independent n-sets of a host
graph; a rainbow independent m-set picks one vertex from each of m
distinct indices so that the picks are pairwise nonadjacent. The
package computes these exactly, extracts them by the constructive
arguments behind the classical upper bounds (Drisko-type, claw-free,
chordal, colourable, bounded-degree, Ramsey), builds the matching
extremal families, and measures thresholds exactly on small graphs.
"""

from .bitset import as_mask, bits, mask_of, popcount, to_tuple
from .families import (
    CertificationError,
    ColoredFamily,
    InvalidSelection,
    PreconditionViolation,
    RainbowSelection,
    validate_selection,
)
from .graphs import (
    Digraph,
    Graph,
    Pattern,
    bipartition,
    complete_graph,
    complete_multipartite,
    components,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enum_independent_sets,
    find_simplicial,
    first_independent_subset,
    induces_bipartite,
    is_chordal,
    is_complete_multipartite,
    is_independent,
    k_colorable,
    line_graph,
    make_graph,
    max_degree,
    path_graph,
)
from .solver import (
    BudgetExceeded,
    brute_rainbow,
    find_rainbow,
    greedy_maximal_rainbow,
    max_rainbow_size,
    rainbow_masks,
)
from .reductions import (
    RepeatingGraph,
    Sunflower,
    column_digraph,
    digraph_condition_a,
    find_repeating_subfamily,
    find_sunflower,
    is_repeating,
    sunflower_reduce_rainbow,
)
from .witnesses import (
    chordal_rainbow,
    clawfree_rainbow,
    cliquepartition_rainbow,
    colourable_rainbow,
    degree2_rainbow,
    maxdeg_rainbow_pair,
    ramsey_maximal_rainbow,
    repeating_diag_rainbow,
    staircase_colourable_rainbow,
)
from .constructions import (
    ConstructionOutput,
    blowup,
    bounded_degree_grid,
    circulant_power,
    colourable_disjoint_lower,
    colourable_lower,
    doubled_family,
    drisko_cycle,
    even_matching_family,
    multipartite_copies,
    multipartite_repeating,
    ramsey_number,
    ramsey_witness,
    repeating_from_digraph,
    verify_claims,
)
from .fcalc import FResult, certify_lower_bound, f_exact, property_upper_bound
from .samplers import (
    random_independent_sets,
    sample_bipartite_line,
    sample_chordal,
    sample_claw_free,
    sample_kcolorable,
    sample_kr_free,
    sample_line,
    sample_max_degree,
    sample_staircase_bipartite_line,
)

__version__ = "0.1.0"
