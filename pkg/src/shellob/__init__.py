"""Exact combinatorics of shellability: simplicial complexes, obstruction
enumeration, integer homology, interval orders, and their Betti recursion."""

from .complexes import (
    IRRELEVANT,
    VOID,
    CanonicalKey,
    CapabilityError,
    SimplicialComplex,
    from_facets,
    join_vertex,
    parse_complex,
    format_complex,
)
from .homology import HomologyProfile, boundary_matrix, reduced_homology, smith_normal_form
from .posets import (
    BoundedPoset,
    FinitePoset,
    NotAPosetError,
    bounded_extension,
    from_covers,
    from_intervals,
    order_complex,
    parse_poset,
    format_poset,
    random_interval_order,
)
from .shelling import (
    SearchBudget,
    ShellingCertificate,
    check_shelling,
    deletion_link_shelling,
    find_shelling,
    is_shellable,
    is_shelling,
)
from .interval_orders import (
    AtomPrecedence,
    NotIntervalOrderError,
    atom_precedence,
    betti_interval_order,
    falling_chains,
    interval_order_shelling,
    verify_recursive_atom_ordering,
)
from .obstructions import (
    EnumerationTask,
    ObstructionReport,
    enumerate_obstructions,
    enumerate_purity_obstructions,
    is_obstruction,
    is_purity_obstruction,
    nonshellable_witness,
)

__version__ = "0.1.0"
