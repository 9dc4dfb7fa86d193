"""Eilenberg-MacLane simplicial monoids and horn filling at desk scale.

The package builds the simplicial monoid of a commutative monoid in a
fixed degree, decides horn-filling problems in it (and in small finite
simplicial sets), and certifies the inner 3-horn over the naturals in
degree 2 that admits no filler, so the underlying simplicial set there is
not a quasi-category even though every simplicial group is a Kan complex.
"""

from .delta import (
    MonotoneMap,
    coface,
    codegeneracy,
    compose,
    enumerate_monotone,
    enumerate_surjections,
    epi_mono_factorize,
    identity,
)
from .em import EMSimplex, EMSpace, NerveView, em_space, nerve_view
from .horn import (
    CERTIFICATE_SCHEMA,
    ConstraintSystem,
    FillerResult,
    HornProblem,
    brute_force_filler,
    build_constraints,
    certificate_json,
    count_fillers,
    horn_from_simplex,
    iter_compatible_horn_data,
    iter_fillers,
    moore_filler,
    quasicategory_counterexample,
    solve_em,
    sweep_kan,
    sweep_quasicategory,
    validate_horn,
)
from .monoid import (
    CommutativeMonoid,
    UndecidableError,
    boolean,
    check_laws,
    cyclic,
    from_table,
    int_group,
    load_table,
    nat,
    solve_value,
    solve_value_all,
    trivial,
)
from .sset import (
    BASEPOINT,
    TruncatedSimplicialSet,
    boundary,
    horn as horn_complex,
    simplicial_identity_violations,
    simplicial_map_check,
    sphere,
    standard_simplex,
)

__version__ = "0.1.0"
