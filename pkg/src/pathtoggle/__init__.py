"""Toggle dynamics on independent sets of path graphs."""

from .core import (
    MAX_N,
    CapacityError,
    CoxeterWord,
    Direction,
    IndependentSet,
    Orientation,
    ToggleWord,
    apply_word,
    coxeter_to_orientation,
    element_order,
    enumerate_independent_sets,
    is_symmetrical,
    orientation_to_coxeter,
    phi,
    phi_inverse,
    random_coxeter,
    reverse,
    same_action,
    toggle,
)
from .orbits import (
    HomomesyReport,
    Orbit,
    OrbitBoard,
    Statistic,
    all_orbits,
    check_homomesy,
    column_sums,
    count_symmetrical_in,
    is_reversible,
    orbit_average,
    orbit_of,
)
from .snakes import (
    Snake,
    SnakeComposition,
    class_is_reversible,
    composition_class,
    next_composition,
    next_start_offset,
    orbit_from_composition,
    orbit_size,
    orbit_sizes_for_n,
    sizes_table,
    snake_decompose,
)
from .coxeter import (
    ConjugationStep,
    admissible_conjugate,
    final_toggles,
    initial_toggles,
    path_to_phi,
    verify_orbit_correspondence,
)
from .zigzag import (
    OrderIdeal,
    eta,
    eta_inverse,
    ideal_toggle,
    promotion_word,
    rowmotion_word,
)

__version__ = "0.1.0"
