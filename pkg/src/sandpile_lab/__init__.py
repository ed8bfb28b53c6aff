"""Sandpile models on small graphs, with bijections to subgraphs and lattice paths.

The package covers:

* chip-firing dynamics (deterministic and coin-flipping stochastic variants)
  on any connected graph with a sink, including stabilisation, the burning
  test, orientation-based recurrence oracles, level statistics and seeded
  Markov-chain simulation;
* fast word characterisations of (minimal) recurrent configurations on wheel
  and fan graphs, and the bijections from those configurations to marked
  cycle orientations, marked {L,R}-words, and subgraphs of cycles and paths;
* symmetric (differed) Delannoy paths and Kimberling paths, with exact
  counting formulas and exhaustive streams;
* an independent deletion-contraction Tutte oracle plus a matrix-tree
  spanning tree count, and a registry of exhaustive cross-checks tying all of
  the above together.
"""

from .engine import (
    StabilizationResult,
    enumerate_recurrent,
    enumerate_stable,
    is_minimal_recurrent,
    is_recurrent_burning,
    is_recurrent_oracle,
    is_stable,
    level,
    level_polynomial,
    simulate_markov,
    stabilize_asm,
    stabilize_ssm,
    topple_asm,
)
from .errors import (
    CapExceededError,
    ImproperMarkingError,
    MalformedWordError,
    NotRecurrentError,
    SandpileError,
    UnstableConfigError,
)
from .fan import (
    PMWord,
    count_pm_words,
    count_rec_fan,
    fan_is_recurrent,
    phi_F,
    psi_F,
    subgraph_to_word,
    word_to_subgraph,
)
from .graphs import (
    Graph,
    Orientation,
    Subgraph,
    enumerate_orientations,
    enumerate_subgraphs,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
)
from .paths import (
    balls_in_boxes_count,
    balls_to_word,
    central_delannoy,
    count_delannoy,
    count_differed_delannoy,
    count_kimberling,
    count_kimberling_total,
    enumerate_delannoy,
    enumerate_differed_delannoy,
    enumerate_kimberling,
)
from .polynomial import Polynomial
from .tutte import spanning_tree_count, tutte_T1x
from .verify import (
    DoublyRootedSubgraph,
    count_gamma,
    count_gamma_bar,
    enumerate_gamma,
    enumerate_gamma_bar,
    rotate_doubly_rooted,
    unrotate_doubly_rooted,
    verify_binomial_identity,
    verify_theorem,
)
from .wheel import (
    MarkedCycleOrientation,
    canonical_minimal,
    cyclically_first_maximal,
    orientation_of_minimal,
    phi_W,
    pmo_to_subgraph,
    psi_W,
    subgraph_to_pmo,
    weight01star,
    wheel_is_minimal_recurrent,
    wheel_is_recurrent,
)

__version__ = "0.1.0"
