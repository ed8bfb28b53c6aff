"""Sandpile dynamics: configurations, toppling, stabilisation, and recurrence.

Two models are supported on any connected graph with sink 0:

* deterministic ("asm"): a toppling vertex sends one grain to every neighbour;
* stochastic ("ssm"): a toppling vertex flips an independent coin per
  neighbour and sends that neighbour one grain with probability p, keeping it
  otherwise.

A configuration is a plain tuple of grain counts for the vertices 1..n (the
sink carries no count).  Stabilisation under the deterministic rule is
order-independent; we still fix a canonical schedule (topple the lowest-index
unstable vertex, flip coins in ascending neighbour order) so that seeded
stochastic runs are bit-reproducible.

Recurrence is decided structurally, never by simulation:

* the burning test (deterministic model only): starting from the burnt sink,
  repeatedly burn any vertex holding at least as many grains as it has
  unburnt neighbours; the configuration is recurrent iff everything burns;
* the orientation oracle (both models): a stable configuration is recurrent
  iff some orientation with unique target 0 (acyclic in the deterministic
  model) has in-degree at most the grain count at every non-sink vertex, and
  minimal recurrent iff some such orientation matches the grain counts
  exactly.  The oracle enumerates orientations exhaustively, so it is only
  usable under the brute-force edge cap.
"""

from __future__ import annotations

import hashlib
import math
import random
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Literal, Sequence

from .errors import CapExceededError, UnstableConfigError
from .graphs import DEFAULT_EDGE_CAP, Graph
from .polynomial import Polynomial

Config = tuple[int, ...]
Model = Literal["asm", "ssm"]

MODELS = ("asm", "ssm")

#: How the pseudo-random source is reported in run metadata.
RNG_DESCRIPTION = {"algorithm": "mt19937", "source": "python-random", "version": 3}

#: Default cap on the number of stable configurations a full sweep may visit.
DEFAULT_STABLE_CAP = 5_000_000


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}, expected one of {MODELS}")
    return model


def _check_config(config: Sequence[int], graph: Graph) -> Config:
    if not graph.has_sink:
        raise ValueError("sandpile dynamics need a graph with sink 0")
    c = tuple(config)
    if len(c) != graph.n_nonsink:
        raise ValueError(
            f"configuration length {len(c)} does not match {graph.n_nonsink} non-sink vertices"
        )
    if any(x < 0 for x in c):
        raise ValueError("grain counts must be non-negative")
    return c


def spawn_seed(seed: int, label: str) -> int:
    """Derive a reproducible child seed for an independent substream."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def is_stable(config: Sequence[int], graph: Graph) -> bool:
    """True iff every non-sink vertex holds fewer grains than its degree."""
    c = _check_config(config, graph)
    return all(c[i - 1] < graph.degree(i) for i in graph.nonsink_vertices)


def topple_asm(config: Sequence[int], graph: Graph, vertex: int) -> Config:
    """Single deterministic toppling: vertex sends one grain to each neighbour.

    Grains sent to the sink leave the system.  Toppling a stable vertex is an
    error.
    """
    c = list(_check_config(config, graph))
    if not 1 <= vertex <= graph.n_nonsink:
        raise ValueError(f"unknown non-sink vertex {vertex}")
    deg = graph.degree(vertex)
    if c[vertex - 1] < deg:
        raise ValueError(f"vertex {vertex} is stable and cannot topple")
    c[vertex - 1] -= deg
    for j in graph.neighbors(vertex):
        if j != 0:
            c[j - 1] += 1
    return tuple(c)


@dataclass(frozen=True)
class StabilizationResult:
    """Outcome of stabilising a configuration.

    Grain conservation holds by construction: the initial total equals
    ``sum(stable_config) + grains_to_sink``.
    """

    stable_config: Config
    topplings: tuple[int, ...]
    grains_to_sink: int
    schedule: str
    seed: int | None = None

    def to_json(self) -> dict:
        return {
            "stable_config": list(self.stable_config),
            "topplings": list(self.topplings),
            "grains_to_sink": self.grains_to_sink,
            "schedule": self.schedule,
            "seed": self.seed,
        }


def _next_unstable(c: list[int], graph: Graph, order: str) -> int | None:
    rng = graph.nonsink_vertices if order == "lowest" else reversed(graph.nonsink_vertices)
    for i in rng:
        if c[i - 1] >= graph.degree(i):
            return i
    return None


def stabilize_asm(config: Sequence[int], graph: Graph, order: str = "lowest") -> StabilizationResult:
    """Topple until stable under the deterministic rule.

    The result does not depend on ``order`` (the model is Abelian); the
    parameter exists so tests can compare two fixed schedules.
    """
    if order not in ("lowest", "highest"):
        raise ValueError(f"unknown toppling order {order!r}")
    c = list(_check_config(config, graph))
    topplings = [0] * graph.n_nonsink
    sink = 0
    while True:
        i = _next_unstable(c, graph, order)
        if i is None:
            break
        deg = graph.degree(i)
        c[i - 1] -= deg
        topplings[i - 1] += 1
        for j in graph.neighbors(i):
            if j == 0:
                sink += 1
            else:
                c[j - 1] += 1
    return StabilizationResult(tuple(c), tuple(topplings), sink, f"asm-{order}-index")


def stabilize_ssm(
    config: Sequence[int],
    graph: Graph,
    p: float | None = None,
    seed: int | None = None,
    *,
    rng: random.Random | None = None,
    coin: Callable[[], bool] | None = None,
    order: str = "lowest",
    max_topplings: int = 1_000_000,
) -> StabilizationResult:
    """Topple until stable under the stochastic rule.

    Termination is almost sure; ``max_topplings`` is a guard whose breach
    signals an implementation bug, not a model failure.  The coin source is,
    in order of precedence: an explicit ``coin`` callable (used by tests to
    force deterministic outcomes), an explicit ``rng``, or a fresh
    ``random.Random(seed)``.
    """
    if order not in ("lowest", "highest"):
        raise ValueError(f"unknown toppling order {order!r}")
    if coin is None:
        if p is None or not 0 < p < 1:
            raise ValueError("p must lie strictly between 0 and 1")
        if rng is None:
            rng = random.Random(seed)
        local_rng = rng

        def coin() -> bool:
            return local_rng.random() < p

    c = list(_check_config(config, graph))
    topplings = [0] * graph.n_nonsink
    sink = 0
    rounds = 0
    while True:
        i = _next_unstable(c, graph, order)
        if i is None:
            break
        rounds += 1
        if rounds > max_topplings:
            raise CapExceededError(
                f"stochastic stabilisation exceeded {max_topplings} toppling rounds"
            )
        topplings[i - 1] += 1
        for j in graph.neighbors(i):
            if coin():
                c[i - 1] -= 1
                if j == 0:
                    sink += 1
                else:
                    c[j - 1] += 1
    return StabilizationResult(tuple(c), tuple(topplings), sink, f"ssm-{order}-index", seed)


def level(config: Sequence[int], graph: Graph) -> int:
    """Total grains + sink degree - edge count.

    Non-negative on recurrent configurations and zero exactly on minimal
    recurrent ones; arbitrary configurations are accepted and may give a
    negative value.
    """
    c = _check_config(config, graph)
    return sum(c) + graph.degree(0) - graph.m


def is_recurrent_burning(config: Sequence[int], graph: Graph) -> bool:
    """Burning test for recurrence under the deterministic model.

    Start with the sink burnt; repeatedly burn any vertex whose grain count is
    at least its number of currently unburnt neighbours.  Recurrent iff every
    vertex burns.  Requires a stable configuration.
    """
    c = _check_config(config, graph)
    if not is_stable(c, graph):
        raise UnstableConfigError("burning test requires a stable configuration")
    unburnt_nbrs = {i: graph.degree(i) - (0 in graph.neighbors(i)) for i in graph.nonsink_vertices}
    unburnt = set(graph.nonsink_vertices)
    frontier = [i for i in unburnt if c[i - 1] >= unburnt_nbrs[i]]
    while frontier:
        v = frontier.pop()
        if v not in unburnt:
            continue
        unburnt.discard(v)
        for j in graph.neighbors(v):
            if j != 0 and j in unburnt:
                unburnt_nbrs[j] -= 1
                if c[j - 1] >= unburnt_nbrs[j]:
                    frontier.append(j)
    return not unburnt


@lru_cache(maxsize=None)
def _zero_rooted_indegrees(graph: Graph, require_acyclic: bool, cap: int):
    """In-degree data of all 0-rooted (optionally acyclic) orientations.

    Returns ``(minimal, exact)`` where ``exact`` is the frozenset of in-degree
    tuples over the vertices 1..n and ``minimal`` is its pointwise-minimal
    antichain (sufficient for the exists-a-compatible-orientation query).

    Every sink edge of a 0-rooted orientation points into 0, so only the
    remaining edges are enumerated: 2^(|E| - deg 0) candidates.
    """
    if not graph.has_sink:
        raise ValueError("the orientation oracle needs a graph with sink 0")
    if graph.m > cap:
        raise CapExceededError(f"{graph.m} edges exceeds the orientation cap {cap}")
    n = graph.n_nonsink
    sink_nbrs = graph.neighbors(0)
    free = [e for e in graph.sorted_edges() if 0 not in e]
    degs = {i: graph.degree(i) for i in graph.nonsink_vertices}

    exact: set[Config] = set()
    for mask in range(1 << len(free)):
        indeg = [0] * (n + 1)
        arcs = [(v, 0) for v in sink_nbrs]
        for i, (u, v) in enumerate(free):
            if mask >> i & 1:
                arcs.append((u, v))
                indeg[v] += 1
            else:
                arcs.append((v, u))
                indeg[u] += 1
        # 0 is a target by construction; it must be the only one.
        if any(indeg[i] == degs[i] for i in range(1, n + 1)):
            continue
        if require_acyclic and not _arcs_acyclic(n, arcs):
            continue
        exact.add(tuple(indeg[1:]))

    # u dominates v pointwise only if sum(u) < sum(v), so compare each vector
    # against strictly smaller totals only (for wheels and fans all totals are
    # equal and the whole set is already an antichain)
    by_sum: dict[int, list[Config]] = {}
    for v in exact:
        by_sum.setdefault(sum(v), []).append(v)
    minimal = []
    smaller: list[Config] = []
    for total in sorted(by_sum):
        for v in by_sum[total]:
            if not any(all(a <= b for a, b in zip(u, v)) for u in smaller):
                minimal.append(v)
        smaller.extend(by_sum[total])
    return tuple(sorted(minimal)), frozenset(exact)


def _arcs_acyclic(n: int, arcs: list[tuple[int, int]]) -> bool:
    out: dict[int, list[int]] = {v: [] for v in range(n + 1)}
    indeg = [0] * (n + 1)
    for t, h in arcs:
        out[t].append(h)
        indeg[h] += 1
    queue = [v for v in range(n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n + 1


def is_recurrent_oracle(
    config: Sequence[int],
    graph: Graph,
    require_acyclic: bool,
    cap: int = DEFAULT_EDGE_CAP,
) -> bool:
    """Recurrence by exhaustive orientation search.

    With ``require_acyclic`` this decides deterministic-model recurrence;
    without it, stochastic-model recurrence.
    """
    c = _check_config(config, graph)
    if not is_stable(c, graph):
        raise UnstableConfigError("the orientation oracle requires a stable configuration")
    minimal, _ = _zero_rooted_indegrees(graph, require_acyclic, cap)
    return any(all(ci >= vi for ci, vi in zip(c, v)) for v in minimal)


def is_minimal_recurrent(
    config: Sequence[int],
    graph: Graph,
    model: Model,
    cap: int = DEFAULT_EDGE_CAP,
) -> bool:
    """True iff some admissible orientation matches the grain counts exactly."""
    _check_model(model)
    c = _check_config(config, graph)
    if not is_stable(c, graph):
        raise UnstableConfigError("minimal-recurrence test requires a stable configuration")
    _, exact = _zero_rooted_indegrees(graph, model == "asm", cap)
    return c in exact


def enumerate_stable(graph: Graph) -> Iterator[Config]:
    """All stable configurations, in lexicographic order."""
    if not graph.has_sink:
        raise ValueError("stable configurations need a graph with sink 0")
    ranges = [range(graph.degree(i)) for i in graph.nonsink_vertices]
    return iter(product(*ranges))


def stable_count(graph: Graph) -> int:
    return math.prod(graph.degree(i) for i in graph.nonsink_vertices)


def enumerate_recurrent(
    graph: Graph,
    model: Model,
    cap: int = DEFAULT_EDGE_CAP,
    max_configs: int = DEFAULT_STABLE_CAP,
) -> list[Config]:
    """All recurrent configurations for the model, in lexicographic order."""
    _check_model(model)
    total = stable_count(graph)
    if total > max_configs:
        raise CapExceededError(f"{total} stable configurations exceeds the cap {max_configs}")
    minimal, _ = _zero_rooted_indegrees(graph, model == "asm", cap)
    out = []
    for c in enumerate_stable(graph):
        if any(all(ci >= vi for ci, vi in zip(c, v)) for v in minimal):
            out.append(c)
    return out


def level_polynomial(
    graph: Graph,
    model: Model,
    cap: int = DEFAULT_EDGE_CAP,
    max_configs: int = DEFAULT_STABLE_CAP,
) -> Polynomial:
    """Generating polynomial of recurrent configurations by level."""
    return Polynomial.from_exponents(
        level(c, graph) for c in enumerate_recurrent(graph, model, cap, max_configs)
    )


def simulate_markov(
    graph: Graph,
    model: Model,
    mu: Sequence[float] | None,
    p: float | None,
    steps: int,
    seed: int,
    burn_in: int = 0,
) -> dict[Config, int]:
    """Run the add-a-grain-and-stabilise chain and count visited stable states.

    One grain lands on vertex i with probability mu[i-1] each step (uniform
    when mu is None); the chain starts from the all-zero configuration.  The
    first ``burn_in`` visits are not counted.  Output is fully determined by
    the seed and the canonical lowest-index schedule.
    """
    _check_model(model)
    if steps < 0 or burn_in < 0:
        raise ValueError("steps and burn_in must be non-negative")
    n = graph.n_nonsink
    if mu is None:
        mu = [1.0 / n] * n
    mu = list(mu)
    if len(mu) != n or any(x <= 0 for x in mu) or abs(sum(mu) - 1.0) > 1e-9:
        raise ValueError("mu must be a positive probability vector over the non-sink vertices")
    if model == "ssm" and (p is None or not 0 < p < 1):
        raise ValueError("the stochastic model needs p strictly between 0 and 1")

    cumulative = []
    acc = 0.0
    for x in mu:
        acc += x
        cumulative.append(acc)
    cumulative[-1] = 1.0

    rng = random.Random(seed)
    state: Config = (0,) * n
    visits: dict[Config, int] = {}
    for step in range(steps):
        vertex = bisect_left(cumulative, rng.random()) + 1
        bumped = list(state)
        bumped[vertex - 1] += 1
        if model == "asm":
            state = stabilize_asm(bumped, graph).stable_config
        else:
            state = stabilize_ssm(bumped, graph, p=p, rng=rng).stable_config
        if step >= burn_in:
            visits[state] = visits.get(state, 0) + 1
    return visits
