"""Recurrent configurations on wheel graphs and their bijective pipeline.

Stable configurations on the wheel W_n are exactly the words in {0,1,2}^n.
Recurrence has a fast word test (the 02-cycle condition): cyclically, between
any two vertices carrying no grains there must be a vertex carrying two.  The
stochastic model admits every such word; the deterministic model additionally
demands at least one 2.  Minimal recurrence is the strict variant: exactly one
2 between consecutive zeros, with the all-ones word as the single zero-free
minimal configuration.

The pipeline maps a recurrent word c through:

1. its canonical minimal word m(c): zeros stay, the 2 reached first clockwise
   after some zero (a "cyclically first maximal" vertex) stays a 2, every
   other entry becomes 1;
2. the orientation of the cycle C_n whose in-degrees realise m(c) (edges leave
   each zero, run clockwise until a 2, then counter-clockwise until the next
   zero; the all-ones word maps to the counter-clockwise directed cycle);
3. a properly-marked orientation: the orientation of m(c) plus marks on the
   demoted 2s (each mark sits between two counter-clockwise edges);
4. a subgraph of the edge-to-vertex dual cycle: dual vertex i stands for the
   rim edge {i, i+1} and is present iff that edge is counter-clockwise, and
   each mark contributes the dual edge between its two incident rim edges.

Levels map to mark counts and to dual edge counts; the 01*-weight (vertices
reachable from a zero through ones, clockwise) maps to the number of clockwise
edges and to the number of missing dual vertices.

Dual labelling is pinned as d_i <-> rim edge {i, i+1 mod n}, so the dual edge
{d_{i-1}, d_i} stands for the rim vertex i; any rotation of this convention
would work, one is fixed for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ImproperMarkingError, NotRecurrentError, UnstableConfigError
from .graphs import Edge, Orientation, Subgraph, edge, make_cycle

Word = tuple[int, ...]


def _check_word(config: Sequence[int]) -> Word:
    c = tuple(config)
    if len(c) < 3:
        raise ValueError("wheel words need length >= 3")
    if any(x not in (0, 1, 2) for x in c):
        raise UnstableConfigError("wheel configurations are stable iff all entries are 0, 1 or 2")
    return c


def _nxt(i: int, n: int) -> int:
    return i % n + 1


def _prv(i: int, n: int) -> int:
    return (i - 2) % n + 1


def _zero_gaps(c: Word) -> list[tuple[int, list[int]]]:
    """For each zero z (clockwise order), the open run of vertices up to the next zero.

    With a single zero z the run is everything except z.
    """
    n = len(c)
    zeros = [i for i in range(1, n + 1) if c[i - 1] == 0]
    gaps = []
    for t, z in enumerate(zeros):
        stop = zeros[(t + 1) % len(zeros)]
        run = []
        k = _nxt(z, n)
        while k != stop:
            run.append(k)
            k = _nxt(k, n)
        gaps.append((z, run))
    return gaps


def wheel_is_recurrent(config: Sequence[int], model: str = "ssm") -> bool:
    """Word test for recurrence on W_n (the 02-cycle condition)."""
    c = _check_word(config)
    if model not in ("asm", "ssm"):
        raise ValueError(f"unknown model {model!r}")
    if model == "asm" and 2 not in c:
        return False
    return all(any(c[k - 1] == 2 for k in run) for _, run in _zero_gaps(c))


def wheel_is_minimal_recurrent(config: Sequence[int], model: str = "ssm") -> bool:
    """Word test for minimal recurrence on W_n (the strict 02-cycle condition).

    Between consecutive zeros there must be exactly one 2; the all-ones word
    is the unique zero-free minimal configuration.
    """
    c = _check_word(config)
    if model not in ("asm", "ssm"):
        raise ValueError(f"unknown model {model!r}")
    if model == "asm" and 2 not in c:
        return False
    if 0 not in c:
        return all(x == 1 for x in c)
    return all(sum(1 for k in run if c[k - 1] == 2) == 1 for _, run in _zero_gaps(c))


def cyclically_first_maximal(config: Sequence[int]) -> frozenset[int]:
    """Vertices with two grains reached from some zero through ones, clockwise."""
    c = _require_recurrent(config)
    n = len(c)
    out = set()
    for z, _ in _zero_gaps(c):
        k = _nxt(z, n)
        while c[k - 1] == 1:
            k = _nxt(k, n)
        # recurrence guarantees the walk stops on a 2, never on another zero
        out.add(k)
    return frozenset(out)


def weight01star(config: Sequence[int]) -> int:
    """Number of vertices lying on a chain "zero, then ones" (clockwise).

    Each zero contributes itself plus the run of ones that follows it; the
    chains never overlap, so this is a plain sum.
    """
    c = _require_recurrent(config)
    n = len(c)
    total = 0
    for z, _ in _zero_gaps(c):
        length = 1
        k = _nxt(z, n)
        while c[k - 1] == 1:
            length += 1
            k = _nxt(k, n)
        total += length
    return total


def _require_recurrent(config: Sequence[int]) -> Word:
    c = _check_word(config)
    if not wheel_is_recurrent(c, "ssm"):
        raise NotRecurrentError(f"{c} is not recurrent on the wheel (stochastic model)")
    return c


def canonical_minimal(config: Sequence[int]) -> Word:
    """The canonical minimal recurrent word: keep zeros and cyclically first
    maximal twos, demote everything else to one grain."""
    c = _require_recurrent(config)
    first_max = cyclically_first_maximal(c)
    return tuple(
        0 if x == 0 else (2 if i + 1 in first_max else 1) for i, x in enumerate(c)
    )


def _ccw_arc(i: int, n: int) -> tuple[int, int]:
    """Counter-clockwise arc of the rim edge {i, i+1}: from i+1 to i."""
    return (_nxt(i, n), i)


def _cw_arc(i: int, n: int) -> tuple[int, int]:
    return (i, _nxt(i, n))


def orientation_of_minimal(config: Sequence[int]) -> Orientation:
    """The orientation of C_n whose in-degree at every vertex equals the word.

    Defined on minimal recurrent words (stochastic model).  Edges leave each
    zero; direction stays clockwise until the next 2 and counter-clockwise
    from there to the next zero.  The all-ones word takes the
    counter-clockwise directed cycle, by convention.
    """
    c = _check_word(config)
    n = len(c)
    if not wheel_is_minimal_recurrent(c, "ssm"):
        raise NotRecurrentError(f"{c} is not minimal recurrent on the wheel")
    if 0 not in c:
        arcs = frozenset(_ccw_arc(i, n) for i in range(1, n + 1))
        return Orientation(make_cycle(n), arcs)
    arcs = set()
    for z, run in _zero_gaps(c):
        k = _nxt(z, n)
        while c[k - 1] == 1:
            k = _nxt(k, n)
        # clockwise edges from the zero into the 2 at k, then counter-clockwise
        i = z
        while i != k:
            arcs.add(_cw_arc(i, n))
            i = _nxt(i, n)
        stop = _nxt(run[-1], n)  # the next zero
        while i != stop:
            arcs.add(_ccw_arc(i, n))
            i = _nxt(i, n)
    return Orientation(make_cycle(n), frozenset(arcs))


@dataclass(frozen=True)
class MarkedCycleOrientation:
    """An orientation of the cycle C_n with marks on some vertices.

    Proper marking: both edges at a marked vertex i point counter-clockwise
    (i+1 -> i -> i-1), and at least one edge of the whole orientation is
    counter-clockwise.
    """

    orientation: Orientation
    marked: frozenset[int]

    def __post_init__(self) -> None:
        g = self.orientation.graph
        n = g.n_nonsink
        if g.has_sink or g.edges != make_cycle(n).edges:
            raise ValueError("marked orientations live on the cycle graph C_n")
        ccw = self.ccw_edge_indices()
        if not ccw:
            raise ImproperMarkingError("a properly-marked orientation needs a counter-clockwise edge")
        for i in self.marked:
            if not 1 <= i <= n:
                raise ImproperMarkingError(f"marked vertex {i} is not a cycle vertex")
            if _prv(i, n) not in ccw or i not in ccw:
                raise ImproperMarkingError(
                    f"vertex {i} is marked but its incident edges are not both counter-clockwise"
                )

    @property
    def n(self) -> int:
        return self.orientation.graph.n_nonsink

    def ccw_edge_indices(self) -> frozenset[int]:
        """Indices i of rim edges {i, i+1} directed counter-clockwise (i+1 -> i)."""
        n = self.n
        return frozenset(i for i in range(1, n + 1) if _ccw_arc(i, n) in self.orientation.arcs)

    @property
    def clockwise_edge_count(self) -> int:
        return self.n - len(self.ccw_edge_indices())


def cycle_orientation_from_ccw(n: int, ccw_indices) -> Orientation:
    """Build the C_n orientation whose counter-clockwise edges are the given indices."""
    ccw = set(ccw_indices)
    arcs = frozenset(_ccw_arc(i, n) if i in ccw else _cw_arc(i, n) for i in range(1, n + 1))
    return Orientation(make_cycle(n), arcs)


def phi_W(config: Sequence[int]) -> MarkedCycleOrientation:
    """Recurrent word -> properly-marked orientation.

    The orientation realises the canonical minimal word; the marks sit on the
    twos that are not cyclically first maximal (the excess grains removed by
    the canonical map).
    """
    c = _require_recurrent(config)
    first_max = cyclically_first_maximal(c)
    marks = frozenset(i for i in range(1, len(c) + 1) if c[i - 1] == 2 and i not in first_max)
    return MarkedCycleOrientation(orientation_of_minimal(canonical_minimal(c)), marks)


def psi_W(mo: MarkedCycleOrientation) -> Word:
    """Properly-marked orientation -> recurrent word (inverse of phi_W).

    The in-degree word of the orientation is minimal recurrent; each mark adds
    one grain back.
    """
    n = mo.n
    return tuple(mo.orientation.in_degree(i) + (i in mo.marked) for i in range(1, n + 1))


def _dual_edge(vertex: int, n: int) -> Edge:
    """Dual edge standing for rim vertex i: {d_{i-1}, d_i} with d_0 = d_n."""
    return edge(_prv(vertex, n), vertex) if vertex != 1 else edge(n, 1)


def pmo_to_subgraph(mo: MarkedCycleOrientation) -> Subgraph:
    """Properly-marked orientation -> subgraph of the dual cycle.

    Dual vertex i is present iff rim edge {i, i+1} is counter-clockwise; each
    marked rim vertex contributes the dual edge between its two incident rim
    edges.  The result is non-empty because at least one edge is
    counter-clockwise.
    """
    n = mo.n
    verts = mo.ccw_edge_indices()
    duals = frozenset(_dual_edge(i, n) for i in mo.marked)
    return Subgraph(verts, duals)


def subgraph_to_pmo(s: Subgraph, n: int) -> MarkedCycleOrientation:
    """Subgraph of the dual cycle C_n -> properly-marked orientation (inverse of the above)."""
    if not s.vertices <= set(range(1, n + 1)):
        raise ValueError(f"subgraph vertices must lie in 1..{n}")
    marks = set()
    for a, b in s.edges:
        if b == a + 1:
            marks.add(b)
        elif (a, b) == (1, n):
            marks.add(1)
        else:
            raise ValueError(f"({a}, {b}) is not an edge of the dual cycle on 1..{n}")
    return MarkedCycleOrientation(cycle_orientation_from_ccw(n, s.vertices), frozenset(marks))


def enumerate_pmo(n: int) -> Iterator[MarkedCycleOrientation]:
    """All properly-marked orientations of C_n, in a fixed order."""
    for ccw_mask in range(1, 1 << n):
        ccw = frozenset(i for i in range(1, n + 1) if ccw_mask >> (i - 1) & 1)
        orient = cycle_orientation_from_ccw(n, ccw)
        markable = sorted(i for i in range(1, n + 1) if _prv(i, n) in ccw and i in ccw)
        for mark_mask in range(1 << len(markable)):
            marks = frozenset(v for j, v in enumerate(markable) if mark_mask >> j & 1)
            yield MarkedCycleOrientation(orient, marks)
