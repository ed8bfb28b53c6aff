"""Recurrent configurations on fan graphs and their bijective pipeline.

On the fan F_n (path 1..n joined to the sink 0) the deterministic and
stochastic models have the same recurrent configurations, because every
orientation of a path is acyclic.  Stable words satisfy c_1, c_n <= 1 and
c_i <= 2 in between; recurrence demands a 2 strictly between every pair of
zeros (no wrap-around this time).

A recurrent word maps to a marked orientation of the path, built left to
right: edges point leftwards while the entries stay positive (marking vertex
i when c_i = 2 and the previous edge already pointed left), flip rightwards
at a zero, and flip back left at the next 2; finally the right-most vertex n
is marked when the last edge points left and c_n = 1.  Relocating each vertex
mark onto the edge at its left and reading edges 1..n-1 as letters (L for
leftward, R for rightward) yields a properly-marked {L,R}-word: marks only on
L-letters, never immediately before an R.  The number of marked letters is
the level of the configuration.

Words map further to subgraphs of the path P_n containing the right-most
vertex n: keep vertex i when letter i is an L, keep edge {i, i+1} when letter
i is a marked L.  Marked letters count the edges; unmarked letters count the
components minus one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator, Sequence

from .errors import MalformedWordError, NotRecurrentError, UnstableConfigError
from .graphs import Subgraph, edge

Word = tuple[int, ...]

LU = "Lu"
LM = "Lm"
R = "R"
LETTERS = (LU, LM, R)


@dataclass(frozen=True)
class PMWord:
    """A properly-marked {L,R}-word: letters over {Lu, Lm, R}, no Lm before an R."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        for x in self.letters:
            if x not in LETTERS:
                raise MalformedWordError(f"unknown letter {x!r}")
        for a, b in zip(self.letters, self.letters[1:]):
            if a == LM and b == R:
                raise MalformedWordError("a marked L may not be immediately followed by an R")

    @classmethod
    def parse(cls, text: str) -> "PMWord":
        return cls(tuple(text.split()))

    @property
    def marked_count(self) -> int:
        return sum(1 for x in self.letters if x == LM)

    @property
    def unmarked_count(self) -> int:
        return sum(1 for x in self.letters if x == LU)

    @property
    def r_count(self) -> int:
        return sum(1 for x in self.letters if x == R)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(self.letters)


def _check_fan_word(config: Sequence[int]) -> Word:
    c = tuple(config)
    n = len(c)
    if n < 2:
        raise ValueError("fan words need length >= 2")
    if any(x < 0 for x in c):
        raise UnstableConfigError("grain counts must be non-negative")
    if c[0] > 1 or c[-1] > 1 or any(x > 2 for x in c[1:-1]):
        raise UnstableConfigError(
            "fan configurations are stable iff the end entries are at most 1 "
            "and the middle entries at most 2"
        )
    return c


def fan_is_recurrent(config: Sequence[int]) -> bool:
    """Word test for recurrence on F_n: a 2 strictly between every pair of zeros."""
    c = _check_fan_word(config)
    zeros = [i for i, x in enumerate(c) if x == 0]
    for a, b in zip(zeros, zeros[1:]):
        if not any(c[k] == 2 for k in range(a + 1, b)):
            return False
    return True


def phi_F(config: Sequence[int]) -> PMWord:
    """Recurrent word -> properly-marked {L,R}-word of length n-1."""
    c = _check_fan_word(config)
    if not fan_is_recurrent(c):
        raise NotRecurrentError(f"{c} is not recurrent on the fan")
    n = len(c)
    directions: list[str] = []
    marked_vertices: set[int] = set()
    prev = "L"  # the implicit edge from vertex 1 down to the sink points left
    for i in range(1, n):
        if prev == "L":
            if c[i - 1] == 0:
                cur = "R"
            else:
                cur = "L"
                if c[i - 1] == 2:
                    marked_vertices.add(i)
        else:
            # a zero here would mean two zeros with no 2 between: not recurrent
            cur = "R" if c[i - 1] == 1 else "L"
        directions.append(cur)
        prev = cur
    if directions[-1] == "L" and c[n - 1] == 1:
        marked_vertices.add(n)
    # a mark on vertex i relocates to its left edge, letter i-1
    letters = []
    for i, d in enumerate(directions, start=1):
        if d == "R":
            letters.append(R)
        else:
            letters.append(LM if i + 1 in marked_vertices else LU)
    return PMWord(tuple(letters))


def psi_F(word: PMWord | str) -> Word:
    """Properly-marked word -> recurrent word (inverse of phi_F).

    The orientation rebuilt from the letters gives the in-degree word of the
    canonical minimal configuration; a mark on letter i puts one grain back on
    vertex i+1 (for the last letter, the right-most vertex n).
    """
    w = PMWord.parse(word) if isinstance(word, str) else word
    n = len(w) + 1
    if n < 2:
        raise MalformedWordError("words must have at least one letter")
    lets = w.letters

    def leftward(i: int) -> bool:
        return lets[i - 1] != R

    c = []
    for v in range(1, n + 1):
        indeg = 0
        if v > 1 and not leftward(v - 1):
            indeg += 1  # edge {v-1, v} points rightwards, into v
        if v < n and leftward(v):
            indeg += 1  # edge {v, v+1} points leftwards, into v
        c.append(indeg)
    for i, x in enumerate(lets, start=1):
        if x == LM:
            c[i] += 1  # vertex i+1
    return tuple(c)


def word_to_subgraph(word: PMWord | str) -> Subgraph:
    """Properly-marked word -> subgraph of P_n containing the right-most vertex n."""
    w = PMWord.parse(word) if isinstance(word, str) else word
    n = len(w) + 1
    verts = {i for i, x in enumerate(w.letters, start=1) if x != R} | {n}
    edges = {edge(i, i + 1) for i, x in enumerate(w.letters, start=1) if x == LM}
    return Subgraph(frozenset(verts), frozenset(edges))


def subgraph_to_word(s: Subgraph, n: int | None = None) -> PMWord:
    """Subgraph of P_n containing n -> properly-marked word (inverse of the above).

    When n is omitted it is taken to be the largest vertex of the subgraph.
    """
    if n is None:
        n = max(s.vertices)
    if n not in s.vertices:
        raise ValueError(f"the subgraph must contain the right-most vertex {n}")
    if not s.vertices <= set(range(1, n + 1)):
        raise ValueError(f"subgraph vertices must lie in 1..{n}")
    for a, b in s.edges:
        if b != a + 1:
            raise ValueError(f"({a}, {b}) is not an edge of the path on 1..{n}")
    letters = []
    for i in range(1, n):
        if edge(i, i + 1) in s.edges:
            letters.append(LM)
        elif i in s.vertices:
            letters.append(LU)
        else:
            letters.append(R)
    return PMWord(tuple(letters))


def enumerate_pm_words(length: int) -> Iterator[PMWord]:
    """All properly-marked words of the given length, in a fixed order."""
    if length < 0:
        raise ValueError("length must be non-negative")
    for combo in product(LETTERS, repeat=length):
        if any(a == LM and b == R for a, b in zip(combo, combo[1:])):
            continue
        yield PMWord(combo)


def count_pm_words(n: int, k: int, r: int) -> int:
    """Properly-marked words of length n-1 with k marked and r unmarked L-letters.

    Choose the shape (the word with marked letters removed), then drop the
    marked letters into the r+1 slots at the left of each unmarked letter or
    at the very end.
    """
    if n < 1 or k < 0 or r < 0 or k + r > n - 1:
        raise ValueError(f"need n >= 1 and k, r >= 0 with k + r <= n - 1; got {(n, k, r)}")
    return comb(n - k - 1, r) * comb(r + k, r)


def count_rec_fan(n: int, k: int) -> int:
    """Number of recurrent configurations on F_n with level k."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"need n >= 1 and 0 <= k <= n - 1; got {(n, k)}")
    return sum(count_pm_words(n, k, r) for r in range(n - k))
