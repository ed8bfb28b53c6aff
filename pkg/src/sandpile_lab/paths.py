"""Delannoy and Kimberling lattice paths: enumeration and counting.

Delannoy paths start at the origin and use unit steps R = (1, 0), U = (0, 1)
and D = (1, 1); we only deal with the symmetric ones, which end on the
diagonal at (n, n).  A "differed" path is one whose first step is not D; they
are counted by the first differences of the central Delannoy numbers.  Paths
are plain strings over "RUD" and streams are emitted in lexicographic order
under R < U < D.

Kimberling paths start at the origin and take steps of any length with
positive horizontal and non-negative vertical displacement; they are tuples
of (dx, dy) steps, streamed in lexicographic step order.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

KimberlingPath = tuple[tuple[int, int], ...]

_STEP = {"R": (1, 0), "U": (0, 1), "D": (1, 1)}


def delannoy_endpoint(path: str) -> tuple[int, int]:
    x = y = 0
    for s in path:
        dx, dy = _STEP[s]
        x += dx
        y += dy
    return x, y


def is_symmetric(path: str) -> bool:
    x, y = delannoy_endpoint(path)
    return x == y


def is_differed(path: str) -> bool:
    return not path.startswith("D")


def enumerate_delannoy(n: int) -> Iterator[str]:
    """All symmetric Delannoy paths to (n, n), lexicographic in R < U < D."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def walk(x: int, y: int, prefix: list[str]) -> Iterator[str]:
        if x == n and y == n:
            yield "".join(prefix)
        if x < n:
            prefix.append("R")
            yield from walk(x + 1, y, prefix)
            prefix.pop()
        if y < n:
            prefix.append("U")
            yield from walk(x, y + 1, prefix)
            prefix.pop()
        if x < n and y < n:
            prefix.append("D")
            yield from walk(x + 1, y + 1, prefix)
            prefix.pop()

    return walk(0, 0, [])


def count_delannoy(n: int, k: int) -> int:
    """Symmetric paths to (n, n) with k R-steps (hence k U-steps, n-k D-steps)."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n; got {(n, k)}")
    return comb(n + k, k) * comb(n, k)


def central_delannoy(n: int) -> int:
    return sum(count_delannoy(n, k) for k in range(n + 1))


def enumerate_differed_delannoy(n: int, k: int) -> Iterator[str]:
    """Symmetric paths to (n, n), k R-steps, first step not D; lexicographic."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n; got {(n, k)}")

    def walk(rem_r: int, rem_u: int, rem_d: int, first: bool, prefix: list[str]) -> Iterator[str]:
        if rem_r == rem_u == rem_d == 0:
            yield "".join(prefix)
            return
        if rem_r:
            prefix.append("R")
            yield from walk(rem_r - 1, rem_u, rem_d, False, prefix)
            prefix.pop()
        if rem_u:
            prefix.append("U")
            yield from walk(rem_r, rem_u - 1, rem_d, False, prefix)
            prefix.pop()
        if rem_d and not first:
            prefix.append("D")
            yield from walk(rem_r, rem_u, rem_d - 1, False, prefix)
            prefix.pop()

    return walk(k, k, n - k, True, [])


def count_differed_delannoy(n: int, k: int) -> int:
    """Closed form for the differed Delannoy count.

    Pick the shape (the k R-steps and k U-steps), then drop the n-k D-steps
    into the 2k slots following a shape step.  A path to (n, n) with n >= 1
    and no R-steps would have to start with a D, so (n, 0) counts 0; the empty
    path makes (0, 0) count 1.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n; got {(n, k)}")
    if k == 0:
        return 1 if n == 0 else 0
    return comb(2 * k, k) * comb(n + k - 1, n - k)


def enumerate_kimberling(i: int, j: int) -> Iterator[KimberlingPath]:
    """All Kimberling paths from the origin to (i, j), lexicographic in steps."""
    if i < 1 or j < 0:
        raise ValueError(f"need i >= 1 and j >= 0; got {(i, j)}")

    def walk(x: int, y: int, prefix: list[tuple[int, int]]) -> Iterator[KimberlingPath]:
        if x == i and y == j:
            yield tuple(prefix)
            return
        for dx in range(1, i - x + 1):
            for dy in range(j - y + 1):
                prefix.append((dx, dy))
                yield from walk(x + dx, y + dy, prefix)
                prefix.pop()

    return walk(0, 0, [])


def count_kimberling(i: int, j: int, r: int) -> int:
    """Kimberling paths to (i, j) with r internal vertices (r + 1 steps)."""
    if i < 1 or j < 0 or not 0 <= r <= i - 1:
        raise ValueError(f"need i >= 1, j >= 0 and 0 <= r <= i - 1; got {(i, j, r)}")
    return comb(i - 1, r) * comb(r + j, r)


def count_kimberling_total(i: int, j: int) -> int:
    return sum(count_kimberling(i, j, r) for r in range(i))


def format_kimberling(path: KimberlingPath) -> str:
    return "".join(f"({dx},{dy})" for dx, dy in path)


def balls_in_boxes_count(boxes: int, balls: int) -> int:
    """Ways to drop unmarked balls into ordered boxes."""
    if boxes < 1:
        raise ValueError("need at least one box")
    if balls < 0:
        raise ValueError("balls must be non-negative")
    return comb(boxes + balls - 1, balls)


def balls_to_word(b: Sequence[int]) -> str:
    """Encode a balls-in-boxes placement as a binary word.

    Box contents become runs of zeros separated by ones; the word has
    sum(b) zeros and len(b) - 1 ones, and the map is a bijection.
    """
    if len(b) < 1:
        raise ValueError("need at least one box")
    if any(x < 0 for x in b):
        raise ValueError("box counts must be non-negative")
    return "1".join("0" * x for x in b)
