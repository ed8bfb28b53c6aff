"""Independent counting oracles: deletion-contraction Tutte polynomial and
matrix-tree spanning tree counts.

The Tutte recursion runs on multigraphs (contraction creates parallel edges
and loops): delete-plus-contract on a non-loop non-bridge edge, a factor of x
per bridge and y per loop at the base.  The full bivariate polynomial is
computed and specialised afterwards, so the single-variable form T(1, x) is
obtained by substitution rather than by a specialised recursion.

Everything is exact integer arithmetic; the spanning tree count uses a
fraction-free (Bareiss) determinant of the reduced Laplacian.
"""

from __future__ import annotations

from .errors import CapExceededError
from .graphs import Graph
from .polynomial import Polynomial

#: Default cap on |E| for the Tutte recursion.
DEFAULT_TUTTE_CAP = 20

BivariatePoly = dict[tuple[int, int], int]

_Edges = tuple[tuple[int, int], ...]


def _poly_add(a: BivariatePoly, b: BivariatePoly) -> BivariatePoly:
    out = dict(a)
    for key, c in b.items():
        out[key] = out.get(key, 0) + c
    return out


def _poly_shift(a: BivariatePoly, dx: int, dy: int) -> BivariatePoly:
    return {(i + dx, j + dy): c for (i, j), c in a.items()}


def _connected_without(vertices: frozenset[int], edges: _Edges, skip: tuple[int, int]) -> bool:
    """Is the endpoint pair of ``skip`` still connected after removing one copy?"""
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    skipped = False
    for u, v in edges:
        if not skipped and (u, v) == skip:
            skipped = True
            continue
        adj[u].append(v)
        adj[v].append(u)
    u, v = skip
    seen = {u}
    stack = [u]
    while stack:
        for w in adj[stack.pop()]:
            if w == v:
                return True
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def _bridges(vertices: frozenset[int], edges: _Edges) -> set[tuple[int, int]]:
    """Distinct non-loop edges of multiplicity one whose removal disconnects."""
    from collections import Counter

    mult = Counter(edges)
    out = set()
    for e, count in mult.items():
        if e[0] != e[1] and count == 1 and not _connected_without(vertices, edges, e):
            out.add(e)
    return out


def _contract(vertices: frozenset[int], edges: _Edges, e: tuple[int, int]) -> tuple[frozenset[int], _Edges]:
    u, v = e  # u < v; v is merged into u
    removed = False
    new_edges = []
    for a, b in edges:
        if not removed and (a, b) == e:
            removed = True
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        new_edges.append((a2, b2) if a2 <= b2 else (b2, a2))
    return vertices - {v}, tuple(sorted(new_edges))


def _delete(edges: _Edges, e: tuple[int, int]) -> _Edges:
    out = list(edges)
    out.remove(e)
    return tuple(out)


def _tutte_rec(vertices: frozenset[int], edges: _Edges, order: str, memo: dict) -> BivariatePoly:
    if not edges:
        return {(0, 0): 1}
    key = (vertices, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached

    loops = tuple(e for e in edges if e[0] == e[1])
    if loops:
        nonloops = tuple(e for e in edges if e[0] != e[1])
        result = _poly_shift(_tutte_rec(vertices, nonloops, order, memo), 0, len(loops))
        memo[key] = result
        return result

    bridges = _bridges(vertices, edges)
    candidates = [e for e in dict.fromkeys(edges) if e not in bridges]
    if not candidates:
        result = {(len(edges), 0): 1}
        memo[key] = result
        return result

    e = candidates[0] if order == "lowest" else candidates[-1]
    deleted = _tutte_rec(vertices, _delete(edges, e), order, memo)
    cv, ce = _contract(vertices, edges, e)
    contracted = _tutte_rec(cv, ce, order, memo)
    result = _poly_add(deleted, contracted)
    memo[key] = result
    return result


def tutte_polynomial(g: Graph, edge_order: str = "lowest", cap: int = DEFAULT_TUTTE_CAP) -> BivariatePoly:
    """The bivariate Tutte polynomial as a map (x-exponent, y-exponent) -> coefficient."""
    if edge_order not in ("lowest", "highest"):
        raise ValueError(f"unknown edge order {edge_order!r}")
    if g.m > cap:
        raise CapExceededError(f"{g.m} edges exceeds the Tutte cap {cap}")
    return _tutte_rec(frozenset(g.vertices), g.sorted_edges(), edge_order, {})


def tutte_T1x(g: Graph, edge_order: str = "lowest", cap: int = DEFAULT_TUTTE_CAP) -> Polynomial:
    """The specialisation T_G(1, x): first slot set to 1, second kept as x."""
    coeffs: dict[int, int] = {}
    for (_, j), c in tutte_polynomial(g, edge_order, cap).items():
        coeffs[j] = coeffs.get(j, 0) + c
    return Polynomial.from_dict(coeffs)


def _det_bareiss(mat: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, by the matrix-tree theorem."""
    verts = list(g.vertices)
    if len(verts) == 1:
        return 1
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        i, j = index[u], index[v]
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return _det_bareiss(reduced)
