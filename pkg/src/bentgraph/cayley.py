"""Cayley graphs Cay(Z_2^n, S) with loops allowed.

Vertices are the 2^n points; u ~ w iff u ^ w lies in the connection set.  If
0 is in the connection set every vertex carries a loop.  Neighbourhoods are
kept as int bitsets (bit z set iff z is a neighbour), which is what the srg
counting in :mod:`bentgraph.srg` works on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .boolfn import BooleanFunction, PointSet, dot, support
from .errors import RANK_MAX_N, InvariantError, check_limit
from .transform import cayley_eigenvalues


@dataclass(frozen=True)
class CayleyGraph:
    n: int
    connection_set: PointSet

    def __post_init__(self):
        if self.connection_set.n != self.n:
            raise ValueError("connection set arity differs from graph arity")

    @property
    def v(self) -> int:
        return 1 << self.n

    @property
    def has_loops(self) -> bool:
        return 0 in self.connection_set

    @property
    def degree(self) -> int:
        """Neighbours per vertex; a loop counts once."""
        return len(self.connection_set)

    def adjacent(self, u: int, w: int) -> bool:
        return (u ^ w) in self.connection_set

    def neighbors(self, u: int) -> list[int]:
        return sorted(u ^ s for s in self.connection_set)

    def neighbor_bitset(self, u: int) -> int:
        bits = 0
        for s in self.connection_set.members:
            bits |= 1 << (u ^ s)
        return bits

    def neighbor_bitsets(self) -> list[int]:
        return [self.neighbor_bitset(u) for u in range(self.v)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered edges (u, w) with u < w, ordered lexicographically; loops excluded."""
        conn = sorted(s for s in self.connection_set.members if s)
        for u in range(self.v):
            for w in sorted(u ^ s for s in conn):
                if u < w:
                    yield u, w

    def loops(self) -> list[int]:
        return list(range(self.v)) if self.has_loops else []

    def adjacency_matrix(self, max_n: int = RANK_MAX_N) -> list[list[int]]:
        """Dense 0/1 matrix, loop entries on the diagonal; only for small n."""
        check_limit("arity for dense adjacency matrix", self.n, max_n)
        conn = self.connection_set.members
        return [[int((u ^ w) in conn) for w in range(self.v)] for u in range(self.v)]


def build_cayley(f: BooleanFunction) -> CayleyGraph:
    return CayleyGraph(f.n, support(f))


def gf2_span_dim(s: PointSet) -> int:
    """Dimension of the GF(2) span, via an xor basis keyed on leading bit."""
    basis: dict[int, int] = {}
    for vec in s.members:
        while vec:
            top = vec.bit_length() - 1
            if top not in basis:
                basis[top] = vec
                break
            vec ^= basis[top]
    return len(basis)


def component_count(f: BooleanFunction) -> int:
    """Number of cosets of the span of the support, i.e. connected components."""
    return 1 << (f.n - gf2_span_dim(support(f)))


def flood_fill_components(g: CayleyGraph) -> int:
    """Connected components by breadth-first search over the graph itself."""
    seen = [False] * g.v
    count = 0
    for start in range(g.v):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return count


def integer_rank(matrix: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination; rows are gcd-reduced to stay small."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            a = rows[i][col]
            if a:
                r = [p[col] * x - a * y for x, y in zip(rows[i], p)]
                g = 0
                for x in r:
                    g = gcd(g, x)
                rows[i] = [x // g for x in r] if g > 1 else r
        rank += 1
        if rank == len(rows):
            break
    return rank


def adjacency_rank(f: BooleanFunction, eliminate: bool | None = None,
                   max_n: int = RANK_MAX_N) -> int:
    """Count of nonzero eigenvalues; cross-checked by exact elimination when small.

    ``eliminate=None`` runs the elimination whenever n is within ``max_n``;
    ``True`` insists on it and refuses above the guard.
    """
    rank = sum(1 for lam in cayley_eigenvalues(f).indexed if lam)
    if eliminate is None:
        eliminate = f.n <= max_n
    if eliminate:
        check_limit("arity for rank by elimination", f.n, max_n)
        by_elim = integer_rank(build_cayley(f).adjacency_matrix(max_n))
        if by_elim != rank:
            raise InvariantError(f"elimination rank {by_elim} != nonzero eigenvalue count {rank}")
    return rank


@dataclass(frozen=True)
class SymmetryReport:
    connected: bool
    has_minus_lambda0: bool
    spectrum_symmetric: bool


def spectrum_symmetry_report(f: BooleanFunction) -> SymmetryReport:
    ev = cayley_eigenvalues(f)
    ms = ev.multiset
    report = SymmetryReport(
        connected=component_count(f) == 1,
        has_minus_lambda0=-ev.largest in ms,
        spectrum_symmetric=all(ms[-lam] == c for lam, c in ms.items()),
    )
    if report.connected and report.has_minus_lambda0 != report.spectrum_symmetric:
        raise InvariantError(f"connected graph violates spectral symmetry: {report}")
    return report


def character(n: int, w: int) -> list[int]:
    """Q_w(x) = (-1)^(w.x) as a vector indexed by x."""
    return [-1 if dot(w, x) else 1 for x in range(1 << n)]

