"""Sierpinski graphs S(n,m), Hamming graphs K_m^n, and the single-twist variant.

Vertices are n-tuples over {0,...,m-1}, written most significant digit
first. S(n,m) joins u and v when some position h has equal digits before h,
differing digits at h, and crossed constant tails after h (u carries v_h,
v carries u_h). K_m^n joins tuples at Hamming distance 1. The single-twist
graph replaces the crossed tails with a shared tail k = (i+j) mod m.

Graphs store edges as an (E, 2) array of integer vertex codes,
code(v) = sum(v_i * m**(n-i)), canonically sorted and frozen. Constructors
refuse instances over 10**7 vertices; the counting and density formulas
below work at any size with exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels

Vertex = tuple[int, ...]

MAX_VERTICES = 10**7


def vertex_to_code(v: Sequence[int], m: int) -> int:
    c = 0
    for d in v:
        c = c * m + d
    return c


def code_to_vertex(code: int, n: int, m: int) -> Vertex:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        code, out[i] = divmod(code, m)
    return tuple(out)


def check_vertex(v: Sequence[int], n: int, m: int) -> None:
    if len(v) != n:
        raise ValueError(f"expected {n} digits, got {len(v)}")
    for d in v:
        if not 0 <= d < m:
            raise ValueError(f"digit {d} out of range for alphabet {{0..{m - 1}}}")


def _check_params(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")


def _check_scale(n: int, m: int) -> None:
    _check_params(n, m)
    if m**n > MAX_VERTICES:
        raise ValueError(
            f"refusing to build a graph on {m}^{n} = {m**n} vertices "
            f"(limit {MAX_VERTICES}); the counting formulas remain available"
        )


def sierpinski_edge_count(n: int, m: int) -> int:
    """|E(S(n,m))| = (m^(n+1) - m) / 2, exact at any size."""
    _check_params(n, m)
    return (m ** (n + 1) - m) // 2


def hamming_edge_count(n: int, m: int) -> int:
    """|E(K_m^n)| = n (m-1) m^n / 2, exact at any size."""
    _check_params(n, m)
    return n * (m - 1) * m**n // 2


def edge_density(n: int, m: int) -> Fraction:
    """Density of S(n,m)'s clique blocks inside K_m^n: exactly 1/n.

    The m^(n-1) blocks of the clique decomposition each fill a complete
    line of the host, which has n * m^(n-1) lines in all; equivalently the
    block (interior) edges occupy m^n (m-1)/2 of the n m^n (m-1)/2 host
    edges. Exact at any size.
    """
    _check_params(n, m)
    interior = m ** (n - 1) * (m * (m - 1) // 2)
    return Fraction(interior, hamming_edge_count(n, m))


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable graph on {0,...,m-1}^n with a canonical edge array."""

    n: int
    m: int
    kind: str
    edges: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        e = np.asarray(self.edges, np.int64).reshape(-1, 2)
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        e = np.stack((lo, hi), axis=1)
        e = np.unique(e, axis=0)  # sorts rows lexicographically
        if e.size and not (0 <= e.min() and e.max() < self.m**self.n):
            raise ValueError("edge endpoint out of vertex range")
        if e.size and (e[:, 0] == e[:, 1]).any():
            raise ValueError("self-loop in edge list")
        e.setflags(write=False)
        object.__setattr__(self, "edges", e)

    @property
    def num_vertices(self) -> int:
        return self.m**self.n

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def vertices(self) -> Iterator[Vertex]:
        for code in range(self.num_vertices):
            yield code_to_vertex(code, self.n, self.m)

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.num_vertices)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def has_edge(self, u: Sequence[int], v: Sequence[int]) -> bool:
        check_vertex(u, self.n, self.m)
        check_vertex(v, self.n, self.m)
        a = vertex_to_code(u, self.m)
        b = vertex_to_code(v, self.m)
        if a > b:
            a, b = b, a
        key = self.edges[:, 0] * self.num_vertices + self.edges[:, 1]
        idx = np.searchsorted(key, a * self.num_vertices + b)
        return bool(idx < key.shape[0] and key[idx] == a * self.num_vertices + b)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[int(u)].append(int(v))
            adj[int(v)].append(int(u))
        return adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.edges, other.edges)
        )


def build_sierpinski(n: int, m: int) -> Graph:
    _check_scale(n, m)
    return Graph(n, m, "sierpinski", kernels.sierpinski_edges(n, m))


def build_hamming(n: int, m: int) -> Graph:
    _check_scale(n, m)
    return Graph(n, m, "hamming", kernels.hamming_edges(n, m))


def build_single_twist(n: int, m: int) -> Graph:
    _check_scale(n, m)
    return Graph(n, m, "single-twist", kernels.single_twist_edges(n, m))


def from_edge_list(n: int, m: int, kind: str, pairs: Iterable[tuple[Vertex, Vertex]]) -> Graph:
    """Build a Graph from vertex-tuple pairs (used when re-ingesting exports)."""
    _check_scale(n, m)
    rows = []
    for u, v in pairs:
        check_vertex(u, n, m)
        check_vertex(v, n, m)
        rows.append((vertex_to_code(u, m), vertex_to_code(v, m)))
    arr = np.array(rows, np.int64).reshape(-1, 2)
    return Graph(n, m, kind, arr)


def is_sierpinski_edge(u: Sequence[int], v: Sequence[int], m: int) -> bool:
    """Edge rule of S(n,m): equal prefix, one differing digit, crossed tails.

    True iff some position h has u_i = v_i for i < h, u_h != v_h, and
    u_j = v_h, v_j = u_h for every j > h.
    """
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    n = len(u)
    check_vertex(u, n, m)
    check_vertex(v, n, m)
    if tuple(u) == tuple(v):
        raise ValueError("u and v must be distinct")
    h = 0  # first differing position, 0-based
    while u[h] == v[h]:
        h += 1
    if all(u[j] == v[h] and v[j] == u[h] for j in range(h + 1, n)):
        return True
    return False


@dataclass(frozen=True)
class PermutationSymmetry:
    """A permutation of the alphabet, applied to every digit at once."""

    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.pi) != list(range(len(self.pi))):
            raise ValueError(f"not a permutation of 0..{len(self.pi) - 1}: {self.pi}")


def apply_symmetry(pi: PermutationSymmetry, v: Sequence[int]) -> Vertex:
    for d in v:
        if not 0 <= d < len(pi.pi):
            raise ValueError(f"digit {d} outside the permutation's domain")
    return tuple(pi.pi[d] for d in v)


def corners(n: int, m: int) -> list[Vertex]:
    """The m constant vertices i^n, the only degree-(m-1) vertices of S(n,m)."""
    _check_params(n, m)
    return [(i,) * n for i in range(m)]


def km_decomposition(n: int, m: int) -> list[list[Vertex]]:
    """The blocks of the unique partition of E(S(n,m)) into m-cliques.

    Each block holds the m vertices sharing an (n-1)-digit prefix; S(n,m)
    restricted to a block is complete, and every other edge crosses blocks.
    """
    _check_scale(n, m)
    blocks = []
    for p in range(m ** (n - 1)):
        prefix = code_to_vertex(p, n - 1, m)
        blocks.append([prefix + (d,) for d in range(m)])
    return blocks
