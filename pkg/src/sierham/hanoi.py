"""Tower-of-Hanoi solvers on the halved coordinatization of S(n,m).

A position is an n-tuple whose digit i is the peg holding disc i, with
disc 1 the LARGEST disc (radii shrink as the index grows; most folklore
numbers discs the other way around). For odd m, the halved map tau turns
puzzle positions into S(n,m) coordinates where shortest plays become
graph geodesics: solve by pulling a position back through tau, walking
the unique geodesic to the all-zero corner, and pushing each step forward
again.

A single move of disc d from peg i to peg j is legal when every smaller
disc sits on peg (i+j)/2 mod m; for m = 3 that is the familiar physical
rule, and both formulations are implemented so tests can compare them.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .codes import eta_inverse
from .graphs import Vertex, check_vertex
from .maps import _inverse_of_two, tau_forward, tau_inverse

HanoiPosition = Vertex


@dataclass(frozen=True)
class MovePath:
    """An ordered run of positions, tagged with its coordinatization."""

    coords: str  # "S" for graph coordinates, "T" for peg-per-disc
    m: int
    positions: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        if self.coords not in ("S", "T"):
            raise ValueError(f"coords must be 'S' or 'T', got {self.coords!r}")
        if not self.positions:
            raise ValueError("a path holds at least its starting position")
        n = len(self.positions[0])
        for p in self.positions:
            check_vertex(p, n, self.m)

    @property
    def n(self) -> int:
        return len(self.positions[0])

    @property
    def moves(self) -> int:
        return len(self.positions) - 1


def path_length_to_zero(v: Sequence[int]) -> int:
    """Distance from v to the all-zero corner: sum of 2^(n-i) over nonzero digits."""
    n = len(v)
    return sum(2 ** (n - 1 - i) for i, d in enumerate(v) if d != 0)


def shortest_path_to_zero(v: Sequence[int], m: int) -> MovePath:
    """The unique geodesic from v to 0^n in S(n,m), as explicit positions.

    Each step either zeroes a nonzero last digit, or takes the deepest
    nonzero digit c with an all-zero tail and replaces c, 0, ..., 0 by
    0, c, ..., c. Both moves are S(n,m) edges and each lowers the distance
    by exactly one.
    """
    n = len(v)
    check_vertex(v, n, m)
    cur = tuple(v)
    positions = [cur]
    while any(cur):
        if cur[-1] != 0:
            cur = cur[:-1] + (0,)
        else:
            h = max(i for i, d in enumerate(cur) if d != 0)
            c = cur[h]
            cur = cur[:h] + (0,) + (c,) * (n - 1 - h)
        positions.append(cur)
    return MovePath("S", m, tuple(positions))


def solve_from_position(t: Sequence[int], m: int) -> MovePath:
    """Optimal play from an arbitrary position to all-discs-on-peg-0 (odd m)."""
    _inverse_of_two(m)
    spath = shortest_path_to_zero(tau_inverse(t, m), m)
    return MovePath("T", m, tuple(tau_forward(p, m) for p in spath.positions))


def classic_solution(n: int, m: int = 3) -> MovePath:
    """The 2^n - 1 move play carrying all n discs from peg 0 to peg 1 (odd m).

    Position number ell is tau applied to the n-bit binary expansion of
    ell; the untransformed expansions walk the S(n,m) geodesic between the
    two corners in increasing lexicographic order.
    """
    _inverse_of_two(m)
    positions = tuple(
        tau_forward(eta_inverse(ell, n), m) for ell in range(2**n)
    )
    return MovePath("T", m, positions)


def _check_step(ell: int, i: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= ell < 2**n:
        raise ValueError(f"step index {ell} out of range for n={n}")
    if not 1 <= i <= n:
        raise ValueError(f"disc index {i} out of range for n={n}")


def position_coordinate(ell: int, i: int, n: int) -> int:
    """Digit i of classic-solution position ell for m = 3, by direct formula.

    Evaluates 2^(i-1) times the additive-map coordinate of the binary
    expansion of ell, everything mod 3.
    """
    _check_step(ell, i, n)
    bits = eta_inverse(ell, n)
    s = 0  # additive-map accumulator over the first i bits
    w = 0
    for d in bits[:i]:
        w = (d + s) % 3
        s = (2 * s + d) % 3
    return pow(2, i - 1, 3) * w % 3


def wolfe_coordinate(ell: int, i: int, n: int) -> int:
    """Digit i of classic-solution position ell for m = 3, by the floor formula.

    Twice the digit is ((i mod 2) + 1) * floor((ell + 2^(n-i)) / 2^(n+1-i))
    mod 3; multiply by the inverse of 2 to recover the digit itself. The
    inner power counts positions from the smallest disc, which is why n is
    a genuine input here.
    """
    _check_step(ell, i, n)
    doubled = ((i % 2) + 1) * ((ell + 2 ** (n - i)) // 2 ** (n + 1 - i)) % 3
    return 2 * doubled % 3


def is_legal_move(a: Sequence[int], b: Sequence[int], m: int) -> bool:
    """True when a -> b moves one disc legally (odd m, algebraic rule).

    Exactly one digit may change, say disc d going from peg i to peg j;
    every smaller disc (index > d) must sit on peg (i + j) / 2 mod m.
    """
    inv2 = _inverse_of_two(m)
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    check_vertex(a, n, m)
    check_vertex(b, n, m)
    diffs = [idx for idx in range(n) if a[idx] != b[idx]]
    if len(diffs) != 1:
        return False
    d = diffs[0]
    k = inv2 * (a[d] + b[d]) % m
    return all(a[t] == k for t in range(d + 1, n))


def is_legal_move_physical(a: Sequence[int], b: Sequence[int]) -> bool:
    """Three-peg physical rule: smaller discs must be clear of both pegs.

    Disc d can move from peg i to peg j when no smaller disc lies on i
    (it would be on top of d) or on j (d would land on it). m = 3 only;
    must agree with is_legal_move there.
    """
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    check_vertex(a, n, 3)
    check_vertex(b, n, 3)
    diffs = [idx for idx in range(n) if a[idx] != b[idx]]
    if len(diffs) != 1:
        return False
    d = diffs[0]
    i, j = a[d], b[d]
    return all(a[t] != i and a[t] != j for t in range(d + 1, n))


def diplomats_table(n: int) -> list[tuple[Vertex, Vertex]]:
    """The five-peg transport schedule: row ell pairs binary ell with its
    halved-map image over m = 5."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rows = []
    for ell in range(2**n):
        s = eta_inverse(ell, n)
        rows.append((s, tau_forward(s, 5)))
    return rows


def _max_exterior_edges(m: int, lines: list[set[tuple[int, int]]]) -> int:
    """Most block-crossing edges a corner-per-line decomposition can host.

    Every pair of lines may contribute at most one Hamming-distance-1 edge,
    endpoints must avoid the corners, and no vertex serves twice.
    Branch-and-bound over the line pairs.
    """
    pairs = list(combinations(range(m), 2))
    candidates: list[list[tuple[tuple[int, int], tuple[int, int]]]] = []
    for i, j in pairs:
        opts = []
        for p in lines[i]:
            if p == (i, i):
                continue
            for q in lines[j]:
                if q == (j, j):
                    continue
                if (p[0] == q[0]) != (p[1] == q[1]):  # Hamming distance 1
                    opts.append((p, q))
        candidates.append(opts)

    best = 0
    used: set[tuple[int, int]] = set()

    def extend(idx: int, count: int) -> None:
        nonlocal best
        if count + len(pairs) - idx <= best:
            return
        if idx == len(pairs):
            best = count
            return
        for p, q in candidates[idx]:
            if p in used or q in used:
                continue
            used.add(p)
            used.add(q)
            extend(idx + 1, count + 1)
            used.discard(p)
            used.discard(q)
        extend(idx + 1, count)  # the pair may also stay unconnected

    extend(0, 0)
    return best


def constant_corner_search(m: int, n: int = 2) -> dict:
    """Can S(n,m) be relabeled inside K_m^n keeping every corner constant?

    Odd m: yes, the halved map is a witness. Even m, n = 2: exhaustively
    try every assignment of one axis line per corner that partitions the
    vertex set, and count how many block-crossing edges survive; existence
    needs one per line pair, and the search always falls short. Even m with
    n > 2 is refused: the two-dimensional argument does not transfer and no
    search is attempted.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m % 2 == 1:
        return {
            "m": m,
            "n": n,
            "exists": True,
            "witness": "tau_forward",
            "detail": "the halved map fixes every corner and embeds S(n,m)",
        }
    if n != 2:
        raise ValueError(
            "the even-m search is only implemented for n=2; whether "
            "constant-corner relabelings exist for even m and larger n "
            "is not attempted here"
        )
    required = m * (m - 1) // 2
    best = 0
    decompositions = 0
    for mask in range(2**m):
        lines = []
        for i in range(m):
            if mask >> i & 1:
                lines.append({(i, y) for y in range(m)})
            else:
                lines.append({(x, i) for x in range(m)})
        if len(set().union(*lines)) != m * m:
            continue  # chosen lines overlap, not a decomposition
        decompositions += 1
        best = max(best, _max_exterior_edges(m, lines))
    return {
        "m": m,
        "n": 2,
        "exists": best >= required,
        "witness": None,
        "max_exterior_edges": best,
        "required_exterior_edges": required,
        "decompositions_searched": decompositions,
        "detail": (
            f"max exterior edges {best} < {required} required"
            if best < required
            else f"found a decomposition carrying {best} exterior edges"
        ),
    }
