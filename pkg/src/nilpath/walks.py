"""Path graphs and their walks: construction, validity, counting, enumeration.

The path graph on n vertices has vertex set 1..n and an edge between each
pair of consecutive integers. Walk counts between two vertices are computed
three independent ways across this package: a step-by-step counting vector
(exact, arbitrary precision), a mod-2 bit-vector version of the same
recurrence, and powers of the adjacency matrix. Brute-force enumeration
backs them all at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .gf2 import GF2Matrix

__all__ = [
    "DEFAULT_ENUM_CAP",
    "EnumerationCapExceeded",
    "PathSpec",
    "Walk",
    "path_adjacency",
    "walk_is_valid",
    "iter_walks_from",
    "enumerate_walks",
    "count_walks_exact",
    "count_walks_parity",
    "integer_adjacency_power",
]

# Enumeration refuses lengths above this unless the caller raises the cap:
# the number of walks grows like 2^k.
DEFAULT_ENUM_CAP = 24


class EnumerationCapExceeded(Exception):
    """Requested walk length exceeds the configured enumeration cap."""


@dataclass(frozen=True)
class PathSpec:
    """A path-graph size, optionally tagged with m when n = 2^m - 1."""

    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be at least 1, got {self.n}")
        if self.m is not None and self.n != 2**self.m - 1:
            raise ValueError(f"n = {self.n} is not 2^{self.m} - 1")

    @classmethod
    def from_m(cls, m: int) -> "PathSpec":
        if m < 1:
            raise ValueError(f"m must be at least 1, got {m}")
        return cls(2**m - 1, m)

    @classmethod
    def from_n(cls, n: int) -> "PathSpec":
        """Tag n with m when n + 1 is a power of two; otherwise leave m unset."""
        if n >= 1 and (n + 1) & n == 0:
            return cls(n, n.bit_length())
        return cls(n)


@dataclass(frozen=True)
class Walk:
    """A non-empty vertex sequence; its length is the number of steps.

    Construction does not pin the walk to a particular path graph; use
    ``walk_is_valid`` to check it against a vertex count n.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if not vs:
            raise ValueError("a walk needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __str__(self) -> str:
        return "-".join(str(v) for v in self.vertices)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")


def _check_vertex(n: int, v: int, name: str) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"{name} = {v} is outside 1..{n}")


def path_adjacency(n: int) -> GF2Matrix:
    """Adjacency matrix of the n-vertex path: bit (i, j) = 1 iff |i - j| = 1."""
    _check_n(n)
    rows = []
    for i in range(n):
        row = 0
        if i > 0:
            row |= 1 << (i - 1)
        if i + 1 < n:
            row |= 1 << (i + 1)
        rows.append(row)
    return GF2Matrix(n, tuple(rows))


def walk_is_valid(n: int, walk: Walk) -> bool:
    """True iff all vertices lie in 1..n and every step moves by exactly 1."""
    vs = walk.vertices
    if any(not 1 <= v <= n for v in vs):
        return False
    return all(abs(b - a) == 1 for a, b in zip(vs, vs[1:]))


def iter_walks_from(n: int, x: int, k: int) -> Iterator[Walk]:
    """Yield every length-k walk starting at x, in lexicographic order."""
    _check_n(n)
    _check_vertex(n, x, "x")
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    if k == 0:
        yield Walk((x,))
        return
    path = [x]
    stack = [_moves(x, n)]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            path.pop()
            continue
        path.append(v)
        if len(path) == k + 1:
            yield Walk(tuple(path))
            path.pop()
        else:
            stack.append(_moves(v, n))


def _moves(v: int, n: int) -> Iterator[int]:
    return iter([u for u in (v - 1, v + 1) if 1 <= u <= n])


def enumerate_walks(
    n: int, x: int, y: int, k: int, cap: int = DEFAULT_ENUM_CAP
) -> list[Walk]:
    """All length-k walks from x to y, in lexicographic order of vertex tuples.

    Raises EnumerationCapExceeded for k > cap; there can be up to 2^k walks.
    The search prunes any prefix that cannot reach y in the remaining steps
    (too far away, or wrong parity), so the cost is linear in the output.
    """
    _check_n(n)
    _check_vertex(n, x, "x")
    _check_vertex(n, y, "y")
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    if k > cap:
        raise EnumerationCapExceeded(
            f"length {k} exceeds the enumeration cap {cap}"
        )
    return list(_iter_walks_between(n, x, y, k))


def _iter_walks_between(n: int, x: int, y: int, k: int) -> Iterator[Walk]:
    def reachable(v: int, steps: int) -> bool:
        d = abs(v - y)
        return d <= steps and (steps - d) % 2 == 0

    if not reachable(x, k):
        return
    if k == 0:
        yield Walk((x,))
        return
    path = [x]
    stack = [_pruned_moves(x, n, y, k - 1, reachable)]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            path.pop()
            continue
        path.append(v)
        if len(path) == k + 1:
            yield Walk(tuple(path))
            path.pop()
        else:
            stack.append(_pruned_moves(v, n, y, k - len(path), reachable))
    return


def _pruned_moves(v, n, y, steps_after, reachable) -> Iterator[int]:
    return iter(
        [u for u in (v - 1, v + 1) if 1 <= u <= n and reachable(u, steps_after)]
    )


def count_walks_exact(n: int, x: int, y: int, k: int) -> int:
    """Exact number of length-k walks from x to y, as a Python int.

    Runs the counting vector forward k steps: the count at a vertex is the
    sum of the counts at its neighbors one step earlier. Counts grow like
    2^k, hence arbitrary precision. A length-0 walk exists exactly when
    x = y.
    """
    _check_n(n)
    _check_vertex(n, x, "x")
    _check_vertex(n, y, "y")
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    # positions 0 and n + 1 are permanent-zero sentinels
    counts = [0] * (n + 2)
    counts[x] = 1
    for _ in range(k):
        counts = [0] + [counts[v - 1] + counts[v + 1] for v in range(1, n + 1)] + [0]
    return counts[y]


def count_walks_parity(n: int, x: int, y: int, k: int) -> int:
    """Parity (0 or 1) of the number of length-k walks from x to y.

    Same recurrence as ``count_walks_exact`` but carried natively mod 2:
    the whole counting vector is one bit mask and a step is two shifts and
    an XOR. Equals bit (x, y) of the k-th adjacency-matrix power.
    """
    _check_n(n)
    _check_vertex(n, x, "x")
    _check_vertex(n, y, "y")
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    mask = 1 << (x - 1)
    full = (1 << n) - 1
    for _ in range(k):
        mask = ((mask << 1) ^ (mask >> 1)) & full
    return mask >> (y - 1) & 1


def integer_adjacency_power(n: int, k: int) -> list[list[int]]:
    """k-th power of the 0/1 path adjacency matrix over the integers.

    Deliberately plain repeated multiplication; this is the slow reference
    route that the fast counters are checked against, entry by entry
    (entry (x-1, y-1) is the exact number of length-k walks from x to y).
    """
    _check_n(n)
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    adj = [[1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        nxt = [[0] * n for _ in range(n)]
        for i in range(n):
            row = out[i]
            target = nxt[i]
            for z in range(n):
                c = row[z]
                if c:
                    arow = adj[z]
                    for j in range(n):
                        if arow[j]:
                            target[j] += c
        out = nxt
    return out
