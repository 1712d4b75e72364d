"""Executable three-class evenness argument for path-graph walk counts.

For n = 2^m - 1 and any k >= n, the number of length-k walks between two
vertices of the n-path is even. The argument partitions walks by how often
they visit the midpoint 2^(m-1): never (class 1), exactly once (class 2),
or at least twice (class 3). Class 1 lives inside one half-path, class 2
factors into two half-path subwalks around the single visit, and class 3
is paired off by reflecting the segment between the first two visits. This
module makes every step of that argument runnable and checkable: the
classifier, the class-2 splitter, the class-3 reflection, an exact census
of the three classes, a recursive certificate builder, and the tempting
but broken variant of the reflection that picks its pivot by divisibility.
"""

from __future__ import annotations

import enum
import time
from collections import Counter
from dataclasses import dataclass

from .report import Detail, ParityReport
from .walks import (
    DEFAULT_ENUM_CAP,
    EnumerationCapExceeded,
    Walk,
    count_walks_exact,
    count_walks_parity,
    iter_walks_from,
    walk_is_valid,
)

__all__ = [
    "ClassTag",
    "WalkClass",
    "Class2Split",
    "ClassCensus",
    "ReflectionOutOfBounds",
    "classify",
    "class2_decompose",
    "reflect_class3",
    "class_census",
    "theorem_check",
    "naive_pivot",
    "naive_reflect",
    "find_naive_failure",
]


class ReflectionOutOfBounds(Exception):
    """A reflected vertex left the range 1..n."""


class ClassTag(enum.Enum):
    CLASS1 = 1
    CLASS2 = 2
    CLASS3 = 3


@dataclass(frozen=True)
class WalkClass:
    """Classification of a walk relative to a pivot vertex."""

    tag: ClassTag
    pivot_visits: int


@dataclass(frozen=True)
class Class2Split:
    """A class-2 walk cut at its unique pivot visit.

    ``step`` is the index of the visit; ``left`` is the part before it and
    ``right`` the part after, either of which is absent when the visit sits
    at the corresponding end of the walk. Both parts stay strictly on one
    side of the pivot.
    """

    step: int
    left: Walk | None
    right: Walk | None


@dataclass(frozen=True)
class ClassCensus:
    """Exact sizes of the three classes for fixed endpoints and length.

    ``per_step_c2[i]`` counts the class-2 walks whose single pivot visit
    happens after exactly i steps; the entries sum to c2.
    """

    c1: int
    c2: int
    c3: int
    per_step_c2: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.c1 + self.c2 + self.c3


def _require_valid(n: int, walk: Walk) -> None:
    if not walk_is_valid(n, walk):
        raise ValueError(f"walk {walk} is not a valid walk in the {n}-path")


def _require_vertex(n: int, v: int, name: str) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"{name} = {v} is outside 1..{n}")


def classify(n: int, walk: Walk, pivot: int) -> WalkClass:
    """Class of a walk by its number of pivot visits: 0, 1, or >= 2."""
    _require_valid(n, walk)
    _require_vertex(n, pivot, "pivot")
    visits = sum(1 for v in walk.vertices if v == pivot)
    if visits == 0:
        tag = ClassTag.CLASS1
    elif visits == 1:
        tag = ClassTag.CLASS2
    else:
        tag = ClassTag.CLASS3
    return WalkClass(tag, visits)


def class2_decompose(n: int, walk: Walk, pivot: int) -> Class2Split:
    """Cut a class-2 walk at its unique pivot visit.

    Splicing left + pivot + right back together reproduces the walk.
    """
    wc = classify(n, walk, pivot)
    if wc.tag is not ClassTag.CLASS2:
        raise ValueError(
            f"walk {walk} visits pivot {pivot} {wc.pivot_visits} times, not once"
        )
    vs = walk.vertices
    i = vs.index(pivot)
    left = Walk(vs[:i]) if i > 0 else None
    right = Walk(vs[i + 1 :]) if i < walk.length else None
    return Class2Split(i, left, right)


def reflect_class3(n: int, walk: Walk, pivot: int) -> Walk:
    """Mirror the segment between the first two pivot visits of a class-3 walk.

    Vertices strictly between the visits map to ``2 * pivot - v``, turning
    every step away from the pivot into a step toward it and vice versa.
    The result keeps the start, end, length, and class of the input, is
    never equal to it, and applying the map twice restores the input.
    Raises ReflectionOutOfBounds when a mirrored vertex would leave 1..n:
    impossible for the exact midpoint pivot of an odd path, but easy to
    trigger for off-center pivots.
    """
    wc = classify(n, walk, pivot)
    if wc.tag is not ClassTag.CLASS3:
        raise ValueError(
            f"walk {walk} visits pivot {pivot} {wc.pivot_visits} times, "
            "need at least two"
        )
    vs = list(walk.vertices)
    first = vs.index(pivot)
    second = vs.index(pivot, first + 1)
    for t in range(first + 1, second):
        mirrored = 2 * pivot - vs[t]
        if not 1 <= mirrored <= n:
            raise ReflectionOutOfBounds(
                f"vertex {vs[t]} reflects to {mirrored}, outside 1..{n}"
            )
        vs[t] = mirrored
    return Walk(tuple(vs))


def _avoiding_counts(n: int, forbidden: int, start: int, steps: int) -> list[list[int]]:
    """Counting vectors for walks from ``start`` that never touch ``forbidden``.

    Returns per-step vectors with sentinel zeros at 0 and n + 1; all-zero
    throughout when start == forbidden (the walk is dirty from step 0).
    """
    row = [0] * (n + 2)
    if start != forbidden:
        row[start] = 1
    table = [row]
    for _ in range(steps):
        nxt = [0] * (n + 2)
        for v in range(1, n + 1):
            if v != forbidden:
                nxt[v] = row[v - 1] + row[v + 1]
        row = nxt
        table.append(row)
    return table


def class_census(n: int, pivot: int, x: int, y: int, k: int) -> ClassCensus:
    """Exact three-class counts for walks of length k from x to y.

    c1 comes from a pivot-avoiding count, per_step_c2[i] is the product of
    a clean prefix count (first pivot contact exactly at step i) and a
    clean suffix count, and c3 is the remainder of the total.
    """
    _require_vertex(n, pivot, "pivot")
    _require_vertex(n, x, "x")
    _require_vertex(n, y, "y")
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    total = count_walks_exact(n, x, y, k)
    fwd = _avoiding_counts(n, pivot, x, k)
    bwd = _avoiding_counts(n, pivot, y, k)  # walk reversal: counts from y
    c1 = fwd[k][y]
    # arrivals[i]: walks x -> pivot of length i whose only pivot visit is the
    # final vertex; departures[j]: the mirror image for pivot -> y.
    arrivals = [1 if x == pivot else 0]
    departures = [1 if y == pivot else 0]
    for t in range(1, k + 1):
        arrivals.append(fwd[t - 1][pivot - 1] + fwd[t - 1][pivot + 1])
        departures.append(bwd[t - 1][pivot - 1] + bwd[t - 1][pivot + 1])
    per_step = tuple(arrivals[i] * departures[k - i] for i in range(k + 1))
    c2 = sum(per_step)
    return ClassCensus(c1, c2, total - c1 - c2, per_step)


def _half_vertex(v: int, pivot: int) -> int:
    """Map a non-pivot vertex to its coordinate inside its half-path."""
    return v if v < pivot else v - pivot


def _pivot_neighbor(v: int, pivot: int) -> int:
    """The neighbor of the pivot on the same side as v."""
    return pivot - 1 if v < pivot else pivot + 1


def _replay_even(
    m: int,
    k: int,
    x: int,
    y: int,
    memo: set[tuple[int, int, int, int]],
    trace: dict[str, str] | None = None,
) -> None:
    """Re-derive, structurally, that the (m, k, x, y) walk count is even.

    Splits on midpoint visits and recurses into the half-paths, which are
    themselves paths on 2^(m-1) - 1 vertices. Nothing is enumerated; the
    function only checks that every case of the argument applies, and
    raises RuntimeError if the case analysis ever fails to cover. ``trace``
    (top level only) receives one justification string per class.
    """
    key = (m, k, x, y)
    if trace is None and key in memo:
        return
    n = 2**m - 1
    if k < n:
        raise RuntimeError(f"recursion broke the length bound: k = {k} < n = {n}")
    if m == 1:
        # single vertex, no edges: zero walks of any positive length
        memo.add(key)
        return
    p = 2 ** (m - 1)
    half = m - 1
    half_n = 2**half - 1

    if x == p or y == p:
        c1_note = f"empty: an endpoint equals the midpoint {p}"
    elif (x < p) != (y < p):
        c1_note = f"empty: endpoints on opposite sides of the midpoint {p}"
    else:
        _replay_even(half, k, _half_vertex(x, p), _half_vertex(y, p), memo)
        side = "left" if x < p else "right"
        c1_note = (
            f"confined to the {side} half, a path on {half_n} vertices; "
            f"recurse with the same k = {k}"
        )

    kinds: Counter[str] = Counter()
    for i in range(k + 1):
        if i == 0:
            if x != p or y == p:
                kinds["structurally empty"] += 1
            else:
                # suffix of length k - 1 on y's side, pivot-free after step 0
                _replay_even(
                    half,
                    k - 1,
                    _half_vertex(_pivot_neighbor(y, p), p),
                    _half_vertex(y, p),
                    memo,
                )
                kinds["suffix recursion"] += 1
        elif i == k:
            if y != p or x == p:
                kinds["structurally empty"] += 1
            else:
                _replay_even(
                    half,
                    k - 1,
                    _half_vertex(x, p),
                    _half_vertex(_pivot_neighbor(x, p), p),
                    memo,
                )
                kinds["prefix recursion"] += 1
        elif x == p or y == p:
            # an interior first-and-only visit is impossible when an
            # endpoint already sits on the midpoint
            kinds["structurally empty"] += 1
        elif i - 1 >= half_n:
            _replay_even(
                half,
                i - 1,
                _half_vertex(x, p),
                _half_vertex(_pivot_neighbor(x, p), p),
                memo,
            )
            kinds["prefix recursion"] += 1
        elif k - i - 1 >= half_n:
            _replay_even(
                half,
                k - i - 1,
                _half_vertex(_pivot_neighbor(y, p), p),
                _half_vertex(y, p),
                memo,
            )
            kinds["suffix recursion"] += 1
        else:
            raise RuntimeError(
                f"neither factor of the step-{i} split reaches length "
                f"{half_n}; that contradicts k >= {n}"
            )

    if trace is not None:
        trace["class1"] = c1_note
        summary = ", ".join(
            f"{kinds[kind]} {kind}" + ("s" if kinds[kind] != 1 and kind != "structurally empty" else "")
            for kind in ("prefix recursion", "suffix recursion", "structurally empty")
            if kinds[kind]
        )
        trace["class2"] = f"visit offsets 0..{k}: {summary}"
        trace["class3"] = (
            "paired by reflecting between the first two midpoint visits; "
            "the exact midpoint keeps every reflection inside 1..n"
        )
    memo.add(key)


def theorem_check(m: int, k: int, x: int, y: int) -> ParityReport:
    """Certify that the length-k walk count from x to y is even, for k >= n.

    Requires n = 2^m - 1 vertices and k >= n. Builds the recursive
    per-class certificate, measures each class's actual parity with the
    exact census, and cross-checks the total against the mod-2 counting
    vector. The report carries one row per class plus the cross-check.
    """
    started = time.perf_counter()
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    n = 2**m - 1
    if k < n:
        raise ValueError(f"k = {k} is below the bound: need k >= n = {n}")
    _require_vertex(n, x, "x")
    _require_vertex(n, y, "y")

    params = {"m": m, "n": n, "k": k, "x": x, "y": y}
    details: list[Detail] = []
    if m == 1:
        count = count_walks_exact(1, 1, 1, k)
        details.append(
            Detail(
                "walk count in the single-vertex path",
                "even",
                _parity_word(count),
                "base case: no edges, so no walks of positive length",
            )
        )
    else:
        pivot = 2 ** (m - 1)
        trace: dict[str, str] = {}
        _replay_even(m, k, x, y, set(), trace)
        census = class_census(n, pivot, x, y, k)
        details.append(
            Detail(
                "class 1: walks avoiding the midpoint",
                "even",
                _parity_word(census.c1),
                trace["class1"],
            )
        )
        odd_offsets = [i for i, c in enumerate(census.per_step_c2) if c % 2]
        details.append(
            Detail(
                "class 2: single midpoint visit, every visit offset",
                "even",
                "even" if not odd_offsets else f"odd at offsets {odd_offsets}",
                trace["class2"],
            )
        )
        details.append(
            Detail(
                "class 3: two or more midpoint visits",
                "even",
                _parity_word(census.c3),
                trace["class3"],
            )
        )
    details.append(
        Detail(
            "mod-2 walk count",
            0,
            count_walks_parity(n, x, y, k),
            "bit-vector counting recurrence, independent of the class split",
        )
    )
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return ParityReport.from_details("theorem-check", params, details, elapsed_ms)


def _parity_word(count: int) -> str:
    return "even" if count % 2 == 0 else "odd"


def naive_pivot(walk: Walk) -> int | None:
    """The repeated vertex with the highest power of 2 in its factorization.

    Among vertices visited at least twice, picks those whose 2-exponent is
    maximal, then the one whose second visit comes first (a total order
    already, since positions are distinct across vertices) with the first
    visit as a formal tie-break. None when no vertex repeats.
    """
    positions: dict[int, list[int]] = {}
    for t, v in enumerate(walk.vertices):
        positions.setdefault(v, []).append(t)
    repeated = {v: ps for v, ps in positions.items() if len(ps) >= 2}
    if not repeated:
        return None
    best_exp = max(_two_exponent(v) for v in repeated)
    candidates = [v for v in repeated if _two_exponent(v) == best_exp]
    return min(candidates, key=lambda v: (repeated[v][1], repeated[v][0]))


def _two_exponent(v: int) -> int:
    return (v & -v).bit_length() - 1


def naive_reflect(n: int, walk: Walk) -> Walk:
    """Reflect between the first two visits of the naive divisibility pivot.

    Looks appealing because the pivot survives the reflection, so applying
    the map twice restores the walk. But nothing anchors the pivot to the
    middle of the path, so the mirrored segment can leave 1..n, in which
    case this raises ReflectionOutOfBounds. That failure is the reason the
    certified argument splits class 2 instead of reflecting across any
    repeated vertex.
    """
    _require_valid(n, walk)
    pivot = naive_pivot(walk)
    if pivot is None:
        raise ValueError(f"walk {walk} has no repeated vertex to reflect around")
    return reflect_class3(n, walk, pivot)


def find_naive_failure(
    n: int, k: int, cap: int = DEFAULT_ENUM_CAP
) -> Walk | None:
    """First length-k walk (lexicographically) whose naive reflection escapes.

    Scans every walk of length k in the n-path in lexicographic order and
    returns the first one where ``naive_reflect`` leaves 1..n, or None when
    the naive method happens to work everywhere at this size.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    if k > cap:
        raise EnumerationCapExceeded(
            f"length {k} exceeds the enumeration cap {cap}"
        )
    for start in range(1, n + 1):
        for walk in iter_walks_from(n, start, k):
            pivot = naive_pivot(walk)
            if pivot is None:
                continue
            try:
                reflect_class3(n, walk, pivot)
            except ReflectionOutOfBounds:
                return walk
    return None
