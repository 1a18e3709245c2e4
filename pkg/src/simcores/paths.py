"""Lattice paths: rectangle Dyck paths, their coarea, and generalized Dyck paths.

Rectangle convention: the (s, t) rectangle has width t and height s, paths
run from (0,0) to (t, s) weakly above the line y = (s/t)x, and the region
above a path is read off as a partition via its column heights.  The
diagonal-hugging path then carries the partition with parts floor(s*i/t).

Generalized paths run from (0,0) to (n,n) weakly above y = x with steps
(0,k), (k,0) and (i,i) for 1 <= i <= k-1; k = 1 gives classical Dyck paths
and k = 2 encodes Motzkin paths.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationCapError, NonCoprimeError
from .exact import binomial
from .partitions import Partition
from .posets import GapPoset, consecutive_poset

DEFAULT_LIST_CAP = 10**6


def _require_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"rectangle sides must be >= 1, got ({s}, {t})")
    g = math.gcd(s, t)
    if g != 1:
        raise NonCoprimeError(s, t, g)


class RectPath:
    """N/E path from (0,0) to (t, s) staying weakly above y = (s/t)x."""

    __slots__ = ("s", "t", "steps")

    def __init__(self, s: int, t: int, steps: Sequence[str]):
        _require_coprime(s, t)
        x = y = 0
        for step in steps:
            if step == "N":
                y += 1
            elif step == "E":
                x += 1
            else:
                raise ValueError(f"rectangle path steps must be N or E, got {step!r}")
            if t * y < s * x:
                raise ValueError(f"path dips below the diagonal at ({x}, {y})")
        if (x, y) != (t, s):
            raise ValueError(f"path ends at ({x}, {y}), expected ({t}, {s})")
        self.s, self.t = s, t
        self.steps = tuple(steps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RectPath):
            return NotImplemented
        return (self.s, self.t, self.steps) == (other.s, other.t, other.steps)

    def __hash__(self):
        return hash((self.s, self.t, self.steps))

    def __repr__(self) -> str:
        return f"RectPath({self.s}, {self.t}, {''.join(self.steps)!r})"

    def heights(self) -> tuple[int, ...]:
        """Path height over each unit column, weakly increasing."""
        out = []
        y = 0
        for step in self.steps:
            if step == "N":
                y += 1
            else:
                out.append(y)
        return tuple(out)

    def partition_above(self) -> Partition:
        """Cells above the path, read as column heights (weakly decreasing)."""
        return Partition(self.s - h for h in self.heights() if h < self.s)

    def coarea(self) -> int:
        """Number of cells between the path and the top-left corner."""
        return sum(self.s - h for h in self.heights())

    def to_json(self) -> list[str]:
        return list(self.steps)


def count_rect_paths(s: int, t: int) -> int:
    """binomial(s+t, s) / (s+t): the cycle-lemma count, exact division."""
    _require_coprime(s, t)
    q, r = divmod(binomial(s + t, s), s + t)
    assert r == 0, "cycle-lemma division must be exact for coprime sides"
    return q


def diagonal_partition(s: int, t: int) -> Partition:
    """Partition above the diagonal-hugging path: parts floor(s*i/t), i < t."""
    _require_coprime(s, t)
    return Partition(sorted((s * i // t for i in range(1, t)), reverse=True))


def enumerate_rect_paths(s: int, t: int, max_items: int | None = DEFAULT_LIST_CAP) -> Iterator[RectPath]:
    """All (s, t) paths, N-step first at every branch (deterministic order)."""
    _require_coprime(s, t)
    count = 0
    steps: list[str] = []

    def rec(x: int, y: int) -> Iterator[RectPath]:
        nonlocal count
        if x == t and y == s:
            count += 1
            if max_items is not None and count > max_items:
                raise EnumerationCapError(f"({s},{t}) rectangle paths", max_items)
            yield RectPath(s, t, steps)
            return
        if y < s:
            steps.append("N")
            yield from rec(x, y + 1)
            steps.pop()
        if x < t and t * y >= s * (x + 1):
            steps.append("E")
            yield from rec(x + 1, y)
            steps.pop()

    yield from rec(0, 0)


# ---------------------------------------------------------------------------
# generalized Dyck paths


def _step_displacement(step: str, k: int) -> tuple[int, int]:
    kind, amount = step[0], step[1:]
    if not amount.isdigit():
        raise ValueError(f"malformed step {step!r}")
    a = int(amount)
    if kind == "N" and a == k:
        return (0, k)
    if kind == "E" and a == k:
        return (k, 0)
    if kind == "D" and 1 <= a <= k - 1:
        return (a, a)
    raise ValueError(f"step {step!r} is not valid for k={k}")


class GeneralizedDyckPath:
    """Path from (0,0) to (n,n) weakly above y = x over steps Nk, Ek, D1..D(k-1)."""

    __slots__ = ("n", "k", "steps")

    def __init__(self, n: int, k: int, steps: Sequence[str]):
        if n < 1 or k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
        x = y = 0
        for step in steps:
            dx, dy = _step_displacement(step, k)
            x, y = x + dx, y + dy
            if y < x:
                raise ValueError(f"path dips below y = x at ({x}, {y})")
        if (x, y) != (n, n):
            raise ValueError(f"path ends at ({x}, {y}), expected ({n}, {n})")
        self.n, self.k = n, k
        self.steps = tuple(steps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneralizedDyckPath):
            return NotImplemented
        return (self.n, self.k, self.steps) == (other.n, other.k, other.steps)

    def __hash__(self):
        return hash((self.n, self.k, self.steps))

    def __repr__(self) -> str:
        return f"GeneralizedDyckPath({self.n}, {self.k}, {list(self.steps)})"

    def points(self) -> Iterator[tuple[int, int]]:
        x = y = 0
        yield (x, y)
        for step in self.steps:
            dx, dy = _step_displacement(step, self.k)
            x, y = x + dx, y + dy
            yield (x, y)

    def inflate(self) -> tuple[str, ...]:
        """Unit N/E path with each D_i replaced by N^i E^i; injective on paths."""
        out: list[str] = []
        for step in self.steps:
            dx, dy = _step_displacement(step, self.k)
            if dx == 0:
                out.extend("N" * dy)
            elif dy == 0:
                out.extend("E" * dx)
            else:
                out.extend("N" * dy)
                out.extend("E" * dx)
        return tuple(out)

    def to_json(self) -> list[str]:
        return list(self.steps)


def count_gd(n: int, k: int) -> int:
    """Number of generalized (n,k) paths via first-return decomposition.

    Value 1 for n <= 0 by convention; a first diagonal return at point s < k
    forces a leading D_s step, at s >= k a leading Nk and a closing Ek.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return _count_gd(n, k)


@lru_cache(maxsize=None)
def _count_gd(n: int, k: int) -> int:
    if n <= 0:
        return 1
    return sum(_count_gd(s - k, k) * _count_gd(n - s, k) for s in range(1, n + 1))


def enumerate_gd(n: int, k: int, max_items: int | None = DEFAULT_LIST_CAP) -> Iterator[GeneralizedDyckPath]:
    """All generalized (n,k) paths; step order Nk, Ek, D1..D(k-1) at each branch."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    step_names = [f"N{k}", f"E{k}"] + [f"D{i}" for i in range(1, k)]
    moves = [(name, _step_displacement(name, k)) for name in step_names]
    count = 0
    steps: list[str] = []

    def rec(x: int, y: int) -> Iterator[GeneralizedDyckPath]:
        nonlocal count
        if x == n and y == n:
            count += 1
            if max_items is not None and count > max_items:
                raise EnumerationCapError(f"generalized ({n},{k}) paths", max_items)
            yield GeneralizedDyckPath(n, k, steps)
            return
        for name, (dx, dy) in moves:
            nx, ny = x + dx, y + dy
            if ny <= n and nx <= ny:
                steps.append(name)
                yield from rec(nx, ny)
                steps.pop()

    yield from rec(0, 0)


def diagonal_cell_labels(n: int, k: int) -> dict[tuple[int, int], int]:
    """Labels of the cells on every k-th diagonal of the n x n lattice.

    Cells are unit squares indexed by their lower-left corner; only the
    diagonals y - x = qk + 1 carry labels, and cell (x, x + qk + 1) gets
    q*(n+k) + 1 + x, so labels increase to the northeast along a diagonal
    and successive diagonals start at 1, 1+(n+k), 1+2(n+k), ...
    """
    labels = {}
    q = 0
    while q * k + 1 <= n - 1:
        d = q * k + 1
        for x in range(n - d):
            labels[(x, x + d)] = q * (n + k) + 1 + x
        q += 1
    return labels


def gd_to_ideal(path: GeneralizedDyckPath, poset: GapPoset | None = None) -> frozenset[int]:
    """Lower ideal of the consecutive poset for {n, ..., n+k} matching the path.

    Collects the diagonal_cell_labels of the cells strictly below the
    inflated path, so the all-vertical-first path maps to the full gap set
    and the diagonal-hugging path to the empty ideal; this orientation is
    the one under which the label sets are downward closed.  The result is
    asserted to be a lower ideal; a failure there means a labeling bug,
    not bad input.
    """
    n, k = path.n, path.k
    if poset is None:
        poset = consecutive_poset(n, k)
    heights = [0] * n
    x = y = 0
    for step in path.inflate():
        if step == "N":
            y += 1
        else:
            heights[x] = y
            x += 1
    ideal = frozenset(
        label
        for (cx, cy), label in diagonal_cell_labels(n, k).items()
        if cy < heights[cx]
    )
    assert poset.is_lower_ideal(ideal), (
        f"label set {sorted(ideal)} from path {list(path.steps)} is not a lower "
        f"ideal of P_{list(poset.generators)}; labeling orientation bug"
    )
    return ideal


# ---------------------------------------------------------------------------
# SVG rendering

_CELL = 24
_MARGIN = 12


def _svg_panel(width: int, height: int, path_points: list[tuple[int, int]],
               barrier: tuple[int, int], offset: tuple[int, int],
               cell_labels: dict[tuple[int, int], int] | None = None) -> list[str]:
    ox, oy = offset

    def pt(x: float, y: float) -> tuple[float, float]:
        # flip y so the origin sits at the bottom-left of the panel
        return (ox + x * _CELL, oy + (height - y) * _CELL)

    out = []
    for i in range(width + 1):
        x0, y0 = pt(i, 0)
        x1, y1 = pt(i, height)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#ccc"/>')
    for j in range(height + 1):
        x0, y0 = pt(0, j)
        x1, y1 = pt(width, j)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#ccc"/>')
    bx, by = pt(*barrier)
    x0, y0 = pt(0, 0)
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{bx}" y2="{by}" stroke="#888" stroke-dasharray="4 3"/>')
    for (cx, cy), label in (cell_labels or {}).items():
        tx, ty = pt(cx + 0.5, cy + 0.35)
        out.append(
            f'<text x="{tx}" y="{ty}" font-size="10" text-anchor="middle" fill="#555">{label}</text>'
        )
    points = " ".join(f"{pt(x, y)[0]},{pt(x, y)[1]}" for x, y in path_points)
    out.append(f'<polyline points="{points}" fill="none" stroke="#c22" stroke-width="2.5"/>')
    return out


def _walk_unit(steps: Iterable[str]) -> list[tuple[int, int]]:
    x = y = 0
    pts = [(0, 0)]
    for step in steps:
        if step == "N":
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return pts


def svg_paths(paths: Sequence[RectPath] | Sequence[GeneralizedDyckPath], columns: int = 5,
              labels: bool = False) -> str:
    """Standalone SVG showing every path as one panel in a grid.

    With labels=True, generalized-path panels also print the diagonal cell
    labels used by gd_to_ideal; the option is ignored for rectangle paths,
    which carry no labeling.
    """
    if not paths:
        raise ValueError("no paths to render")
    first = paths[0]
    cell_labels = None
    if isinstance(first, RectPath):
        width, height = first.t, first.s
        barrier = (first.t, first.s)
        point_lists = [_walk_unit(p.steps) for p in paths]
    else:
        width = height = first.n
        barrier = (first.n, first.n)
        point_lists = [list(p.points()) for p in paths]
        if labels:
            cell_labels = diagonal_cell_labels(first.n, first.k)
    cols = min(columns, len(paths))
    rows = (len(paths) + cols - 1) // cols
    panel_w = width * _CELL + _MARGIN
    panel_h = height * _CELL + _MARGIN
    total_w = cols * panel_w + _MARGIN
    total_h = rows * panel_h + _MARGIN
    body = []
    for idx, pts in enumerate(point_lists):
        r, c = divmod(idx, cols)
        offset = (_MARGIN + c * panel_w, _MARGIN + r * panel_h)
        body.extend(_svg_panel(width, height, pts, barrier, offset, cell_labels))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
