"""Gap posets of numerical semigroups, their lower ideals, and multi-Catalan counts.

The poset on the gaps (positive integers not representable over the
generators) has a covers b exactly when a - b is a generator.  The partial
order is the reflexive-transitive closure of that relation, which on gaps
coincides with "a - b is a nonzero representable integer": if a - b is a sum
of generators, every partial sum from b up to a is itself a gap (otherwise a
would be representable), so the whole chain stays inside the poset.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import EnumerationCapError, InfinitePosetError
from .partitions import Partition, partition_from_hooks

DEFAULT_LIST_CAP = 10**6
DEFAULT_COUNT_CAP = 10**7


class GapPoset:
    """Immutable poset of the gaps of a numerical semigroup."""

    __slots__ = ("generators", "gaps", "covers", "_gapset", "_representable")

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise ValueError("generator set must be non-empty")
        if gens[0] < 1:
            raise ValueError(f"generators must be >= 1, got {gens[0]}")
        g = math.gcd(*gens)
        if g > 1:
            raise InfinitePosetError(gens, g)
        self.generators = tuple(gens)
        self._representable = _sieve(gens)
        self.gaps = tuple(
            m for m in range(1, len(self._representable)) if not self._representable[m]
        )
        self._gapset = frozenset(self.gaps)
        self.covers = tuple(
            (a, a - s)
            for a in self.gaps
            for s in self.generators
            if (a - s) in self._gapset
        )

    def is_representable(self, m: int) -> bool:
        """Whether m is a non-negative combination of the generators."""
        if m < 0:
            return False
        if m < len(self._representable):
            return self._representable[m]
        return True  # the sieve extends past the last gap

    @property
    def frobenius_number(self) -> int | None:
        """Largest gap, or None when every positive integer is representable."""
        return self.gaps[-1] if self.gaps else None

    def leq(self, b: int, a: int) -> bool:
        """b <= a in the gap order (both must be gaps)."""
        if b not in self._gapset or a not in self._gapset:
            raise ValueError(f"{b} and {a} must both be gaps of {list(self.generators)}")
        return b == a or (a - b > 0 and self.is_representable(a - b))

    def lower_covers(self, a: int) -> tuple[int, ...]:
        return tuple(a - s for s in self.generators if (a - s) in self._gapset)

    def is_lower_ideal(self, subset: Iterable[int]) -> bool:
        """Downward closure check; closure under covers equals closure under the order."""
        ideal = set(subset)
        if not ideal <= self._gapset:
            return False
        return all(c in ideal for a in ideal for c in self.lower_covers(a))

    def iter_lower_ideals(self, max_items: int | None = DEFAULT_LIST_CAP) -> Iterator[frozenset[int]]:
        """Every lower ideal exactly once, as a frozenset of gap values.

        Deterministic order: gaps are decided in increasing value, exclusion
        branch first, so the empty ideal comes first and the full gap set last.
        """
        gaps = self.gaps
        covers_of = {g: self.lower_covers(g) for g in gaps}
        included: set[int] = set()
        count = 0

        def rec(i: int) -> Iterator[frozenset[int]]:
            nonlocal count
            if i == len(gaps):
                count += 1
                if max_items is not None and count > max_items:
                    raise EnumerationCapError(
                        f"lower ideals of P_{list(self.generators)}", max_items
                    )
                yield frozenset(included)
                return
            g = gaps[i]
            yield from rec(i + 1)
            if all(c in included for c in covers_of[g]):
                included.add(g)
                yield from rec(i + 1)
                included.discard(g)

        yield from rec(0)

    def count_lower_ideals(self, max_states: int | None = DEFAULT_COUNT_CAP) -> int:
        """Number of lower ideals, by dynamic programming over a sliding window.

        Processing gaps in increasing value, only the membership pattern of
        gaps within max(generators) of the current value can constrain future
        decisions, so states are bit patterns over that window.  Independent
        of the closed multi-Catalan recursion.
        """
        gaps = self.gaps
        if not gaps:
            return 1
        spread = self.generators[-1]
        window: list[int] = []
        states: dict[tuple[int, ...], int] = {(): 1}
        for g in gaps:
            keep = 0
            while keep < len(window) and window[keep] < g - spread:
                keep += 1
            if keep:
                merged: dict[tuple[int, ...], int] = {}
                for key, cnt in states.items():
                    short = key[keep:]
                    merged[short] = merged.get(short, 0) + cnt
                states = merged
                window = window[keep:]
            cover_bits = [window.index(c) for c in self.lower_covers(g)]
            nxt: dict[tuple[int, ...], int] = {}
            for key, cnt in states.items():
                excl = key + (0,)
                nxt[excl] = nxt.get(excl, 0) + cnt
                if all(key[b] for b in cover_bits):
                    incl = key + (1,)
                    nxt[incl] = nxt.get(incl, 0) + cnt
            states = nxt
            window.append(g)
            if max_states is not None and len(states) > max_states:
                raise EnumerationCapError(
                    f"ideal-counting state space for P_{list(self.generators)}", max_states
                )
        return sum(states.values())

    def to_dot(self, transitive_reduce: bool = False) -> str:
        """Hasse-style DOT digraph; edges point from each gap up to its covers."""
        edges = self.covers
        if transitive_reduce:
            edges = self._reduced_covers()
        lines = ["digraph gap_poset {", "  rankdir=BT;", "  node [shape=circle];"]
        for g in self.gaps:
            lines.append(f"  {g};")
        for a, b in sorted(edges, key=lambda e: (e[1], e[0])):
            lines.append(f"  {b} -> {a};")
        lines.append("}")
        return "\n".join(lines)

    def _reduced_covers(self) -> tuple[tuple[int, int], ...]:
        # drop (a, b) whenever some chain a > c > b exists through other covers
        above: dict[int, set[int]] = {g: set() for g in self.gaps}
        for a, b in self.covers:
            above[b].add(a)
        kept = []
        for a, b in self.covers:
            if not any(a in above[c] for c in above[b] if c != a):
                kept.append((a, b))
        return tuple(kept)

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "covers": [[a, b] for a, b in self.covers],
        }

    def __repr__(self) -> str:
        return f"GapPoset(generators={list(self.generators)}, gaps={len(self.gaps)})"


def _sieve(gens: list[int]) -> list[bool]:
    """Representability table, extended until min(gens) consecutive hits.

    Once min(gens) consecutive integers are representable, every larger
    integer is too (keep adding the smallest generator), so the table is
    complete past its end.
    """
    smallest = gens[0]
    rep = [True]
    run = 0
    m = 0
    while run < smallest:
        m += 1
        hit = any(m >= s and rep[m - s] for s in gens)
        rep.append(hit)
        run = run + 1 if hit else 0
    return rep


def build_gap_poset(generators: Iterable[int]) -> GapPoset:
    """GapPoset for a generator set; requires gcd 1 (finite gap set)."""
    return _cached_poset(tuple(sorted(set(int(g) for g in generators))))


@lru_cache(maxsize=512)
def _cached_poset(generators: tuple[int, ...]) -> GapPoset:
    return GapPoset(generators)


def consecutive_poset(s: int, p: int) -> GapPoset:
    """Gap poset of the consecutive run {s, s+1, ..., s+p}."""
    if s < 1 or p < 1:
        raise ValueError(f"need s >= 1 and p >= 1, got s={s}, p={p}")
    return build_gap_poset(range(s, s + p + 1))


@lru_cache(maxsize=None)
def multi_catalan(s: int, p: int) -> int:
    """Number of lower ideals of the consecutive poset for {s, ..., s+p}.

    First-return recursion with value 1 for s <= 0; p = 1 gives Catalan
    numbers and p = 2 gives Motzkin numbers.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if s <= 0:
        return 1
    return sum(multi_catalan(i - p, p) * multi_catalan(s - i, p) for i in range(1, s + 1))


def ideal_to_core(poset: GapPoset, ideal: Iterable[int]) -> Partition:
    """Partition whose first-column hook lengths are the ideal's elements."""
    elems = frozenset(ideal)
    if not poset.is_lower_ideal(elems):
        raise ValueError(
            f"{sorted(elems)} is not a lower ideal of P_{list(poset.generators)}"
        )
    return partition_from_hooks(elems)


def core_to_ideal(p: Partition, poset: GapPoset) -> frozenset[int]:
    """First-column hook set of a simultaneous core, as a lower ideal.

    Rejects partitions that are not cores for the poset's generators,
    naming the offending hook and divisor.
    """
    p.check_multicore(poset.generators)
    hooks = p.first_column_hooks()
    assert poset.is_lower_ideal(hooks), (
        f"hook set {sorted(hooks)} of a verified core is not an ideal; "
        "this indicates an internal ordering bug"
    )
    return hooks
