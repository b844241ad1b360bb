"""Finite partial injections between two indexed sets.

A :class:`PartialInjection` from an ``m``-set to an ``n``-set is stored as an
explicit set of ``(source, target)`` pairs.  State counts in this package are
tiny, so no dense representation is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Mapping


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class PartialInjection:
    domain_size: int
    codomain_size: int
    pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = frozenset((int(x), int(y)) for x, y in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if self.domain_size < 0 or self.codomain_size < 0:
            raise DimensionError("sizes must be non-negative")
        sources, targets = set(), set()
        for x, y in pairs:
            if not (0 <= x < self.domain_size and 0 <= y < self.codomain_size):
                raise DimensionError(f"pair {x}->{y} out of range")
            if x in sources:
                raise ValueError(f"source {x} mapped twice")
            if y in targets:
                raise ValueError(f"target {y} hit twice")
            sources.add(x)
            targets.add(y)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], domain_size: int,
                     codomain_size: int) -> PartialInjection:
        return cls(domain_size, codomain_size, frozenset(mapping.items()))

    @classmethod
    def identity(cls, n: int) -> PartialInjection:
        return cls(n, n, frozenset((i, i) for i in range(n)))

    @classmethod
    def empty(cls, domain_size: int, codomain_size: int) -> PartialInjection:
        return cls(domain_size, codomain_size, frozenset())

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def get(self, x: int):
        for a, b in self.pairs:
            if a == x:
                return b
        return None

    def __call__(self, x: int) -> int:
        y = self.get(x)
        if y is None:
            raise KeyError(x)
        return y

    def __len__(self):
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def is_total(self) -> bool:
        return len(self.pairs) == self.domain_size

    def is_bijection(self) -> bool:
        return self.domain_size == self.codomain_size == len(self.pairs)

    def apply_set(self, xs: Iterable[int]) -> frozenset:
        """Image of ``xs``; elements outside the domain are dropped."""
        m = self.as_dict()
        return frozenset(m[x] for x in xs if x in m)

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.sorted_pairs())
        return f"PartialInjection({self.domain_size}x{self.codomain_size}: {{{body}}})"


def domain(f: PartialInjection) -> frozenset:
    return frozenset(x for x, _ in f.pairs)


def image(f: PartialInjection) -> frozenset:
    return frozenset(y for _, y in f.pairs)


def domain_size_of(f: PartialInjection) -> int:
    return len(f.pairs)


def compose(outer: PartialInjection, inner: PartialInjection) -> PartialInjection:
    """``outer ∘ inner``: apply ``inner`` first."""
    if inner.codomain_size != outer.domain_size:
        raise DimensionError(
            f"cannot compose {outer.domain_size}x{outer.codomain_size} after "
            f"{inner.domain_size}x{inner.codomain_size}")
    o = outer.as_dict()
    pairs = frozenset((x, o[y]) for x, y in inner.pairs if y in o)
    return PartialInjection(inner.domain_size, outer.codomain_size, pairs)


def inverse(f: PartialInjection) -> PartialInjection:
    return PartialInjection(f.codomain_size, f.domain_size,
                            frozenset((y, x) for x, y in f.pairs))


def restrict(f: PartialInjection, subset: Iterable[int]) -> PartialInjection:
    subset = frozenset(subset)
    missing = subset - domain(f)
    if missing:
        raise ValueError(f"cannot restrict to {sorted(missing)}: outside the domain")
    return PartialInjection(f.domain_size, f.codomain_size,
                            frozenset(p for p in f.pairs if p[0] in subset))


def count_partial_injections(m: int, n: int) -> int:
    return sum(comb(m, s) * comb(n, s) * factorial(s) for s in range(min(m, n) + 1))


def enumerate_partial_injections(domain_size: int,
                                 codomain_size: int) -> Iterator[PartialInjection]:
    """Every partial injection exactly once.

    Order: by domain size, then domain subset in lexicographic order, then
    the tuple of targets (listed for ascending sources) in lexicographic order.
    """
    for s in range(min(domain_size, codomain_size) + 1):
        for sources in combinations(range(domain_size), s):
            for targets in permutations(range(codomain_size), s):
                yield PartialInjection(domain_size, codomain_size,
                                       frozenset(zip(sources, targets)))


def complete_to_bijection(f: PartialInjection) -> PartialInjection:
    """Extend ``f`` to a total bijection.

    Unmatched sources, in increasing order, go to unmatched targets in
    increasing order.
    """
    if f.domain_size != f.codomain_size:
        raise DimensionError("completion needs a square injection")
    free_sources = sorted(set(range(f.domain_size)) - domain(f))
    free_targets = sorted(set(range(f.codomain_size)) - image(f))
    return PartialInjection(f.domain_size, f.codomain_size,
                            f.pairs | frozenset(zip(free_sources, free_targets)))
