"""Concrete machines for every language used in the hierarchy results.

Each entry couples a hand-built machine with a reference language given as a
regular expression (compiled by :mod:`revfa.regex`, independently of the
machine).  :func:`witness` checks ``machine ≡ reference`` before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .analysis.equivalence import LanguageOracle, exact_equiv
from .core import AcceptanceMode, MachineClass, OneWayMachine, SweepingMachine
from .regex import compile_regex, matches

K_RANGE = range(2, 7)


class UnknownWitness(KeyError):
    pass


@dataclass(frozen=True)
class WitnessSpec:
    name: str
    k: Optional[int]
    machine: object
    pattern: str
    alphabet: tuple

    @property
    def reference(self) -> LanguageOracle:
        pattern, alphabet = self.pattern, self.alphabet
        return LanguageOracle(alphabet, lambda w: matches(pattern, alphabet, w), self.pattern)

    @property
    def reference_dfa(self) -> OneWayMachine:
        return compile_regex(self.pattern, self.alphabet)


def singleton_a():
    return OneWayMachine(("a",), ("q0", "q1"), {0}, {"a": {0: 1}}, {1}, MachineClass.RFA), "a"


def mod3_two_accept():
    m = OneWayMachine(("a",), ("r0", "r1", "r2"), {0}, {"a": {0: 1, 1: 2, 2: 0}}, {0, 1},
                      MachineClass.PERFA)
    return m, "(aaa)*|a(aaa)*"


def even_or_a():
    # Q+ = p0 p1 (indices 0, 1), Q- = q0 q1 (indices 2, 3)
    m = SweepingMachine(
        ("a",), ("p0", "p1"), ("q0", "q1"), 0,
        delta_plus={"a": {0: 1, 1: 0}},
        delta_minus={"a": {2: 3}},
        delta_left={0: 0, 3: 1},
        delta_right={1: 2},
        accepting={0},
        acceptance_mode=AcceptanceMode.RIGHT_ONLY,
        declared_class=MachineClass.SRFA)
    return m, "(aa)*|a"


def even_or_a_mrfa():
    # e0 <-> e1 is the even cycle, t0 -> t1 accepts the single "a"
    m = OneWayMachine(("a",), ("e0", "e1", "t0", "t1"), {0, 2}, {"a": {0: 1, 1: 0, 2: 3}},
                      {0, 3}, MachineClass.MRFA)
    return m, "(aa)*|a"


def a_star_or_b_star():
    m = OneWayMachine(("a", "b"), ("x", "y"), {0, 1}, {"a": {0: 0}, "b": {1: 1}}, {0, 1},
                      MachineClass.MRFA)
    return m, "a*|b*"


def lk_union(k: int):
    """One initial state per ``i``, each on a cycle reading ``a b^i``."""
    names, trans = [], {"a": {}, "b": {}}
    inits = set()
    for i in range(1, k + 1):
        base = len(names)
        inits.add(base)
        names += [f"u{i}_{j}" for j in range(i + 1)]
        trans["a"][base] = base + 1
        for j in range(1, i):
            trans["b"][base + j] = base + j + 1
        trans["b"][base + i] = base
    pattern = "|".join(f"(a{'b' * i})*" for i in range(1, k + 1))
    return OneWayMachine(("a", "b"), tuple(names), inits, trans, inits, MachineClass.MRFA), pattern


def lk_srfa(k: int):
    """Both-sides sRFA for the union over ``i < k`` of ``(a b^i)* b a^i``."""
    minus = [f"r{i}" for i in range(k)]
    star = {}
    for i in range(k):
        for j in range(i + 1):
            star[i, j] = len(minus)
            minus.append(f"r*{i}_{j}")
    off = 1

    def r(i):
        return off + i

    def rs(i, j):
        return off + star[i, j]

    d_a, d_b = {}, {}
    for i in range(k - 1):
        d_a[r(i)] = r(i + 1)
    for i in range(k):
        d_b[r(i)] = rs(i, 0)
        for j in range(i):
            d_b[rs(i, j)] = rs(i, j + 1)
        d_a[rs(i, i)] = rs(i, 0)
    m = SweepingMachine(
        ("a", "b"), ("q0",), tuple(minus), 0,
        delta_plus={"a": {0: 0}, "b": {0: 0}},
        delta_minus={"a": d_a, "b": d_b},
        delta_left={0: 0},
        delta_right={0: r(0)},
        accepting={rs(i, 0) for i in range(k)},
        acceptance_mode=AcceptanceMode.BOTH_SIDES,
        declared_class=MachineClass.SRFA)
    pattern = "|".join(f"(a{'b' * i})*b{'a' * i}" for i in range(k))
    return m, pattern


def sigma_star_a():
    m = OneWayMachine(("a", "b"), ("n", "y"), {0}, {"a": {0: 1, 1: 1}, "b": {0: 0, 1: 0}}, {1},
                      MachineClass.DFA)
    return m, "(a|b)*a"


def a_star_b_star():
    m = OneWayMachine(("a", "b"), ("A", "B"), {0}, {"a": {0: 0}, "b": {0: 1, 1: 1}}, {0, 1},
                      MachineClass.DFA)
    return m, "a*b*"


CATALOG: dict[str, tuple[Callable, bool]] = {
    "singleton-a": (singleton_a, False),
    "mod3-two-accept": (mod3_two_accept, False),
    "even-or-a": (even_or_a, False),
    "even-or-a-mrfa": (even_or_a_mrfa, False),
    "a-star-or-b-star": (a_star_or_b_star, False),
    "Lk-union": (lk_union, True),
    "Lk-srfa": (lk_srfa, True),
    # plain 1DFA fixtures for the non-representability check
    "sigma-star-a": (sigma_star_a, False),
    "a-star-b-star": (a_star_b_star, False),
}


def witness(name: str, k: Optional[int] = None, check: bool = True) -> WitnessSpec:
    try:
        build, takes_k = CATALOG[name]
    except KeyError:
        raise UnknownWitness(f"unknown witness {name!r}; known: {', '.join(CATALOG)}") from None
    if takes_k:
        k = 2 if k is None else k
        if k not in K_RANGE:
            raise ValueError(f"k must be in {K_RANGE.start}..{K_RANGE.stop - 1}, got {k}")
        machine, pattern = build(k)
    else:
        if k is not None:
            raise ValueError(f"witness {name!r} takes no parameter")
        machine, pattern = build()
    spec = WitnessSpec(name, k, machine, pattern, machine.alphabet)
    if check:
        res = exact_equiv(machine, spec.reference_dfa)
        if not res:
            raise AssertionError(f"witness {name} disagrees with {pattern!r} on {res.counterexample!r}")
    return spec


def all_witnesses(ks=(2, 3)) -> list[WitnessSpec]:
    out = []
    for name, (_, takes_k) in CATALOG.items():
        if takes_k:
            out += [witness(name, k) for k in ks]
        else:
            out.append(witness(name))
    return out
