"""Language oracles and equivalence checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from ..core import OneWayMachine, SweepingMachine
from ..sim import accepts
from ..transforms.determinize import to_dfa
from ..transforms.dfa import AlphabetMismatch, EquivResult, dfa_accepts, dfa_equiv


def words(alphabet: Sequence[str], max_len: int, min_len: int = 0) -> Iterator[str]:
    """All strings of length ``min_len..max_len`` in length-lexicographic order."""
    for n in range(min_len, max_len + 1):
        for t in product(alphabet, repeat=n):
            yield "".join(t)


@dataclass(frozen=True)
class LanguageOracle:
    alphabet: tuple
    membership: Callable[[str], bool]
    name: str = "oracle"

    def __contains__(self, word: str) -> bool:
        return bool(self.membership(word))

    def enumerate(self, max_len: int) -> Iterator[str]:
        return words(self.alphabet, max_len)

    def accepted(self, max_len: int) -> list[str]:
        return [w for w in self.enumerate(max_len) if w in self]

    @classmethod
    def of_machine(cls, machine, name: str = "machine") -> LanguageOracle:
        if isinstance(machine, OneWayMachine) and len(machine.initials) == 1:
            return cls(machine.alphabet, lambda w: dfa_accepts(machine, w), name)
        return cls(machine.alphabet, lambda w: accepts(machine, w), name)


def _oracle(x) -> LanguageOracle:
    if isinstance(x, LanguageOracle):
        return x
    if isinstance(x, (OneWayMachine, SweepingMachine)):
        return LanguageOracle.of_machine(x)
    raise TypeError(f"cannot use {type(x).__name__} as a language")


def bounded_equiv(a, b, max_len: int) -> EquivResult:
    """Compare two machines (or oracles) on every string up to ``max_len``."""
    la, lb = _oracle(a), _oracle(b)
    if set(la.alphabet) != set(lb.alphabet):
        raise AlphabetMismatch(f"{''.join(la.alphabet)} vs {''.join(lb.alphabet)}")
    for w in words(la.alphabet, max_len):
        if (w in la) != (w in lb):
            return EquivResult(False, w)
    return EquivResult(True)


def exact_equiv(a, b) -> EquivResult:
    """Decide language equality of two machines via their DFAs."""
    return dfa_equiv(to_dfa(a), to_dfa(b))
