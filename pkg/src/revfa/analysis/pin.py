"""Refuting MRFA-recognizability with the ``xy+z ⊆ L ⇒ xz ∈ L`` condition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..transforms.determinize import to_dfa
from ..transforms.dfa import complete
from .equivalence import words


@dataclass(frozen=True)
class PinResult:
    violation: bool
    witness: Optional[tuple] = None   # (x, y, z)
    reps: int = 0
    checked: int = 0

    def describe(self) -> str:
        if not self.violation:
            return f"no violation (checked {self.checked} triples, reps {self.reps})"
        x, y, z = self.witness
        return f"violation: x={x!r} y={y!r} z={z!r}"


def pin_falsify(machine, max_x: int = 3, max_y: int = 3, max_z: int = 3,
                reps: Optional[int] = None) -> PinResult:
    """Search ``|x| <= max_x``, ``1 <= |y| <= max_y``, ``|z| <= max_z`` for a
    triple with ``xy+z ⊆ L`` and ``xz ∉ L``.

    ``xy+z ⊆ L`` is tested as ``xy^i z ∈ L`` for ``i = 1..reps``.  With
    ``reps`` left as ``None`` (or 0) it is set to ``#states + 1`` of the
    complete DFA, which covers the whole deterministic ``y``-orbit, so the
    inclusion is decided exactly.  A reported violation proves that no
    MRFA recognizes the language.
    """
    if min(max_x, max_y, max_z) < 0:
        raise ValueError("bounds must be non-negative")
    dfa = complete(to_dfa(machine))
    if not reps:
        reps = dfa.n_states + 1
    if reps < 1:
        raise ValueError("reps must be at least 1")
    delta = dfa.transitions

    def run(q: int, w: str) -> int:
        for c in w:
            q = delta[c][q]
        return q

    checked = 0
    for x in words(dfa.alphabet, max_x):
        qx = run(dfa.initial, x)
        for y in words(dfa.alphabet, max_y, min_len=1):
            orbit = []
            q = qx
            for _ in range(reps):
                q = run(q, y)
                orbit.append(q)
            for z in words(dfa.alphabet, max_z):
                checked += 1
                if run(qx, z) in dfa.accepting:
                    continue
                if all(run(q, z) in dfa.accepting for q in orbit):
                    return PinResult(True, (x, y, z), reps, checked)
    return PinResult(False, None, reps, checked)
