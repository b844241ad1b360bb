"""Removing left end-marker acceptance from reversible sweeping machines."""

from __future__ import annotations

from ..core import AcceptanceMode, MachineClass, SweepingMachine
from .common import require_class


def _copy_name(name: str, taken: set) -> str:
    new = name + "'"
    while new in taken:
        new += "'"
    taken.add(new)
    return new


def both_sides_to_one_side(m: SweepingMachine) -> SweepingMachine:
    """Right-only sRFA for the language of a both-sides sRFA.

    Every state ``p`` of ``Q-`` accepting at ``⊢`` gets a copy ``p'`` in
    ``Q+``: instead of halting, the machine turns into ``p'``, runs right on
    every symbol and accepts at ``⊣``.  Copies are made for all accepting
    ``Q-`` states, also those that never halt at ``⊢``, so the output has
    exactly ``|Q+| + |E ∩ Q-|`` left-to-right states.  A start state that
    would accept at ``⊢`` right away (undefined first transition) needs one
    extra copy of its own.
    """
    if m.acceptance_mode is AcceptanceMode.RIGHT_ONLY:
        return m
    require_class(m, MachineClass.SRFA, "both_sides_to_one_side")
    kp = m.n_plus
    minus_acc = sorted(q for q in m.accepting if q >= kp)
    degenerate = m.initial in m.accepting and m.initial not in m.delta_left
    sources = ([m.initial] if degenerate else []) + minus_acc
    taken = set(m.states)
    copies = [_copy_name(m.states[q], taken) for q in sources]
    e = len(copies)
    new_kp = kp + e

    def g(q: int) -> int:
        return q if q < kp else q + e

    copy_of = {q: kp + i for i, q in enumerate(sources)}
    delta_plus = {a: {g(s): g(d) for s, d in m.delta_plus[a].items()} for a in m.alphabet}
    for a in m.alphabet:
        for c in copy_of.values():
            delta_plus[a][c] = c
    delta_minus = {a: {g(s): g(d) for s, d in m.delta_minus[a].items()} for a in m.alphabet}
    delta_left = {g(s): g(d) for s, d in m.delta_left.items()}
    for q, c in copy_of.items():
        if q not in m.delta_left:
            delta_left[g(q)] = c
    delta_right = {g(s): g(d) for s, d in m.delta_right.items()}
    accepting = {q for q in m.accepting if q < kp} | set(copy_of.values())
    plus_states = m.plus_states + tuple(copies)
    assert len(plus_states) == new_kp
    return SweepingMachine(m.alphabet, plus_states, m.minus_states, m.initial,
                           delta_plus, delta_minus, delta_left, delta_right, accepting,
                           AcceptanceMode.RIGHT_ONLY, m.declared_class)
