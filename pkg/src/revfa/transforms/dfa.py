"""Completion, minimization and equivalence of one-way deterministic machines."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..core import MachineClass, OneWayMachine


class AlphabetMismatch(ValueError):
    pass


def _require_deterministic(m: OneWayMachine) -> None:
    if len(m.initials) != 1:
        raise ValueError("expected a machine with a single initial state")


def complete(m: OneWayMachine, dead_name: str = "dead") -> OneWayMachine:
    """Add a rejecting sink so every transition is defined."""
    _require_deterministic(m)
    if all(len(m.transitions[a]) == m.n_states for a in m.alphabet):
        return m.with_class(MachineClass.DFA)
    name = dead_name
    while name in m.states:
        name += "'"
    dead = m.n_states
    trans = {a: {q: m.transitions[a].get(q, dead) for q in range(dead + 1)} for a in m.alphabet}
    return OneWayMachine(m.alphabet, m.states + (name,), m.initials, trans, m.accepting,
                         MachineClass.DFA)


def _reachable_order(m: OneWayMachine) -> list[int]:
    order, seen = [m.initial], {m.initial}
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for a in m.alphabet:
            r = m.transitions[a].get(q)
            if r is not None and r not in seen:
                seen.add(r)
                order.append(r)
    return order


def minimize(m: OneWayMachine) -> OneWayMachine:
    """The minimal complete DFA, states numbered in BFS order from the start.

    Moore-style partition refinement on the completed reachable part; the
    result is canonical, so two machines with equal languages minimize to
    identical objects up to state names.
    """
    full = complete(m)
    reach = _reachable_order(full)
    block = {q: int(q in full.accepting) for q in reach}
    while True:
        sig = {q: (block[q],) + tuple(block[full.transitions[a][q]] for a in full.alphabet)
               for q in reach}
        ids: dict = {}
        new_block = {q: ids.setdefault(sig[q], len(ids)) for q in reach}
        if len(ids) == len(set(block.values())):
            block = new_block
            break
        block = new_block
    # renumber blocks in BFS order from the start block
    start = block[full.initial]
    order, seen = [start], {start}
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    i = 0
    while i < len(order):
        b = order[i]
        i += 1
        for a in full.alphabet:
            c = block[full.transitions[a][rep[b]]]
            if c not in seen:
                seen.add(c)
                order.append(c)
    num = {b: i for i, b in enumerate(order)}
    trans = {a: {num[b]: num[block[full.transitions[a][rep[b]]]] for b in order}
             for a in full.alphabet}
    accepting = {num[b] for b in order if rep[b] in full.accepting}
    return OneWayMachine(full.alphabet, tuple(f"m{i}" for i in range(len(order))), {0},
                         trans, accepting, MachineClass.DFA)


@dataclass(frozen=True)
class EquivResult:
    equivalent: bool
    counterexample: Optional[str] = None

    def __bool__(self):
        return self.equivalent


def dfa_equiv(a: OneWayMachine, b: OneWayMachine) -> EquivResult:
    """Product search; the counterexample is the length-lex least one (in ``a``'s
    symbol order)."""
    if a.alphabet != b.alphabet:
        if set(a.alphabet) != set(b.alphabet):
            raise AlphabetMismatch(f"{''.join(a.alphabet)} vs {''.join(b.alphabet)}")
    alphabet = a.alphabet
    ca, cb = complete(a), complete(b)
    start = (ca.initial, cb.initial)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        if (pair[0] in ca.accepting) != (pair[1] in cb.accepting):
            word = []
            while parent[pair] is not None:
                pair, sym = parent[pair]
                word.append(sym)
            return EquivResult(False, "".join(reversed(word)))
        for s in alphabet:
            nxt = (ca.transitions[s][pair[0]], cb.transitions[s][pair[1]])
            if nxt not in parent:
                parent[nxt] = (pair, s)
                queue.append(nxt)
    return EquivResult(True)


def dfa_accepts(m: OneWayMachine, word: str) -> bool:
    q = m.initial
    for s in word:
        q = m.transitions[s].get(q)
        if q is None:
            return False
    return q in m.accepting
