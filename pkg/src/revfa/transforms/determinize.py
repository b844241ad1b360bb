"""Classical determinizations: sweeping -> one-way, multi-initial -> single."""

from __future__ import annotations

from collections import deque

from ..core import AcceptanceMode, MachineClass, OneWayMachine, SweepingMachine

# behavior value for "the sweep halts at ⊢ in an accepting state" (both-sides mode)
ACCEPT_LEFT = -1


def _trivial(alphabet, accept_all: bool) -> OneWayMachine:
    trans = {a: {0: 0} for a in alphabet}
    return OneWayMachine(alphabet, ("all" if accept_all else "none",), {0}, trans,
                         {0} if accept_all else set(), MachineClass.DFA)


def sweeping_to_one_way(m: SweepingMachine) -> OneWayMachine:
    """1DFA for the language of any sweeping machine (reachable pairs only).

    A state ``(p, f)`` reached on ``s`` records the left-to-right state ``p``
    after the first pass over ``⊢ s`` and, for each right-to-left state ``q``,
    the state ``f(q)`` in which a sweep starting at the last symbol of ``s``
    in ``q`` comes back to the right end of ``s``.  Both-sides machines are
    handled by the extra value ``ACCEPT_LEFT``.  Acceptance replays the visits
    to ``⊣``; a repeated visit is a loop and rejects.
    """
    both = m.acceptance_mode is AcceptanceMode.BOTH_SIDES
    kp, km = m.n_plus, m.n_minus
    start_p = m.delta_left.get(m.initial)
    if start_p is None:
        return _trivial(m.alphabet, both and m.initial in m.accepting)

    def at_left(q: int):
        nxt = m.delta_left.get(q)
        if nxt is not None:
            return nxt
        return ACCEPT_LEFT if both and q in m.accepting else None

    f0 = tuple(at_left(kp + j) for j in range(km))

    def step(state, a):
        p, f = state
        p2 = m.delta_plus[a].get(p)
        if p2 is None:
            return None
        g = []
        for j in range(km):
            r = m.delta_minus[a].get(kp + j)
            v = None if r is None else f[r - kp]
            if v is not None and v != ACCEPT_LEFT:
                v = m.delta_plus[a].get(v)
            g.append(v)
        return p2, tuple(g)

    def accepting(state) -> bool:
        p, f = state
        seen = {p}
        x = p
        while True:
            y = m.delta_right.get(x)
            if y is None:
                return x in m.accepting
            v = f[y - kp]
            if v is None:
                return False
            if v == ACCEPT_LEFT:
                return True
            if v in seen:
                return False
            seen.add(v)
            x = v

    start = (start_p, f0)
    index = {start: 0}
    order = [start]
    trans = {a: {} for a in m.alphabet}
    queue = deque([start])
    while queue:
        st = queue.popleft()
        for a in m.alphabet:
            nxt = step(st, a)
            if nxt is None:
                continue
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            trans[a][index[st]] = index[nxt]

    names = m.states

    def vname(v):
        return "acc" if v == ACCEPT_LEFT else names[v]

    def sname(st):
        p, f = st
        body = ",".join(f"{names[kp + j]}>{vname(v)}" for j, v in enumerate(f) if v is not None)
        return f"({names[p]},{{{body}}})"

    acc = {i for i, st in enumerate(order) if accepting(st)}
    return OneWayMachine(m.alphabet, tuple(sname(st) for st in order), {0}, trans, acc,
                         MachineClass.DFA)


def mrfa_to_dfa(m: OneWayMachine) -> OneWayMachine:
    """Subset construction over the initial states (reachable subsets only)."""
    start = frozenset(m.initials)
    index = {start: 0}
    order = [start]
    trans = {a: {} for a in m.alphabet}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for a in m.alphabet:
            t = frozenset(m.transitions[a][q] for q in s if q in m.transitions[a])
            if not t:
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            trans[a][index[s]] = index[t]
    names = tuple("{" + ",".join(m.states[q] for q in sorted(s)) + "}" for s in order)
    acc = {i for i, s in enumerate(order) if s & m.accepting}
    return OneWayMachine(m.alphabet, names, {0}, trans, acc, MachineClass.DFA)


def to_dfa(machine) -> OneWayMachine:
    """Any machine to an equivalent 1DFA.

    Both-sides reversible sweeping machines go through the left-acceptance
    elimination first; everything else is determinized directly.
    """
    from .sweeping import both_sides_to_one_side
    from ..core import violations_for

    if isinstance(machine, SweepingMachine):
        if (machine.acceptance_mode is AcceptanceMode.BOTH_SIDES
                and not violations_for(machine, MachineClass.SRFA)):
            machine = both_sides_to_one_side(machine)
        return sweeping_to_one_way(machine)
    if len(machine.initials) == 1:
        return machine.with_class(MachineClass.DFA)
    return mrfa_to_dfa(machine)
