"""Shared helpers: validation guards, behavior-function views, naming."""

from __future__ import annotations

from ..core import MachineClass, SweepingMachine, violations_for
from ..funcmath import PartialInjection


class TransformError(ValueError):
    pass


def require_class(m, cls: MachineClass, what: str) -> None:
    found = violations_for(m, cls)
    if found:
        raise TransformError(f"{what} needs a valid {cls.value}: " + "; ".join(map(str, found)))


class SweepingView:
    """Partial injections of a reversible sweeping machine in local indices.

    Left-to-right states keep their global index; right-to-left states are
    renumbered from 0 by subtracting ``n_plus``.
    """

    def __init__(self, m: SweepingMachine):
        self.m = m
        kp, km = m.n_plus, m.n_minus
        self.n_plus, self.n_minus = kp, km
        self.plus = {a: PartialInjection.from_mapping(m.delta_plus[a], kp, kp) for a in m.alphabet}
        self.minus = {a: PartialInjection.from_mapping(
            {s - kp: d - kp for s, d in m.delta_minus[a].items()}, km, km) for a in m.alphabet}
        self.left = PartialInjection.from_mapping(
            {s - kp: d for s, d in m.delta_left.items() if s != m.initial}, km, kp)
        self.right = PartialInjection.from_mapping(
            {s: d - kp for s, d in m.delta_right.items()}, kp, km)
        self.start = m.delta_left.get(m.initial)
        self.accepting_plus = frozenset(q for q in m.accepting if q < kp)

    def plus_name(self, p: int) -> str:
        return self.m.plus_states[p]

    def minus_name(self, q: int) -> str:
        return self.m.minus_states[q]

    def fname(self, f: PartialInjection) -> str:
        body = ",".join(f"{self.minus_name(x)}>{self.plus_name(y)}" for x, y in f.sorted_pairs())
        return "{" + body + "}"

    def setname(self, r) -> str:
        return "{" + ",".join(self.minus_name(x) for x in sorted(r)) + "}"

    def end_game(self, p: int, f: PartialInjection):
        """Follow the right end-marker visits ``p, f(right(p)), ...``.

        Returns ``(accepted, visited_minus_states)``.  The walk stops when
        the right end-marker transition is undefined (accept iff the state is
        accepting), when ``f`` is undefined (the sweep dies before returning)
        or after a revisit, which a reversible machine cannot produce; the
        cap keeps the function total on malformed input.
        """
        fmap = f.as_dict()
        rmap = self.right.as_dict()
        entered = []
        seen = {p}
        x = p
        for _ in range(self.n_plus * max(self.n_minus, 1) + 1):
            y = rmap.get(x)
            if y is None:
                return x in self.accepting_plus, frozenset(entered)
            entered.append(y)
            x = fmap.get(y)
            if x is None or x in seen:
                return False, frozenset(entered)
            seen.add(x)
        return False, frozenset(entered)
