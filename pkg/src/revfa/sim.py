"""Running machines on strings.

Sweeping positions follow the end-marked tape ``⊢ a1 ... ak ⊣``: position 0
is the left end-marker and ``k + 1`` the right one.  A sweeping computation
halts when no step applies; it accepts iff it halts on an end-marker where
acceptance is allowed (the right one, or either one in both-sides mode) in
an accepting state.  An accepting state whose end-marker transition is
defined keeps computing.

Pass counting: every step moves the head by one cell, so a trace is a walk
of +1/-1 moves.  ``pass_count`` is the number of maximal runs of equal
direction.  The opening step off ``⊢`` belongs to the first pass; the
empty input therefore makes one pass per end-marker visit after the start
(``⊢ → ⊣`` is one pass, turning back to ``⊢`` a second, and so on).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import AcceptanceMode, Machine, OneWayMachine, SweepingMachine


class InputError(ValueError):
    pass


class Verdict(str, Enum):
    ACCEPT = "accept"
    REJECT_UNDEFINED = "reject_undefined"
    REJECT_NONACCEPTING = "reject_nonaccepting"
    REJECT_LOOP = "reject_loop"

    @property
    def accepted(self) -> bool:
        return self is Verdict.ACCEPT


@dataclass(frozen=True)
class Configuration:
    state: int
    position: int


@dataclass(frozen=True)
class Trace:
    configurations: tuple
    verdict: Verdict
    pass_count: int

    @property
    def accepted(self) -> bool:
        return self.verdict.accepted


@dataclass(frozen=True)
class MRFAResult:
    accepted: bool
    traces: dict  # initial state index -> Trace


def check_input(machine: Machine, word: str) -> None:
    bad = sorted(set(word) - set(machine.alphabet))
    if bad:
        raise InputError(f"symbols {bad} are not in the alphabet {''.join(machine.alphabet)}")


def count_passes(trace: Trace) -> int:
    confs = trace.configurations
    if len(confs) < 2:
        return 1
    passes, direction = 0, 0
    for before, after in zip(confs, confs[1:]):
        d = after.position - before.position
        if d != direction:
            passes += 1
            direction = d
    return passes


def run_one_way(machine: OneWayMachine, word: str, start: Optional[int] = None) -> Trace:
    check_input(machine, word)
    if start is None:
        start = machine.initial
    elif start not in machine.initials:
        raise ValueError(f"state {machine.states[start]} is not initial")
    q = start
    confs = [Configuration(q, 0)]
    for i, a in enumerate(word):
        q = machine.transitions[a].get(q)
        if q is None:
            return Trace(tuple(confs), Verdict.REJECT_UNDEFINED, 1)
        confs.append(Configuration(q, i + 1))
    verdict = Verdict.ACCEPT if q in machine.accepting else Verdict.REJECT_NONACCEPTING
    return Trace(tuple(confs), verdict, 1)


def run_mrfa(machine: OneWayMachine, word: str) -> MRFAResult:
    traces = {q: run_one_way(machine, word, q) for q in sorted(machine.initials)}
    return MRFAResult(any(t.accepted for t in traces.values()), traces)


def sweep_step(machine: SweepingMachine, word: str, q: int, pos: int) -> Optional[tuple]:
    """One step of the sweeping relation, or ``None`` when the machine halts."""
    k = len(word)
    if pos == 0:
        if machine.is_plus(q) and q != machine.initial:
            return None
        nxt = machine.delta_left.get(q)
        return None if nxt is None else (nxt, 1)
    if pos == k + 1:
        if not machine.is_plus(q):
            return None
        nxt = machine.delta_right.get(q)
        return None if nxt is None else (nxt, k)
    a = word[pos - 1]
    if machine.is_plus(q):
        nxt = machine.delta_plus[a].get(q)
        return None if nxt is None else (nxt, pos + 1)
    nxt = machine.delta_minus[a].get(q)
    return None if nxt is None else (nxt, pos - 1)


def _halt_verdict(machine: SweepingMachine, word: str, q: int, pos: int) -> Verdict:
    k = len(word)
    both = machine.acceptance_mode is AcceptanceMode.BOTH_SIDES
    at_accepting_marker = pos == k + 1 or (both and pos == 0)
    if not at_accepting_marker:
        return Verdict.REJECT_UNDEFINED
    return Verdict.ACCEPT if q in machine.accepting else Verdict.REJECT_NONACCEPTING


def run_sweeping(machine: SweepingMachine, word: str) -> Trace:
    check_input(machine, word)
    q, pos = machine.initial, 0
    confs = [Configuration(q, pos)]
    seen = {(q, pos)}
    while True:
        nxt = sweep_step(machine, word, q, pos)
        if nxt is None:
            verdict = _halt_verdict(machine, word, q, pos)
            break
        q, pos = nxt
        confs.append(Configuration(q, pos))
        if (q, pos) in seen:
            verdict = Verdict.REJECT_LOOP
            break
        seen.add((q, pos))
    partial = Trace(tuple(confs), verdict, 0)
    return Trace(partial.configurations, verdict, count_passes(partial))


def run(machine: Machine, word: str) -> Trace:
    """Trace for one-way (single initial) or sweeping machines."""
    if isinstance(machine, SweepingMachine):
        return run_sweeping(machine, word)
    return run_one_way(machine, word)


def accepts(machine: Machine, word: str) -> bool:
    if isinstance(machine, SweepingMachine):
        return run_sweeping(machine, word).accepted
    return run_mrfa(machine, word).accepted


def format_trace(machine: Machine, trace: Trace, word: str = "") -> str:
    """One configuration per line (``state @ position``) and a verdict footer."""
    names = machine.states
    lines = [f"{names[c.state]} @ {c.position}" for c in trace.configurations]
    lines.append(f"verdict: {trace.verdict.value}")
    lines.append(f"passes: {trace.pass_count}")
    return "\n".join(lines)
