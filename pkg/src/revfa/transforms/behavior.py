"""Reversible constructions that track behavior functions of an sRFA.

Notation used below, for an sRFA with left-to-right states ``P+`` and
right-to-left states ``P-`` (local indices, see :class:`SweepingView`):

* ``plus[a]``, ``minus[a]`` -- per-symbol partial injections,
* ``left`` -- the ``⊢`` transition restricted to ``P-``,
* ``right`` -- the ``⊣`` transition,
* a behavior function ``f: P- ⇀ P+`` maps a state entering the last symbol
  of a prefix leftwards to the state leaving that prefix rightwards after
  one turn at ``⊢``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import chain, combinations
from math import comb, factorial

from ..core import AcceptanceMode, MachineClass, OneWayMachine, SweepingMachine
from ..funcmath import (PartialInjection, complete_to_bijection, compose, count_partial_injections,
                        domain, enumerate_partial_injections, image, inverse, restrict)
from .common import SweepingView, TransformError, require_class
from .sweeping import both_sides_to_one_side


def _subsets(xs):
    xs = sorted(xs)
    return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))


def _prepare(m: SweepingMachine, what: str) -> SweepingView:
    if not isinstance(m, SweepingMachine):
        raise TransformError(f"{what} needs a sweeping machine")
    require_class(m, MachineClass.SRFA, what)
    if m.acceptance_mode is AcceptanceMode.BOTH_SIDES:
        m = both_sides_to_one_side(m)
    return SweepingView(m)


# -- sRFA -> MRFA ------------------------------------------------------------

@dataclass(frozen=True)
class BehaviorState:
    p: int
    f: PartialInjection


def mrfa_step(view: SweepingView, state: BehaviorState, a: str):
    """Successor of ``(p, f)`` by ``a``; ``None`` when ``p`` dies or ``|Dom f|`` shrinks."""
    p2 = view.plus[a].get(state.p)
    if p2 is None:
        return None
    g = compose(view.plus[a], compose(state.f, view.minus[a]))
    if len(g) != len(state.f):
        return None
    return BehaviorState(p2, g)


def mrfa_initial_states(view: SweepingView) -> list:
    if view.start is None:
        return []
    return [BehaviorState(view.start, restrict(view.left, s)) for s in _subsets(domain(view.left))]


def mrfa_accepting(view: SweepingView, state: BehaviorState) -> bool:
    return view.end_game(state.p, state.f)[0]


def srfa_to_mrfa(m: SweepingMachine, full: bool = False) -> OneWayMachine:
    """MRFA that guesses the domain of the behavior function up front.

    Initial states pair the sRFA's state after ``⊢`` with every restriction
    of the ``⊢`` transition; a step is defined only when it keeps the domain
    size, which makes every step injective.  ``full=True`` builds the whole
    state space ``{(p, f) : p ∉ Im f}``, otherwise only states reachable from
    the initial ones.  Both-sides inputs are normalized to right-only first.
    """
    view = _prepare(m, "srfa_to_mrfa")
    inits = mrfa_initial_states(view)
    if not inits:
        return OneWayMachine(m.alphabet, ("dead",), {0}, {}, set(), MachineClass.MRFA)
    if full:
        order = [BehaviorState(p, f)
                 for f in enumerate_partial_injections(view.n_minus, view.n_plus)
                 for p in range(view.n_plus) if p not in image(f)]
    else:
        order = list(inits)
    index = {s: i for i, s in enumerate(order)}
    trans = {a: {} for a in m.alphabet}
    queue = deque(order)
    while queue:
        st = queue.popleft()
        for a in m.alphabet:
            nxt = mrfa_step(view, st, a)
            if nxt is None:
                continue
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            trans[a][index[st]] = index[nxt]
    names = tuple(f"({view.plus_name(s.p)},{view.fname(s.f)})" for s in order)
    acc = {i for i, s in enumerate(order) if mrfa_accepting(view, s)}
    return OneWayMachine(m.alphabet, names, {index[s] for s in inits}, trans, acc,
                         MachineClass.MRFA)


def mrfa_state_space_size(m: SweepingMachine) -> int:
    """``|{(p, f) : p ∉ Im f}|`` for the (normalized) input machine."""
    view = _prepare(m, "mrfa_state_space_size")
    k, l = view.n_plus, view.n_minus
    return sum(comb(l, s) * comb(k, s) * factorial(s) * (k - s) for s in range(min(k, l) + 1))


# -- sRFA -> three-pass sRFA -------------------------------------------------

class _ThreePass:
    """State graph of the three-pass construction over a fixed input."""

    def __init__(self, view: SweepingView):
        self.view = view
        self.tplus = {a: complete_to_bijection(f) for a, f in view.plus.items()}
        self.tminus = {a: complete_to_bijection(f) for a, f in view.minus.items()}
        self.tplus_inv = {a: inverse(f) for a, f in self.tplus.items()}
        self.tminus_inv = {a: inverse(f) for a, f in self.tminus.items()}
        self.plus_inv = {a: inverse(f) for a, f in view.plus.items()}
        self.f0 = view.left

    def first(self, state, a):
        p, f = state
        p2 = self.view.plus[a].get(p)
        if p2 is None:
            return None
        return p2, compose(self.tplus[a], compose(f, self.tminus[a]))

    def turn_right(self, state):
        """``("accept", None)``, ``("turn", (f, R))`` or ``("reject", None)``."""
        p, f = state
        ok, entered = self.view.end_game(p, f)
        if not ok:
            return "reject", None
        if not entered:
            return "accept", None
        return "turn", (f, entered)

    def second(self, state, a):
        f, r = state
        r2 = self.view.minus[a].apply_set(r)
        fr = f.apply_set(r)
        back = self.plus_inv[a].apply_set(fr)
        if len(r2) != len(r) or len(fr) != len(back):
            return None
        f2 = compose(self.tplus_inv[a], compose(f, self.tminus_inv[a]))
        return f2, r2

    def turn_left(self, state):
        f, r = state
        return r if f == self.f0 else None


def _build_sweep(m: SweepingMachine, view: SweepingView, both_sides: bool) -> SweepingMachine:
    tp = _ThreePass(view)
    alphabet = m.alphabet
    if view.start is None:
        return SweepingMachine(alphabet, ("dead",), (), 0, {}, {}, {}, {}, set(),
                               AcceptanceMode.RIGHT_ONLY, MachineClass.SRFA)
    start = (view.start, tp.f0)
    firsts, seconds, thirds = [start], [], []
    fi, si, ti = {start: 0}, {}, {}
    d_plus = {a: [] for a in alphabet}   # (kind, src, dst) collected then numbered
    d_minus = {a: [] for a in alphabet}
    right, left = [], []
    accept_first, accept_second = set(), set()

    queue = deque([start])
    while queue:
        st = queue.popleft()
        for a in alphabet:
            nxt = tp.first(st, a)
            if nxt is None:
                continue
            if nxt not in fi:
                fi[nxt] = len(firsts)
                firsts.append(nxt)
                queue.append(nxt)
            d_plus[a].append((("1", fi[st]), ("1", fi[nxt])))
        verdict, target = tp.turn_right(st)
        if verdict == "accept":
            accept_first.add(fi[st])
        elif verdict == "turn":
            if target not in si:
                si[target] = len(seconds)
                seconds.append(target)
            right.append((fi[st], si[target]))

    queue = deque(seconds)
    while queue:
        st = queue.popleft()
        for a in alphabet:
            nxt = tp.second(st, a)
            if nxt is None:
                continue
            if nxt not in si:
                si[nxt] = len(seconds)
                seconds.append(nxt)
                queue.append(nxt)
            d_minus[a].append((si[st], si[nxt]))
        r = tp.turn_left(st)
        if r is None:
            continue
        if both_sides:
            accept_second.add(si[st])
        else:
            if r not in ti:
                ti[r] = len(thirds)
                thirds.append(r)
            left.append((si[st], ti[r]))

    n1, n3 = len(firsts), len(thirds)
    n_plus = n1 + n3

    def gp(ref):
        kind, i = ref
        return i if kind == "1" else n1 + i

    def gm(i):
        return n_plus + i

    delta_plus = {a: {gp(s): gp(d) for s, d in d_plus[a]} for a in alphabet}
    for a in alphabet:
        for i in range(n3):
            delta_plus[a][n1 + i] = n1 + i
    delta_minus = {a: {gm(s): gm(d) for s, d in d_minus[a]} for a in alphabet}
    delta_left = {0: 0}
    delta_left.update({gm(s): n1 + t for s, t in left})
    delta_right = {s: gm(t) for s, t in right}
    accepting = set(accept_first) | {n1 + i for i in range(n3)}
    accepting |= {gm(i) for i in accept_second}

    plus_names = tuple(f"({view.plus_name(p)},{view.fname(f)})" for p, f in firsts)
    plus_names += tuple(f"R{view.setname(r)}" for r in thirds)
    minus_names = tuple(f"({view.fname(f)},{view.setname(r)})" for f, r in seconds)
    mode = AcceptanceMode.BOTH_SIDES if both_sides else AcceptanceMode.RIGHT_ONLY
    return SweepingMachine(alphabet, plus_names, minus_names, 0, delta_plus, delta_minus,
                           delta_left, delta_right, accepting, mode, MachineClass.SRFA)


def srfa_to_three_pass(m: SweepingMachine) -> SweepingMachine:
    """Right-only sRFA for the same language making at most three passes.

    Pass one runs the input machine while computing the behavior function of
    its completion to a sweeping permutation automaton; at ``⊣`` the end-game
    is replayed on that function.  Pass two walks back checking that every
    transition the replay relied on exists in the input machine, forgetting
    the behavior function reversibly.  Pass three only carries the set of
    tracked states to ``⊣`` and accepts.  When the replay accepts without
    ever turning, pass one accepts directly.
    """
    view = _prepare(m, "srfa_to_three_pass")
    return _build_sweep(view.m, view, both_sides=False)


def srfa_to_two_pass(m: SweepingMachine) -> SweepingMachine:
    """Both-sides variant: accepts at ``⊢`` after the checking pass."""
    view = _prepare(m, "srfa_to_two_pass")
    return _build_sweep(view.m, view, both_sides=True)


@dataclass(frozen=True)
class StateSpace:
    plus: int
    minus: int


def three_pass_state_space(m: SweepingMachine) -> StateSpace:
    """Size of the unpruned state space of the three-pass construction.

    Left-to-right states are pairs ``(p, f)`` with ``|Dom f|`` equal to the
    number ``d`` of right-to-left states with a ``⊢`` transition and
    ``p ∉ Im f``, plus the ``2^d`` subsets carried by pass three.
    Right-to-left states are pairs ``(f, R)`` with ``|Dom f| = d`` and
    ``R ⊆ Dom f``.  Counted by enumeration.
    """
    view = _prepare(m, "three_pass_state_space")
    d = len(view.left)
    plus = minus = 0
    for f in enumerate_partial_injections(view.n_minus, view.n_plus):
        if len(f) != d:
            continue
        plus += view.n_plus - len(image(f))
        minus += 2 ** d
    return StateSpace(plus + 2 ** d, minus)


def three_pass_closed_form(k: int, l: int, m: int) -> StateSpace:
    """Closed-form counts with ``k = |P+|``, ``l = |P-|`` and ``m`` the number of
    right-to-left states without a ``⊢`` transition."""
    d = l - m
    if d < 0 or d > k:
        return StateSpace(2 ** max(d, 0), 0)
    plus = k * comb(l, m) * comb(k - 1, d) * factorial(d) + 2 ** d
    minus = comb(l, m) * comb(k, d) * factorial(d) * 2 ** d
    return StateSpace(plus, minus)


def three_pass_upper_bounds(m: SweepingMachine) -> StateSpace:
    view = _prepare(m, "three_pass_upper_bounds")
    n_pi = count_partial_injections(view.n_minus, view.n_plus)
    return StateSpace(view.n_plus * n_pi + 2 ** view.n_minus, n_pi * 2 ** view.n_minus)
