"""Random machine generators and independent oracles shared by the tests."""

import random
from itertools import chain, combinations

from revfa.core import AcceptanceMode, MachineClass, OneWayMachine, SweepingMachine


def random_injection(rng, sources, targets, density=0.7):
    pool = list(targets)
    rng.shuffle(pool)
    out = {}
    for s in sources:
        if pool and rng.random() < density:
            out[s] = pool.pop()
    return out


def random_function(rng, sources, targets, density=0.7):
    targets = list(targets)
    return {s: rng.choice(targets) for s in sources if targets and rng.random() < density}


def random_sweeping(rng, reversible=True, max_plus=3, max_minus=3, alphabet=("a", "b"),
                    both_sides=False):
    kp = rng.randint(1, max_plus)
    km = rng.randint(0, max_minus)
    plus, minus = range(kp), range(kp, kp + km)
    pick = random_injection if reversible else random_function
    dp = {a: pick(rng, plus, plus) for a in alphabet}
    dm = {a: pick(rng, minus, minus) for a in alphabet}
    left = pick(rng, [0, *minus], plus, density=0.8)
    right = pick(rng, plus, minus)
    pool = range(kp + km) if both_sides else plus
    acc = {q for q in pool if rng.random() < 0.4}
    cls = MachineClass.SRFA if reversible else MachineClass.SDFA
    mode = AcceptanceMode.BOTH_SIDES if both_sides else AcceptanceMode.RIGHT_ONLY
    return SweepingMachine(tuple(alphabet), tuple(f"p{i}" for i in plus),
                           tuple(f"q{i}" for i in range(km)), 0, dp, dm, left, right, acc,
                           mode, cls)


def random_srfas(n, seed=0, **kw):
    rng = random.Random(seed)
    return [random_sweeping(rng, True, **kw) for _ in range(n)]


def random_sdfas(n, seed=0, **kw):
    rng = random.Random(seed)
    return [random_sweeping(rng, False, **kw) for _ in range(n)]


def random_mrfa(rng, max_states=4, alphabet=("a", "b"), max_initials=3):
    n = rng.randint(1, max_states)
    trans = {a: random_injection(rng, range(n), range(n)) for a in alphabet}
    inits = set(rng.sample(range(n), rng.randint(1, min(n, max_initials))))
    acc = {q for q in range(n) if rng.random() < 0.4}
    return OneWayMachine(tuple(alphabet), tuple(f"s{i}" for i in range(n)), inits, trans, acc,
                         MachineClass.MRFA)


# -- direct simulation oracles ----------------------------------------------

def first_pass_state(m: SweepingMachine, s: str):
    """State after ``⊢`` and a left-to-right sweep of ``s``, or ``None``."""
    q = m.delta_left.get(m.initial)
    for c in s:
        if q is None:
            return None
        q = m.delta_plus[c].get(q)
    return q


def two_sweep(m: SweepingMachine, s: str, q: int):
    """From ``q`` (in Q-) read ``s`` leftwards, turn at ``⊢``, read it rightwards."""
    for c in reversed(s):
        q = m.delta_minus[c].get(q)
        if q is None:
            return None
    q = m.delta_left.get(q)
    for c in s:
        if q is None:
            return None
        q = m.delta_plus[c].get(q)
    return q


def reachable_behavior_names(m: SweepingMachine, s: str) -> set:
    """Names ``(p,{q>p',...})`` of every (state, behavior restriction) pair for ``s``."""
    p = first_pass_state(m, s)
    if p is None:
        return set()
    full = {}
    for q in m.minus_range:
        t = two_sweep(m, s, q)
        if t is not None:
            full[q] = t
    names = m.states
    out = set()
    keys = sorted(full)
    for sub in chain.from_iterable(combinations(keys, r) for r in range(len(keys) + 1)):
        if p in {full[q] for q in sub}:
            continue
        body = ",".join(f"{names[q]}>{names[full[q]]}" for q in sub)
        out.add(f"({names[p]},{{{body}}})")
    return out


def unary_membership(m: OneWayMachine, n: int) -> bool:
    """Brute-force acceptance of ``a^n`` by a unary multi-initial machine."""
    a = m.alphabet[0]
    for q in m.initials:
        for _ in range(n):
            q = m.transitions[a].get(q)
            if q is None:
                break
        else:
            if q in m.accepting:
                return True
    return False
