"""Unary MRFA to both-sides sRFA."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from ..core import AcceptanceMode, MachineClass, OneWayMachine, SweepingMachine
from .common import TransformError, require_class


@dataclass(frozen=True)
class UnaryComponent:
    """The run of one initial state: a cycle back to it or a dying path."""
    initial: int
    cyclic: bool
    length: int              # cycle length, or number of states on the path
    accepted: frozenset      # accepted residues (cycle) or accepted lengths (path)


def decompose(m: OneWayMachine) -> list:
    a = m.alphabet[0]
    delta = m.transitions[a]
    parts = []
    for q0 in sorted(m.initials):
        run = [q0]
        q = delta.get(q0)
        while q is not None and q != q0:
            run.append(q)
            q = delta.get(q)
        acc = frozenset(i for i, s in enumerate(run) if s in m.accepting)
        parts.append(UnaryComponent(q0, q == q0, len(run), acc))
    return parts


def unary_mrfa_to_srfa(m: OneWayMachine) -> SweepingMachine:
    """Both-sides sRFA for the language of a unary MRFA.

    The cyclic components merge into one permutation cycle whose length is
    the lcm of theirs; the first pass runs it and accepts at ``⊣`` on an
    accepting residue.  Dying components only contribute finitely many
    lengths.  From a rejecting residue ``r`` that still has such lengths
    ``n ≡ r``, the machine turns into a counting chain ``c_r1, c_r2, ...``
    read leftwards and accepts at ``⊢`` in ``c_ri`` iff ``a^(i-1)`` is in the
    language.  One chain per residue keeps the ``⊣`` transition injective.
    """
    if not isinstance(m, OneWayMachine) or len(m.alphabet) != 1:
        raise TransformError("unary_mrfa_to_srfa needs a one-way machine over one symbol")
    require_class(m, MachineClass.MRFA, "unary_mrfa_to_srfa")
    a = m.alphabet[0]
    parts = decompose(m)
    cycles = [c for c in parts if c.cyclic]
    period = lcm(*(c.length for c in cycles)) if cycles else 1
    good = {r for r in range(period) if any(r % c.length in c.accepted for c in cycles)}
    finite = set().union(*(c.accepted for c in parts if not c.cyclic))

    def in_language(n: int) -> bool:
        return n in finite or (n % period) in good

    chains = {}
    for r in range(period):
        if r in good:
            continue
        lengths = [n for n in finite if n % period == r]
        if lengths:
            chains[r] = max(lengths) + 1

    plus_names = tuple(f"b{r}" for r in range(period))
    minus_names = []
    chain_start = {}
    accepting = set(good)
    delta_minus = {}
    for r, size in chains.items():
        base = period + len(minus_names)
        chain_start[r] = base
        for i in range(1, size + 1):
            minus_names.append(f"c{r}_{i}")
            if in_language(i - 1):
                accepting.add(base + i - 1)
            if i < size:
                delta_minus[base + i - 1] = base + i
    delta_plus = {r: (r + 1) % period for r in range(period)}
    delta_right = {r: chain_start[r] for r in chains}
    return SweepingMachine((a,), plus_names, tuple(minus_names), 0, {a: delta_plus},
                           {a: delta_minus}, {0: 0}, delta_right, accepting,
                           AcceptanceMode.BOTH_SIDES, MachineClass.SRFA)
