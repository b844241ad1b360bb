"""Machine data model, structural checks, class validation and inference.

Two machine shapes cover all six automaton variants:

* :class:`OneWayMachine` -- 1DFA, 1RFA, 1PerFA and MRFA.  States are indexed
  positionally; ``transitions[a]`` is a partial map ``index -> index``.
* :class:`SweepingMachine` -- sDFA, sRFA and 2PerFA.  States are indexed
  globally: ``0 .. n_plus-1`` are the left-to-right states, the remaining
  ones read right to left.

Both are frozen dataclasses.  Their mapping fields are copied on construction
and must be treated as read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence, Union


class MachineClass(str, Enum):
    DFA = "1dfa"
    RFA = "1rfa"
    PERFA = "1perfa"
    MRFA = "mrfa"
    SDFA = "sdfa"
    SRFA = "srfa"
    PERFA2 = "2perfa"

    @property
    def sweeping(self) -> bool:
        return self in (MachineClass.SDFA, MachineClass.SRFA, MachineClass.PERFA2)


class AcceptanceMode(str, Enum):
    RIGHT_ONLY = "right_only"
    BOTH_SIDES = "both_sides"


ONE_WAY_CLASSES = (MachineClass.DFA, MachineClass.RFA, MachineClass.PERFA, MachineClass.MRFA)
SWEEPING_CLASSES = (MachineClass.SDFA, MachineClass.SRFA, MachineClass.PERFA2)

# Classes that are strictly more restrictive than the key.
_STRONGER = {
    MachineClass.DFA: (MachineClass.RFA, MachineClass.PERFA),
    MachineClass.MRFA: (MachineClass.RFA, MachineClass.PERFA),
    MachineClass.RFA: (MachineClass.PERFA,),
    MachineClass.PERFA: (),
    MachineClass.SDFA: (MachineClass.SRFA, MachineClass.PERFA2),
    MachineClass.SRFA: (MachineClass.PERFA2,),
    MachineClass.PERFA2: (),
}


def stronger_classes(cls: MachineClass) -> tuple:
    return _STRONGER[cls]


class StructuralError(ValueError):
    """A machine refers to a state or symbol that does not exist."""


def _check_alphabet(alphabet: Sequence[str]) -> tuple:
    alphabet = tuple(alphabet)
    if not alphabet:
        raise StructuralError("alphabet is empty")
    for a in alphabet:
        if not isinstance(a, str) or len(a) != 1:
            raise StructuralError(f"symbol {a!r} is not a single character")
    if len(set(alphabet)) != len(alphabet):
        raise StructuralError("alphabet has duplicate symbols")
    return alphabet


def _freeze_maps(maps: Mapping, alphabet: tuple) -> dict:
    unknown = set(maps) - set(alphabet)
    if unknown:
        raise StructuralError(f"transitions on unknown symbols {sorted(unknown)}")
    return {a: dict(maps.get(a, {})) for a in alphabet}


def _is_injective(m: Mapping[int, int]) -> bool:
    return len(set(m.values())) == len(m)


@dataclass(frozen=True)
class OneWayMachine:
    alphabet: tuple
    states: tuple
    initials: frozenset
    transitions: dict
    accepting: frozenset
    declared_class: MachineClass = MachineClass.DFA

    def __post_init__(self):
        alphabet = _check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", _freeze_maps(self.transitions, alphabet))
        object.__setattr__(self, "declared_class", MachineClass(self.declared_class))
        if self.declared_class.sweeping:
            raise StructuralError(f"{self.declared_class.value} is not a one-way class")
        n = len(self.states)
        if len(set(self.states)) != n:
            raise StructuralError("duplicate state names")
        if not self.initials:
            raise StructuralError("no initial state")
        for q in self.initials | self.accepting:
            if not 0 <= q < n:
                raise StructuralError(f"state index {q} out of range")
        for a, m in self.transitions.items():
            for src, dst in m.items():
                if not (0 <= src < n and 0 <= dst < n):
                    raise StructuralError(f"transition {src}-{a}->{dst} out of range")

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def initial(self) -> int:
        """The unique initial state (error for multi-initial machines)."""
        if len(self.initials) != 1:
            raise ValueError("machine has several initial states")
        return next(iter(self.initials))

    def step(self, q: int, a: str) -> Optional[int]:
        return self.transitions[a].get(q)

    def with_class(self, cls: MachineClass) -> OneWayMachine:
        return OneWayMachine(self.alphabet, self.states, self.initials,
                             self.transitions, self.accepting, cls)


@dataclass(frozen=True)
class SweepingMachine:
    alphabet: tuple
    plus_states: tuple
    minus_states: tuple
    initial: int
    delta_plus: dict
    delta_minus: dict
    delta_left: dict
    delta_right: dict
    accepting: frozenset
    acceptance_mode: AcceptanceMode = AcceptanceMode.RIGHT_ONLY
    declared_class: MachineClass = MachineClass.SDFA

    def __post_init__(self):
        alphabet = _check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "plus_states", tuple(self.plus_states))
        object.__setattr__(self, "minus_states", tuple(self.minus_states))
        object.__setattr__(self, "delta_plus", _freeze_maps(self.delta_plus, alphabet))
        object.__setattr__(self, "delta_minus", _freeze_maps(self.delta_minus, alphabet))
        object.__setattr__(self, "delta_left", dict(self.delta_left))
        object.__setattr__(self, "delta_right", dict(self.delta_right))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "acceptance_mode", AcceptanceMode(self.acceptance_mode))
        object.__setattr__(self, "declared_class", MachineClass(self.declared_class))
        if not self.declared_class.sweeping:
            raise StructuralError(f"{self.declared_class.value} is not a sweeping class")
        names = self.plus_states + self.minus_states
        if len(set(names)) != len(names):
            raise StructuralError("state names must be distinct across Q+ and Q-")
        plus, minus = self.plus_range, self.minus_range
        if self.initial not in plus:
            raise StructuralError("initial state must be a left-to-right state")
        for q in self.accepting:
            if not 0 <= q < self.n_states:
                raise StructuralError(f"state index {q} out of range")
        for a in alphabet:
            for src, dst in self.delta_plus[a].items():
                if src not in plus or dst not in plus:
                    raise StructuralError(f"delta+ on {a}: {src}->{dst} leaves Q+")
            for src, dst in self.delta_minus[a].items():
                if src not in minus or dst not in minus:
                    raise StructuralError(f"delta- on {a}: {src}->{dst} leaves Q-")
        for src, dst in self.delta_left.items():
            if (src != self.initial and src not in minus) or dst not in plus:
                raise StructuralError(f"left end-marker transition {src}->{dst} is malformed")
        for src, dst in self.delta_right.items():
            if src not in plus or dst not in minus:
                raise StructuralError(f"right end-marker transition {src}->{dst} is malformed")

    @property
    def n_plus(self) -> int:
        return len(self.plus_states)

    @property
    def n_minus(self) -> int:
        return len(self.minus_states)

    @property
    def n_states(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def plus_range(self) -> range:
        return range(self.n_plus)

    @property
    def minus_range(self) -> range:
        return range(self.n_plus, self.n_states)

    @property
    def states(self) -> tuple:
        return self.plus_states + self.minus_states

    def is_plus(self, q: int) -> bool:
        return q < self.n_plus

    def with_class(self, cls: MachineClass,
                   mode: Optional[AcceptanceMode] = None) -> SweepingMachine:
        return SweepingMachine(self.alphabet, self.plus_states, self.minus_states, self.initial,
                               self.delta_plus, self.delta_minus, self.delta_left,
                               self.delta_right, self.accepting,
                               mode or self.acceptance_mode, cls)


Machine = Union[OneWayMachine, SweepingMachine]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    symbol: Optional[str] = None
    state: Optional[str] = None

    def __str__(self):
        return f"[{self.code}] {self.message}"


@dataclass
class ValidationReport:
    declared: MachineClass
    inferred: Optional[MachineClass]
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def lines(self) -> list[str]:
        out = [f"declared: {self.declared.value}",
               f"inferred: {self.inferred.value if self.inferred else 'none'}"]
        out += [f"violation: {v}" for v in self.violations]
        out += [f"warning: {w}" for w in self.warnings]
        out.append("valid" if self.ok else "invalid")
        return out


def _non_injective(m: Mapping[int, int], names) -> Optional[str]:
    seen = {}
    for src in sorted(m):
        dst = m[src]
        if dst in seen:
            return f"{names[seen[dst]]} and {names[src]} both go to {names[dst]}"
        seen[dst] = src
    return None


def _one_way_violations(m: OneWayMachine, cls: MachineClass) -> list:
    out = []
    names = m.states
    if cls in (MachineClass.DFA, MachineClass.RFA, MachineClass.PERFA) and len(m.initials) != 1:
        out.append(Violation("V-INIT", f"{cls.value} needs exactly one initial state, "
                                       f"found {len(m.initials)}"))
    if cls in (MachineClass.RFA, MachineClass.PERFA, MachineClass.MRFA):
        for a in m.alphabet:
            why = _non_injective(m.transitions[a], names)
            if why:
                out.append(Violation("V-INJ", f"delta_{a} not injective: {why}", symbol=a))
    if cls is MachineClass.PERFA:
        for a in m.alphabet:
            undefined = [names[q] for q in range(m.n_states) if q not in m.transitions[a]]
            if undefined:
                out.append(Violation("V-TOTAL", f"delta_{a} undefined on {', '.join(undefined)}",
                                     symbol=a, state=undefined[0]))
    return out


def _sweeping_violations(m: SweepingMachine, cls: MachineClass) -> list:
    out = []
    names = m.states
    if m.acceptance_mode is AcceptanceMode.RIGHT_ONLY:
        bad = sorted(q for q in m.accepting if not m.is_plus(q))
        if bad:
            out.append(Violation("V-ACCEPT", "right-only acceptance with accepting states in Q-: "
                                 + ", ".join(names[q] for q in bad), state=names[bad[0]]))
    if cls in (MachineClass.SRFA, MachineClass.PERFA2):
        for a in m.alphabet:
            for sign, maps in (("+", m.delta_plus), ("-", m.delta_minus)):
                why = _non_injective(maps[a], names)
                if why:
                    out.append(Violation("V-INJ", f"delta{sign}_{a} not injective: {why}", symbol=a))
        for label, maps in (("left end-marker", m.delta_left), ("right end-marker", m.delta_right)):
            why = _non_injective(maps, names)
            if why:
                out.append(Violation("V-INJ", f"{label} transition not injective: {why}"))
    if cls is MachineClass.PERFA2:
        for a in m.alphabet:
            for sign, maps, rng in (("+", m.delta_plus, m.plus_range),
                                    ("-", m.delta_minus, m.minus_range)):
                undefined = [names[q] for q in rng if q not in maps[a]]
                if undefined:
                    out.append(Violation("V-TOTAL", f"delta{sign}_{a} undefined on "
                                         + ", ".join(undefined), symbol=a, state=undefined[0]))
    return out


def violations_for(machine: Machine, cls: MachineClass) -> list:
    """Violations of ``machine`` against class ``cls`` (ignoring its declaration)."""
    if isinstance(machine, OneWayMachine):
        if cls.sweeping:
            raise ValueError(f"{cls.value} is not a one-way class")
        return _one_way_violations(machine, cls)
    if not cls.sweeping:
        raise ValueError(f"{cls.value} is not a sweeping class")
    return _sweeping_violations(machine, cls)


def infer_class(machine: Machine) -> Optional[MachineClass]:
    """Most restrictive class whose invariants hold, or ``None``.

    ``None`` only happens for a multi-initial machine with a non-injective
    transition map, which belongs to no modelled class.
    """
    if isinstance(machine, OneWayMachine):
        if len(machine.initials) > 1:
            return MachineClass.MRFA if not violations_for(machine, MachineClass.MRFA) else None
        order = (MachineClass.PERFA, MachineClass.RFA, MachineClass.DFA)
    else:
        order = (MachineClass.PERFA2, MachineClass.SRFA, MachineClass.SDFA)
    for cls in order:
        found = [v for v in violations_for(machine, cls) if v.code != "V-ACCEPT"]
        if not found:
            return cls
    return None


def validate(machine: Machine) -> ValidationReport:
    """Check ``machine`` against its declared class.

    Structural problems (dangling indices) raise :class:`StructuralError`
    when the machine is constructed, so a report only lists class violations.
    """
    if not isinstance(machine, (OneWayMachine, SweepingMachine)):
        raise TypeError(f"not a machine: {type(machine).__name__}")
    declared = machine.declared_class
    report = ValidationReport(declared, infer_class(machine), violations_for(machine, declared))
    inferred = report.inferred
    if inferred is not None and inferred is not declared and inferred in stronger_classes(declared):
        report.warnings.append(f"machine also satisfies the stronger class {inferred.value}")
    return report
