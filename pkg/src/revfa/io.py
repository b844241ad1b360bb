"""Line-oriented machine files and DOT export.

File format (``#`` starts a comment, tokens are whitespace separated)::

    @kind srfa
    @alphabet a
    @states+ p0 p1
    @states- q0 q1
    @initial p0
    @accept p0
    @trans a + p0 -> p1
    @trans a - q0 -> q1
    @left q1 -> p1
    @right p1 -> q0

One-way kinds (``1dfa 1rfa 1perfa mrfa``) use ``@states`` and
``@trans <sym> <src> -> <dst>``.  ``srfa2`` is an sRFA accepting at either
end-marker.  Errors carry a line number and one of the codes in
:data:`ERROR_CODES`.
"""

from __future__ import annotations

from typing import Optional

from .core import (AcceptanceMode, MachineClass, OneWayMachine, StructuralError,
                   SweepingMachine, validate)

KINDS = {
    "1dfa": (MachineClass.DFA, None),
    "1rfa": (MachineClass.RFA, None),
    "1perfa": (MachineClass.PERFA, None),
    "mrfa": (MachineClass.MRFA, None),
    "sdfa": (MachineClass.SDFA, AcceptanceMode.RIGHT_ONLY),
    "srfa": (MachineClass.SRFA, AcceptanceMode.RIGHT_ONLY),
    "2perfa": (MachineClass.PERFA2, AcceptanceMode.RIGHT_ONLY),
    "srfa2": (MachineClass.SRFA, AcceptanceMode.BOTH_SIDES),
}

ERROR_CODES = {
    "E-SYNTAX": "malformed directive",
    "E-KEYWORD": "unknown keyword",
    "E-MISSING": "required directive missing",
    "E-REPEAT": "directive given twice",
    "E-SYMBOL": "symbol not in the alphabet",
    "E-UNDECLARED": "state not declared (or on the wrong side)",
    "E-DUPLICATE": "duplicate state or transition source",
    "E-STRUCT": "structurally malformed machine",
    "E-CLASS": "machine violates its declared kind",
}

_ONCE = ("@kind", "@alphabet", "@states", "@states+", "@states-", "@initial", "@accept")


class ParseError(ValueError):
    def __init__(self, code: str, line: int, message: str):
        super().__init__(f"line {line}: {code}: {message}")
        self.code = code
        self.line = line


class _Reader:
    def __init__(self, strict: bool):
        self.strict = strict
        self.seen: dict[str, int] = {}
        self.kind: Optional[str] = None
        self.alphabet: Optional[tuple] = None
        self.plus: list = []
        self.minus: list = []
        self.index: dict[str, int] = {}
        self.initials: list = []
        self.accepting: list = []
        self.trans: dict = {}        # (sym, dir) -> {src: dst}
        self.left: dict = {}
        self.right: dict = {}
        self.left_lines: dict = {}

    @property
    def sweeping(self) -> bool:
        return KINDS[self.kind][1] is not None

    def fail(self, code, line, msg):
        raise ParseError(code, line, msg)

    def need(self, key, line):
        if key not in self.seen:
            self.fail("E-MISSING", line, f"{key} must come before this line")

    def state(self, name, line, side=None) -> int:
        q = self.index.get(name)
        if q is None:
            self.fail("E-UNDECLARED", line, f"state {name!r} is not declared")
        if side == "+" and q >= len(self.plus):
            self.fail("E-UNDECLARED", line, f"state {name!r} is not in @states+")
        if side == "-" and q < len(self.plus):
            self.fail("E-UNDECLARED", line, f"state {name!r} is not in @states-")
        return q

    def declare(self, names, line, bucket):
        for name in names:
            if name in self.index:
                self.fail("E-DUPLICATE", line, f"state {name!r} declared twice")
            bucket.append(name)
        self._reindex()

    def _reindex(self):
        self.index = {n: i for i, n in enumerate(self.plus + self.minus)}

    def arrow(self, toks, line):
        if len(toks) != 3 or toks[1] != "->":
            self.fail("E-SYNTAX", line, "expected '<src> -> <dst>'")
        return toks[0], toks[2]

    def directive(self, key, args, line):
        if key in _ONCE:
            if key in self.seen:
                self.fail("E-REPEAT", line, f"{key} already given on line {self.seen[key]}")
        if key != "@kind":
            self.need("@kind", line)
        self.seen.setdefault(key, line)
        if key == "@kind":
            if len(args) != 1 or args[0] not in KINDS:
                self.fail("E-SYNTAX", line, f"@kind takes one of {' '.join(KINDS)}")
            self.kind = args[0]
        elif key == "@alphabet":
            if not args:
                self.fail("E-SYNTAX", line, "@alphabet needs at least one symbol")
            for a in args:
                if len(a) != 1:
                    self.fail("E-SYNTAX", line, f"symbol {a!r} is not a single character")
            if len(set(args)) != len(args):
                self.fail("E-DUPLICATE", line, "repeated alphabet symbol")
            self.alphabet = tuple(args)
        elif key in ("@states", "@states+", "@states-"):
            if (key == "@states") == self.sweeping:
                want = "@states+ / @states-" if self.sweeping else "@states"
                self.fail("E-SYNTAX", line, f"kind {self.kind} declares states with {want}")
            if key != "@states-" and not args:
                self.fail("E-SYNTAX", line, f"{key} needs at least one state")
            if key == "@states+" and self.minus:
                self.fail("E-SYNTAX", line, "@states+ must precede @states-")
            self.declare(args, line, self.minus if key == "@states-" else self.plus)
        elif key == "@initial":
            if not args:
                self.fail("E-SYNTAX", line, "@initial needs a state")
            if len(args) > 1 and self.kind != "mrfa":
                self.fail("E-SYNTAX", line, "only mrfa allows several initial states")
            self.initials = [self.state(n, line, "+" if self.sweeping else None) for n in args]
            if len(set(self.initials)) != len(self.initials):
                self.fail("E-DUPLICATE", line, "repeated initial state")
        elif key == "@accept":
            self.accepting = [self.state(n, line) for n in args]
        elif key == "@trans":
            self.need("@alphabet", line)
            if not args:
                self.fail("E-SYNTAX", line, "@trans needs a symbol")
            sym, rest = args[0], args[1:]
            if sym not in self.alphabet:
                self.fail("E-SYMBOL", line, f"symbol {sym!r} is not in the alphabet")
            side = None
            if self.sweeping:
                if not rest or rest[0] not in "+-" or len(rest[0]) != 1:
                    self.fail("E-SYNTAX", line, "sweeping @trans needs a direction + or -")
                side, rest = rest[0], rest[1:]
            src, dst = self.arrow(rest, line)
            s, d = self.state(src, line, side), self.state(dst, line, side)
            table = self.trans.setdefault((sym, side), {})
            if s in table:
                self.fail("E-DUPLICATE", line, f"second {sym}-transition from {src!r}")
            table[s] = d
        elif key in ("@left", "@right"):
            if not self.sweeping:
                self.fail("E-SYNTAX", line, f"{key} only applies to sweeping kinds")
            src, dst = self.arrow(args, line)
            if key == "@left":
                s, d = self.state(src, line), self.state(dst, line, "+")
                table = self.left
                self.left_lines[s] = line
            else:
                s, d = self.state(src, line, "+"), self.state(dst, line, "-")
                table = self.right
            if s in table:
                self.fail("E-DUPLICATE", line, f"second {key} transition from {src!r}")
            table[s] = d
        else:
            self.fail("E-KEYWORD", line, f"unknown keyword {key!r}")

    def build(self, last_line: int):
        for key in ("@kind", "@alphabet", "@initial"):
            if key not in self.seen:
                self.fail("E-MISSING", last_line, f"missing {key}")
        if self.sweeping:
            if "@states+" not in self.seen:
                self.fail("E-MISSING", last_line, "missing @states+")
        elif "@states" not in self.seen:
            self.fail("E-MISSING", last_line, "missing @states")
        cls, mode = KINDS[self.kind]
        try:
            if not self.sweeping:
                trans = {a: self.trans.get((a, None), {}) for a in self.alphabet}
                m = OneWayMachine(self.alphabet, tuple(self.plus), set(self.initials), trans,
                                  set(self.accepting), cls)
            else:
                initial = self.initials[0]
                for s, ln in sorted(self.left_lines.items(), key=lambda t: t[1]):
                    if s != initial and s < len(self.plus):
                        self.fail("E-UNDECLARED", ln,
                                  f"@left source {self.plus[s]!r} is neither initial nor in Q-")
                plus = {a: self.trans.get((a, "+"), {}) for a in self.alphabet}
                minus = {a: self.trans.get((a, "-"), {}) for a in self.alphabet}
                m = SweepingMachine(self.alphabet, tuple(self.plus), tuple(self.minus), initial,
                                    plus, minus, self.left, self.right, set(self.accepting),
                                    mode, cls)
        except StructuralError as e:
            self.fail("E-STRUCT", last_line, str(e))
        if self.strict:
            report = validate(m)
            if not report.ok:
                self.fail("E-CLASS", self.seen["@kind"],
                          "; ".join(str(v) for v in report.violations))
        return m


def parse(text: str, strict: bool = True):
    """Parse a machine file.  With ``strict`` the declared kind is validated."""
    r = _Reader(strict)
    n = 0
    for n, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if not toks[0].startswith("@"):
            r.fail("E-SYNTAX", n, f"expected a directive, got {toks[0]!r}")
        r.directive(toks[0], toks[1:], n)
    return r.build(max(n, 1))


def kind_of(machine) -> str:
    cls = machine.declared_class
    if isinstance(machine, SweepingMachine) and machine.acceptance_mode is AcceptanceMode.BOTH_SIDES:
        if cls is not MachineClass.SRFA:
            raise ValueError(f"both-sides acceptance is only representable for srfa, not {cls.value}")
        return "srfa2"
    return cls.value


def emit(machine) -> str:
    """Canonical text for ``machine``; ``parse(emit(m)) == m``."""
    names = machine.states
    out = [f"@kind {kind_of(machine)}", "@alphabet " + " ".join(machine.alphabet)]

    def line(*parts):
        out.append(" ".join(p for p in parts if p != ""))

    if isinstance(machine, OneWayMachine):
        line("@states", *names)
        line("@initial", *(names[q] for q in sorted(machine.initials)))
        line("@accept", *(names[q] for q in sorted(machine.accepting)))
        for a in machine.alphabet:
            for s, d in sorted(machine.transitions[a].items()):
                line("@trans", a, names[s], "->", names[d])
    else:
        line("@states+", *machine.plus_states)
        line("@states-", *machine.minus_states)
        line("@initial", names[machine.initial])
        line("@accept", *(names[q] for q in sorted(machine.accepting)))
        for a in machine.alphabet:
            for side, maps in (("+", machine.delta_plus), ("-", machine.delta_minus)):
                for s, d in sorted(maps[a].items()):
                    line("@trans", a, side, names[s], "->", names[d])
        for s, d in sorted(machine.delta_left.items()):
            line("@left", names[s], "->", names[d])
        for s, d in sorted(machine.delta_right.items()):
            line("@right", names[s], "->", names[d])
    return "\n".join(out) + "\n"


def load(path: str, strict: bool = True):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), strict)


def save(machine, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(machine))


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edges(pairs) -> list[str]:
    """Merge parallel edges into one edge with a comma-separated label."""
    labels: dict = {}
    for src, dst, label in pairs:
        labels.setdefault((src, dst), []).append(label)
    return [f"  {_q(s)} -> {_q(d)} [label={_q(','.join(ls))}];"
            for (s, d), ls in sorted(labels.items())]


def to_dot(machine) -> str:
    names = machine.states
    out = ["digraph machine {", "  rankdir=LR;", "  node [shape=circle];"]

    def node(q, indent="  "):
        attrs = []
        if q in machine.accepting:
            attrs.append("shape=doublecircle")
        initial = machine.initials if isinstance(machine, OneWayMachine) else {machine.initial}
        if q in initial:
            attrs.append("penwidth=2")
            attrs.append('xlabel="start"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        return f"{indent}{_q(names[q])}{suffix};"

    if isinstance(machine, OneWayMachine):
        out += [node(q) for q in range(machine.n_states)]
        out += _edges((names[s], names[d], a) for a in machine.alphabet
                      for s, d in machine.transitions[a].items())
    else:
        for tag, label, rng in (("plus", "Q+", machine.plus_range),
                                ("minus", "Q-", machine.minus_range)):
            out.append(f"  subgraph cluster_{tag} {{")
            out.append(f"    label={_q(label)};")
            out += [node(q, "    ") for q in rng]
            out.append("  }")
        pairs = [(names[s], names[d], a) for a in machine.alphabet
                 for maps in (machine.delta_plus, machine.delta_minus)
                 for s, d in maps[a].items()]
        pairs += [(names[s], names[d], "⊢") for s, d in machine.delta_left.items()]
        pairs += [(names[s], names[d], "⊣") for s, d in machine.delta_right.items()]
        out += _edges(pairs)
    out.append("}")
    return "\n".join(out) + "\n"
