"""Tiny regular-expression engine for reference languages.

Syntax: single-character literals, ``|``, concatenation, postfix ``*``,
``+`` and ``?``, parentheses.  An empty alternative (``(|a)``) and the
empty pattern denote the empty string.  Patterns compile through a Thompson
NFA and the subset construction into a :class:`OneWayMachine`, independent
of every construction in :mod:`revfa.transforms`.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .core import MachineClass, OneWayMachine


class RegexError(ValueError):
    pass


class _NFA:
    def __init__(self):
        self.eps: list[set] = []
        self.edges: list[dict] = []

    def new(self) -> int:
        self.eps.append(set())
        self.edges.append({})
        return len(self.eps) - 1


class _Parser:
    def __init__(self, pattern: str, nfa: _NFA):
        self.s, self.i, self.nfa = pattern, 0, nfa

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else None

    def expr(self):
        frags = [self.term()]
        while self.peek() == "|":
            self.i += 1
            frags.append(self.term())
        if len(frags) == 1:
            return frags[0]
        start, end = self.nfa.new(), self.nfa.new()
        for a, b in frags:
            self.nfa.eps[start].add(a)
            self.nfa.eps[b].add(end)
        return start, end

    def term(self):
        start = end = self.nfa.new()
        while self.peek() not in (None, "|", ")"):
            a, b = self.factor()
            self.nfa.eps[end].add(a)
            end = b
        return start, end

    def factor(self):
        a, b = self.atom()
        while self.peek() in ("*", "+", "?"):
            op = self.peek()
            self.i += 1
            start, end = self.nfa.new(), self.nfa.new()
            self.nfa.eps[start].add(a)
            self.nfa.eps[b].add(end)
            if op in ("*", "?"):
                self.nfa.eps[start].add(end)
            if op in ("*", "+"):
                self.nfa.eps[b].add(a)
            a, b = start, end
        return a, b

    def atom(self):
        c = self.peek()
        if c == "(":
            self.i += 1
            frag = self.expr()
            if self.peek() != ")":
                raise RegexError(f"missing ')' at {self.i} in {self.s!r}")
            self.i += 1
            return frag
        if c is None or c in "*+?)|":
            raise RegexError(f"unexpected {c!r} at {self.i} in {self.s!r}")
        self.i += 1
        start, end = self.nfa.new(), self.nfa.new()
        self.nfa.edges[start][c] = {end}
        return start, end


def _closure(nfa: _NFA, states) -> frozenset:
    out, stack = set(states), list(states)
    while stack:
        q = stack.pop()
        for r in nfa.eps[q]:
            if r not in out:
                out.add(r)
                stack.append(r)
    return frozenset(out)


@lru_cache(maxsize=256)
def compile_regex(pattern: str, alphabet: tuple) -> OneWayMachine:
    nfa = _NFA()
    parser = _Parser(pattern, nfa)
    start, final = parser.expr()
    if parser.i != len(pattern):
        raise RegexError(f"trailing input at {parser.i} in {pattern!r}")
    used = {c for d in nfa.edges for c in d}
    if not used <= set(alphabet):
        raise RegexError(f"pattern uses symbols outside {''.join(alphabet)}")
    s0 = _closure(nfa, [start])
    index, order = {s0: 0}, [s0]
    trans = {a: {} for a in alphabet}
    queue = deque([s0])
    while queue:
        s = queue.popleft()
        for a in alphabet:
            t = _closure(nfa, [r for q in s for r in nfa.edges[q].get(a, ())])
            if not t:
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            trans[a][index[s]] = index[t]
    acc = {i for i, s in enumerate(order) if final in s}
    return OneWayMachine(alphabet, tuple(f"r{i}" for i in range(len(order))), {0}, trans, acc,
                         MachineClass.DFA)


def matches(pattern: str, alphabet, word: str) -> bool:
    m = compile_regex(pattern, tuple(alphabet))
    q = 0
    for c in word:
        q = m.transitions[c].get(q)
        if q is None:
            return False
    return q in m.accepting
