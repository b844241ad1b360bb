"""Bounded exhaustive search for small one-way reversible machines.

The search builds candidate machines lazily.  Strings up to ``max_len`` are
checked in length-lexicographic order; whenever a run needs a transition that
has not been decided yet, the search branches over every admissible choice:
leave it undefined (not for permutation automata), point it at an existing
state that is not yet a target of the same symbol, or create the next new
state.  States are therefore numbered in order of first use, which is a
canonical renumbering: isomorphic candidates are never generated twice, and
transitions that no tested string exercises are never enumerated at all.

Exhaustion is bounded evidence only: no machine within the bounds agrees
with the target on all strings up to ``max_len``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial
from typing import Optional

from ..core import MachineClass, OneWayMachine
from ..funcmath import PartialInjection, complete_to_bijection, count_partial_injections
from .equivalence import LanguageOracle, words

SEARCH_CLASSES = (MachineClass.RFA, MachineClass.PERFA, MachineClass.MRFA)
DEFAULT_MAX_CANDIDATES = 10 ** 10
UNDEF = -1


class SearchInfeasible(ValueError):
    def __init__(self, estimate: int, limit: int):
        super().__init__(f"refusing search: about {estimate:.3g} candidate machines "
                         f"exceed the limit {limit:.3g}")
        self.estimate = estimate
        self.limit = limit


def estimate_candidates(cls: MachineClass, max_states: int, n_symbols: int,
                        max_initials: int = 1) -> int:
    """Size of the naive candidate space (transition maps x initial x accepting sets)."""
    total = 0
    for n in range(1, max_states + 1):
        maps = factorial(n) if cls is MachineClass.PERFA else count_partial_injections(n, n)
        inits = sum(comb(n, j) for j in range(1, min(max_initials, n) + 1))
        total += maps ** n_symbols * inits * 2 ** n
    return total


@dataclass
class SearchReport:
    cls: MachineClass
    max_states: int
    alphabet: tuple
    max_len: int
    max_initials: int
    max_accepting: Optional[int]
    found: Optional[OneWayMachine] = None
    candidates: int = 0
    estimate: int = 0
    elapsed: float = 0.0
    partitions: list = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return self.found is None

    def lines(self) -> list[str]:
        return [
            f"class: {self.cls.value}",
            f"max_states: {self.max_states}",
            f"alphabet: {''.join(self.alphabet)}",
            f"max_len: {self.max_len}",
            f"max_initials: {self.max_initials}",
            f"max_accepting: {'any' if self.max_accepting is None else self.max_accepting}",
            f"result: {'exhausted' if self.found is None else 'found'}",
            f"candidates: {self.candidates}",
            f"naive_space: {self.estimate}",
            f"elapsed_s: {self.elapsed:.3f}",
            "evidence: bounded",
        ]


class _Search:
    def __init__(self, cls, max_states, alphabet, samples, max_accepting):
        self.cls = cls
        self.max_states = max_states
        self.alphabet = alphabet
        self.samples = samples
        self.max_accepting = max_accepting
        self.total = cls is MachineClass.PERFA
        self.nodes = 0

    def run(self, accepting_initials: tuple):
        self.trans = {a: {} for a in self.alphabet}
        self.used = {a: set() for a in self.alphabet}
        self.acc = list(accepting_initials)
        self.n_init = len(accepting_initials)
        if self.max_accepting is not None and sum(self.acc) > self.max_accepting:
            return None
        return self._dfs(0)

    def _evaluate(self, word):
        """``("need", q, a)`` for the first undecided step, else ``("verdict", bool)``."""
        verdict = False
        for q in range(self.n_init):
            for a in word:
                t = self.trans[a].get(q)
                if t is None:
                    return "need", q, a
                if t == UNDEF:
                    q = None
                    break
                q = t
            if q is not None and self.acc[q]:
                verdict = True
        return "verdict", verdict

    def _dfs(self, widx: int):
        self.nodes += 1
        need = None
        while widx < len(self.samples):
            word, label = self.samples[widx]
            res = self._evaluate(word)
            if res[0] == "need":
                need = res[1:]
                break
            if res[1] != label:
                return None
            widx += 1
        if need is None:
            return self._snapshot()
        q, a = need
        if not self.total:
            self.trans[a][q] = UNDEF
            found = self._dfs(widx)
            if found:
                return found
        for t in range(len(self.acc)):
            if t in self.used[a]:
                continue
            self.trans[a][q] = t
            self.used[a].add(t)
            found = self._dfs(widx)
            self.used[a].discard(t)
            if found:
                return found
        if len(self.acc) < self.max_states:
            t = len(self.acc)
            for flag in (False, True):
                if flag and self.max_accepting is not None and sum(self.acc) >= self.max_accepting:
                    continue
                self.acc.append(flag)
                self.trans[a][q] = t
                self.used[a].add(t)
                found = self._dfs(widx)
                self.used[a].discard(t)
                self.acc.pop()
                if found:
                    return found
        self.trans[a].pop(q, None)
        return None

    def _snapshot(self) -> OneWayMachine:
        n = len(self.acc)
        trans = {}
        for a in self.alphabet:
            m = {q: t for q, t in self.trans[a].items() if t != UNDEF}
            if self.total:
                m = complete_to_bijection(PartialInjection.from_mapping(m, n, n)).as_dict()
            trans[a] = m
        acc = {q for q in range(n) if self.acc[q]}
        return OneWayMachine(self.alphabet, tuple(f"s{i}" for i in range(n)),
                             set(range(self.n_init)), trans, acc, self.cls)


def _partitions(cls, max_states, max_initials):
    out = []
    top = max_initials if cls is MachineClass.MRFA else 1
    for j in range(1, min(top, max_states) + 1):
        for flags in product((False, True), repeat=j):
            out.append(flags)
    return out


def _run_partition(args):
    cls, max_states, alphabet, samples, max_accepting, flags = args
    s = _Search(cls, max_states, alphabet, samples, max_accepting)
    found = s.run(flags)
    return found, s.nodes


def search_model(cls, max_states: int, alphabet, target, max_len: int,
                 max_initials: Optional[int] = None, max_accepting: Optional[int] = None,
                 workers: int = 1, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> SearchReport:
    """Find a machine of class ``cls`` agreeing with ``target`` up to ``max_len``.

    ``target`` is a :class:`LanguageOracle` or any machine.  Partitions (by
    number of initial states and their acceptance) are tried in a fixed
    order; with ``workers > 1`` they run in parallel and the first find in
    partition order wins, so serial and parallel runs report the same machine.
    """
    cls = MachineClass(cls)
    if cls not in SEARCH_CLASSES:
        raise ValueError(f"search supports {', '.join(c.value for c in SEARCH_CLASSES)}")
    if max_states < 1 or max_len < 0:
        raise ValueError("max_states must be >= 1 and max_len >= 0")
    if max_initials is None:
        max_initials = max_states if cls is MachineClass.MRFA else 1
    alphabet = tuple(alphabet)
    oracle = target if isinstance(target, LanguageOracle) else LanguageOracle.of_machine(target)
    estimate = estimate_candidates(cls, max_states, len(alphabet),
                                   max_initials if cls is MachineClass.MRFA else 1)
    if estimate > max_candidates:
        raise SearchInfeasible(estimate, max_candidates)
    samples = tuple((w, w in oracle) for w in words(alphabet, max_len))
    report = SearchReport(cls, max_states, alphabet, max_len,
                          max_initials if cls is MachineClass.MRFA else 1, max_accepting,
                          estimate=estimate)
    parts = _partitions(cls, max_states, max_initials)
    jobs = [(cls, max_states, alphabet, samples, max_accepting, flags) for flags in parts]
    t0 = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_partition, jobs))
        report.candidates = sum(n for _, n in results)
        report.found = next((f for f, _ in results if f is not None), None)
    else:
        for job in jobs:
            found, nodes = _run_partition(job)
            report.candidates += nodes
            if found is not None:
                report.found = found
                break
    report.elapsed = time.perf_counter() - t0
    report.partitions = [len(f) for f in parts]
    return report
