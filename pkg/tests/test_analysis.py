import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from revfa.analysis import (LanguageOracle, SearchInfeasible, bounded_equiv, estimate_candidates,
                            exact_equiv, pin_falsify, search_model, words)
from revfa.core import MachineClass, OneWayMachine, validate
from revfa.regex import compile_regex
from revfa.sim import accepts
from revfa.transforms import AlphabetMismatch, mrfa_to_dfa
from revfa.witnesses import witness

from helpers import random_mrfa, random_srfas


def test_words_length_lex():
    assert list(words("ab", 2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert list(words("ab", 2, min_len=2)) == ["aa", "ab", "ba", "bb"]


def test_oracle_enumeration():
    o = LanguageOracle(("a",), lambda w: len(w) % 2 == 0)
    assert o.accepted(4) == ["", "aa", "aaaa"]
    assert "aa" in o and "a" not in o


def test_bounded_equiv_examples():
    m = witness("even-or-a").machine
    assert bounded_equiv(m, m, 6)
    res = bounded_equiv(compile_regex("(aa)*", ("a",)), m, 6)
    assert not res and res.counterexample == "a"
    with pytest.raises(AlphabetMismatch):
        bounded_equiv(m, witness("a-star-or-b-star").machine, 3)


def test_exact_equiv_examples():
    l2 = witness("Lk-union", 2)
    assert exact_equiv(l2.machine, compile_regex("(ab)*|(abb)*", ("a", "b")))
    res = exact_equiv(witness("a-star-or-b-star").machine, witness("a-star-b-star").machine)
    assert not res and res.counterexample == "ab"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_exact_implies_bounded(seed):
    rng = random.Random(seed)
    a, b = random_mrfa(rng), random_mrfa(rng)
    exact = exact_equiv(a, b)
    bounded = bounded_equiv(a, b, 8)
    if exact:
        assert bounded
    elif not bounded:
        assert bounded.counterexample == exact.counterexample


# -- Pin condition ------------------------------------------------------------

def test_pin_sigma_star_a():
    res = pin_falsify(witness("sigma-star-a").machine)
    assert res.violation and res.witness == ("", "a", "")
    assert res.describe() == "violation: x='' y='a' z=''"


def test_pin_a_star():
    res = pin_falsify(compile_regex("a*", ("a",)), 5, 5, 5)
    assert not res.violation


@pytest.mark.parametrize("name,k", [("even-or-a-mrfa", None), ("a-star-or-b-star", None),
                                    ("Lk-union", 2), ("Lk-union", 3), ("singleton-a", None),
                                    ("mod3-two-accept", None)])
def test_pin_mrfa_witnesses_clean(name, k):
    assert not pin_falsify(witness(name, k).machine).violation


def test_pin_explicit_reps_and_bad_bounds():
    res = pin_falsify(witness("sigma-star-a").machine, reps=2)
    assert res.violation and res.reps == 2
    with pytest.raises(ValueError):
        pin_falsify(witness("sigma-star-a").machine, max_x=-1)


def test_pin_agrees_with_brute_force_inclusion():
    # xy^i z for i up to 12 sampled directly on the DFA of b*a(a|b)*
    m = compile_regex("b*a(a|b)*", ("a", "b"))
    res = pin_falsify(m, 2, 2, 2)
    assert res.violation
    x, y, z = res.witness
    assert all(accepts(m, x + y * i + z) for i in range(1, 13))
    assert not accepts(m, x + z)


@pytest.mark.parametrize("seed", range(25))
def test_pin_never_fires_on_mrfa(seed):
    m = random_mrfa(random.Random(seed))
    assert not pin_falsify(mrfa_to_dfa(m), 2, 2, 2).violation


def test_pin_on_sweeping_output():
    for m in random_srfas(10, seed=7):
        assert not pin_falsify(m, 2, 2, 2).violation


# -- model search ---------------------------------------------------------------

def brute_force_exists(cls, n_max, alphabet, target, max_len, max_accepting=None):
    """Naive enumeration of every machine, for cross-checking the lazy search."""
    samples = [(w, w in target) for w in words(alphabet, max_len)]
    for n in range(1, n_max + 1):
        if cls is MachineClass.PERFA:
            maps = [dict(enumerate(p)) for p in permutations(range(n))]
        else:
            maps = []
            for targets in product([None, *range(n)], repeat=n):
                d = {q: t for q, t in enumerate(targets) if t is not None}
                if len(set(d.values())) == len(d):
                    maps.append(d)
        for per_symbol in product(maps, repeat=len(alphabet)):
            trans = dict(zip(alphabet, per_symbol))
            for acc_bits in product((0, 1), repeat=n):
                if max_accepting is not None and sum(acc_bits) > max_accepting:
                    continue
                acc = {q for q in range(n) if acc_bits[q]}
                m = OneWayMachine(tuple(alphabet), tuple(range(n)), {0}, trans, acc, cls)
                if all(accepts(m, w) == lab for w, lab in samples):
                    return True
    return False


@pytest.mark.parametrize("pattern", ["(aa)*|a", "a|aaa", "(aaa)*|a(aaa)*", "aa*", "(aa)*", "a?"])
def test_search_matches_brute_force_unary(pattern):
    target = LanguageOracle.of_machine(compile_regex(pattern, ("a",)))
    for cls in (MachineClass.RFA, MachineClass.PERFA):
        for acc in (None, 1):
            expect = brute_force_exists(cls, 3, "a", target, 7, acc)
            got = search_model(cls, 3, "a", target, 7, max_accepting=acc)
            assert got.exhausted != expect, (cls, acc)


@pytest.mark.parametrize("pattern", ["(ab)*", "a*b*", "a*|b*", "(a|b)*a", "ab|ba"])
def test_search_matches_brute_force_binary(pattern):
    target = LanguageOracle.of_machine(compile_regex(pattern, ("a", "b")))
    expect = brute_force_exists(MachineClass.RFA, 2, "ab", target, 5)
    got = search_model(MachineClass.RFA, 2, "ab", target, 5)
    assert got.exhausted != expect


@pytest.mark.parametrize("seed", range(15))
def test_search_finds_machines_of_its_own_class(seed):
    m = random_mrfa(random.Random(seed), max_states=3, max_initials=2)
    res = search_model(MachineClass.MRFA, m.n_states, m.alphabet, LanguageOracle.of_machine(m),
                       6, max_initials=len(m.initials))
    assert res.found is not None
    assert validate(res.found).ok
    assert bounded_equiv(res.found, m, 6)


def test_search_report_and_parallel_agree():
    target = witness("Lk-union", 2).reference
    serial = search_model("mrfa", 5, "ab", target, 8, max_initials=2)
    parallel = search_model("mrfa", 5, "ab", target, 8, max_initials=2, workers=2)
    assert serial.found == parallel.found is not None
    lines = serial.lines()
    assert "result: found" in lines and "evidence: bounded" in lines


def test_search_refuses_infeasible():
    with pytest.raises(SearchInfeasible) as e:
        search_model("mrfa", 9, "ab", witness("Lk-union", 2).reference, 8)
    assert e.value.estimate > 10 ** 10
    assert estimate_candidates(MachineClass.PERFA, 1, 1) == 2
    with pytest.raises(ValueError):
        search_model("srfa", 2, "a", witness("even-or-a").reference, 3)
