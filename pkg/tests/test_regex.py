import re

import pytest
from hypothesis import given, strategies as st

from revfa.regex import RegexError, compile_regex, matches

PATTERNS = ["a", "(aa)*|a", "(ab)*|(abb)*", "a*b*", "(a|b)*a", "a?b+", "(|a)b", "", "((a))*"]


@pytest.mark.parametrize("pattern", PATTERNS)
@given(st.text("ab", max_size=8))
def test_agrees_with_python_re(pattern, word):
    assert matches(pattern, "ab", word) == bool(re.fullmatch(pattern, word))


@pytest.mark.parametrize("bad", ["(a", "a)", "*a", "a|*", "c"])
def test_errors(bad):
    with pytest.raises(RegexError):
        compile_regex(bad, ("a", "b"))
