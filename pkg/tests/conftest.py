import sys
from pathlib import Path

import pytest

from passyntax.lexicon import Lexicon

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


def pools(noun=0, adj=0, verb=0, adv=0):
    """Real lexicon with disjoint generated words: n0.., a0.., v0.., r0.."""
    return Lexicon.from_pools({
        "noun": [f"n{i}" for i in range(noun)],
        "adjective": [f"a{i}" for i in range(adj)],
        "verb": [f"v{i}" for i in range(verb)],
        "adverb": [f"r{i}" for i in range(adv)],
    })


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.format_results():
        terminalreporter.write_line(line)
