import pytest

from topecycle.builder import tope_graph
from topecycle.catalogue import generate

_GRAPHS = {}


def graph_of(family, **params):
    """Tope graph of a catalogue arrangement, built once per session."""
    key = (family, tuple(sorted(params.items())))
    if key not in _GRAPHS:
        A = generate(family, **params)
        _GRAPHS[key] = (A, tope_graph(A))
    return _GRAPHS[key]


@pytest.fixture
def catalogue_graph():
    return graph_of


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
