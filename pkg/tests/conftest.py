import pytest

from qhom import complexes
from qhom.fields import Field
from qhom.polynomials import PolyRing

# every ChainComplex built during the session, for the Euler-characteristic audit
BUILT_COMPLEXES: list = []

_orig_init = complexes.ChainComplex.__init__


def _recording_init(self, *args, **kwargs):
    _orig_init(self, *args, **kwargs)
    BUILT_COMPLEXES.append(self)


complexes.ChainComplex.__init__ = _recording_init


def pytest_collection_modifyitems(session, config, items):
    # acceptance checks run last so the Euler audit sees the whole suite's complexes
    items.sort(key=lambda it: it.nodeid.startswith("tests/test_acceptance.py"))


GF101 = Field.prime(101)


def make(variables, relations=(), field=GF101):
    P = PolyRing(field, list(variables), [1] * len(variables))
    return P.quotient(list(relations))


@pytest.fixture(scope="session")
def F():
    return GF101


@pytest.fixture(scope="session")
def kx():
    return make("x")


@pytest.fixture(scope="session")
def kxy():
    return make("xy")


@pytest.fixture(scope="session")
def dual_numbers():
    return make("x", ["x^2"])


@pytest.fixture(scope="session")
def ci2():
    return make("xy", ["x^2", "y^2"])


@pytest.fixture(scope="session")
def hyper():
    return make("xy", ["x^2"])


@pytest.fixture(scope="session")
def triv():
    return make("xy", ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="session")
def noncm():
    return make("xy", ["x^2", "x*y"])


@pytest.fixture(scope="session")
def type2():
    return make("xyz", ["y^2", "y*z", "z^2"])


# one line per acceptance criterion, repeated in the terminal summary
CRITERIA_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
