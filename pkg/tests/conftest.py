import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from normgraphs.representations import (  # noqa: E402
    PermutationGroup,
    cycles_to_perm,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    semidirect_product,
)

ACCEPTANCE_LINES: dict[int, str] = {}


def perm_group(degree, *gens, name=""):
    return PermutationGroup(degree, [cycles_to_perm(degree, g) for g in gens], name=name)


@pytest.fixture(scope="session")
def S3():
    return make_symmetric(3)


@pytest.fixture(scope="session")
def A4():
    return make_alternating(4)


@pytest.fixture(scope="session")
def S4():
    return make_symmetric(4)


@pytest.fixture(scope="session")
def C6():
    return make_cyclic(6)


@pytest.fixture(scope="session")
def D8():
    return make_dihedral(4)


@pytest.fixture(scope="session")
def C7C3():
    return semidirect_product(7, 1, [[[2]]], name="C7:C3")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session")
def paper_full():
    """The full order-562500 computation, run once per session."""
    from normgraphs import paper_example as pe

    return pe.run("all", threads=1)
