import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

# Known counts of graphs up to isomorphism (all / connected) per order,
# used to certify the atlas-derived corpora before anything relies on them.
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _g6(nxg) -> str:
    return nx.to_graph6_bytes(nxg, header=False).decode().strip()


@pytest.fixture(scope="session")
def atlas():
    return graph_atlas_g()


@pytest.fixture(scope="session")
def connected_g6_upto7(atlas) -> list[str]:
    lines = [
        _g6(a)
        for a in atlas
        if 1 <= a.number_of_nodes() <= 7 and nx.is_connected(a)
    ]
    assert len(lines) == sum(CONNECTED_COUNTS.values())
    return lines


@pytest.fixture(scope="session")
def connected_g6_upto6(atlas) -> list[str]:
    lines = [
        _g6(a)
        for a in atlas
        if 1 <= a.number_of_nodes() <= 6 and nx.is_connected(a)
    ]
    assert len(lines) == sum(CONNECTED_COUNTS[n] for n in range(1, 7))
    return lines


@pytest.fixture(scope="session")
def all_g6_upto6(atlas) -> list[str]:
    lines = [_g6(a) for a in atlas if 1 <= a.number_of_nodes() <= 6]
    assert len(lines) == sum(ALL_COUNTS[n] for n in range(1, 7))
    return lines
