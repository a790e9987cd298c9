import pytest

from garside_cells import cellgraph
from garside_cells.config import builtin_matrix
from garside_cells.coxeter import CoxeterMatrix, CoxeterSystem
from garside_cells.hecke import HeckeAlgebra


def dihedral(m):
    return CoxeterSystem(CoxeterMatrix.from_pairs(("s", "t"), [("s", "t", m)]))


@pytest.fixture(scope="session")
def a2():
    return dihedral(3)


@pytest.fixture(scope="session")
def a3():
    return CoxeterSystem(builtin_matrix("A3"))


@pytest.fixture(scope="session")
def b3():
    return CoxeterSystem(builtin_matrix("B3"))


@pytest.fixture(scope="session")
def i2_5():
    return dihedral(5)


@pytest.fixture(scope="session")
def affine_a2():
    return CoxeterSystem(CoxeterMatrix.from_pairs(("s", "t", "u"),
                                                  [("s", "t", 3), ("t", "u", 3), ("u", "s", 3)]))


@pytest.fixture(scope="session")
def b3_path():
    return CoxeterSystem(CoxeterMatrix.from_pairs(("s", "t", "u"), [("s", "t", 3), ("t", "u", 4)]))


@pytest.fixture(scope="session")
def a2_graph(a2):
    return cellgraph.build(a2, "s")


@pytest.fixture(scope="session")
def a3_graph(a3):
    return cellgraph.build(a3, "s1")


@pytest.fixture(scope="session")
def b3_graph(b3):
    return cellgraph.build(b3, "s1")


@pytest.fixture(scope="session")
def affine_graph(affine_a2):
    return cellgraph.build(affine_a2, "s", radius=12)


@pytest.fixture(scope="session")
def a3_hecke(a3):
    return HeckeAlgebra(a3)


@pytest.fixture(scope="session")
def a4():
    return CoxeterSystem(builtin_matrix("A4"))


@pytest.fixture(scope="session")
def h3():
    return CoxeterSystem(builtin_matrix("H3"))


@pytest.fixture(scope="session")
def i2_8():
    return CoxeterSystem(builtin_matrix("I2:8"))


@pytest.fixture(scope="session")
def a4_graph(a4):
    return cellgraph.build(a4, "s1")


@pytest.fixture(scope="session")
def h3_graph(h3):
    return cellgraph.build(h3, h3.matrix.default_base())


@pytest.fixture(scope="session")
def i2_8_graph(i2_8):
    return cellgraph.build(i2_8, "s1")


# every complete cell graph of the finite test systems, by fixture name
@pytest.fixture(scope="session")
def finite_graphs(a3_graph, b3_graph, a4_graph, h3_graph, i2_8_graph):
    return {"a3_graph": a3_graph, "b3_graph": b3_graph, "a4_graph": a4_graph,
            "h3_graph": h3_graph, "i2_8_graph": i2_8_graph}
