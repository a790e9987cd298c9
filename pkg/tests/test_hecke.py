from concurrent.futures import ThreadPoolExecutor

import pytest

from garside_cells import cellgraph
from garside_cells.errors import VertexOutsideGraph, WavefrontOutOfRadius
from garside_cells.hecke import CellVector, HeckeAlgebra, cell_action_kl, cell_action_std, unit_vector
from garside_cells.ring import LaurentPoly, ONE, V, VINV


def poly(*exponents):
    return LaurentPoly({e: 1 for e in exponents})


class TestStandardBasis:
    def test_quadratic_relation(self, a2):
        H = HeckeAlgebra(a2)
        s = a2.generator("s")
        square = H.mul(H.standard(s), H.standard(s))
        assert square.coefficient(s) == VINV - V
        assert square.coefficient(a2.identity) == ONE
        assert len(square) == 2

    def test_lengths_add(self, a2):
        H = HeckeAlgebra(a2)
        sts = H.mul(H.mul(H.standard(a2.generator("s")), H.standard(a2.generator("t"))),
                    H.standard(a2.generator("s")))
        assert sts == H.standard(a2.canonicalize("sts"))

    def test_identity_is_neutral(self, a3):
        H = HeckeAlgebra(a3)
        w = a3.canonicalize(["s1", "s2"])
        assert H.mul(H.standard(a3.identity), H.standard(w)) == H.standard(w)

    def test_bar_inverts_generator(self, a2):
        H = HeckeAlgebra(a2)
        s = a2.generator("s")
        product = H.mul(H.bar(H.standard(s)), H.standard(s))
        assert product == H.standard(a2.identity)


class TestKLBasis:
    def test_rank_one(self, a2):
        H = HeckeAlgebra(a2)
        s = a2.generator("s")
        assert H.kl_basis(s) == H.standard(s) + H.standard(a2.identity).scale(V)

    def test_bar_invariance(self, a3, b3, affine_a2):
        for system in (a3, b3, affine_a2):
            H = HeckeAlgebra(system)
            for w in system.enumerate(5):
                assert H.bar(H.kl_basis(w)) == H.kl_basis(w)

    def test_degree_bounds(self, b3):
        H = HeckeAlgebra(b3)
        for w in b3.enumerate(9):
            for y, h in H.kl_basis(w).items():
                if y == w:
                    assert h == ONE
                else:
                    assert b3.bruhat_leq(y, w)
                    assert h.min_degree() >= 1

    def test_dihedral_polynomials_are_monomials(self, i2_5):
        H = HeckeAlgebra(i2_5)
        elements = i2_5.enumerate(5)
        for w in elements:
            for y in elements:
                if i2_5.bruhat_leq(y, w):
                    assert H.kl_poly(y, w) == LaurentPoly.monomial(w.length - y.length)

    def test_affine_a2_degree_one_endomorphism(self, affine_a2):
        H = HeckeAlgebra(affine_a2)
        s = affine_a2.generator("s")
        stus = affine_a2.canonicalize("stus")
        assert H.kl_poly(s, stus) == poly(3, 1)

    def test_b3_path_not_rationally_smooth(self, b3_path):
        H = HeckeAlgebra(b3_path)
        stuts = b3_path.canonicalize("stuts")
        assert H.kl_poly(b3_path.canonicalize("us"), stuts) == poly(3, 1)
        assert H.kl_poly(b3_path.canonicalize("u"), stuts) == poly(4, 2)
        assert H.kl_poly(b3_path.canonicalize("s"), stuts) == poly(4, 2)
        assert H.kl_poly(b3_path.identity, stuts) == poly(5, 3)

    def test_mu(self, a2):
        H = HeckeAlgebra(a2)
        s, st = a2.generator("s"), a2.canonicalize("st")
        assert H.mu(s, st) == 1
        assert H.mu(st, s) == 1
        assert H.mu(s, s) == 0
        assert H.mu(s, a2.generator("t")) == 0

    @pytest.mark.parametrize("graph_name", ["b3_graph", "a4_graph", "h3_graph", "i2_8_graph"])
    def test_cell_elements_are_rationally_smooth(self, graph_name, request):
        graph = request.getfixturevalue(graph_name)
        system = graph.system
        H = HeckeAlgebra(system)
        for w in graph.vertices:
            for y in system.enumerate(w.length):
                if system.bruhat_leq(y, w):
                    assert H.kl_poly(y, w) == LaurentPoly.monomial(w.length - y.length)


class TestHomRank:
    def test_generator(self, a2):
        s = a2.generator("s")
        assert HeckeAlgebra(a2).hom_rank(s, s) == poly(2, 0)

    @pytest.mark.parametrize("graph_name", ["a3_graph", "a4_graph", "b3_graph"])
    def test_cell_pairs(self, graph_name, request):
        graph = request.getfixturevalue(graph_name)
        system = graph.system
        H = HeckeAlgebra(system)
        elements = system.enumerate(max(w.length for w in graph.vertices))
        for x in graph.vertices:
            for y in graph.vertices:
                rank = H.hom_rank(x, y)
                assert rank.coeff(0) == (1 if x == y else 0)
                assert all(c > 0 for _, c in rank.items())
                assert all((e - x.length - y.length) % 2 == 0 for e in rank.exponents())
                top = max(z.length for z in elements if system.bruhat_leq(z, x) and system.bruhat_leq(z, y))
                assert rank.min_degree() == x.length + y.length - 2 * top
                assert rank.coeff(rank.min_degree()) == 1


class TestCellAction:
    def test_descent_doubles(self, a2, a2_graph):
        s = a2.generator("s")
        assert cell_action_kl("s", unit_vector(s), a2_graph) == unit_vector(s).scale(V + VINV)

    def test_edge(self, a2, a2_graph):
        s, ts = a2.generator("s"), a2.canonicalize("ts")
        assert cell_action_kl("t", unit_vector(s), a2_graph) == unit_vector(ts)
        assert cell_action_kl("s", unit_vector(ts), a2_graph) == unit_vector(s)

    def test_no_neighbour(self, a3, a3_graph):
        s1 = a3.generator("s1")
        assert cell_action_kl("s3", unit_vector(s1), a3_graph) == CellVector()

    def test_agrees_with_kl_multiplication(self, a3, a3_graph, b3, b3_graph):
        for system, graph in ((a3, a3_graph), (b3, b3_graph)):
            H = HeckeAlgebra(system)
            for w in graph.vertices:
                for r in range(system.rank):
                    assert H.cell_action_mu(r, unit_vector(w), graph) == cell_action_kl(r, unit_vector(w), graph)

    def test_standard_generators_are_inverse(self, a3, a3_graph):
        for w in a3_graph.vertices:
            for r in range(a3.rank):
                vec = cell_action_std(r, 1, cell_action_std(r, -1, unit_vector(w), a3_graph), a3_graph)
                assert vec == unit_vector(w)

    def test_outside_graph(self, a3, a3_graph):
        with pytest.raises(VertexOutsideGraph):
            cell_action_kl("s1", unit_vector(a3.canonicalize(["s2"])), a3_graph)

    def test_radius_frontier(self, affine_a2):
        graph = cellgraph.build(affine_a2, "s", radius=2)
        outer = [w for w in graph.vertices if w.length == 2]
        r = next(r for r in range(3) if (outer[0], r) in graph.frontier)
        with pytest.raises(WavefrontOutOfRadius):
            cell_action_kl(r, unit_vector(outer[0]), graph)

    def test_bad_sign(self, a3, a3_graph):
        with pytest.raises(ValueError):
            cell_action_std("s1", 2, unit_vector(a3.generator("s1")), a3_graph)


class TestSharedKLCache:
    def test_concurrent_queries_agree(self, h3):
        elements = h3.enumerate(15)
        sequential = HeckeAlgebra(h3)
        expected = {w: sequential.kl_poly(h3.identity, w) for w in elements}
        shared = HeckeAlgebra(h3)
        order = elements[::-1]
        with ThreadPoolExecutor(max_workers=8) as pool:
            found = dict(zip(order, pool.map(lambda w: shared.kl_poly(h3.identity, w), order)))
        assert found == expected

    def test_warm(self, a3):
        H = HeckeAlgebra(a3).warm(a3.enumerate(6))
        assert H.kl_poly(a3.identity, a3.canonicalize("s1 s2 s1".split())) == LaurentPoly.monomial(3)
