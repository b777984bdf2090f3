import pytest

from signless.enumeration import is_isomorphic
from signless.families import (FAMILIES, FamilyError, FamilySpec, bicyclic_grid, build, complete,
                               cycle, infinity_graph, infinity_prime_331, iter_family, m_k2,
                               parse_family, path, star, t_star, theta_graph, theta_pendants, u1,
                               u2)
from signless.graph import from_edges, graph_class, is_bipartite, is_connected, max_degree


def test_basic_families():
    assert cycle(5).e == 5 and path(4).e == 3 and complete(5).e == 10
    assert star(5).degree(0) == 4 and m_k2(3).e == 3 and m_k2(3).n == 6


@pytest.mark.parametrize("fn, args", [
    (cycle, (2,)), (path, (0,)), (complete, (0,)), (star, (1,)), (m_k2, (0,)),
    (infinity_graph, (4, 3, 1)), (infinity_graph, (2, 3, 1)), (theta_graph, (3, 3, 3)),
    (u1, (0, 0)), (u1, (1, 2)), (u2, (-1, -1)), (t_star, (4, 2)), (t_star, (9, 4)),
    (infinity_prime_331, (4,)), (theta_pendants, (0, 0, 1, 0, 0)),
    (theta_pendants, (1, 1, 1, -1, 0)), (theta_pendants, (2, 1, 1, 0, 0, 1, 0, 0)),
])
def test_range_violations(fn, args):
    with pytest.raises(FamilyError):
        fn(*args)


@pytest.mark.parametrize("p, q, t", [(3, 3, 1), (3, 5, 1), (3, 3, 2), (4, 6, 3), (5, 5, 7)])
def test_infinity_counts(p, q, t):
    g = infinity_graph(p, q, t)
    n = p + q - 1 if t == 1 else p + q + t - 2
    assert g.n == n and g.e == n + 1
    assert graph_class(g).tag == "bicyclic"


@pytest.mark.parametrize("p, q, t", [(3, 3, 2), (4, 4, 3), (5, 7, 2), (6, 6, 4)])
def test_theta_counts(p, q, t):
    g = theta_graph(p, q, t)
    assert g.n == p + q - t and g.e == g.n + 1 and is_connected(g)


def test_theta_332_is_k4_minus_edge():
    k4e = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_isomorphic(theta_graph(3, 3, 2), k4e)
    assert is_isomorphic(theta_pendants(1, 1, 0, 0, 0), k4e)


def test_u_graphs():
    g = u1(1, 0)
    assert g.n == 4 and g.e == 4
    assert is_isomorphic(u2(0, 0), cycle(4))
    for a in range(0, 7):
        for b in range(0, min(a, 10 - a) + 1):
            h = u2(a, b)
            assert h.n == a + b + 4 and h.e == h.n and is_bipartite(h)[0]
            if a:
                assert u1(a, b).n == a + b + 3 and graph_class(u1(a, b)).tag == "unicyclic"


def test_t_star():
    assert t_star(6, 0) == star(6)
    assert is_isomorphic(t_star(5, 2), path(5))
    g = t_star(7, 3)
    assert g.n == 7 and g.degree(0) == 3 and graph_class(g).tag == "tree"


def test_infinity_prime():
    assert is_isomorphic(infinity_prime_331(5), infinity_graph(3, 3, 1))
    g = infinity_prime_331(11)
    assert g.degree(0) == 10 and g.e == 12


def test_theta_pendants_counts_and_internal_pendants():
    for s in [(1, 1, 1), (2, 2, 0), (2, 1, 1), (2, 2, 2)]:
        g = theta_pendants(*s, 3, 2)
        assert g.n == 2 + sum(s) + 5 and g.e == g.n + 1 and graph_class(g).tag == "bicyclic"
    g = theta_pendants(1, 1, 2, 0, 0, 1, 0, 0)
    assert g.n == 7 and g.e == 8 and g.degree(2) == 3
    assert max_degree(theta_pendants(1, 1, 1, 0, 0, 1, 1, 0)) == 3


def test_parse_and_build():
    spec = parse_family(" theta( 3, 4 ,2 ) ")
    assert spec == FamilySpec("theta", (3, 4, 2)) and str(spec) == "theta(3,4,2)"
    assert build("u1(3,2)") == u1(3, 2)
    assert build("empty(3)").e == 0
    for bad in ("theta", "nope(3)", "cycle(x)", "cycle(3,4)"):
        with pytest.raises(FamilyError):
            build(bad)
    assert set(FAMILIES) >= {"cycle", "infinity", "theta", "u1", "u2", "tstar", "thetap"}


def test_determinism():
    assert build("thetap(2,1,1,4,3,0,1,0)") == build("thetap(2,1,1,4,3,0,1,0)")


def test_bicyclic_grid():
    items = list(bicyclic_grid(12))
    assert all(g.n <= 12 and graph_class(g).tag == "bicyclic" for _, g in items)
    assert len({str(s) for s, _ in items}) == len(items)
    assert any(str(s) == "infinity(3,3,1)" for s, _ in items)
    assert list(iter_family("bicyclicgrid(6)")) == [(str(s), g) for s, g in bicyclic_grid(6)]
    assert list(iter_family("cycle(4)")) == [("cycle(4)", cycle(4))]
