import pytest

from ngpd.edgepath import edge_path_groupoid, vertex_group
from ngpd.groupoid import cyclic, nerve, small_groups
from ngpd.presentations import AbelianInvariants, abelianization, group_invariants, presentation_of
from ngpd.simplicial import boundary_simplex, coproduct, discrete_sset, pi0, standard_simplex


def test_triangle_boundary():
    X = boundary_simplex(2, 2)
    P = edge_path_groupoid(X)
    assert len(P.generators) == 3 and len(P.relators) == 0
    assert len(pi0(X)) == 1
    G = vertex_group(P, (0,))
    # free of rank E - V + 1
    assert G.rank == 3 - 3 + 1 and not G.relators
    assert abelianization(G) == AbelianInvariants(1, ())


def test_full_triangle():
    X = standard_simplex(2, 2)
    P = edge_path_groupoid(X)
    assert len(P.generators) == 3 and len(P.relators) == 1
    G = vertex_group(P, (0,))
    assert G.rank == 1
    assert abelianization(G) == AbelianInvariants(0, ())


def test_nerve_of_z3():
    P = edge_path_groupoid(nerve(cyclic(3), 2))
    assert len(P.generators) == 2 and len(P.relators) == 4


def test_discrete_component_is_trivial():
    X = coproduct(discrete_sset([0], 2), boundary_simplex(2, 2))
    G = vertex_group(edge_path_groupoid(X), (0, (0,)))
    assert G.rank == 0 and abelianization(G).is_trivial


def test_needs_two_cells():
    with pytest.raises(ValueError):
        edge_path_groupoid(standard_simplex(1, 1))


@pytest.mark.parametrize("name,G", small_groups(), ids=lambda v: v if isinstance(v, str) else "")
def test_nerve_vertex_group_recovers_group(name, G):
    X = nerve(G, 2)
    mine = group_invariants(vertex_group(edge_path_groupoid(X), "*"))
    assert mine == group_invariants(presentation_of(G))
