import itertools
import math
import random

from digraph_homology import (
    Digraph,
    OrderedComplex,
    Poset,
    directed_flag_complex,
    order_complex,
    poset_digraph,
)


def test_three_cycle_has_no_triangle():
    g = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    c = directed_flag_complex(g, 2)
    assert c.counts() == [3, 3, 0]


def test_transitive_triangle_one_two_simplex():
    g = Digraph(3, [(0, 1), (1, 2), (0, 2)])
    c = directed_flag_complex(g, 2)
    assert c.simplices(2) == ((0, 1, 2),)


def test_reciprocal_pair_gives_two_edges():
    g = Digraph(2, [(0, 1), (1, 0)])
    c = directed_flag_complex(g, 2)
    assert c.simplices(1) == ((0, 1), (1, 0))
    assert c.simplices(2) == ()


def test_tournament_counts_are_binomial():
    for n in range(1, 7):
        g = Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        c = directed_flag_complex(g, n)
        for d in range(n + 1):
            assert len(c.simplices(d)) == math.comb(n, d + 1)


def test_lexicographic_order_within_dimension():
    rng = random.Random(11)
    g = Digraph(
        6,
        [(u, v) for u in range(6) for v in range(6) if u != v and rng.random() < 0.5],
    )
    c = directed_flag_complex(g, 3)
    for d in range(4):
        level = c.simplices(d)
        assert list(level) == sorted(level)


def _chains_bruteforce(poset, max_len):
    """All strict chains enumerated over every element subset, as tuples."""
    relation = set(poset.strict_relation)
    chains = {0: [(x,) for x in range(poset.num_elements)]}
    for size in range(2, max_len + 2):
        found = []
        for subset in itertools.permutations(range(poset.num_elements), size):
            if all((a, b) in relation for a, b in zip(subset, subset[1:])):
                found.append(tuple(subset))
        chains[size - 1] = sorted(found)
    return chains


def test_order_complex_is_flag_complex_of_comparability_digraph():
    poset = Poset(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])
    direct = order_complex(poset, 3)
    via_digraph = directed_flag_complex(poset_digraph(poset), 3)
    assert direct.simplices_by_dim == via_digraph.simplices_by_dim


def test_order_complex_chain_and_antichain():
    chain = Poset(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    c = order_complex(chain, 3)
    assert c.counts() == [4, 6, 4, 1]  # full simplex on 4 vertices
    antichain = Poset(5, [])
    assert order_complex(antichain, 2).counts() == [5, 0, 0]


def test_order_complex_triangle_boundary_face_poset():
    # Face poset of the triangle boundary: vertices 0,1,2 below edges 3,4,5.
    # Brute-force chain enumeration gives a hexagon: 6 vertices, 6 edges,
    # and no longer chains (the poset has height 2).
    poset = Poset(6, [(0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)])
    expected = _chains_bruteforce(poset, 2)
    c = order_complex(poset, 2)
    assert list(c.simplices(0)) == expected[0]
    assert list(c.simplices(1)) == expected[1]
    assert list(c.simplices(2)) == expected[2]
    assert c.counts() == [6, 6, 0]


def test_validate_accepts_flag_complexes_and_rejects_holes():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(1, 7)
        g = Digraph(
            n,
            [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4],
        )
        directed_flag_complex(g, 3).validate()
    broken = OrderedComplex([[(0,), (1,)], [(0, 1)], [(0, 1, 2)]], 2)
    try:
        broken.validate()
    except ValueError:
        pass
    else:
        raise AssertionError("missing faces should fail validation")


def test_enumeration_cap_respected():
    g = Digraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    c = directed_flag_complex(g, 1)
    assert c.max_dim == 1
    assert c.counts() == [4, 6]
