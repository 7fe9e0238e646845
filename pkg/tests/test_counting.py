import pytest

from chromacount import (
    InvalidParameterError,
    CapExceededError,
    chromatic_polynomial,
    complete,
    complete_bipartite,
    complete_target,
    count_colorings,
    count_homomorphisms,
    count_independent_sets,
    cycle,
    disjoint_copies,
    disjoint_union,
    evaluate_polynomial,
    from_edges,
    greedy_maximal_matching,
    h_ind,
    independence_number,
    looped_vertex,
    maximum_independent_set,
)
from chromacount.graphs import Graph

from helpers import (
    brute_alpha,
    brute_count_colorings,
    brute_count_homomorphisms,
    brute_count_independent_sets,
    interpolate_int_polynomial,
    small_corpus,
)


def test_count_colorings_examples():
    assert count_colorings(complete(3), 3) == 6
    assert count_colorings(cycle(5), 3) == 30  # brute force over 3^5
    assert count_colorings(complete(4), 3) == 0
    assert count_colorings(disjoint_copies(complete_bipartite(2, 2), 2), 3) == 324


def test_count_colorings_edge_cases():
    assert count_colorings(complete(3), 0) == 0
    assert count_colorings(complete(1), 1) == 1
    assert count_colorings(complete(2), 1) == 0
    with pytest.raises(InvalidParameterError):
        count_colorings(complete(2), -1)
    with pytest.raises(InvalidParameterError):
        count_colorings(complete(2), 2, method="guess")


def test_methods_agree_on_small_corpus():
    for g in small_corpus(max_n=7):
        for q in range(5):
            assert count_colorings(g, q, "backtrack") == count_colorings(g, q, "polynomial")


def test_chromatic_polynomial_k3():
    # q(q-1)(q-2) = -0 + 2q - 3q^2 + q^3
    assert chromatic_polynomial(complete(3)) == (0, 2, -3, 1)


def test_chromatic_polynomial_c4_against_interpolation_oracle():
    values = [brute_count_colorings(cycle(4), q) for q in range(6)]
    expected = interpolate_int_polynomial(values)
    assert chromatic_polynomial(cycle(4)) == expected
    # (q-1)^4 + (q-1) expands to q^4 - 4q^3 + 6q^2 - 3q
    assert expected == (0, -3, 6, -4, 1)


def test_chromatic_polynomial_single_vertex():
    assert chromatic_polynomial(complete(1)) == (0, 1)


def test_chromatic_polynomial_shape_invariants():
    for g in small_corpus(max_n=7):
        coeffs = chromatic_polynomial(g)
        assert len(coeffs) == g.n + 1
        assert coeffs[-1] == 1
        assert evaluate_polynomial(coeffs, 0) == 0
        # signs alternate from the leading coefficient down (zeros allowed)
        for k, c in enumerate(coeffs):
            if c:
                assert (c > 0) == ((g.n - k) % 2 == 0)


def test_chromatic_polynomial_cap():
    with pytest.raises(CapExceededError):
        chromatic_polynomial(Graph(15, (0,) * 15))


def test_hom_generalizes_colorings_and_independent_sets():
    for g in small_corpus(max_n=6):
        for q in (2, 3, 4):
            assert count_homomorphisms(g, complete_target(q)) == count_colorings(g, q)
        assert count_homomorphisms(g, h_ind()) == count_independent_sets(g)


def test_hom_examples():
    assert count_homomorphisms(complete(2), looped_vertex()) == 1
    assert count_homomorphisms(complete(2), h_ind()) == 3
    g = cycle(5)
    assert count_homomorphisms(g, h_ind()) == brute_count_homomorphisms(g, h_ind())


def test_count_independent_sets_examples():
    assert count_independent_sets(complete_bipartite(2, 2)) == 7
    edgeless = Graph(6, (0,) * 6)
    assert count_independent_sets(edgeless) == 64
    assert count_independent_sets(complete(3)) == 4  # enumerate all 8 subsets


def test_counts_match_brute_force():
    for g in small_corpus(max_n=6):
        assert count_independent_sets(g) == brute_count_independent_sets(g)
        assert independence_number(g) == brute_alpha(g)


def test_independence_number_examples():
    for d in range(1, 7):
        assert independence_number(complete_bipartite(d, d)) == d
    assert independence_number(cycle(5)) == 2  # enumerate all 32 subsets
    for n in (2, 4, 6):
        assert independence_number(complete(n)) == 1


def test_maximum_independent_set_lex_first():
    assert maximum_independent_set(complete_bipartite(3, 3)) == (0, 1, 2)
    assert maximum_independent_set(cycle(5)) == (0, 2)
    assert maximum_independent_set(complete(4)) == (0,)


def test_multiplicativity():
    for g1 in (complete(3), cycle(4)):
        for g2 in (complete_bipartite(1, 2), cycle(5)):
            g = disjoint_union(g1, g2)
            for q in (2, 3):
                assert count_colorings(g, q) == count_colorings(g1, q) * count_colorings(g2, q)
            assert count_independent_sets(g) == count_independent_sets(g1) * count_independent_sets(g2)
            assert count_homomorphisms(g, h_ind()) == count_homomorphisms(g1, h_ind()) * count_homomorphisms(g2, h_ind())


def test_zero_colorings_when_alpha_small():
    # a proper q-coloring needs a color class of size >= n/q
    for g in small_corpus(max_n=7):
        for q in (2, 3, 4):
            if independence_number(g) * q < g.n:
                assert count_colorings(g, q) == 0


def test_greedy_matching_examples():
    assert greedy_maximal_matching(complete(4)) == [(0, 1), (2, 3)]
    assert greedy_maximal_matching(Graph(4, (0, 0, 0, 0))) == []
    assert greedy_maximal_matching(cycle(5)) == [(0, 1), (2, 3)]


def test_greedy_matching_is_maximal_and_bounds_alpha():
    for g in small_corpus(max_n=8):
        m = greedy_maximal_matching(g)
        matched = set()
        for u, v in m:
            assert u not in matched and v not in matched
            matched.update((u, v))
        for u, v in g.edges():
            assert u in matched or v in matched
        assert g.n - 2 * len(m) <= independence_number(g)
