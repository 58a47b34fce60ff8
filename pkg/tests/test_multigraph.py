"""Spanning-tree counting: matrix-tree, brute force, deletion-contraction."""

import random

import pytest

from detvol.multigraph import (
    Multigraph,
    contract,
    delete,
    format_multigraph,
    laplacian,
    parse_multigraph,
    spanning_tree_count,
    spanning_tree_count_bruteforce,
    spanning_tree_count_deletion_contraction,
)

TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (2, 0)])


def random_multigraph(rng, max_vertices=7, max_edges=14, connected_bias=True):
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    edges = []
    if connected_bias and n > 1:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            edges.append((order[i], order[rng.randrange(i)]))
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, edges[:max_edges])


class TestLaplacian:
    def test_loop_vertex(self):
        assert laplacian(Multigraph(1, [(0, 0)])) == [[0]]

    def test_parallel(self):
        g = Multigraph(2, [(0, 1)] * 3)
        assert laplacian(g) == [[3, -3], [-3, 3]]

    def test_rows_sum_zero_and_symmetric(self):
        rng = random.Random(0)
        for _ in range(50):
            g = random_multigraph(rng)
            L = laplacian(g)
            for i, row in enumerate(L):
                assert sum(row) == 0
                for j in range(len(row)):
                    assert L[i][j] == L[j][i]

    def test_diagonal_cancels_loops(self):
        g = Multigraph(2, [(0, 1), (0, 0), (0, 0)])
        assert laplacian(g)[0][0] == 1


class TestTreeCount:
    def test_triangle(self):
        assert spanning_tree_count(TRIANGLE) == 3

    def test_cycle(self):
        for n in range(2, 9):
            cyc = Multigraph(n, [(i, (i + 1) % n) for i in range(n)])
            assert spanning_tree_count(cyc) == n

    def test_parallel_edges(self):
        for k in range(1, 8):
            g = Multigraph(2, [(0, 1)] * k)
            assert spanning_tree_count(g) == k
            assert spanning_tree_count_bruteforce(g) == k

    def test_disconnected_is_zero(self):
        g = Multigraph(4, [(0, 1), (2, 3)])
        assert spanning_tree_count(g) == 0
        assert spanning_tree_count_bruteforce(g) == 0
        assert spanning_tree_count_deletion_contraction(g) == 0

    def test_single_vertex(self):
        assert spanning_tree_count(Multigraph(1)) == 1
        assert spanning_tree_count(Multigraph(1, [(0, 0)])) == 1

    def test_minor_choice_irrelevant(self):
        rng = random.Random(1)
        for _ in range(30):
            g = random_multigraph(rng)
            vals = {spanning_tree_count(g, drop_vertex=v) for v in range(g.vertex_count)}
            assert len(vals) == 1

    def test_relabel_invariance(self):
        rng = random.Random(2)
        for _ in range(30):
            g = random_multigraph(rng)
            perm = list(range(g.vertex_count))
            rng.shuffle(perm)
            h = Multigraph(g.vertex_count, [(perm[u], perm[v]) for (u, v) in g.edges])
            assert spanning_tree_count(g) == spanning_tree_count(h)

    def test_loop_inert_parallel_increases(self):
        rng = random.Random(3)
        checked = 0
        while checked < 40:
            g = random_multigraph(rng)
            tau = spanning_tree_count(g)
            with_loop = Multigraph(g.vertex_count, g.edges + [(0, 0)])
            assert spanning_tree_count(with_loop) == tau
            nonloops = [e for e in g.edges if e[0] != e[1]]
            if tau >= 1 and g.vertex_count >= 2 and nonloops:
                dup = Multigraph(g.vertex_count, g.edges + [nonloops[0]])
                assert spanning_tree_count(dup) > tau
                checked += 1

    def test_brute_force_cap(self):
        g = Multigraph(2, [(0, 1)] * 25)
        with pytest.raises(ValueError):
            spanning_tree_count_bruteforce(g)


class TestDeleteContract:
    def test_delete_triangle(self):
        g = delete(TRIANGLE, 0)
        assert g.vertex_count == 3
        assert len(g.edges) == 2
        assert spanning_tree_count(g) == 1

    def test_contract_triangle(self):
        g = contract(TRIANGLE, 0)
        assert g.vertex_count == 2
        assert sorted(g.edges) == [(0, 1), (1, 0)] or len(g.edges) == 2
        assert spanning_tree_count(g) == 2

    def test_contract_makes_loops(self):
        g = Multigraph(2, [(0, 1), (0, 1), (0, 1)])
        h = contract(g, 0)
        assert h.vertex_count == 1
        assert h.edges == [(0, 0), (0, 0)]

    def test_contract_loop_rejected(self):
        g = Multigraph(1, [(0, 0)])
        with pytest.raises(ValueError):
            contract(g, 0)

    def test_deletion_contraction_identity_500(self):
        rng = random.Random(7)
        for _ in range(500):
            g = random_multigraph(rng)
            tau = spanning_tree_count(g)
            nonloop_idx = [i for i, e in enumerate(g.edges) if e[0] != e[1]]
            if not nonloop_idx:
                continue
            i = rng.choice(nonloop_idx)
            assert tau == spanning_tree_count(delete(g, i)) + spanning_tree_count(
                contract(g, i)
            )

    def test_matrix_tree_vs_brute_force_500(self):
        rng = random.Random(8)
        for _ in range(500):
            g = random_multigraph(rng)
            assert spanning_tree_count(g) == spanning_tree_count_bruteforce(g)

    def test_deletion_contraction_evaluator(self):
        rng = random.Random(9)
        for _ in range(200):
            g = random_multigraph(rng)
            assert spanning_tree_count_deletion_contraction(g) == spanning_tree_count(g)


class TestTextFormat:
    def test_round_trip(self):
        g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 1)])
        assert parse_multigraph(format_multigraph(g)) == g

    def test_parse(self):
        g = parse_multigraph("3\n0 1\n1 2\n2 0\n")
        assert spanning_tree_count(g) == 3

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_multigraph("")
        with pytest.raises(ValueError):
            parse_multigraph("2\n0 1 2\n")
