import pytest

from radiotree import (
    OrderTooLarge,
    build_tree,
    exact_matches_formula,
    exact_rn,
    gen_caterpillar,
    gen_path,
    kernel_name,
    metrics,
    rn_path,
    verify_labelling,
)
from radiotree import _solver_py

try:
    from radiotree import _solver_core
except ImportError:
    _solver_core = None


def path(n):
    return build_tree([(i, i + 1) for i in range(n - 1)])


class TestKnownValues:
    def test_p3(self):
        assert exact_rn(path(3)).rn == 3

    def test_p4(self):
        assert exact_rn(path(4)).rn == 5

    def test_p5(self):
        assert exact_rn(path(5)).rn == 10

    def test_paths_match_formula(self):
        for n in range(4, 9):
            assert exact_rn(path(n)).rn == rn_path(n)

    def test_c31(self):
        assert exact_rn(gen_caterpillar(3, 1).tree).rn == 10

    def test_star(self):
        # star K_{1,3}: diameter 2, so all leaf pairs need gap >= 1
        assert exact_rn(build_tree([(0, 1), (0, 2), (0, 3)])).rn == 4


class TestContract:
    def test_witness_is_valid(self):
        res = exact_rn(path(6))
        ok, _ = verify_labelling(path(6), res.witness)
        assert ok
        assert res.witness.span == res.rn == 13

    def test_order_too_large(self):
        with pytest.raises(OrderTooLarge):
            exact_rn(path(13))

    def test_max_order_override(self):
        with pytest.raises(OrderTooLarge):
            exact_rn(path(6), max_order=5)
        assert exact_rn(path(6), max_order=6).rn == rn_path(6)

    def test_completed_flag(self):
        assert exact_rn(path(5)).stats.completed

    def test_timeout_returns_incumbent(self):
        res = exact_rn(path(11), timeout_s=0.01)
        assert not res.stats.completed
        assert res.rn >= rn_path(11)  # incumbent is an upper bound only

    def test_determinism(self):
        a = exact_rn(path(8))
        b = exact_rn(path(8))
        assert a.rn == b.rn
        assert a.stats.nodes == b.stats.nodes
        assert a.witness.labels == b.witness.labels


@pytest.mark.skipif(_solver_core is None, reason="compiled kernel unavailable")
class TestKernelAgreement:
    def test_kernels_identical(self):
        for tree in (path(7), path(8), gen_caterpillar(3, 2).tree):
            py = exact_rn(tree, kernel=_solver_py)
            cy = exact_rn(tree, kernel=_solver_core)
            assert py.rn == cy.rn
            assert py.stats.nodes == cy.stats.nodes
            assert py.witness.labels == cy.witness.labels

    def test_kernel_name(self):
        assert kernel_name() in ("compiled", "pure-python")


class TestAdapters:
    def test_exact_matches_formula(self):
        assert exact_matches_formula(gen_path(7), rn_path(7))
        assert not exact_matches_formula(gen_path(7), rn_path(7) + 1)


class TestMonotonicity:
    def test_adding_a_leaf_never_decreases_rn(self):
        import random

        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(3, 8)
            edges = [(i, rng.randrange(i)) for i in range(1, n)]
            tree = build_tree(edges)
            base = exact_rn(tree).rn
            attach = rng.randrange(n)
            grown = build_tree(edges + [(attach, n)])
            assert exact_rn(grown).rn >= base
