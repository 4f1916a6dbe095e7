"""Threshold decompositions and the modularity parameter."""

import random
from fractions import Fraction

from hypothesis import given, settings

from treesearch import (
    heavy_modules,
    is_up_monotonic,
    k_up_modularity,
    tree_instance,
)

import oracles
from strategies import tree_instances


class TestHeavyModules:
    def test_fixture_threshold_three_fifths(self, fix1):
        dec = heavy_modules(fix1, Fraction(3, 5))
        assert [sorted(m) for m in dec.modules] == [[6], [7], [11]]
        assert dec.count == 3

    def test_nothing_above_max(self, fix1):
        assert heavy_modules(fix1, Fraction(1)).count == 0

    def test_zero_threshold_whole_tree(self, fix1):
        dec = heavy_modules(fix1, 0)
        assert dec.count == 1
        assert dec.modules[0] == fix1.vertex_set

    def test_float_threshold_compares_exactly(self, fix1):
        # 0.6 as a float is slightly below 3/5, so cost-3/5 vertices stay
        # heavy and v7-v9 form one module: {5}, {6}, {7,9}, {11}.
        assert heavy_modules(fix1, 0.6).count == 4
        assert heavy_modules(fix1, Fraction(3, 5)).count == 3
        assert heavy_modules(fix1, 0.5).count == heavy_modules(fix1, Fraction(1, 2)).count

    @given(tree_instances(max_n=24))
    @settings(max_examples=60)
    def test_partition_maximal_nonadjacent(self, inst):
        rng = random.Random(31)
        t = Fraction(rng.randint(0, 12), 12)
        dec = heavy_modules(inst, t)
        heavy = {v for v in inst.vertex_set if inst.cost(v) > t}
        union = set()
        for mod in dec.modules:
            assert not (union & mod)
            union |= mod
        assert union == heavy
        # no two modules touch: that would contradict maximality
        for i, a in enumerate(dec.modules):
            for b in dec.modules[i + 1 :]:
                assert not any(u in b for v in a for u in inst.adjacency[v])


class TestKUpModularity:
    def test_fixture_value_and_witness(self, fix1):
        k, witness = k_up_modularity(fix1)
        assert k == 4
        assert witness == Fraction(1, 5)
        mods = heavy_modules(fix1, witness).modules
        assert [sorted(m) for m in mods] == [[2, 5, 6], [7, 9], [8], [11]]

    def test_uniform_costs_give_one(self):
        inst = tree_instance(4, [(1, 2), (2, 3), (3, 4)], [1, 1, 1, 1])
        assert k_up_modularity(inst)[0] == 1

    def test_alternating_path(self):
        inst = tree_instance(5, [(1, 2), (2, 3), (3, 4), (4, 5)], [1, 2, 1, 2, 1])
        k, witness = k_up_modularity(inst)
        assert k == 2
        assert witness == 1

    @given(tree_instances(max_n=20))
    @settings(max_examples=80)
    def test_equivalence_with_up_monotonicity(self, inst):
        assert (k_up_modularity(inst)[0] == 1) == is_up_monotonic(inst)

    @given(tree_instances(min_n=2, max_n=18))
    @settings(max_examples=60)
    def test_subtree_never_exceeds_whole(self, inst):
        rng = random.Random(41)
        sub = oracles.random_connected_subset(inst, rng.randint(1, inst.n), rng)
        assert k_up_modularity(inst, within=sub)[0] <= k_up_modularity(inst)[0]

    @given(tree_instances(max_n=18))
    @settings(max_examples=60)
    def test_module_count_never_exceeds_k(self, inst):
        k, _ = k_up_modularity(inst)
        rng = random.Random(43)
        for _ in range(4):
            t = Fraction(rng.randint(0, 14), 14)
            assert heavy_modules(inst, t).count <= k


class TestIsUpMonotonic:
    def test_monotone_star(self):
        inst = tree_instance(4, [(1, 2), (1, 3), (1, 4)], [1, "1/2", "1/2", "1/2"])
        assert is_up_monotonic(inst)

    def test_fixture_not_monotone(self, fix1):
        assert not is_up_monotonic(fix1)

    def test_dip_on_path(self):
        inst = tree_instance(3, [(1, 2), (2, 3)], [1, "1/4", "1/2"])
        assert not is_up_monotonic(inst)
        k, witness = k_up_modularity(inst)
        assert k == 2
        assert witness == Fraction(1, 4)

    def test_two_adjacent_maxima(self):
        inst = tree_instance(2, [(1, 2)], [1, 1])
        assert is_up_monotonic(inst)
        assert k_up_modularity(inst)[0] == 1

    def test_two_separated_maxima(self):
        inst = tree_instance(3, [(1, 2), (2, 3)], [1, "1/2", 1])
        assert not is_up_monotonic(inst)
        assert k_up_modularity(inst)[0] == 2
