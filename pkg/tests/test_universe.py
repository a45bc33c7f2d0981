import pytest
from hypothesis import given, settings

from src.cli import scenarios
from src.concepts.parser import parse_concept
from src.concepts.syntax import Dialect, Signature, exists, exists_chain, name
from src.interpretations.interpretation import chain_model, model_check
from src.oracle.universe import (
    BudgetExceededError, FragmentError, class_count, enumerate_universe,
)
from src.relations.bisimulation import bisimilar
from tests.strategies import concepts, trees

SIG = Signature.of(["A"], ["r"])


class TestClassCount:

    @pytest.mark.parametrize("nc, nr, k, expected", [
        (0, 1, 0, 1),
        (0, 1, 2, 4),
        (1, 1, 1, 8),
        (1, 1, 2, 512),
        (2, 1, 1, 64),
        (3, 1, 0, 8),
    ])
    def test_counts(self, nc, nr, k, expected):
        assert class_count(nc, nr, k) == expected

    def test_too_large_to_write_down(self):
        assert class_count(2, 1, 2, ceiling=5000) is None


class TestEnumerate:

    def test_sizes_match_counts(self, chains_universe, small_universe, labelled_universe):
        assert len(chains_universe) == 4
        assert len(small_universe) == 8
        assert len(labelled_universe) == 512

    def test_smallest_tree_first(self, chains_universe):
        assert chains_universe.describe(0) == "top"
        assert [chains_universe.describe(i) for i in range(4)] == [
            "top", "(exists r.top)", "(exists r.(exists r.top))", "((exists r.(exists r.top)) and (exists r.top))",
        ]

    def test_representatives_pairwise_distinct(self, small_universe):
        models = small_universe.models
        for i, p in enumerate(models):
            for q in models[i + 1:]:
                assert bisimilar(p, q, SIG) is None

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_universe(Signature.of(["A", "B"], ["r"]), 2)
        with pytest.raises(BudgetExceededError) as info:
            enumerate_universe(SIG, 2, budget=500)
        assert info.value.count == 512

    def test_caps_and_override(self):
        sig = Signature.of(["A", "B", "C"], ["r"])
        with pytest.raises(BudgetExceededError):
            enumerate_universe(sig, 0)
        assert len(enumerate_universe(sig, 0, override=True)) == 8
        assert len(enumerate_universe(sig, 0, caps=(3, 1, 2))) == 8


class TestLocate:

    def test_chains(self, chains_universe, sig_r):
        assert chains_universe.describe(chains_universe.locate(chain_model(1, sig_r))) == "(exists r.top)"
        assert chains_universe.locate(chain_model(3, sig_r)) is None
        assert chains_universe.locate(scenarios.reflexive_point().negatives[0]) is None

    def test_closure_merges_bisimilar_models(self, chains_universe):
        s = scenarios.short_chains()
        merged = chains_universe.closure([s.positives[0], chain_model(1, s.sig), s.negatives[0]])
        assert len(merged) == 2

    def test_closure_refuses_models_without_a_representative(self, chains_universe, sig_r):
        with pytest.raises(FragmentError, match="depth-2"):
            chains_universe.closure([chain_model(1, sig_r), chain_model(3, sig_r)])
        with pytest.raises(FragmentError):
            chains_universe.closure(scenarios.reflexive_point().negatives)

    @given(pi=trees(SIG, max_depth=2, max_branching=3))
    @settings(max_examples=60, deadline=None)
    def test_every_bounded_tree_has_a_bisimilar_representative(self, labelled_universe, pi):
        i = labelled_universe.locate(pi)
        assert i is not None
        assert bisimilar(pi, labelled_universe.models[i], SIG) is not None


class TestModSet:

    def test_strict_depth(self, chains_universe):
        with pytest.raises(FragmentError):
            chains_universe.mod_set(exists_chain(3, "r"))
        assert not chains_universe.mod_set(exists_chain(3, "r"), strict=False)

    def test_foreign_names(self, chains_universe):
        with pytest.raises(FragmentError):
            chains_universe.mod_set(name("A"))

    def test_strict_chain_of_existentials(self, chains_universe):
        sets = [chains_universe.mod_set(exists_chain(n, "r"), strict=False) for n in range(4)]
        assert sets[0] > sets[1] > sets[2] > sets[3]
        assert [len(m) for m in sets] == [4, 3, 2, 0]

    def test_exists_mask(self, small_universe):
        a = small_universe.mod_set(name("A"))
        assert small_universe.exists_mask("r", a) == small_universe.mod_set(exists("r", name("A")))

    @given(c=concepts(SIG, max_depth=2, dialect=Dialect.ALC))
    @settings(max_examples=60, deadline=None)
    def test_matches_model_checking(self, small_universe, c):
        m = small_universe.mod_set(c, strict=False)
        assert [i in m for i in range(len(small_universe))] == [model_check(p, c) for p in small_universe.models]


class TestModelSetAlgebra:

    def test_operators(self, small_universe):
        a = small_universe.mod_set(name("A"))
        e = small_universe.mod_set(parse_concept("exists r.top"))
        assert (a | e) - e == a - e
        assert a & a.complement() == small_universe.empty()
        assert a ^ a == small_universe.empty()
        assert a | a.complement() == small_universe.full()
        assert len(a) == 4 and len(small_universe.full()) == 8
        assert a & e <= a and not a <= e
        assert small_universe.empty() < a <= a
        assert list(small_universe.from_indices([3, 1])) == [1, 3]
        assert 1 in small_universe.from_indices([1])

    def test_hash_follows_mask(self, small_universe):
        a = small_universe.mod_set(name("A"))
        again = small_universe.from_indices(list(a))
        assert a == again and hash(a) == hash(again)
        assert len({a, again}) == 1

    def test_different_universes(self, small_universe, chains_universe):
        with pytest.raises(FragmentError):
            small_universe.full() | chains_universe.full()
        assert small_universe.empty() != chains_universe.empty()
