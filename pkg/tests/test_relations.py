import pytest
from hypothesis import given, settings

from src.concepts.parser import parse_concept
from src.concepts.syntax import BOT, TOP, Dialect, DialectError, Signature, exists_chain, name, neg
from src.interpretations.interpretation import Interpretation, PointedInterpretation, chain_model, model_check
from src.interpretations.trees import canonical_model, unfold
from src.cli import scenarios
from src.relations.bisimulation import bisimilar, k_bisimilar
from src.relations.homomorphism import el_subsumes, homomorphism_exists
from src.relations.tableau import alc_entails, alc_satisfiable, bounded_model_search, equivalent
from src.oracle.enumeration import enumerate_el_classes
from tests.strategies import concepts, trees

SIG = Signature.of(["A"], ["r"])
SIG_R = Signature.of([], ["r"])


class TestBisimulation:

    def test_short_chains_differ(self):
        s = scenarios.short_chains()
        one, two = s.positives[0], s.negatives[0]
        assert bisimilar(one, two, SIG_R) is None
        assert k_bisimilar(one, two, 1, SIG_R)
        assert not k_bisimilar(one, two, 2, SIG_R)

    def test_duplicate_children_collapse(self):
        two = Interpretation.build(["a", "b", "c"], {}, {"r": [("a", "b"), ("a", "c")]})
        relation = bisimilar(PointedInterpretation(two, "a"), chain_model(1, SIG_R))
        assert relation is not None
        assert ("a", "0") in relation
        assert ("b", "1") in relation and ("c", "1") in relation

    def test_loop_is_k_bisimilar_to_its_unfoldings(self):
        loop = scenarios.reflexive_point().negatives[0]
        for k in range(5):
            assert k_bisimilar(loop, unfold(loop, k), k, SIG)
            assert not k_bisimilar(loop, unfold(loop, k), k + 1, SIG)
        assert bisimilar(loop, unfold(loop, 4), SIG) is None

    def test_labels_outside_signature_are_ignored(self):
        s = scenarios.platypus_diet()
        carnivore, herbivore = s.positives[0], s.negatives[0]
        assert bisimilar(carnivore, herbivore) is None
        assert bisimilar(carnivore, herbivore, Signature.of(["Egg", "Mammal"], ["lays"])) is not None

    def test_negative_k(self):
        with pytest.raises(ValueError):
            k_bisimilar(chain_model(1, SIG_R), chain_model(1, SIG_R), -1)

    @given(trees(SIG, max_depth=2), trees(SIG, max_depth=2), concepts(SIG, max_depth=2))
    @settings(max_examples=100, deadline=None)
    def test_bisimilar_models_agree(self, p1, p2, c):
        if bisimilar(p1, p2, SIG) is not None:
            assert model_check(p1, c) == model_check(p2, c)

    @given(trees(SIG, max_depth=2), trees(SIG, max_depth=2), concepts(SIG, max_depth=1))
    @settings(max_examples=100, deadline=None)
    def test_k_bisimilar_models_agree_up_to_depth_k(self, p1, p2, c):
        if k_bisimilar(p1, p2, 1, SIG):
            assert model_check(p1, c) == model_check(p2, c)


class TestHomomorphism:

    def test_chain_into_loop(self):
        loop = scenarios.reflexive_point().negatives[0]
        assert homomorphism_exists(chain_model(5, SIG_R), loop)

    def test_labels_must_be_preserved(self):
        s = scenarios.labelled_chains()
        keep, drop = s.positives[0], s.negatives[0]
        assert not homomorphism_exists(keep, drop)
        assert homomorphism_exists(canonical_model(parse_concept("exists r.top")), drop)

    @pytest.mark.parametrize("c, d, expected", [
        ("exists r.exists r.exists r.top", "exists r.top", True),
        ("exists r.top", "exists r.exists r.top", False),
        ("A and exists r.(A and exists r.A)", "exists r.exists r.A", True),
        ("exists r.A and exists r.exists r.top", "exists r.(A and exists r.top)", False),
        ("exists r.bot", "A", True),
        ("A", "bot", False),
        ("top", "top", True),
    ])
    def test_el_subsumes(self, c, d, expected):
        assert el_subsumes(parse_concept(c), parse_concept(d)) is expected

    def test_dialect_guard(self):
        with pytest.raises(DialectError):
            el_subsumes(neg(name("A")), TOP)

    def test_agrees_with_tableau_on_reduced_classes(self):
        classes = enumerate_el_classes(SIG, 2)
        for c in classes:
            for d in classes:
                assert el_subsumes(c, d) == alc_entails(c, d), (c.text, d.text)


class TestTableau:

    @pytest.mark.parametrize("text, expected", [
        ("top", True),
        ("bot", False),
        ("A and not A", False),
        ("exists r.A and forall r.(not A)", False),
        ("exists r.A and forall r.(not A or B)", True),
        ("(A or B) and not A and not B", False),
        ("exists r.exists r.exists r.top", True),
        ("forall r.bot and exists r.top", False),
        ("exists r.(A or B) and forall r.not A and forall r.not B", False),
    ])
    def test_satisfiable(self, text, expected):
        c = parse_concept(text)
        assert alc_satisfiable(c) is expected
        assert bounded_model_search(c) is expected

    def test_entailment_and_equivalence(self):
        assert alc_entails(exists_chain(3, "r"), exists_chain(1, "r"))
        assert not alc_entails(exists_chain(1, "r"), exists_chain(3, "r"))
        assert alc_entails(BOT, name("A"))
        assert equivalent(parse_concept("not (A and B)"), parse_concept("not A or not B"))
        assert equivalent(parse_concept("not exists r.A"), parse_concept("forall r.not A"))

    @given(concepts(Signature.of(["A", "B"], ["r"]), max_depth=3, dialect=Dialect.ALC, size=3))
    @settings(max_examples=500, deadline=None)
    def test_tableau_agrees_with_model_search(self, c):
        assert alc_satisfiable(c) == bounded_model_search(c)
