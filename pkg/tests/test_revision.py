import numpy as np
import pytest

from src.change.operators import ChangeRequest, RealizabilityError
from src.cli import scenarios
from src.concepts.parser import parse_concept
from src.concepts.syntax import name
from src.interpretations.interpretation import chain_model, model_check
from src.oracle.families import el_family
from src.oracle.postulates import characterization_gap, revision_passing_outputs
from src.oracle.revision import (
    RevisionCase, case_minima, chi_min, el_evict_bounded, el_revise_bounded, naive_revise, request_sets,
    revision_case, symmetric_differential_revise,
)
from src.oracle.sampling import random_request
from src.oracle.universe import FragmentError, enumerate_universe
from src.relations.tableau import alc_entails


@pytest.fixture(scope="module")
def single_points():
    s, worlds = scenarios.single_points()
    universe = enumerate_universe(s.sig, 0, override=True)
    fr = el_family(universe)
    b, plus, minus = request_sets(ChangeRequest(s.base, s.sig, s.positives, s.negatives), universe)
    return s, worlds, universe, fr, b, plus, minus


class TestRevisionCase:

    def test_cases(self, small_universe):
        b = small_universe.mod_set(name("A"))
        inside, outside = list(b)[0], list(b.complement())[0]
        plus_in, plus_out = small_universe.from_indices([inside]), small_universe.from_indices([outside])
        assert revision_case(b, plus_in, plus_out) is RevisionCase.EVICT_ONLY
        assert revision_case(b, plus_out, small_universe.empty()) is RevisionCase.RECEIVE_ONLY
        assert revision_case(b, plus_out, plus_in) is RevisionCase.GENERAL


class TestAllSubsetsRevision:

    def test_matches_closed_form(self, small_universe, small_alc):
        rng = np.random.default_rng(3)
        for _ in range(30):
            b, plus, minus = request_sets(random_request(rng, small_universe), small_universe)
            assert symmetric_differential_revise(b, plus, minus, small_alc) == (b | plus) - minus

    def test_characterization_has_no_gap(self, small_universe, small_alc):
        rng = np.random.default_rng(11)
        for _ in range(20):
            b, plus, minus = request_sets(random_request(rng, small_universe), small_universe)
            gap = characterization_gap(b, plus, minus, small_alc)
            assert gap == {"passing_not_minimal": [], "minimal_not_passing": []}


class TestElRevision:

    def test_naive_minima(self, single_points):
        _, _, universe, fr, b, plus, minus = single_points
        minima = set(chi_min(b, plus, minus, fr))
        assert minima == {universe.mod_set(name("C")), universe.mod_set(parse_concept("A and C"))}

    def test_vacuous_removal_keeps_the_base(self, single_points):
        _, worlds, universe, fr, b, plus, minus = single_points
        assert revision_case(b, plus, minus) is RevisionCase.RECEIVE_ONLY
        revised = symmetric_differential_revise(b, plus, minus, fr)
        assert revised == universe.mod_set(name("C"))
        assert universe.closure([worlds[3]]) <= revised
        assert case_minima(b, plus, minus, fr) == [revised]

    def test_naive_choice_is_one_of_the_minima(self, single_points):
        _, _, universe, fr, b, plus, minus = single_points
        assert naive_revise(b, plus, minus, fr) in set(chi_min(b, plus, minus, fr))

    def test_passing_outputs_are_the_case_minima(self, single_points):
        _, _, universe, fr, b, plus, minus = single_points
        assert revision_passing_outputs(b, plus, minus, fr) == [universe.mod_set(name("C"))]
        assert characterization_gap(b, plus, minus, fr) == {"passing_not_minimal": [], "minimal_not_passing": []}

    def test_bounded_revision_returns_a_witness(self, single_points):
        s, _, universe, fr, _, _, _ = single_points
        concept, chosen = el_revise_bounded(ChangeRequest(s.base, s.sig, s.positives, s.negatives), fr)
        assert universe.mod_set(concept, strict=False) == chosen
        assert model_check(s.positives[0], concept)
        assert not model_check(s.negatives[0], concept)

    def test_labelled_chains_stay_inside_the_base(self, labelled_el, labelled_universe):
        s = scenarios.labelled_chains()
        concept, chosen = el_revise_bounded(ChangeRequest(s.base, s.sig, s.positives, s.negatives), labelled_el)
        assert model_check(s.positives[0], concept)
        assert not model_check(s.negatives[0], concept)
        assert chosen <= labelled_universe.mod_set(s.base)

    def test_unlabelled_world_cannot_be_kept_alone(self, single_points):
        s, worlds, _, fr, _, _, _ = single_points
        with pytest.raises(RealizabilityError):
            el_revise_bounded(ChangeRequest(s.base, s.sig, (worlds[1],), (worlds[2],)), fr)


class TestBoundedEviction:

    def test_labelled_chains(self, labelled_el, labelled_universe):
        s = scenarios.labelled_chains()
        concept, chosen = el_evict_bounded(s.base, s.negatives, labelled_el)
        assert labelled_universe.mod_set(concept, strict=False) == chosen
        assert not model_check(s.negatives[0], concept)
        assert chosen <= labelled_universe.mod_set(s.base)
        assert alc_entails(concept, s.base)

    def test_nothing_to_evict(self, chains_el, chains_universe):
        concept, chosen = el_evict_bounded(parse_concept("exists r.top"), [], chains_el)
        assert chosen == chains_universe.mod_set(parse_concept("exists r.top"))
        assert concept == parse_concept("exists r.top")

    def test_too_tall_negative_is_refused(self, chains_el, sig_r):
        with pytest.raises(FragmentError):
            el_evict_bounded(parse_concept("exists r.top"), [chain_model(3, sig_r)], chains_el)

    def test_too_tall_positive_is_refused(self, chains_el, sig_r):
        req = ChangeRequest(parse_concept("exists r.top"), sig_r, positives=(chain_model(3, sig_r),))
        with pytest.raises(FragmentError):
            el_revise_bounded(req, chains_el)
