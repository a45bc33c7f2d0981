"""
Self-checking demonstrations of the change operators on small worked
scenarios. Every demo prints what it computed and whether the expected
outcome held.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from ..change.lcs import el_receive
from ..change.operators import ChangeRequest, evict_alc, receive_alc, revise_alc
from ..characteristic.dagger import dagger
from ..concepts.parser import print_concept
from ..concepts.syntax import Signature, conj, exists, exists_chain, name
from ..interpretations.interpretation import model_check
from ..interpretations.trees import unfold
from ..oracle.enumeration import enumerate_el_concepts
from ..oracle.families import el_family
from ..oracle.postulates import OperatorKind, PostulateChecker, run_from_concepts
from ..oracle.revision import chi_min, el_evict_bounded, request_sets, symmetric_differential_revise
from ..oracle.universe import enumerate_universe
from ..relations.bisimulation import k_bisimilar
from ..relations.homomorphism import el_subsumes
from ..relations.tableau import alc_entails, equivalent
from . import scenarios

logger = logging.getLogger(__name__)


@dataclass
class DemoResult:
    """Outcome of one demo."""
    name: str
    title: str
    passed: bool = True
    lines: List[str] = field(default_factory=list)

    def note(self, text: str) -> None:
        self.lines.append(text)

    def expect(self, label: str, holds: bool) -> None:
        self.lines.append(f"{label}: {'true' if holds else 'false'}")
        self.passed = self.passed and holds

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        body = "\n".join(f"  {line}" for line in self.lines)
        return f"[{status}] {self.name}: {self.title}\n{body}"


def _show(c, unicode: bool) -> str:
    return print_concept(c, unicode=unicode)


def demo_platypus(unicode: bool = False) -> DemoResult:
    result = DemoResult("platypus", "evict the herbivore world from Mammal and exists lays.Egg")
    s = scenarios.platypus_diet()
    out = evict_alc(s.base, s.negatives, s.sig)
    result.note(f"evicted: {_show(out, unicode)}")
    result.expect("carnivore world kept", model_check(s.positives[0], out))
    result.expect("herbivore world dropped", not model_check(s.negatives[0], out))
    result.expect("result entails base", alc_entails(out, s.base))
    return result


def demo_tasmanian_devil(unicode: bool = False) -> DemoResult:
    result = DemoResult("tasmanian-devil", "receive a marsupial that is neither koala nor kangaroo")
    s = scenarios.tasmanian_devil()
    out = receive_alc(s.base, s.positives, s.sig)
    result.note(f"received: {_show(out, unicode)}")
    result.expect("new world admitted", model_check(s.positives[0], out))
    result.expect("base entails result", alc_entails(s.base, out))
    return result


def demo_koala(unicode: bool = False) -> DemoResult:
    result = DemoResult("koala", "revise Mammal and Marsupial and not Placental with a placental koala")
    s = scenarios.placental_koala()
    out = revise_alc(ChangeRequest(s.base, s.sig, s.positives, s.negatives))
    result.note(f"revised: {_show(out, unicode)}")
    result.expect("placental world admitted", model_check(s.positives[0], out))
    result.expect("non-placental world dropped", not model_check(s.negatives[0], out))
    result.expect("entails Mammal and Marsupial and Placental", alc_entails(out, scenarios.placental_koala_target()))
    return result


def demo_short_chains(unicode: bool = False) -> DemoResult:
    result = DemoResult("short-chains", "no EL-bottom concept adds the one-edge chain without the two-edge one")
    s = scenarios.short_chains()
    universe = enumerate_universe(s.sig, 2)
    fr = el_family(universe)
    wanted = universe.mod_set(s.base, strict=False) | universe.closure(s.positives)
    unwanted = universe.closure(s.negatives)
    covering = [y for y in fr.members() if wanted <= y]
    result.note(f"{len(covering)} of {len(fr)} definable sets contain the base and the one-edge chain")
    result.expect("each also contains the two-edge chain", all(unwanted <= y for y in covering))
    return result


def demo_reflexive_point(unicode: bool = False) -> DemoResult:
    result = DemoResult("reflexive-point", "evicting an r-loop from exists r.top needs ever longer chains")
    s = scenarios.reflexive_point()
    loop = s.negatives[0]
    result.expect("loop satisfies the base", model_check(loop, s.base))
    parts = [s.base]
    for n in range(1, 5):
        parts.append(exists_chain(n, "r", name("A")))
        prefix = conj(*parts)
        result.note(f"depth {n}: {_show(prefix, unicode)}")
        result.expect(f"  loop rejected at depth {n}", not model_check(loop, prefix))
        result.expect(f"  loop and its depth-{n} unfolding are {n}-bisimilar",
                      k_bisimilar(loop, unfold(loop, n), n, s.sig))
        result.expect(f"  next conjunct not implied at depth {n}",
                      not el_subsumes(prefix, exists_chain(n + 1, "r", name("A"))))
    return result


def demo_strict_chain(unicode: bool = False) -> DemoResult:
    result = DemoResult("strict-chain", "model sets of longer r-chains shrink strictly")
    sig = Signature.of([], ["r"])
    universe = enumerate_universe(sig, 2)
    sets = [universe.mod_set(exists_chain(n, "r"), strict=False) for n in range(4)]
    for n in range(3):
        result.expect(f"chain {n} strictly contains chain {n + 1} ({len(sets[n])} > {len(sets[n + 1])})",
                      sets[n + 1] < sets[n])
    return result


def demo_least_subsumer(unicode: bool = False) -> DemoResult:
    result = DemoResult("least-subsumer", "receiving a one-edge chain into exists r.exists r.exists r.top")
    s = scenarios.short_chains()
    out = el_receive(s.base, s.positives)
    result.note(f"received: {_show(out, unicode)}")
    target = exists("r")
    result.expect("equivalent to exists r.top", equivalent(out, target))
    universe = enumerate_universe(s.sig, 2)
    fr = el_family(universe)
    sups = fr.min_fr_sups(universe.mod_set(s.base, strict=False) | universe.closure(s.positives))
    result.expect("unique least definable superset is mod(exists r.top)",
                  sups == [universe.mod_set(target)])
    return result


def demo_labelled_chains(unicode: bool = False) -> DemoResult:
    result = DemoResult("labelled-chains", "revision is not eviction followed by reception, in either order")
    s = scenarios.labelled_chains()
    keep, drop = s.positives[0], s.negatives[0]
    universe = enumerate_universe(s.sig, 2)
    fr = el_family(universe)
    checker = PostulateChecker(fr)

    def success(output):
        run = run_from_concepts(OperatorKind.REVISION, universe, s.base, output, s.positives, s.negatives)
        return checker.revision(run)[0]

    evicted, _ = el_evict_bounded(s.base, s.negatives, fr)
    evict_first = el_receive(evicted, s.positives)
    verdict = success(evict_first)
    result.note(f"evict then receive: {_show(evicted, unicode)} -> {_show(evict_first, unicode)}")
    result.expect("  fails success on the dropped chain",
                  not verdict.passed and universe.closure([verdict.witness]) == universe.closure([drop]))

    received = el_receive(s.base, s.positives)
    receive_first, _ = el_evict_bounded(received, s.negatives, fr)
    verdict = success(receive_first)
    result.note(f"receive then evict: {_show(received, unicode)} -> {_show(receive_first, unicode)}")
    result.expect("  fails success on the kept chain",
                  not verdict.passed and universe.closure([verdict.witness]) == universe.closure([keep]))

    revised = revise_alc(ChangeRequest(s.base, s.sig, s.positives, s.negatives))
    result.note(f"revised: {_show(revised, unicode)}")
    result.expect("  revision keeps the kept chain", model_check(keep, revised))
    result.expect("  revision drops the dropped chain", not model_check(drop, revised))
    return result


def demo_single_points(unicode: bool = False) -> DemoResult:
    result = DemoResult("single-points", "vacuous removal forces B and C up to C")
    s, worlds = scenarios.single_points()
    with_a, _, only_c, with_b = worlds
    shared = [c for c in enumerate_el_concepts(s.sig, 2, 1)
              if model_check(with_a, c) and model_check(with_b, c)]
    result.note(f"{len(shared)} EL concepts of depth <= 2 hold in both the A,C and the B,C worlds")
    result.expect("each holds in the C world", all(model_check(only_c, c) for c in shared))

    universe = enumerate_universe(s.sig, 0, override=True)
    fr = el_family(universe)
    req = ChangeRequest(s.base, s.sig, s.positives, s.negatives)
    b, plus, minus = request_sets(req, universe)
    revised = symmetric_differential_revise(b, plus, minus, fr)
    result.note(f"revised: {_show(fr.witness(revised), unicode)}")
    result.expect("  keeps every model of the base", b <= revised)
    result.expect("  equals mod(C)", revised == universe.mod_set(name("C")))

    b_c = universe.closure([with_b])
    naive = [y for y in chi_min(b, plus, minus, fr) if not b_c <= y]
    result.expect("some closest candidate drops the B,C world", bool(naive))
    if naive:
        result.note(f"  e.g. {_show(fr.witness(naive[0]), unicode)}")
        verdicts = PostulateChecker(fr).revision(run_from_concepts(
            OperatorKind.REVISION, universe, s.base, fr.witness(naive[0]), s.positives, s.negatives))
        removal = next(v for v in verdicts if v.postulate == "vacuous-removal")
        result.expect("  which fails vacuous-removal at the B,C world",
                      not removal.passed and universe.closure([removal.witness]) == b_c)
    return result


def demo_two_role_characteristic(unicode: bool = False) -> DemoResult:
    result = DemoResult("two-role-characteristic", "characteristic concept of B and exists r.(A and B) over two roles")
    concept, sig, target = scenarios.two_role_characteristic()
    out = dagger(concept, sig)
    result.note(f"characteristic: {_show(out, unicode)}")
    result.expect("equivalent", equivalent(out, target))
    return result


DEMOS: Dict[str, Callable[..., DemoResult]] = {
    "platypus": demo_platypus,
    "tasmanian-devil": demo_tasmanian_devil,
    "koala": demo_koala,
    "short-chains": demo_short_chains,
    "reflexive-point": demo_reflexive_point,
    "strict-chain": demo_strict_chain,
    "least-subsumer": demo_least_subsumer,
    "labelled-chains": demo_labelled_chains,
    "single-points": demo_single_points,
    "two-role-characteristic": demo_two_role_characteristic,
}

# Worked-example numbers accepted in place of the names.
ALIASES: Dict[str, str] = {
    "1": "platypus",
    "2": "tasmanian-devil",
    "3": "koala",
    "5": "short-chains",
    "6": "reflexive-point",
    "8": "strict-chain",
    "9": "least-subsumer",
    "17": "labelled-chains",
    "26": "single-points",
    "B16": "two-role-characteristic",
}


def run_demo(demo_name: str, unicode: bool = False) -> DemoResult:
    """
    Run a demo by name or by its worked-example number.

    Raises:
        ValueError: If no demo has that name.
    """
    demo_name = ALIASES.get(demo_name, demo_name)
    if demo_name not in DEMOS:
        raise ValueError(f"Unknown demo {demo_name!r}; choose from {', '.join(list(DEMOS) + list(ALIASES))}")
    result = DEMOS[demo_name](unicode=unicode)
    logger.info(f"Demo {demo_name}: {'pass' if result.passed else 'fail'}")
    return result
