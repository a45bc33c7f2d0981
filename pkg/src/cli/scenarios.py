"""
Worked scenarios: signatures, bases and pointed models used by the demos
and the tests. Each builder is named after what its data describes.
"""

from dataclasses import dataclass
from typing import Tuple

from ..concepts.parser import parse_concept
from ..concepts.syntax import Concept, Signature
from ..interpretations.interpretation import Interpretation, PointedInterpretation


@dataclass(frozen=True)
class Scenario:
    """A base concept over a signature with models to add and to remove."""
    sig: Signature
    base: Concept
    positives: Tuple[PointedInterpretation, ...] = ()
    negatives: Tuple[PointedInterpretation, ...] = ()


def _world(domain, concepts=None, roles=None, point=None) -> PointedInterpretation:
    interp = Interpretation.build(domain, concepts or {}, roles or {})
    return PointedInterpretation(interp, point or domain[0])


def platypus_diet() -> Scenario:
    """A platypus seen eating insects: the herbivore world must go."""
    sig = Signature.of(["Egg", "Herbivore", "Mammal"], ["lays"])
    carnivore = _world(["d", "e"], {"Mammal": ["d"], "Egg": ["e"]}, {"lays": [("d", "e")]})
    herbivore = _world(["d", "e"], {"Mammal": ["d"], "Herbivore": ["d"], "Egg": ["e"]},
                       {"lays": [("d", "e")]})
    return Scenario(sig, parse_concept("Mammal and exists lays.Egg", sig),
                    positives=(carnivore,), negatives=(herbivore,))


def tasmanian_devil() -> Scenario:
    """A marsupial that is neither koala nor kangaroo has to be admitted."""
    sig = Signature.of(["Carnivore", "Kangaroo", "Koala", "Marsupial", "TasDevil"], [])
    devil = _world(["d'"], {"TasDevil": ["d'"], "Carnivore": ["d'"], "Marsupial": ["d'"]})
    return Scenario(sig, parse_concept("Koala or Kangaroo", sig), positives=(devil,))


def placental_koala() -> Scenario:
    """Koalas turn out placental: admit the placental world, drop the other."""
    sig = Signature.of(["Mammal", "Marsupial", "Placental"], [])
    not_placental = _world(["d''"], {"Mammal": ["d''"], "Marsupial": ["d''"]})
    placental = _world(["d''"], {"Mammal": ["d''"], "Marsupial": ["d''"], "Placental": ["d''"]})
    return Scenario(sig, parse_concept("Mammal and Marsupial and (not Placental)", sig),
                    positives=(placental,), negatives=(not_placental,))


def placental_koala_target() -> Concept:
    return parse_concept("Mammal and Marsupial and Placental")


def short_chains() -> Scenario:
    """Chains of one and two r-edges against the base exists r.exists r.exists r.top."""
    sig = Signature.of([], ["r"])
    one = _world(["d1", "d2"], roles={"r": [("d1", "d2")]})
    two = _world(["d1", "d2", "d3"], roles={"r": [("d1", "d2"), ("d2", "d3")]})
    return Scenario(sig, parse_concept("exists r.exists r.exists r.top", sig), positives=(one,), negatives=(two,))


def reflexive_point() -> Scenario:
    """A single unlabelled element with an r-loop, to be evicted from exists r.top."""
    sig = Signature.of(["A"], ["r"])
    loop = _world(["d"], roles={"r": [("d", "d")]})
    return Scenario(sig, parse_concept("exists r.top", sig), negatives=(loop,))


def labelled_chains() -> Scenario:
    """
    Receive a one-edge chain with A at its end and evict a two-edge chain
    with A at its start, starting from exists r.top.
    """
    sig = Signature.of(["A"], ["r"])
    keep = _world(["d1", "d2"], {"A": ["d2"]}, {"r": [("d1", "d2")]})
    drop = _world(["d1", "d2", "d3"], {"A": ["d1"]}, {"r": [("d1", "d2"), ("d2", "d3")]})
    return Scenario(sig, parse_concept("exists r.top", sig), positives=(keep,), negatives=(drop,))


def single_points() -> Tuple[Scenario, Tuple[PointedInterpretation, ...]]:
    """
    Base B and C over single-element worlds labelled from {A, B, C}; receive
    the A,C world and drop the unlabelled one.

    Returns:
        The scenario and the four worlds in order: A,C / none / C / B,C.
    """
    sig = Signature.of(["A", "B", "C"], ["r"])
    worlds = (
        _world(["d"], {"A": ["d"], "C": ["d"]}),
        _world(["d"]),
        _world(["d"], {"C": ["d"]}),
        _world(["d"], {"B": ["d"], "C": ["d"]}),
    )
    scenario = Scenario(sig, parse_concept("B and C", sig), positives=(worlds[0],), negatives=(worlds[1],))
    return scenario, worlds


def two_role_characteristic() -> Tuple[Concept, Signature, Concept]:
    """
    The concept B and exists r.(A and B) over ({A, B}, {r, s}) with the
    characteristic concept its canonical model should get.
    """
    sig = Signature.of(["A", "B"], ["r", "s"])
    concept = parse_concept("B and exists r.(A and B)", sig)
    leaf = "(A and B and (forall r.bot) and (forall s.bot))"
    target = parse_concept(f"(not A) and B and (exists r.{leaf}) and (forall r.{leaf}) and (forall s.bot)", sig)
    return concept, sig, target
