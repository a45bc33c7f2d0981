"""
Finite interpretations, pointed interpretations and model checking.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from ..concepts.syntax import Concept, ConceptKind, Signature, check_signature

logger = logging.getLogger(__name__)


class InterpretationError(ValueError):
    """Raised when an interpretation is malformed."""


Edge = Tuple[str, str]


@dataclass(frozen=True)
class Interpretation:
    """
    A finite interpretation.

    Names absent from the extension maps have empty extensions; empty
    entries are dropped so that equal interpretations compare equal.
    """
    domain: Tuple[str, ...]
    concept_ext: Dict[str, FrozenSet[str]] = field(default_factory=dict, hash=False)
    role_ext: Dict[str, FrozenSet[Edge]] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        domain = tuple(self.domain)
        if not domain:
            raise InterpretationError("Domain must be non-empty")
        if len(set(domain)) != len(domain):
            raise InterpretationError(f"Duplicate elements in domain {list(domain)}")
        elements = set(domain)
        concepts: Dict[str, FrozenSet[str]] = {}
        for key, members in self.concept_ext.items():
            members = frozenset(members)
            stray = sorted(members - elements)
            if stray:
                raise InterpretationError(f"Concept {key!r}: element {stray[0]!r} is not in the domain")
            if members:
                concepts[key] = members
        roles: Dict[str, FrozenSet[Edge]] = {}
        for key, pairs in self.role_ext.items():
            pairs = list(pairs)
            for p in pairs:
                if isinstance(p, str) or not isinstance(p, Iterable):
                    raise InterpretationError(f"Role {key!r}: {p!r} is not a pair")
            pairs = frozenset(tuple(p) for p in pairs)
            for pair in sorted(pairs):
                if len(pair) != 2:
                    raise InterpretationError(f"Role {key!r}: {list(pair)} is not a pair")
                for element in pair:
                    if element not in elements:
                        raise InterpretationError(f"Role {key!r}: element {element!r} is not in the domain")
            if pairs:
                roles[key] = pairs
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "concept_ext", concepts)
        object.__setattr__(self, "role_ext", roles)

    @classmethod
    def build(cls, domain: Iterable[str],
              concepts: Optional[Mapping[str, Iterable[str]]] = None,
              roles: Optional[Mapping[str, Iterable[Iterable[str]]]] = None) -> "Interpretation":
        return cls(
            tuple(domain),
            {k: frozenset(v) for k, v in (concepts or {}).items()},
            {k: tuple(v) for k, v in (roles or {}).items()},
        )

    @cached_property
    def labels(self) -> Dict[str, FrozenSet[str]]:
        """Concept names holding at each element."""
        result = {d: set() for d in self.domain}
        for key, members in self.concept_ext.items():
            for d in members:
                result[d].add(key)
        return {d: frozenset(names) for d, names in result.items()}

    @cached_property
    def successors(self) -> Dict[str, Dict[str, Tuple[str, ...]]]:
        """role -> element -> sorted successors."""
        result: Dict[str, Dict[str, List[str]]] = {}
        for role, pairs in self.role_ext.items():
            table: Dict[str, List[str]] = {}
            for source, target in pairs:
                table.setdefault(source, []).append(target)
            result[role] = table
        return {role: {d: tuple(sorted(ts)) for d, ts in table.items()} for role, table in result.items()}

    def succ(self, role: str, element: str) -> Tuple[str, ...]:
        return self.successors.get(role, {}).get(element, ())

    @property
    def roles(self) -> Tuple[str, ...]:
        return tuple(sorted(self.role_ext))

    def children(self, element: str) -> List[Tuple[str, str]]:
        """(role, successor) pairs of an element, sorted."""
        return [(role, t) for role in self.roles for t in self.succ(role, element)]

    def signature(self) -> Signature:
        return Signature.of(self.concept_ext, self.role_ext)


@dataclass(frozen=True)
class PointedInterpretation:
    """An interpretation together with a distinguished element."""
    interp: Interpretation
    point: str

    def __post_init__(self):
        if self.point not in self.interp.labels:
            raise InterpretationError(f"Point {self.point!r} is not in the domain")

    def signature(self) -> Signature:
        return self.interp.signature()

    def check_signature(self, sig: Signature) -> None:
        """
        Raises:
            InterpretationError: If the interpretation uses names outside sig.
        """
        if not self.signature().issubset(sig):
            extra = sorted(set(self.interp.concept_ext) - set(sig.concept_names))
            extra += sorted(set(self.interp.role_ext) - set(sig.role_names))
            raise InterpretationError(f"Names {extra} are not in the signature {sig}")


def extension(interp: Interpretation, c: Concept,
              memo: Optional[Dict[Concept, FrozenSet[str]]] = None) -> FrozenSet[str]:
    """The set of elements satisfying c, computed bottom-up over c."""
    if memo is None:
        memo = {}
    if c in memo:
        return memo[c]
    kind = c.kind
    everything = frozenset(interp.domain)
    if kind is ConceptKind.TOP:
        result = everything
    elif kind is ConceptKind.BOT:
        result = frozenset()
    elif kind is ConceptKind.NAME:
        result = interp.concept_ext.get(c.name, frozenset())
    elif kind is ConceptKind.NOT:
        result = everything - extension(interp, c.child, memo)
    elif kind is ConceptKind.AND:
        result = everything
        for ch in c.children:
            result = result & extension(interp, ch, memo)
    elif kind is ConceptKind.OR:
        result = frozenset()
        for ch in c.children:
            result = result | extension(interp, ch, memo)
    else:
        filler = extension(interp, c.child, memo)
        if kind is ConceptKind.EXISTS:
            result = frozenset(d for d in interp.domain
                               if any(t in filler for t in interp.succ(c.name, d)))
        else:
            result = frozenset(d for d in interp.domain
                               if all(t in filler for t in interp.succ(c.name, d)))
    memo[c] = result
    return result


def model_check(pi: PointedInterpretation, c: Concept, sig: Optional[Signature] = None) -> bool:
    """
    Decide whether the point of pi satisfies c.

    Raises:
        UndeclaredNameError: If sig is given and c mentions other names.
    """
    if sig is not None:
        check_signature(c, sig)
    return pi.point in extension(pi.interp, c)


def chain_model(n: int, sig: Signature, labelled_end: Optional[str] = None) -> PointedInterpretation:
    """
    The n-edge chain 0 -> 1 -> ... -> n over the first role of sig, pointed at 0.

    Args:
        n: Number of edges.
        sig: Signature supplying the role.
        labelled_end: Optional concept name that holds at the last element.

    Raises:
        InterpretationError: If sig has no role name or n is negative.
    """
    if n < 0:
        raise InterpretationError(f"Chain length must be non-negative, got {n}")
    if not sig.role_names:
        raise InterpretationError(f"Signature {sig} has no role name for a chain")
    role = sig.role_names[0]
    domain = [str(i) for i in range(n + 1)]
    edges = [(str(i), str(i + 1)) for i in range(n)]
    concepts = {labelled_end: [str(n)]} if labelled_end else {}
    return PointedInterpretation(Interpretation.build(domain, concepts, {role: edges}), "0")
