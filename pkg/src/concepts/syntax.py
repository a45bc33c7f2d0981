"""
Concept syntax for the EL, EL-bottom and ALC description logics.

Concepts are immutable trees built through smart constructors that keep
them in normal form: conjunctions and disjunctions are flat, duplicate-free
and sorted by their canonical text.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple


KEYWORDS = frozenset({"top", "bot", "not", "and", "or", "exists", "forall"})
IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class SignatureError(ValueError):
    """Raised when a signature is malformed."""


class DialectError(ValueError):
    """Raised when a concept uses constructors outside the expected dialect."""


class UndeclaredNameError(ValueError):
    """Raised when a concept mentions a name missing from the signature."""


class Dialect(Enum):
    """Description logic dialects, ordered by expressiveness."""
    EL = "EL"
    EL_BOT = "EL_BOT"
    ALC = "ALC"

    @property
    def rank(self) -> int:
        return _DIALECT_RANK[self]

    def admits(self, other: "Dialect") -> bool:
        """True if every concept of `other` is also a concept of this dialect."""
        return other.rank <= self.rank


_DIALECT_RANK = {Dialect.EL: 0, Dialect.EL_BOT: 1, Dialect.ALC: 2}


@dataclass(frozen=True)
class Signature:
    """Finite sets of concept names and role names, kept sorted."""
    concept_names: Tuple[str, ...] = ()
    role_names: Tuple[str, ...] = ()

    def __post_init__(self):
        concepts = tuple(self.concept_names)
        roles = tuple(self.role_names)
        for kind, names in (("concept", concepts), ("role", roles)):
            if len(set(names)) != len(names):
                raise SignatureError(f"Duplicate {kind} names in {list(names)}")
            for name in names:
                if not isinstance(name, str) or not IDENTIFIER.match(name) or name in KEYWORDS:
                    raise SignatureError(f"Invalid {kind} name: {name!r}")
        shared = set(concepts) & set(roles)
        if shared:
            raise SignatureError(f"Names used both as concept and role: {sorted(shared)}")
        object.__setattr__(self, "concept_names", tuple(sorted(concepts)))
        object.__setattr__(self, "role_names", tuple(sorted(roles)))

    @classmethod
    def of(cls, concepts: Iterable[str] = (), roles: Iterable[str] = ()) -> "Signature":
        return cls(tuple(concepts), tuple(roles))

    def union(self, other: "Signature") -> "Signature":
        return Signature.of(
            set(self.concept_names) | set(other.concept_names),
            set(self.role_names) | set(other.role_names),
        )

    def issubset(self, other: "Signature") -> bool:
        return (set(self.concept_names) <= set(other.concept_names)
                and set(self.role_names) <= set(other.role_names))

    def __str__(self) -> str:
        return f"({{{', '.join(self.concept_names)}}}, {{{', '.join(self.role_names)}}})"


class ConceptKind(Enum):
    """Concept constructors."""
    TOP = "top"
    BOT = "bot"
    NAME = "name"
    NOT = "not"
    AND = "and"
    OR = "or"
    EXISTS = "exists"
    FORALL = "forall"


@dataclass(frozen=True, eq=False)
class Concept:
    """
    A concept node.

    `name` holds the concept name of a NAME node and the role of an
    EXISTS/FORALL node. Equality and hashing go through the canonical text,
    which is computed once at construction.
    """
    kind: ConceptKind
    name: Optional[str] = None
    children: Tuple["Concept", ...] = ()
    text: str = field(default="", repr=False)

    def __post_init__(self):
        object.__setattr__(self, "text", _render(self))

    def __eq__(self, other) -> bool:
        return isinstance(other, Concept) and self.text == other.text

    def __hash__(self) -> int:
        return hash(self.text)

    def __lt__(self, other: "Concept") -> bool:
        return self.text < other.text

    def __repr__(self) -> str:
        return f"Concept({self.text})"

    @property
    def child(self) -> "Concept":
        """The single operand of a NOT, EXISTS or FORALL node."""
        return self.children[0]


def _render(c: Concept) -> str:
    kind = c.kind
    if kind is ConceptKind.TOP:
        return "top"
    if kind is ConceptKind.BOT:
        return "bot"
    if kind is ConceptKind.NAME:
        return c.name
    if kind is ConceptKind.NOT:
        return f"(not {c.children[0].text})"
    if kind is ConceptKind.AND:
        return "(" + " and ".join(ch.text for ch in c.children) + ")"
    if kind is ConceptKind.OR:
        return "(" + " or ".join(ch.text for ch in c.children) + ")"
    if kind is ConceptKind.EXISTS:
        return f"(exists {c.name}.{c.children[0].text})"
    return f"(forall {c.name}.{c.children[0].text})"


TOP = Concept(ConceptKind.TOP)
BOT = Concept(ConceptKind.BOT)


def top() -> Concept:
    return TOP


def bot() -> Concept:
    return BOT


def name(concept_name: str) -> Concept:
    return Concept(ConceptKind.NAME, concept_name)


def neg(c: Concept) -> Concept:
    return Concept(ConceptKind.NOT, children=(c,))


def exists(role: str, c: Concept = TOP) -> Concept:
    return Concept(ConceptKind.EXISTS, role, (c,))


def forall(role: str, c: Concept) -> Concept:
    return Concept(ConceptKind.FORALL, role, (c,))


def _nary(kind: ConceptKind, unit: Concept, empty: Concept,
          operands: Iterable[Concept], dedupe: bool) -> Concept:
    flat: List[Concept] = []
    for c in operands:
        if c.kind is kind:
            flat.extend(c.children)
        elif c != unit:
            flat.append(c)
    if dedupe:
        flat = list(set(flat))
    flat.sort(key=lambda c: c.text)
    if not flat:
        return empty
    if len(flat) == 1:
        return flat[0]
    return Concept(kind, children=tuple(flat))


def conj(*operands: Concept, dedupe: bool = True) -> Concept:
    """
    Normalized conjunction.

    With dedupe=False repeated operands are kept, which lets a conjunction
    describe a tree node with several identical subtrees.
    """
    return _nary(ConceptKind.AND, TOP, TOP, operands, dedupe)


def disj(*operands: Concept) -> Concept:
    return _nary(ConceptKind.OR, BOT, BOT, operands, True)


def exists_chain(n: int, role: str, filler: Concept = TOP) -> Concept:
    """The concept exists role.(exists role. ... filler) with n quantifiers."""
    c = filler
    for _ in range(n):
        c = exists(role, c)
    return c


def normalize(c: Concept) -> Concept:
    """Rebuild c bottom-up through the smart constructors."""
    kind = c.kind
    if kind in (ConceptKind.TOP, ConceptKind.BOT, ConceptKind.NAME):
        return c
    if kind is ConceptKind.NOT:
        return neg(normalize(c.child))
    if kind is ConceptKind.AND:
        return conj(*(normalize(ch) for ch in c.children))
    if kind is ConceptKind.OR:
        return disj(*(normalize(ch) for ch in c.children))
    if kind is ConceptKind.EXISTS:
        return exists(c.name, normalize(c.child))
    return forall(c.name, normalize(c.child))


def depth(c: Concept) -> int:
    """Role depth: quantifiers add one, boolean connectives take the maximum."""
    if c.kind in (ConceptKind.EXISTS, ConceptKind.FORALL):
        return 1 + depth(c.child)
    if not c.children:
        return 0
    return max(depth(ch) for ch in c.children)


def signature_of(c: Concept) -> Signature:
    concepts: Set[str] = set()
    roles: Set[str] = set()
    stack = [c]
    while stack:
        node = stack.pop()
        if node.kind is ConceptKind.NAME:
            concepts.add(node.name)
        elif node.kind in (ConceptKind.EXISTS, ConceptKind.FORALL):
            roles.add(node.name)
        stack.extend(node.children)
    return Signature.of(concepts, roles)


def check_signature(c: Concept, sig: Signature) -> None:
    """
    Raises:
        UndeclaredNameError: If c mentions a name outside sig.
    """
    used = signature_of(c)
    missing = sorted(set(used.concept_names) - set(sig.concept_names))
    missing += sorted(set(used.role_names) - set(sig.role_names))
    if missing:
        raise UndeclaredNameError(f"Undeclared names {missing} in {c.text}")


def dialect_of(c: Concept) -> Dialect:
    """Smallest dialect admitting c."""
    result = Dialect.EL
    stack = [c]
    while stack:
        node = stack.pop()
        if node.kind in (ConceptKind.NOT, ConceptKind.OR, ConceptKind.FORALL):
            return Dialect.ALC
        if node.kind is ConceptKind.BOT:
            result = Dialect.EL_BOT
        stack.extend(node.children)
    return result


def check_dialect(c: Concept, dialect: Dialect) -> None:
    """
    Raises:
        DialectError: If c is not a concept of `dialect`.
    """
    found = dialect_of(c)
    if not dialect.admits(found):
        raise DialectError(f"{c.text} is {found.value}, expected {dialect.value}")


def subconcepts(c: Concept) -> FrozenSet[Concept]:
    """All subconcepts of c, c included."""
    seen: Set[Concept] = set()
    stack = [c]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(node.children)
    return frozenset(seen)


def nnf(c: Concept) -> Concept:
    """Negation normal form: negation only in front of concept names."""
    return _nnf(c, False)


def _nnf(c: Concept, negated: bool) -> Concept:
    kind = c.kind
    if kind is ConceptKind.NOT:
        return _nnf(c.child, not negated)
    if kind is ConceptKind.TOP:
        return BOT if negated else TOP
    if kind is ConceptKind.BOT:
        return TOP if negated else BOT
    if kind is ConceptKind.NAME:
        return neg(c) if negated else c
    if kind is ConceptKind.AND:
        parts = [_nnf(ch, negated) for ch in c.children]
        return disj(*parts) if negated else conj(*parts)
    if kind is ConceptKind.OR:
        parts = [_nnf(ch, negated) for ch in c.children]
        return conj(*parts) if negated else disj(*parts)
    filler = _nnf(c.child, negated)
    if (kind is ConceptKind.EXISTS) != negated:
        return exists(c.name, filler)
    return forall(c.name, filler)
