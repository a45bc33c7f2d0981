"""
Finite universes of bounded trees and sets of models over them.

A universe over a signature and a depth bound k holds one representative
tree for every bisimulation class of trees of height at most k. A class is
identified by its key: the sorted names at the root and, per role, the
sorted distinct keys of the children.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..concepts.syntax import Concept, Signature, depth, signature_of
from ..interpretations.interpretation import Interpretation, PointedInterpretation, model_check
from ..interpretations.trees import ROOT, child_id, concept_of_tree, height

logger = logging.getLogger(__name__)

MAX_CONCEPT_NAMES = 2
MAX_ROLE_NAMES = 1
MAX_DEPTH = 2
DEFAULT_BUDGET = 5000

ClassKey = Tuple[Tuple[str, ...], Tuple[Tuple["ClassKey", ...], ...]]


class BudgetExceededError(ValueError):
    """Raised when a universe would hold more classes than allowed."""

    def __init__(self, message: str, count: Optional[int] = None):
        self.count = count
        super().__init__(message)


class FragmentError(ValueError):
    """Raised when a concept or model lies outside a universe's fragment."""


def class_count(n_concepts: int, n_roles: int, k: int, ceiling: Optional[int] = None) -> Optional[int]:
    """
    Number of bisimulation classes of trees of height at most k.

    T(0) = 2^|NC| and T(i+1) = 2^|NC| * (2^T(i))^|NR|. Returns None when
    the count is known to exceed `ceiling` by too much to write down.
    """
    count = 2 ** n_concepts
    for _ in range(k):
        exponent = n_concepts + n_roles * count
        if ceiling is not None and exponent > ceiling.bit_length() + 1:
            return None
        count = 2 ** exponent
    return count


def _subsets(items: Sequence) -> List[Tuple]:
    return [tuple(x for x, keep in zip(items, bits) if keep)
            for bits in product((False, True), repeat=len(items))]


def _key_size(key: ClassKey) -> int:
    return 1 + sum(_key_size(child) for group in key[1] for child in group)


@dataclass(eq=False)
class FiniteUniverse:
    """Representatives of all bounded-height tree classes over a signature."""
    sig: Signature
    k: int
    keys: List[ClassKey]
    models: List[PointedInterpretation]
    _index: Dict[ClassKey, int] = field(default_factory=dict, repr=False)
    _mod_cache: Dict[Concept, "ModelSet"] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {key: i for i, key in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.models)

    def index_of(self, key: ClassKey) -> int:
        return self._index[key]

    def children(self, i: int, role: str) -> Tuple[int, ...]:
        """Universe indices of the r-children classes of model i."""
        position = self.sig.role_names.index(role)
        return tuple(self._index[child] for child in self.keys[i][1][position])

    def empty(self) -> "ModelSet":
        return ModelSet(self, np.zeros(len(self), dtype=bool))

    def full(self) -> "ModelSet":
        return ModelSet(self, np.ones(len(self), dtype=bool))

    def from_indices(self, indices: Iterable[int]) -> "ModelSet":
        mask = np.zeros(len(self), dtype=bool)
        mask[list(indices)] = True
        return ModelSet(self, mask)

    def class_key(self, pi: PointedInterpretation) -> Optional[ClassKey]:
        """
        Key of the class of pi, or None if no representative is bisimilar
        to pi. That is the case exactly when a path longer than k or a
        cycle is reachable from the point.
        """
        h = height(pi)
        if h is None or h > self.k:
            return None
        interp = pi.interp
        names = set(self.sig.concept_names)
        memo: Dict[str, ClassKey] = {}

        def key_of(node: str) -> ClassKey:
            if node not in memo:
                labels = tuple(sorted(interp.labels[node] & names))
                groups = tuple(tuple(sorted({key_of(t) for t in interp.succ(role, node)}))
                               for role in self.sig.role_names)
                memo[node] = (labels, groups)
            return memo[node]

        return key_of(pi.point)

    def locate(self, pi: PointedInterpretation) -> Optional[int]:
        key = self.class_key(pi)
        return None if key is None else self._index[key]

    def closure(self, models: Iterable[PointedInterpretation]) -> "ModelSet":
        """
        Representatives bisimilar to some of the given models.

        Raises:
            FragmentError: If a model has no representative in the universe.
        """
        indices = []
        for pi in models:
            i = self.locate(pi)
            if i is None:
                raise FragmentError(f"Model pointed at {pi.point!r} is outside the depth-{self.k} fragment")
            indices.append(i)
        return self.from_indices(indices)

    def mod_set(self, c: Concept, strict: bool = True) -> "ModelSet":
        """
        Representatives satisfying c.

        With strict=True, c must have depth at most k. With strict=False any
        depth is accepted; the universe then stands for the trees of height
        at most k, on which every concept is evaluated exactly.

        Raises:
            FragmentError: If c uses names outside the signature, or is too
                deep in strict mode.
        """
        if not signature_of(c).issubset(self.sig):
            raise FragmentError(f"{c.text} uses names outside {self.sig}")
        if strict and depth(c) > self.k:
            raise FragmentError(f"{c.text} has depth {depth(c)} > {self.k}")
        if c not in self._mod_cache:
            mask = np.fromiter((model_check(pi, c) for pi in self.models), dtype=bool, count=len(self))
            self._mod_cache[c] = ModelSet(self, mask)
        return self._mod_cache[c]

    def exists_mask(self, role: str, target: "ModelSet") -> "ModelSet":
        """Representatives with some r-child in `target`."""
        mask = np.fromiter((any(target.mask[j] for j in self.children(i, role)) for i in range(len(self))),
                           dtype=bool, count=len(self))
        return ModelSet(self, mask)

    def describe(self, i: int) -> str:
        """Text of the EL concept describing representative i."""
        return concept_of_tree(self.models[i]).text


def _build_tree(key: ClassKey, sig: Signature) -> PointedInterpretation:
    domain: List[str] = []
    concepts: Dict[str, List[str]] = {}
    edges: Dict[str, List[Tuple[str, str]]] = {}

    def place(k: ClassKey, node: str) -> None:
        domain.append(node)
        for label in k[0]:
            concepts.setdefault(label, []).append(node)
        index = 0
        for role, group in zip(sig.role_names, k[1]):
            for child in group:
                child_node = child_id(node, role, index)
                index += 1
                edges.setdefault(role, []).append((node, child_node))
                place(child, child_node)

    place(key, ROOT)
    return PointedInterpretation(Interpretation.build(domain, concepts, edges), ROOT)


def enumerate_universe(sig: Signature, k: int, budget: int = DEFAULT_BUDGET, override: bool = False,
                       caps: Tuple[int, int, int] = (MAX_CONCEPT_NAMES, MAX_ROLE_NAMES, MAX_DEPTH)) -> FiniteUniverse:
    """
    One representative per bisimulation class of trees of height <= k.

    Args:
        sig: Signature of the universe.
        k: Height bound.
        budget: Largest number of classes accepted.
        override: Lift the caps on signature size and k.
        caps: Largest number of concept names, role names and k accepted
            without override.

    Raises:
        BudgetExceededError: If the caps or the budget are exceeded.
    """
    n_concepts, n_roles = len(sig.concept_names), len(sig.role_names)
    max_nc, max_nr, max_k = caps
    if not override and (n_concepts > max_nc or n_roles > max_nr or k > max_k):
        count = class_count(n_concepts, n_roles, k, budget)
        raise BudgetExceededError(
            f"Universe over {sig} with k={k} exceeds the caps "
            f"(|NC|<={max_nc}, |NR|<={max_nr}, k<={max_k}); "
            f"{'more than ' + str(budget) if count is None else count} classes", count)
    count = class_count(n_concepts, n_roles, k, budget)
    if count is None or count > budget:
        raise BudgetExceededError(
            f"Universe over {sig} with k={k} has "
            f"{'more than ' + str(budget) if count is None else count} classes, budget is {budget}", count)
    if override:
        logger.warning(f"Universe caps overridden: {sig}, k={k}, {count} classes")

    labels = _subsets(sig.concept_names)
    level: List[ClassKey] = [(l, tuple(() for _ in sig.role_names)) for l in labels]
    for _ in range(k):
        child_sets = _subsets(sorted(level))
        level = [(l, groups) for l in labels for groups in product(child_sets, repeat=n_roles)]
    keys = sorted(level, key=lambda key: (_key_size(key), key))
    models = [_build_tree(key, sig) for key in keys]
    logger.info(f"Universe over {sig} with k={k}: {len(models)} models")
    return FiniteUniverse(sig, k, keys, models)


@dataclass(frozen=True, eq=False)
class ModelSet:
    """A set of universe representatives, stored as a boolean mask."""
    universe: FiniteUniverse
    mask: np.ndarray

    def _other(self, other: "ModelSet") -> np.ndarray:
        if other.universe is not self.universe:
            raise FragmentError("Model sets belong to different universes")
        return other.mask

    def __or__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.universe, self.mask | self._other(other))

    def __and__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.universe, self.mask & self._other(other))

    def __sub__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.universe, self.mask & ~self._other(other))

    def __xor__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.universe, self.mask ^ self._other(other))

    def complement(self) -> "ModelSet":
        return ModelSet(self.universe, ~self.mask)

    def __le__(self, other: "ModelSet") -> bool:
        return not bool(np.any(self.mask & ~self._other(other)))

    def __lt__(self, other: "ModelSet") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "ModelSet") -> bool:
        return other <= self

    def __gt__(self, other: "ModelSet") -> bool:
        return other < self

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModelSet) and other.universe is self.universe
                and bool(np.array_equal(self.mask, other.mask)))

    def __hash__(self) -> int:
        return hash(self.mask.tobytes())

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __bool__(self) -> bool:
        return bool(self.mask.any())

    def __iter__(self) -> Iterator[int]:
        return iter(int(i) for i in np.flatnonzero(self.mask))

    def __contains__(self, index: int) -> bool:
        return bool(self.mask[index])

    def bits(self) -> Tuple[int, ...]:
        """The mask as a tuple of 0/1; its order is the selection order."""
        return tuple(int(b) for b in self.mask)

    def models(self) -> List[PointedInterpretation]:
        return [self.universe.models[i] for i in self]

    def __repr__(self) -> str:
        return f"ModelSet({''.join(str(b) for b in self.bits())})"
