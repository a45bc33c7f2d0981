"""
Bisimulation and k-bisimulation between pointed interpretations.

Both are computed by pruning: start from every pair that agrees on the
concept names and drop pairs that break the forth or back condition.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Set, Tuple

from ..concepts.syntax import Signature
from ..interpretations.interpretation import Interpretation, PointedInterpretation

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


@dataclass(frozen=True)
class Bisimulation:
    """A relation between the elements of two interpretations."""
    pairs: FrozenSet[Pair]

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)


def _reachable(interp: Interpretation, start: str, roles: Iterable[str]) -> Set[str]:
    roles = tuple(roles)
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        for role in roles:
            for t in interp.succ(role, node):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return seen


def _ambient(p1: PointedInterpretation, p2: PointedInterpretation,
             sig: Optional[Signature]) -> Signature:
    return sig if sig is not None else p1.signature().union(p2.signature())


def _atom_pairs(p1: PointedInterpretation, p2: PointedInterpretation, sig: Signature,
                left: Set[str], right: Set[str]) -> Set[Pair]:
    names = frozenset(sig.concept_names)
    l1, l2 = p1.interp.labels, p2.interp.labels
    return {(x, y) for x in left for y in right if (l1[x] & names) == (l2[y] & names)}


def _zigzag(p1: PointedInterpretation, p2: PointedInterpretation, roles: Tuple[str, ...],
            relation: Set[Pair], x: str, y: str) -> bool:
    i1, i2 = p1.interp, p2.interp
    for role in roles:
        s1, s2 = i1.succ(role, x), i2.succ(role, y)
        if any(not any((a, b) in relation for b in s2) for a in s1):
            return False
        if any(not any((a, b) in relation for a in s1) for b in s2):
            return False
    return True


def bisimilar(p1: PointedInterpretation, p2: PointedInterpretation,
              sig: Optional[Signature] = None) -> Optional[Bisimulation]:
    """
    Greatest bisimulation between the parts reachable from the two points.

    Args:
        p1, p2: Pointed interpretations to compare.
        sig: Names to respect. Defaults to every name of either input.

    Returns:
        The greatest bisimulation if it relates the two points, else None.
    """
    sig = _ambient(p1, p2, sig)
    roles = sig.role_names
    left = _reachable(p1.interp, p1.point, roles)
    right = _reachable(p2.interp, p2.point, roles)
    relation = _atom_pairs(p1, p2, sig, left, right)
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for pair in sorted(relation):
            if not _zigzag(p1, p2, roles, relation, *pair):
                relation.discard(pair)
                changed = True
    logger.debug(f"Bisimulation fixpoint after {rounds} rounds, {len(relation)} pairs")
    if (p1.point, p2.point) not in relation:
        return None
    return Bisimulation(frozenset(relation))


def k_bisimilar(p1: PointedInterpretation, p2: PointedInterpretation, k: int,
                sig: Optional[Signature] = None) -> bool:
    """
    Decide whether a k-bisimulation relates the two points.

    Round i keeps the pairs whose successors are related after round i-1,
    so after k rounds the relation is the greatest k-bisimulation level.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    sig = _ambient(p1, p2, sig)
    roles = sig.role_names
    left = _reachable(p1.interp, p1.point, roles)
    right = _reachable(p2.interp, p2.point, roles)
    atoms = _atom_pairs(p1, p2, sig, left, right)
    relation = set(atoms)
    for _ in range(k):
        relation = {pair for pair in atoms if _zigzag(p1, p2, roles, relation, *pair)}
    return (p1.point, p2.point) in relation
