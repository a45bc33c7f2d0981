"""
Homomorphisms from finite trees, and EL-bottom subsumption through them.
"""

import logging
from functools import lru_cache

from ..concepts.syntax import Concept, Dialect, check_dialect
from ..interpretations.interpretation import PointedInterpretation
from ..interpretations.trees import canonical_model, el_bot_satisfiable, require_tree

logger = logging.getLogger(__name__)


def homomorphism_exists(src: PointedInterpretation, tgt: PointedInterpretation) -> bool:
    """
    Decide whether the tree src maps homomorphically into tgt, point to point.

    Raises:
        NotTreeShapedError: If src is not tree-shaped.
    """
    require_tree(src)
    s, t = src.interp, tgt.interp

    @lru_cache(maxsize=None)
    def maps(x: str, y: str) -> bool:
        if not s.labels[x] <= t.labels[y]:
            return False
        return all(any(maps(child, image) for image in t.succ(role, y))
                   for role, child in s.children(x))

    return maps(src.point, tgt.point)


def el_subsumes(c: Concept, d: Concept) -> bool:
    """
    Decide whether c is subsumed by d, for EL-bottom concepts.

    An unsatisfiable c is subsumed by everything; a satisfiable c is never
    subsumed by an unsatisfiable d. Otherwise c is subsumed by d iff the
    canonical model of d maps into the canonical model of c.

    Raises:
        DialectError: If either concept is not EL-bottom.
    """
    check_dialect(c, Dialect.EL_BOT)
    check_dialect(d, Dialect.EL_BOT)
    if not el_bot_satisfiable(c):
        return True
    if not el_bot_satisfiable(d):
        return False
    return homomorphism_exists(canonical_model(d), canonical_model(c))
