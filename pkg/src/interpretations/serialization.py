"""
JSON files for signatures and pointed interpretations.

Signature file:      {"concepts": [...], "roles": [...]}
Interpretation file: {"domain": [...], "concepts": {"A": [...]},
                      "roles": {"r": [["d1", "d2"], ...]}, "point": "d1"}
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from ..concepts.syntax import Signature
from .interpretation import Interpretation, InterpretationError, PointedInterpretation

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def read_json(path: PathLike) -> Any:
    """
    Raises:
        FileNotFoundError: If the file does not exist.
        ValueError: If the file is not valid JSON.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON ({e})") from e


def signature_from_json(obj: Dict[str, Any]) -> Signature:
    if not isinstance(obj, dict):
        raise InterpretationError("A signature must be a JSON object")
    return Signature.of(obj.get("concepts", []), obj.get("roles", []))


def signature_to_json(sig: Signature) -> Dict[str, Any]:
    return {"concepts": list(sig.concept_names), "roles": list(sig.role_names)}


def interpretation_from_json(obj: Dict[str, Any]) -> PointedInterpretation:
    """
    Raises:
        InterpretationError: If a key is missing or an element is unknown.
    """
    if not isinstance(obj, dict):
        raise InterpretationError("An interpretation must be a JSON object")
    for key in ("domain", "point"):
        if key not in obj:
            raise InterpretationError(f"Interpretation is missing the {key!r} key")
    concepts = obj.get("concepts", {})
    roles = obj.get("roles", {})
    if not isinstance(concepts, dict) or not isinstance(roles, dict):
        raise InterpretationError("'concepts' and 'roles' must be JSON objects")
    interp = Interpretation.build(obj["domain"], concepts, roles)
    return PointedInterpretation(interp, obj["point"])


def interpretation_to_json(pi: PointedInterpretation) -> Dict[str, Any]:
    interp = pi.interp
    return {
        "domain": list(interp.domain),
        "concepts": {k: sorted(v) for k, v in sorted(interp.concept_ext.items())},
        "roles": {k: [list(p) for p in sorted(v)] for k, v in sorted(interp.role_ext.items())},
        "point": pi.point,
    }


def load_signature(path: PathLike) -> Signature:
    sig = signature_from_json(read_json(path))
    logger.info(f"Loaded signature {sig} from {path}")
    return sig


def load_interpretation(path: PathLike) -> PointedInterpretation:
    pi = interpretation_from_json(read_json(path))
    logger.info(f"Loaded interpretation with {len(pi.interp.domain)} elements from {path}")
    return pi
