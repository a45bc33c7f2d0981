"""
Command-line front end.

Every subcommand delegates to one library operation. Exit codes: 0 on
success, 1 when a check answers negatively, 2 on bad input.
"""

import argparse
import json
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..change.lcs import el_receive
from ..change.operators import ChangeRequest, RealizabilityError, evict_alc, receive_alc, revise_alc
from ..characteristic.dagger import dagger, dagger_of_tree
from ..concepts.parser import parse_concept, print_concept
from ..concepts.syntax import Concept, Dialect, Signature, depth, dialect_of, signature_of
from ..config.config_parser import Config, load_config_or_default
from ..interpretations.interpretation import PointedInterpretation, model_check
from ..interpretations.serialization import (
    interpretation_to_json, load_interpretation, load_signature, read_json, signature_to_json,
)
from ..interpretations.trees import canonical_model, concept_of_tree
from ..oracle.families import Fragment, fr_family
from ..oracle.postulates import OperatorKind, PostulateChecker, Verdict, run_from_concepts
from ..oracle.revision import case_minima, el_evict_bounded, el_revise_bounded, request_sets, revision_case
from ..oracle.sampling import random_concept, random_request
from ..oracle.universe import FiniteUniverse, enumerate_universe
from ..relations.bisimulation import bisimilar, k_bisimilar
from ..relations.homomorphism import el_subsumes
from ..relations.tableau import alc_entails, alc_satisfiable
from .demos import ALIASES, DEMOS, run_demo

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

ROLE_LETTERS = "rstuvwxyz"


def _answer(flag: bool) -> int:
    return EXIT_OK if flag else EXIT_NEGATIVE


class Session:
    """Parsed arguments plus configuration, with the input loaders."""

    def __init__(self, args: argparse.Namespace, config: Config):
        self.args = args
        self.config = config
        self.unicode = args.unicode or config.unicode

    # Inputs

    def signature(self, required: bool = False) -> Optional[Signature]:
        if self.args.sig:
            return load_signature(self.args.sig)
        if self.args.nc is not None or self.args.nr is not None:
            return generic_signature(self.args.nc or 0, self.args.nr or 0)
        if required:
            raise ValueError("This command needs a signature (--sig, or --nc/--nr)")
        return None

    def models(self) -> List[PointedInterpretation]:
        return [load_interpretation(path) for path in self.args.model or []]

    def concepts(self, sig: Optional[Signature] = None) -> List[Concept]:
        texts = list(self.args.concept or [])
        for path in self.args.concept_file or []:
            with open(path, encoding="utf-8") as handle:
                texts += [line.strip() for line in handle if line.strip() and not line.startswith("#")]
        return [parse_concept(text, sig) for text in texts]

    def concept_count(self, count: int, sig: Optional[Signature] = None) -> List[Concept]:
        found = self.concepts(sig)
        if len(found) != count:
            raise ValueError(f"Expected {count} concept(s), got {len(found)}")
        return found

    def request(self, as_positives: bool) -> ChangeRequest:
        """The --request file, or --sig/--concept/--model with models on one side."""
        if self.args.request:
            return ChangeRequest.from_json(read_json(self.args.request))
        sig = self.signature(required=True)
        (base,) = self.concept_count(1, sig)
        models = tuple(self.models())
        if as_positives:
            return ChangeRequest(base, sig, positives=models)
        return ChangeRequest(base, sig, negatives=models)

    def universe(self, sig: Signature) -> FiniteUniverse:
        k = self.args.k if self.args.k is not None else self.config.max_depth
        budget = self.args.budget if self.args.budget is not None else self.config.budget
        return enumerate_universe(sig, k, budget, override=self.args.override, caps=self.config.caps)

    # Output

    def show(self, c: Concept) -> str:
        return print_concept(c, unicode=self.unicode)

    def emit(self, text: str, payload: Any) -> None:
        if self.args.json:
            print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
        else:
            print(text)


def generic_signature(nc: int, nr: int) -> Signature:
    """Concept names A, B, ... and role names r, s, ..."""
    if nc < 0 or nr < 0 or nc > 26 or nr > len(ROLE_LETTERS):
        raise ValueError(f"Unsupported signature size nc={nc}, nr={nr}")
    return Signature.of([chr(ord("A") + i) for i in range(nc)], list(ROLE_LETTERS[:nr]))


# Syntax and semantics

def cmd_parse(s: Session) -> int:
    sig = s.signature()
    (c,) = s.concept_count(1, sig)
    s.emit(s.show(c), {
        "concept": c.text,
        "dialect": dialect_of(c).value,
        "depth": depth(c),
        "signature": signature_to_json(signature_of(c)),
    })
    return EXIT_OK


def cmd_eval(s: Session) -> int:
    sig = s.signature()
    (c,) = s.concept_count(1, sig)
    models = s.models()
    if not models:
        raise ValueError("eval needs at least one --model")
    answers = [model_check(pi, c, sig) for pi in models]
    s.emit("\n".join("true" if a else "false" for a in answers), answers)
    return _answer(all(answers))


def cmd_bisim(s: Session) -> int:
    sig = s.signature()
    models = s.models()
    if len(models) != 2:
        raise ValueError(f"bisim needs exactly two --model files, got {len(models)}")
    if s.args.k is not None:
        related = k_bisimilar(models[0], models[1], s.args.k, sig)
    else:
        related = bisimilar(models[0], models[1], sig) is not None
    s.emit("true" if related else "false", {"bisimilar": related, "k": s.args.k})
    return _answer(related)


def cmd_subsume(s: Session) -> int:
    sig = s.signature()
    c, d = s.concept_count(2, sig)
    el = Dialect.EL_BOT.admits(dialect_of(c)) and Dialect.EL_BOT.admits(dialect_of(d))
    if el and not s.args.tableau:
        holds, method = el_subsumes(c, d), "homomorphism"
    else:
        holds, method = alc_entails(c, d), "tableau"
    s.emit("true" if holds else "false", {"subsumed": holds, "method": method})
    return _answer(holds)


def cmd_sat(s: Session) -> int:
    sig = s.signature()
    (c,) = s.concept_count(1, sig)
    holds = alc_satisfiable(c)
    s.emit("true" if holds else "false", {"satisfiable": holds})
    return _answer(holds)


def cmd_entail(s: Session) -> int:
    sig = s.signature()
    c, d = s.concept_count(2, sig)
    holds = alc_entails(c, d)
    s.emit("true" if holds else "false", {"entails": holds})
    return _answer(holds)


def cmd_canonical(s: Session) -> int:
    sig = s.signature()
    (c,) = s.concept_count(1, sig)
    payload = interpretation_to_json(canonical_model(c))
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    return EXIT_OK


def cmd_tree2concept(s: Session) -> int:
    models = s.models()
    if len(models) != 1:
        raise ValueError(f"tree2concept needs exactly one --model, got {len(models)}")
    c = concept_of_tree(models[0])
    s.emit(s.show(c), {"concept": c.text})
    return EXIT_OK


def cmd_dagger(s: Session) -> int:
    sig = s.signature()
    models = s.models()
    if models:
        results = [dagger_of_tree(pi, sig) for pi in models]
    else:
        results = [dagger(c, sig) for c in s.concept_count(1, sig)]
    s.emit("\n".join(s.show(c) for c in results), [c.text for c in results])
    return EXIT_OK


# Change operators

def _el_fragment(s: Session, sig: Signature):
    return fr_family(s.universe(sig), Fragment.EL_BOT)


def cmd_receive(s: Session) -> int:
    req = s.request(as_positives=True)
    if s.args.language == "el":
        out = el_receive(req.base, req.positives)
    else:
        out = receive_alc(req.base, req.positives, req.sig)
    s.emit(s.show(out), {"result": out.text})
    return EXIT_OK


def cmd_evict(s: Session) -> int:
    req = s.request(as_positives=False)
    if s.args.language == "el":
        out, _ = el_evict_bounded(req.base, req.negatives, _el_fragment(s, req.sig))
    else:
        out = evict_alc(req.base, req.negatives, req.sig)
    s.emit(s.show(out), {"result": out.text})
    return EXIT_OK


def cmd_revise(s: Session) -> int:
    if not s.args.request:
        raise ValueError("revise needs --request")
    req = s.request(as_positives=True)
    if s.args.language == "el":
        out, _ = el_revise_bounded(req, _el_fragment(s, req.sig))
    else:
        out = revise_alc(req)
    s.emit(s.show(out), {"result": out.text})
    return EXIT_OK


# Oracle

OPERATOR_KINDS = {
    "receive": OperatorKind.RECEPTION,
    "evict": OperatorKind.EVICTION,
    "revise": OperatorKind.REVISION,
}


def _apply(operator: str, language: str, req: ChangeRequest, universe: FiniteUniverse) -> Concept:
    if language == "el":
        if operator == "receive":
            return el_receive(req.base, req.positives)
        fr = fr_family(universe, Fragment.EL_BOT)
        if operator == "evict":
            return el_evict_bounded(req.base, req.negatives, fr)[0]
        return el_revise_bounded(req, fr)[0]
    if operator == "receive":
        return receive_alc(req.base, req.positives, req.sig)
    if operator == "evict":
        return evict_alc(req.base, req.negatives, req.sig)
    return revise_alc(req)


def _check_request(operator: str, language: str, req: ChangeRequest, universe: FiniteUniverse,
                   checker: PostulateChecker) -> Tuple[Concept, List[Verdict]]:
    out = _apply(operator, language, req, universe)
    positives = req.positives if operator != "evict" else ()
    negatives = req.negatives if operator != "receive" else ()
    run = run_from_concepts(OPERATOR_KINDS[operator], universe, req.base, out, positives, negatives)
    verdicts = checker.check(run)
    if run.kind is OperatorKind.REVISION:
        verdicts += checker.decomposition(run)
    return out, verdicts


def _sampled_requests(s: Session, universe: FiniteUniverse) -> List[ChangeRequest]:
    rng = np.random.default_rng(s.config.seed)
    dialect = Dialect.EL_BOT if s.args.language == "el" else Dialect.ALC
    requests = []
    for _ in range(s.config.requests):
        base = random_concept(rng, universe.sig, universe.k, dialect)
        requests.append(random_request(rng, universe, base=base))
    return requests


def oracle_enumerate(s: Session) -> int:
    universe = s.universe(s.signature(required=True))
    described = [universe.describe(i) for i in range(len(universe))]
    text = "\n".join([f"{len(universe)} models"] + [f"{i}: {d}" for i, d in enumerate(described)])
    s.emit(text, {"count": len(universe), "models": described})
    return EXIT_OK


def oracle_modset(s: Session) -> int:
    sig = s.signature(required=True)
    (c,) = s.concept_count(1, sig)
    universe = s.universe(sig)
    m = universe.mod_set(c, strict=False)
    bits = "".join(str(b) for b in m.bits())
    members = [universe.describe(i) for i in m]
    s.emit("\n".join([f"{len(m)}/{len(universe)} {bits}"] + members),
           {"concept": c.text, "size": len(m), "bits": bits, "members": members})
    return EXIT_OK


def oracle_chi(s: Session) -> int:
    if not s.args.request:
        raise ValueError("oracle chi needs --request")
    req = s.request(as_positives=True)
    universe = s.universe(req.sig)
    fragment = Fragment.EL_BOT if s.args.language == "el" else Fragment.ALC
    fr = fr_family(universe, fragment)
    b, plus, minus = request_sets(req, universe)
    case = revision_case(b, plus, minus)
    minima = case_minima(b, plus, minus, fr)
    witnesses = [fr.witness(m) for m in minima]
    s.emit("\n".join([f"case {case.value}: {len(minima)} closest"] + [s.show(w) for w in witnesses]),
           {"case": case.value, "minima": [{"bits": "".join(str(x) for x in m.bits()), "concept": w.text}
                                           for m, w in zip(minima, witnesses)]})
    return EXIT_OK


def oracle_postulates(s: Session) -> int:
    sig = s.signature(required=not s.args.request)
    if s.args.request:
        first = s.request(as_positives=True)
        universe = s.universe(first.sig)
        requests = [first]
    else:
        universe = s.universe(sig)
        requests = _sampled_requests(s, universe)
    fragment = Fragment.EL_BOT if s.args.language == "el" else Fragment.ALC
    checker = PostulateChecker(fr_family(universe, fragment))
    failures = 0
    lines: List[str] = []
    for index, req in enumerate(requests):
        try:
            _, verdicts = _check_request(s.args.operator, s.args.language, req, universe, checker)
        except RealizabilityError as e:
            logger.warning(f"Request {index} skipped: {e}")
            lines.append(f"{index}: skipped ({e})")
            continue
        for v in verdicts:
            failures += not v.passed
            if s.args.json:
                lines.append(json.dumps(v.to_json(), sort_keys=True, ensure_ascii=False))
            else:
                suffix = "" if v.passed else f" ({v.detail})"
                lines.append(f"{index}: {v.postulate}: {v.status}{suffix}")
    print("\n".join(lines))
    logger.info(f"{len(requests)} requests, {failures} failed verdicts")
    return _answer(failures == 0)


ORACLE_ACTIONS: Dict[str, Callable[[Session], int]] = {
    "enumerate": oracle_enumerate,
    "modset": oracle_modset,
    "chi": oracle_chi,
    "postulates": oracle_postulates,
}


def cmd_oracle(s: Session) -> int:
    return ORACLE_ACTIONS[s.args.action](s)


def cmd_demo(s: Session) -> int:
    if s.args.all == bool(s.args.name):
        raise ValueError("demo needs exactly one of --name or --all")
    names = list(DEMOS) if s.args.all else [s.args.name]
    results = [run_demo(n, unicode=s.unicode) for n in names]
    print("\n".join(r.render() for r in results))
    return _answer(all(r.passed for r in results))


COMMANDS: Dict[str, Tuple[Callable[[Session], int], str]] = {
    "parse": (cmd_parse, "parse and print a concept"),
    "eval": (cmd_eval, "check a concept on pointed interpretations"),
    "bisim": (cmd_bisim, "decide (k-)bisimilarity of two pointed interpretations"),
    "subsume": (cmd_subsume, "decide whether the first concept is subsumed by the second"),
    "sat": (cmd_sat, "decide satisfiability of an ALC concept"),
    "entail": (cmd_entail, "decide entailment between two ALC concepts"),
    "canonical": (cmd_canonical, "canonical model of an EL-bottom concept"),
    "tree2concept": (cmd_tree2concept, "EL concept describing a finite tree"),
    "dagger": (cmd_dagger, "characteristic ALC concept of an EL-bottom concept or a tree"),
    "receive": (cmd_receive, "receive models into a base"),
    "evict": (cmd_evict, "evict models from a base"),
    "revise": (cmd_revise, "receive and evict models in one step"),
    "oracle": (cmd_oracle, "finite-universe oracle"),
    "demo": (cmd_demo, "run the worked demonstrations"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sig", help="signature JSON file")
    common.add_argument("--model", action="append", help="pointed interpretation JSON file (repeatable)")
    common.add_argument("--concept", action="append", help="concept text (repeatable)")
    common.add_argument("--concept-file", action="append", help="file with one concept per line")
    common.add_argument("--request", help="change request JSON file")
    common.add_argument("--k", type=int, help="depth bound")
    common.add_argument("--nc", type=int, help="number of concept names A, B, ...")
    common.add_argument("--nr", type=int, help="number of role names r, s, ...")
    common.add_argument("--budget", type=int, help="largest universe accepted")
    common.add_argument("--override", action="store_true", help="lift the universe caps")
    common.add_argument("--language", choices=["alc", "el"], default="alc", help="concept language of the operators")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--unicode", action="store_true", help="print concepts with logical symbols")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="mc", description="Model change for EL-bottom and ALC concepts")
    sub = parser.add_subparsers(dest="command", required=True)
    for command, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(command, parents=[common], help=help_text)
        if command == "subsume":
            p.add_argument("--tableau", action="store_true", help="decide with the ALC tableau")
        elif command == "oracle":
            p.add_argument("action", choices=list(ORACLE_ACTIONS))
            p.add_argument("--operator", choices=list(OPERATOR_KINDS), default="revise")
        elif command == "demo":
            p.add_argument("--name", choices=list(DEMOS) + list(ALIASES))
            p.add_argument("--all", action="store_true")
    return parser


def run(argv: Optional[Sequence[str]] = None, config: Optional[Config] = None) -> int:
    """
    Parse argv, run the subcommand and return its exit code.

    Args:
        argv: Arguments without the program name; None reads sys.argv.
        config: Settings; None loads config.txt, falling back to defaults.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT
    if config is None:
        config = load_config_or_default()
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)
    handler, _ = COMMANDS[args.command]
    try:
        return handler(Session(args, config))
    except (ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INPUT
