import json

import pytest

from src.change.operators import ChangeRequest
from src.cli import scenarios
from src.cli.commands import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, generic_signature, run
from src.cli.demos import ALIASES, DEMOS, run_demo
from src.config.config_parser import Config
from src.interpretations.interpretation import chain_model
from src.interpretations.serialization import interpretation_to_json, signature_to_json

CONFIG = Config(requests=5)


@pytest.fixture
def files(tmp_path):
    """Signature, model and request files for the labelled chains."""
    s = scenarios.labelled_chains()

    def write(file_name, payload):
        path = tmp_path / file_name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return {
        "sig": write("sig.json", signature_to_json(s.sig)),
        "keep": write("keep.json", interpretation_to_json(s.positives[0])),
        "drop": write("drop.json", interpretation_to_json(s.negatives[0])),
        "request": write("request.json", ChangeRequest(s.base, s.sig, s.positives, s.negatives).to_json()),
        "broken": write("broken.json", {"domain": ["d"]}),
        "tall": write("tall.json", interpretation_to_json(chain_model(3, s.sig))),
    }


def _run(*argv):
    return run(list(argv), CONFIG)


class TestSyntaxCommands:

    def test_parse_json(self, capsys):
        assert _run("parse", "--concept", "A and exists r.B", "--json") == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["dialect"] == "EL"
        assert payload["depth"] == 1
        assert payload["signature"] == {"concepts": ["A", "B"], "roles": ["r"]}

    def test_parse_error(self):
        assert _run("parse", "--concept", "A and and") == EXIT_INPUT

    def test_wrong_number_of_concepts(self):
        assert _run("subsume", "--concept", "A") == EXIT_INPUT

    def test_unknown_command(self):
        assert _run("frobnicate") == EXIT_INPUT
        assert _run("--help") == EXIT_OK


class TestSemanticCommands:

    def test_eval(self, files, capsys):
        assert _run("eval", "--concept", "exists r.A", "--model", files["keep"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "true"
        assert _run("eval", "--concept", "exists r.A", "--model", files["keep"], "--model", files["drop"]) == EXIT_NEGATIVE
        assert capsys.readouterr().out.split() == ["true", "false"]

    def test_eval_needs_models(self):
        assert _run("eval", "--concept", "A") == EXIT_INPUT

    def test_bad_model_files(self, files, tmp_path):
        assert _run("eval", "--concept", "A", "--model", files["broken"]) == EXIT_INPUT
        assert _run("eval", "--concept", "A", "--model", str(tmp_path / "missing.json")) == EXIT_INPUT
        assert _run("eval", "--concept", "A", "--model", str(tmp_path)) == EXIT_INPUT

    def test_bisim(self, files):
        assert _run("bisim", "--model", files["keep"], "--model", files["keep"]) == EXIT_OK
        assert _run("bisim", "--model", files["keep"], "--model", files["drop"]) == EXIT_NEGATIVE
        assert _run("bisim", "--nr", "1", "--k", "1", "--model", files["keep"], "--model", files["drop"]) == EXIT_OK

    def test_subsume(self, capsys):
        assert _run("subsume", "--concept", "exists r.exists r.top", "--concept", "exists r.top") == EXIT_OK
        assert _run("subsume", "--concept", "exists r.top", "--concept", "exists r.exists r.top") == EXIT_NEGATIVE
        capsys.readouterr()
        assert _run("subsume", "--concept", "A", "--concept", "A or B", "--json") == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"subsumed": True, "method": "tableau"}
        assert _run("subsume", "--tableau", "--json", "--concept", "A and B", "--concept", "A") == EXIT_OK
        assert json.loads(capsys.readouterr().out)["method"] == "tableau"

    def test_sat_and_entail(self):
        assert _run("sat", "--concept", "A and not A") == EXIT_NEGATIVE
        assert _run("sat", "--concept", "exists r.A and forall r.B") == EXIT_OK
        assert _run("entail", "--concept", "forall r.bot", "--concept", "not exists r.A") == EXIT_OK

    def test_canonical_and_back(self, tmp_path, capsys):
        assert _run("canonical", "--concept", "A and exists r.B") == EXIT_OK
        model = tmp_path / "canonical.json"
        model.write_text(capsys.readouterr().out, encoding="utf-8")
        assert _run("tree2concept", "--model", str(model), "--json") == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"concept": "((exists r.B) and A)"}

    def test_dagger(self, files, capsys):
        assert _run("dagger", "--nc", "1", "--nr", "1", "--concept", "A", "--json") == EXIT_OK
        assert len(json.loads(capsys.readouterr().out)) == 1
        assert _run("dagger", "--sig", files["sig"], "--model", files["keep"], "--model", files["drop"]) == EXIT_OK
        assert _run("dagger", "--concept", "A") == EXIT_INPUT


class TestChangeCommands:

    def test_receive(self, files, capsys):
        assert _run("receive", "--sig", files["sig"], "--concept", "A", "--model", files["keep"], "--json") == EXIT_OK
        assert "result" in json.loads(capsys.readouterr().out)
        assert _run("receive", "--language", "el", "--sig", files["sig"], "--concept", "exists r.exists r.top",
                    "--model", files["keep"], "--json") == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"result": "(exists r.top)"}

    def test_evict(self, files):
        assert _run("evict", "--sig", files["sig"], "--concept", "exists r.top", "--model", files["drop"]) == EXIT_OK
        assert _run("evict", "--language", "el", "--sig", files["sig"], "--concept", "exists r.top",
                    "--model", files["drop"]) == EXIT_OK

    def test_bounded_operators_refuse_tall_models(self, files):
        assert _run("evict", "--language", "el", "--k", "2", "--sig", files["sig"], "--concept", "exists r.top",
                    "--model", files["tall"]) == EXIT_INPUT
        assert _run("receive", "--language", "el", "--sig", files["sig"], "--concept", "exists r.top",
                    "--model", files["tall"]) == EXIT_OK

    def test_revise(self, files):
        assert _run("revise", "--request", files["request"]) == EXIT_OK
        assert _run("revise", "--language", "el", "--request", files["request"]) == EXIT_OK
        assert _run("revise", "--sig", files["sig"], "--concept", "A") == EXIT_INPUT


class TestOracleCommands:

    def test_enumerate(self, capsys):
        assert _run("oracle", "enumerate", "--nr", "1", "--k", "2", "--json") == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["count"] == 4
        assert payload["models"][0] == "top"

    def test_caps(self):
        assert _run("oracle", "enumerate", "--nc", "3", "--nr", "1", "--k", "0") == EXIT_INPUT
        assert _run("oracle", "enumerate", "--nc", "3", "--nr", "1", "--k", "0", "--override") == EXIT_OK
        assert _run("oracle", "enumerate", "--nc", "1", "--nr", "1", "--k", "2", "--budget", "100") == EXIT_INPUT

    def test_modset(self, capsys):
        assert _run("oracle", "modset", "--nc", "1", "--nr", "1", "--k", "1", "--concept", "A", "--json") == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["size"] == 4
        assert len(payload["bits"]) == 8

    def test_chi(self, files, capsys):
        assert _run("oracle", "chi", "--language", "el", "--request", files["request"], "--json") == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["case"] == "i"
        assert payload["minima"]
        assert _run("oracle", "chi", "--nc", "1") == EXIT_INPUT

    def test_sampled_postulates(self, capsys):
        for operator in ("receive", "evict", "revise"):
            assert _run("oracle", "postulates", "--nc", "1", "--nr", "1", "--k", "1",
                        "--operator", operator) == EXIT_OK
        assert "fail" not in capsys.readouterr().out

    def test_postulates_on_a_request(self, files, capsys):
        assert _run("oracle", "postulates", "--request", files["request"], "--k", "2", "--json") == EXIT_OK
        verdicts = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert {v["status"] for v in verdicts} == {"pass"}
        assert verdicts[0]["fragment"]["language"] == "ALC"


class TestDemos:

    def test_single_demo(self, capsys):
        assert _run("demo", "--name", "two-role-characteristic") == EXIT_OK
        assert capsys.readouterr().out.startswith("[PASS] two-role-characteristic")

    def test_worked_example_numbers(self, capsys):
        assert _run("demo", "--name", "B16") == EXIT_OK
        assert capsys.readouterr().out.startswith("[PASS] two-role-characteristic")
        assert set(ALIASES.values()) == set(DEMOS)
        assert run_demo("6").name == "reflexive-point"

    def test_demo_arguments(self):
        assert _run("demo") == EXIT_INPUT
        assert _run("demo", "--name", "unknown") == EXIT_INPUT

    @pytest.mark.parametrize("demo_name", list(DEMOS))
    def test_every_demo_passes(self, demo_name):
        result = run_demo(demo_name)
        assert result.passed, result.render()

    def test_unknown_demo(self):
        with pytest.raises(ValueError):
            run_demo("unknown")


class TestGenericSignature:

    def test_names(self):
        sig = generic_signature(2, 2)
        assert sig.concept_names == ("A", "B")
        assert sig.role_names == ("r", "s")

    def test_limits(self):
        with pytest.raises(ValueError):
            generic_signature(-1, 0)
