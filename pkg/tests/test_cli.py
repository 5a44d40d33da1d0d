import json
from pathlib import Path

import pytest

from skewact.cli import (DEFAULT_MAX_SIZE, SUITES, emit_report, load_report, main, parse_spec,
                         render_human, run_checks)
from skewact.errors import SchemaError
from skewact.mutations import MUTATIONS

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def plan_text(*lines):
    return "\n".join(lines) + "\n"


class TestParsing:
    def test_minimal_plan(self):
        plan = parse_spec(plan_text("version: 1", "instances:", "  - kind: monoid", "    monoid: Z2"))
        assert plan.instances[0]["kind"] == "monoid"
        assert plan.suites == SUITES
        assert plan.bounds.max_size == DEFAULT_MAX_SIZE
        assert any("max_size" in d and "default" in d for d in plan.defaults)

    def test_unknown_suite_names_field_and_line(self):
        text = plan_text("version: 1", "instances:", "  - kind: monoid", "    monoid: Z2",
                         "suites:", "  - skew", "  - hexagon")
        with pytest.raises(SchemaError) as exc:
            parse_spec(text)
        assert exc.value.field == "suites[1]" and exc.value.line == 7
        assert "hexagon" in str(exc.value)

    @pytest.mark.parametrize("text,fld", [
        (plan_text("version: 2", "instances: [{kind: monoid}]"), "version"),
        (plan_text("version: 1", "instances: [{kind: monoid}]", "colour: red"), "colour"),
        (plan_text("version: 1", "instances: [{kind: monoid}]", "bounds: {max_size: 0}"), "bounds.max_size"),
        (plan_text("version: 1", "instances: [{kind: monoid}]", "report: {format: xml}"), "report.format"),
        (plan_text("version: 1", "mutations: [no-such-fixture]"), "mutations[0]"),
        (plan_text("version: 1", "instances: [{kind: power, monoid: Z2}]"), "instances[0].monoid"),
        (plan_text("version: 1"), "instances"),
    ])
    def test_schema_errors(self, text, fld):
        with pytest.raises(SchemaError) as exc:
            parse_spec(text)
        assert exc.value.field == fld

    def test_mutations_all_expands(self):
        plan = parse_spec(plan_text("version: 1", "mutations: [all]"))
        assert plan.mutations == tuple(MUTATIONS)

    def test_every_fixture_parses(self):
        for path in FIXTURES.glob("*.yaml"):
            parse_spec(path.read_text())


class TestRunning:
    def test_z2_all_suites_pass_with_checks_everywhere(self):
        run = run_checks(parse_spec((FIXTURES / "z2_all.yaml").read_text()))
        assert run.ok
        counts = run.suite_counts()
        assert counts and all(v > 0 for v in counts.values())
        assert len(counts) >= 10

    def test_or_probes_report_the_non_invertible_associator(self):
        run = run_checks(parse_spec((FIXTURES / "or_probes.yaml").read_text()))
        assert run.ok
        notes = [n for s in run.sections for r in s.reports for n in r.notes]
        gamma = [n for n in notes if n.startswith("gamma:")]
        assert gamma and "NOT invertible" in gamma[0] and "not injective" in gamma[0]

    def test_machine_report_round_trips(self):
        run = run_checks(parse_spec(plan_text("version: 1", "instances: [{kind: monoid, monoid: Z2}]",
                                              "suites: [skew, probes]")))
        again = load_report(emit_report(run, "machine"))
        assert again.to_dict() == run.to_dict()
        assert json.loads(emit_report(run, "machine"))["totals"]["failures"] == 0

    def test_failing_machine_report_carries_witnesses(self):
        run = run_checks(parse_spec(plan_text("version: 1", "mutations: [skew-rho-shift]")))
        doc = json.loads(emit_report(run, "machine"))
        failures = [f for s in doc["sections"] for r in s["reports"] for f in r["failures"]]
        assert failures and doc["totals"]["failures"] == len(failures)
        assert all(f["axiom"] and f["objects"] and f["witness"] for f in failures)

    def test_human_report_lists_bounds_and_status(self):
        run = run_checks(parse_spec(plan_text("version: 1", "instances: [{kind: monoid, monoid: Z2}]",
                                              "suites: [skew]")))
        text = render_human(run)
        assert "max_size=2" in text and "PASS skew-monoidal" in text
        assert text.rstrip().splitlines()[-1].startswith("PASS:")

    def test_mutated_self_action_fails_preflight(self):
        run = run_checks(parse_spec(plan_text("version: 1",
                                              "instances: [{kind: self-action, mutated: true}]")))
        assert not run.ok
        assert any("pre-flight failed" in h for h in run.sections[0].header)


class TestMain:
    def test_clean_plan_exits_zero(self, capsys):
        assert main(["check", str(FIXTURES / "or_probes.yaml")]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_mutation_plan_exits_one(self, tmp_path, capsys):
        spec = tmp_path / "m.yaml"
        spec.write_text(plan_text("version: 1", "mutations: [skew-rho-shift, naturality-fixed-point]"))
        assert main(["check", str(spec)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "mutation not detected" not in out

    def test_schema_error_exits_two(self, tmp_path, capsys):
        spec = tmp_path / "bad.yaml"
        spec.write_text(plan_text("version: 1", "instances: [{kind: monoid}]", "suites: [hexagon]"))
        assert main(["check", str(spec)]) == 2
        assert "suites[0]" in capsys.readouterr().err

    def test_missing_file_exits_two(self, tmp_path):
        assert main(["check", str(tmp_path / "absent.yaml")]) == 2

    def test_report_under_a_regular_file_exits_two(self, tmp_path):
        blocker = tmp_path / "plain"
        blocker.write_text("")
        assert main(["check", str(FIXTURES / "or_probes.yaml"), "--report", str(blocker / "r.json")]) == 2

    def test_report_into_missing_directory_exits_two(self, tmp_path):
        target = tmp_path / "no" / "such" / "dir" / "r.json"
        assert main(["check", str(FIXTURES / "or_probes.yaml"), "--report", str(target)]) == 2

    def test_report_file_and_flags(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        code = main(["check", str(FIXTURES / "or_probes.yaml"), "--report", str(out),
                     "--format", "machine", "--max-size", "1", "--seed", "5"])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["bounds"]["max_size"] == 1 and doc["seed"] == 5
        assert "PASS" in capsys.readouterr().out

    def test_probe_subcommand_runs_only_probes(self, capsys):
        assert main(["probe", str(FIXTURES / "z2_all.yaml"), "--format", "machine"]) == 0
        doc = json.loads(capsys.readouterr().out)
        suites = {r["suite"] for s in doc["sections"] for r in s["reports"]}
        assert "probes" in suites and "skew-monoidal" not in suites

    def test_instances_lists_everything(self, capsys):
        assert main(["instances"]) == 0
        out = capsys.readouterr().out
        for name in MUTATIONS:
            assert name in out
        assert "kan" in out and "closedness" in out

    def test_bad_max_size_exits_two(self):
        assert main(["check", str(FIXTURES / "or_probes.yaml"), "--max-size", "0"]) == 2
