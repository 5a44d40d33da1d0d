"""Batch driver: read a check plan, build instances, run suites, emit reports.

Plans are YAML documents::

    version: 1
    instances:
      - kind: monoid
        monoid: Z2
    bounds: {max_size: 2}          # optional; max_objects, exhaustive_limit
    suites: all                    # or a list drawn from SUITES
    mutations: [skew-rho-shift]    # optional
    report: {path: out.json, format: machine}
    seed: 0

Exit codes: 0 when nothing failed, 1 on any axiom failure or construction
error, 2 on malformed input or unwritable output.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .coherence import (Sampling, check_adjunction_triangles, check_closedness, check_left_braiding,
                        check_oplax_monoidal, check_right_braiding, check_skew_monoidal,
                        check_strong_action, check_symmetry, check_lax_monoidal)
from .construction import (build_braiding, build_lax_on_right_adjoint, build_oplax_on_left_adjoint,
                           build_skew_structure, invertibility_probe)
from .errors import MonoidError, SchemaError
from .instances import monoid
from .instances.registry import KINDS, Bundle, build_bundle
from .mutations import MUTATIONS
from .report import REPORT_SCHEMA, CheckReport

SUITES = ("skew", "action", "adjunction", "lax", "oplax", "braiding-left", "braiding-right",
          "symmetry", "closedness", "probes", "theorem-checks")
PREFLIGHT = ("action", "adjunction")
FORMATS = ("human", "machine")
DEFAULT_MAX_SIZE = 2

_TOP_FIELDS = {"version", "instances", "bounds", "suites", "mutations", "report", "seed"}
_BOUND_FIELDS = {"max_size", "max_objects", "exhaustive_limit"}
_REPORT_FIELDS = {"path", "format"}
_INSTANCE_FIELDS = {
    "monoid": {"monoid", "table", "name"},
    "self-action": {"mutated"},
    "copower": {"j"},
    "power": {"j"},
    "exponential": {"j"},
    "kan": {"category", "j", "functors"},
}


@dataclass
class Bounds:
    max_size: int = DEFAULT_MAX_SIZE
    max_objects: int | None = None
    exhaustive_limit: int | None = None

    def describe(self) -> str:
        return (f"max_size={self.max_size} max_objects={self.max_objects or 'all'} "
                f"exhaustive_limit={self.exhaustive_limit or 'none'}")


@dataclass
class CheckPlan:
    instances: list[dict]
    bounds: Bounds = field(default_factory=Bounds)
    suites: tuple[str, ...] = SUITES
    mutations: tuple[str, ...] = ()
    report_path: str | None = None
    report_format: str = "human"
    seed: int = 0
    version: int = 1
    defaults: list[str] = field(default_factory=list)


# -- parsing -------------------------------------------------------------------

def _line_index(node, path=(), out=None) -> dict:
    """Map key paths of a composed YAML tree to 1-based line numbers."""
    out = {} if out is None else out
    out.setdefault(path, node.start_mark.line + 1)
    if isinstance(node, yaml.MappingNode):
        for k, v in node.value:
            key = k.value
            out[path + (key,)] = k.start_mark.line + 1
            _line_index(v, path + (key,), out)
    elif isinstance(node, yaml.SequenceNode):
        for i, v in enumerate(node.value):
            _line_index(v, path + (i,), out)
    return out


def _int(value, name, line, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise SchemaError(name, f"expected an integer >= {minimum}, got {value!r}", line)
    return value


def parse_spec(text: str) -> CheckPlan:
    try:
        root = yaml.compose(text)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise SchemaError("document", str(exc.problem), mark.line + 1 if mark else None) from None
    if not isinstance(data, dict):
        raise SchemaError("document", "expected a mapping at the top level", 1)
    lines = _line_index(root)

    def where(*path):
        return lines.get(path)

    for key in data:
        if key not in _TOP_FIELDS:
            raise SchemaError(str(key), "unknown field", where(key))
    if "version" not in data:
        raise SchemaError("version", "missing", 1)
    if data["version"] != 1:
        raise SchemaError("version", f"unsupported version {data['version']!r} (expected 1)", where("version"))
    plan = CheckPlan(instances=[])

    bounds = data.get("bounds")
    if bounds is None:
        plan.defaults.append(f"bounds.max_size={DEFAULT_MAX_SIZE} (default)")
    else:
        if not isinstance(bounds, dict):
            raise SchemaError("bounds", "expected a mapping", where("bounds"))
        for key in bounds:
            if key not in _BOUND_FIELDS:
                raise SchemaError(f"bounds.{key}", "unknown field", where("bounds", key))
        if "max_size" in bounds:
            plan.bounds.max_size = _int(bounds["max_size"], "bounds.max_size", where("bounds", "max_size"))
        else:
            plan.defaults.append(f"bounds.max_size={DEFAULT_MAX_SIZE} (default)")
        for key in ("max_objects", "exhaustive_limit"):
            if bounds.get(key) is not None:
                setattr(plan.bounds, key, _int(bounds[key], f"bounds.{key}", where("bounds", key)))

    suites = data.get("suites", "all")
    if suites == "all":
        plan.suites = SUITES
    elif isinstance(suites, list):
        for i, s in enumerate(suites):
            if s not in SUITES:
                raise SchemaError(f"suites[{i}]", f"unknown suite {s!r}; known: {', '.join(SUITES)}",
                                  where("suites", i))
        plan.suites = tuple(s for s in SUITES if s in suites)
    else:
        raise SchemaError("suites", "expected 'all' or a list of suite names", where("suites"))

    mutations = data.get("mutations") or []
    if not isinstance(mutations, list):
        raise SchemaError("mutations", "expected a list of fixture names", where("mutations"))
    for i, name in enumerate(mutations):
        if name != "all" and name not in MUTATIONS:
            raise SchemaError(f"mutations[{i}]", f"unknown mutation {name!r}", where("mutations", i))
    plan.mutations = tuple(MUTATIONS) if "all" in mutations else tuple(mutations)

    instances = data.get("instances") or []
    if not isinstance(instances, list):
        raise SchemaError("instances", "expected a list", where("instances"))
    if not instances and not plan.mutations:
        raise SchemaError("instances", "a plan needs at least one instance or mutation", where("instances") or 1)
    for i, inst in enumerate(instances):
        plan.instances.append(_validate_instance(inst, i, where))

    report = data.get("report") or {}
    if not isinstance(report, dict):
        raise SchemaError("report", "expected a mapping", where("report"))
    for key in report:
        if key not in _REPORT_FIELDS:
            raise SchemaError(f"report.{key}", "unknown field", where("report", key))
    plan.report_path = report.get("path")
    fmt = report.get("format", "human")
    if fmt not in FORMATS:
        raise SchemaError("report.format", f"expected human or machine, got {fmt!r}", where("report", "format"))
    plan.report_format = fmt

    if "seed" in data:
        plan.seed = _int(data["seed"], "seed", where("seed"), minimum=0)
    return plan


def _validate_instance(inst, i, where) -> dict:
    tag = f"instances[{i}]"
    if not isinstance(inst, dict):
        raise SchemaError(tag, "expected a mapping", where("instances", i))
    kind = inst.get("kind")
    if kind not in _INSTANCE_FIELDS:
        raise SchemaError(f"{tag}.kind", f"unknown instance kind {kind!r}; known: {', '.join(KINDS)}",
                          where("instances", i, "kind") or where("instances", i))
    for key in inst:
        if key != "kind" and key not in _INSTANCE_FIELDS[kind]:
            raise SchemaError(f"{tag}.{key}", f"unknown field for kind {kind}", where("instances", i, key))
    if "j" in inst and kind != "kan":
        _int(inst["j"], f"{tag}.j", where("instances", i, "j"), minimum=0)
    if kind == "monoid":
        try:
            if "table" in inst:
                monoid.MonoidTable.from_rows(inst["table"])
            else:
                from .instances.registry import _named_monoid
                _named_monoid(str(inst.get("monoid", "Z2")))
        except (MonoidError, SchemaError) as exc:
            field_name = "table" if "table" in inst else "monoid"
            raise SchemaError(f"{tag}.{field_name}", str(exc), where("instances", i, field_name)) from None
    return dict(inst)


# -- running -------------------------------------------------------------------

@dataclass
class Section:
    """Reports for one instance (or one mutation fixture)."""

    label: str
    header: list[str] = field(default_factory=list)
    reports: list[CheckReport] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    expect_failure: bool = False

    def to_dict(self) -> dict:
        return {"label": self.label, "header": list(self.header), "errors": list(self.errors),
                "expect_failure": self.expect_failure, "reports": [r.to_dict() for r in self.reports]}

    @classmethod
    def from_dict(cls, d: dict) -> Section:
        return cls(d["label"], list(d["header"]), [CheckReport.from_dict(r) for r in d["reports"]],
                   list(d["errors"]), d["expect_failure"])


@dataclass
class RunReport:
    bounds: Bounds
    seed: int
    sections: list[Section] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def failure_count(self) -> int:
        return sum(len(r.failures) for s in self.sections for r in s.reports)

    @property
    def error_count(self) -> int:
        return sum(len(s.errors) + sum(len(r.errors) for r in s.reports) for s in self.sections)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0 and self.error_count == 0

    def aggregate(self) -> CheckReport:
        out = CheckReport("aggregate", notes=[f"bounds: {self.bounds.describe()}"])
        for s in self.sections:
            for r in s.reports:
                out = out.merge(r, "aggregate")
            out.errors.extend(f"{s.label}: {e}" for e in s.errors)
        return out

    def suite_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for s in self.sections:
            for r in s.reports:
                counts[r.suite] = counts.get(r.suite, 0) + len(r.checked)
        return counts

    def to_dict(self) -> dict:
        return {"schema": REPORT_SCHEMA,
                "bounds": {"max_size": self.bounds.max_size, "max_objects": self.bounds.max_objects,
                           "exhaustive_limit": self.bounds.exhaustive_limit},
                "seed": self.seed, "notes": list(self.notes),
                "totals": {"failures": self.failure_count, "errors": self.error_count,
                           "checked": sum(self.suite_counts().values())},
                "sections": [s.to_dict() for s in self.sections]}

    @classmethod
    def from_dict(cls, d: dict) -> RunReport:
        if d.get("schema") != REPORT_SCHEMA:
            raise SchemaError("schema", f"expected {REPORT_SCHEMA}, got {d.get('schema')!r}")
        return cls(Bounds(**d["bounds"]), d["seed"], [Section.from_dict(s) for s in d["sections"]],
                   list(d["notes"]))


def _left_palette(b: Bundle):
    """The palette living in the source of the left adjoint."""
    return (b.a_palette, b.v_palette) if b.variant[1] == "L" else (b.v_palette, b.a_palette)


def _run_suite(section: Section, name: str, thunk):
    try:
        rep = thunk()
    except MemoryError:
        section.errors.append(f"{name}: out of memory at these bounds")
        return None
    except Exception as exc:  # construction failures become per-suite diagnostics
        section.errors.append(f"{name}: {type(exc).__name__}: {exc}")
        return None
    if rep is not None:
        section.reports.append(rep)
    return rep


def run_instance(params: dict, plan: CheckPlan, suites=None) -> Section:
    suites = plan.suites if suites is None else suites
    bounds = plan.bounds
    sampling = Sampling(bounds.exhaustive_limit, plan.seed) if bounds.exhaustive_limit else None
    try:
        b = build_bundle(params, bounds.max_size, bounds.max_objects)
    except Exception as exc:
        return Section(f"{params.get('kind')}", errors=[f"construction: {type(exc).__name__}: {exc}"])
    section = Section(b.label, header=[f"variant {b.variant}", *b.header])
    section.header.append(f"palette: {len(b.a_palette)} objects acted on, {len(b.v_palette)} acting")

    left_pal, right_pal = _left_palette(b)
    pre = []
    if not b.infeasible:
        pre.append(_run_suite(section, "action",
                              lambda: check_strong_action(b.action, b.v_palette, b.a_palette, sampling)))
        pre.append(_run_suite(section, "adjunction",
                              lambda: check_adjunction_triangles(b.adjunction, left_pal, right_pal)))
    if any(r is None or not r.ok for r in pre):
        section.header.append("pre-flight failed: remaining suites skipped")
        return section
    try:
        b.skew = build_skew_structure(b.action, b.adjunction)
    except Exception as exc:
        section.errors.append(f"construction: {type(exc).__name__}: {exc}")
        return section
    if b.infeasible:
        section.header.append(f"infeasible at these bounds: {b.infeasible}; only cardinalities checked")
        if "theorem-checks" in suites:
            _run_suite(section, "theorem-checks", b.theorem_checks)
        return section

    D = b.skew
    skipped = []
    for suite in suites:
        if suite in PREFLIGHT:
            continue
        if suite == "skew":
            _run_suite(section, suite, lambda: check_skew_monoidal(D, b.a_palette, sampling))
        elif suite in ("lax", "oplax", "probes") and not b.native:
            skipped.append(f"{suite} (variant {b.variant}; built for native LL presentations)")
        elif suite == "lax":
            _run_suite(section, suite, lambda: check_lax_monoidal(
                build_lax_on_right_adjoint(b.action, b.adjunction, D), b.v_palette, sampling))
        elif suite == "oplax":
            _run_suite(section, suite, lambda: check_oplax_monoidal(
                build_oplax_on_left_adjoint(b.action, b.adjunction, D, b.fusion), b.a_palette, sampling))
        elif suite == "probes":
            _run_suite(section, suite, lambda: invertibility_probe(
                D, b.fusion, b.adjunction, b.a_palette).to_report())
        elif suite in ("braiding-left", "braiding-right", "symmetry"):
            want = {"braiding-left": "LL", "braiding-right": "RR"}.get(suite, b.braiding_variant)
            if b.braiding is None or b.braiding_variant != want:
                skipped.append(f"{suite} (no braiding of this side)")
                continue
            check = {"braiding-left": check_left_braiding, "braiding-right": check_right_braiding}
            _run_suite(section, suite, lambda: _braiding_suite(b, D, suite, check.get(suite), sampling))
        elif suite == "closedness":
            if not b.closedness:
                skipped.append("closedness (no internal-hom candidate)")
            for cand in b.closedness:
                _run_suite(section, suite, lambda c=cand: check_closedness(D, c, b.a_palette, b.arrows))
        elif suite == "theorem-checks":
            if b.theorem_checks is None:
                skipped.append("theorem-checks (none for this kind)")
            else:
                _run_suite(section, suite, b.theorem_checks)
    if skipped:
        section.header.append("skipped: " + "; ".join(skipped))
    return section


def _braiding_suite(b: Bundle, D, suite, check, sampling):
    sb = build_braiding(b.action, b.adjunction, b.braiding, b.braiding_variant, b.a_palette, D)
    if check is None:
        return check_symmetry(sb, b.a_palette)
    return check(sb, b.a_palette, sampling)


def run_mutation(name: str) -> Section:
    m = MUTATIONS[name]
    section = Section(f"mutation {name}", header=[f"suite {m.suite}: {m.description}"], expect_failure=True)
    _run_suite(section, m.suite, m.run)
    return section


def run_checks(plan: CheckPlan, suites=None) -> RunReport:
    out = RunReport(plan.bounds, plan.seed, notes=list(plan.defaults))
    for params in plan.instances:
        out.sections.append(run_instance(params, plan, suites))
    for name in plan.mutations:
        out.sections.append(run_mutation(name))
    return out


# -- output --------------------------------------------------------------------

def render_human(run: RunReport) -> str:
    lines = [f"skewact report ({REPORT_SCHEMA})", f"bounds: {run.bounds.describe()} seed={run.seed}"]
    lines += [f"note: {n}" for n in run.notes]
    for s in run.sections:
        lines.append(f"== {s.label}")
        lines += [f"  # {h}" for h in s.header]
        for r in s.reports:
            lines.append(f"  {r.summary()}")
            lines += [f"    - {f.describe()}" for f in r.failures]
            lines += [f"    error: {e}" for e in r.errors]
            lines += [f"    note: {n}" for n in r.notes]
        lines += [f"  ERROR {e}" for e in s.errors]
        if s.expect_failure and not any(r.failures for r in s.reports):
            lines.append("  ! mutation not detected")
    counts = run.suite_counts()
    lines.append("per-suite checks: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    status = "PASS" if run.ok else "FAIL"
    lines.append(f"{status}: {sum(counts.values())} checked, {run.failure_count} failed, "
                 f"{run.error_count} errors")
    return "\n".join(lines) + "\n"


def emit_report(run: RunReport, fmt: str = "human") -> str:
    if fmt == "machine":
        return json.dumps(run.to_dict(), indent=2, sort_keys=True) + "\n"
    if fmt == "human":
        return render_human(run)
    raise SchemaError("format", f"expected human or machine, got {fmt!r}")


def load_report(text: str) -> RunReport:
    return RunReport.from_dict(json.loads(text))


# -- entry point -----------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewact", description="Build and verify skew monoidal structures "
                                "induced by strong actions and adjunctions on finite carriers.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, text in (("check", "run a check plan"), ("probe", "run invertibility probes only")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("spec_file")
        sp.add_argument("--max-size", type=int)
        sp.add_argument("--report")
        sp.add_argument("--format", choices=FORMATS)
        sp.add_argument("--seed", type=int)
    sub.add_parser("instances", help="list instance kinds, suites and mutation fixtures")
    return p


def _list_instances() -> str:
    lines = ["instance kinds:"]
    lines += [f"  {k}: {v}" for k, v in KINDS.items()]
    lines.append("suites: " + ", ".join(SUITES))
    lines.append("mutation fixtures:")
    lines += [f"  {m.name} [{m.suite}]: {m.description}" for m in MUTATIONS.values()]
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "instances":
        sys.stdout.write(_list_instances())
        return 0
    try:
        plan = parse_spec(Path(args.spec_file).read_text())
    except OSError as exc:
        print(f"error: cannot read {args.spec_file}: {exc}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.max_size is not None:
        if args.max_size < 1:
            print("error: --max-size must be >= 1", file=sys.stderr)
            return 2
        plan.bounds.max_size = args.max_size
    if args.seed is not None:
        plan.seed = args.seed
    if args.format:
        plan.report_format = args.format
    if args.report:
        plan.report_path = args.report

    run = run_checks(plan, ("probes",) if args.command == "probe" else None)
    document = emit_report(run, plan.report_format)
    if plan.report_path:
        try:
            Path(plan.report_path).write_text(document)
        except OSError as exc:
            print(f"error: cannot write report to {plan.report_path}: {exc}", file=sys.stderr)
            return 2
        sys.stdout.write(render_human(run))
    else:
        sys.stdout.write(document)
    return 0 if run.ok else 1


if __name__ == "__main__":
    sys.exit(main())
