"""Check reports: what was checked, what failed, and where."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

REPORT_SCHEMA = "skewact-report/1"


@dataclass(frozen=True)
class Difference:
    """Where two parallel morphisms disagree.

    ``witness`` is the first element (under the domain's order) at which they
    differ; for morphisms with several components it is prefixed by the
    component index.
    """

    witness: Any
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class Failure:
    axiom: str
    objects: tuple[str, ...]
    witness: str
    lhs: str = ""
    rhs: str = ""

    def describe(self) -> str:
        objs = ", ".join(self.objects)
        out = f"{self.axiom} at ({objs}): witness {self.witness}"
        if self.lhs or self.rhs:
            out += f"  lhs={self.lhs} rhs={self.rhs}"
        return out


@dataclass
class CheckReport:
    suite: str
    checked: list[tuple[str, tuple[str, ...]]] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return len(self.checked) - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.errors

    def record(self, axiom: str, objects, diff: Difference | None = None, detail: str | None = None):
        objs = tuple(str(o) for o in objects)
        self.checked.append((axiom, objs))
        if diff is not None:
            self.failures.append(Failure(axiom, objs, repr(diff.witness), repr(diff.lhs), repr(diff.rhs)))
        elif detail is not None:
            self.failures.append(Failure(axiom, objs, detail))

    def fail(self, axiom: str, objects, witness: str):
        """Record a checked instance that failed with a free-form witness."""
        self.record(axiom, objects, detail=witness)

    def count(self, axiom: str) -> int:
        return sum(1 for a, _ in self.checked if a == axiom)

    def failures_for(self, axiom: str) -> list[Failure]:
        return [f for f in self.failures if f.axiom == axiom]

    def merge(self, other: CheckReport, suite: str | None = None) -> CheckReport:
        return CheckReport(suite or self.suite,
                           self.checked + other.checked,
                           self.failures + other.failures,
                           self.errors + other.errors,
                           self.notes + other.notes)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.suite}: {len(self.checked)} checked, "
                f"{self.passed} passed, {len(self.failures)} failed"
                + (f", {len(self.errors)} errors" if self.errors else ""))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["checked"] = [[a, list(o)] for a, o in self.checked]
        d["failures"] = [{**asdict(f), "objects": list(f.objects)} for f in self.failures]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        return cls(d["suite"],
                   [(a, tuple(o)) for a, o in d["checked"]],
                   [Failure(f["axiom"], tuple(f["objects"]), f["witness"], f["lhs"], f["rhs"])
                    for f in d["failures"]],
                   list(d["errors"]),
                   list(d["notes"]))
