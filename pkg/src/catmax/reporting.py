"""Shared verdict and report records.

Every checker in the package reports through these types so the CLI can
serialize results uniformly.  Reports are deterministic: checks are emitted
in a fixed order and witnesses preserve input declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

TOOL_VERSION = "catmax 0.1.0"

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class Failure:
    """One concrete counterexample found by a checker."""

    kind: str
    witnesses: tuple[str, ...] = ()
    message: str = ""


@dataclass
class Verdict:
    """Outcome of a single structural check, with the complete failure list."""

    check: str
    ok: bool
    failures: list[Failure] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passing(cls, check: str) -> "Verdict":
        return cls(check=check, ok=True)

    @classmethod
    def from_failures(cls, check: str, failures: list[Failure]) -> "Verdict":
        return cls(check=check, ok=not failures, failures=failures)

    def witnesses(self) -> tuple[str, ...]:
        out: list[str] = []
        for f in self.failures:
            out.extend(f.witnesses)
        return tuple(out)


@dataclass
class Check:
    """One line of a report: a named check on a named subject."""

    name: str
    status: str = PASS
    subject: str = ""
    witnesses: tuple[str, ...] = ()
    residual: float | None = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class Report:
    """All checks run against one fixture."""

    fixture: str
    checks: list[Check] = field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, checks: list[Check]) -> None:
        self.checks.extend(checks)

    def to_dict(self) -> dict:
        d: dict = {
            "fixture": self.fixture,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "subject": c.subject,
                    "witnesses": list(c.witnesses),
                    "residual": c.residual,
                    "message": c.message,
                }
                for c in self.checks
            ],
        }
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def verdict_to_check(v: Verdict, subject: str = "") -> Check:
    msg = "; ".join(f.message for f in v.failures if f.message)
    return Check(
        name=v.check,
        status=PASS if v.ok else FAIL,
        subject=subject,
        witnesses=v.witnesses(),
        message=msg,
    )


def numeric_check(name: str, subject: str, residual: float, tol: float) -> Check:
    ok = residual <= tol
    return Check(
        name=name,
        status=PASS if ok else FAIL,
        subject=subject,
        residual=float(residual),
        message="" if ok else f"residual {residual:.3e} exceeds {tol:.1e}",
    )
