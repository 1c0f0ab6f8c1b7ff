"""Check reports shared by the verification entry points."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Check", "VerificationReport"]


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = ""

    def to_dict(self):
        d = {"name": self.name, "pass": self.passed}
        if self.witness:
            d["witness"] = self.witness
        return d


@dataclass
class VerificationReport:
    """An ordered list of named checks; passes iff no check failed."""

    subject: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=""):
        self.checks.append(Check(name, bool(passed), witness))
        return self

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "subject": self.subject,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def summary(self, verbose=False):
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'} "
                 f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)"]
        for c in self.checks:
            if verbose or not c.passed:
                mark = "ok " if c.passed else "FAIL"
                line = f"  [{mark}] {c.name}"
                if c.witness and not c.passed:
                    line += f": {c.witness}"
                lines.append(line)
        return "\n".join(lines)
