"""
Report types shared across modules.
"""

from pydantic import BaseModel, ConfigDict, Field


class Violation(BaseModel):
    """One failed law instance: the law's name and the offending cell ids."""

    model_config = ConfigDict(frozen=True)

    law: str
    cells: list[str] = Field(default_factory=list)

    def __str__(self) -> str:
        return f"{self.law}: {', '.join(self.cells)}"


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    subject: str = ""
    violations: list[Violation] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def laws(self) -> set[str]:
        return {violation.law for violation in self.violations}

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None


class Counterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    cells: list[str]
    missing: str


class CheckReport(BaseModel):
    """Per-condition verdicts of a decision procedure.

    Every failed condition carries the first counterexample found in
    deterministic order.
    """

    model_config = ConfigDict(frozen=True)

    subject: str = ""
    verdicts: dict[str, bool] = Field(default_factory=dict)
    counterexamples: dict[str, Counterexample] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def failed(self) -> list[str]:
        return [tag for tag, verdict in self.verdicts.items() if not verdict]

    def verdict(self, tag: str) -> bool:
        return self.verdicts[tag]

    @classmethod
    def from_results(
        cls, subject: str, results: dict[str, Counterexample | None], notes: list[str] | None = None
    ) -> "CheckReport":
        """One verdict per condition; a condition passes iff it found no counterexample."""
        return cls(
            subject=subject,
            verdicts={tag: found is None for tag, found in results.items()},
            counterexamples={tag: found for tag, found in results.items() if found is not None},
            notes=notes or [],
        )


class PropertyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    subject: str = ""
    checked: int = 0
    discrepancies: list[Violation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies


class FreenessReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    free: bool
    generators: list[str] = Field(default_factory=list)
    reason: str | None = None
    counterexample: list[str] = Field(default_factory=list)
