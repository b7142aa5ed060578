"""
Machine-readable command reports.
"""

from pydantic import BaseModel, ConfigDict, Field

from dblhatch.utils.types import CheckReport, Counterexample

SCHEMA = 1


class Report(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_version: int = Field(default=SCHEMA, serialization_alias="schema")
    command: str
    inputs: list[str] = Field(default_factory=list)
    passed: bool = False
    verdicts: dict[str, bool] = Field(default_factory=dict)
    counterexamples: dict[str, Counterexample] = Field(default_factory=dict)
    witnesses: dict[str, str] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)
    budget: int | None = None
    seed: int | None = None
    error: str | None = None
    timing: float | None = None

    @classmethod
    def from_check(cls, command: str, inputs: list[str], report: CheckReport, **extra) -> "Report":
        return cls(
            command=command,
            inputs=inputs,
            passed=report.passed,
            verdicts=dict(report.verdicts),
            counterexamples=dict(report.counterexamples),
            notes=list(report.notes),
            **extra,
        )

    def to_json(self) -> str:
        """Deterministic JSON; unset optional fields are left out."""
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        for tag, verdict in self.verdicts.items():
            line = f"  {tag}: {'pass' if verdict else 'fail'}"
            found = self.counterexamples.get(tag)
            if found is not None:
                line += f" ({found.missing}: {', '.join(found.cells)})"
            lines.append(line)
        lines.extend(f"  {key}: {value}" for key, value in self.witnesses.items())
        lines.extend(f"  note: {note}" for note in self.notes)
        if self.error:
            lines.append(f"  error: {self.error}")
        return "\n".join(lines)
