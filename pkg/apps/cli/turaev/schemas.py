"""Pydantic schemas for command output and batch reports."""
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from .config import settings

CheckStatus = Literal["pass", "fail", "skipped"]


def _schema_version() -> str:
    return settings.schema_version


# Diagram schemas
class DiagnosticOut(BaseModel):
    code: str
    message: str
    location: str = ""
    severity: Literal["error", "warning"] = "error"


class ParseResult(BaseModel):
    pd: str
    crossings: int
    components: int
    writhe: int
    signs: list[int]
    alternating: bool
    reduced: bool
    diagnostics: list[DiagnosticOut] = []
    schema_version: str = Field(default_factory=_schema_version)


# States schemas
class GenusResult(BaseModel):
    c: int
    sA: int
    sB: int
    genus: int
    schema_version: str = Field(default_factory=_schema_version)


class AdequacySummary(BaseModel):
    A_adequate: bool
    B_adequate: bool
    adequate: bool
    inadequate: bool


class AdequacyResult(AdequacySummary):
    schema_version: str = Field(default_factory=_schema_version)


# Polynomial schemas
class JonesResult(BaseModel):
    writhe: int
    bracket: str
    jones_q: str
    jones_t: Optional[str] = None
    terms_q: list[tuple[int, int]] = Field(description="(exponent, coefficient) pairs in q = t^(1/2)")
    schema_version: str = Field(default_factory=_schema_version)


class SpanSummary(BaseModel):
    span: int
    crossings: int
    genus: int
    adequate: bool
    bound: int
    slack: int
    holds: bool


class SpanResult(SpanSummary):
    schema_version: str = Field(default_factory=_schema_version)


class PolyResult(BaseModel):
    polynomial: str
    variables: list[str]
    terms: list[list[int]]
    matches: Optional[bool] = None
    detail: dict[str, Any] = {}
    schema_version: str = Field(default_factory=_schema_version)


# Batch schemas
class CheckOutcome(BaseModel):
    name: str
    status: CheckStatus
    reason: str = ""


class EntryReport(BaseModel):
    name: str
    code: str
    crossings: int
    components: int
    sA: int
    sB: int
    genus: int
    alternating: bool
    adequacy: AdequacySummary
    jones_q: str
    span: SpanSummary
    width: Optional[int] = None
    checks: list[CheckOutcome] = []
    seconds: Optional[float] = None

    @property
    def failed(self) -> list[CheckOutcome]:
        return [c for c in self.checks if c.status == "fail"]


class RunOptions(BaseModel):
    khovanov: bool = False
    khovanov_cap: int = 9
    field: Literal["q", "f2"] = "q"
    state_cap: int = Field(default_factory=lambda: settings.state_cap)
    jobs: int = 1
    timings: bool = False


class RunReport(BaseModel):
    schema_version: str = Field(default_factory=_schema_version)
    options: RunOptions
    entries: list[EntryReport] = []
    diagnostics: list[DiagnosticOut] = []
    summary: dict[str, int] = {}

    @property
    def ok(self) -> bool:
        return self.summary.get("fail", 0) == 0
