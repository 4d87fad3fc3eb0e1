from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field


class VerdictDoc(BaseModel):
    holds: bool
    field: str = ""
    certificate: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = {}


class DepthReportDoc(BaseModel):
    depth: int = Field(ge=0)
    dim: int
    is_cm: bool
    field: str
    witness: Optional[Dict[str, Any]] = None
    search_space: int = 0
    via: str = "takayama"
    factors: List[Dict[str, Any]] = []


class FieldAudit(BaseModel):
    cohen_macaulay: VerdictDoc
    gorenstein: VerdictDoc
    locally_gorenstein: VerdictDoc
    cm_square: DepthReportDoc
    cm_symbolic_square: DepthReportDoc
    cm_radical: DepthReportDoc


class ImplicationItem(BaseModel):
    name: str
    kind: Literal["implies", "iff"] = "implies"
    premise: Optional[bool] = None
    conclusion: Optional[bool] = None
    status: Literal["ok", "vacuous", "violated", "unchecked"]
    note: Optional[str] = None


class AuditReport(BaseModel):
    subject: str
    n: int
    facets: List[List[int]]
    field_battery: List[str]
    dim: int
    codim: int
    condition1_gorenstein: Dict[str, bool]
    condition2_link_diameter: VerdictDoc
    s2_criterion: Optional[VerdictDoc] = None
    condition3: Optional[VerdictDoc] = None
    sym2_triangles: VerdictDoc
    sym2_direct: bool
    depth2_criterion: Optional[VerdictDoc] = None
    per_field: Dict[str, FieldAudit]
    implications: List[ImplicationItem]
    violations: List[str] = []

    @property
    def ok(self) -> bool:
        return not self.violations


class CheckResultDoc(BaseModel):
    slug: str
    title: str
    passed: Optional[bool]
    seconds: Optional[float] = Field(None, ge=0)
    details: Dict[str, Any] = {}


class BatteryReport(BaseModel):
    field_battery: List[str]
    budget: int
    seed: int
    results: List[CheckResultDoc]

    @property
    def passed(self) -> bool:
        return all(r.passed is not False for r in self.results)
