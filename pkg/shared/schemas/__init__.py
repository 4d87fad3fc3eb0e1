"""Pydantic documents for complexes, ideals and reports."""

from .documents import ComplexDoc, HomologyDoc, IdealDoc
from .reports import (
    AuditReport,
    BatteryReport,
    CheckResultDoc,
    DepthReportDoc,
    FieldAudit,
    ImplicationItem,
    VerdictDoc,
)
