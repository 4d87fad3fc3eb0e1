"""JSON documents in, JSON or markdown out."""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Type

from pydantic import ValidationError

from shared.complexes.simplicial import SimplicialComplex
from shared.errors import ComplexError, IdealError, SrsqError
from shared.ideals.monomial import MonomialIdeal
from shared.schemas.documents import ComplexDoc, IdealDoc


def read_json(path: Optional[str]) -> Dict[str, Any]:
    try:
        text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    except OSError as e:
        raise ComplexError(f"cannot read {path}: {e.strerror or e}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexError(f"input is not JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ComplexError(f"input must be a JSON object, got {type(doc).__name__}")
    return doc


def parse_json_arg(text: str, option: str, expect: type, error: Type[SrsqError] = ComplexError) -> Any:
    """Decode a JSON-valued command-line option."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise error(f"{option} is not valid JSON: {text!r}") from e
    if not isinstance(value, expect):
        raise error(f"{option} must be a JSON {expect.__name__}, got {text!r}")
    return value


def complex_from_doc(doc: Dict[str, Any], allow_ghost_vertices: bool = False) -> SimplicialComplex:
    try:
        parsed = ComplexDoc.parse_obj(doc)
    except ValidationError as e:
        raise ComplexError(str(e)) from e
    return parsed.to_complex(allow_ghost_vertices=allow_ghost_vertices)


def ideal_from_doc(doc: Dict[str, Any]) -> MonomialIdeal:
    try:
        parsed = IdealDoc.parse_obj(doc)
    except ValidationError as e:
        raise IdealError(str(e)) from e
    return parsed.to_ideal()


def read_complex(path: Optional[str], allow_ghost_vertices: bool = False) -> SimplicialComplex:
    return complex_from_doc(read_json(path), allow_ghost_vertices=allow_ghost_vertices)


def read_ideal(path: Optional[str]) -> MonomialIdeal:
    return ideal_from_doc(read_json(path))


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def complex_payload(delta: SimplicialComplex, **extra: Any) -> Dict[str, Any]:
    out: Dict[str, Any] = ComplexDoc.from_complex(delta).dict(exclude_none=True)
    out.update(extra)
    return out


def ideal_payload(ideal: MonomialIdeal) -> Dict[str, Any]:
    return IdealDoc.from_ideal(ideal).dict()


def emit(args, payload: Any, markdown: Optional[str] = None) -> None:
    if getattr(args, "format", "json") == "md" and markdown is not None:
        sys.stdout.write(markdown.rstrip("\n") + "\n")
    else:
        sys.stdout.write(dumps(payload) + "\n")


def md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        lines.append("| " + " | ".join(str(c) for c in r) + " |")
    return "\n".join(lines)
