"""
DBLX, the line-oriented text format for every dblhatch object.

A document starts with a header ``DBLX 1 <kind> [name]`` and ends with
``END``. Every other line is one record, introduced by a section keyword::

    DBLX 1 dblcat TwoH
    OBJECTS: 0 1
    HMOR a: 0 -> 1
    VMOR e_0: 0 => 0
    SQ e_a: [a; a; e_0; e_1]
    IDH 0 = id_0
    HCOMP a*id_0 = a
    SQV e_a.e_a = e_a
    ...
    END

Functors, pseudo functors and transformations carry their source and
target as nested documents after ``SOURCE`` and ``TARGET`` lines. Blank
lines and lines starting with ``#`` are ignored. Emission sorts every
section, so ``emit_dblx(parse_dblx(text))`` is a normal form.
"""

import re
from collections.abc import Callable
from typing import Any, Literal

import pydantic
from pydantic import BaseModel, ConfigDict

from dblhatch.dblcore.double import DoubleCategory, validate_double_category
from dblhatch.dblcore.functor import DoubleFunctor, validate_double_functor
from dblhatch.dblcore.transformation import HorizontalTransformation, verify_horizontal
from dblhatch.errors import MalformedTable, ParseError, ValidationError
from dblhatch.fincat.category import FinCategory, validate_category
from dblhatch.fincat.twocat import Bicategory, TwoCategory, validate_2category, validate_bicategory
from dblhatch.homotopy.pseudo_functor import HorizontallyPseudoDoubleFunctor, verify_pseudo_functor
from dblhatch.utils.types import ValidationReport
from dblhatch.weakdbl.double import WeakDoubleCategory, validate_weak

VERSION = "1"

Shape = Literal["objects", "ends", "boundary", "assign", "binary", "triple", "map", "scalar"]


class Section(BaseModel):
    model_config = ConfigDict(frozen=True)

    keyword: str
    field: str
    shape: Shape
    arrow: str = "->"
    separator: str = "*"


class DocumentKind(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str
    model: type
    sections: list[Section]
    children: tuple[str, ...] = ()
    validator: Callable[[Any], ValidationReport]


_OBJECTS = Section(keyword="OBJECTS:", field="objects", shape="objects")
_COHERENCE = [
    Section(keyword="ASSOC", field="associators", shape="triple"),
    Section(keyword="LUNIT", field="left_unitors", shape="assign"),
    Section(keyword="RUNIT", field="right_unitors", shape="assign"),
]
_CATEGORY = [
    _OBJECTS,
    Section(keyword="MOR", field="morphisms", shape="ends"),
    Section(keyword="ID", field="identities", shape="assign"),
    Section(keyword="COMP", field="composition", shape="binary"),
]
_TWO_CATEGORY = [
    *_CATEGORY,
    Section(keyword="CELL", field="cells", shape="ends", arrow="=>"),
    Section(keyword="IDC", field="cell_identities", shape="assign"),
    Section(keyword="VCELL", field="vertical_composition", shape="binary", separator="."),
    Section(keyword="HCELL", field="horizontal_composition", shape="binary"),
]
_DOUBLE = [
    _OBJECTS,
    Section(keyword="HMOR", field="hmors", shape="ends"),
    Section(keyword="VMOR", field="vmors", shape="ends", arrow="=>"),
    Section(keyword="SQ", field="squares", shape="boundary"),
    Section(keyword="IDH", field="hidentities", shape="assign"),
    Section(keyword="IDV", field="videntities", shape="assign"),
    Section(keyword="IDHSQ", field="hidentity_squares", shape="assign"),
    Section(keyword="IDVSQ", field="videntity_squares", shape="assign"),
    Section(keyword="HCOMP", field="hcompositions", shape="binary"),
    Section(keyword="VCOMP", field="vcompositions", shape="binary", separator="."),
    Section(keyword="SQH", field="square_hcompositions", shape="binary"),
    Section(keyword="SQV", field="square_vcompositions", shape="binary", separator="."),
]
_FUNCTOR = [
    Section(keyword="OB", field="objects", shape="map"),
    Section(keyword="HM", field="hmors", shape="map"),
    Section(keyword="VM", field="vmors", shape="map"),
    Section(keyword="SQ", field="squares", shape="map"),
]

# subclasses before their bases: emission picks the first matching model
KINDS = [
    DocumentKind(kind="weakdblcat", model=WeakDoubleCategory, sections=[*_DOUBLE, *_COHERENCE], validator=validate_weak),
    DocumentKind(kind="dblcat", model=DoubleCategory, sections=_DOUBLE, validator=validate_double_category),
    DocumentKind(
        kind="bicategory", model=Bicategory, sections=[*_TWO_CATEGORY, *_COHERENCE], validator=validate_bicategory
    ),
    DocumentKind(kind="2category", model=TwoCategory, sections=_TWO_CATEGORY, validator=validate_2category),
    DocumentKind(kind="category", model=FinCategory, sections=_CATEGORY, validator=validate_category),
    DocumentKind(
        kind="pseudofunctor",
        model=HorizontallyPseudoDoubleFunctor,
        sections=[
            *_FUNCTOR,
            Section(keyword="COMPOSITOR", field="compositors", shape="binary"),
            Section(keyword="NORMAL", field="normal", shape="scalar"),
        ],
        children=("source", "target"),
        validator=verify_pseudo_functor,
    ),
    DocumentKind(
        kind="functor",
        model=DoubleFunctor,
        sections=_FUNCTOR,
        children=("source", "target"),
        validator=validate_double_functor,
    ),
    DocumentKind(
        kind="transformation",
        model=HorizontalTransformation,
        sections=[
            Section(keyword="KIND", field="kind", shape="scalar"),
            Section(keyword="COMPONENT", field="components", shape="map"),
            Section(keyword="VSQ", field="vmor_squares", shape="map"),
            Section(keyword="HSQ", field="hmor_squares", shape="map"),
        ],
        children=("source", "target"),
        validator=verify_horizontal,
    ),
]
_BY_NAME = {k.kind: k for k in KINDS}

_ID = r"[^\s,;\[\]()=]+"
_PATTERNS = {
    "ends": re.compile(rf"^({_ID}):\s+({_ID})\s+(->|=>)\s+({_ID})$"),
    "boundary": re.compile(rf"^({_ID}):\s*\[\s*({_ID})\s*;\s*({_ID})\s*;\s*({_ID})\s*;\s*({_ID})\s*\]$"),
    "assign": re.compile(rf"^({_ID})\s*=\s*({_ID})$"),
    "triple": re.compile(rf"^\(\s*({_ID})\s*,\s*({_ID})\s*,\s*({_ID})\s*\)\s*=\s*({_ID})$"),
    "map": re.compile(rf"^({_ID})\s+->\s+({_ID})$"),
    "scalar": re.compile(r"^(\S+)$"),
}
_RESERVED = re.compile(r"[\s,;\[\]()=]")


def _binary_pattern(separator: str) -> re.Pattern:
    sep = re.escape(separator)
    return re.compile(rf"^([^\s,;\[\]()={sep}]+){sep}([^\s,;\[\]()={sep}]+)\s*=\s*({_ID})$")


def _kind_of(obj: BaseModel) -> DocumentKind:
    return next(k for k in KINDS if isinstance(obj, k.model))


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def _next(self) -> tuple[int, str, str] | None:
        """Next meaningful line as (number, raw, stripped)."""
        while self.pos < len(self.lines):
            raw = self.lines[self.pos]
            self.pos += 1
            stripped = raw.strip()
            if stripped and not stripped.startswith("#"):
                return self.pos, raw, stripped
        return None

    def document(self, validate: bool) -> BaseModel:
        found = self._next()
        if found is None:
            raise ParseError("expected a DBLX header", len(self.lines) + 1)
        number, raw, line = found
        header = line.split(maxsplit=3)
        if len(header) < 3 or header[0] != "DBLX":
            raise ParseError("expected 'DBLX <version> <kind> [name]'", number)
        if header[1] != VERSION:
            raise ParseError(f"unsupported DBLX version {header[1]}", number, raw.index(header[1]) + 1)
        kind = _BY_NAME.get(header[2])
        if kind is None:
            raise ParseError(f"unknown document kind {header[2]}", number, raw.index(header[2]) + 1)
        values: dict[str, Any] = {"name": header[3] if len(header) > 3 else ""}
        sections = {s.keyword: s for s in kind.sections}
        for s in kind.sections:
            if s.shape != "scalar":
                values[s.field] = [] if s.shape == "objects" else {}

        while True:
            found = self._next()
            if found is None:
                raise ParseError(f"document {values['name']!r} is missing END", len(self.lines) + 1)
            line_number, raw, line = found
            if line == "END":
                break
            keyword, _, rest = line.partition(" ")
            if keyword.lower() in kind.children:
                values[keyword.lower()] = self.document(validate)
                continue
            section = sections.get(keyword)
            if section is None:
                raise ParseError(f"unknown section {keyword}", line_number, raw.index(keyword) + 1)
            self._record(section, rest.strip(), values, line_number, raw)

        for child in kind.children:
            if child not in values:
                raise ParseError(f"{kind.kind} {values['name']!r} has no {child.upper()}", number)
        try:
            obj = kind.model(**values)
        except pydantic.ValidationError as e:
            raise ParseError(f"invalid {kind.kind}: {e.errors()[0]['msg']}", number) from e
        if validate:
            report = kind.validator(obj)
            if not report.valid:
                raise ValidationError(f"{kind.kind} {obj.name!r} fails {report.first()}", report.violations)
        return obj

    def _record(self, section: Section, rest: str, values: dict, line_number: int, raw: str) -> None:
        column = raw.index(section.keyword) + len(section.keyword) + 2
        if section.shape == "objects":
            values.setdefault("objects", []).extend(rest.split())
            return
        pattern = _binary_pattern(section.separator) if section.shape == "binary" else _PATTERNS[section.shape]
        match = pattern.match(rest)
        if match is None:
            raise ParseError(f"malformed {section.keyword} record", line_number, column)
        groups = match.groups()

        if section.shape == "scalar":
            value = groups[0]
            values[section.field] = {"true": True, "false": False}.get(value, value)
            return
        if section.shape == "ends":
            if groups[2] != section.arrow:
                raise ParseError(f"{section.keyword} records use {section.arrow}", line_number, column)
            key, value = groups[0], (groups[1], groups[3])
        elif section.shape == "boundary":
            key, value = groups[0], groups[1:]
        elif section.shape == "binary":
            key, value = (groups[0], groups[1]), groups[2]
        elif section.shape == "triple":
            key, value = groups[:3], groups[3]
        else:
            key, value = groups
        table = values.setdefault(section.field, {})
        if key in table:
            raise ParseError(f"duplicate {section.keyword} entry for {key}", line_number, column)
        table[key] = value


def parse_dblx(text: str, validate: bool = True) -> BaseModel:
    """Parse one document; nested documents are validated as well.

    Raises:
        ParseError: on malformed text, with line and column.
        ValidationError: if ``validate`` and the object fails its laws.
        MalformedTable: if a table references an unknown id.
    """
    parser = _Parser(text)
    obj = parser.document(validate)
    if parser._next() is not None:
        raise ParseError("text after END", parser.pos)
    return obj


def _check_id(cell: str, separator: str = "") -> str:
    if not cell or _RESERVED.search(cell) or (separator and separator in cell):
        raise MalformedTable(f"id {cell!r} cannot be written as DBLX", [cell])
    return cell


def _records(section: Section, value: Any) -> list[str]:
    kw = section.keyword
    if section.shape == "objects":
        return [" ".join([kw, *(_check_id(x) for x in value)])]
    if section.shape == "scalar":
        text = {True: "true", False: "false"}.get(value, value) if isinstance(value, bool) else str(value)
        return [f"{kw} {text}"]
    lines = []
    for key, v in sorted(value.items()):
        if section.shape == "ends":
            lines.append(f"{kw} {_check_id(key)}: {_check_id(v[0])} {section.arrow} {_check_id(v[1])}")
        elif section.shape == "boundary":
            lines.append(f"{kw} {_check_id(key)}: [{'; '.join(_check_id(e) for e in v)}]")
        elif section.shape == "binary":
            y, x = (_check_id(c, section.separator) for c in key)
            lines.append(f"{kw} {y}{section.separator}{x} = {_check_id(v)}")
        elif section.shape == "triple":
            lines.append(f"{kw} ({','.join(_check_id(c) for c in key)}) = {_check_id(v)}")
        elif section.shape == "assign":
            lines.append(f"{kw} {_check_id(key)} = {_check_id(v)}")
        else:
            lines.append(f"{kw} {_check_id(key)} -> {_check_id(v)}")
    return lines


def _emit_lines(obj: BaseModel) -> list[str]:
    kind = _kind_of(obj)
    header = f"DBLX {VERSION} {kind.kind}"
    lines = [f"{header} {obj.name}" if obj.name else header]
    for child in kind.children:
        lines.append(child.upper())
        lines.extend(f"  {line}" for line in _emit_lines(getattr(obj, child)))
    for section in kind.sections:
        lines.extend(_records(section, getattr(obj, section.field)))
    lines.append("END")
    return lines


def emit_dblx(obj: BaseModel) -> str:
    """Normal-form text of ``obj``.

    Raises:
        MalformedTable: if an id contains whitespace or DBLX punctuation.
    """
    return "\n".join(_emit_lines(obj)) + "\n"
