"""Problem files: a line-oriented sectioned text format.

Sections: [group], [target], [representation], plus optional [hom] and
[form].  Scalar, matrix and word literals follow the syntaxes of the
arithmetic and presentation modules.  Parsing reports positioned errors;
semantic validation (membership, relators) happens later and separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .groups import GroupFamily, parse_family
from .linalg import Mat
from .scalars import Scalar, parse_scalar
from .words import (GroupHom, GroupPresentation, UnknownGeneratorError, Word,
                    parse_word, surface_presentation)

SECTIONS = ("group", "target", "representation", "hom", "form")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class ProblemFile:
    presentation: GroupPresentation
    family: GroupFamily
    images: Tuple[Mat, ...]
    hom: Optional[GroupHom]
    form_gram: Optional[Mat]


def _parse_matrix_text(text: str) -> Tuple[Mat, int]:
    """Parse ``[[s,s],[s,s]]``; returns (matrix, offset past it).

    Raises ValueError with an ``offset`` attribute on malformed input.
    """

    def fail(offset: int, message: str) -> ValueError:
        err = ValueError(message)
        err.offset = offset
        return err

    pos = 0
    n = len(text)

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos >= n or text[pos] != "[":
        raise fail(pos, "expected '[' to open a matrix")
    pos += 1
    rows: List[List[Scalar]] = []
    while True:
        pos = skip_ws(pos)
        if pos >= n or text[pos] != "[":
            raise fail(pos, "expected '[' to open a matrix row")
        pos += 1
        row: List[Scalar] = []
        while True:
            start = skip_ws(pos)
            end = start
            while end < n and text[end] not in ",]":
                end += 1
            if end >= n:
                raise fail(start, "unterminated matrix row")
            literal = text[start:end].strip()
            if not literal:
                raise fail(start, "empty matrix entry")
            try:
                row.append(parse_scalar(literal))
            except ValueError as exc:
                raise fail(start, str(exc)) from None
            pos = end
            if text[pos] == ",":
                pos += 1
                continue
            pos += 1  # consumed ']'
            break
        rows.append(row)
        pos = skip_ws(pos)
        if pos < n and text[pos] == ",":
            pos += 1
            continue
        if pos >= n or text[pos] != "]":
            raise fail(pos, "expected ',' or ']' after a matrix row")
        pos += 1
        break
    if len({len(r) for r in rows}) != 1:
        raise fail(0, "matrix rows have unequal lengths")
    return Mat.from_rows(rows), pos


def parse_matrix(text: str) -> Mat:
    m, end = _parse_matrix_text(text)
    tail = text[end:].strip()
    if tail:
        err = ValueError(f"unexpected trailing input {tail!r} after matrix")
        err.offset = end
        raise err
    return m


Entry = Tuple[int, str, str, int]  # line number, key, value, value column


def _split_sections(text: str) -> Dict[str, List[Entry]]:
    sections: Dict[str, List[Entry]] = {}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            name = stripped[1:-1].strip()
            if name not in SECTIONS:
                raise ParseError(f"unknown section [{name}]", lineno)
            if name in sections:
                raise ParseError(f"duplicate section [{name}]", lineno)
            sections[name] = []
            current = name
            continue
        if current is None:
            raise ParseError("content before the first section header", lineno)
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno)
        key, value = line.split("=", 1)
        value_col = len(key) + 2  # 1-based column just past '='
        sections[current].append((lineno, key.strip(), value.strip(), value_col))
    return sections


def _matrix_entry(entry: Entry) -> Mat:
    lineno, _, value, value_col = entry
    try:
        return parse_matrix(value)
    except ValueError as exc:
        offset = getattr(exc, "offset", 0)
        raise ParseError(str(exc), lineno, value_col + offset) from None


def _parse_group(entries: List[Entry]) -> GroupPresentation:
    genus: Optional[int] = None
    generators: Optional[List[str]] = None
    relator_entries: List[Entry] = []
    for entry in entries:
        lineno, key, value, col = entry
        if key == "surface_genus":
            try:
                genus = int(value)
            except ValueError:
                raise ParseError(f"bad genus {value!r}", lineno, col) from None
        elif key == "generators":
            generators = value.split()
            if not generators:
                raise ParseError("empty generator list", lineno, col)
        elif key == "relator":
            relator_entries.append(entry)
        else:
            raise ParseError(f"unknown [group] key {key!r}", lineno)
    if genus is not None:
        if generators is not None or relator_entries:
            first = entries[0][0]
            raise ParseError("surface_genus excludes explicit generators/relators", first)
        if genus < 1:
            raise ParseError("genus must be at least 1", entries[0][0])
        return surface_presentation(genus)
    if generators is None:
        line = entries[0][0] if entries else 1
        raise ParseError("[group] needs generators or surface_genus", line)
    relators: List[Word] = []
    for lineno, _, value, col in relator_entries:
        try:
            w = parse_word(value, generators)
        except UnknownGeneratorError as exc:
            raise ParseError(str(exc), lineno, col) from None
        if w.is_empty():
            raise ParseError("relator reduces to the empty word", lineno, col)
        relators.append(w)
    try:
        return GroupPresentation(tuple(generators), tuple(relators))
    except ValueError as exc:
        raise ParseError(str(exc), entries[0][0]) from None


def _parse_hom(entries: List[Entry], target: GroupPresentation) -> GroupHom:
    genus: Optional[int] = None
    source_generators: Optional[List[str]] = None
    source_relators: List[Entry] = []
    image_entries: List[Entry] = []
    for entry in entries:
        lineno, key, value, col = entry
        if key == "source_surface_genus":
            try:
                genus = int(value)
            except ValueError:
                raise ParseError(f"bad genus {value!r}", lineno, col) from None
        elif key == "source_generators":
            source_generators = value.split()
        elif key == "source_relator":
            source_relators.append(entry)
        else:
            image_entries.append(entry)
    if genus is not None:
        if source_generators is not None or source_relators:
            raise ParseError("source_surface_genus excludes explicit source data",
                             entries[0][0])
        source = surface_presentation(genus)
    elif source_generators is not None:
        relators = []
        for lineno, _, value, col in source_relators:
            try:
                w = parse_word(value, source_generators)
            except UnknownGeneratorError as exc:
                raise ParseError(str(exc), lineno, col) from None
            if w.is_empty():
                raise ParseError("relator reduces to the empty word", lineno, col)
            relators.append(w)
        try:
            source = GroupPresentation(tuple(source_generators), tuple(relators))
        except ValueError as exc:
            raise ParseError(str(exc), entries[0][0]) from None
    else:
        line = entries[0][0] if entries else 1
        raise ParseError("[hom] needs source_surface_genus or source_generators", line)

    images: Dict[str, Word] = {}
    for lineno, key, value, col in image_entries:
        if key not in source.generator_names:
            raise ParseError(f"unknown source generator {key!r}", lineno)
        if key in images:
            raise ParseError(f"duplicate image for source generator {key!r}", lineno)
        try:
            images[key] = parse_word(value, target.generator_names)
        except UnknownGeneratorError as exc:
            raise ParseError(str(exc), lineno, col) from None
    missing = [g for g in source.generator_names if g not in images]
    if missing:
        line = entries[0][0] if entries else 1
        raise ParseError(f"missing image words for source generators: {', '.join(missing)}",
                         line)
    return GroupHom(source, target, tuple(images[g] for g in source.generator_names))


def parse_problem(text: str) -> ProblemFile:
    sections = _split_sections(text)
    for required in ("group", "target", "representation"):
        if required not in sections:
            raise ParseError(f"missing required section [{required}]", 1)

    presentation = _parse_group(sections["group"])

    target_entries = sections["target"]
    family: Optional[GroupFamily] = None
    for lineno, key, value, col in target_entries:
        if key != "family":
            raise ParseError(f"unknown [target] key {key!r}", lineno)
        try:
            family = parse_family(value)
        except ValueError as exc:
            raise ParseError(str(exc), lineno, col) from None
    if family is None:
        line = target_entries[0][0] if target_entries else 1
        raise ParseError("[target] needs a family line", line)

    image_map: Dict[str, Mat] = {}
    for entry in sections["representation"]:
        lineno, key, _, _ = entry
        if key not in presentation.generator_names:
            raise ParseError(f"unknown generator {key!r} in [representation]", lineno)
        if key in image_map:
            raise ParseError(f"duplicate matrix for generator {key!r}", lineno)
        m = _matrix_entry(entry)
        if (m.rows, m.cols) != (family.n, family.n):
            raise ParseError(
                f"matrix for {key!r} is {m.rows}x{m.cols}, expected {family.n}x{family.n}",
                lineno)
        image_map[key] = m
    missing = [g for g in presentation.generator_names if g not in image_map]
    if missing:
        line = sections["representation"][0][0] if sections["representation"] else 1
        raise ParseError(f"missing matrices for generators: {', '.join(missing)}", line)
    images = tuple(image_map[g] for g in presentation.generator_names)

    hom: Optional[GroupHom] = None
    if "hom" in sections:
        hom = _parse_hom(sections["hom"], presentation)

    form_gram: Optional[Mat] = None
    if "form" in sections:
        for entry in sections["form"]:
            lineno, key, _, _ = entry
            if key != "gram":
                raise ParseError(f"unknown [form] key {key!r}", lineno)
            if form_gram is not None:
                raise ParseError("duplicate gram line", lineno)
            form_gram = _matrix_entry(entry)
        if form_gram is None:
            raise ParseError("[form] needs a gram line", sections["form"][0][0]
                             if sections["form"] else 1)

    return ProblemFile(presentation=presentation, family=family, images=images,
                       hom=hom, form_gram=form_gram)
