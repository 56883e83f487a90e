"""
(Q,r)-complexes and module representations as text.

Complex format::

    qr-complex field=<p> d=<d|poset>
    X <rank>
    <grade>            one per generator: d coordinates, or an element name
    Y <rank>
    ...
    Z <rank>
    ...
    f:
    <row> <col> <value>
    g:
    <row> <col> <value>

Representation format::

    module-rep field=<p> d=<d|poset>
    dim <elem> <n>
    map <p> <q>
    <dims[q] rows of dims[p] entries>

Grid elements in the representation format are single tokens c1,...,cd.
"""

from typing import Dict, Hashable, List, Optional, Tuple

import logging

import numpy as np

from ..config import settings
from ..exceptions import ComplexError, FieldError, RepresentationError
from ..linalg.field import PrimeField
from ..modules.labeled import LabeledMatrix, QrComplex
from ..modules.representation import ModuleRep
from .text import Record, RecordReader, Source, dimension_option, format_element, read_source

logger = logging.getLogger(__name__)

_BLOCKS = ("X", "Y", "Z")
_MATRICES = ("f:", "g:")


def _field(reader: RecordReader, options: Dict[str, str], override: Optional[int]) -> PrimeField:
    if override is not None:
        p = override
    elif "field" in options:
        p = reader.integer(options["field"], reader.items[0], minimum=2)
    else:
        p = settings.field_prime
    try:
        return PrimeField(p)
    except FieldError as exc:
        raise reader.error(str(exc), reader.items[0]) from exc


def _grade(reader: RecordReader, record: Record, d: Optional[int]) -> Hashable:
    if d is None:
        if len(record.tokens) != 1:
            raise reader.error("a poset grade is a single element name", record)
        return record.tokens[0]
    return reader.point(record.tokens, d, record)


def parse_qr_complex(text: str, source: Optional[Source] = None, field: Optional[int] = None) -> QrComplex:
    """Parse a complex; ``field`` overrides the modulus in the header."""
    reader = RecordReader(text, source)
    options = reader.header("qr-complex")
    F = _field(reader, options, field)
    d = dimension_option(reader, options)

    grades: Dict[str, List[Hashable]] = {}
    entries: Dict[str, List[Tuple[int, int, int, Record]]] = {}
    while not reader.at_end():
        record = reader.next()
        if record.keyword in _BLOCKS:
            if record.keyword in grades:
                raise reader.error(f"block {record.keyword} given twice", record)
            if len(record.args) != 1:
                raise reader.error(f"'{record.keyword}' takes the rank", record)
            rank = reader.integer(record.args[0], record, minimum=0)
            grades[record.keyword] = [
                _grade(reader, reader.next(f"a grade of {record.keyword}"), d) for _ in range(rank)
            ]
        elif record.keyword in _MATRICES:
            if record.keyword in entries:
                raise reader.error(f"matrix {record.keyword} given twice", record)
            block = entries.setdefault(record.keyword, [])
            while not reader.at_end() and reader.peek().keyword not in _BLOCKS + _MATRICES:
                row = reader.next()
                if len(row.tokens) != 3:
                    raise reader.error("matrix entries are '<row> <col> <value>'", row)
                i, j = (reader.integer(t, row, minimum=0) for t in row.tokens[:2])
                block.append((i, j, reader.integer(row.tokens[2], row), row))
        else:
            raise reader.error(f"unknown record {record.keyword!r}", record)

    x, y, z = (grades.get(k, []) for k in _BLOCKS)

    def assemble(name: str, rows: int, cols: int) -> np.ndarray:
        triples = []
        for i, j, value, row in entries.get(name, []):
            if i >= rows or j >= cols:
                raise reader.error(f"entry ({i}, {j}) outside a {rows}x{cols} matrix", row)
            triples.append((i, j, value))
        return F.from_sparse(rows, cols, triples)

    f = LabeledMatrix(tuple(y), tuple(x), assemble("f:", len(y), len(x)))
    g = LabeledMatrix(tuple(z), tuple(y), assemble("g:", len(z), len(y)))
    try:
        C = QrComplex(F, f, g)
    except ComplexError as exc:
        raise reader.error(str(exc)) from exc
    logger.debug(f"Parsed complex of total rank {C.total_rank} over F_{F.p}")
    return C


def _grade_text(g: Hashable) -> str:
    return " ".join(map(str, g)) if isinstance(g, tuple) else str(g)


def _dimension_text(elements) -> str:
    for e in elements:
        return str(len(e)) if isinstance(e, tuple) else "poset"
    return "poset"


def format_qr_complex(C: QrComplex) -> str:
    lines = [f"qr-complex field={C.field.p} d={_dimension_text(C.y_grades + C.x_grades + C.z_grades)}"]
    for name, grades in zip(_BLOCKS, (C.x_grades, C.y_grades, C.z_grades)):
        lines.append(f"{name} {len(grades)}")
        lines.extend(_grade_text(g) for g in grades)
    for name, M in zip(_MATRICES, (C.f, C.g)):
        lines.append(name)
        lines.extend(f"{i} {j} {M.entries[i, j]}" for i, j in np.argwhere(M.entries))
    return "\n".join(lines) + "\n"


def parse_module_rep(text: str, source: Optional[Source] = None, field: Optional[int] = None) -> ModuleRep:
    reader = RecordReader(text, source)
    options = reader.header("module-rep")
    F = _field(reader, options, field)
    d = dimension_option(reader, options)

    elements: List[Hashable] = []
    dims: Dict[Hashable, int] = {}
    maps = {}
    while not reader.at_end():
        record = reader.next()
        if record.keyword == "dim":
            if len(record.args) != 2:
                raise reader.error("'dim' takes an element and a dimension", record)
            e = reader.element(record.args[0], d, record)
            if e in dims:
                raise reader.error(f"dimension of {record.args[0]} given twice", record)
            dims[e] = reader.integer(record.args[1], record, minimum=0)
            elements.append(e)
        elif record.keyword == "map":
            if len(record.args) != 2:
                raise reader.error("'map' takes two elements", record)
            p, q = (reader.element(t, d, record) for t in record.args)
            for e, token in ((p, record.args[0]), (q, record.args[1])):
                if e not in dims:
                    raise reader.error(f"map uses {token}, which has no 'dim' line", record)
            rows, cols = dims[q], dims[p]
            matrix = F.zeros(rows, cols)
            if rows and cols:
                for i in range(rows):
                    row = reader.next(f"row {i} of map {record.args[0]} {record.args[1]}")
                    if len(row.tokens) != cols:
                        raise reader.error(f"expected {cols} entries", row)
                    matrix[i] = [reader.integer(t, row) for t in row.tokens]
            maps[(p, q)] = F.reduce(matrix)
        else:
            raise reader.error(f"unknown record {record.keyword!r}", record)
    try:
        return ModuleRep(F, tuple(elements), tuple(maps), dims, maps)
    except RepresentationError as exc:
        raise reader.error(str(exc)) from exc


def format_module_rep(M: ModuleRep) -> str:
    lines = [f"module-rep field={M.field.p} d={_dimension_text(M.elements)}"]
    lines.extend(f"dim {format_element(e)} {M.dims[e]}" for e in M.elements)
    for p, q in M.relations:
        lines.append(f"map {format_element(p)} {format_element(q)}")
        A = M.maps[(p, q)]
        if A.size:
            lines.extend(" ".join(map(str, row)) for row in A)
    return "\n".join(lines) + "\n"


def read_qr_complex(path: Source, field: Optional[int] = None) -> QrComplex:
    return parse_qr_complex(read_source(path), path, field)


def read_module_rep(path: Source, field: Optional[int] = None) -> ModuleRep:
    return parse_module_rep(read_source(path), path, field)
