"""
Scaffolds and computation results as text.

Scaffold format::

    scaffold <initial|final> [d=<d>]
    elem <name>
    rel <m> <p>

Grid elements are written c1,...,cd and need the d option to be read back.
Limits, colimits and generalized ranks are written as keyword lines followed
by dense matrix rows; first Betti supports as one grid point per line,
written as its d coordinates.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..limits.colimits import CopresentationBasis
from ..limits.grank import GrankReport
from ..limits.limits import PresectionBasis
from ..scaffolds.scaffold import Scaffold
from .text import RecordReader, Source, dimension_option, format_element, read_source


def format_scaffold(P: Scaffold) -> str:
    header = f"scaffold {P.direction}"
    if P.elements and isinstance(P.elements[0], tuple):
        header += f" d={len(P.elements[0])}"
    lines = [header]
    lines.extend(f"elem {format_element(e)}" for e in P.elements)
    lines.extend(f"rel {format_element(m)} {format_element(p)}" for m, p in P.relations)
    return "\n".join(lines) + "\n"


def parse_scaffold(text: str, source: Optional[Source] = None) -> Scaffold:
    reader = RecordReader(text, source)
    head = reader.next("a 'scaffold' header")
    if head.keyword != "scaffold" or not head.args or head.args[0] not in ("initial", "final"):
        raise reader.error("expected 'scaffold initial' or 'scaffold final'", head)
    options = {}
    for token in head.args[1:]:
        key, _, value = token.partition("=")
        options[key] = value
    d = dimension_option(reader, options)

    elements: List[Hashable] = []
    relations = []
    for record in reader:
        if record.keyword == "elem" and len(record.args) == 1:
            elements.append(reader.element(record.args[0], d, record))
        elif record.keyword == "rel" and len(record.args) == 2:
            m, p = (reader.element(t, d, record) for t in record.args)
            members = set(elements)
            if m not in members or p not in members:
                raise reader.error("relation between undeclared elements", record)
            relations.append((m, p))
        else:
            raise reader.error(f"malformed record {record.keyword!r}", record)
    return Scaffold(head.args[0], tuple(elements), tuple(relations))


def read_scaffold(path: Source) -> Scaffold:
    return parse_scaffold(read_source(path), path)


def _rows(A: np.ndarray) -> List[str]:
    return [" ".join(map(str, row)) for row in A]


def format_limit(L: PresectionBasis) -> str:
    lines = [f"limit {L.dim}"]
    lines.extend(f"minimum {format_element(m)} {k}" for m, k in zip(L.minima, L.dims))
    lines.append("basis")
    if L.dim:
        lines.extend(_rows(L.basis))
    return "\n".join(lines) + "\n"


def format_colimit(C: CopresentationBasis) -> str:
    lines = [f"colimit {C.dim}"]
    lines.extend(f"maximum {format_element(w)} {k}" for w, k in zip(C.maxima, C.dims))
    lines.append("projection")
    if sum(C.dims):
        lines.extend(_rows(C.projection))
    return "\n".join(lines) + "\n"


def format_grank(report: GrankReport) -> str:
    return (
        f"grank {report.grank}\n"
        f"dim_lim {report.dim_lim}\n"
        f"dim_colim {report.dim_colim}\n"
        f"pair {format_element(report.m)} {format_element(report.w)}\n"
    )


def format_points(points: Sequence[Sequence[int]]) -> str:
    return "".join(" ".join(map(str, p)) + "\n" for p in points)


@dataclass(frozen=True)
class MatrixResult:
    """A parsed limit or colimit: its dimension, the extrema with fiber sizes, the matrix."""

    kind: str
    dim: int
    extrema: Tuple[Tuple[str, int], ...]
    matrix: np.ndarray


def parse_matrix_result(text: str, source: Optional[Source] = None) -> MatrixResult:
    reader = RecordReader(text, source)
    head = reader.next("a 'limit' or 'colimit' header")
    if head.keyword not in ("limit", "colimit") or len(head.args) != 1:
        raise reader.error("expected 'limit <dim>' or 'colimit <dim>'", head)
    dim = reader.integer(head.args[0], head, minimum=0)
    entry, block = ("minimum", "basis") if head.keyword == "limit" else ("maximum", "projection")

    extrema = []
    while True:
        record = reader.next(f"'{entry}' lines or '{block}'")
        if record.keyword == block:
            break
        if record.keyword != entry or len(record.args) != 2:
            raise reader.error(f"expected '{entry} <elem> <dim>'", record)
        extrema.append((record.args[0], reader.integer(record.args[1], record, minimum=0)))
    total = sum(k for _, k in extrema)
    rows = [[reader.integer(t, r) for t in r.tokens] for r in reader]
    if head.keyword == "limit":
        shape = (total, dim)
    else:
        shape = (dim, total)
    matrix = np.asarray(rows, dtype=np.int64).reshape(shape) if rows else np.zeros(shape, dtype=np.int64)
    return MatrixResult(head.keyword, dim, tuple(extrema), matrix)


def parse_grank(text: str, source: Optional[Source] = None) -> Dict[str, object]:
    reader = RecordReader(text, source)
    out: Dict[str, object] = {}
    for record in reader:
        if record.keyword in ("grank", "dim_lim", "dim_colim") and len(record.args) == 1:
            out[record.keyword] = reader.integer(record.args[0], record, minimum=0)
        elif record.keyword == "pair" and len(record.args) == 2:
            out["pair"] = record.args
        else:
            raise reader.error(f"malformed record {record.keyword!r}", record)
    return out


def parse_points(text: str, source: Optional[Source] = None) -> List[Tuple[int, ...]]:
    reader = RecordReader(text, source)
    points = []
    for record in reader:
        point = tuple(reader.integer(t, record, minimum=0) for t in record.tokens)
        if points and len(point) != len(points[0]):
            raise reader.error(f"expected {len(points[0])} coordinates, got {len(point)}", record)
        points.append(point)
    return points
