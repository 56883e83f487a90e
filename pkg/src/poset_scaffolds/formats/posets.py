"""Hasse diagrams and grid intervals as text."""

from typing import List, Optional, Union

import logging

from ..exceptions import IntervalError, PosetError
from ..posets.grid import GridInterval
from ..posets.poset import Poset
from .text import RecordReader, Source, read_source

logger = logging.getLogger(__name__)


def parse_hasse(text: str, source: Optional[Source] = None) -> Poset:
    """
    Parse the Hasse format:

        poset
        elem <name>
        ...
        edge <lower> <upper>

    Edges must name declared elements; a cyclic edge list is rejected.
    """
    reader = RecordReader(text, source)
    reader.header("poset")
    elements: List[str] = []
    declared = set()
    edges = []
    for record in reader:
        if record.keyword == "elem":
            if len(record.args) != 1:
                raise reader.error("'elem' takes one name", record)
            name = record.args[0]
            if name in declared:
                raise reader.error(f"element {name!r} declared twice", record)
            declared.add(name)
            elements.append(name)
        elif record.keyword == "edge":
            if len(record.args) != 2:
                raise reader.error("'edge' takes a lower and an upper element", record)
            lower, upper = record.args
            for name in (lower, upper):
                if name not in declared:
                    raise reader.error(f"edge uses undeclared element {name!r}", record)
            edges.append((lower, upper))
        else:
            raise reader.error(f"unknown record {record.keyword!r}", record)
    try:
        Q = Poset(tuple(elements), tuple(edges))
    except PosetError as exc:
        raise reader.error(str(exc)) from exc
    logger.debug(f"Parsed poset with {len(elements)} elements and {len(edges)} edges")
    return Q


def format_hasse(Q: Poset) -> str:
    lines = ["poset"]
    lines.extend(f"elem {e}" for e in Q.elements)
    lines.extend(f"edge {a} {b}" for a, b in Q.hasse_edges)
    return "\n".join(lines) + "\n"


def parse_interval(text: str, source: Optional[Source] = None) -> GridInterval:
    """
    Parse the grid interval format:

        interval d=<d>
        min <c1> ... <cd>
        cogen <c1> ... <cd>     (or: max <c1> ... <cd>)

    cogen and max lines are mutually exclusive; with neither the interval is
    the upset generated by the minima.
    """
    reader = RecordReader(text, source)
    options = reader.header("interval")
    if "d" not in options:
        raise reader.error("interval header needs d=<dimension>")
    d = reader.integer(options["d"], reader.items[0], minimum=1)
    minima, cogens, maxima = [], [], []
    for record in reader:
        if record.keyword == "min":
            minima.append(reader.point(record.args, d, record))
        elif record.keyword == "cogen":
            if maxima:
                raise reader.error("'cogen' and 'max' lines cannot be mixed", record)
            cogens.append(reader.point(record.args, d, record))
        elif record.keyword == "max":
            if cogens:
                raise reader.error("'cogen' and 'max' lines cannot be mixed", record)
            maxima.append(reader.point(record.args, d, record))
        else:
            raise reader.error(f"unknown record {record.keyword!r}", record)
    if not minima:
        raise reader.error("interval has no 'min' lines")
    try:
        if maxima:
            return GridInterval.from_extrema(minima, maxima)
        return GridInterval.from_upset_presentation(minima, cogens)
    except IntervalError as exc:
        raise reader.error(str(exc)) from exc


def format_interval(Q: GridInterval) -> str:
    lines = [f"interval d={Q.d}"]
    lines.extend("min " + " ".join(map(str, m)) for m in Q.minima)
    if Q.maxima is not None:
        lines.extend("max " + " ".join(map(str, w)) for w in Q.maxima)
    else:
        lines.extend("cogen " + " ".join(map(str, c)) for c in Q.cogenerators)
    return "\n".join(lines) + "\n"


def read_hasse(path: Source) -> Poset:
    return parse_hasse(read_source(path), path)


def read_interval(path: Source) -> GridInterval:
    return parse_interval(read_source(path), path)


def read_ambient(path: Source) -> Union[Poset, GridInterval]:
    """Either format, told apart by the header keyword."""
    text = read_source(path)
    reader = RecordReader(text, path)
    first = reader.peek()
    if first is not None and first.keyword == "interval":
        return parse_interval(text, path)
    return parse_hasse(text, path)
