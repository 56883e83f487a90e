"""
Line-oriented reading shared by all text formats.

Every format is a sequence of whitespace-separated records; `#` starts a
comment that runs to the end of the line and blank lines are ignored. Parse
errors carry the source name and the 1-based line number.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Hashable, Iterator, List, Optional, Sequence, Tuple, Union

from ..exceptions import FormatError
from ..posets.grid import format_point

Source = Union[str, Path]


@dataclass(frozen=True)
class Record:
    line_no: int
    tokens: Tuple[str, ...]
    raw: str

    @property
    def keyword(self) -> str:
        return self.tokens[0]

    @property
    def args(self) -> Tuple[str, ...]:
        return self.tokens[1:]


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def records(text: str) -> List[Record]:
    out = []
    for index, raw in enumerate(text.splitlines()):
        body = _strip_comment(raw)
        if body:
            out.append(Record(index + 1, tuple(body.split()), raw))
    return out


class RecordReader:
    """Cursor over the records of one document, raising FormatError with position."""

    def __init__(self, text: str, source: Optional[Source] = None):
        self.items = records(text)
        self.source = source
        self.position = 0

    def error(self, message: str, record: Optional[Record] = None) -> FormatError:
        if record is None:
            return FormatError(message, self.source)
        return FormatError(message, self.source, record.line_no, record.raw)

    def at_end(self) -> bool:
        return self.position >= len(self.items)

    def peek(self) -> Optional[Record]:
        return None if self.at_end() else self.items[self.position]

    def next(self, expected: str = "a record") -> Record:
        if self.at_end():
            raise self.error(f"unexpected end of input, expected {expected}")
        record = self.items[self.position]
        self.position += 1
        return record

    def __iter__(self) -> Iterator[Record]:
        while not self.at_end():
            yield self.next()

    def header(self, keyword: str) -> Dict[str, str]:
        """Read the header line and its key=value options."""
        record = self.next(f"a '{keyword}' header")
        if record.keyword != keyword:
            raise self.error(f"expected '{keyword}' header", record)
        options = {}
        for token in record.args:
            if "=" not in token:
                raise self.error(f"header option {token!r} is not key=value", record)
            key, value = token.split("=", 1)
            options[key] = value
        return options

    def integer(self, token: str, record: Record, minimum: Optional[int] = None) -> int:
        try:
            value = int(token)
        except ValueError:
            raise self.error(f"{token!r} is not an integer", record) from None
        if minimum is not None and value < minimum:
            raise self.error(f"{value} is below {minimum}", record)
        return value

    def point(self, tokens: Sequence[str], d: int, record: Record) -> Tuple[int, ...]:
        if len(tokens) != d:
            raise self.error(f"expected {d} coordinates, got {len(tokens)}", record)
        return tuple(self.integer(t, record, minimum=0) for t in tokens)

    def element(self, token: str, d: Optional[int], record: Record) -> Hashable:
        """A poset element name, or a grid point written c1,...,cd when d is given."""
        if d is None:
            return token
        return self.point(token.split(","), d, record)


def dimension_option(reader: RecordReader, options: Dict[str, str], key: str = "d") -> Optional[int]:
    """Parse d=<n> into an int, d=poset (or no option) into None."""
    value = options.get(key)
    if value is None or value == "poset":
        return None
    try:
        d = int(value)
    except ValueError:
        raise reader.error(f"{key}={value!r} is neither a dimension nor 'poset'") from None
    if d < 1:
        raise reader.error(f"dimension must be at least 1, got {d}")
    return d


def format_element(e: Hashable) -> str:
    if isinstance(e, tuple):
        return format_point(e)
    return str(e)


def read_source(path: Source) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", path) from exc


def write_text(path: Source, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
