"""Exception hierarchy shared by all poset-scaffolds modules."""

from pathlib import Path
from typing import Optional, Union


class ScaffoldError(Exception):
    """Base class for every error raised by the library."""


class PosetError(ScaffoldError):
    """Malformed poset: cycle in the edge list, unknown or duplicate element."""


class IntervalError(ScaffoldError):
    """A grid interval violates the interval axioms or its presentation is malformed."""


class MaterializationError(ScaffoldError):
    """A grid interval cannot be expanded into an explicit poset."""


class FieldError(ScaffoldError):
    """Invalid coefficient field."""


class NotInSpanError(ScaffoldError):
    """A vector is not in the column span of a matrix."""


class ComplexError(ScaffoldError):
    """A (Q,r)-complex is not well formed (g∘f ≠ 0 or incompatible labels)."""


class RepresentationError(ScaffoldError):
    """A module representation is missing a structure map or has a mis-shaped one."""


class LimitError(ScaffoldError):
    """A limit or colimit cannot be computed from the given data."""


class GrankError(ScaffoldError):
    """The generalized rank is undefined for the given input."""


class FormatError(ScaffoldError):
    """Parse error in one of the text formats."""

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        line_no: Optional[int] = None,
        line: Optional[str] = None,
    ):
        self.message = message
        self.path = path
        self.line_no = line_no
        self.line = line
        super().__init__(str(self))

    def __str__(self) -> str:
        where = str(self.path) if self.path is not None else "<input>"
        if self.line_no is not None:
            where = f"{where}:{self.line_no}"
        if self.line is not None:
            return f"{where}: {self.message}: {self.line.strip()!r}"
        return f"{where}: {self.message}"
