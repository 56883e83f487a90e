"""Per-run configuration assembled from command-line arguments."""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime

from ..config import settings

Command = Literal[
    "scaffold", "final-scaffold", "limit", "colimit", "grank", "betti1-support", "bench", "validate"
]
Algorithm = Literal["auto", "general", "sweep", "joins"]
Family = Literal["random3d", "u4", "limit2d"]

_NEEDS_AMBIENT = {"scaffold", "final-scaffold", "limit", "colimit", "grank"}
_NEEDS_MODULE = {"limit", "colimit", "grank"}


class RunConfig(BaseModel):
    """One CLI invocation: the command, its inputs and the overrides of the global settings."""

    command: Command
    hasse: Optional[Path] = None
    interval: Optional[Path] = None
    complex: Optional[Path] = None
    rep: Optional[Path] = None
    field: Optional[int] = Field(default=None, description="Prime modulus; overrides input headers")
    algo: Algorithm = "auto"
    out: Optional[Path] = None
    threads: int = Field(default_factory=lambda: settings.threads, ge=1)
    validate_inputs: bool = True
    seed: int = Field(default=0, ge=0, lt=2**64)

    # bench only
    family: Family = "random3d"
    sizes: List[int] = Field(default_factory=lambda: [16, 32, 64, 128, 256, 512, 1024])
    rank: int = Field(default=20, ge=1, description="Total rank r of the random complexes")

    @field_validator("field")
    @classmethod
    def ensure_prime(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and (v >= 2**31 or not isprime(v)):
            raise ValueError(f"field modulus {v} is not a prime below 2^31")
        return v

    @field_validator("sizes")
    @classmethod
    def ensure_positive(cls, v: List[int]) -> List[int]:
        if not v or min(v) < 1:
            raise ValueError("sizes must be positive")
        return v

    @model_validator(mode="after")
    def check_inputs(self) -> "RunConfig":
        if self.hasse is not None and self.interval is not None:
            raise ValueError("give --hasse or --interval, not both")
        if self.complex is not None and self.rep is not None:
            raise ValueError("give --complex or --rep, not both")
        if self.command in _NEEDS_AMBIENT and self.hasse is None and self.interval is None:
            raise ValueError(f"{self.command} needs --hasse or --interval")
        if self.command in _NEEDS_MODULE and self.complex is None and self.rep is None:
            raise ValueError(f"{self.command} needs --complex or --rep")
        if self.command == "betti1-support" and self.interval is None:
            raise ValueError("betti1-support needs --interval (its minima generate the ideal)")
        if self.command == "validate" and not any((self.hasse, self.interval, self.complex, self.rep)):
            raise ValueError("validate needs at least one input file")
        if self.hasse is not None and self.algo in ("sweep", "joins"):
            raise ValueError(f"--algo {self.algo} applies to grid intervals only")
        if self.interval is not None and self.algo == "general":
            raise ValueError("--algo general applies to Hasse inputs only")
        return self

    @property
    def grid_algo(self) -> str:
        return "auto" if self.algo == "general" else self.algo
