"""Run configuration: caps, budgets, census ranges, output options."""

import json
from dataclasses import asdict, dataclass, fields

from .catalog import CensusRanges
from .group import DEFAULT_MAX_ELEMENTS
from .subgroups import (
    DEFAULT_HALL_BUDGET,
    DEFAULT_MAX_QUOTIENT_DEGREE,
    DEFAULT_SUBGROUP_CAP,
)


@dataclass(frozen=True)
class Config:
    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_degree: int = 128
    max_quotient_degree: int = DEFAULT_MAX_QUOTIENT_DEGREE
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    hall_budget: int = DEFAULT_HALL_BUDGET
    workers: int = 1
    seed: int = 0
    max_order: int = 2000
    cyclic_max: int = 12
    dihedral_max_order: int = 16
    symmetric_max: int = 5
    alternating_max: int = 5
    include_quaternion: bool = True
    cache_dir: str | None = None
    output_format: str = "json"

    def __post_init__(self):
        for name in ("max_elements", "max_degree", "max_quotient_degree",
                     "subgroup_cap", "workers", "max_order"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.hall_budget < 0:
            raise ValueError("hall_budget must be >= 0")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format: {self.output_format!r}")

    def census_ranges(self) -> CensusRanges:
        return CensusRanges(
            cyclic_max=self.cyclic_max,
            dihedral_max_order=self.dihedral_max_order,
            symmetric_max=self.symmetric_max,
            alternating_max=self.alternating_max,
            include_quaternion=self.include_quaternion,
            max_order=self.max_order,
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str) -> "Config":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


DEFAULT_CONFIG = Config()
