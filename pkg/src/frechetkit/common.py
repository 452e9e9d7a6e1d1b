"""Shared result types."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ApproxInterval:
    """Certified enclosure [lo, hi] of a distance value."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi):
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    def __contains__(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    @property
    def ratio(self) -> float:
        """hi/lo, the certified approximation factor (inf when lo == 0 < hi)."""
        if self.lo == 0.0:
            return 1.0 if self.hi == 0.0 else float("inf")
        return self.hi / self.lo
