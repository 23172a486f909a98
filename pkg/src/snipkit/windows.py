"""Citing year and cited-year windows."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class YearWindow:
    """Closed range of publication years ``first..last``."""

    first: int
    last: int

    def __post_init__(self):
        if self.first > self.last:
            raise ValueError(f"empty year window {self.first}-{self.last}")

    def __contains__(self, year) -> bool:
        return year is not None and self.first <= year <= self.last

    def __iter__(self):
        return iter(range(self.first, self.last + 1))

    def __len__(self) -> int:
        return self.last - self.first + 1

    def __str__(self) -> str:
        return f"{self.first}-{self.last}"

    @classmethod
    def preceding(cls, year: int, n_years: int) -> YearWindow:
        """The ``n_years`` years immediately before ``year``."""
        if n_years < 1:
            raise ValueError("window must span at least one year")
        return cls(year - n_years, year - 1)


@dataclass(frozen=True)
class WindowConfig:
    """A citing year plus the indicator window (default 3 years) and the
    field-delimitation window (default 10 years). Both end at ``citing_year - 1``.
    """

    citing_year: int
    indicator_window: YearWindow
    field_window: YearWindow

    def __post_init__(self):
        for w in (self.indicator_window, self.field_window):
            if w.last != self.citing_year - 1:
                raise ValueError(f"window {w} must end at {self.citing_year - 1}")

    @classmethod
    def default(cls, citing_year: int, indicator_years: int = 3, field_years: int = 10) -> WindowConfig:
        return cls(
            citing_year,
            YearWindow.preceding(citing_year, indicator_years),
            YearWindow.preceding(citing_year, field_years),
        )

    def shifted(self, years: int) -> WindowConfig:
        return WindowConfig(
            self.citing_year + years,
            YearWindow(self.indicator_window.first + years, self.indicator_window.last + years),
            YearWindow(self.field_window.first + years, self.field_window.last + years),
        )
