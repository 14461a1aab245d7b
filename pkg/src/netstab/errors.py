"""Exception types shared across the package."""

from __future__ import annotations


class NetstabError(Exception):
    """Base class for all errors raised by this package."""


class MatrixFormatError(NetstabError, ValueError):
    """A matrix CSV file could not be parsed into a square numeric matrix."""


class NotPositiveDefiniteError(NetstabError, ValueError):
    """A scale matrix failed the Cholesky factorization.

    ``pivot`` is the zero-based index of the first non-positive pivot.
    """

    def __init__(self, pivot: int, value: float):
        self.pivot = pivot
        self.value = value
        super().__init__(
            f"matrix is not positive definite: pivot {pivot} is {value:.6g} <= 0"
        )


class DegenerateVariableError(NetstabError, ValueError):
    """A variable has zero variance (true matrix) or zero sample variance."""

    def __init__(self, index: int, label: str | None = None):
        self.index = index
        self.label = label
        name = label if label is not None else f"variable {index}"
        super().__init__(f"degenerate {name}: zero variance")


class SampleSizeError(NetstabError, ValueError):
    """Fewer observations than the estimators require."""


class MeasureRangeError(NetstabError, ValueError):
    """A dependence value lies outside the measure's admissible range."""


class ShapeMismatchError(NetstabError, ValueError):
    """Two objects that must share a dimension do not."""


class KindMismatchError(NetstabError, ValueError):
    """Operands carry incompatible measure or set kinds."""


class BinMismatchError(NetstabError, ValueError):
    """Two histograms do not share identical bin edges."""


class PriceFormatError(NetstabError, ValueError):
    """A price CSV violates the expected layout or value constraints."""


class ConfigError(NetstabError, ValueError):
    """An experiment configuration failed validation.

    ``fields`` lists the offending field names.
    """

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("invalid config: " + "; ".join(problems))
