"""Exception and warning types shared across the package."""


class RhoBreakError(Exception):
    """Base class for all errors raised by rhobreak."""


class NonFiniteEntryError(RhoBreakError):
    """A sample matrix contains NaN or infinity.

    Indices are 1-based: row is the time index, col the component index.
    """

    def __init__(self, row: int, col: int):
        self.row = row
        self.col = col
        super().__init__(f"non-finite value at row {row}, column {col}")


class TooFewRowsError(RhoBreakError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"need at least 2 observations, got {n}")


class TooFewColumnsError(RhoBreakError):
    def __init__(self, d: int):
        self.d = d
        super().__init__(f"need at least 2 components, got {d}")


class DimensionTooSmallError(RhoBreakError):
    def __init__(self, d: int):
        self.d = d
        super().__init__(f"dimension must be >= 2, got {d}")


class NegativeArgumentError(RhoBreakError):
    """Kernel weights and bandwidths are defined for nonnegative arguments only."""


class DegenerateVarianceError(RhoBreakError):
    """The long-run variance estimate is not positive; the test is undefined.

    Typically caused by (near-)constant data, where successive correlation
    estimates do not fluctuate at all.
    """

    def __init__(self, value: float):
        self.value = value
        super().__init__(
            f"long-run variance estimate {value!r} is not positive; "
            "the fluctuation test is undefined for this input"
        )


class AlphaOutOfRangeError(RhoBreakError):
    def __init__(self, alpha: float):
        self.alpha = alpha
        super().__init__(f"significance level must lie in (0, 1), got {alpha!r}")


class GridViolationError(RhoBreakError):
    """A grid evaluation point u must satisfy n*u_i integer for every i."""


class ZeroVariancePrefixError(RhoBreakError):
    """Some prefix of the data has a constant component, so the successive
    Pearson correlation is undefined there."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"component with zero variance in the first {k} observations")


class BivariateRequiredError(RhoBreakError):
    def __init__(self, d: int):
        self.d = d
        super().__init__(f"this operation is defined for d=2 only, got d={d}")


class NotPositiveDefiniteError(RhoBreakError):
    """Innovation shape matrix is not positive definite."""


class ShapeOutOfRangeError(RhoBreakError):
    def __init__(self, q: float):
        self.q = q
        super().__init__(f"implied shape entry q={q!r} falls outside (-1, 1)")


class TooManyOutliersError(RhoBreakError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"cannot place {count} outliers; at most {limit} fit in the second half")


class CsvFormatError(RhoBreakError):
    """CSV input could not be parsed; carries the offending 1-based file line."""

    def __init__(self, message: str, line: int | None = None, column: str | None = None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column!r}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)


class TieWarning(UserWarning):
    """Tied observations detected; ranks were averaged.

    The test's limit theory assumes continuous margins, so heavy tying can
    distort the null distribution.
    """
