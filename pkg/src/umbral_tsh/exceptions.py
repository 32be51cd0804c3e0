"""Exception hierarchy for umbral-tsh.

All errors derive from ``ValueError`` so callers that only guard against bad
input keep working; the CLI maps :class:`ParameterError` and
:class:`UnknownNameError` to exit code 2.
"""


class UmbralError(ValueError):
    """Base class for every error raised by the library."""


class TruncationOrderError(UmbralError):
    """Truncation orders disagree, or a moment beyond a finite sequence was asked."""


class ConstantTermError(UmbralError):
    """A series or moment sequence has the wrong constant term for the operation."""


class DegenerateUmbraError(UmbralError):
    """A first moment (or first-order derivative) that must be nonzero vanishes."""


class IndeterminateCollisionError(UmbralError):
    """Two distinct symbols share one indeterminate name."""


class ParameterError(UmbralError):
    """A numeric parameter lies outside its valid range."""


class UnknownNameError(UmbralError, KeyError):
    """Unknown special umbra, tuple, family, process or verification suite."""

    def __str__(self) -> str:
        return ValueError.__str__(self)
