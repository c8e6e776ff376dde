"""Exception hierarchy shared by the whole package.

``InputError`` covers everything a caller can fix (bad dimensions, bad
literals, data outside the supported domain).  ``ScaleLimit`` means a
computation blew its configured step budget.  ``InternalInconsistency`` is
reserved for situations the underlying theory rules out; seeing one is a
bug in this library, never a data problem.
"""


class GkzError(Exception):
    """Base class for all errors raised by gkzmono."""


class InputError(GkzError, ValueError):
    """Invalid user-supplied data (CLI exit code 1)."""


class DimensionMismatch(InputError):
    """Operands have incompatible shapes or lengths."""


class RankDeficient(InputError):
    """The matrix does not have the rank required by the operation."""


class LatticeNotSaturated(InputError):
    """Columns generate a proper finite-index sublattice; reduce first."""


class BetaOutsideSpan(InputError):
    """The parameter vector is not in the column span of the matrix."""


class FaceNotInLattice(InputError):
    """The face does not belong to the supplied face lattice."""


class NotAPyramid(InputError):
    """Operation requires the configuration to be a pyramid over the face."""


class EmptyFace(InputError):
    """Operation is undefined for the empty face."""


class DegenerateConfiguration(InputError):
    """Configuration columns do not span the ambient space."""


class UnsupportedFormat(InputError):
    """Unknown export format name."""


class ScaleLimit(GkzError):
    """A step-budgeted computation exceeded its budget (CLI exit code 2)."""


class InternalInconsistency(GkzError):
    """Checks that are provably equivalent disagreed (CLI exit code 3)."""


class ShiftInvarianceViolation(InternalInconsistency):
    """Classification changed under a lattice shift of the parameter."""
