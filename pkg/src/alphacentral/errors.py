"""Exception types shared across the package.

The split matters to batch callers: parameter and parse problems mean the
input never named a valid computation, precondition errors mean a valid
input fell outside a formula's hypotheses, and internal-check errors mean
a numerical contract that should be unbreakable was broken.
"""


class ParameterError(ValueError):
    """A parameter is outside its documented domain (bad family, alpha, ...)."""


class ParseError(ValueError):
    """Malformed edge-list text; message carries the offending line number."""


class PreconditionError(ValueError):
    """Input violates a stated hypothesis (regularity, connectivity, r >= 2)."""


class SingularityError(ArithmeticError):
    """Evaluation point too close to an eigenvalue of the resolvent matrix."""


class InternalCheckError(RuntimeError):
    """A self-check failed (residual bound, dimension accounting, realness)."""
