"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` naming the violated
condition, so callers (and the CLI exit-code logic) can dispatch without
parsing messages.
"""


class QAlgebraError(ValueError):
    """Base class for all domain errors raised by this package."""

    def __init__(self, code, message, **context):
        super().__init__(message)
        self.code = code
        self.context = context

    def __str__(self):
        base = super().__str__()
        return f"[{self.code}] {base}"


class AdmissibilityError(QAlgebraError):
    """The (k, m) pair does not define an admissible root of unity."""


class ClassificationError(QAlgebraError):
    """The (root, p, group) combination does not define a Fock module."""


class ZeroDenominatorError(QAlgebraError):
    """A q-number denominator vanished (q on an excluded locus)."""


class SingularFactorError(QAlgebraError):
    """A factorial-type product hit a vanishing factor.

    ``index`` is the first offending factor index j.
    """

    def __init__(self, code, message, index, **context):
        super().__init__(code, message, index=index, **context)
        self.index = index


class SizeCapError(QAlgebraError):
    """A tensor-power construction exceeded the configured size cap."""
