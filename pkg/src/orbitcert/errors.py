"""Exception hierarchy.

Two families matter to callers: usage/configuration problems (bad inputs,
exceeded resource limits) and mathematical assertion failures.  The latter
derive from MathAssertionError and are reserved for refutations — a table
scan disagreeing with its encoded exception list, a witness search coming up
empty, or a verified bound failing on a concrete instance.  The command-line
driver maps MathAssertionError to exit code 2 and everything else to 1 so
automation can tell "the code is misconfigured" apart from "the mathematics
failed".
"""


class OrbitCertError(Exception):
    """Base class for all package errors."""


class UsageError(OrbitCertError):
    """Bad command-line flags, config keys, or malformed input files."""


class MathAssertionError(OrbitCertError):
    """Base class for violated mathematical assertions (CLI exit code 2)."""


class BoundViolated(MathAssertionError):
    """A verified inequality failed on a concrete instance."""


class NoWitnessFound(MathAssertionError):
    """No coprime abelian-witness pair exists for a group specification."""


class TableMismatch(MathAssertionError):
    """A window scan disagrees with the encoded exception table."""


class MagnitudeExceeded(OrbitCertError):
    """Input exceeds the supported factorization/primality magnitude."""


class CertificationError(OrbitCertError):
    """Deterministic primality certification ran out of budget.

    Raised instead of ever falling back to a probabilistic-only answer.
    """


class NotCoprime(OrbitCertError, ValueError):
    """multiplicative_order requires gcd(a, modulus) = 1."""


class NotPrimePower(OrbitCertError, ValueError):
    """A prime-power table was queried with a non-prime-power base."""


class InvalidParameters(OrbitCertError, ValueError):
    """Group-family parameter constraints violated."""


class CapExceeded(OrbitCertError):
    """Group closure exceeded the configured element cap."""


class VectorCapExceeded(CapExceeded):
    """Orbit/spin enumeration exceeded the configured vector cap."""


class SingularGenerator(OrbitCertError, ValueError):
    """A generator matrix is not invertible over GF(p)."""


class AdmissibilityRejected(OrbitCertError):
    """Bound verification requested on an instance that is not certified
    completely reducible."""
