"""Resource limits and configuration handling.

Limits come from three layers, strongest last: built-in defaults, environment
variables (ORBITCERT_*), and explicit keyword arguments on the operations that
take caps.  A simple ``key = value`` config file can pre-set command-line
flags; flags given on the command line always win.
"""

import os
from dataclasses import dataclass, field

from .errors import UsageError

_ENV_PREFIX = "ORBITCERT_"


@dataclass
class Limits:
    """Resource caps, each overridable via ORBITCERT_<UPPERCASE_NAME>."""

    # Largest bit length accepted by factorize()/is_prime().
    max_factor_bits: int = 192
    # Largest group closure, in elements.
    max_group_elements: int = 2_000_000
    # Largest vector space enumerated for orbits/spinning, in vectors.
    max_vectors: int = 1_000_000
    # Iteration budget for one Brent-rho attempt before giving up a split.
    rho_budget: int = 4_000_000
    # Trial-division bound used before switching to cycle finding.
    trial_bound: int = 100_000

    @classmethod
    def from_env(cls) -> "Limits":
        """Build limits from defaults plus any ORBITCERT_* overrides."""
        kwargs = {}
        for name in cls.__dataclass_fields__:
            raw = os.environ.get(_ENV_PREFIX + name.upper())
            if raw is not None:
                try:
                    kwargs[name] = int(raw)
                except ValueError as exc:
                    raise UsageError(
                        f"environment override {_ENV_PREFIX + name.upper()}={raw!r}"
                        f" is not an integer"
                    ) from exc
        return cls(**kwargs)


LIMITS = Limits.from_env()


def parse_config_file(path: str) -> dict:
    """Parse a ``key = value`` config file into a string->string dict.

    Blank lines and ``#`` comments are ignored.  Duplicate keys are an error
    so a file cannot silently disagree with itself.
    """
    values: dict = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = stripped.partition("=")
            key = key.strip()
            value = value.strip()
            if not key or not value:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            if key in values:
                raise UsageError(f"{path}:{lineno}: duplicate key {key!r}")
            values[key] = value
    return values
