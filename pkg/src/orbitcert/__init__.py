"""orbitcert: certified number-theoretic tables, simple-group data, abelian
witness audits, and a small matrix-group orbit engine over prime fields."""

__version__ = "0.1.0"
