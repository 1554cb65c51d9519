"""Number-theory layer: deterministic primality, verified factorization,
cyclotomic values, qualifying-prime verdicts, and exception-table scans."""

from .cyclotomic import (
    cyclotomic_value,
    intrinsic_prime,
    order_check,
    power_minus_one_pieces,
    zsigmondy_part,
)
from .factorization import FactoredInteger, factorize, multiplicative_order, valuation
from .primality import PrimeCertificate, certify_prime, check_certificate, is_prime
from .tables import (
    TABLE_IDS,
    ExceptionTable,
    ScanReport,
    exception_member,
    get_table,
    golden_lines,
    is_prime_power,
    read_golden,
    require_match,
    scan_window,
    write_golden,
)
from .zsigmondy import (
    Verdict,
    ZsigmondyReport,
    cor34_holds,
    cor36_holds,
    has_large_zsigmondy,
    has_larger_zsigmondy,
    scan_witness,
    zsigmondy_primes,
)

__all__ = [
    "FactoredInteger",
    "PrimeCertificate",
    "ScanReport",
    "ExceptionTable",
    "TABLE_IDS",
    "Verdict",
    "ZsigmondyReport",
    "certify_prime",
    "check_certificate",
    "cor34_holds",
    "cor36_holds",
    "cyclotomic_value",
    "exception_member",
    "factorize",
    "get_table",
    "golden_lines",
    "has_large_zsigmondy",
    "has_larger_zsigmondy",
    "intrinsic_prime",
    "is_prime",
    "is_prime_power",
    "multiplicative_order",
    "order_check",
    "power_minus_one_pieces",
    "read_golden",
    "require_match",
    "scan_window",
    "scan_witness",
    "valuation",
    "write_golden",
    "zsigmondy_part",
    "zsigmondy_primes",
]
