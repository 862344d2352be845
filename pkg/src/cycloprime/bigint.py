"""Optional GMP backend for the hot loops.

gmpy2.mpz is a drop-in for int under + - * % and pow(), so the ring code runs
unchanged on either type.  Results leaving the engine are always plain ints.
"""

try:
    import gmpy2
except ImportError:  # pragma: no cover - exercised only without the extra
    gmpy2 = None

USE_GMPY = gmpy2 is not None


def big(x: int):
    return gmpy2.mpz(x) if USE_GMPY else int(x)
