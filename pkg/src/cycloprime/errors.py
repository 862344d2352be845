"""Exception hierarchy shared by all modules."""


class CycloprimeError(Exception):
    """Base class for every error raised by this package."""


class UnsupportedP(CycloprimeError, ValueError):
    pass


class BadN(CycloprimeError, ValueError):
    pass


class ModulusMismatch(CycloprimeError, ValueError):
    pass


class NotInvertible(CycloprimeError, ArithmeticError):
    """Raised when gcd(value, modulus) > 1.

    ``g`` is the gcd; when ``1 < g < modulus`` it is a proper factor of the modulus.
    """

    def __init__(self, value: int, modulus: int, g: int):
        super().__init__(f"{value} is not invertible mod {modulus} (gcd {g})")
        self.value = value
        self.modulus = modulus
        self.g = g


class BasisMismatch(CycloprimeError, ValueError):
    pass


class BadAutomorphismIndex(CycloprimeError, ValueError):
    pass


class FactorFound(CycloprimeError, ArithmeticError):
    """A zero divisor met during ring inversion; ``factor`` properly divides the modulus."""

    def __init__(self, factor: int, modulus: int):
        super().__init__(f"found factor {factor} of the modulus")
        self.factor = factor
        self.modulus = modulus


class DegenerateElement(CycloprimeError, ArithmeticError):
    pass


class NonRationalNorm(CycloprimeError, ArithmeticError):
    pass


class NotRational(CycloprimeError, ArithmeticError):
    def __init__(self, index: int, coefficient: int):
        super().__init__(f"coefficient of zeta^{index} is {coefficient}, expected 0")
        self.index = index
        self.coefficient = coefficient


class NoEmbedding(CycloprimeError, ValueError):
    pass


class SeedDividesM(CycloprimeError, ArithmeticError):
    def __init__(self, q: int):
        super().__init__(f"seed norm {q} divides M")
        self.q = q


class SymbolIsPlusMinusOne(CycloprimeError, ValueError):
    def __init__(self, sign: int):
        super().__init__(f"power residue symbol is {sign:+d}; test inapplicable")
        self.sign = sign


class UnlistedResidue(CycloprimeError, LookupError):
    pass
