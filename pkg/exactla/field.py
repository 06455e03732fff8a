import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Union

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from utils.errors import ShcError

_PRIME_PATTERNS = (
    re.compile(r"^GF\((\d+)\)$"),
    re.compile(r"^F_?(\d+)$"),
    re.compile(r"^(\d+)$"),
)


@dataclass(frozen=True)
class Field:
    """Exact scalar field: the rationals or a prime field GF(p)"""
    kind: str = "rational"
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("rational", "prime"):
            raise ShcError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            if self.p is None or self.p < 2 or not isprime(self.p):
                raise ShcError(f"GF(p) needs a prime p, got {self.p}")
        elif self.p is not None:
            raise ShcError("the rational field takes no characteristic")

    @classmethod
    def rational(cls) -> "Field":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse 'QQ', 'Q', 'GF(7)', 'F7' or a bare prime"""
        spec = text.strip().replace(" ", "")
        if spec.upper() in ("QQ", "Q", "RATIONAL"):
            return cls.rational()
        for pattern in _PRIME_PATTERNS:
            match = pattern.match(spec.upper())
            if match:
                return cls.prime(int(match.group(1)))
        raise ShcError(f"cannot parse field spec {text!r}")

    @cached_property
    def domain(self) -> Domain:
        if self.kind == "rational":
            return QQ
        return GF(self.p, symmetric=False)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p

    def __call__(self, value: Union[int, str, Fraction, Rational]):
        """Convert an int, a 'p/q' string or a fraction into a field element"""
        K = self.domain
        if isinstance(value, str):
            value = value.strip()
            if "/" in value:
                num, den = value.split("/", 1)
                return self(int(num)) / self(int(den))
            return K(int(value))
        if isinstance(value, (Fraction, Rational)):
            return self(int(value.numerator)) / self(int(value.denominator))
        return K(int(value))

    def format(self, element) -> str:
        return str(self.domain.to_sympy(element))

    def __str__(self) -> str:
        return "QQ" if self.kind == "rational" else f"GF({self.p})"
