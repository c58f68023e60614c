import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Union

from sympy import isprime
from sympy.polys.domains import QQ, ZZ, FiniteField

from src.core.exceptions import UnsupportedModeError
from src.core.models import CoefficientMode


@lru_cache(maxsize=None)
def _prime_field(p: int):
    return FiniteField(p, symmetric=False)


@dataclass(frozen=True)
class CoefficientDomain:
    """Coefficient mode: exact integers, rationals, or F_p"""

    mode: CoefficientMode
    p: Optional[int] = None

    def __post_init__(self):
        if self.mode == CoefficientMode.PRIME:
            if self.p is None or not isprime(self.p):
                raise UnsupportedModeError(f"prime-field mode needs a prime, got {self.p}")
        elif self.p is not None:
            raise UnsupportedModeError(f"mode {self.mode.value} takes no prime")

    @property
    def domain(self):
        if self.mode == CoefficientMode.INTEGER:
            return ZZ
        if self.mode == CoefficientMode.RATIONAL:
            return QQ
        return _prime_field(self.p)

    @property
    def is_field(self) -> bool:
        return self.mode != CoefficientMode.INTEGER

    @property
    def characteristic(self) -> int:
        return self.p if self.mode == CoefficientMode.PRIME else 0

    @property
    def label(self) -> str:
        if self.mode == CoefficientMode.PRIME:
            return f"GF({self.p})"
        return "ZZ" if self.mode == CoefficientMode.INTEGER else "QQ"

    def element(self, value: Union[int, Fraction]):
        if isinstance(value, Fraction):
            if self.mode == CoefficientMode.INTEGER:
                raise UnsupportedModeError("fractions are not integers")
            numerator = self.domain.convert(value.numerator)
            return numerator / self.domain.convert(value.denominator)
        return self.domain.convert(int(value))

    def to_python(self, coefficient) -> Union[int, Fraction]:
        if self.mode == CoefficientMode.PRIME:
            return int(coefficient) % self.p
        if self.mode == CoefficientMode.RATIONAL:
            value = Fraction(int(coefficient.numerator), int(coefficient.denominator))
            return int(value) if value.denominator == 1 else value
        return int(coefficient)

    def convert_from(self, coefficient, source: "CoefficientDomain"):
        """Map a coefficient of `source` into this domain (ZZ -> anything, QQ -> QQ, F_p -> F_p)"""
        if source == self:
            return coefficient
        if source.mode == CoefficientMode.INTEGER:
            return self.element(int(coefficient))
        if source.mode == CoefficientMode.RATIONAL and self.mode == CoefficientMode.PRIME:
            value = source.to_python(coefficient)
            value = Fraction(value)
            if value.denominator % self.p == 0:
                raise UnsupportedModeError(f"denominator divisible by {self.p}")
            return self.element(value.numerator) / self.element(value.denominator)
        raise UnsupportedModeError(f"cannot convert {source.label} coefficients to {self.label}")

    def __str__(self) -> str:
        return self.label


class CoefficientDomainFactory:
    """Factory for coefficient domains"""

    _modes = {
        "zz": CoefficientMode.INTEGER,
        "qq": CoefficientMode.RATIONAL,
        "gf": CoefficientMode.PRIME,
    }

    @classmethod
    def create(cls, mode: str, p: Optional[int] = None) -> CoefficientDomain:
        key = mode.lower()
        if key not in cls._modes:
            raise UnsupportedModeError(f"Unknown coefficient mode: {mode}")
        return CoefficientDomain(cls._modes[key], p if cls._modes[key] == CoefficientMode.PRIME else None)

    @classmethod
    def from_label(cls, label: str) -> CoefficientDomain:
        """Parse 'ZZ', 'QQ', 'GF(p)' or 'GF' with the default prime"""
        text = label.strip().upper()
        match = re.fullmatch(r"GF\((\d+)\)", text)
        if match:
            return cls.prime_field(int(match.group(1)))
        if text == "GF":
            from config.setting import settings
            return cls.prime_field(settings.DEFAULT_PRIME)
        return cls.create(text)

    @classmethod
    def integers(cls) -> CoefficientDomain:
        return CoefficientDomain(CoefficientMode.INTEGER)

    @classmethod
    def rationals(cls) -> CoefficientDomain:
        return CoefficientDomain(CoefficientMode.RATIONAL)

    @classmethod
    def prime_field(cls, p: int) -> CoefficientDomain:
        return CoefficientDomain(CoefficientMode.PRIME, p)

    @classmethod
    def get_available_modes(cls) -> List[str]:
        return list(cls._modes.keys())

    @classmethod
    def register_mode(cls, name: str, mode: CoefficientMode):
        cls._modes[name] = mode
