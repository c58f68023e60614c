from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel


class CoefficientMode(str, Enum):
    """Coefficient modes for truncated polynomials"""
    INTEGER = "zz"  # exact integers, no row reduction
    RATIONAL = "qq"
    PRIME = "gf"


class LiftMethod(str, Enum):
    """How a lift set was produced by the oracle"""
    EXHAUSTIVE = "exhaustive"
    SQUARE_ZERO_LINEAR = "square-zero-linear"


class GridName(str, Enum):
    SMALL = "small"  # e <= 3, ell <= 9
    FULL = "full"  # e <= 4, ell <= 12


GRID_BOUNDS: Dict[GridName, Tuple[int, int]] = {
    GridName.SMALL: (3, 9),
    GridName.FULL: (4, 12),
}


class _CamelModel(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)


class CheckResult(_CamelModel):
    """Outcome of one named mathematical check"""

    name: str
    passed: bool = Field(alias="pass")
    detail: str = ""


class VerificationReport(_CamelModel):
    """Ordered collection of check outcomes; failed checks never raise"""

    subject: str
    checks: List[CheckResult] = Field(default_factory=list)
    observations: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> "VerificationReport":
        self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))
        return self

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for check in other.checks:
            name = f"{prefix}{check.name}" if prefix else check.name
            self.checks.append(CheckResult(name=name, passed=check.passed, detail=check.detail))
        self.observations.update(other.observations)
        return self

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


class PresentationRecord(_CamelModel):
    """Serialized deformation ring presentation"""

    n: int
    m_v: Optional[int] = None
    generators: List[str] = Field(default_factory=list)
    k_dimension: int = 1
    field: str = "GF(2)"

    @property
    def text(self) -> str:
        if self.n == 0:
            return "k"
        variables = ",".join(f"t{j}" for j in range(1, self.n + 1))
        return f"k[[{variables}]]/({', '.join(self.generators)})"


class ProvenanceRecord(_CamelModel):
    mu: int
    ell_prime: int
    ell_v: int
    i: int
    d_v: int
    applied_omega: bool
    rotation: int


class ModuleKey(_CamelModel):
    top: int
    len: int


class ResultRecord(_CamelModel):
    """One CLI result; field order is the JSON field order"""

    input: Dict[str, Any]
    presentation: PresentationRecord
    provenance: Optional[ProvenanceRecord] = None
    checks: List[CheckResult] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)
    omega_partner: Optional[ModuleKey] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)


class BrauerRecord(_CamelModel):
    e: int
    multiplicity: int
    distance: int
    n: int
    i: int
    m_v: Optional[int] = None
    generators: List[str] = Field(default_factory=list)
    agrees_with_nakayama: bool = True


class VerificationSummary(_CamelModel):
    """Outcome of a `verify` or `oracle` run"""

    scope: str
    reports: List[VerificationReport] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)
