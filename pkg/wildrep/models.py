from __future__ import annotations

from enum import Enum, auto
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import orjson
from pydantic import BaseModel as _BaseModel, conint, conlist, validator


class _AutoStrEnum(str, Enum):
    def _generate_next_value_(name, start, count, last_values):
        return name

    @staticmethod
    def _auto(n):
        return [auto() for _ in range(n)]


def _orjson_dumps(v, *, default):
    return orjson.dumps(v, default=default, option=orjson.OPT_SORT_KEYS).decode()


class BaseModel(_BaseModel):
    """Our Pydantic model base."""
    class Config:
        # Use enum values rather than objects for model.dict()
        use_enum_values = True
        # Perform validation on assignment to attributes
        validate_assignment = True
        # Populate aliased fields either by attribute name or by alias
        allow_population_by_field_name = True
        # Override for decoding/encoding JSON
        json_loads = orjson.loads
        json_dumps = _orjson_dumps


class Reduction(_AutoStrEnum):
    GOOD, MULTIPLICATIVE, ADDITIVE = _AutoStrEnum._auto(3)


class Parity(_AutoStrEnum):
    EVEN, ODD = _AutoStrEnum._auto(2)

    @classmethod
    def of(cls, n: int) -> 'Parity':
        return cls.EVEN if n % 2 == 0 else cls.ODD


class InertiaImage(_AutoStrEnum):
    TRIVIAL = auto()  # good reduction
    C2 = auto()
    C3 = auto()
    C4 = auto()
    C6 = auto()
    C3xC4 = auto()  # wild, C3 ⋊ C4

    @property
    def order(self) -> int:
        return _INERTIA_ORDERS[self.name]


_INERTIA_ORDERS = dict(TRIVIAL=1, C2=2, C3=3, C4=4, C6=6, C3xC4=12)


class Status(_AutoStrEnum):
    OK, OUT_OF_SCOPE, ERROR = _AutoStrEnum._auto(3)


class CurveInput(BaseModel):
    id: Optional[str]
    a_invariants: conlist(str, min_items=5, max_items=5)  # type: ignore
    residue_degree: conint(ge=1) = 1  # type: ignore

    @validator('a_invariants', pre=True)
    def parse_rationals(cls, v):
        if isinstance(v, str):
            v = v.split(',')
        values = []
        for item in v:
            try:
                values.append(str(Fraction(str(item).strip())))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f'not a rational number: {item!r}')
        return values

    def rationals(self) -> List[Fraction]:
        return [Fraction(i) for i in self.a_invariants]


class ExactValue(BaseModel):
    """Element of Q(ζ₁₂): exact coordinates in the basis 1, ζ, ζ², ζ³."""
    exact: conlist(str, min_items=4, max_items=4)  # type: ignore
    approx: Tuple[float, float]


Matrix = List[List[ExactValue]]


class ClassValue(BaseModel):
    label: str
    size: int
    value: ExactValue


class ErrorInfo(BaseModel):
    code: str
    message: str


class LocalDataDoc(BaseModel):
    minimal_model: conlist(str, min_items=5, max_items=5)  # type: ignore
    kodaira: str
    v_delta_min: int
    conductor_exponent: int
    reduction: Reduction
    potentially_good: bool
    j_invariant: str
    v_j: Optional[int]  # None when j = 0


class FrobeniusCharpoly(BaseModel):
    a: int
    q: int
    eigenvalues: Optional[List[ExactValue]]


class RepresentationDoc(BaseModel):
    parity: Parity
    galois_group: str
    chi_frob: ExactValue
    psi_table: List[ClassValue]
    rho_frob: Matrix
    rho_generators: Dict[str, Matrix]
    etale: bool = False


class ReportDocument(BaseModel):
    schema_version: str
    input: Optional[CurveInput]  # None when the line could not be parsed
    status: Status = Status.OK
    error: Optional[ErrorInfo]
    short_model: Optional[conlist(str, min_items=5, max_items=5)]  # type: ignore
    local_data: Optional[LocalDataDoc]
    inertia: Optional[InertiaImage]
    inertia_order: Optional[int]
    frobenius_charpoly: Optional[FrobeniusCharpoly]
    representation: Optional[RepresentationDoc]
    notes: List[str] = []


class CountRow(BaseModel):
    n: int
    q: int
    a: int
    point_count: int
    enumerated: Optional[int]  # None above MAX_COUNT_DEGREE


class VerifyRow(BaseModel):
    check: str
    n: int
    expected: Optional[str]
    actual: Optional[str]
    status: str  # PASS, FAIL or SKIP
    detail: Optional[str]
