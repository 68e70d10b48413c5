"""
Exact arithmetic in the cyclotomic field Q(ζ₁₂).

Elements are stored as four rational coordinates in the power basis
1, ζ, ζ², ζ³, where ζ is a root of the 12th cyclotomic polynomial
ζ⁴ − ζ² + 1. Under the fixed complex embedding ζ ↦ e^{iπ/6} one has
i = ζ³, √3 = 2ζ − ζ³ and i√3 = 2ζ² − 1; every sign convention used by
the character tables and the Frobenius eigenvalues follows from these.
"""
import cmath
import math
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from .errors import DivisionByZero, InvalidArgument

Rational = Union[int, Fraction]

# ζ^m in the power basis for m = 0..11; ζ⁴ = ζ² − 1 and ζ⁶ = −1
_POWERS: Tuple[Tuple[int, ...], ...] = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
)
_POWERS += tuple(tuple(-c for c in v) for v in _POWERS)

_ZETA_C = cmath.exp(1j * cmath.pi / 6)

GALOIS_EXPONENTS = (1, 5, 7, 11)


def _coerce(value) -> 'Cyclo12':
    if isinstance(value, Cyclo12):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclo12((value, 0, 0, 0))
    return NotImplemented


class Cyclo12:
    __slots__ = ('coords',)

    coords: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, coords: Sequence[Rational] = (0, 0, 0, 0)):
        if len(coords) != 4:
            raise InvalidArgument(f'Cyclo12 needs 4 coordinates, got {len(coords)}')
        self.coords = tuple(Fraction(c) for c in coords)  # type: ignore

    @classmethod
    def rational(cls, q: Rational) -> 'Cyclo12':
        return cls((q, 0, 0, 0))

    # Ring operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo12([a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo12([-a for a in self.coords])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo12([a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(_POWERS[i + j]):
                    if c:
                        out[k] += c * ab
        return Cyclo12(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** -k
        result, base = Cyclo12.rational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coords == other.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    # Field structure

    def galois(self, k: int) -> 'Cyclo12':
        """Image under the automorphism ζ ↦ ζ^k, k a unit mod 12."""
        if k % 12 not in GALOIS_EXPONENTS:
            raise InvalidArgument(f'{k} is not a unit mod 12')
        out = [Fraction(0)] * 4
        for j, a in enumerate(self.coords):
            for idx, c in enumerate(_POWERS[j * k % 12]):
                out[idx] += c * a
        return Cyclo12(out)

    def conj(self) -> 'Cyclo12':
        """Complex conjugation, ζ ↦ ζ⁻¹."""
        return self.galois(11)

    def _other_conjugates(self) -> 'Cyclo12':
        rest = Cyclo12.rational(1)
        for k in GALOIS_EXPONENTS[1:]:
            rest = rest * self.galois(k)
        return rest

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of the four Galois conjugates."""
        value = self * self._other_conjugates()
        assert value.is_rational(), value
        return value.coords[0]

    def inv(self) -> 'Cyclo12':
        if not self:
            raise DivisionByZero('inverse of zero in Q(zeta12)')
        norm = self.norm()
        return Cyclo12([c / norm for c in self._other_conjugates().coords])

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise InvalidArgument(f'{self} is not rational')
        return self.coords[0]

    # Display

    def embed(self) -> complex:
        """Complex value under ζ ↦ e^{iπ/6}. Display only, never compared."""
        return sum((float(c) * _ZETA_C ** k for k, c in enumerate(self.coords)), 0j)

    def approx(self, digits: int = 10) -> Tuple[float, float]:
        z = self.embed()
        # Adding 0.0 turns -0.0 into 0.0
        return round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0

    def exact(self) -> Tuple[str, ...]:
        return tuple(str(c) for c in self.coords)

    def __repr__(self):
        return f'Cyclo12({", ".join(self.exact())})'

    def __str__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            power = {0: '', 1: 'z', 2: 'z^2', 3: 'z^3'}[k]
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f'-{power}')
            else:
                terms.append(f'{c}*{power}')
        return ' + '.join(terms).replace('+ -', '- ')


ZETA = Cyclo12((0, 1, 0, 0))
I = Cyclo12((0, 0, 0, 1))  # noqa: E741
SQRT3 = Cyclo12((0, 2, 0, -1))
I_SQRT3 = Cyclo12((-1, 0, 2, 0))
ZETA3 = Cyclo12((-1, 0, 1, 0))
ZETA4 = I


class Constants(NamedTuple):
    i: Cyclo12
    sqrt3: Cyclo12
    i_sqrt3: Cyclo12
    zeta3: Cyclo12
    zeta4: Cyclo12


def constants() -> Constants:
    return Constants(i=I, sqrt3=SQRT3, i_sqrt3=I_SQRT3, zeta3=ZETA3, zeta4=ZETA4)


def chi_frob(n: int) -> Cyclo12:
    """Value iⁿ√3ⁿ = (i√3)ⁿ of the unramified character on Frobenius."""
    if n < 1:
        raise InvalidArgument(f'residue degree must be positive, got {n}')
    return I_SQRT3 ** n


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def sqrt(q: Rational) -> Optional[Cyclo12]:
    """
    A square root of the rational `q` inside Q(ζ₁₂), or None if there is
    none. Square roots of negatives have positive imaginary part.
    """
    q = Fraction(q)
    if not q:
        return Cyclo12()
    for k, root in ((1, Cyclo12.rational(1)), (-1, I), (3, SQRT3), (-3, I_SQRT3)):
        m = _rational_sqrt(q / k)
        if m is not None:
            return root * m
    return None
