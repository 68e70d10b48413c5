"""
Weierstrass models with rational coefficients, 3-adic valuations and
Tate's algorithm at p = 3.

All arithmetic is exact (`fractions.Fraction`). The residue field used
inside Tate's algorithm is always F₃: the base field is unramified over
Q₃, and the Kodaira symbol does not change under unramified base change.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Optional, Sequence, Tuple, Union

from .errors import InvalidArgument, SingularModelError
from .models import Reduction

log = logging.getLogger(__name__)

Rational = Union[int, Fraction]

INFINITY = math.inf


def _vint(k: int) -> int:
    k, v = abs(k), 0
    while k % 3 == 0:
        k //= 3
        v += 1
    return v


def val3(x: Rational) -> Union[int, float]:
    """3-adic valuation, normalized v(3) = 1; `math.inf` for zero."""
    x = Fraction(x)
    if not x:
        return INFINITY
    return _vint(x.numerator) - _vint(x.denominator)


def residue(x: Rational) -> int:
    """Image of a 3-integral rational in F₃ = {0, 1, 2}."""
    x = Fraction(x)
    assert val3(x) >= 0, f'{x} is not 3-integral'
    return x.numerator * pow(x.denominator, -1, 3) % 3


def _divisible(x: Rational, k: int = 1) -> bool:
    return val3(x) >= k


@dataclass(frozen=True)
class Invariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    delta: Fraction
    j: Fraction


def _invariants(a1, a2, a3, a4, a6) -> Invariants:
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    delta = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if not delta:
        raise SingularModelError(f'discriminant vanishes for {(a1, a2, a3, a4, a6)}')
    return Invariants(b2, b4, b6, b8, c4, c6, delta, c4 ** 3 / delta)


@dataclass(frozen=True)
class WeierstrassModel:
    """y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ over an unramified K/Q₃ of residue degree n."""
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    residue_degree: int = 1

    def __post_init__(self):
        for name in ('a1', 'a2', 'a3', 'a4', 'a6'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.residue_degree < 1:
            raise InvalidArgument(f'residue degree must be positive, got {self.residue_degree}')
        # Raises SingularModelError
        self.invariants

    @classmethod
    def from_ainvs(cls, ainvs: Sequence[Rational], residue_degree: int = 1) -> 'WeierstrassModel':
        if len(ainvs) != 5:
            raise InvalidArgument(f'expected 5 a-invariants, got {len(ainvs)}')
        return cls(*ainvs, residue_degree=residue_degree)  # type: ignore

    @property
    def a_invariants(self) -> Tuple[Fraction, ...]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    @cached_property
    def invariants(self) -> Invariants:
        return _invariants(*self.a_invariants)

    def _replace(self, *ainvs: Rational) -> 'WeierstrassModel':
        return WeierstrassModel(*ainvs, residue_degree=self.residue_degree)  # type: ignore

    def rst_transform(self, r: Rational, s: Rational, t: Rational) -> 'WeierstrassModel':
        """Substitute x = x′ + r, y = y′ + s·x′ + t."""
        a1, a2, a3, a4, a6 = self.a_invariants
        return self._replace(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
        )

    def scaled(self, u: Rational) -> 'WeierstrassModel':
        """Substitute x = u²x′, y = u³y′, so that aᵢ′ = aᵢ/uⁱ."""
        u = Fraction(u)
        if not u:
            raise InvalidArgument('scaling factor must be nonzero')
        a1, a2, a3, a4, a6 = self.a_invariants
        return self._replace(a1 / u, a2 / u ** 2, a3 / u ** 3, a4 / u ** 4, a6 / u ** 6)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.a_invariants)

    def integral_model(self) -> 'WeierstrassModel':
        """Scale by the lcm of the denominators, which clears all of them."""
        u = reduce(lambda x, y: x * y // math.gcd(x, y),
                   (a.denominator for a in self.a_invariants), 1)
        return self if u == 1 else self.scaled(Fraction(1, u))

    def __str__(self):
        terms = ['y^2']
        if self.a1:
            terms.append(f'+ ({self.a1})*x*y')
        if self.a3:
            terms.append(f'+ ({self.a3})*y')
        terms.append('= x^3')
        for coeff, mono in ((self.a2, 'x^2'), (self.a4, 'x'), (self.a6, '')):
            if coeff:
                terms.append(f'+ ({coeff})*{mono}' if mono else f'+ ({coeff})')
        return ' '.join(terms)


def invariants(m: WeierstrassModel) -> Invariants:
    return m.invariants


def complete_square(m: WeierstrassModel) -> WeierstrassModel:
    """The model y² = x³ + (b₂/4)x² + (b₄/2)x + b₆/4 with the same discriminant."""
    return m.rst_transform(0, -m.a1 / 2, -m.a3 / 2)


def potentially_good(inv: Invariants) -> bool:
    return val3(inv.j) >= 0


@dataclass(frozen=True)
class Kodaira:
    """Kodaira symbol; `m` is ν for the families Iν and Iν*."""
    family: str
    m: int = 0

    def __str__(self):
        if self.family == 'I':
            return f'I{self.m}'
        if self.family == 'I*':
            return f'I{self.m}*'
        return self.family

    @classmethod
    def parse(cls, symbol: str) -> 'Kodaira':
        if symbol in _FIXED_SYMBOLS:
            return cls(symbol)
        star = symbol.endswith('*')
        body = symbol[1:-1] if star else symbol[1:]
        if not symbol.startswith('I') or not body.isdigit():
            raise InvalidArgument(f'not a Kodaira symbol: {symbol!r}')
        return cls('I*' if star else 'I', int(body))


_FIXED_SYMBOLS = ('II', 'III', 'IV', 'IV*', 'III*', 'II*')

I0 = Kodaira('I', 0)
II = Kodaira('II')
III = Kodaira('III')
IV = Kodaira('IV')
I0_STAR = Kodaira('I*', 0)
IV_STAR = Kodaira('IV*')
III_STAR = Kodaira('III*')
II_STAR = Kodaira('II*')


@dataclass(frozen=True)
class LocalData:
    minimal_model: WeierstrassModel
    kodaira: Kodaira
    v_delta_min: int
    reduction: Reduction
    potentially_good: bool
    conductor_exponent: int

    @property
    def j_invariant(self) -> Fraction:
        return self.minimal_model.invariants.j

    @property
    def v_j(self) -> Optional[int]:
        v = val3(self.j_invariant)
        return None if v == INFINITY else int(v)


def _local_data(model: WeierstrassModel, kodaira: Kodaira, v_delta: int,
                reduction: Reduction, conductor: int) -> LocalData:
    ld = LocalData(model, kodaira, v_delta, reduction,
                   potentially_good(model.invariants), conductor)
    if reduction == Reduction.ADDITIVE and ld.potentially_good:
        expected = {I0_STAR: 6, III: 3, III_STAR: 9}.get(kodaira)
        assert expected is None or v_delta == expected, \
            f'type {kodaira} with v(delta)={v_delta} at p=3'
    return ld


def tate_algorithm(m: WeierstrassModel) -> LocalData:  # noqa: C901
    """
    Tate's algorithm at p = 3. Every coordinate change uses residues
    reduced into {0, 1, 2}, so running it on its own output returns the
    same LocalData.
    """
    model = m.integral_model()
    while True:
        a1, a2, a3, a4, a6 = model.a_invariants
        inv = model.invariants
        v_delta = int(val3(inv.delta))
        if v_delta == 0:
            return _local_data(model, I0, 0, Reduction.GOOD, 0)

        # Move the singular point of the reduction to (0, 0)
        if _divisible(inv.b2):
            r = residue(-inv.b6)
        else:
            r = residue(-inv.b2 * inv.b4)
        t = residue(a1 * r + a3)
        model = model.rst_transform(r, 0, t)
        a1, a2, a3, a4, a6 = model.a_invariants
        inv = model.invariants

        if not _divisible(inv.b2):
            return _local_data(model, Kodaira('I', v_delta), v_delta,
                               Reduction.MULTIPLICATIVE, 1)
        if val3(a6) < 2:
            return _local_data(model, II, v_delta, Reduction.ADDITIVE, v_delta)
        if val3(inv.b8) < 3:
            return _local_data(model, III, v_delta, Reduction.ADDITIVE, v_delta - 1)
        if val3(inv.b6) < 3:
            return _local_data(model, IV, v_delta, Reduction.ADDITIVE, v_delta - 2)

        # Now 3 | a1, a2; 9 | a3, a4; 27 | a6
        model = model.rst_transform(0, residue(a1), 3 * residue(a3 / 3))
        a1, a2, a3, a4, a6 = model.a_invariants

        # Cubic T³ + bT² + cT + d and its discriminant mod 3
        b, c, d = residue(a2 / 3), residue(a4 / 9), residue(a6 / 27)
        w = (-b * b * c * c + b ** 3 * d + c ** 3) % 3
        if w:
            return _local_data(model, I0_STAR, v_delta, Reduction.ADDITIVE, v_delta - 4)

        if b:
            # Double root c/b; type Im*
            model = model.rst_transform(3 * (c * b % 3), 0, 0)
            ix = iy = 3
            mx = my = 9
            while True:
                a1, a2, a3, a4, a6 = model.a_invariants
                a3t, a6t = a3 / my, a6 / (mx * my)
                if not _divisible(a3t * a3t + 4 * a6t):
                    break
                model = model.rst_transform(0, 0, my * residue(a3t))
                my *= 3
                iy += 1
                a1, a2, a3, a4, a6 = model.a_invariants
                a2t, a4t, a6t = a2 / 3, a4 / (3 * mx), a6 / (mx * my)
                if not _divisible(a4t * a4t - 4 * a2t * a6t):
                    break
                model = model.rst_transform(mx * residue(-a4t / (2 * a2t)), 0, 0)
                mx *= 3
                ix += 1
            nu = ix + iy - 5
            return _local_data(model, Kodaira('I*', nu), v_delta,
                               Reduction.ADDITIVE, v_delta - nu - 4)

        # Triple root -d
        model = model.rst_transform(3 * (-d % 3), 0, 0)
        a1, a2, a3, a4, a6 = model.a_invariants
        x3t, x6t = a3 / 9, a6 / 81
        if not _divisible(x3t * x3t + 4 * x6t):
            return _local_data(model, IV_STAR, v_delta, Reduction.ADDITIVE, v_delta - 6)
        model = model.rst_transform(0, 0, 9 * residue(x3t))
        a1, a2, a3, a4, a6 = model.a_invariants
        if val3(a4) < 4:
            return _local_data(model, III_STAR, v_delta, Reduction.ADDITIVE, v_delta - 7)
        if val3(a6) < 6:
            return _local_data(model, II_STAR, v_delta, Reduction.ADDITIVE, v_delta - 8)

        log.debug('non-minimal model at 3, rescaling: %s', model)
        model = model.scaled(3)
