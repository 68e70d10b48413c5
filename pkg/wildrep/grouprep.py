"""
The Galois groups of the wild case and their faithful 2-dimensional
representation ψ.

EVEN residue degree: C₃⋊C₄ = ⟨σ, τ | σ³ = τ⁴ = 1, τστ⁻¹ = σ⁻¹⟩, order 12.
ODD residue degree: C₃⋊D₄, adding φ with φ² = 1, σφ = φσ, φτφ = τ⁻¹,
order 24.

Elements are kept in the normal form σˢτᵗφᶠ.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from .cyclo12 import I_SQRT3, ZETA3, Cyclo12
from .errors import InvalidArgument, ParityMismatch, UnknownLabel
from .models import Parity

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElement:
    parity: Parity
    s: int = 0
    t: int = 0
    f: int = 0

    def __post_init__(self):
        object.__setattr__(self, 's', self.s % 3)
        object.__setattr__(self, 't', self.t % 4)
        object.__setattr__(self, 'f', self.f % 2)
        if self.parity == Parity.EVEN and self.f:
            raise InvalidArgument('φ does not exist in the even-degree group')

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        return multiply(self, other)

    def __pow__(self, k: int) -> 'GroupElement':
        result = identity(self.parity)
        for _ in range(k % 12):
            result = result * self
        return result

    def inverse(self) -> 'GroupElement':
        return self ** 11

    def __str__(self):
        word = ''.join(sym if e == 1 else f'{sym}^{e}'
                       for sym, e in (('σ', self.s), ('τ', self.t), ('φ', self.f)) if e)
        return word or 'e'


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """
    σᵃτᵇφᶜ · σᵈτᵉφᵍ = σ^(a + d(−1)ᵇ) τ^(b + e(−1)ᶜ) φ^(c + g),
    using τσ = σ²τ, φσ = σφ and φτ = τ³φ.
    """
    if g.parity != h.parity:
        raise ParityMismatch(f'{g} ({g.parity}) times {h} ({h.parity})')
    return GroupElement(
        g.parity,
        g.s + h.s * (-1) ** g.t,
        g.t + h.t * (-1) ** g.f,
        g.f + h.f,
    )


def identity(parity: Parity) -> GroupElement:
    return GroupElement(parity)


def sigma(parity: Parity) -> GroupElement:
    return GroupElement(parity, s=1)


def tau(parity: Parity) -> GroupElement:
    return GroupElement(parity, t=1)


def phi() -> GroupElement:
    return GroupElement(Parity.ODD, f=1)


def generators(parity: Parity) -> Dict[str, GroupElement]:
    gens = {'sigma': sigma(parity), 'tau': tau(parity)}
    if parity == Parity.ODD:
        gens['phi'] = phi()
    return gens


def group_name(parity: Parity) -> str:
    return 'C3:C4' if parity == Parity.EVEN else 'C3:D4'


@lru_cache(maxsize=None)
def elements(parity: Parity) -> Tuple[GroupElement, ...]:
    n_phi = 1 if parity == Parity.EVEN else 2
    return tuple(GroupElement(parity, s, t, f)
                 for f in range(n_phi) for t in range(4) for s in range(3))


def group_order(parity: Parity) -> int:
    return len(elements(parity))


@dataclass(frozen=True)
class ClassLabel:
    label: str
    size: int


# Class labels with their listed representatives (s, t, f)
_REPRESENTATIVES: Dict[Parity, Tuple[Tuple[str, Tuple[int, int, int]], ...]] = {
    Parity.EVEN: (
        ('1', (0, 0, 0)),
        ('2', (0, 2, 0)),
        ('3', (1, 0, 0)),
        ('4A', (0, 1, 0)),
        ('4B', (0, 3, 0)),
        ('6', (1, 2, 0)),
    ),
    Parity.ODD: (
        ('1', (0, 0, 0)),
        ('2A', (0, 2, 0)),
        ('2B', (0, 0, 1)),
        ('2C', (0, 1, 1)),
        ('3', (1, 0, 0)),
        ('4', (0, 1, 0)),
        ('6A', (1, 0, 1)),
        ('6B', (2, 0, 1)),
        ('6C', (1, 2, 0)),
    ),
}


def representative(label: str, parity: Parity) -> GroupElement:
    for name, (s, t, f) in _REPRESENTATIVES[parity]:
        if name == label:
            return GroupElement(parity, s, t, f)
    raise UnknownLabel(f'no class {label!r} in {group_name(parity)}')


@lru_cache(maxsize=None)
def _classes(parity: Parity) -> Tuple[Tuple[str, FrozenSet[GroupElement]], ...]:
    group = elements(parity)
    classes = []
    for label, _ in _REPRESENTATIVES[parity]:
        g = representative(label, parity)
        classes.append((label, frozenset(h * g * h.inverse() for h in group)))
    covered = frozenset().union(*(members for _, members in classes))
    assert covered == frozenset(group), 'class representatives miss elements'
    assert sum(len(m) for _, m in classes) == len(group), 'classes overlap'
    return tuple(classes)


def conjugacy_classes(parity: Parity) -> List[ClassLabel]:
    return [ClassLabel(label, len(members)) for label, members in _classes(parity)]


def conjugacy_class(g: GroupElement) -> ClassLabel:
    for label, members in _classes(g.parity):
        if g in members:
            return ClassLabel(label, len(members))
    raise AssertionError(f'{g} lies in no conjugacy class')


_PSI_VALUES: Dict[Parity, Dict[str, Cyclo12]] = {
    Parity.EVEN: {
        '1': Cyclo12.rational(2),
        '2': Cyclo12.rational(-2),
        '3': Cyclo12.rational(-1),
        '4A': Cyclo12.rational(0),
        '4B': Cyclo12.rational(0),
        '6': Cyclo12.rational(1),
    },
    Parity.ODD: {
        '1': Cyclo12.rational(2),
        '2A': Cyclo12.rational(-2),
        '2B': Cyclo12.rational(0),
        '2C': Cyclo12.rational(0),
        '3': Cyclo12.rational(-1),
        '4': Cyclo12.rational(0),
        '6A': -I_SQRT3,
        '6B': I_SQRT3,
        '6C': Cyclo12.rational(1),
    },
}


def psi_character(label: str, parity: Parity) -> Cyclo12:
    try:
        return _PSI_VALUES[parity][label]
    except KeyError:
        raise UnknownLabel(f'no class {label!r} in {group_name(parity)}') from None


def etale_dual(parity: Parity) -> Dict[str, Cyclo12]:
    """Character of the dual representation: complex conjugate values."""
    return {label: value.conj() for label, value in _PSI_VALUES[parity].items()}


def character_table(parity: Parity, etale: bool = False) -> List[Tuple[ClassLabel, Cyclo12]]:
    values = etale_dual(parity) if etale else _PSI_VALUES[parity]
    return [(cls, values[cls.label]) for cls in conjugacy_classes(parity)]


@dataclass(frozen=True)
class Rep2x2:
    m11: Cyclo12
    m12: Cyclo12
    m21: Cyclo12
    m22: Cyclo12

    @classmethod
    def from_rows(cls, rows) -> 'Rep2x2':
        (a, b), (c, d) = rows
        return cls(*(x if isinstance(x, Cyclo12) else Cyclo12.rational(x) for x in (a, b, c, d)))

    @classmethod
    def scalar(cls, c: Cyclo12) -> 'Rep2x2':
        zero = Cyclo12()
        return cls(c, zero, zero, c)

    @classmethod
    def diag(cls, a: Cyclo12, d: Cyclo12) -> 'Rep2x2':
        zero = Cyclo12()
        return cls(a, zero, zero, d)

    @classmethod
    def identity(cls) -> 'Rep2x2':
        return cls.scalar(Cyclo12.rational(1))

    def rows(self) -> List[List[Cyclo12]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]

    def __mul__(self, other: 'Rep2x2') -> 'Rep2x2':
        return Rep2x2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __pow__(self, k: int) -> 'Rep2x2':
        base = self if k >= 0 else self.inverse()
        result = Rep2x2.identity()
        for _ in range(abs(k)):
            result = result * base
        return result

    def scale(self, c: Cyclo12) -> 'Rep2x2':
        return Rep2x2(c * self.m11, c * self.m12, c * self.m21, c * self.m22)

    def det(self) -> Cyclo12:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> Cyclo12:
        return self.m11 + self.m22

    def transpose(self) -> 'Rep2x2':
        return Rep2x2(self.m11, self.m21, self.m12, self.m22)

    def inverse(self) -> 'Rep2x2':
        d = self.det().inv()
        return Rep2x2(self.m22 * d, -self.m12 * d, -self.m21 * d, self.m11 * d)


_ZETA3_INV = ZETA3.conj()

_PSI_GENERATORS: Dict[Parity, Tuple[Rep2x2, Rep2x2]] = {
    Parity.ODD: (Rep2x2.diag(_ZETA3_INV, ZETA3), Rep2x2.from_rows([[0, 1], [-1, 0]])),
    Parity.EVEN: (Rep2x2.diag(ZETA3, _ZETA3_INV), Rep2x2.from_rows([[0, 1], [-1, 0]])),
}
_PSI_PHI = Rep2x2.diag(Cyclo12.rational(1), Cyclo12.rational(-1))


def psi_matrix(g: GroupElement) -> Rep2x2:
    """ψ(σˢτᵗφᶠ) = ψ(σ)ˢ ψ(τ)ᵗ ψ(φ)ᶠ."""
    psi_sigma, psi_tau = _PSI_GENERATORS[g.parity]
    return psi_sigma ** g.s * psi_tau ** g.t * _PSI_PHI ** g.f


def psi_etale_matrix(g: GroupElement) -> Rep2x2:
    """The contragredient (ψ(g)⁻¹)ᵗ, realizing the étale dual."""
    return psi_matrix(g).inverse().transpose()
