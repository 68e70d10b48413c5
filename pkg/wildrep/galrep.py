"""
Inertia classification at p = 3 and assembly of ρ = χ ⊗ ψ.

The classifier reads the Kodaira type and v(Δ_min) of a potentially good
curve. Only the wild image C₃⋊C₄ gets a full representation; good
reduction gets its Frobenius characteristic polynomial, cyclic images
are reported without a tame character, and potentially multiplicative
curves are out of scope.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import grouprep
from .counting import ReducedCurve, frobenius_trace, trace_sigma_frob
from .cyclo12 import I_SQRT3, Cyclo12, chi_frob, sqrt
from .errors import ClassifierContradiction, InvalidArgument, OutOfScope
from .grouprep import ClassLabel, Rep2x2
from .models import InertiaImage, Parity, Reduction
from .weierstrass import (
    I0_STAR, III, III_STAR, LocalData, WeierstrassModel, complete_square, residue, tate_algorithm,
    val3,
)

log = logging.getLogger(__name__)

EPSILON = -1
"""Sign in tr ψ(σ·Frob) = ε·i√3, fixed by the fixed-point count at n = 1."""

_VALUATION_BY_TYPE = {I0_STAR: 6, III: 3, III_STAR: 9}

INERTIA_FIELD_NOTE = 'inertia acts through Gal(L/K^nr) with L = K^nr(E[2], Delta^(1/4))'
BASIS_NOTE = ('matrices are given in the basis where rho(Frob) and rho(sigma) are diagonal; '
              'any other basis gives a conjugate representation')
ETALE_NOTE = 'etale cohomology: characters evaluated on the geometric Frobenius Frob^-1'


def classify_inertia(ld: LocalData) -> InertiaImage:
    if ld.reduction == Reduction.GOOD:
        return InertiaImage.TRIVIAL
    if not ld.potentially_good:
        raise OutOfScope(f'potentially multiplicative reduction, v(j)={ld.v_j}', ld)

    kodaira, v = ld.kodaira, ld.v_delta_min
    expected = _VALUATION_BY_TYPE.get(kodaira)
    if expected is not None and v != expected:
        raise ClassifierContradiction(f'type {kodaira} requires v(delta)={expected}, got {v}')

    cases = [
        (kodaira == I0_STAR, InertiaImage.C2),
        (kodaira == III, InertiaImage.C4),
        (kodaira == III_STAR, InertiaImage.C4),
        (v % 4 == 0, InertiaImage.C3),
        (v % 4 == 2 and kodaira != I0_STAR, InertiaImage.C6),
        (v % 2 == 1 and kodaira not in (III, III_STAR), InertiaImage.C3xC4),
    ]
    fired = [image for condition, image in cases if condition]
    if len(fired) != 1:
        raise ClassifierContradiction(f'type {kodaira}, v(delta)={v}: cases {fired}')
    return fired[0]


def geometric_inertia_bound(j) -> Optional[InertiaImage]:
    """
    Automorphism group of the reduction over F̄₃ of a curve with invariant j,
    which contains the inertia image. None for non-integral j.
    """
    if val3(j) < 0:
        return None
    return InertiaImage.C3xC4 if residue(j) == 0 else InertiaImage.C2


def rho_frob(n: int) -> Rep2x2:
    """ρ(Frob): the scalar χ(Frob) for even n, χ(Frob)·diag(1, −1) for odd n."""
    chi = chi_frob(n)
    if Parity.of(n) == Parity.EVEN:
        return Rep2x2.scalar(chi)
    return Rep2x2.diag(chi, -chi)


def rho_generators(parity: Parity, etale: bool = False) -> Dict[str, Rep2x2]:
    matrix = grouprep.psi_etale_matrix if etale else grouprep.psi_matrix
    return {name: matrix(g) for name, g in grouprep.generators(parity).items()}


@dataclass(frozen=True)
class FrobeniusData:
    a: int
    q: int
    eigenvalues: Optional[Tuple[Cyclo12, Cyclo12]] = None

    def charpoly(self) -> str:
        return f'T^2 - ({self.a})T + {self.q}'


def frobenius_data(ld: LocalData, n: int) -> FrobeniusData:
    trace = frobenius_trace(ReducedCurve.from_model(ld.minimal_model), n)
    a, q = trace.a_n, trace.q
    root = sqrt(a * a - 4 * q)
    eigenvalues = None
    if root is not None:
        eigenvalues = ((root + a) / 2, (a - root) / 2)
    return FrobeniusData(a, q, eigenvalues)


@dataclass(frozen=True)
class GaloisRepReport:
    model: WeierstrassModel
    short_model: WeierstrassModel
    local_data: LocalData
    inertia: InertiaImage
    n: int
    parity: Parity
    frobenius: Optional[FrobeniusData] = None
    chi_frob: Optional[Cyclo12] = None
    galois_group_name: Optional[str] = None
    psi_table: Optional[List[Tuple[ClassLabel, Cyclo12]]] = None
    rho_frob: Optional[Rep2x2] = None
    rho_generators: Optional[Dict[str, Rep2x2]] = None
    etale: bool = False
    notes: List[str] = field(default_factory=list)


def build_representation(m: WeierstrassModel, etale: bool = False) -> GaloisRepReport:
    n = m.residue_degree
    parity = Parity.of(n)
    ld = tate_algorithm(m)
    inertia = classify_inertia(ld)
    short = complete_square(m)
    notes = []
    if short != m:
        notes.append(f'completed the square: {short}')

    if inertia == InertiaImage.TRIVIAL:
        frob = frobenius_data(ld, n)
        notes.append(f'good reduction, Frobenius characteristic polynomial {frob.charpoly()}')
        return GaloisRepReport(m, short, ld, inertia, n, parity, frobenius=frob, notes=notes)

    bound = geometric_inertia_bound(ld.j_invariant)
    assert bound is not None
    if bound.order % inertia.order:
        raise ClassifierContradiction(
            f'inertia {inertia.value} does not embed in Aut of the reduction ({bound.value})')
    notes.append(f'automorphism group of the reduction over F3bar: {bound.value}')
    notes.append(INERTIA_FIELD_NOTE)

    if inertia != InertiaImage.C3xC4:
        notes.append(f'tame inertia image {inertia.value}: character not constructed')
        return GaloisRepReport(m, short, ld, inertia, n, parity, notes=notes)

    notes.append(BASIS_NOTE)
    if etale:
        notes.append(ETALE_NOTE)
    log.info('wild inertia for %s, n=%d', m, n)
    return GaloisRepReport(
        m, short, ld, inertia, n, parity,
        chi_frob=chi_frob(n),
        galois_group_name=grouprep.group_name(parity),
        psi_table=grouprep.character_table(parity, etale=etale),
        rho_frob=rho_frob(n),
        rho_generators=rho_generators(parity, etale=etale),
        etale=etale,
        notes=notes,
    )


def sigma_frob_traces(n: int) -> Tuple[Cyclo12, int]:
    """tr ρ(σ·Frob) from the matrices and from the fixed-point count."""
    if n < 1 or n % 2 == 0:
        raise InvalidArgument(f'sigma*Frob traces are compared for odd n, got {n}')
    sigma = grouprep.psi_matrix(grouprep.sigma(Parity.ODD))
    return (sigma * rho_frob(n)).trace(), trace_sigma_frob(n)


def sigma_frob_traces_agree(n: int) -> bool:
    matrix_trace, geometric = sigma_frob_traces(n)
    return matrix_trace == geometric


def derive_epsilon() -> int:
    """ε from 3 = tr ρ(σ·Frob) = ε·i√3·χ(Frob) at n = 1."""
    value = Cyclo12.rational(trace_sigma_frob(1)) / (I_SQRT3 * chi_frob(1))
    return int(value.to_rational())
