"""
Turn results into `ReportDocument`s and JSON Lines.

One document per input curve. Out-of-scope curves and per-curve errors
produce documents too, so that batch output stays aligned with input.
"""
import logging
from typing import Dict, List, Optional

import orjson

from .cyclo12 import Cyclo12
from .errors import OutOfScope
from .galrep import FrobeniusData, GaloisRepReport, build_representation, classify_inertia
from .grouprep import Rep2x2
from .models import (
    ClassValue, CurveInput, ErrorInfo, ExactValue, FrobeniusCharpoly, LocalDataDoc, Matrix,
    ReportDocument, RepresentationDoc, Status,
)
from .settings import settings
from .weierstrass import LocalData, WeierstrassModel, tate_algorithm

log = logging.getLogger(__name__)


def exact_value(x: Cyclo12) -> ExactValue:
    return ExactValue(exact=list(x.exact()), approx=x.approx(settings.APPROX_DIGITS))


def matrix(m: Rep2x2) -> Matrix:
    return [[exact_value(x) for x in row] for row in m.rows()]


def model_strings(m: WeierstrassModel) -> List[str]:
    return [str(a) for a in m.a_invariants]


def local_data_doc(ld: LocalData) -> LocalDataDoc:
    return LocalDataDoc(
        minimal_model=model_strings(ld.minimal_model),
        kodaira=str(ld.kodaira),
        v_delta_min=ld.v_delta_min,
        conductor_exponent=ld.conductor_exponent,
        reduction=ld.reduction,
        potentially_good=ld.potentially_good,
        j_invariant=str(ld.j_invariant),
        v_j=ld.v_j,
    )


def _charpoly_doc(frob: FrobeniusData) -> FrobeniusCharpoly:
    eigenvalues = None
    if frob.eigenvalues is not None:
        eigenvalues = [exact_value(x) for x in frob.eigenvalues]
    return FrobeniusCharpoly(a=frob.a, q=frob.q, eigenvalues=eigenvalues)


def _representation_doc(report: GaloisRepReport) -> RepresentationDoc:
    assert report.chi_frob is not None and report.rho_frob is not None
    assert report.psi_table is not None and report.rho_generators is not None
    generators: Dict[str, Matrix] = {name: matrix(m) for name, m in report.rho_generators.items()}
    return RepresentationDoc(
        parity=report.parity,
        galois_group=report.galois_group_name,
        chi_frob=exact_value(report.chi_frob),
        psi_table=[ClassValue(label=c.label, size=c.size, value=exact_value(v))
                   for c, v in report.psi_table],
        rho_frob=matrix(report.rho_frob),
        rho_generators=generators,
        etale=report.etale,
    )


def report_document(curve: CurveInput, report: GaloisRepReport) -> ReportDocument:
    return ReportDocument(
        schema_version=settings.SCHEMA_VERSION,
        input=curve,
        status=Status.OK,
        short_model=model_strings(report.short_model),
        local_data=local_data_doc(report.local_data),
        inertia=report.inertia,
        inertia_order=report.inertia.order,
        frobenius_charpoly=_charpoly_doc(report.frobenius) if report.frobenius else None,
        representation=_representation_doc(report) if report.chi_frob is not None else None,
        notes=list(report.notes),
    )


def error_document(curve: Optional[CurveInput], exc: Exception) -> ReportDocument:
    if isinstance(exc, OutOfScope):
        return ReportDocument(
            schema_version=settings.SCHEMA_VERSION,
            input=curve,
            status=Status.OUT_OF_SCOPE,
            error=ErrorInfo(code=exc.code, message=str(exc)),
            local_data=local_data_doc(exc.local_data) if exc.local_data else None,
            notes=['potentially multiplicative reduction: Tate curve, not represented'],
        )
    return ReportDocument(
        schema_version=settings.SCHEMA_VERSION,
        input=curve,
        status=Status.ERROR,
        error=ErrorInfo(code=getattr(exc, 'code', 'INTERNAL_ERROR'), message=str(exc)),
    )


def _model(curve: CurveInput) -> WeierstrassModel:
    return WeierstrassModel.from_ainvs(curve.rationals(), curve.residue_degree)


def classify_document(curve: CurveInput) -> ReportDocument:
    try:
        ld = tate_algorithm(_model(curve))
        inertia = classify_inertia(ld)
    except Exception as exc:
        return _failed(curve, exc)
    log.info('%s: type %s, inertia %s', curve.id or curve.a_invariants, ld.kodaira, inertia.value)
    return ReportDocument(
        schema_version=settings.SCHEMA_VERSION,
        input=curve,
        status=Status.OK,
        local_data=local_data_doc(ld),
        inertia=inertia,
        inertia_order=inertia.order,
    )


def rep_document(curve: CurveInput, etale: bool = False) -> ReportDocument:
    try:
        report = build_representation(_model(curve), etale=etale)
    except Exception as exc:
        return _failed(curve, exc)
    log.info('%s: inertia %s', curve.id or curve.a_invariants, report.inertia.value)
    return report_document(curve, report)


def _failed(curve: CurveInput, exc: Exception) -> ReportDocument:
    if isinstance(exc, OutOfScope):
        log.warning('%s: %s', curve.id or curve.a_invariants, exc)
    else:
        log.exception('%s failed: %s', curve.id or curve.a_invariants, exc)
    return error_document(curve, exc)


def dumps(doc: ReportDocument, pretty: bool = False) -> bytes:
    option = orjson.OPT_SORT_KEYS
    if pretty:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(doc.dict(), option=option)


def exit_code(docs: List[ReportDocument]) -> int:
    """1 if anything failed, else 2 if anything was out of scope, else 0."""
    statuses = {doc.status for doc in docs}
    if Status.ERROR in statuses:
        return 1
    if Status.OUT_OF_SCOPE in statuses:
        return 2
    return 0
