import orjson
import pytest
from pydantic import ValidationError

from wildrep.errors import ParseError
from wildrep.models import CurveInput, InertiaImage, ReportDocument, Status
from wildrep.report import (
    classify_document, dumps, error_document, exit_code, rep_document,
)


def _curve(ainvs, n=1, curve_id=None):
    return CurveInput(id=curve_id, a_invariants=ainvs, residue_degree=n)


def test_curve_input_parsing():
    curve = _curve(' 0, 0,0, -9/3 ,1/3')
    assert curve.a_invariants == ['0', '0', '0', '-3', '1/3']
    assert curve.residue_degree == 1
    assert CurveInput.parse_raw('{"a_invariants": [0, 0, 0, 0, "9"], "residue_degree": 2}') \
        .rationals()[4] == 9


@pytest.mark.parametrize('ainvs', ['1,2,3', 'a,0,0,0,1', '0,0,0,0,1/0'])
def test_curve_input_rejected(ainvs):
    with pytest.raises(ValidationError):
        _curve(ainvs)


def test_residue_degree_positive():
    with pytest.raises(ValidationError):
        _curve('0,0,0,0,9', n=0)


def test_classify_document_wild():
    doc = classify_document(_curve('0,0,0,0,9', curve_id='running'))
    assert doc.status == Status.OK
    assert doc.inertia == InertiaImage.C3xC4
    assert doc.inertia_order == 12
    assert doc.local_data.kodaira == 'IV'
    assert doc.local_data.v_delta_min == 7
    assert doc.local_data.v_j is None
    assert doc.representation is None


def test_rep_document_wild():
    doc = rep_document(_curve('0,0,0,0,9'))
    rep = doc.representation
    assert rep.galois_group == 'C3:D4'
    assert rep.parity == 'ODD'
    assert rep.chi_frob.exact == ['-1', '0', '2', '0']
    assert [c.label for c in rep.psi_table][-3:] == ['6A', '6B', '6C']
    assert set(rep.rho_generators) == {'sigma', 'tau', 'phi'}
    assert rep.rho_frob[0][1].exact == ['0', '0', '0', '0']
    assert doc.frobenius_charpoly is None


def test_rep_document_good():
    doc = rep_document(_curve('0,0,0,-1,0'))
    assert doc.inertia == InertiaImage.TRIVIAL
    assert doc.representation is None
    assert (doc.frobenius_charpoly.a, doc.frobenius_charpoly.q) == (0, 3)
    assert len(doc.frobenius_charpoly.eigenvalues) == 2


def test_out_of_scope_document():
    doc = classify_document(_curve('1,0,0,0,3'))
    assert doc.status == Status.OUT_OF_SCOPE
    assert doc.error.code == 'OUT_OF_SCOPE'
    assert doc.local_data.kodaira == 'I1'
    assert doc.inertia is None


def test_error_documents():
    doc = rep_document(_curve('0,0,0,0,0'))
    assert doc.status == Status.ERROR
    assert doc.error.code == 'SINGULAR_MODEL'

    doc = error_document(None, ParseError('not JSON', 3))
    assert doc.input is None
    assert doc.error.code == 'PARSE_ERROR'
    assert doc.error.message == 'line 3: not JSON'


def test_dumps_roundtrip():
    doc = rep_document(_curve('0,0,0,0,9', n=2, curve_id='even'))
    raw = dumps(doc)
    assert b'\n' not in raw
    assert ReportDocument.parse_raw(raw) == doc
    pretty = dumps(doc, pretty=True)
    assert orjson.loads(pretty) == orjson.loads(raw)
    assert list(orjson.loads(raw)) == sorted(orjson.loads(raw))


def test_exit_code():
    ok = classify_document(_curve('0,0,0,0,9'))
    out_of_scope = classify_document(_curve('1,0,0,0,3'))
    failed = error_document(None, ParseError('bad'))
    assert exit_code([ok, ok]) == 0
    assert exit_code([ok, out_of_scope]) == 2
    assert exit_code([out_of_scope, failed, ok]) == 1
    assert exit_code([]) == 0


@pytest.mark.parametrize('ainvs, n', [
    ('0,0,0,0,9', 1), ('0,0,0,0,9', 2), ('0,0,0,-1,0', 1), ('0,0,0,0,1', 1), ('1,0,0,0,3', 1),
])
def test_documents_are_reproducible(ainvs, n):
    for etale in (False, True):
        first = dumps(rep_document(_curve(ainvs, n), etale=etale))
        second = dumps(rep_document(_curve(ainvs, n), etale=etale))
        assert first == second
    assert dumps(classify_document(_curve(ainvs, n))) == \
        dumps(classify_document(_curve(ainvs, n)))
