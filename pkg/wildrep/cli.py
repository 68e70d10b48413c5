import json
import logging.config
from functools import partial
from typing import BinaryIO, Callable, Iterator, List, Optional, Union

import click
import orjson
from pydantic import ValidationError

from . import counting, galrep
from .counting import ReducedCurve
from .cyclo12 import Cyclo12
from .errors import CapacityExceeded, ParseError, WildRepError
from .models import CountRow, CurveInput, Parity, Reduction, ReportDocument, VerifyRow
from .report import classify_document, dumps, error_document, exit_code, rep_document
from .settings import settings
from .tasks import Task
from .weierstrass import WeierstrassModel, tate_algorithm

log = logging.getLogger(__name__)

# y² = x³ − x, the reduction of every curve in the wild case
WILD_REDUCTION = ReducedCurve(0, -1, 0)


def setup_logging():
    with open(settings.LOGGING_CONFIG_FILE) as f:
        config = json.loads(f.read())
    level = 'DEBUG' if settings.DEBUG else settings.LOG_LEVEL
    if level:
        config['loggers']['wildrep']['level'] = level.upper()
    if settings.LOG_FILE:
        config['handlers']['file']['filename'] = settings.LOG_FILE
        config['loggers']['wildrep']['handlers'].append('file')
    else:
        del config['handlers']['file']
    logging.config.dictConfig(config)


def _int_list(ctx, param, value: str) -> List[int]:
    try:
        values = [int(v) for v in value.split(',') if v.strip()]
    except ValueError:
        raise click.BadParameter(f'expected comma-separated integers, got {value!r}')
    if not values or min(values) < 1:
        raise click.BadParameter('degrees must be positive integers')
    return values


def _parse_line(line: bytes, lineno: int) -> CurveInput:
    try:
        text = line.decode()
    except UnicodeDecodeError as exc:
        raise ParseError(f'not valid UTF-8: {exc.reason} at byte {exc.start}', lineno) from exc
    try:
        return CurveInput.parse_raw(text)
    except (ValidationError, ValueError) as exc:
        raise ParseError(str(exc).replace('\n', ' '), lineno) from exc


def read_inputs(input_file: Optional[BinaryIO], curve: Optional[str],
                n: int) -> Iterator[Union[CurveInput, ParseError]]:
    """Curves from --curve or one JSON object per non-blank line of --input."""
    if curve is not None:
        try:
            yield CurveInput(a_invariants=curve, residue_degree=n)
        except ValidationError as exc:
            yield ParseError(str(exc).replace('\n', ' '))
    if input_file is not None:
        for lineno, line in enumerate(input_file, 1):
            if not line.strip():
                continue
            try:
                yield _parse_line(line, lineno)
            except ParseError as exc:
                log.error('%s', exc)
                yield exc


def _curve_options(func):
    for option in reversed([
        click.option('--input', 'input_file', type=click.File('rb'),
                     help='JSON Lines file of curves ("-" for stdin).'),
        click.option('--curve', help='Inline a-invariants "a1,a2,a3,a4,a6".'),
        click.option('--n', 'n', type=click.IntRange(min=1), default=1, show_default=True,
                     help='Residue degree for --curve.'),
        click.option('--json', 'json_', is_flag=True, help='JSON Lines output (the default).'),
        click.option('--pretty', is_flag=True, help='Indent the JSON output.'),
    ]):
        func = option(func)
    return func


def _run(ctx: click.Context, target: Callable[[CurveInput], ReportDocument], name: str,
         input_file, curve, n, pretty):
    if input_file is None and curve is None:
        raise click.UsageError('one of --input or --curve is required')
    items = list(read_inputs(input_file, curve, n))
    curves = [item for item in items if isinstance(item, CurveInput)]
    task = Task(target, n_workers=settings.N_WORKERS, name=name,
                timeout=settings.TASK_TIMEOUT_SECONDS, on_timeout=error_document)
    results = iter(task.map(curves))
    docs = [next(results) if isinstance(item, CurveInput) else error_document(None, item)
            for item in items]
    for doc in docs:
        click.echo(dumps(doc, pretty))
    ctx.exit(exit_code(docs))


@click.group(help=settings.APP_DESCRIPTION)
def main():
    setup_logging()


@main.command(help='Kodaira type, local data and inertia image.')
@_curve_options
@click.pass_context
def classify(ctx, input_file, curve, n, json_, pretty):
    _run(ctx, classify_document, 'classify', input_file, curve, n, pretty)


@main.command(help='Full representation report.')
@_curve_options
@click.option('--etale', is_flag=True, help='Report the dual (etale) representation.')
@click.pass_context
def rep(ctx, input_file, curve, n, json_, pretty, etale):
    _run(ctx, partial(rep_document, etale=etale), 'rep', input_file, curve, n, pretty)


def _row(check: str, n: int, expected, actual) -> VerifyRow:
    status = 'PASS' if expected == actual else 'FAIL'
    return VerifyRow(check=check, n=n, expected=str(expected), actual=str(actual), status=status)


def _skip(check: str, n: int, reason: str) -> VerifyRow:
    return VerifyRow(check=check, n=n, status='SKIP', detail=reason)


def _expected_trace(n: int) -> int:
    """a_n of y² = x³ − x: eigenvalues (±i√3)ⁿ."""
    if n % 2:
        return 0
    return 2 * 3 ** (n // 2) * (1 if n % 4 == 0 else -1)


def _guarded(check: str, n: int, compute: Callable[[], VerifyRow]) -> VerifyRow:
    try:
        return compute()
    except CapacityExceeded as exc:
        return _skip(check, n, str(exc))


def verify_rows(n: int) -> Iterator[VerifyRow]:
    odd = Parity.of(n) == Parity.ODD
    if odd:
        yield _guarded('sys_count_formula', n, lambda: _row(
            'sys_count_formula', n,
            counting.sys_solution_formula(n), counting.count_sys_solutions(n)))
        yield _guarded('sys_count_raw', n, lambda: _row(
            'sys_count_raw', n,
            counting.count_sys_solutions_raw(n), counting.count_sys_solutions(n)))
        yield _guarded('sigma_frob_trace', n, lambda: _row(
            'sigma_frob_trace', n, *_sigma_frob_pair(n)))
    else:
        for check in ('sys_count_formula', 'sys_count_raw', 'sigma_frob_trace'):
            yield _skip(check, n, 'fixed-point system is defined for odd n only')
    yield _guarded('point_count_recurrence', n, lambda: _row(
        'point_count_recurrence', n,
        counting.count_points(WILD_REDUCTION, n),
        counting.frobenius_trace(WILD_REDUCTION, n).point_count))
    yield _row('trace_sign', n, _expected_trace(n),
               counting.frobenius_trace(WILD_REDUCTION, n).a_n)
    yield _row('det_rho_frob', n, Cyclo12.rational(3 ** n), galrep.rho_frob(n).det())


def _sigma_frob_pair(n: int):
    matrix_trace, geometric = galrep.sigma_frob_traces(n)
    return Cyclo12.rational(geometric), matrix_trace


@main.command(help='Check the fixed-point count, traces and determinants against brute force.')
@click.option('--n', 'n_list', default='1,3,5', show_default=True, callback=_int_list,
              help='Comma-separated residue degrees.')
@click.option('--json', 'json_', is_flag=True, help='JSON Lines output instead of a table.')
@click.pass_context
def verify(ctx, n_list, json_):
    rows = [row for n in n_list for row in verify_rows(n)]
    for row in rows:
        if json_:
            click.echo(orjson.dumps(row.dict(), option=orjson.OPT_SORT_KEYS))
        else:
            values = row.detail if row.status == 'SKIP' else f'{row.expected} vs {row.actual}'
            click.echo(f'{row.status:<5} n={row.n:<3} {row.check:<24} {values}')
    failed = sum(row.status == 'FAIL' for row in rows)
    if not json_:
        click.echo(f'{len(rows)} checks, {failed} failed', err=True)
    ctx.exit(1 if failed else 0)


@main.command(help='Point counts and Frobenius trace of a good-reduction curve.')
@click.option('--curve', required=True, help='Inline a-invariants "a1,a2,a3,a4,a6".')
@click.option('--n', 'n_list', default='1', show_default=True, callback=_int_list,
              help='Comma-separated extension degrees.')
@click.option('--json', 'json_', is_flag=True, help='JSON Lines output (the default).')
@click.option('--pretty', is_flag=True, help='Indent the JSON output.')
def count(curve, n_list, json_, pretty):
    try:
        parsed = CurveInput(a_invariants=curve)
        ld = tate_algorithm(WeierstrassModel.from_ainvs(parsed.rationals()))
    except (ValidationError, WildRepError) as exc:
        raise click.ClickException(str(exc))
    if ld.reduction != Reduction.GOOD:
        raise click.ClickException(f'reduction at 3 is {ld.reduction.value} (type {ld.kodaira})')
    reduced = ReducedCurve.from_model(ld.minimal_model)
    option = orjson.OPT_SORT_KEYS | (orjson.OPT_INDENT_2 if pretty else 0)
    for n in n_list:
        trace = counting.frobenius_trace(reduced, n)
        enumerated = (counting.count_points(reduced, n)
                      if n <= settings.MAX_COUNT_DEGREE else None)
        row = CountRow(n=n, q=trace.q, a=trace.a_n, point_count=trace.point_count,
                       enumerated=enumerated)
        click.echo(orjson.dumps(row.dict(), option=option))
