import json
import logging
from typing import Callable, List, Optional, Sequence

import click
from rich.console import Console
from rich.logging import RichHandler

from .CellCollection import CellCollection
from .PolyShape import PolyShape
from .RookBoard import RookBoard
from .PolyominoIdeal import PolyominoIdeal
from .AlgebraInvariants import AlgebraInvariants
from .UnivariateSeriesData import UnivariateSeriesData
from .PolyominoEnumerator import PolyominoEnumerator
from .Campaign import Campaign
from .Settings import Settings
from .Exceptions import PolyominoIdealError, CellParseError, BudgetExceeded

logger = logging.getLogger(__name__)

EXIT_CAMPAIGN_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3
EXIT_OTHER_ERROR = 4

class PolyoGroup(click.Group):

    """
    Maps the errors of the package to exit codes: 2 for
    unreadable cells, 3 for an exhausted budget, 4 for
    any other error.
    """

    def invoke(self, ctx : click.Context):
        try:
            return super().invoke(ctx)
        except CellParseError as error:
            click.echo(f"Error: {error}", err = True)
            ctx.exit(EXIT_PARSE_ERROR)
        except BudgetExceeded as error:
            click.echo(f"Error: {error}", err = True)
            ctx.exit(EXIT_BUDGET_EXCEEDED)
        except PolyominoIdealError as error:
            click.echo(f"Error: {error}", err = True)
            ctx.exit(EXIT_OTHER_ERROR)

def configure_logging(verbosity : int) -> None:

    level = logging.WARNING if verbosity == 0 else (logging.INFO if verbosity == 1 else logging.DEBUG)
    logging.basicConfig(level = level,
                        format = "%(message)s",
                        datefmt = "[%X]",
                        handlers = [RichHandler(console = Console(stderr = True), show_path = False)],
                        force = True)

def read_cells(cells : Optional[str], file : Optional[str]) -> CellCollection:

    if (cells is None) == (file is None):
        raise click.UsageError("Give exactly one of --cells and --file.")
    if file is not None:
        with open(file, 'r') as handle:
            cells = handle.read()
    return CellCollection.parse(cells)

def cells_input(function : Callable) -> Callable:

    """
    Adds the --cells/--file pair of options, to be read
    with read_cells().
    """

    function = click.option('--file', '-f', 'file', type = click.Path(exists = True, dir_okay = False),
                            help = 'File holding the cells, in text or JSON form.')(function)
    function = click.option('--cells', '-c', 'cells', default = None,
                            help = 'Cells, e.g. "{{1,1},{2,1},{2,2}}".')(function)
    return function

def emit(ctx : click.Context, text : str, payload) -> None:

    """
    Writes the text form, or the JSON form with --json,
    to the --output file or to stdout.
    """

    body = json.dumps(payload, sort_keys = True, indent = 2) if ctx.obj['json'] else text
    if ctx.obj['output'] is None:
        click.echo(body)
    else:
        with open(ctx.obj['output'], 'w') as handle:
            handle.write(body + '\n')
        logger.info("Output written to %s", ctx.obj['output'])

def emit_generators(ctx : click.Context, generators : List[str]) -> None:
    emit(ctx, '\n'.join(generators), {'generators': generators})

def polynomial_payload(coefficients : Sequence[int]) -> dict:
    return {'coefficients': list(coefficients), 'text': UnivariateSeriesData.format_polynomial(coefficients)}

@click.group(cls = PolyoGroup)
@click.option('--order', type = click.Choice(['degrevlex', 'lex']), default = 'degrevlex', show_default = True)
@click.option('--direction', type = click.Choice(['NE', 'NW', 'SE', 'SW', 'EN', 'WN', 'ES', 'WS']), default = 'EN', show_default = True,
              help = 'Reading of the vertex grid defining the variable order.')
@click.option('--field', default = 'gf32003', show_default = True, help = "'gf32003', 'q' or 'gf<p>'.")
@click.option('--budget-pairs', type = click.IntRange(min = 1), default = 10**6, show_default = True)
@click.option('--budget-zigzag', type = click.IntRange(min = 1), default = 10**7, show_default = True)
@click.option('--budget-admissible', type = click.IntRange(min = 1), default = 2*10**4, show_default = True)
@click.option('--seed', type = int, default = 0, show_default = True)
@click.option('--workers', type = click.IntRange(min = 1), default = 1, show_default = True)
@click.option('--json', 'as_json', is_flag = True, help = 'Print JSON instead of text.')
@click.option('--output', '-o', type = click.Path(dir_okay = False), default = None, help = 'Write to a file instead of stdout.')
@click.option('--verbose', '-v', count = True, help = 'INFO logs, or DEBUG logs when repeated.')
@click.pass_context
def cli(ctx, order, direction, field, budget_pairs, budget_zigzag, budget_admissible, seed, workers, as_json, output, verbose):

    """
    Polyomino ideals: Groebner bases, primality, Hilbert
    series, rook polynomials and verification campaigns.
    """

    configure_logging(verbose)
    try:
        settings = Settings(field = field,
                            order_kind = order,
                            direction = direction,
                            pair_budget = budget_pairs,
                            zigzag_budget = budget_zigzag,
                            admissible_budget = budget_admissible,
                            seed = seed,
                            workers = workers)
    except PolyominoIdealError as error:
        raise click.BadParameter(str(error))
    ctx.obj = {'settings': settings, 'json': as_json, 'output': output}

def describe_collection(ctx, cells, file):

    collection = read_cells(cells, file)
    payload = collection.structure().to_dict()
    payload['cells'] = collection.to_json()['cells']
    payload['numberOfVertices'] = len(collection.vertices())
    payload['innerIntervals'] = len(collection.inner_intervals())
    if collection.Rank > 0 and payload['isPolyomino']:
        shape = PolyShape(collection, ctx.obj['settings'])
        payload['path'] = shape.classify_path().to_dict()
        payload['isThin'] = shape.is_thin()
        payload['isHQComplement'] = shape.is_hq_complement()
        payload['convexityDegree'] = shape.convexity_degree() if payload['isConvex'] else None

    text = '\n'.join(f"{key}: {json.dumps(payload[key])}" for key in sorted(payload))
    emit(ctx, text, payload)

@cli.command()
@cells_input
@click.pass_context
def describe(ctx, cells, file):
    """Connectivity, convexity, holes and path structure."""
    describe_collection(ctx, cells, file)

@cli.command()
@cells_input
@click.pass_context
def structure(ctx, cells, file):
    """Same as describe."""
    describe_collection(ctx, cells, file)

@cli.command()
@cells_input
@click.pass_context
def matrix(ctx, cells, file):
    """Bounding box matrix of the vertex variables."""
    rows = read_cells(cells, file).polyo_matrix()
    emit(ctx, '\n'.join(' '.join(row) for row in rows), {'matrix': rows})

@cli.command()
@cells_input
@click.pass_context
def ideal(ctx, cells, file):
    """Inner 2-minors generating the polyomino ideal."""
    emit_generators(ctx, PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).inner_minor_ideal().to_text())

@cli.command('adjacent-ideal')
@cells_input
@click.pass_context
def adjacent_ideal(ctx, cells, file):
    """2-minors of the cells only."""
    emit_generators(ctx, PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).adjacent_minor_ideal().to_text())

@cli.command('lattice-ideal')
@cells_input
@click.pass_context
def lattice_ideal(ctx, cells, file):
    """Saturation of the polyomino ideal by all the variables."""
    emit_generators(ctx, PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).lattice_ideal().to_text())

@cli.command()
@cells_input
@click.option('--model', type = click.Choice(['graph', 'shikama', 'mrr']), default = 'graph', show_default = True)
@click.option('--corner', nargs = 2, type = int, default = None, help = "Special corner of the 'shikama' model.")
@click.pass_context
def toric(ctx, cells, file, model, corner):
    """Toric ideal of a monomial parametrization of the vertices."""
    polyomino_ideal = PolyominoIdeal(read_cells(cells, file), ctx.obj['settings'])
    emit_generators(ctx, polyomino_ideal.toric_ideal(model, tuple(corner) if corner else None).to_text())

@cli.command()
@cells_input
@click.pass_context
def groebner(ctx, cells, file):
    """Reduced Groebner basis of the polyomino ideal."""
    basis = PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).inner_minor_ideal().groebner_basis()
    emit_generators(ctx, basis.to_text())

@cli.command()
@cells_input
@click.pass_context
def hilbert(ctx, cells, file):
    """h-polynomial and Krull dimension of K[P]."""
    series = AlgebraInvariants(read_cells(cells, file), ctx.obj['settings']).hilbert_data()
    text = f"h(t) = {UnivariateSeriesData.format_polynomial(series.HCoefficients)}\ndim = {series.KrullDimension}"
    emit(ctx, text, series.to_dict())

@cli.command()
@cells_input
@click.pass_context
def rook(ctx, cells, file):
    """Rook polynomial."""
    coefficients = RookBoard(read_cells(cells, file)).rook_polynomial()
    emit(ctx, UnivariateSeriesData.format_polynomial(coefficients), polynomial_payload(coefficients))

@cli.command('switching-rook')
@cells_input
@click.pass_context
def switching_rook(ctx, cells, file):
    """Switching rook polynomial."""
    coefficients = RookBoard(read_cells(cells, file)).switching_rook_polynomial()
    emit(ctx, UnivariateSeriesData.format_polynomial(coefficients), polynomial_payload(coefficients))

def list_walks(ctx, cells, file, max_walks):

    walks = PolyShape(read_cells(cells, file), ctx.obj['settings']).find_zig_zag_walks(max_walks = max_walks)
    lines = [' '.join(str(I.to_list()) for I in W.Intervals) + f"  v: {[list(v) for v in W.V]}" for W in walks]
    emit(ctx, '\n'.join(lines) if lines else 'no zig-zag walk', {'walks': [W.to_dict() for W in walks]})

@cli.command()
@cells_input
@click.option('--max-walks', type = click.IntRange(min = 1), default = None)
@click.pass_context
def zigzag(ctx, cells, file, max_walks):
    """Zig-zag walks of the collection."""
    list_walks(ctx, cells, file, max_walks)

@cli.command()
@cells_input
@click.option('--max-walks', type = click.IntRange(min = 1), default = None)
@click.pass_context
def walks(ctx, cells, file, max_walks):
    """Same as zigzag."""
    list_walks(ctx, cells, file, max_walks)

@cli.command()
@cells_input
@click.option('--method', type = click.Choice(['auto', 'exact']), default = 'auto', show_default = True)
@click.pass_context
def prime(ctx, cells, file, method):
    """Primality of the polyomino ideal, with a certificate."""
    verdict = PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).is_prime(method)
    emit(ctx, str(verdict), verdict.to_dict())
    if verdict.Status == 'indeterminate':
        ctx.exit(EXIT_BUDGET_EXCEEDED)

@cli.command('radical-admissible')
@cells_input
@click.pass_context
def radical_admissible(ctx, cells, file):
    """Radical of the polyomino ideal from its admissible sets."""
    emit_generators(ctx, PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).radical_via_admissible().to_text())

@cli.command('closed-path-p1')
@cells_input
@click.pass_context
def closed_path_p1(ctx, cells, file):
    """I_P plus the zig-zag binomials of a closed path."""
    p1, verdict, height = PolyominoIdeal(read_cells(cells, file), ctx.obj['settings']).closed_path_p1()
    generators = p1.to_text()
    text = '\n'.join(generators + [f"verdict: {verdict}", f"height: {height}"])
    emit(ctx, text, {'generators': generators, 'verdict': verdict.to_dict(), 'height': height})

@cli.command()
@cells_input
@click.pass_context
def gorenstein(ctx, cells, file):
    """Gorenstein property of K[P]."""
    probe = AlgebraInvariants(read_cells(cells, file), ctx.obj['settings']).gorenstein_probe()
    emit(ctx, '\n'.join([probe['verdict']] + probe['reasons']), probe)

@cli.command('pseudo-gorenstein')
@cells_input
@click.pass_context
def pseudo_gorenstein(ctx, cells, file):
    """Whether the leading coefficient of h(t) is 1."""
    invariants = AlgebraInvariants(read_cells(cells, file), ctx.obj['settings'])
    payload = {'pseudoGorenstein': invariants.pseudo_gorenstein_check()}
    collection = invariants.Ideal.Collection
    if collection.Rank > 0 and collection.structure().IsPolyomino and invariants.Ideal.Shape.classify_path().Kind == 'openPath':
        payload['pathCriterion'] = invariants.Ideal.Shape.pseudo_gorenstein_path_criterion()
    emit(ctx, '\n'.join(f"{key}: {value}" for key, value in sorted(payload.items())), payload)

@cli.command()
@cells_input
@click.pass_context
def level(ctx, cells, file):
    """Level property of a path, from its stairs."""
    value = AlgebraInvariants(read_cells(cells, file), ctx.obj['settings']).level_probe_for_paths()
    emit(ctx, str(value), {'level': value})

@cli.command('level-socle')
@cells_input
@click.pass_context
def level_socle(ctx, cells, file):
    """Level property from the socle of an Artinian reduction."""
    invariants = AlgebraInvariants(read_cells(cells, file), ctx.obj['settings'])
    payload = {'level': invariants.level_via_socle(), 'socleDegrees': invariants.socle_degrees()}
    emit(ctx, f"{payload['level']} (socle degrees {payload['socleDegrees']})", payload)

@cli.command('cm-type')
@cells_input
@click.pass_context
def cm_type(ctx, cells, file):
    """Cohen-Macaulay type from the socle of an Artinian reduction."""
    value = AlgebraInvariants(read_cells(cells, file), ctx.obj['settings']).cm_type_via_socle()
    emit(ctx, str(value), {'cmType': value})

@cli.command()
@cells_input
@click.pass_context
def stairs(ctx, cells, file):
    """Stairs of a path, with the odd and bad ones."""
    report = PolyShape(read_cells(cells, file), ctx.obj['settings']).stair_analysis()
    payload = report.to_dict()
    emit(ctx, '\n'.join(f"{key}: {payload[key]}" for key in sorted(payload)), payload)

@cli.command('fuss-catalan')
@click.option('--p', 'p', type = int, required = True)
@click.option('--n', 'n', type = int, required = True)
@click.pass_context
def fuss_catalan(ctx, p, n):
    """Fuss-Catalan number C_p(n)."""
    value = AlgebraInvariants.fuss_catalan(p, n)
    emit(ctx, str(value), {'p': p, 'n': n, 'value': value})

@cli.command('enumerate')
@click.option('--rank', '-n', type = click.IntRange(min = 1), required = True)
@click.option('--mod-symmetry', is_flag = True, help = 'One polyomino per orbit of the symmetries of the square.')
@click.option('--collections', is_flag = True, help = 'Weakly connected collections instead of polyominoes.')
@click.option('--max-rank', type = click.IntRange(min = 1), default = None, help = 'Raises the enumeration bound.')
@click.pass_context
def enumerate_command(ctx, rank, mod_symmetry, collections, max_rank):
    """Polyominoes, or weakly connected collections, of a given rank."""
    enumerator = PolyominoEnumerator(rank, mod_symmetry = mod_symmetry, weakly_connected = collections, max_rank = max_rank)
    found = sorted(enumerator, key = lambda c: c.Cells)
    emit(ctx, '\n'.join(c.to_text() for c in found), {'rank': rank, 'count': len(found), 'collections': [c.to_json()['cells'] for c in found]})

@cli.command()
@click.option('--max-rank', type = click.IntRange(min = 1), required = True)
@click.option('--check', 'checks', multiple = True, type = click.Choice(list(Campaign.checks)),
              help = 'May be repeated. Every check by default.')
@click.option('--progress/--no-progress', default = False)
@click.pass_context
def campaign(ctx, max_rank, checks, progress):

    """
    Runs the checks over every polyomino up to a rank. The
    JSONL report goes to --output, and the summary to
    stdout. Exits with 1 if some check failed.
    """

    report = Campaign(max_rank, checks or None, ctx.obj['settings']).run(progress = progress)
    if ctx.obj['output'] is not None:
        with open(ctx.obj['output'], 'w') as handle:
            handle.write(report.to_jsonl())
        logger.info("Campaign report written to %s", ctx.obj['output'])

    summary = report.summary()
    if ctx.obj['json']:
        click.echo(json.dumps({'summary': summary, 'failures': report.Failures}, sort_keys = True, indent = 2))
    else:
        click.echo(json.dumps(summary, sort_keys = True))
        for failure in report.Failures:
            click.echo(f"FAILED {failure['check']} on {failure['cells']}: {failure['detail']}")
    if not report.Passed:
        ctx.exit(EXIT_CAMPAIGN_FAILURE)

def main(argv : Optional[Sequence[str]] = None) -> int:

    """
    Entry point of the polyoideals command. Returns the
    exit code instead of exiting.
    """

    try:
        code = cli.main(args = list(argv) if argv is not None else None, prog_name = 'polyoideals', standalone_mode = False)
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.exceptions.Abort:
        return 1
    return code if isinstance(code, int) else 0

if __name__ == "__main__":
    raise SystemExit(main())
