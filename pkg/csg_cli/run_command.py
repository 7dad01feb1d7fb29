"""
Command dispatch for the csg command-line front end.

Every command writes its result to the output stream once, at the end. Failures
produce one line of JSON on the error stream:

    {"error": <code>, "message": <text>, ...details}

Exit codes: 0 on success, 1 on domain errors, 2 on usage, file and parse errors.
"""

import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO

from dotenv import load_dotenv

from skew_gain.analyzers.balance_analyzer import BalanceAnalyzer
from skew_gain.analyzers.cycle_formulas import (
    cycle_distance_spectrum_closed,
    cycle_distance_spectrum_numeric,
    fallback_indices,
)
from skew_gain.analyzers.graph_operations import (
    adjacency_matrix,
    apply_switching,
    blocks,
    connected_components,
    is_bipartite,
    magnitude_graph,
)
from skew_gain.analyzers.spectral import char_poly, hermitian_eigenvalues
from skew_gain.exceptions import GraphFileError, SkewGainError
from skew_gain.models.cycle_params import CycleParams
from skew_gain.models.gain_graph import GainGraph
from skew_gain.models.spectrum import CharPoly
from skew_gain.settings.analysis_settings import AnalysisSettings

from .constants import DEFAULT_LOG_LEVEL, EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, LOG_FORMAT
from .entities.random_model import RandomModel, RandomModelKind
from .utils.generators import random_csg, random_switching
from .utils.graph_file_io import parse_graph_file_with_labels, serialize_graph_file
from .utils.serialization import distance_matrix_to_csv, to_json

logger = logging.getLogger(__name__)

MATRIX_CHOICES = ['distance', 'adjacency', 'magnitude-distance']


class UsageError(Exception):
    """Raised instead of exiting when arguments cannot be parsed."""

    code = "Usage"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class CommandContext:
    """Arguments plus the analyzers built from them."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.settings = AnalysisSettings(gain_set_cap=getattr(args, 'cap', None),
                                         tolerance=getattr(args, 'tol', None))
        self.balance = BalanceAnalyzer(self.settings)
        self.distances = self.balance.distance_matrices
        self.shortest_gains = self.balance.shortest_gains
        self._labels: Dict[int, str] = {}

    def load_graph(self) -> GainGraph:
        """
        Raises:
            GraphFileError: If the file cannot be read, parsed or built
        """
        path = self.args.graph
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                text = handle.read()
        except OSError as e:
            raise GraphFileError(0, f"Cannot read '{path}': {e.strerror or e}")
        graph, self._labels = parse_graph_file_with_labels(text)
        logger.info(f"Loaded {graph!r} from {path}")
        return graph

    @property
    def labels(self) -> Dict[int, str]:
        return self._labels


# ============================================================================
# Commands
# ============================================================================

def command_validate(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    return to_json({'valid': True, 'n': g.n, 'm': g.m})


def command_info(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    components = connected_components(g)
    bipartite, _ = is_bipartite(g)
    info: Dict[str, Any] = {
        'n': g.n,
        'm': g.m,
        'connected': len(components) == 1,
        'components': len(components),
        'bipartite': bipartite,
    }
    if len(components) == 1:
        info['blocks'] = [sorted(block) for block in blocks(g)]
        info['balanced'] = ctx.balance.balance_certificate(g).is_balanced
    return to_json(info)


def command_balance(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    certificate = ctx.balance.balance_certificate(g)
    result = certificate.to_dict()
    result['verified'] = ctx.balance.verify_certificate(g, certificate)
    return to_json(result)


def command_compat(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    report = ctx.shortest_gains.compatibility_report(g)
    return to_json(report.to_dict(include_pairs=ctx.args.pairs))


def command_dmatrix(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    matrix = ctx.distances.distance_matrix_by_kind(g, ctx.args.which)
    if ctx.args.format == 'csv':
        return distance_matrix_to_csv(matrix).rstrip('\n')
    return to_json(matrix.to_dict(include_hermitian=ctx.args.which != 'auto'))


def _select_matrix(ctx: CommandContext, g: GainGraph, which: str):
    if which == 'adjacency':
        return adjacency_matrix(g)
    if which == 'magnitude-distance':
        return ctx.distances.distance_matrix(magnitude_graph(g))
    return ctx.distances.distance_matrix(g)


def command_spectrum(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    spectrum = hermitian_eigenvalues(_select_matrix(ctx, g, ctx.args.matrix))
    return to_json(spectrum.to_dict())


def command_charpoly(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    which = ctx.args.matrix
    poly: CharPoly
    if ctx.args.method == 'fl':
        poly = char_poly(_select_matrix(ctx, g, which))
    elif which == 'adjacency':
        poly = ctx.balance.char_poly_elementary(g)
    else:
        # The associated complete graph has the distance matrix as its adjacency matrix
        source = magnitude_graph(g) if which == 'magnitude-distance' else g
        poly = ctx.balance.char_poly_elementary(ctx.balance.associated_complete_graph(source))
    return to_json(poly.to_dict())


def command_cycle_spectrum(ctx: CommandContext) -> str:
    args = ctx.args
    params = CycleParams(args.n, args.k, args.theta)
    result: Dict[str, Any] = {'params': params.to_dict()}
    if args.mode in ('closed', 'both'):
        result['closed'] = cycle_distance_spectrum_closed(params).to_dict()
        result['fallback_indices'] = fallback_indices(params)
    if args.mode in ('numeric', 'both'):
        result['numeric'] = cycle_distance_spectrum_numeric(params, ctx.settings).to_dict()
    if args.mode == 'both':
        closed, numeric = result['closed']['values'], result['numeric']['values']
        result['max_difference'] = max(abs(a - b) for a, b in zip(closed, numeric))
    return to_json(result)


def command_switch(ctx: CommandContext) -> str:
    g = ctx.load_graph()
    zeta = random_switching(g.n, ctx.args.seed)
    switched = apply_switching(g, zeta)
    if ctx.args.format == 'json':
        return to_json({'zeta': zeta.to_dict(), 'graph': switched.to_dict()})
    return serialize_graph_file(switched, ctx.labels).rstrip('\n')


def command_gen(ctx: CommandContext) -> str:
    args = ctx.args
    model = RandomModel(
        kind=args.model,
        seed=args.seed,
        modulus_bounds=(args.modulus_min, args.modulus_max),
        argument_bounds=(args.arg_min, args.arg_max),
    )
    g = random_csg(model, args.n, args.m)
    if args.format == 'json':
        return to_json(g.to_dict())
    return serialize_graph_file(g).rstrip('\n')


COMMANDS: Dict[str, Callable[[CommandContext], str]] = {
    'validate': command_validate,
    'info': command_info,
    'balance': command_balance,
    'compat': command_compat,
    'dmatrix': command_dmatrix,
    'spectrum': command_spectrum,
    'charpoly': command_charpoly,
    'cycle-spectrum': command_cycle_spectrum,
    'switch': command_switch,
    'gen': command_gen,
}


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('--cap', type=int, default=None, help='distinct gains allowed per vertex')
    common.add_argument('--tol', type=float, default=None, help='relative comparison tolerance')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])

    parser = _ArgumentParser(prog='csg', description='Analyze conjugate skew gain graphs')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    def graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument('graph', help='graph file')
        return sub

    graph_command('validate', 'check that a graph file builds')
    graph_command('info', 'structural summary')
    graph_command('balance', 'balance certificate')

    compat = graph_command('compat', 'distance compatibility report')
    compat.add_argument('--pairs', action='store_true', help='include per-pair flags')

    dmatrix = graph_command('dmatrix', 'distance matrix')
    dmatrix.add_argument('--which', choices=['max', 'min', 'auto'], default='auto')
    dmatrix.add_argument('--format', choices=['json', 'csv'], default='json')

    spectrum = graph_command('spectrum', 'eigenvalues of a Hermitian graph matrix')
    spectrum.add_argument('--matrix', choices=MATRIX_CHOICES, default='distance')

    charpoly = graph_command('charpoly', 'characteristic polynomial')
    charpoly.add_argument('--method', choices=['fl', 'elementary'], default='fl')
    charpoly.add_argument('--matrix', choices=MATRIX_CHOICES, default='distance')

    cycle = subparsers.add_parser('cycle-spectrum', parents=[common], help='closed-form odd cycle spectrum')
    cycle.add_argument('--n', type=int, required=True)
    cycle.add_argument('--k', type=float, required=True)
    cycle.add_argument('--theta', type=float, required=True)
    cycle.add_argument('--mode', choices=['closed', 'numeric', 'both'], default='closed')

    switch = graph_command('switch', 'apply a random unit switching')
    switch.add_argument('--seed', type=int, required=True)
    switch.add_argument('--format', choices=['csg', 'json'], default='csg')

    gen = subparsers.add_parser('gen', parents=[common], help='random connected gain graph')
    gen.add_argument('--model', choices=[k.value for k in RandomModelKind], required=True)
    gen.add_argument('--n', type=int, required=True)
    gen.add_argument('--m', type=int, required=True)
    gen.add_argument('--seed', type=int, required=True)
    gen.add_argument('--modulus-min', type=float, default=0.5)
    gen.add_argument('--modulus-max', type=float, default=2.0)
    gen.add_argument('--arg-min', type=float, default=0.0)
    gen.add_argument('--arg-max', type=float, default=6.283185307179586)
    gen.add_argument('--format', choices=['csg', 'json'], default='csg')

    return parser


def configure_logging(level_name: Optional[str], stream: TextIO) -> None:
    level_name = (level_name or os.getenv('CSG_LOG_LEVEL') or DEFAULT_LOG_LEVEL).upper()
    level = getattr(logging, level_name, logging.WARNING)
    # force: each call may target a different stream
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=stream, force=True)
    logging.getLogger('skew_gain').setLevel(level)
    logging.getLogger('csg_cli').setLevel(level)


def _diagnostic(error: Exception) -> str:
    payload: Dict[str, Any] = {
        'error': getattr(error, 'code', type(error).__name__),
        'message': str(error),
    }
    if isinstance(error, SkewGainError):
        payload.update(error.details())
    return to_json(payload)


def run_command(argv: List[str],
                stdout: Optional[TextIO] = None,
                stderr: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one command and write its output.

    Args:
        argv: Arguments without the program name
        stdout: Output stream (defaults to sys.stdout)
        stderr: Diagnostic stream (defaults to sys.stderr)

    Returns:
        Exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        stderr.write(_diagnostic(e) + "\n")
        return EXIT_USAGE_ERROR
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_USAGE_ERROR

    configure_logging(args.log_level, stderr)

    try:
        ctx = CommandContext(args)
    except SkewGainError as e:
        # Invalid --cap/--tol or environment settings
        stderr.write(_diagnostic(e) + "\n")
        return EXIT_USAGE_ERROR

    try:
        output = COMMANDS[args.command](ctx)
    except GraphFileError as e:
        logger.info(f"Cannot load graph: {e}")
        stderr.write(_diagnostic(e) + "\n")
        return EXIT_USAGE_ERROR
    except SkewGainError as e:
        logger.info(f"{args.command} failed: {e}")
        stderr.write(_diagnostic(e) + "\n")
        return EXIT_DOMAIN_ERROR

    stdout.write(output + "\n")
    return EXIT_OK


def main():
    load_dotenv()
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
