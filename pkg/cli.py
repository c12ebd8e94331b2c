"""
Command Line Interface
Every toolkit operation as a subcommand, rendered as JSON (default) or text.

Exit codes: 0 success, 2 usage or input error, 3 domain error or failed check.
"""
import argparse
import sys
from typing import List, Optional, TextIO

from algebra.errors import AlgebraError, DeserializationError, GeneratorRangeError, WordSyntaxError
from operations import OPERATIONS, Operation, OperationOutput, ParameterError, op_check
from utils.logger import setup_logger

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

USAGE_ERRORS = (ParameterError, WordSyntaxError, GeneratorRangeError, DeserializationError)
LOGGED_PACKAGES = ('algebra', 'check_engine', 'operations')


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so that run() owns the exit code"""

    def error(self, message):
        raise ParameterError(message)


def _common_options(defaults: bool) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'],
                        default='json' if defaults else argparse.SUPPRESS, help='Output rendering')
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        default='WARNING' if defaults else argparse.SUPPRESS, help='Diagnostics on stderr')
    return common


def _add_operation(subparsers, operation: Operation) -> None:
    sub = subparsers.add_parser(operation.name, help=operation.help, description=operation.help,
                                parents=[_common_options(defaults=False)])
    for param in operation.params:
        if param.positional:
            sub.add_argument(param.name, help=param.help)
        else:
            sub.add_argument(param.flag, dest=param.name, default=None, help=param.help)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='cli.py', description='Free nilpotent groups: Hall collection, Magnus embeddings, '
                                                'unitriangular representations and group laws',
                     parents=[_common_options(defaults=True)])
    subparsers = parser.add_subparsers(dest='command', parser_class=_Parser)
    subparsers.required = True

    for operation in OPERATIONS.values():
        _add_operation(subparsers, operation)

    check = subparsers.add_parser('check', help='Run registered property checks',
                                  parents=[_common_options(defaults=False)])
    check.add_argument('check_id', nargs='?', help='Check id (see --list)')
    check.add_argument('--list', action='store_true', dest='list_checks', help='List available checks')
    check.add_argument('--trials', type=int, default=None, help='Override the number of random trials')
    check.add_argument('--seed', type=int, default=0, help='Random seed')
    return parser


def _dispatch(args: argparse.Namespace) -> OperationOutput:
    if args.command == 'check':
        return op_check(args.check_id, args.list_checks, args.trials, args.seed)
    operation = OPERATIONS[args.command]
    raw = {param.name: getattr(args, param.name) for param in operation.params}
    return operation.run(raw)


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one subcommand and print its output.

    Args:
        argv: Arguments without the program name
        stdout: Stream for results (default sys.stdout)
        stderr: Stream for error messages (default sys.stderr)

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except ParameterError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    for name in LOGGED_PACKAGES:
        setup_logger(name, level=args.log_level)

    try:
        output = _dispatch(args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except AlgebraError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_DOMAIN
    except ValueError as e:
        # unknown check id
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE

    print(output.render(args.format), file=stdout)
    return EXIT_OK if output.passed else EXIT_DOMAIN


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
