"""
Single entry point for the command-line front end.

``run(argv)`` dispatches to the management commands of this app and turns
their outcome into an exit code: 0 on success, 1 on a validation error,
2 on a failed check.
"""
import logging
import sys

from django.core.management import call_command
from django.core.management.base import CommandError

from .base import VALIDATION_FAILED

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('enumerate', 'cup', 'glue', 'fixedpoints', 'cohomology', 'multiply', 'table', 'check', 'k0')

# `check` is taken by Django's own system check
ALIASES = {'check': 'checkalgebra'}


def usage() -> str:
    return 'использование: springer {' + ','.join(SUBCOMMANDS) + '} [параметры]'


def run(argv=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(usage() + '\n')
        return VALIDATION_FAILED
    name, *rest = argv
    try:
        call_command(ALIASES.get(name, name), *rest, stdout=stdout, stderr=stderr)
    except CommandError as exc:
        stderr.write(f'{exc}\n')
        return exc.returncode
    except Exception:
        logger.exception('Сбой команды %s', name)
        raise
    return 0
