import time

from django.core.management.base import CommandError

from arc_algebra.services import CheckRunService, CheckService
from arc_algebra.types import BasisFilter

from console.arguments import add_alpha, add_shape, shape_from, to_json
from console.base import CHECK_FAILED, ConsoleCommand


class Command(ConsoleCommand):
    help = 'Исчерпывающая проверка свойств алгебры; код 2 и свидетель при неудаче'

    def add_arguments(self, parser):
        parser.add_argument('--kind', choices=CheckService.KINDS, required=True)
        add_shape(parser)
        add_alpha(parser)
        parser.add_argument('--basis', choices=[f.value for f in BasisFilter],
                            default=BasisFilter.STANDARD_ONLY.value)
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--record', action='store_true', help='Сохранить запуск в истории')

    def run(self, **options):
        shape = shape_from(options)
        basis_filter = BasisFilter(options['basis'])
        started = time.monotonic()
        result = CheckService.run(options['kind'], shape, options['alpha'], basis_filter, options['workers'])
        elapsed = time.monotonic() - started
        if options['record']:
            CheckRunService.record(result, shape, options['alpha'], basis_filter, elapsed)

        alpha = '' if options['alpha'] is None else f' alpha {options["alpha"]}'
        self.stdout.write(f'{result.kind} {shape}{alpha}: {"PASS" if result.passed else "FAIL"}')
        if not result.passed:
            self.stdout.write(to_json(result.witness), ending='')
            raise CommandError(f'проверка {result.kind} не пройдена', returncode=CHECK_FAILED)
