import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

logger = logging.getLogger(__name__)

VALIDATION_FAILED = 1
CHECK_FAILED = 2


class ConsoleCommand(BaseCommand):
    """Команда с единым разбором ошибок и выводом в stdout или --out"""

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except ValidationError as exc:
            logger.warning('%s: %s', self.__module__.rsplit('.', 1)[-1], exc)
            raise CommandError(str(exc), returncode=VALIDATION_FAILED)

    def run(self, **options):
        raise NotImplementedError

    def emit(self, text: str, out=None):
        if not text.endswith('\n'):
            text += '\n'
        if out:
            with open(out, 'w', encoding='utf-8') as handle:
                handle.write(text)
            self.stderr.write(f'Записано в {out}')
        else:
            self.stdout.write(text, ending='')
