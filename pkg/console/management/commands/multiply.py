from arc_algebra.serializers import ElementSerializer
from arc_algebra.services import AlgebraService, FormatService
from arc_algebra.surgery import ORDER_STRATEGIES

from console.arguments import add_alpha, add_output, to_json
from console.base import ConsoleCommand


class Command(ConsoleCommand):
    help = 'Произведение двух элементов алгебры дуг'

    def add_arguments(self, parser):
        parser.add_argument('--left', required=True, help='SRC,TGT[,ORIENTATION]')
        parser.add_argument('--right', required=True, help='SRC,TGT[,ORIENTATION]')
        add_alpha(parser)
        parser.add_argument('--nested', action='store_true', help='Вложенная ТКТП вместо правила с α')
        parser.add_argument('--order', choices=ORDER_STRATEGIES, default=None)
        add_output(parser)

    def run(self, **options):
        left = FormatService.parse_element(options['left'], argument='left')
        right = FormatService.parse_element(options['right'], argument='right')
        if options['nested']:
            product = AlgebraService.multiply_nested(left, right, order=options['order'])
        else:
            product = AlgebraService.multiply(left, right, options['alpha'], options['order'])

        if options['output_format'] == 'json':
            self.emit(to_json(ElementSerializer(product).data), options['out'])
        else:
            self.emit(FormatService.element(product), options['out'])
