from arc_algebra.serializers import StructureTableSerializer
from arc_algebra.services import AlgebraService, FormatService
from arc_algebra.surgery import ORDER_STRATEGIES
from arc_algebra.types import BasisFilter
from diagrams.rendering import render_circle

from console.arguments import add_alpha, add_output, add_shape, shape_from, to_json
from console.base import ConsoleCommand


def render_table(table) -> str:
    lines = [f'shape {table.shape} alpha {table.alpha} basis {table.basis_filter.value}', '']
    for index, b in enumerate(table.basis):
        lines.append(f'[{index}] {b}  {FormatService.monomial(b)}  deg {b.degree}')
        lines.append(render_circle(b.diagram, b.orientation))
        lines.append('')
    for (i, j), terms in table.products:
        value = ' + '.join(f'{c}*[{k}]' for k, c in terms).replace('+ -', '- ')
        lines.append(f'[{i}] * [{j}] = {value}')
    return '\n'.join(lines)


class Command(ConsoleCommand):
    help = 'Таблица структурных констант алгебры дуг'

    def add_arguments(self, parser):
        add_shape(parser)
        add_alpha(parser)
        parser.add_argument('--nested', action='store_true')
        parser.add_argument('--basis', choices=[f.value for f in BasisFilter], default=BasisFilter.ALL.value)
        parser.add_argument('--order', choices=ORDER_STRATEGIES, default=None)
        parser.add_argument('--workers', type=int, default=None)
        add_output(parser)

    def run(self, **options):
        table = AlgebraService.structure_table(
            shape_from(options),
            alpha=options['alpha'],
            basis_filter=BasisFilter(options['basis']),
            nested=options['nested'],
            order=options['order'],
            workers=options['workers'],
        )
        if options['output_format'] == 'json':
            self.emit(to_json(StructureTableSerializer(table).data), options['out'])
        else:
            self.emit(render_table(table), options['out'])
