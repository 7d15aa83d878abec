from diagrams.services import TableauService, WeightService

from console.arguments import add_output, add_shape, shape_from, to_json
from console.base import ConsoleCommand


class Command(ConsoleCommand):
    help = 'Веса и стандартные таблицы формы (n-k, k)'

    def add_arguments(self, parser):
        add_shape(parser)
        parser.add_argument('--standard', action='store_true', help='Только стандартные веса')
        parser.add_argument('--tableaux', action='store_true', help='Перечислить стандартные таблицы')
        add_output(parser)

    def run(self, **options):
        shape = shape_from(options)
        if options['tableaux']:
            rows = [
                {
                    'index': index,
                    'tableau': str(tableau),
                    'weight': str(TableauService.weight_of(tableau)),
                    'diagram': str(TableauService.tableau_to_cup(tableau)),
                }
                for index, tableau in enumerate(TableauService.enumerate_standard(shape), 1)
            ]
            columns = ('index', 'tableau', 'weight', 'diagram')
        else:
            rows = [
                {
                    'index': index,
                    'weight': str(w),
                    'standard': w.is_standard,
                    'm': str(WeightService.weight_to_m(w)),
                    'C': str(WeightService.weight_to_C(w)),
                }
                for index, w in enumerate(WeightService.enumerate_weights(shape), 1)
                if w.is_standard or not options['standard']
            ]
            columns = ('index', 'weight', 'm', 'C')

        if options['output_format'] == 'json':
            self.emit(to_json(rows), options['out'])
        else:
            self.emit('\n'.join('\t'.join(str(row[c]) for c in columns) for row in rows), options['out'])
