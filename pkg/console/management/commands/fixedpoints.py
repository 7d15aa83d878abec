from diagrams.services import GluingService

from console.arguments import add_output, add_shape, shape_from, to_json, weight_from
from console.base import ConsoleCommand


class Command(ConsoleCommand):
    help = 'Неподвижные точки пересечения: ориентации склейки пары весов'

    def add_arguments(self, parser):
        add_shape(parser)
        parser.add_argument('--a', required=True)
        parser.add_argument('--b', required=True)
        parser.add_argument('--exhaustive', action='store_true', help='Перебор всех 2^n меток')
        add_output(parser)

    def run(self, **options):
        shape = shape_from(options)
        a = weight_from(options, 'a', shape)
        b = weight_from(options, 'b', shape)
        glued = GluingService.glue_weights(a, b)
        find = GluingService.orientations_exhaustive if options['exhaustive'] else GluingService.orientations
        orientations = [str(o) for o in find(glued, a, b)]
        if options['output_format'] == 'json':
            self.emit(to_json({'a': str(a), 'b': str(b), 'count': len(orientations),
                               'orientations': orientations}), options['out'])
        else:
            self.emit('\n'.join([f'count: {len(orientations)}'] + orientations), options['out'])
