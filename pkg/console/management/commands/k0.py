from ktheory.serializers import K0MatrixSerializer, k0_csv
from ktheory.services import GrothendieckService

from console.arguments import add_output, add_shape, shape_from, to_json
from console.base import ConsoleCommand


class Command(ConsoleCommand):
    help = 'Матрица перехода в K0 от стандартных к проективным'

    def add_arguments(self, parser):
        add_shape(parser)
        add_output(parser, formats=('text', 'json', 'csv'))

    def run(self, **options):
        matrix = GrothendieckService.k0_matrix(shape_from(options))
        data = K0MatrixSerializer(matrix).data
        if options['output_format'] == 'json':
            self.emit(to_json(data), options['out'])
        elif options['output_format'] == 'csv':
            self.emit(k0_csv(data), options['out'])
        else:
            width = max(len(w) for w in data['weights'])
            cells = [[str(c) for c in row] for row in data['entries']]
            cell = max([width] + [len(c) for row in cells for c in row])
            lines = [' ' * width + ' ' + ' '.join(w.rjust(cell) for w in data['weights'])]
            for weight, row in zip(data['weights'], cells):
                lines.append(weight.ljust(width) + ' ' + ' '.join(c.rjust(cell) for c in row))
            lines += [f'det: {data["determinant"]}', f'direction: {data["direction"]}']
            self.emit('\n'.join(lines), options['out'])
