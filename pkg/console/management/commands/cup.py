from diagrams.rendering import render_cup
from diagrams.serializers import CupDiagramSerializer
from diagrams.services import WeightService

from console.arguments import add_output, to_json, weight_from
from console.base import ConsoleCommand


class Command(ConsoleCommand):
    help = 'Диаграммы m(w) и C(w) веса w'

    def add_arguments(self, parser):
        parser.add_argument('--w', required=True, help='Вес из ^ и v')
        add_output(parser)

    def run(self, **options):
        w = weight_from(options, 'w')
        diagrams = {'m': WeightService.weight_to_m(w), 'C': WeightService.weight_to_C(w)}
        if options['output_format'] == 'json':
            data = {'weight': str(w), 'standard': w.is_standard}
            for name, diagram in diagrams.items():
                data[name] = {**CupDiagramSerializer(diagram).data, 'picture': render_cup(diagram, w)}
            self.emit(to_json(data), options['out'])
            return
        blocks = [f'{name}({w}) = {diagram}\n{render_cup(diagram, w)}' for name, diagram in diagrams.items()]
        self.emit('\n\n'.join(blocks), options['out'])
