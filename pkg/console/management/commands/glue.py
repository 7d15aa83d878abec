from diagrams.rendering import render_circle
from diagrams.serializers import CircleDiagramSerializer
from diagrams.services import GluingService

from console.arguments import add_output, to_json, weight_from
from console.base import ConsoleCommand


class Command(ConsoleCommand):
    help = 'Компоненты склейки m(b) над m(a)'

    def add_arguments(self, parser):
        parser.add_argument('--a', required=True, help='Нижний вес, дает чашки')
        parser.add_argument('--b', required=True, help='Верхний вес, дает крышки')
        add_output(parser)

    def run(self, **options):
        a = weight_from(options, 'a')
        b = weight_from(options, 'b', a.shape)
        glued = GluingService.glue_weights(a, b)
        if options['output_format'] == 'json':
            self.emit(to_json({**CircleDiagramSerializer(glued).data, 'picture': render_circle(glued)}),
                      options['out'])
            return

        parents = dict(glued.parents)
        lines = [f'circles: {glued.circle_count}', f'lines: {len(glued.lines)}']
        for index, component in enumerate(glued.components):
            vertices = ' '.join(str(p) for p in component.vertices)
            text = f'{index}\t{component.kind.value}\t{vertices}'
            if component.is_circle:
                parent = parents.get(index)
                text += f'\tinside {parent}' if parent is not None else '\touter'
            lines.append(text)
        lines.append(render_circle(glued))
        self.emit('\n'.join(lines), options['out'])
