from cohomology.serializers import GradedDimSerializer, PresentationSerializer
from cohomology.services import CohomologyService
from cohomology.types import Intersection

from console.arguments import add_output, to_json, weight_from
from console.base import ConsoleCommand


def linear(image) -> str:
    """Signed sum of generators, e.g. ``x1 - x3``."""
    parts = []
    for generator, coefficient in image:
        name = f'x{generator}' if abs(coefficient) == 1 else f'{abs(coefficient)}*x{generator}'
        if not parts:
            parts.append(f'-{name}' if coefficient < 0 else name)
        else:
            parts.append(f'- {name}' if coefficient < 0 else f'+ {name}')
    return ' '.join(parts) or '0'


class Command(ConsoleCommand):
    help = 'Кольцо когомологий устойчивого многообразия или пересечения двух'

    def add_arguments(self, parser):
        parser.add_argument('--w', required=True)
        parser.add_argument('--w2', default=None, help='Второй вес; без него - устойчивое многообразие w')
        parser.add_argument('--shifted', action='store_true', help='Сдвиг на минимальную степень')
        add_output(parser)

    def run(self, **options):
        w = weight_from(options, 'w')
        if options['w2'] is None:
            result = CohomologyService.stable_cohomology(w)
            poincare = result[0].hilbert_series
            title = f'H*({w})'
        else:
            w2 = weight_from(options, 'w2', w.shape)
            result = CohomologyService.intersection_cohomology(w, w2)
            poincare = CohomologyService.poincare(w, w2, shifted=options['shifted'])
            title = f'H*({w} ∩ {w2})'
        empty = result is Intersection.EMPTY

        if options['output_format'] == 'json':
            self.emit(to_json({
                'title': title,
                'empty': empty,
                'presentation': None if empty else PresentationSerializer(result).data,
                'poincare': GradedDimSerializer(poincare).data,
            }), options['out'])
            return

        if empty:
            self.emit(f'{title}: пустое пересечение', options['out'])
            return
        presentation, pullback = result
        lines = [
            title,
            'generators: ' + (' '.join(f'x{g}' for g in presentation.generators) or '-'),
            f'dimension: {presentation.dimension}',
            f'poincare: {poincare}',
        ]
        lines += [f'x{i} -> {linear(image)}' for i, image in enumerate(pullback.images, 1)]
        self.emit('\n'.join(lines), options['out'])
