"""Arguments shared by the console commands."""
import json

from diagrams.exceptions import DiagramValidationError
from diagrams.types import Shape, WeightSequence


def add_shape(parser, required=True):
    parser.add_argument('--n', type=int, required=required, help='Число точек')
    parser.add_argument('--k', type=int, required=required, help='Длина второй строки')


def add_output(parser, formats=('text', 'json')):
    parser.add_argument('--format', dest='output_format', choices=formats, default=formats[0])
    parser.add_argument('--out', default=None, help='Файл для результата, по умолчанию stdout')


def add_alpha(parser):
    parser.add_argument('--alpha', type=int, choices=[1, -1], default=None,
                        help='Знак α; по умолчанию ARC_ALGEBRA_DEFAULT_ALPHA')


def shape_from(options) -> Shape:
    if options.get('n') is None or options.get('k') is None:
        raise DiagramValidationError('требуются --n и --k', argument='n')
    return Shape(options['n'], options['k'])


def weight_from(options, name, shape=None) -> WeightSequence:
    text = options.get(name)
    if text is None:
        raise DiagramValidationError(f'требуется --{name}', argument=name)
    w = WeightSequence.parse(text, argument=name)
    if 2 * w.k > w.n:
        raise DiagramValidationError(f'в весе {w} больше ∨, чем ∧', argument=name)
    if shape is not None:
        w.require_shape(shape, argument=name)
    return w


def to_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'
