from rest_framework import serializers

from cohomology.serializers import GradedDimSerializer
from diagrams.exceptions import DiagramValidationError
from diagrams.serializers import ShapeSerializer, WeightField
from diagrams.types import Shape, WeightSequence

from .models import CheckRun
from .services import AlgebraService, FormatService
from .types import AlgebraElement, BasisElement, BasisFilter, StructureTable


class TermSerializer(serializers.Serializer):
    orientation = WeightField()
    coefficient = serializers.IntegerField(default=1)


class ElementSerializer(serializers.Serializer):
    """Элемент Hom(src, tgt); без слагаемых берется элемент наименьшей степени"""
    src = WeightField()
    tgt = WeightField()
    terms = TermSerializer(many=True, required=False)

    def to_representation(self, instance):
        return {
            'src': str(instance.src),
            'tgt': str(instance.tgt),
            'terms': [
                {
                    'orientation': str(b.orientation),
                    'coefficient': c,
                    'degree': b.degree,
                    'labels': [[p, label.value] for p, label in b.labels],
                }
                for b, c in instance.basis_terms
            ],
            'text': FormatService.element(instance),
        }

    def validate(self, attrs):
        src, tgt = attrs['src'], attrs['tgt']
        try:
            if 'terms' not in attrs:
                text = f'{src},{tgt}'
                attrs['element'] = FormatService.parse_element(text, argument=self.field_name or 'element')
                return attrs
            allowed = {b.orientation for b in AlgebraService.hom_basis(src, tgt)}
        except DiagramValidationError as exc:
            raise serializers.ValidationError(str(exc))
        for term in attrs['terms']:
            if term['orientation'] not in allowed:
                raise serializers.ValidationError(
                    {'terms': f'{term["orientation"]} не ориентирует склейку пары ({src},{tgt})'}
                )
        attrs['element'] = AlgebraElement(
            src, tgt, tuple((term['orientation'], term['coefficient']) for term in attrs['terms'])
        )
        return attrs


class MultiplySerializer(serializers.Serializer):
    left = ElementSerializer()
    right = ElementSerializer()
    alpha = serializers.ChoiceField(choices=[1, -1], required=False, allow_null=True, default=None)
    nested = serializers.BooleanField(default=False)
    order = serializers.CharField(required=False, allow_null=True, default=None)


class StructureTableSerializer(serializers.Serializer):
    """Таблица структурных констант в формате JSON"""

    def to_representation(self, instance):
        return {
            'shape': {'n': instance.shape.n, 'k': instance.shape.k},
            'alpha': instance.alpha,
            'basis_filter': instance.basis_filter.value,
            'basis': [
                {
                    'src': str(b.src),
                    'tgt': str(b.tgt),
                    'orientation': str(b.orientation),
                    'labels': [[p, label.value] for p, label in b.labels],
                }
                for b in instance.basis
            ],
            'products': {
                f'{i},{j}': [[k, c] for k, c in terms]
                for (i, j), terms in instance.products
            },
        }


def load_structure_table(data: dict) -> StructureTable:
    """Обратное преобразование JSON таблицы"""
    shape = ShapeSerializer(data=data.get('shape', {}))
    shape.is_valid(raise_exception=True)
    basis = tuple(
        BasisElement(
            WeightSequence.parse(item['src'], 'src'),
            WeightSequence.parse(item['tgt'], 'tgt'),
            WeightSequence.parse(item['orientation'], 'orientation'),
        )
        for item in data['basis']
    )
    products = []
    for key, terms in data['products'].items():
        i, j = (int(part) for part in key.split(','))
        products.append(((i, j), tuple((int(k), int(c)) for k, c in terms)))
    products.sort(key=lambda item: item[0])
    return StructureTable(
        shape.validated_data['shape'], int(data['alpha']), BasisFilter(data['basis_filter']), basis, tuple(products)
    )


class CartanQuerySerializer(ShapeSerializer):
    basis_filter = serializers.ChoiceField(choices=[f.value for f in BasisFilter], default=BasisFilter.ALL.value)


class CartanMatrixSerializer(serializers.Serializer):

    def to_representation(self, instance):
        return {
            'weights': [str(w) for w in instance.weights],
            'entries': [[GradedDimSerializer(entry).data for entry in row] for row in instance.entries],
        }


class CheckRunSerializer(serializers.ModelSerializer):
    shape = serializers.SerializerMethodField()

    class Meta:
        model = CheckRun
        fields = [
            'id', 'kind', 'n', 'k', 'shape', 'alpha', 'basis_filter',
            'passed', 'witness', 'elapsed_seconds', 'created_at',
        ]
        read_only_fields = fields

    def get_shape(self, obj):
        return str(Shape(obj.n, obj.k))
