from rest_framework import serializers

from .exceptions import DiagramValidationError
from .types import CupDiagram, Shape, StandardTableau, WeightSequence


class WeightField(serializers.Field):
    """Вес в формате строки из ^ и v"""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return WeightSequence.parse(str(data), argument=self.field_name)
        except DiagramValidationError as exc:
            raise serializers.ValidationError(str(exc))


class ShapeSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(min_value=0)

    def validate(self, attrs):
        try:
            attrs['shape'] = Shape(attrs['n'], attrs['k'])
        except DiagramValidationError as exc:
            raise serializers.ValidationError({'k': str(exc)})
        return attrs


class CupDiagramSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    cups = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(), min_length=2, max_length=2),
        default=list,
    )
    rays = serializers.ListField(child=serializers.IntegerField(), default=list)

    def to_representation(self, instance):
        return {
            'n': instance.n,
            'cups': [[a, b] for a, b in instance.cups],
            'rays': list(instance.rays),
        }

    def validate(self, attrs):
        try:
            attrs['diagram'] = CupDiagram(
                attrs['n'], tuple(tuple(cup) for cup in attrs['cups']), tuple(attrs['rays'])
            )
        except DiagramValidationError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs


class TableauSerializer(serializers.Serializer):
    top_row = serializers.ListField(child=serializers.IntegerField(min_value=1))
    bottom_row = serializers.ListField(child=serializers.IntegerField(min_value=1), default=list)

    def to_representation(self, instance):
        return {'top_row': list(instance.top_row), 'bottom_row': list(instance.bottom_row)}

    def validate(self, attrs):
        try:
            attrs['tableau'] = StandardTableau(tuple(attrs['top_row']), tuple(attrs['bottom_row']))
        except DiagramValidationError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs


class ComponentSerializer(serializers.Serializer):
    kind = serializers.CharField(source='kind.value')
    vertices = serializers.ListField(child=serializers.IntegerField())
    arcs = serializers.SerializerMethodField()
    ray_ends = serializers.SerializerMethodField()

    def get_arcs(self, component):
        return [[side, a, b] for side, a, b in component.arcs]

    def get_ray_ends(self, component):
        return [[side, p] for side, p in component.ray_ends]


class CircleDiagramSerializer(serializers.Serializer):
    top = CupDiagramSerializer()
    bottom = CupDiagramSerializer()
    components = ComponentSerializer(many=True)
    circle_count = serializers.IntegerField()
    parents = serializers.SerializerMethodField()

    def get_parents(self, glued):
        return [[index, parent] for index, parent in glued.parents]


class GlueQuerySerializer(serializers.Serializer):
    """Пара весов: top дает крышки m(top), bottom дает чашки m(bottom)"""
    top = WeightField()
    bottom = WeightField()

    def validate(self, attrs):
        if attrs['top'].n != attrs['bottom'].n:
            raise serializers.ValidationError({'top': 'веса должны иметь одинаковую длину'})
        return attrs


def load_cup_diagram(data) -> CupDiagram:
    serializer = CupDiagramSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data['diagram']


def load_tableau(data) -> StandardTableau:
    serializer = TableauSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data['tableau']
