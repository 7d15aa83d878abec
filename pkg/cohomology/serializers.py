from rest_framework import serializers

from diagrams.serializers import WeightField


class PresentationSerializer(serializers.Serializer):
    """Кольцо и отображение ограничения в формате JSON"""

    def to_representation(self, instance):
        presentation, pullback = instance
        return {
            'generators': list(presentation.generators),
            'pullback': {
                str(i): [[g, c] for g, c in image]
                for i, image in enumerate(pullback.images, 1)
            },
        }


class GradedDimSerializer(serializers.Serializer):
    coefficients = serializers.ListField(child=serializers.IntegerField(min_value=0))
    offset = serializers.IntegerField()

    def to_representation(self, instance):
        return {
            'coefficients': list(instance.coefficients),
            'offset': instance.offset,
            'text': str(instance),
        }


class IntersectionQuerySerializer(serializers.Serializer):
    w = WeightField()
    w2 = WeightField()
    shifted = serializers.BooleanField(default=False)

    def validate(self, attrs):
        if attrs['w'].shape != attrs['w2'].shape:
            raise serializers.ValidationError({'w2': 'веса должны иметь одну форму'})
        return attrs
