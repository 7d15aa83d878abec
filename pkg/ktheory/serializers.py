import csv
import io

from rest_framework import serializers

from diagrams.serializers import ShapeSerializer


class K0QuerySerializer(ShapeSerializer):
    export = serializers.ChoiceField(choices=['json', 'csv'], default='json')


class K0MatrixSerializer(serializers.Serializer):
    """Матрица K0 с подписями строк и столбцов"""

    def to_representation(self, instance):
        return {
            'weights': [str(w) for w in instance.weights],
            'entries': [list(row) for row in instance.entries],
            'determinant': instance.determinant,
            'direction': instance.direction.value,
        }


def k0_csv(data: dict) -> str:
    """CSV из данных K0MatrixSerializer"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['w'] + data['weights'])
    for weight, row in zip(data['weights'], data['entries']):
        writer.writerow([weight] + row)
    return buffer.getvalue()
