# cohomology/tests.py
from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from diagrams.services import GluingService, TableauService, WeightService
from diagrams.types import Shape, StandardTableau, WeightSequence

from .services import CohomologyService
from .types import GradedDim, Intersection, PullbackMap, RingElement

SMALL_SHAPES = (Shape(4, 2), Shape(5, 2), Shape(6, 3))


def pairs(shape):
    weights = WeightService.enumerate_weights(shape)
    for w in weights:
        for w2 in weights:
            yield w, w2


class GradedDimTestCase(SimpleTestCase):
    """Тесты многочленов Пуанкаре"""

    def test_normalization_and_product(self):
        """Тест нормализации и произведения"""
        self.assertEqual(GradedDim((0, 1, 0, 1, 0)), GradedDim((1, 0, 1), 1))
        square = GradedDim((1, 0, 1)) * GradedDim((1, 0, 1))
        self.assertEqual(square, GradedDim((1, 0, 2, 0, 1)))
        self.assertEqual(GradedDim.from_degrees([1, 3]), GradedDim((1, 0, 1), 1))
        self.assertEqual(GradedDim().total, 0)

    def test_ring_element_squares(self):
        """Тест x^2 = 0 в кольце"""
        x = RingElement.generator(1)
        y = RingElement.generator(2, -1)
        self.assertTrue((x * x).is_zero)
        self.assertFalse((x * y).is_zero)
        z = x + RingElement.generator(2)
        self.assertEqual((z * z).as_dict(), {frozenset({1, 2}): 2})


class ComponentCohomologyTestCase(SimpleTestCase):
    """Тесты когомологий компонент и устойчивых многообразий"""

    def test_components_of_running_example(self):
        """Тест компонент формы (2,2)"""
        presentation, pullback = CohomologyService.component_cohomology(StandardTableau((4, 3), (2, 1)))
        self.assertEqual(presentation.generators, (1, 2))
        self.assertEqual(presentation.dimension, 4)
        self.assertEqual([pullback.image(i) for i in range(1, 5)], [{1: 1}, {2: 1}, {2: -1}, {1: -1}])
        presentation, _ = CohomologyService.component_cohomology(StandardTableau((4, 2), (3, 1)))
        self.assertEqual(presentation.generators, (1, 3))
        presentation, _ = CohomologyService.component_cohomology(StandardTableau((2,), (1,)))
        self.assertEqual(presentation.dimension, 2)

    def test_stable_manifold_dimensions(self):
        """Тест размерностей 1, 2, 2, 2, 4, 4"""
        weights = WeightService.enumerate_weights(Shape(4, 2))
        dims = [CohomologyService.stable_cohomology(w)[0].dimension for w in weights]
        self.assertEqual(dims, [1, 2, 2, 2, 4, 4])
        self.assertEqual(CohomologyService.stable_cohomology(weights[1])[0].generators, (2,))
        self.assertEqual(CohomologyService.stable_cohomology(weights[4])[0].generators, (1, 3))

    def test_hilbert_series(self):
        """Тест ряда Гильберта (1 + q^2)^g"""
        presentation, _ = CohomologyService.stable_cohomology(WeightSequence.parse('vv^^'))
        self.assertEqual(presentation.hilbert_series, GradedDim((1, 0, 2, 0, 1)))


class IntersectionCohomologyTestCase(SimpleTestCase):
    """Тесты когомологий пересечений"""

    def setUp(self):
        self.w = WeightService.enumerate_weights(Shape(4, 2))

    def intersect(self, i, j):
        return CohomologyService.intersection_cohomology(self.w[i - 1], self.w[j - 1])

    def test_running_example_presentations(self):
        """Тест четырех нетривиальных представлений"""
        self.assertEqual(self.intersect(2, 6)[0].generators, (2,))
        self.assertEqual(self.intersect(3, 5)[0].generators, (1,))
        self.assertEqual(self.intersect(4, 5)[0].generators, (3,))
        self.assertEqual(self.intersect(5, 6)[0].generators, (1,))
        _, pullback = self.intersect(2, 6)
        self.assertEqual([pullback.image(i) for i in range(1, 5)], [{}, {2: 1}, {2: -1}, {}])

    def test_empty_and_point(self):
        """Тест пустого пересечения и точки"""
        self.assertIs(self.intersect(1, 3), Intersection.EMPTY)
        presentation, _ = self.intersect(1, 2)
        self.assertEqual(presentation.generators, ())
        self.assertEqual(presentation.dimension, 1)

    def test_dimension_matches_orientation_count(self):
        """Тест: размерность равна числу ориентаций"""
        for shape in SMALL_SHAPES + (Shape(8, 4),):
            for w, w2 in pairs(shape):
                glued = GluingService.glue_weights(w, w2)
                count = len(GluingService.orientations(glued, w, w2))
                result = CohomologyService.intersection_cohomology(w, w2)
                dimension = 0 if result is Intersection.EMPTY else result[0].dimension
                self.assertEqual(dimension, count)

    def test_pullbacks_surjective_and_kernels_nested(self):
        """Тест сюръективности и включения ядер"""
        for shape in SMALL_SHAPES:
            for w, w2 in pairs(shape):
                result = CohomologyService.intersection_cohomology(w, w2)
                if result is Intersection.EMPTY:
                    continue
                _, big = result
                self.assertTrue(CohomologyService.is_surjective(big))
                _, small_a = CohomologyService.stable_cohomology(w)
                _, small_b = CohomologyService.stable_cohomology(w2)
                self.assertTrue(CohomologyService.kernel_contains(big, small_a, small_b))

    def test_kernel_inclusion_detects_failure(self):
        """Тест: отображение без ядра не содержит чужих ядер"""
        _, identity = CohomologyService.component_cohomology(StandardTableau((2,), (1,)))
        _, stable = CohomologyService.stable_cohomology(WeightSequence.parse('^v'))
        self.assertFalse(CohomologyService.kernel_contains(identity, stable, stable))

    def test_odd_vertex_normalization(self):
        """Тест перехода к нечетным вершинам"""
        for shape in (Shape(4, 2), Shape(6, 3)):
            for w, w2 in pairs(shape):
                result = CohomologyService.intersection_cohomology(w, w2)
                if result is Intersection.EMPTY:
                    continue
                presentation, pullback = result
                top, bottom = WeightService.weight_to_m(w2), WeightService.weight_to_m(w)
                normalized, change, new_pullback = CohomologyService.normalize_odd(
                    presentation, pullback, top, bottom
                )
                self.assertTrue(all(g % 2 == 1 for g in normalized.generators))
                self.assertTrue(CohomologyService.verify_normalization(pullback, change, new_pullback))

    def test_normalization_signs(self):
        """Тест знаков a_j"""
        w = WeightSequence.parse('^v^v')
        presentation, pullback = CohomologyService.stable_cohomology(w)
        m = WeightService.weight_to_m(w)
        normalized, change, _ = CohomologyService.normalize_odd(presentation, pullback, m, m)
        self.assertEqual(normalized.generators, (3,))
        self.assertEqual(change[0, 0], -1)

    def test_normalization_rejects_consistent_sign_flip(self):
        """Тест: замена, согласованная с ограничением, но с неверными знаками, отклоняется"""
        w, w2 = WeightSequence.parse('v^v^'), WeightSequence.parse('vv^^')
        presentation, pullback = CohomologyService.intersection_cohomology(w, w2)
        top, bottom = WeightService.weight_to_m(w2), WeightService.weight_to_m(w)
        _, change, normalized = CohomologyService.normalize_odd(presentation, pullback, top, bottom)
        self.assertTrue(CohomologyService.verify_normalization(pullback, change, normalized))
        negated = PullbackMap(
            normalized.generators,
            tuple(tuple((g, -c) for g, c in image) for image in normalized.images),
        )
        self.assertEqual(-change.T * pullback.matrix(), negated.matrix())
        self.assertFalse(CohomologyService.verify_normalization(pullback, -change, negated))
        self.assertFalse(CohomologyService.verify_normalization(pullback, change, negated))


class PoincareTestCase(SimpleTestCase):
    """Тесты многочленов Пуанкаре пар"""

    def test_shifted_running_example(self):
        """Тест q + q^3 для пары компонент"""
        nested = TableauService.weight_of(StandardTableau((4, 3), (2, 1)))
        nxt = TableauService.weight_of(StandardTableau((4, 2), (3, 1)))
        self.assertEqual(CohomologyService.poincare(nested, nxt, shifted=True), GradedDim((1, 0, 1), 1))
        self.assertEqual(CohomologyService.poincare(nested, nxt), GradedDim((1, 0, 1)))

    def test_self_pairs(self):
        """Тест (1 + q^2)^{k_w} для пары (w, w)"""
        for w in WeightService.enumerate_weights(Shape(5, 2)):
            expected = GradedDim((1,))
            for _ in range(WeightService.weight_to_m(w).cup_count):
                expected = expected * GradedDim((1, 0, 1))
            self.assertEqual(CohomologyService.poincare(w, w), expected)
            self.assertEqual(CohomologyService.minimal_degree(w, w), 0)

    def test_single_fixed_point(self):
        """Тест пары с одной неподвижной точкой"""
        w1, w2 = WeightSequence.parse('^^vv'), WeightSequence.parse('^v^v')
        self.assertEqual(CohomologyService.poincare(w1, w2), GradedDim((1,)))
        self.assertEqual(CohomologyService.poincare(w1, w2, shifted=True), GradedDim((1,), 1))
        self.assertEqual(CohomologyService.poincare(w1, WeightSequence.parse('v^^v')), GradedDim())


class CohomologyAPITestCase(APITestCase):
    """Тесты API когомологий"""

    def test_intersection_endpoint(self):
        """Тест представления пересечения"""
        response = self.client.get(reverse('cohomology-intersection'), {'w': '^v^v', 'w2': 'vv^^'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data['empty'])
        self.assertEqual(response.data['presentation']['generators'], [2])
        self.assertEqual(response.data['poincare']['coefficients'], [1, 0, 1])

    def test_shape_mismatch(self):
        """Тест ошибки для весов разной формы"""
        response = self.client.get(reverse('cohomology-intersection'), {'w': '^v', 'w2': 'vv^^'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
