# ktheory/tests.py
from collections import deque

from django.test import SimpleTestCase, tag
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from diagrams.exceptions import DiagramValidationError
from diagrams.services import WeightService
from diagrams.types import Mark, Shape, WeightSequence

from .serializers import K0MatrixSerializer, k0_csv
from .services import GrothendieckService, WeightOrderService
from .types import OrderDirection


def weight(text):
    return WeightSequence.parse(text)


def smaller_by_moves(w):
    """Все веса, получаемые из w заменами соседних ∧∨ на ∨∧"""
    seen = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        for i in range(1, current.n):
            if current[i] is Mark.UP and current[i + 1] is Mark.DOWN:
                lower = current.with_marks({i: Mark.DOWN, i + 1: Mark.UP})
                if lower not in seen:
                    seen.add(lower)
                    queue.append(lower)
    return seen


class WeightOrderTestCase(SimpleTestCase):
    """Тесты порядка на весах и длины"""

    def test_generating_move(self):
        """Тест ∨∧ < ∧∨"""
        self.assertTrue(WeightOrderService.weight_leq(weight('v^'), weight('^v')))
        self.assertFalse(WeightOrderService.weight_leq(weight('^v'), weight('v^')))
        self.assertTrue(WeightOrderService.weight_leq_reversed(weight('^v'), weight('v^')))
        self.assertTrue(WeightOrderService.weight_leq(weight('v^v^'), weight('v^v^')))
        with self.assertRaises(DiagramValidationError):
            WeightOrderService.weight_leq(weight('v^'), weight('v^v^'))

    def test_partial_order_axioms(self):
        """Тест рефлексивности, антисимметричности и транзитивности"""
        for shape in (Shape(4, 2), Shape(5, 2)):
            weights = WeightService.enumerate_weights(shape)
            leq = WeightOrderService.weight_leq
            for a in weights:
                self.assertTrue(leq(a, a))
                for b in weights:
                    if leq(a, b) and leq(b, a):
                        self.assertEqual(a, b)
                    for c in weights:
                        if leq(a, b) and leq(b, c):
                            self.assertTrue(leq(a, c))

    def test_suffix_dominance_equals_move_closure(self):
        """Тест: порядок совпадает с замыканием элементарных замен"""
        for shape in (Shape(4, 2), Shape(6, 3), Shape(6, 2)):
            for w in WeightService.enumerate_weights(shape):
                closure = smaller_by_moves(w)
                for v in WeightService.enumerate_weights(shape):
                    self.assertEqual(v in closure, WeightOrderService.weight_leq(v, w))

    def test_length(self):
        """Тест длины как числа инверсий"""
        self.assertEqual(WeightOrderService.length(weight('^^vv')), 0)
        self.assertEqual(WeightOrderService.length(weight('v^')), 1)
        self.assertEqual(WeightOrderService.length(weight('vv^^')), 4)

    def test_length_parity_for_adjacent_cups(self):
        """Тест ℓ(v+) = ℓ(v-) + 1"""
        for k in range(5):
            for v in WeightService.enumerate_weights(Shape(8, k)):
                for i in range(1, 8):
                    if v[i] is Mark.DOWN and v[i + 1] is Mark.UP:
                        minus = v.with_marks({i: Mark.UP, i + 1: Mark.DOWN})
                        self.assertEqual(WeightOrderService.length(v), WeightOrderService.length(minus) + 1)


class GrothendieckTestCase(SimpleTestCase):
    """Тесты множеств Θ_w и матрицы K0"""

    def test_theta_sets(self):
        """Тест переключения чашек"""
        self.assertEqual(GrothendieckService.theta_set(weight('v^')), [weight('^v'), weight('v^')])
        self.assertEqual(
            set(GrothendieckService.theta_set(weight('v^v^'))),
            {weight('v^v^'), weight('^vv^'), weight('v^^v'), weight('^v^v')},
        )
        self.assertEqual(GrothendieckService.theta_set(weight('^^vv')), [weight('^^vv')])
        for w in WeightService.enumerate_weights(Shape(6, 2)):
            cups = WeightService.weight_to_m(w).cup_count
            self.assertEqual(len(GrothendieckService.theta_set(w)), 2 ** cups)

    def test_two_point_matrix(self):
        """Тест матрицы [[1, -1], [0, 1]] в порядке (∨∧, ∧∨)"""
        matrix = GrothendieckService.k0_matrix(Shape(2, 1))
        order = (weight('v^'), weight('^v'))
        self.assertEqual([[matrix.entry(a, b) for b in order] for a in order], [[1, -1], [0, 1]])
        self.assertEqual(matrix.direction, OrderDirection.REVERSED)

    def assert_matrix_properties(self, shape):
        matrix = GrothendieckService.k0_matrix(shape)
        self.assertIn(matrix.determinant, (1, -1))
        self.assertTrue(GrothendieckService.is_unitriangular(matrix))
        for w in matrix.weights:
            self.assertEqual(matrix.entry(w, w), 1)
            self.assertEqual(set(matrix.row(w)), set(GrothendieckService.theta_set(w)))
        self.assertTrue(GrothendieckService.signs_match_flips(shape))

    def test_matrix_properties(self):
        """Тест определителя, диагонали, носителя и знаков"""
        for n in range(2, 7):
            for k in range(n // 2 + 1):
                self.assert_matrix_properties(Shape(n, k))

    @tag('slow')
    def test_matrix_properties_eight_points(self):
        """Тест свойств матрицы для n = 8"""
        for k in range(5):
            self.assert_matrix_properties(Shape(8, k))

    def test_four_point_matrix(self):
        """Тест полной матрицы 6x6"""
        matrix = GrothendieckService.k0_matrix(Shape(4, 2))
        self.assertEqual(len(matrix.entries), 6)
        self.assertEqual(matrix.row(weight('vv^^')), {
            weight('vv^^'): 1, weight('v^v^'): -1, weight('^vv^'): 1, weight('^v^v'): -1,
        })
        self.assertEqual(GrothendieckService.order_direction(Shape(4, 2)), OrderDirection.REVERSED)

    def test_csv_export(self):
        """Тест выгрузки CSV"""
        data = K0MatrixSerializer(GrothendieckService.k0_matrix(Shape(2, 1))).data
        self.assertEqual(k0_csv(data), 'w,^v,v^\n^v,1,0\nv^,-1,1\n')


class KtheoryAPITestCase(APITestCase):
    """Тесты API группы Гротендика"""

    def test_k0_endpoint(self):
        """Тест матрицы через API"""
        response = self.client.get(reverse('ktheory-k0'), {'n': 2, 'k': 1})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['entries'], [[1, 0], [-1, 1]])
        self.assertEqual(response.data['direction'], 'reversed')

    def test_k0_csv(self):
        """Тест выгрузки CSV через API"""
        response = self.client.get(reverse('ktheory-k0'), {'n': 2, 'k': 1, 'export': 'csv'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.content.decode(), 'w,^v,v^\n^v,1,0\nv^,-1,1\n')

    def test_invalid_shape(self):
        """Тест ошибки формы"""
        response = self.client.get(reverse('ktheory-k0'), {'n': 3, 'k': 2})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
