# diagrams/tests.py
import itertools

from django.test import SimpleTestCase, tag
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from .exceptions import DiagramValidationError
from .rendering import render_circle, render_cup
from .serializers import load_cup_diagram, CupDiagramSerializer
from .services import EquivalenceService, GluingService, TableauService, WeightService
from .types import CupDiagram, Mark, Shape, StandardTableau, WeightSequence

NESTED = CupDiagram(4, ((1, 4), (2, 3)))
NEXT = CupDiagram(4, ((1, 2), (3, 4)))


def weight(text):
    return WeightSequence.parse(text)


def all_shapes(largest, smallest=1):
    return [Shape(n, k) for n in range(smallest, largest + 1) for k in range(n // 2 + 1)]


def oriented_by(w):
    """Все 2^n последовательностей, ориентирующих m(w) с лучами по w"""
    m = WeightService.weight_to_m(w)
    result = set()
    for marks in itertools.product((Mark.DOWN, Mark.UP), repeat=w.n):
        if any(marks[a - 1] is marks[b - 1] for a, b in m.cups):
            continue
        if any(marks[p - 1] is not w[p] for p in m.rays):
            continue
        result.add(WeightSequence(marks))
    return result


class ValueTypesTestCase(SimpleTestCase):
    """Тесты типов значений"""

    def test_shape_requires_two_rows(self):
        """Тест ограничения 2k <= n"""
        Shape(4, 2)
        with self.assertRaises(DiagramValidationError):
            Shape(3, 2)
        with self.assertRaises(DiagramValidationError):
            Shape(0, 0)

    def test_weight_parsing(self):
        """Тест разбора весов, включая юникод"""
        self.assertEqual(str(weight('∨∧∨∧')), 'v^v^')
        self.assertEqual(weight('v^v^').symbols, '∨∧∨∧')
        self.assertEqual(weight('^vv^').shape, Shape(4, 2))
        with self.assertRaises(DiagramValidationError):
            weight('^x')
        with self.assertRaises(DiagramValidationError):
            weight('')

    def test_prefix_counts(self):
        """Тест счетчиков t_i и b_i"""
        w = weight('v^^v')
        for i in range(5):
            self.assertEqual(w.top_count(i) + w.bottom_count(i), i)
        self.assertEqual(w.top_count(3), 2)

    def test_invalid_cup_diagrams(self):
        """Тест отказа для пересекающихся чашек и лучей внутри чашки"""
        with self.assertRaises(DiagramValidationError):
            CupDiagram(4, ((1, 3), (2, 4)))
        with self.assertRaises(DiagramValidationError):
            CupDiagram(3, ((1, 3),), (2,))
        with self.assertRaises(DiagramValidationError):
            CupDiagram(4, ((1, 2),), (3,))

    def test_invalid_tableaux(self):
        """Тест отказа для нестандартных таблиц"""
        with self.assertRaises(DiagramValidationError):
            StandardTableau((2, 1), (3,))
        with self.assertRaises(DiagramValidationError):
            StandardTableau((4, 3), (2, 2))
        with self.assertRaises(DiagramValidationError):
            StandardTableau((3, 4), (2, 1))


class TableauServiceTestCase(SimpleTestCase):
    """Тесты таблиц и диаграмм чашек"""

    def test_running_example(self):
        """Тест двух таблиц формы (2,2)"""
        self.assertEqual(TableauService.tableau_to_cup(StandardTableau((4, 3), (2, 1))), NESTED)
        self.assertEqual(TableauService.tableau_to_cup(StandardTableau((4, 2), (3, 1))), NEXT)
        self.assertEqual(TableauService.cup_to_tableau(NESTED), StandardTableau((4, 3), (2, 1)))
        self.assertEqual(TableauService.cup_to_tableau(NEXT), StandardTableau((4, 2), (3, 1)))

    def test_small_cases(self):
        """Тест одной чашки и чашки с лучом"""
        self.assertEqual(
            TableauService.tableau_to_cup(StandardTableau((2,), (1,))),
            CupDiagram(2, ((1, 2),)),
        )
        self.assertEqual(
            TableauService.cup_to_tableau(CupDiagram(3, ((1, 2),), (3,))),
            StandardTableau((3, 2), (1,)),
        )

    def test_five_point_diagrams(self):
        """Тест пяти диаграмм формы (3,2)"""
        tableaux = TableauService.enumerate_standard(Shape(5, 2))
        self.assertEqual(len(tableaux), 5)
        diagrams = {TableauService.tableau_to_cup(t) for t in tableaux}
        self.assertEqual(diagrams, {
            CupDiagram(5, ((1, 4), (2, 3)), (5,)),
            CupDiagram(5, ((1, 2), (3, 4)), (5,)),
            CupDiagram(5, ((1, 2), (4, 5)), (3,)),
            CupDiagram(5, ((2, 3), (4, 5)), (1,)),
            CupDiagram(5, ((2, 5), (3, 4)), (1,)),
        })
        self.assertTrue(all(len(d.rays) == 1 for d in diagrams))

    def test_enumeration_counts(self):
        """Тест числа стандартных таблиц"""
        self.assertEqual(len(TableauService.enumerate_standard(Shape(4, 2))), 2)
        single_row = TableauService.enumerate_standard(Shape(2, 0))
        self.assertEqual(single_row, [StandardTableau((2, 1), ())])
        self.assertEqual(len(TableauService.enumerate_standard(Shape(8, 4))), 14)

    def test_round_trips(self):
        """Тест взаимной обратности биекции"""
        for n in range(1, 11):
            for k in range(n // 2 + 1):
                for tableau in TableauService.enumerate_standard(Shape(n, k)):
                    diagram = TableauService.tableau_to_cup(tableau)
                    self.assertEqual(diagram.cup_count, k)
                    self.assertEqual(TableauService.cup_to_tableau(diagram), tableau)
                    self.assertEqual(
                        WeightService.weight_to_m(TableauService.weight_of(tableau)), diagram
                    )

    def test_fixed_points_of_components(self):
        """Тест неподвижных точек компонент"""
        nested_points = TableauService.component_fixed_points(StandardTableau((4, 3), (2, 1)))
        next_points = TableauService.component_fixed_points(StandardTableau((4, 2), (3, 1)))
        self.assertEqual([str(w) for w in nested_points], ['^^vv', '^v^v', 'v^v^', 'vv^^'])
        self.assertEqual([str(w) for w in next_points], ['^v^v', 'v^^v', '^vv^', 'v^v^'])
        for tableau in TableauService.enumerate_standard(Shape(6, 2)):
            self.assertEqual(len(TableauService.component_fixed_points(tableau)), 4)

    def test_column_number(self):
        """Тест номера столбца"""
        tableau = StandardTableau((4, 3), (2, 1))
        self.assertEqual(TableauService.column_number(tableau, 3), 2)
        self.assertEqual(TableauService.column_number(tableau, 2), 1)
        with self.assertRaises(DiagramValidationError):
            TableauService.column_number(tableau, 7)


class WeightServiceTestCase(SimpleTestCase):
    """Тесты весов, m(w) и C(w)"""

    def test_enumerate_weights_order(self):
        """Тест канонического порядка шести весов"""
        weights = WeightService.enumerate_weights(Shape(4, 2))
        self.assertEqual([str(w) for w in weights], ['^^vv', '^v^v', 'v^^v', '^vv^', 'v^v^', 'vv^^'])
        self.assertEqual([str(w) for w in WeightService.enumerate_weights(Shape(2, 1))], ['^v', 'v^'])
        self.assertEqual(len(WeightService.enumerate_weights(Shape(5, 2))), 10)

    def test_maximal_cup_diagram(self):
        """Тест диаграмм m(w)"""
        self.assertEqual(WeightService.weight_to_m(weight('v^v^')), NEXT)
        self.assertEqual(WeightService.weight_to_m(weight('vv^^')), NESTED)
        self.assertEqual(WeightService.weight_to_m(weight('^^vv')), CupDiagram(4, (), (1, 2, 3, 4)))

    def test_completed_cup_diagram(self):
        """Тест диаграмм C(w)"""
        self.assertEqual(WeightService.weight_to_C(weight('^^vv')), NESTED)
        self.assertEqual(WeightService.weight_to_C(weight('v^^v')), NEXT)
        self.assertEqual(WeightService.weight_to_C(weight('^v^v')), NESTED)
        self.assertEqual(WeightService.weight_to_C(weight('^vv^')), NEXT)
        self.assertEqual(WeightService.weight_to_C(weight('v^')), CupDiagram(2, ((1, 2),)))
        with self.assertRaises(DiagramValidationError):
            WeightService.weight_to_C(weight('vv^'))

    def test_completion_properties(self):
        """Тест: m(w) входит в C(w), k чашек, w ориентирует C(w)"""
        for shape in all_shapes(10):
            standard = set()
            for w in WeightService.enumerate_weights(shape):
                m = WeightService.weight_to_m(w)
                completed = WeightService.weight_to_C(w)
                self.assertTrue(set(m.cups) <= set(completed.cups))
                self.assertEqual(completed.cup_count, shape.k)
                self.assertTrue(WeightService.is_oriented(w, completed))
                self.assertEqual(m.cup_count == shape.k, w.is_standard)
                if w.is_standard:
                    self.assertEqual(completed, m)
                    standard.add(m)
            self.assertEqual(len(standard), len(TableauService.enumerate_standard(shape)))

    def test_is_oriented_examples(self):
        """Тест ориентируемости для двух диаграмм формы (2,2)"""
        oriented_next = [str(w) for w in WeightService.enumerate_weights(Shape(4, 2))
                         if WeightService.is_oriented(w, NEXT)]
        self.assertEqual(oriented_next, ['^v^v', 'v^^v', '^vv^', 'v^v^'])
        oriented_nested = [str(w) for w in WeightService.enumerate_weights(Shape(4, 2))
                           if WeightService.is_oriented(w, NESTED)]
        self.assertEqual(oriented_nested, ['^^vv', '^v^v', 'v^v^', 'vv^^'])
        with self.assertRaises(DiagramValidationError):
            WeightService.is_oriented(weight('v^'), NEXT)

    def test_oriented_against_reference(self):
        """Тест ориентации с предписанными лучами"""
        diagram = WeightService.weight_to_m(weight('^v^v'))
        self.assertTrue(WeightService.oriented_against(weight('^v^v'), diagram, weight('^v^v')))
        self.assertFalse(WeightService.oriented_against(weight('^v^v'), diagram, weight('^^vv')))

    def test_nesting_size(self):
        """Тест δ(i)"""
        self.assertEqual(WeightService.nesting_size(NESTED, 1), 2)
        self.assertEqual(WeightService.nesting_size(NESTED, 2), 1)
        with self.assertRaises(DiagramValidationError):
            WeightService.nesting_size(NESTED, 3)


class GluingServiceTestCase(SimpleTestCase):
    """Тесты склейки и ориентаций"""

    def setUp(self):
        self.w = WeightService.enumerate_weights(Shape(4, 2))

    def pair_count(self, i, j):
        a, b = self.w[i - 1], self.w[j - 1]
        return len(GluingService.orientations(GluingService.glue_weights(a, b), a, b))

    def test_glue_components(self):
        """Тест компонент склеек"""
        single = GluingService.glue(NESTED, NEXT)
        self.assertEqual(single.circle_count, 1)
        self.assertEqual(single.components[0].vertices, (1, 2, 3, 4))
        mirror = GluingService.glue(NEXT, NEXT)
        self.assertEqual([c.vertices for c in mirror.circles], [(1, 2), (3, 4)])
        rays = GluingService.glue(WeightService.weight_to_m(weight('^^vv')), NESTED)
        self.assertEqual(rays.circle_count, 0)
        self.assertEqual(len(rays.lines), 2)

    def test_nesting_forest(self):
        """Тест вложенности окружностей"""
        glued = GluingService.glue(NESTED, NESTED)
        self.assertEqual(glued.parents, ((0, None), (1, 0)))
        self.assertEqual(GluingService.nesting_depth(glued, 0), 1)
        self.assertEqual(GluingService.nesting_depth(glued, 1), 2)

    def test_fixed_point_pairs(self):
        """Тест числа неподвижных точек в пересечениях"""
        for pair in ((1, 3), (1, 4), (1, 5)):
            self.assertEqual(self.pair_count(*pair), 0)
        for pair in ((2, 6), (3, 5), (4, 5), (5, 6)):
            self.assertEqual(self.pair_count(*pair), 2)
        self.assertEqual(self.pair_count(1, 2), 1)

    def test_orientation_law_against_exhaustive_filter(self):
        """Тест: число ориентаций 0, 1 или 2^c и совпадает с перебором"""
        for shape in all_shapes(6):
            weights = WeightService.enumerate_weights(shape)
            for a in weights:
                for b in weights:
                    glued = GluingService.glue_weights(a, b)
                    fast = GluingService.orientations(glued, a, b)
                    slow = GluingService.orientations_exhaustive(glued, a, b)
                    self.assertEqual([o.weights for o in fast], [o.weights for o in slow])
                    self.assertIn(len(fast), (0, 2 ** glued.circle_count))

    @tag('slow')
    def test_orientation_law_up_to_ten_points(self):
        """Тест закона ориентаций для всех форм с 7 <= n <= 10"""
        for shape in all_shapes(10, smallest=7):
            weights = WeightService.enumerate_weights(shape)
            candidates = {w: oriented_by(w) for w in weights}
            for a in weights:
                for b in weights:
                    glued = GluingService.glue_weights(a, b)
                    fast = [o.weights for o in GluingService.orientations(glued, a, b)]
                    expected = sorted(candidates[a] & candidates[b], key=lambda v: v.sort_key)
                    self.assertEqual(fast, expected)
                    self.assertIn(len(fast), (0, 2 ** glued.circle_count))

    def test_epsilon(self):
        """Тест знаков ε"""
        glued = GluingService.glue(NESTED, NEXT)
        self.assertEqual(GluingService.circle_cycle(glued, 0), [1, 2, 3, 4])
        self.assertEqual(GluingService.epsilon(glued, 2, 2), 1)
        self.assertEqual(GluingService.epsilon(glued, 1, 2), -1)
        self.assertEqual(GluingService.epsilon(glued, 1, 4), -1)
        self.assertEqual(GluingService.epsilon(glued, 1, 3), 1)
        self.assertEqual(GluingService.epsilon(GluingService.glue(NEXT, NEXT), 1, 3), 0)


class EquivalenceServiceTestCase(SimpleTestCase):
    """Тесты отношений эквивалентности и ранга"""

    def test_single_diagram_classes(self):
        """Тест классов одной диаграммы"""
        self.assertEqual(EquivalenceService.single_equivalence(NEXT), ((0, 2, 4), (1,), (3,)))

    def test_five_point_pair(self):
        """Тест пары S1, S4"""
        first = CupDiagram(5, ((1, 4), (2, 3)), (5,))
        fourth = CupDiagram(5, ((2, 3), (4, 5)), (1,))
        data = EquivalenceService.equivalence(first, fourth)
        self.assertEqual(data.classes, ((0, 4), (1, 3, 5), (2,)))
        self.assertEqual(data.min_reps, (0, 1, 2))
        self.assertEqual(data.circle_reps, (2,))
        self.assertEqual(data.rank_map, {0: 0, 1: 0, 2: 1})

    def test_running_example_pair(self):
        """Тест пары nxt, nested"""
        data = EquivalenceService.equivalence(NEXT, NESTED)
        self.assertEqual(data.min_reps, (0, 1))
        self.assertEqual(data.circle_reps, (1,))
        self.assertEqual(data.rank_map[1], 1)

    def test_rank_follows_nesting(self):
        """Тест ранга для вложенных и соседних окружностей"""
        self.assertEqual(EquivalenceService.equivalence(NESTED, NESTED).rank_map, {0: 0, 1: 1, 2: 2})
        self.assertEqual(EquivalenceService.equivalence(NEXT, NEXT).rank_map, {0: 0, 1: 1, 3: 1})

    def test_min_reps_are_leftmost_points(self):
        """Тест: минимальные представители - самые левые точки компонент"""
        for shape in (Shape(4, 2), Shape(5, 2), Shape(6, 3), Shape(7, 2), Shape(8, 4)):
            diagrams = [TableauService.tableau_to_cup(t) for t in TableauService.enumerate_standard(shape)]
            for bottom in diagrams:
                for top in diagrams:
                    data = EquivalenceService.equivalence(bottom, top)
                    glued = GluingService.glue(top, bottom)
                    expected = (0,) + tuple(sorted(c.leftmost for c in glued.components))
                    self.assertEqual(data.min_reps, expected)
                    self.assertEqual(len(data.circle_reps), glued.circle_count)

    @tag('slow')
    def test_rank_invariants_for_all_pairs(self):
        """Тест: ранг 0 ровно на линиях и растет не более чем на 1"""
        for shape in all_shapes(10):
            diagrams = [TableauService.tableau_to_cup(t) for t in TableauService.enumerate_standard(shape)]
            for bottom in diagrams:
                for top in diagrams:
                    data = EquivalenceService.equivalence(bottom, top)
                    rep_of = {p: members[0] for members in data.classes for p in members}
                    for rep in data.min_reps[1:]:
                        self.assertEqual(data.rank_map[rep] == 0, rep in data.line_reps)
                        if rep in data.circle_reps:
                            step = data.rank_map[rep] - data.rank_map[rep_of[rep - 1]]
                            self.assertIn(step, (0, 1))


class RenderingTestCase(SimpleTestCase):
    """Тесты ASCII-рисунков"""

    def test_render_nested_cups(self):
        """Тест рисунка вложенных чашек"""
        self.assertEqual(render_cup(NESTED), "o o o o\n| '-' |\n'-----'")

    def test_render_with_marks_and_rays(self):
        """Тест рисунка с лучами и метками"""
        w = weight('^v^v')
        self.assertEqual(render_cup(WeightService.weight_to_m(w), w), "^ v ^ v\n| '-' |")

    def test_render_circle(self):
        """Тест рисунка склейки"""
        picture = render_circle(GluingService.glue(NESTED, NEXT))
        self.assertEqual(picture, ",-----,\n| ,-, |\no o o o\n'-' '-'")


class CupDiagramSerializerTestCase(SimpleTestCase):
    """Тесты сериализации диаграмм"""

    def test_json_round_trip(self):
        """Тест загрузки диаграммы из JSON"""
        diagram = CupDiagram(5, ((1, 4), (2, 3)), (5,))
        data = CupDiagramSerializer(diagram).data
        self.assertEqual(data, {'n': 5, 'cups': [[1, 4], [2, 3]], 'rays': [5]})
        self.assertEqual(load_cup_diagram(data), diagram)


class DiagramsAPITestCase(APITestCase):
    """Тесты API диаграмм"""

    def test_weights_endpoint(self):
        """Тест списка весов"""
        response = self.client.get(reverse('diagram-weights'), {'n': 4, 'k': 2})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual([row['weight'] for row in response.data][4], 'v^v^')

    def test_invalid_shape(self):
        """Тест ошибки для недопустимой формы"""
        response = self.client.get(reverse('diagram-weights'), {'n': 3, 'k': 2})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_glue_endpoint(self):
        """Тест склейки через API"""
        response = self.client.get(reverse('diagram-glue'), {'top': 'vv^^', 'bottom': 'v^v^'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['diagram']['circle_count'], 1)
        self.assertEqual(response.data['orientations'], ['^v^v', 'v^v^'])
