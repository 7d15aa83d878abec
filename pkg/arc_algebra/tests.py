# arc_algebra/tests.py
import json

from django.test import SimpleTestCase, TestCase, tag
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from cohomology.types import GradedDim
from diagrams.exceptions import CompositionError, DiagramValidationError
from diagrams.services import WeightService
from diagrams.types import Shape, WeightSequence

from .factories import CheckRunFactory
from .models import CheckRun
from .oracle import khovanov_product
from .parallel import fan_out
from .serializers import StructureTableSerializer, load_structure_table
from .services import AlgebraService, CheckRunService, CheckService, FormatService
from .surgery import compatible_orders, default_order, validate_order
from .types import AlgebraElement, BasisElement, BasisFilter, Label

NESTED = WeightSequence.parse('vv^^')
NXT = WeightSequence.parse('v^v^')
CUP = WeightSequence.parse('v^')
RAYS = WeightSequence.parse('^v')


def weight(text):
    return WeightSequence.parse(text)


def unit(src, tgt):
    return FormatService.parse_element(f'{src},{tgt}')


def element(src, tgt, mapping):
    return AlgebraElement.from_dict(src, tgt, {weight(o): c for o, c in mapping.items()})


def square(x):
    return x * x


class BasisTestCase(SimpleTestCase):
    """Тесты базиса и степени"""

    def test_basis_sizes(self):
        """Тест размеров базиса для (2,1) и (4,2)"""
        self.assertEqual(len(AlgebraService.basis(Shape(4, 2), BasisFilter.STANDARD_ONLY)), 12)
        self.assertEqual(len(AlgebraService.basis(Shape(2, 1), BasisFilter.ALL)), 5)
        self.assertEqual(len(AlgebraService.basis(Shape(2, 1), BasisFilter.STANDARD_ONLY)), 2)

    def test_hom_basis_order_and_degrees(self):
        """Тест порядка ориентаций и степеней End(nested)"""
        basis = AlgebraService.hom_basis(NESTED, NESTED)
        self.assertEqual([str(b.orientation) for b in basis], ['^^vv', '^v^v', 'v^v^', 'vv^^'])
        self.assertEqual([b.degree for b in basis], [4, 2, 2, 0])
        self.assertEqual(basis[1].labels, ((1, Label.X), (2, Label.ONE)))

    def test_single_circle_degrees(self):
        """Тест степеней 1 и 3 для одной окружности"""
        degrees = sorted(b.degree for b in AlgebraService.hom_basis(NESTED, NXT))
        self.assertEqual(degrees, [1, 3])

    def test_idempotent_has_degree_zero(self):
        """Тест: идемпотент имеет степень 0"""
        for x in WeightService.enumerate_weights(Shape(5, 2)):
            (b, c), = AlgebraService.idempotent(x).basis_terms
            self.assertEqual((b.degree, c), (0, 1))

    def test_circle_flip_changes_degree_by_two(self):
        """Тест: смена ориентации окружности меняет степень на 2"""
        for b in AlgebraService.basis(Shape(4, 2)):
            for circle in b.diagram.circles:
                flipped = b.orientation.with_marks({p: b.orientation[p].flipped for p in circle.vertices})
                other = BasisElement(b.src, b.tgt, flipped)
                self.assertEqual(abs(other.degree - b.degree), 2)

    def test_algebra_element_arithmetic(self):
        """Тест сложения и сокращения слагаемых"""
        a = element(NESTED, NESTED, {'^v^v': 1, 'v^v^': 2})
        b = element(NESTED, NESTED, {'v^v^': -2})
        self.assertEqual((a + b).as_dict(), {weight('^v^v'): 1})
        self.assertTrue((a - a).is_zero)
        with self.assertRaises(DiagramValidationError):
            a + AlgebraService.idempotent(NXT)


class MultiplyTestCase(SimpleTestCase):
    """Тесты умножения"""

    def test_product_through_next(self):
        """Тест 1·1 через nxt: x1 + αx2"""
        product = AlgebraService.multiply(unit(NESTED, NXT), unit(NXT, NESTED), 1)
        self.assertEqual(product, element(NESTED, NESTED, {'^v^v': 1, 'v^v^': 1}))
        product = AlgebraService.multiply(unit(NESTED, NXT), unit(NXT, NESTED), -1)
        self.assertEqual(product, element(NESTED, NESTED, {'^v^v': 1, 'v^v^': -1}))
        self.assertEqual(FormatService.element(product), 'x1 - x2')

    def test_product_through_nested(self):
        """Тест 1·1 через nested: αx1 + αx3"""
        for alpha in (1, -1):
            product = AlgebraService.multiply(unit(NXT, NESTED), unit(NESTED, NXT), alpha)
            self.assertEqual(product, element(NXT, NXT, {'^vv^': alpha, 'v^^v': alpha}))

    def test_rays_and_cups_at_two_points(self):
        """Тест произведений линий при n = 2"""
        down, up = unit(CUP, RAYS), unit(RAYS, CUP)
        self.assertEqual(AlgebraService.multiply(down, up, 1), element(CUP, CUP, {'^v': 1}))
        self.assertEqual(AlgebraService.multiply(down, up, -1), element(CUP, CUP, {'^v': -1}))
        self.assertTrue(AlgebraService.multiply(up, down, 1).is_zero)

    def test_dual_numbers(self):
        """Тест End(∨∧) = Z[X]/(X^2)"""
        one = AlgebraService.idempotent(CUP)
        x = element(CUP, CUP, {'^v': 1})
        self.assertEqual(AlgebraService.multiply(one, one), one)
        self.assertEqual(AlgebraService.multiply(x, one), x)
        self.assertEqual(AlgebraService.multiply(one, x), x)
        self.assertTrue(AlgebraService.multiply(x, x).is_zero)

    def test_idempotents_square_for_both_alpha(self):
        """Тест e_x · e_x = e_x"""
        for x in WeightService.enumerate_weights(Shape(4, 2)):
            e = AlgebraService.idempotent(x)
            for alpha in (1, -1):
                self.assertEqual(AlgebraService.multiply(e, e, alpha), e)
            self.assertEqual(AlgebraService.multiply_nested(e, e), e)

    def test_nested_tqft_matches_example(self):
        """Тест вложенной ТКТП на примере nested, nxt, nested"""
        product = AlgebraService.multiply_nested(unit(NESTED, NXT), unit(NXT, NESTED))
        self.assertEqual(product, AlgebraService.multiply(unit(NESTED, NXT), unit(NXT, NESTED), -1))

    def test_non_associative_triple(self):
        """Тест тройки, нарушающей ассоциативность при α = -1"""
        a, b = unit(NESTED, NXT), unit(NXT, NESTED)
        for alpha, sign in ((1, 1), (-1, -1)):
            left = AlgebraService.multiply(AlgebraService.multiply(a, b, alpha), a, alpha)
            right = AlgebraService.multiply(a, AlgebraService.multiply(b, a, alpha), alpha)
            self.assertEqual(left, element(NESTED, NXT, {'^v^v': 2}))
            self.assertEqual(right, element(NESTED, NXT, {'^v^v': 2 * sign}))

    def test_composition_error(self):
        """Тест ошибки композиции"""
        with self.assertRaises(CompositionError):
            AlgebraService.multiply(unit(NESTED, NXT), unit(NESTED, NXT))
        self.assertTrue(AlgebraService.product(unit(NESTED, NXT), unit(NESTED, NXT)).is_zero)

    def test_order_validation(self):
        """Тест отказа от порядка, нарушающего вложенность"""
        with self.assertRaises(DiagramValidationError):
            AlgebraService.multiply(unit(NXT, NESTED), unit(NESTED, NXT), 1, ((2, 3), (1, 4)))
        product = AlgebraService.multiply(unit(NXT, NESTED), unit(NESTED, NXT), 1, 'outer_first_right')
        self.assertEqual(product, element(NXT, NXT, {'^vv^': 1, 'v^^v': 1}))

    def test_orders_of_middle_diagram(self):
        """Тест перечисления допустимых порядков"""
        m = WeightService.weight_to_m(weight('^v^v'))
        self.assertEqual(default_order(m), (1, (2, 3), 4))
        self.assertEqual(compatible_orders(m), [(1, 4, (2, 3)), ((2, 3), 1, 4)])
        nested = WeightService.weight_to_m(NESTED)
        self.assertEqual(compatible_orders(nested), [((1, 4), (2, 3))])
        self.assertEqual(validate_order(nested, [[1, 4], [2, 3]]), ((1, 4), (2, 3)))
        with self.assertRaises(DiagramValidationError):
            default_order(nested, 'random')

    def test_oracle_on_examples(self):
        """Тест прямого вычисления на примерах"""
        a, b = unit(NESTED, NXT), unit(NXT, NESTED)
        direct = khovanov_product(NESTED, NXT, NESTED, a.terms, b.terms)
        self.assertEqual(direct, {weight('^v^v'): 1, weight('v^v^'): 1})
        self.assertEqual(AlgebraService.oracle_product(unit(CUP, RAYS), unit(RAYS, CUP)), element(CUP, CUP, {'^v': 1}))

    def test_lines_closing_into_circles(self):
        """Тест тройки с линиями для (5,2): обе расстановки скобок дают x на новой окружности"""
        x, y, z, t = weight('^^v^v'), weight('^v^^v'), weight('^v^v^'), weight('^vv^^')
        a = element(x, y, {'^^v^v': 1})
        b = element(y, z, {'^v^^v': 1})
        c = element(z, t, {'^v^v^': 1})
        for alpha in (1, -1):
            ab = AlgebraService.multiply(a, b, alpha)
            bc = AlgebraService.multiply(b, c, alpha)
            self.assertEqual(ab, element(x, z, {'^^v^v': 1}))
            self.assertEqual(bc, element(y, t, {'^^v^v': 1}))
            expected = element(x, t, {'^^^vv': alpha})
            self.assertEqual(AlgebraService.multiply(ab, c, alpha), expected)
            self.assertEqual(AlgebraService.multiply(a, bc, alpha), expected)
        self.assertEqual(AlgebraService.oracle_product(a, bc), element(x, t, {'^^^vv': 1}))
        self.assertEqual(AlgebraService.oracle_product(ab, c), element(x, t, {'^^^vv': 1}))


class FormatTestCase(SimpleTestCase):
    """Тесты текстовой записи"""

    def test_element_text(self):
        """Тест записи коэффициентов и мономов"""
        self.assertEqual(FormatService.element(AlgebraElement.zero(NESTED, NESTED)), '0')
        self.assertEqual(FormatService.element(AlgebraService.idempotent(NESTED)), '1')
        self.assertEqual(FormatService.element(element(NESTED, NESTED, {'^^vv': -2, 'vv^^': 3})), '-2*x1*x2 + 3')

    def test_parse_element(self):
        """Тест разбора SRC,TGT[,ORIENTATION]"""
        self.assertEqual(unit(NESTED, NXT).as_dict(), {weight('v^v^'): 1})
        explicit = FormatService.parse_element('vv^^,v^v^,^v^v')
        self.assertEqual(explicit.as_dict(), {weight('^v^v'): 1})
        for text in ('vv^^', 'vv^^,v^v^,^^^^', '^^vv,v^^v'):
            with self.assertRaises(DiagramValidationError):
                FormatService.parse_element(text)


class ActionTestCase(SimpleTestCase):
    """Тесты действия x_i"""

    def test_action_signs(self):
        """Тест знака (-1)^(i+1) и обнуления на X"""
        one = AlgebraService.idempotent(NESTED)
        self.assertEqual(AlgebraService.act(one, 1), element(NESTED, NESTED, {'^v^v': 1}))
        self.assertEqual(AlgebraService.act(one, 4), element(NESTED, NESTED, {'^v^v': -1}))
        self.assertEqual(AlgebraService.act(one, 2), element(NESTED, NESTED, {'v^v^': -1}))
        self.assertTrue(AlgebraService.act(AlgebraService.act(one, 1), 4).is_zero)
        self.assertTrue(AlgebraService.act(AlgebraService.idempotent(RAYS), 1).is_zero)
        with self.assertRaises(DiagramValidationError):
            AlgebraService.act(one, 5)

    def test_multiplication_is_linear(self):
        """Тест линейности умножения относительно действия (α = 1)"""
        basis = AlgebraService.basis(Shape(4, 2), BasisFilter.STANDARD_ONLY)
        for left in basis:
            for right in basis:
                if left.tgt != right.src:
                    continue
                a, b = AlgebraElement.from_basis(left), AlgebraElement.from_basis(right)
                product = AlgebraService.multiply(a, b, 1)
                for i in range(1, 5):
                    acted = AlgebraService.act(product, i)
                    self.assertEqual(AlgebraService.multiply(AlgebraService.act(a, i), b, 1), acted)
                    self.assertEqual(AlgebraService.multiply(a, AlgebraService.act(b, i), 1), acted)


class StructureTableTestCase(SimpleTestCase):
    """Тесты таблиц структурных констант"""

    def test_dual_numbers_table(self):
        """Тест таблицы (2,1): алгебра Z[X]/(X^2)"""
        table = AlgebraService.structure_table(Shape(2, 1), 1, BasisFilter.STANDARD_ONLY)
        self.assertEqual([str(b.orientation) for b in table.basis], ['^v', 'v^'])
        self.assertEqual(table.products, (((0, 1), ((0, 1),)), ((1, 0), ((0, 1),)), ((1, 1), ((1, 1),))))

    def test_json_round_trip(self):
        """Тест обратного чтения JSON таблицы"""
        table = AlgebraService.structure_table(Shape(4, 2), -1, BasisFilter.ALL)
        data = json.loads(json.dumps(StructureTableSerializer(table).data))
        self.assertEqual(load_structure_table(data), table)

    def test_parallel_table_matches_serial(self):
        """Тест: параллельное построение дает ту же таблицу"""
        serial = AlgebraService.structure_table(Shape(4, 2), 1, BasisFilter.STANDARD_ONLY, workers=1)
        parallel = AlgebraService.structure_table(Shape(4, 2), 1, BasisFilter.STANDARD_ONLY, workers=2)
        self.assertEqual(parallel, serial)
        self.assertEqual(fan_out(square, range(10), workers=3, chunk_size=2), [x * x for x in range(10)])

    def test_cartan_matrix(self):
        """Тест градуированных размерностей Hom"""
        matrix = AlgebraService.cartan_matrix(Shape(4, 2), BasisFilter.STANDARD_ONLY)
        self.assertEqual(matrix.weights, (NXT, NESTED))
        self.assertEqual(matrix.entry(NESTED, NESTED), GradedDim((1, 0, 2, 0, 1)))
        self.assertEqual(matrix.entry(NESTED, NXT), GradedDim((1, 0, 1), 1))
        full = AlgebraService.cartan_matrix(Shape(4, 2))
        self.assertEqual(full.entry(weight('^^vv'), weight('v^^v')), GradedDim())


class CheckTestCase(SimpleTestCase):
    """Тесты исчерпывающих проверок"""

    def test_associativity(self):
        """Тест ассоциативности при α = 1 и контрпримера при α = -1"""
        self.assertTrue(CheckService.check_associativity(Shape(2, 1), -1).passed)
        self.assertTrue(CheckService.check_associativity(Shape(2, 1), 1, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_associativity(Shape(4, 2), 1).passed)
        self.assertTrue(CheckService.check_associativity(Shape(4, 2), 1, BasisFilter.ALL).passed)
        result = CheckService.check_associativity(Shape(4, 2), -1)
        self.assertFalse(result.passed)
        self.assertEqual(len(result.witness['triple']), 3)
        self.assertNotEqual(result.witness['left'], result.witness['right'])

    def test_order_independence(self):
        """Тест независимости от порядка чашек"""
        self.assertTrue(CheckService.check_order_independence(Shape(4, 2), 1, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_order_independence(Shape(4, 2), -1).passed)
        self.assertTrue(CheckService.check_order_independence(Shape(4, 2), -1, nested=True).passed)

    def test_nested_agreement_and_degrees(self):
        """Тест вложенной ТКТП и аддитивности степени"""
        self.assertTrue(CheckService.check_nested_agreement(Shape(4, 2), BasisFilter.ALL).passed)
        for alpha in (1, -1):
            self.assertTrue(CheckService.check_degree_additivity(Shape(4, 2), alpha, BasisFilter.ALL).passed)

    def test_unit_and_oracle(self):
        """Тест единицы и сравнения с прямым вычислением"""
        self.assertTrue(CheckService.check_unit(Shape(4, 2), BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_oracle(Shape(2, 1), BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_oracle(Shape(4, 2), BasisFilter.ALL).passed)

    def test_grading(self):
        """Тест закона q^(k-c)(1+q^2)^c и нулевых Hom при несквозных линиях"""
        for shape in (Shape(3, 1), Shape(4, 2), Shape(5, 2), Shape(6, 2), Shape(6, 3)):
            self.assertTrue(CheckService.check_grading(shape).passed)
        self.assertEqual(AlgebraService.hom_basis(weight('v^v^^^'), weight('v^^^v^')), [])
        degrees = sorted(b.degree for b in AlgebraService.hom_basis(weight('v^v^^'), weight('^vv^^')))
        self.assertEqual(degrees, [1, 3])

    def test_five_point_basis_with_lines(self):
        """Тест ассоциативности и прямого вычисления на полном базисе (5,2)"""
        shape = Shape(5, 2)
        self.assertTrue(CheckService.check_associativity(shape, 1, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_oracle(shape, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_oracle(Shape(3, 1), BasisFilter.ALL).passed)

    def test_unknown_check(self):
        """Тест неизвестного вида проверки"""
        with self.assertRaises(DiagramValidationError):
            CheckService.run('commutativity', Shape(2, 1))

    @tag('slow')
    def test_six_point_sweeps(self):
        """Тест проверок для (6,3)"""
        shape = Shape(6, 3)
        self.assertTrue(CheckService.check_oracle(shape).passed)
        self.assertTrue(CheckService.check_associativity(shape, 1).passed)
        self.assertFalse(CheckService.check_associativity(shape, -1).passed)
        self.assertTrue(CheckService.check_nested_agreement(shape).passed)
        for alpha in (1, -1):
            self.assertTrue(CheckService.check_order_independence(shape, alpha).passed)
            self.assertTrue(CheckService.check_degree_additivity(shape, alpha).passed)
        self.assertTrue(CheckService.check_unit(shape).passed)

    @tag('slow')
    def test_full_basis_sweeps(self):
        """Тест проверок на полном базисе (5,2) и (6,3)"""
        five = Shape(5, 2)
        self.assertTrue(CheckService.check_order_independence(five, 1, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_nested_agreement(five, BasisFilter.ALL).passed)
        six = Shape(6, 3)
        self.assertTrue(CheckService.check_associativity(six, 1, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_oracle(six, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_nested_agreement(six, BasisFilter.ALL).passed)
        self.assertTrue(CheckService.check_order_independence(six, 1, BasisFilter.ALL).passed)

    @tag('slow')
    def test_grading_eight_points(self):
        """Тест градуировки для (8,4)"""
        self.assertTrue(CheckService.check_grading(Shape(8, 4)).passed)


class CheckRunTestCase(TestCase):
    """Тесты истории проверок"""

    def test_record(self):
        """Тест сохранения запуска"""
        result = CheckService.run('associativity', Shape(4, 2), -1)
        run = CheckRunService.record(result, Shape(4, 2), -1, BasisFilter.STANDARD_ONLY, 0.5)
        run.refresh_from_db()
        self.assertFalse(run.passed)
        self.assertEqual(run.witness['triple'], result.witness['triple'])
        self.assertEqual(str(run), 'associativity (4,2) α=-1: FAIL')


class ArcAlgebraAPITestCase(APITestCase):
    """Тесты API алгебры дуг"""

    def test_multiply_endpoint(self):
        """Тест умножения через API"""
        payload = {
            'left': {'src': 'vv^^', 'tgt': 'v^v^'},
            'right': {'src': 'v^v^', 'tgt': 'vv^^'},
            'alpha': -1,
        }
        response = self.client.post(reverse('arc-algebra-multiply'), payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['text'], 'x1 - x2')
        self.assertEqual([t['coefficient'] for t in response.data['terms']], [1, -1])

    def test_multiply_rejects_mismatch(self):
        """Тест ошибки композиции через API"""
        payload = {
            'left': {'src': 'vv^^', 'tgt': 'v^v^'},
            'right': {'src': 'vv^^', 'tgt': 'v^v^'},
        }
        response = self.client.post(reverse('arc-algebra-multiply'), payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('right', response.data['detail'])

    def test_explicit_terms(self):
        """Тест явных слагаемых и вложенной ТКТП"""
        payload = {
            'left': {'src': 'v^', 'tgt': 'v^', 'terms': [{'orientation': '^v', 'coefficient': 2}]},
            'right': {'src': 'v^', 'tgt': 'v^'},
            'nested': True,
        }
        response = self.client.post(reverse('arc-algebra-multiply'), payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['text'], '2*x1')
        payload['left']['terms'] = [{'orientation': '^^'}]
        response = self.client.post(reverse('arc-algebra-multiply'), payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_cartan_endpoint(self):
        """Тест матрицы Картана"""
        response = self.client.get(reverse('arc-algebra-cartan'), {'n': 4, 'k': 2, 'basis_filter': 'standard_only'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['weights'], ['v^v^', 'vv^^'])
        self.assertEqual(response.data['entries'][1][1]['coefficients'], [1, 0, 2, 0, 1])

    def test_check_runs_filter(self):
        """Тест фильтрации истории проверок"""
        CheckRunFactory()
        CheckRunFactory(kind='order', passed=False, alpha=-1, witness={'pair': ['a', 'b']})
        response = self.client.get(reverse('arc-algebra-check-runs'), {'passed': 'false'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 1)
        self.assertEqual(response.data['results'][0]['kind'], 'order')
        self.assertEqual(CheckRun.objects.count(), 2)
