import logging
import time

from django.conf import settings

from cohomology.types import GradedDim
from diagrams.exceptions import CompositionError, DiagramValidationError
from diagrams.services import GluingService, WeightService
from diagrams.types import Mark, Shape, WeightSequence

from .models import CheckRun
from .oracle import khovanov_product
from .parallel import fan_out
from .surgery import Movie, compatible_orders, default_order, rules_for, validate_order
from .types import (
    AlgebraElement,
    BasisElement,
    BasisFilter,
    CartanMatrix,
    CheckResult,
    Label,
    StructureTable,
)

logger = logging.getLogger(__name__)


def _resolve_alpha(alpha):
    return settings.ARC_ALGEBRA_DEFAULT_ALPHA if alpha is None else alpha


def _resolve_order(y: WeightSequence, order):
    m_y = WeightService.weight_to_m(y)
    if order is None:
        return default_order(m_y, settings.ARC_ALGEBRA_CUP_ORDER)
    if isinstance(order, str):
        return default_order(m_y, order)
    return validate_order(m_y, order)


def _table_row(task):
    basis, i, alpha, nested, strategy = task
    index = {b: position for position, b in enumerate(basis)}
    left = AlgebraElement.from_basis(basis[i])
    row = []
    for j, right in enumerate(basis):
        if right.src != basis[i].tgt:
            continue
        product = AlgebraService.product(left, AlgebraElement.from_basis(right), alpha, strategy, nested)
        terms = tuple(sorted(
            (index[element], coefficient) for element, coefficient in product.basis_terms
        ))
        if terms:
            row.append(((i, j), terms))
    return row


class AlgebraService:
    """Базис, умножение и таблицы структурных констант"""

    @staticmethod
    def weights_for(shape: Shape, basis_filter=BasisFilter.ALL):
        weights = WeightService.enumerate_weights(shape)
        if BasisFilter(basis_filter) is BasisFilter.STANDARD_ONLY:
            return [w for w in weights if w.is_standard]
        return weights

    @staticmethod
    def hom_basis(x: WeightSequence, y: WeightSequence):
        """Базис Hom(x, y) в порядке ориентаций"""
        if x.shape != y.shape:
            raise DiagramValidationError(f'веса {x} и {y} имеют разные формы', argument='tgt')
        glued = GluingService.glue_weights(x, y)
        return [BasisElement(x, y, o.weights) for o in GluingService.orientations(glued, x, y)]

    @staticmethod
    def basis(shape: Shape, basis_filter=BasisFilter.ALL):
        weights = AlgebraService.weights_for(shape, basis_filter)
        return [b for x in weights for y in weights for b in AlgebraService.hom_basis(x, y)]

    @staticmethod
    def degree(b: BasisElement) -> int:
        return b.degree

    @staticmethod
    def idempotent(x: WeightSequence) -> AlgebraElement:
        """Элемент степени 0 в Hom(x, x): все чашки ∨∧"""
        return AlgebraElement(x, x, ((x, 1),))

    @staticmethod
    def multiply(a: AlgebraElement, b: AlgebraElement, alpha=None, order=None) -> AlgebraElement:
        return AlgebraService._movie_product(a, b, rules_for(_resolve_alpha(alpha)), order)

    @staticmethod
    def multiply_nested(a: AlgebraElement, b: AlgebraElement, order=None) -> AlgebraElement:
        """Произведение по правилам m, Δ, m′, Δ′"""
        return AlgebraService._movie_product(a, b, rules_for(nested=True), order)

    @staticmethod
    def product(a: AlgebraElement, b: AlgebraElement, alpha=None, order=None, nested=False) -> AlgebraElement:
        """Как multiply, но ноль для несоставимых элементов"""
        if a.tgt != b.src:
            return AlgebraElement.zero(a.src, b.tgt)
        if nested:
            return AlgebraService.multiply_nested(a, b, order)
        return AlgebraService.multiply(a, b, alpha, order)

    @staticmethod
    def oracle_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        AlgebraService._require_composable(a, b)
        result = khovanov_product(a.src, a.tgt, b.tgt, a.terms, b.terms)
        return AlgebraElement.from_dict(a.src, b.tgt, result)

    @staticmethod
    def _movie_product(a, b, rules, order):
        AlgebraService._require_composable(a, b)
        if a.is_zero or b.is_zero:
            return AlgebraElement.zero(a.src, b.tgt)
        movie = Movie(a.src, a.tgt, b.tgt, rules, _resolve_order(a.tgt, order))
        return AlgebraElement.from_dict(a.src, b.tgt, movie.run(a.terms, b.terms))

    @staticmethod
    def _require_composable(a, b):
        if a.tgt != b.src:
            raise CompositionError(
                f'цель левого множителя {a.tgt} не совпадает с источником правого {b.src}', argument='right'
            )

    @staticmethod
    def act(element: AlgebraElement, i: int) -> AlgebraElement:
        """x_i · b: X на окружности через i со знаком (-1)^(i+1)"""
        if not 1 <= i <= element.src.n:
            raise DiagramValidationError(f'точка {i} вне диапазона 1..{element.src.n}', argument='point')
        sign = 1 if i % 2 == 1 else -1
        terms = []
        for basis, coefficient in element.basis_terms:
            glued = basis.diagram
            circle = glued.components[glued.component_of[i]]
            if not circle.is_circle or basis.orientation[circle.leftmost] is Mark.UP:
                continue
            flipped = basis.orientation.with_marks({p: basis.orientation[p].flipped for p in circle.vertices})
            terms.append((flipped, sign * coefficient))
        return AlgebraElement(element.src, element.tgt, tuple(terms))

    @staticmethod
    def cartan_matrix(shape: Shape, basis_filter=BasisFilter.ALL) -> CartanMatrix:
        weights = tuple(AlgebraService.weights_for(shape, basis_filter))
        entries = tuple(
            tuple(GradedDim.from_degrees(b.degree for b in AlgebraService.hom_basis(x, y)) for y in weights)
            for x in weights
        )
        return CartanMatrix(weights, entries)

    @staticmethod
    def structure_table(shape: Shape, alpha=None, basis_filter=BasisFilter.ALL, nested=False,
                        order=None, workers=None) -> StructureTable:
        """Все попарные произведения базисных элементов"""
        alpha = -1 if nested else _resolve_alpha(alpha)
        strategy = order or settings.ARC_ALGEBRA_CUP_ORDER
        basis = tuple(AlgebraService.basis(shape, basis_filter))
        logger.info('Построение таблицы %s, α=%s, %s: %s элементов', shape, alpha, basis_filter, len(basis))
        started = time.monotonic()
        rows = fan_out(_table_row, [(basis, i, alpha, nested, strategy) for i in range(len(basis))], workers)
        products = tuple(entry for row in rows for entry in row)
        logger.info('Таблица %s построена за %.2f с', shape, time.monotonic() - started)
        return StructureTable(shape, alpha, BasisFilter(basis_filter), basis, products)


class FormatService:
    """Текстовая запись элементов алгебры"""

    @staticmethod
    def monomial(b: BasisElement) -> str:
        factors = [f'x{point}' for point, label in b.labels if label is Label.X]
        return '*'.join(factors) or '1'

    @staticmethod
    def element(element: AlgebraElement) -> str:
        if element.is_zero:
            return '0'
        parts = []
        for basis, coefficient in element.basis_terms:
            monomial = FormatService.monomial(basis)
            magnitude = abs(coefficient)
            if magnitude == 1:
                text = monomial
            elif monomial == '1':
                text = str(magnitude)
            else:
                text = f'{magnitude}*{monomial}'
            if not parts:
                parts.append(f'-{text}' if coefficient < 0 else text)
            else:
                parts.append(f'- {text}' if coefficient < 0 else f'+ {text}')
        return ' '.join(parts)

    @staticmethod
    def parse_element(text: str, argument: str = 'element') -> AlgebraElement:
        """SRC,TGT[,ORIENTATION]; без ориентации берется элемент наименьшей степени"""
        parts = [part.strip() for part in text.split(',')]
        if len(parts) not in (2, 3):
            raise DiagramValidationError(
                f'ожидается SRC,TGT[,ORIENTATION], получено {text!r}', argument=argument
            )
        src = WeightSequence.parse(parts[0], argument=argument)
        tgt = WeightSequence.parse(parts[1], argument=argument)
        basis = AlgebraService.hom_basis(src, tgt)
        if not basis:
            raise DiagramValidationError(f'пространство Hom({src},{tgt}) нулевое', argument=argument)
        if len(parts) == 2:
            return AlgebraElement.from_basis(min(basis, key=lambda b: (b.degree, b.orientation.sort_key)))
        orientation = WeightSequence.parse(parts[2], argument=argument)
        if orientation not in {b.orientation for b in basis}:
            raise DiagramValidationError(
                f'{orientation} не ориентирует склейку пары ({src},{tgt})', argument=argument
            )
        return AlgebraElement(src, tgt, ((orientation, 1),))


def _order_row(task):
    basis, i, alpha, nested = task
    left = AlgebraElement.from_basis(basis[i])
    m_y = WeightService.weight_to_m(basis[i].tgt)
    orders = compatible_orders(m_y)
    for right in basis:
        if right.src != basis[i].tgt:
            continue
        right_element = AlgebraElement.from_basis(right)
        reference = AlgebraService.product(left, right_element, alpha, orders[0], nested)
        for order in orders[1:]:
            other = AlgebraService.product(left, right_element, alpha, order, nested)
            if other != reference:
                return {
                    'pair': [str(basis[i]), str(right)],
                    'orders': [_order_text(orders[0]), _order_text(order)],
                    'left': FormatService.element(reference),
                    'right': FormatService.element(other),
                }
    return None


def _order_text(order):
    return ' '.join(f'({item[0]},{item[1]})' if isinstance(item, tuple) else f'|{item}' for item in order)


class CheckService:
    """Исчерпывающие проверки свойств алгебры"""

    KINDS = ('associativity', 'order', 'nested', 'degree', 'unit', 'oracle', 'grading')

    @staticmethod
    def run(kind: str, shape: Shape, alpha=None, basis_filter=BasisFilter.STANDARD_ONLY, workers=None) -> CheckResult:
        checks = {
            'associativity': lambda: CheckService.check_associativity(shape, alpha, basis_filter, workers),
            'order': lambda: CheckService.check_order_independence(shape, alpha, basis_filter, workers),
            'nested': lambda: CheckService.check_nested_agreement(shape, basis_filter, workers),
            'degree': lambda: CheckService.check_degree_additivity(shape, alpha, basis_filter, workers),
            'unit': lambda: CheckService.check_unit(shape, basis_filter),
            'oracle': lambda: CheckService.check_oracle(shape, basis_filter),
            'grading': lambda: CheckService.check_grading(shape),
        }
        if kind not in checks:
            raise DiagramValidationError(
                f'неизвестная проверка {kind}, допустимы: {", ".join(CheckService.KINDS)}', argument='kind'
            )
        logger.info('Проверка %s для %s, α=%s, %s', kind, shape, alpha, basis_filter)
        result = checks[kind]()
        logger.info('Проверка %s: %s', kind, 'PASS' if result.passed else 'FAIL')
        return result

    @staticmethod
    def _describe(table: StructureTable, terms: dict) -> dict:
        return {str(table.basis[k]): c for k, c in sorted(terms.items())}

    @staticmethod
    def _accumulate(target: dict, terms, factor: int):
        for k, c in terms:
            target[k] = target.get(k, 0) + factor * c

    @staticmethod
    def check_associativity(shape: Shape, alpha=None, basis_filter=BasisFilter.STANDARD_ONLY, workers=None):
        """(a·b)·c = a·(b·c) на всех составимых тройках базиса"""
        table = AlgebraService.structure_table(shape, alpha, basis_filter, workers=workers)
        by_src = {}
        for index, b in enumerate(table.basis):
            by_src.setdefault(b.src, []).append(index)

        for i, left in enumerate(table.basis):
            for j in by_src.get(left.tgt, ()):
                first = table.product_map.get((i, j), ())
                for l in by_src.get(table.basis[j].tgt, ()):
                    lhs = {}
                    for k, c in first:
                        CheckService._accumulate(lhs, table.product_map.get((k, l), ()), c)
                    rhs = {}
                    for m, c in table.product_map.get((j, l), ()):
                        CheckService._accumulate(rhs, table.product_map.get((i, m), ()), c)
                    lhs = {k: c for k, c in lhs.items() if c}
                    rhs = {k: c for k, c in rhs.items() if c}
                    if lhs != rhs:
                        return CheckResult('associativity', False, {
                            'triple': [str(table.basis[p]) for p in (i, j, l)],
                            'left': CheckService._describe(table, lhs),
                            'right': CheckService._describe(table, rhs),
                        })
        return CheckResult('associativity', True)

    @staticmethod
    def check_order_independence(shape: Shape, alpha=None, basis_filter=BasisFilter.STANDARD_ONLY,
                                 workers=None, nested=False):
        """Произведения не зависят от допустимого порядка чашек"""
        alpha = _resolve_alpha(alpha)
        basis = tuple(AlgebraService.basis(shape, basis_filter))
        rows = fan_out(_order_row, [(basis, i, alpha, nested) for i in range(len(basis))], workers)
        for witness in rows:
            if witness is not None:
                return CheckResult('order', False, witness)
        return CheckResult('order', True)

    @staticmethod
    def check_nested_agreement(shape: Shape, basis_filter=BasisFilter.STANDARD_ONLY, workers=None):
        """Вложенная ТКТП совпадает с умножением при α = -1"""
        nested = AlgebraService.structure_table(shape, -1, basis_filter, nested=True, workers=workers)
        twisted = AlgebraService.structure_table(shape, -1, basis_filter, workers=workers)
        pairs = sorted(set(nested.product_map) | set(twisted.product_map))
        for pair in pairs:
            a, b = dict(nested.product_map.get(pair, ())), dict(twisted.product_map.get(pair, ()))
            if a != b:
                return CheckResult('nested', False, {
                    'pair': [str(nested.basis[p]) for p in pair],
                    'nested': CheckService._describe(nested, a),
                    'alpha': CheckService._describe(twisted, b),
                })
        return CheckResult('nested', True)

    @staticmethod
    def check_degree_additivity(shape: Shape, alpha=None, basis_filter=BasisFilter.STANDARD_ONLY, workers=None):
        table = AlgebraService.structure_table(shape, alpha, basis_filter, workers=workers)
        for (i, j), terms in table.products:
            expected = table.basis[i].degree + table.basis[j].degree
            for k, _ in terms:
                if table.basis[k].degree != expected:
                    return CheckResult('degree', False, {
                        'pair': [str(table.basis[i]), str(table.basis[j])],
                        'term': str(table.basis[k]),
                        'expected': expected,
                        'actual': table.basis[k].degree,
                    })
        return CheckResult('degree', True)

    @staticmethod
    def check_unit(shape: Shape, basis_filter=BasisFilter.STANDARD_ONLY):
        """Σ e_x - двусторонняя единица, идемпотенты ортогональны (α = 1)"""
        weights = AlgebraService.weights_for(shape, basis_filter)
        units = {x: AlgebraService.idempotent(x) for x in weights}
        for x in weights:
            for y in weights:
                square = AlgebraService.product(units[x], units[y], 1)
                expected = units[x] if x == y else AlgebraElement.zero(x, y)
                if square != expected:
                    return CheckResult('unit', False, {'pair': [str(x), str(y)], 'product': FormatService.element(square)})
        for b in AlgebraService.basis(shape, basis_filter):
            element = AlgebraElement.from_basis(b)
            for side, result in (
                ('left', AlgebraService.multiply(units[b.src], element, 1)),
                ('right', AlgebraService.multiply(element, units[b.tgt], 1)),
            ):
                if result != element:
                    return CheckResult('unit', False, {
                        'element': str(b), 'side': side, 'product': FormatService.element(result),
                    })
        return CheckResult('unit', True)

    @staticmethod
    def check_oracle(shape: Shape, basis_filter=BasisFilter.STANDARD_ONLY):
        """Кино при α = 1 совпадает с прямым вычислением по правилам Хованова"""
        basis = AlgebraService.basis(shape, basis_filter)
        for left in basis:
            for right in basis:
                if left.tgt != right.src:
                    continue
                a, b = AlgebraElement.from_basis(left), AlgebraElement.from_basis(right)
                movie = AlgebraService.multiply(a, b, 1)
                direct = AlgebraService.oracle_product(a, b)
                if movie != direct:
                    return CheckResult('oracle', False, {
                        'pair': [str(left), str(right)],
                        'movie': FormatService.element(movie),
                        'oracle': FormatService.element(direct),
                    })
        return CheckResult('oracle', True)

    @staticmethod
    def check_grading(shape: Shape):
        """
        Степени базиса Hom(x, y) для стандартных x, y.

        Линия с концами на одной стороне не ориентируется, и Hom(x, y) = 0.
        Иначе все линии сквозные, вносят половину своих дуг в степень, и
        получается q^(k-c)(1+q^2)^c.
        """
        for x in AlgebraService.weights_for(shape, BasisFilter.STANDARD_ONLY):
            for y in AlgebraService.weights_for(shape, BasisFilter.STANDARD_ONLY):
                glued = GluingService.glue_weights(x, y)
                circles = glued.circle_count
                if all(line.is_propagating for line in glued.lines):
                    expected = GradedDim((1,)).shift(shape.k - circles)
                    for _ in range(circles):
                        expected = expected * GradedDim((1, 0, 1))
                else:
                    expected = GradedDim()
                actual = GradedDim.from_degrees(b.degree for b in AlgebraService.hom_basis(x, y))
                if actual != expected:
                    return CheckResult('grading', False, {
                        'pair': [str(x), str(y)], 'expected': str(expected), 'actual': str(actual),
                    })
        return CheckResult('grading', True)


class CheckRunService:
    """История запусков проверок"""

    @staticmethod
    def record(result: CheckResult, shape: Shape, alpha, basis_filter, elapsed: float):
        run = CheckRun.objects.create(
            kind=result.kind,
            n=shape.n,
            k=shape.k,
            alpha=alpha,
            basis_filter=BasisFilter(basis_filter).value,
            passed=result.passed,
            witness=result.witness,
            elapsed_seconds=elapsed,
        )
        logger.info('Сохранен запуск проверки %s (id=%s)', run.kind, run.pk)
        return run
