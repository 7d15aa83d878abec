import itertools
import logging

import sympy

from diagrams.exceptions import DiagramValidationError
from diagrams.services import WeightService
from diagrams.types import Mark, Shape, WeightSequence

from .types import K0Matrix, OrderDirection

logger = logging.getLogger(__name__)


class WeightOrderService:
    """Частичный порядок на весах"""

    @staticmethod
    def suffix_downs(w: WeightSequence) -> tuple:
        """Число ∨ среди последних i меток, i = 1..n"""
        counts = []
        downs = 0
        for mark in reversed(w.marks):
            downs += mark is Mark.DOWN
            counts.append(downs)
        return tuple(counts)

    @staticmethod
    def weight_leq(w: WeightSequence, v: WeightSequence) -> bool:
        """w <= v: у v не меньше ∨ в каждом суффиксе"""
        if w.shape != v.shape:
            raise DiagramValidationError(f'веса {w} и {v} имеют разные формы', argument='v')
        return all(a <= b for a, b in zip(WeightOrderService.suffix_downs(w), WeightOrderService.suffix_downs(v)))

    @staticmethod
    def weight_leq_reversed(w: WeightSequence, v: WeightSequence) -> bool:
        return WeightOrderService.weight_leq(v, w)

    @staticmethod
    def potential(w: WeightSequence) -> int:
        """Строго растет вдоль порядка"""
        return sum(WeightOrderService.suffix_downs(w))

    @staticmethod
    def length(w: WeightSequence) -> int:
        """Число инверсий: пары i < j с ∨ в i и ∧ в j"""
        downs = 0
        inversions = 0
        for mark in w.marks:
            if mark is Mark.DOWN:
                downs += 1
            else:
                inversions += downs
        return inversions


class GrothendieckService:
    """Множества Θ_w и матрица перехода в K_0"""

    @staticmethod
    def theta_signs(w: WeightSequence):
        """Пары (w', число переключенных чашек m(w))"""
        cups = WeightService.weight_to_m(w).cups
        result = []
        for size in range(len(cups) + 1):
            for chosen in itertools.combinations(cups, size):
                changes = {}
                for i, j in chosen:
                    changes[i], changes[j] = w[i].flipped, w[j].flipped
                result.append((w.with_marks(changes), size))
        result.sort(key=lambda item: item[0].sort_key)
        return result

    @staticmethod
    def theta_set(w: WeightSequence):
        return [v for v, _ in GrothendieckService.theta_signs(w)]

    @staticmethod
    def order_direction(shape: Shape) -> OrderDirection:
        stated = reversed_ = True
        for w in WeightService.enumerate_weights(shape):
            for v in GrothendieckService.theta_set(w):
                if v == w:
                    continue
                stated = stated and WeightOrderService.weight_leq(v, w)
                reversed_ = reversed_ and WeightOrderService.weight_leq(w, v)
        if stated:
            return OrderDirection.STATED
        if reversed_:
            return OrderDirection.REVERSED
        return OrderDirection.NONE

    @staticmethod
    def k0_matrix(shape: Shape) -> K0Matrix:
        """[M_w] = Σ_{w' ∈ Θ_w} (-1)^(ℓ(w) - ℓ(w')) [L_w']"""
        weights = tuple(WeightService.enumerate_weights(shape))
        position = {w: index for index, w in enumerate(weights)}
        entries = [[0] * len(weights) for _ in weights]
        for w in weights:
            for v in GrothendieckService.theta_set(w):
                exponent = WeightOrderService.length(w) - WeightOrderService.length(v)
                entries[position[w]][position[v]] = -1 if exponent % 2 else 1
        determinant = int(sympy.Matrix(entries).det())
        direction = GrothendieckService.order_direction(shape)
        logger.info('Матрица K0 %s: определитель %s, направление %s', shape, determinant, direction.value)
        return K0Matrix(weights, tuple(tuple(row) for row in entries), determinant, direction)

    @staticmethod
    def signs_match_flips(shape: Shape) -> bool:
        """(-1)^(ℓ(w) - ℓ(w')) = (-1)^(число переключенных чашек)"""
        for w in WeightService.enumerate_weights(shape):
            for v, flips in GrothendieckService.theta_signs(w):
                if (WeightOrderService.length(w) - WeightOrderService.length(v) - flips) % 2:
                    return False
        return True

    @staticmethod
    def is_unitriangular(matrix: K0Matrix) -> bool:
        """Треугольность относительно линейного продолжения порядка в направлении matrix.direction"""
        if matrix.direction is OrderDirection.NONE:
            return False
        sign = 1 if matrix.direction is OrderDirection.REVERSED else -1
        for w in matrix.weights:
            if matrix.entry(w, w) != 1:
                return False
            for v, c in matrix.row(w).items():
                if v == w:
                    continue
                if sign * (WeightOrderService.potential(v) - WeightOrderService.potential(w)) <= 0:
                    return False
        return True
