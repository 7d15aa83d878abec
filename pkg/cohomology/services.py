import logging

import sympy

from diagrams.exceptions import DiagramValidationError
from diagrams.services import EquivalenceService, GluingService, TableauService, WeightService
from diagrams.types import CupDiagram, StandardTableau, WeightSequence

from .types import GradedDim, Intersection, PullbackMap, RingElement, RingPresentation

logger = logging.getLogger(__name__)


class CohomologyService:
    """Сервис колец когомологий и отображений ограничения"""

    @staticmethod
    def cup_presentation(diagram: CupDiagram):
        """Генераторы - левые концы чашек, x_σ(i) переходит в -x_i"""
        generators = diagram.left_ends
        left = set(generators)
        images = []
        for i in range(1, diagram.n + 1):
            if i in left:
                images.append(((i, 1),))
            elif i in diagram.partner:
                images.append(((diagram.partner[i], -1),))
            else:
                images.append(())
        return RingPresentation(generators), PullbackMap(generators, tuple(images))

    @staticmethod
    def component_cohomology(tableau: StandardTableau):
        return CohomologyService.cup_presentation(TableauService.tableau_to_cup(tableau))

    @staticmethod
    def stable_cohomology(w: WeightSequence):
        return CohomologyService.cup_presentation(WeightService.weight_to_m(w))

    @staticmethod
    def intersection_cohomology(w: WeightSequence, w2: WeightSequence):
        """Кольцо пересечения или Intersection.EMPTY"""
        CohomologyService._require_same_shape(w, w2)
        glued = GluingService.glue_weights(w, w2)
        if not GluingService.orientations(glued, w, w2):
            return Intersection.EMPTY

        data = EquivalenceService.equivalence(glued.bottom, glued.top)
        generators = data.circle_reps
        images = []
        for i in range(1, glued.n + 1):
            component = glued.components[glued.component_of[i]]
            if component.is_circle:
                rep = component.leftmost
                images.append(((rep, GluingService.epsilon(glued, i, rep)),))
            else:
                images.append(())
        return RingPresentation(generators), PullbackMap(generators, tuple(images))

    @staticmethod
    def minimal_degree(w: WeightSequence, w2: WeightSequence):
        """Наименьшая степень ориентации склейки пары, None если их нет"""
        glued = GluingService.glue_weights(w, w2)
        degrees = [GluingService.degree_of(glued, o.weights) for o in GluingService.orientations(glued, w, w2)]
        return min(degrees) if degrees else None

    @staticmethod
    def poincare(w: WeightSequence, w2: WeightSequence, shifted: bool = False) -> GradedDim:
        result = CohomologyService.intersection_cohomology(w, w2)
        if result is Intersection.EMPTY:
            return GradedDim()
        presentation, _ = result
        series = presentation.hilbert_series
        if shifted:
            series = series.shift(CohomologyService.minimal_degree(w, w2))
        return series

    @staticmethod
    def is_surjective(pullback: PullbackMap) -> bool:
        return pullback.matrix().rank() == len(pullback.generators)

    @staticmethod
    def kernel_contains(big: PullbackMap, small_a: PullbackMap, small_b: PullbackMap) -> bool:
        """ker(big) содержит ker(small_a) + ker(small_b) на линейной части"""
        target = big.matrix()
        for small in (small_a, small_b):
            source = small.matrix()
            if source.col_join(target).rank() != source.rank():
                return False
        return True

    @staticmethod
    def normalize_odd(presentation: RingPresentation, pullback: PullbackMap, top: CupDiagram, bottom: CupDiagram):
        """
        Переход к нечетным вершинам окружностей.

        Каждый генератор x_j заменяется на a_j y_i, где i - наименьшая
        нечетная вершина окружности через j, a_j = 1 для нечетного j и
        -1 для четного. Возвращает новые генераторы, матрицу замены и
        новое отображение ограничения.
        """
        glued = GluingService.glue(top, bottom)
        odd_vertices = []
        signs = []
        for j in presentation.generators:
            component = glued.components[glued.component_of[j]]
            if not component.is_circle:
                raise DiagramValidationError(f'генератор {j} не лежит на окружности', argument='generator')
            odd = min(p for p in component.vertices if p % 2 == 1)
            odd_vertices.append(odd)
            signs.append(1 if j % 2 == 1 else -1)

        change = sympy.diag(*signs) if signs else sympy.zeros(0, 0)
        images = []
        for i in range(1, glued.n + 1):
            image = []
            for j, odd in zip(presentation.generators, odd_vertices):
                if glued.component_of[i] == glued.component_of[j]:
                    image.append((odd, GluingService.epsilon(glued, i, odd)))
            images.append(tuple(image))
        normalized = PullbackMap(tuple(odd_vertices), tuple(images))
        return RingPresentation(tuple(odd_vertices)), change, normalized

    @staticmethod
    def verify_normalization(pullback: PullbackMap, change, normalized: PullbackMap) -> bool:
        """
        Замена обратима над Z, сохраняет x^2 = 0 и согласована с ограничением.

        Независимо от ε: x_p - (-1)^(p-i) y_i лежит в ядре нового ограничения
        для каждой точки p окружности с нечетной вершиной i, точки линий
        переходят в 0, а старое ограничение переводит x_i в a_j x_j.
        """
        if change.shape[0] and abs(change.det()) != 1:
            return False
        for row, _ in enumerate(pullback.generators):
            image = RingElement(())
            for column, y in enumerate(normalized.generators):
                image = image + RingElement.generator(y, int(change[row, column]))
            if image.is_zero or not (image * image).is_zero:
                return False

        odd_vertices = set(normalized.generators)
        for p in range(1, pullback.n + 1):
            image = normalized.image(p)
            if not pullback.image(p):
                if image:
                    return False
                continue
            if len(image) != 1:
                return False
            (odd, sign), = image.items()
            if odd not in odd_vertices or sign != (-1) ** abs(p - odd):
                return False
        for row, (j, odd) in enumerate(zip(pullback.generators, normalized.generators)):
            if pullback.image(odd) != {j: int(change[row, row])}:
                return False
        return change.T * pullback.matrix() == normalized.matrix() if change.shape[0] else True

    @staticmethod
    def _require_same_shape(w, w2):
        if w.shape != w2.shape:
            raise DiagramValidationError(f'веса {w} и {w2} имеют разные формы', argument='w2')
