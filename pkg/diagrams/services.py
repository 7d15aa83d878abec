import itertools
import logging
from collections import deque
from math import comb

from .exceptions import DiagramInternalError, DiagramValidationError
from .types import (
    CircleDiagram,
    Component,
    ComponentKind,
    CupDiagram,
    EquivalenceData,
    Mark,
    Orientation,
    Shape,
    StandardTableau,
    WeightSequence,
)
from .union_find import UnionFind

logger = logging.getLogger(__name__)


class WeightService:
    """Сервис для работы с последовательностями весов"""

    @staticmethod
    def enumerate_weights(shape: Shape):
        """Все веса формы (n-k, k) в каноническом порядке"""
        weights = []
        for downs in itertools.combinations(range(1, shape.n + 1), shape.k):
            marks = tuple(Mark.DOWN if i in downs else Mark.UP for i in range(1, shape.n + 1))
            weights.append(WeightSequence(marks))
        weights.sort(key=lambda w: w.sort_key)
        return weights

    @staticmethod
    def weight_to_m(w: WeightSequence) -> CupDiagram:
        """Диаграмма m(w): максимальное число чашек ∨∧"""
        open_downs = []
        cups = []
        rays = []
        for point, mark in enumerate(w.marks, 1):
            if mark is Mark.DOWN:
                open_downs.append(point)
            elif open_downs:
                cups.append((open_downs.pop(), point))
            else:
                rays.append(point)
        rays.extend(open_downs)
        return CupDiagram(w.n, tuple(cups), tuple(rays))

    @staticmethod
    def weight_to_C(w: WeightSequence) -> CupDiagram:
        """Диаграмма C(w): m(w), дополненная до k чашек"""
        if 2 * w.k > w.n:
            raise DiagramValidationError(f'в весе {w} больше ∨, чем ∧: C(w) не определена', argument='weight')
        m = WeightService.weight_to_m(w)
        free_ups = [p for p in m.rays if w[p] is Mark.UP]
        free_downs = [p for p in m.rays if w[p] is Mark.DOWN]
        if free_ups and free_downs and max(free_ups) > min(free_downs):
            raise DiagramInternalError(f'после m({w}) лучи не имеют вид ∧…∧∨…∨')
        cups = list(m.cups)
        for down in free_downs:
            if not free_ups:
                raise DiagramInternalError(f'в C({w}) осталась несопоставленная ∨ в точке {down}')
            cups.append((free_ups.pop(), down))
        return CupDiagram(w.n, tuple(cups), tuple(free_ups))

    @staticmethod
    def is_oriented(w: WeightSequence, diagram: CupDiagram) -> bool:
        """Ориентирует ли w стандартную диаграмму (лучи читают ∧)"""
        WeightService._require_length(w, diagram)
        if any(w[a] is w[b] for a, b in diagram.cups):
            return False
        return all(w[p] is Mark.UP for p in diagram.rays)

    @staticmethod
    def oriented_against(v: WeightSequence, diagram: CupDiagram, reference: WeightSequence) -> bool:
        """Ориентация с лучами, предписанными весом reference"""
        WeightService._require_length(v, diagram)
        WeightService._require_length(reference, diagram, argument='reference')
        if any(v[a] is v[b] for a, b in diagram.cups):
            return False
        return all(v[p] is reference[p] for p in diagram.rays)

    @staticmethod
    def nesting_size(diagram: CupDiagram, i: int) -> int:
        """δ(i) = (σ(i) - i + 1) / 2 для левого конца чашки"""
        if i not in diagram.left_ends:
            raise DiagramValidationError(f'точка {i} не является левым концом чашки', argument='point')
        return (diagram.partner[i] - i + 1) // 2

    @staticmethod
    def _require_length(w: WeightSequence, diagram: CupDiagram, argument='weight'):
        if w.n != diagram.n:
            raise DiagramValidationError(
                f'длина веса {w.n} не совпадает с числом точек {diagram.n}', argument=argument
            )


class TableauService:
    """Сервис для стандартных таблиц"""

    @staticmethod
    def weight_of(tableau: StandardTableau) -> WeightSequence:
        bottom = set(tableau.bottom_row)
        return WeightSequence(tuple(
            Mark.DOWN if i in bottom else Mark.UP for i in range(1, tableau.n + 1)
        ))

    @staticmethod
    def from_weight(w: WeightSequence) -> StandardTableau:
        if not w.is_standard:
            raise DiagramValidationError(f'вес {w} не является стандартным', argument='weight')
        return StandardTableau(
            tuple(sorted(w.up_positions, reverse=True)),
            tuple(sorted(w.down_positions, reverse=True)),
        )

    @staticmethod
    def tableau_to_cup(tableau: StandardTableau) -> CupDiagram:
        """Нижняя строка дает левые концы чашек"""
        diagram = WeightService.weight_to_m(TableauService.weight_of(tableau))
        if diagram.cup_count != tableau.k:
            raise DiagramInternalError(f'таблица {tableau} дала {diagram.cup_count} чашек вместо {tableau.k}')
        return diagram

    @staticmethod
    def cup_to_tableau(diagram: CupDiagram) -> StandardTableau:
        left = set(diagram.left_ends)
        return StandardTableau(
            tuple(p for p in range(diagram.n, 0, -1) if p not in left),
            tuple(sorted(left, reverse=True)),
        )

    @staticmethod
    def enumerate_standard(shape: Shape):
        tableaux = [
            TableauService.from_weight(w)
            for w in WeightService.enumerate_weights(shape)
            if w.is_standard
        ]
        expected = comb(shape.n, shape.k) - (comb(shape.n, shape.k - 1) if shape.k else 0)
        if len(tableaux) != expected:
            raise DiagramInternalError(f'для {shape} найдено {len(tableaux)} таблиц, ожидалось {expected}')
        return tableaux

    @staticmethod
    def column_number(tableau: StandardTableau, i: int) -> int:
        for row in (tableau.top_row, tableau.bottom_row):
            if i in row:
                return row.index(i) + 1
        raise DiagramValidationError(f'точки {i} нет в таблице', argument='point')

    @staticmethod
    def component_fixed_points(tableau: StandardTableau):
        """Неподвижные точки компоненты: 2^k весов"""
        diagram = TableauService.tableau_to_cup(tableau)
        return [
            w for w in WeightService.enumerate_weights(tableau.shape)
            if WeightService.is_oriented(w, diagram)
        ]


class GluingService:
    """Склейка диаграмм и их ориентации"""

    @staticmethod
    def glue(top: CupDiagram, bottom: CupDiagram) -> CircleDiagram:
        """Склейка: bottom снизу, отраженная top сверху"""
        if top.n != bottom.n:
            raise DiagramValidationError(
                f'диаграммы имеют разное число точек: {top.n} и {bottom.n}', argument='top'
            )
        sets = UnionFind(range(1, bottom.n + 1))
        for a, b in bottom.cups + top.cups:
            sets.union(a, b)

        components = []
        for group in sets.groups():
            members = set(group)
            arcs = tuple(
                [('bottom', a, b) for a, b in bottom.cups if a in members]
                + [('top', a, b) for a, b in top.cups if a in members]
            )
            ray_ends = tuple(
                [('bottom', p) for p in bottom.rays if p in members]
                + [('top', p) for p in top.rays if p in members]
            )
            kind = ComponentKind.LINE if ray_ends else ComponentKind.CIRCLE
            components.append(Component(kind, group, arcs, ray_ends))

        return CircleDiagram(top, bottom, tuple(components), GluingService._nesting(components))

    @staticmethod
    def glue_weights(w: WeightSequence, w2: WeightSequence) -> CircleDiagram:
        """Диаграмма пары: m(w) снизу, m(w') сверху"""
        if w.n != w2.n:
            raise DiagramValidationError(f'веса {w} и {w2} разной длины', argument='w2')
        return GluingService.glue(WeightService.weight_to_m(w2), WeightService.weight_to_m(w))

    @staticmethod
    def _nesting(components):
        circles = [index for index, comp in enumerate(components) if comp.is_circle]
        enclosing = {}
        for index in circles:
            q = components[index].leftmost
            enclosing[index] = [
                other for other in circles
                if other != index
                and sum(1 for p in components[other].vertices if p < q) % 2 == 1
            ]
        parents = []
        for index in circles:
            outer = enclosing[index]
            parent = max(outer, key=lambda o: len(enclosing[o])) if outer else None
            parents.append((index, parent))
        return tuple(parents)

    @staticmethod
    def nesting_depth(diagram: CircleDiagram, index: int) -> int:
        """1 для внешних окружностей, 0 для линий"""
        if not diagram.components[index].is_circle:
            return 0
        depth = 1
        parent = diagram.parent_of(index)
        while parent is not None:
            depth += 1
            parent = diagram.parent_of(parent)
        return depth

    @staticmethod
    def neighbours(diagram: CircleDiagram, p: int):
        result = []
        if p in diagram.bottom.partner:
            result.append(diagram.bottom.partner[p])
        if p in diagram.top.partner:
            result.append(diagram.top.partner[p])
        return result

    @staticmethod
    def circle_cycle(diagram: CircleDiagram, index: int):
        """Вершины окружности в порядке обхода от самой левой"""
        component = diagram.components[index]
        if not component.is_circle:
            raise DiagramValidationError(f'компонента {index} не является окружностью', argument='component')
        start = component.leftmost
        cycle = [start]
        current = diagram.bottom.partner[start]
        use_top = True
        while current != start:
            cycle.append(current)
            current = (diagram.top if use_top else diagram.bottom).partner[current]
            use_top = not use_top
        return cycle

    @staticmethod
    def epsilon(diagram: CircleDiagram, i: int, j: int) -> int:
        """ε(i, j): (-1)^a для точек одной окружности, иначе 0"""
        for p in (i, j):
            if not 1 <= p <= diagram.n:
                raise DiagramValidationError(f'точка {p} вне диапазона 1..{diagram.n}', argument='point')
        index = diagram.component_of[i]
        if diagram.component_of[j] != index or not diagram.components[index].is_circle:
            return 0
        cycle = GluingService.circle_cycle(diagram, index)
        forward = abs(cycle.index(i) - cycle.index(j))
        backward = len(cycle) - forward
        if forward % 2 != backward % 2:
            raise DiagramInternalError(f'нечетная окружность через точки {i} и {j}')
        return -1 if forward % 2 else 1

    @staticmethod
    def orientations(diagram: CircleDiagram, w: WeightSequence, w2: WeightSequence):
        """Все ориентации склейки с лучами по w (снизу) и w' (сверху)"""
        for weight, name in ((w, 'w'), (w2, 'w2')):
            if weight.n != diagram.n:
                raise DiagramValidationError(f'длина веса {weight} не равна {diagram.n}', argument=name)

        fixed = {}
        circle_choices = []
        for component in diagram.components:
            if component.is_circle:
                circle_choices.append(component)
                continue
            marks = GluingService._propagate(diagram, component, GluingService._ray_mark(component, w, w2))
            if marks is None or not GluingService._rays_match(component, marks, w, w2):
                return []
            fixed.update(marks)

        results = []
        for choice in itertools.product((Mark.DOWN, Mark.UP), repeat=len(circle_choices)):
            marks = dict(fixed)
            for component, start in zip(circle_choices, choice):
                marks.update(GluingService._propagate(diagram, component, (component.leftmost, start)))
            results.append(WeightSequence(tuple(marks[p] for p in range(1, diagram.n + 1))))
        results.sort(key=lambda v: v.sort_key)
        return [Orientation(v, diagram) for v in results]

    @staticmethod
    def degree_of(diagram: CircleDiagram, v: WeightSequence) -> int:
        """Число чашек и крышек с ∧ на левом конце"""
        return sum(1 for a, _ in diagram.bottom.cups + diagram.top.cups if v[a] is Mark.UP)

    @staticmethod
    def orientations_exhaustive(diagram: CircleDiagram, w: WeightSequence, w2: WeightSequence):
        """Перебор всех 2^n последовательностей знаков"""
        results = []
        for marks in itertools.product((Mark.DOWN, Mark.UP), repeat=diagram.n):
            v = WeightSequence(marks)
            if any(v[a] is v[b] for a, b in diagram.bottom.cups + diagram.top.cups):
                continue
            if any(v[p] is not w[p] for p in diagram.bottom.rays):
                continue
            if any(v[p] is not w2[p] for p in diagram.top.rays):
                continue
            results.append(v)
        results.sort(key=lambda v: v.sort_key)
        return [Orientation(v, diagram) for v in results]

    @staticmethod
    def _ray_mark(component, w, w2):
        side, p = component.ray_ends[0]
        return p, (w[p] if side == 'bottom' else w2[p])

    @staticmethod
    def _rays_match(component, marks, w, w2):
        for side, p in component.ray_ends:
            expected = w[p] if side == 'bottom' else w2[p]
            if marks[p] is not expected:
                return False
        return True

    @staticmethod
    def _propagate(diagram, component, seed):
        start, mark = seed
        marks = {start: mark}
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for q in GluingService.neighbours(diagram, p):
                if q not in marks:
                    marks[q] = marks[p].flipped
                    queue.append(q)
                elif marks[q] is marks[p]:
                    return None
        return marks


class EquivalenceService:
    """Отношения эквивалентности на {0, 1, ..., n} и функция ранга"""

    @staticmethod
    def _relate(sets, diagram: CupDiagram):
        for left in diagram.left_ends:
            sets.union(left - 1, diagram.partner[left])

    @staticmethod
    def single_equivalence(diagram: CupDiagram):
        sets = UnionFind(range(diagram.n + 1))
        EquivalenceService._relate(sets, diagram)
        return tuple(sets.groups())

    @staticmethod
    def equivalence(bottom: CupDiagram, top: CupDiagram) -> EquivalenceData:
        """Классы ≈ для пары диаграмм, минимальные представители и ранг"""
        if bottom.n != top.n:
            raise DiagramValidationError(
                f'диаграммы имеют разное число точек: {bottom.n} и {top.n}', argument='top'
            )
        sets = UnionFind(range(bottom.n + 1))
        EquivalenceService._relate(sets, bottom)
        EquivalenceService._relate(sets, top)
        classes = tuple(sets.groups())
        min_reps = tuple(members[0] for members in classes)

        glued = GluingService.glue(top, bottom)
        circle_reps = tuple(comp.leftmost for comp in glued.circles)
        line_reps = tuple(comp.leftmost for comp in glued.lines)

        lines = set(line_reps)
        circles = set(circle_reps)
        rep_of = {p: members[0] for members in classes for p in members}
        rank = {}
        for rep in min_reps:
            if rep == 0 or rep in lines:
                rank[rep] = 0
                continue
            j = rep_of[rep - 1]
            rank[rep] = rank[j] + (1 if (rep - 1 - j) % 2 == 0 else 0)
            if rep in circles and rank[rep] == 0:
                raise DiagramInternalError(f'окружность с представителем {rep} получила ранг 0')

        logger.debug(f'Классы эквивалентности для {bottom} / {top}: {classes}')
        return EquivalenceData(
            classes=classes,
            min_reps=min_reps,
            circle_reps=circle_reps,
            line_reps=line_reps,
            rank=tuple(sorted(rank.items())),
        )
