"""
Multiplication by a movie of saddles.

The left factor a in Hom(x, y) sits on level 0 and the right factor b in
Hom(y, z) on level 1. Vertices are pairs (level, point). A cup of m(y)
becomes a saddle that replaces the cap above level 0 and the cup below
level 1 by two vertical strands. A ray of m(y) becomes a strand joining
the two loose ray ends. After the last step the picture is isotopic to
glue(m(z), m(x)) and the marks on level 0 are the orientation of the
product.

Marks flip along arcs and stay equal along strands; a circle is labelled X
when it runs upwards through its leftmost vertex. The surgery itself only
tracks circle labels, the marks of the product come from orienting the
final picture.
"""
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from diagrams.exceptions import DiagramInternalError, DiagramValidationError
from diagrams.services import WeightService
from diagrams.types import CupDiagram, Mark, WeightSequence
from diagrams.union_find import UnionFind

from .types import Label

ARC = 'arc'
STRAND = 'strand'
BELOW = 'below'
ABOVE = 'above'

ORDER_STRATEGIES = ('outer_first', 'outer_first_right')


@dataclass(frozen=True)
class Edge:
    u: tuple
    v: tuple
    kind: str
    side: str = None  # BELOW or ABOVE the axis of its level, None for strands


@dataclass(frozen=True)
class RayEnd:
    vertex: tuple
    side: str
    mark: Mark


@dataclass(frozen=True)
class StackedComponent:
    vertices: frozenset
    ends: tuple

    @property
    def is_circle(self) -> bool:
        return not self.ends

    @cached_property
    def leftmost(self) -> tuple:
        return min(self.vertices, key=lambda vertex: (vertex[1], vertex[0]))


@dataclass(frozen=True)
class StackedDiagram:
    n: int
    edges: tuple
    ends: tuple

    @classmethod
    def stack(cls, x: WeightSequence, y: WeightSequence, z: WeightSequence) -> 'StackedDiagram':
        m_x, m_y, m_z = (WeightService.weight_to_m(w) for w in (x, y, z))
        edges = []
        for level, side, diagram in ((0, BELOW, m_x), (0, ABOVE, m_y), (1, BELOW, m_y), (1, ABOVE, m_z)):
            edges.extend(Edge((level, a), (level, b), ARC, side) for a, b in diagram.cups)
        ends = (
            [RayEnd((0, p), BELOW, x[p]) for p in m_x.rays]
            + [RayEnd((0, p), ABOVE, y[p]) for p in m_y.rays]
            + [RayEnd((1, p), BELOW, y[p]) for p in m_y.rays]
            + [RayEnd((1, p), ABOVE, z[p]) for p in m_z.rays]
        )
        return cls(x.n, tuple(edges), tuple(ends))

    @cached_property
    def vertices(self) -> tuple:
        return tuple((level, p) for level in (0, 1) for p in range(1, self.n + 1))

    @cached_property
    def adjacency(self) -> dict:
        adjacent = {vertex: [] for vertex in self.vertices}
        for edge in self.edges:
            adjacent[edge.u].append((edge.v, edge.kind))
            adjacent[edge.v].append((edge.u, edge.kind))
        return adjacent

    @cached_property
    def components(self) -> tuple:
        sets = UnionFind(self.vertices)
        for edge in self.edges:
            sets.union(edge.u, edge.v)
        result = []
        for group in sets.groups():
            members = frozenset(group)
            ends = tuple(end for end in self.ends if end.vertex in members)
            result.append(StackedComponent(members, ends))
        return tuple(result)

    @cached_property
    def component_of(self) -> dict:
        return {vertex: comp for comp in self.components for vertex in comp.vertices}

    def saddle(self, i: int, j: int) -> 'StackedDiagram':
        cap = Edge((0, i), (0, j), ARC, ABOVE)
        cup = Edge((1, i), (1, j), ARC, BELOW)
        if cap not in self.edges or cup not in self.edges:
            raise DiagramInternalError(f'чашка ({i},{j}) уже обработана')
        edges = [edge for edge in self.edges if edge not in (cap, cup)]
        edges += [Edge((0, i), (1, i), STRAND), Edge((0, j), (1, j), STRAND)]
        return StackedDiagram(self.n, tuple(edges), self.ends)

    def join(self, p: int) -> 'StackedDiagram':
        loose = {((0, p), ABOVE), ((1, p), BELOW)}
        ends = tuple(end for end in self.ends if (end.vertex, end.side) not in loose)
        if len(ends) != len(self.ends) - 2:
            raise DiagramInternalError(f'луч {p} уже обработан')
        return StackedDiagram(self.n, self.edges + (Edge((0, p), (1, p), STRAND),), ends)

    def label_of(self, component: StackedComponent, marks: dict) -> Label:
        return Label.X if marks[component.leftmost] is Mark.UP else Label.ONE

    def clockwise(self, marks: dict) -> int:
        """Number of arcs with ∧ at the left endpoint."""
        return sum(
            1 for edge in self.edges
            if edge.kind == ARC and marks[min(edge.u, edge.v, key=lambda vertex: vertex[1])] is Mark.UP
        )

    def encloses(self, outer: StackedComponent, inner: StackedComponent) -> bool:
        level, q = inner.leftmost
        return sum(1 for vl, p in outer.vertices if vl == level and p < q) % 2 == 1

    def orient(self, labels: dict):
        """Marks of every vertex, or None when a line cannot be oriented."""
        marks = {}
        for component in self.components:
            if component.is_circle:
                seed = (component.leftmost, Mark.UP if labels[component.vertices] is Label.X else Mark.DOWN)
            else:
                seed = (component.ends[0].vertex, component.ends[0].mark)
            if not self._propagate(seed, marks):
                return None
            if any(marks[end.vertex] is not end.mark for end in component.ends):
                return None
        return marks

    def _propagate(self, seed, marks) -> bool:
        start, mark = seed
        marks[start] = mark
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            for other, kind in self.adjacency[vertex]:
                expected = marks[vertex] if kind == STRAND else marks[vertex].flipped
                if other not in marks:
                    marks[other] = expected
                    queue.append(other)
                elif marks[other] is not expected:
                    return False
        return True


class AlphaRules:
    """Frobenius rules twisted by α on nested circles."""

    def __init__(self, alpha: int):
        if alpha not in (1, -1):
            raise DiagramValidationError(f'α должно быть 1 или -1, получено {alpha}', argument='alpha')
        self.alpha = alpha

    @property
    def birth(self) -> int:
        return self.alpha

    def merge(self, labels: tuple, inner):
        """labels of the two circles, inner is the index of the enclosed one or None"""
        if labels == (Label.X, Label.X):
            return []
        label = Label.X if Label.X in labels else Label.ONE
        factor = self.alpha if inner is not None and labels[inner] is Label.X else 1
        return [(label, factor)]

    def split(self, label: Label, outer):
        """Labels of (γi, γj); outer is the index of the enclosing result circle or None"""
        if label is Label.X:
            return [((Label.X, Label.X), self.alpha)]
        if outer == 1:
            return [((Label.X, Label.ONE), self.alpha), ((Label.ONE, Label.X), 1)]
        if outer == 0:
            return [((Label.X, Label.ONE), 1), ((Label.ONE, Label.X), self.alpha)]
        return [((Label.X, Label.ONE), self.alpha), ((Label.ONE, Label.X), self.alpha)]


class NestedRules:
    """
    Embedded TQFT: m and Δ for circles side by side, m′ and Δ′ for nested ones.

    Both primed maps take the outer circle first.
    """
    birth = -1

    @staticmethod
    def _m(first: Label, second: Label):
        if first is Label.X and second is Label.X:
            return []
        return [(Label.X if Label.X in (first, second) else Label.ONE, 1)]

    @staticmethod
    def _m_prime(outer: Label, inner: Label):
        if outer is Label.X and inner is Label.X:
            return []
        if inner is Label.X:
            return [(Label.X, -1)]
        return [(outer, 1)]

    @staticmethod
    def _delta(label: Label):
        if label is Label.X:
            return [((Label.X, Label.X), -1)]
        return [((Label.X, Label.ONE), -1), ((Label.ONE, Label.X), -1)]

    @staticmethod
    def _delta_prime(label: Label):
        # (outer, inner)
        if label is Label.X:
            return [((Label.X, Label.X), -1)]
        return [((Label.X, Label.ONE), 1), ((Label.ONE, Label.X), -1)]

    def merge(self, labels: tuple, inner):
        if inner is None:
            return self._m(*labels)
        return self._m_prime(labels[1 - inner], labels[inner])

    def split(self, label: Label, outer):
        if outer is None:
            return self._delta(label)
        terms = self._delta_prime(label)
        if outer == 0:
            return terms
        return [((second, first), factor) for (first, second), factor in terms]


def rules_for(alpha: int = None, nested: bool = False):
    return NestedRules() if nested else AlphaRules(alpha)


def default_order(m_y: CupDiagram, strategy: str = 'outer_first') -> tuple:
    """Cups as (i, j) and rays as p, each enclosing cup before the cups it encloses"""
    items = list(m_y.cups) + list(m_y.rays)
    if strategy == 'outer_first':
        return tuple(sorted(items, key=lambda item: item[0] if isinstance(item, tuple) else item))
    if strategy == 'outer_first_right':
        return tuple(sorted(items, key=lambda item: -(item[1] if isinstance(item, tuple) else item)))
    raise DiagramValidationError(
        f'неизвестный порядок {strategy}, допустимы: {", ".join(ORDER_STRATEGIES)}', argument='order'
    )


def validate_order(m_y: CupDiagram, order) -> tuple:
    order = tuple(tuple(item) if isinstance(item, (list, tuple)) else item for item in order)
    expected = set(m_y.cups) | set(m_y.rays)
    if len(order) != len(expected) or set(order) != expected:
        raise DiagramValidationError(
            f'порядок {order} не перечисляет чашки и лучи {m_y} ровно по одному разу', argument='order'
        )
    position = {item: index for index, item in enumerate(order)}
    for cup in m_y.cups:
        for outer in m_y.enclosing_cups(cup):
            if position[outer] > position[cup]:
                raise DiagramValidationError(
                    f'чашка {cup} обработана раньше охватывающей чашки {outer}', argument='order'
                )
    return order


def compatible_orders(m_y: CupDiagram) -> list:
    """Linear extensions of the enclosing order, with the rays first and last."""
    extensions = []

    def extend(prefix, remaining):
        if not remaining:
            extensions.append(tuple(prefix))
            return
        for cup in sorted(remaining):
            if all(outer not in remaining for outer in m_y.enclosing_cups(cup)):
                extend(prefix + [cup], remaining - {cup})

    extend([], frozenset(m_y.cups))
    rays = tuple(m_y.rays)
    orders = []
    for extension in extensions:
        for order in (rays + extension, extension + rays):
            if order not in orders:
                orders.append(order)
    return orders


class Movie:
    """
    One product computation.

    A term of the state is the degree of the stacked input pair together with
    the labels of the current circles. Lines carry no label: x acts on them
    as zero. Orientability and degree are read off the final picture only.
    """

    def __init__(self, x: WeightSequence, y: WeightSequence, z: WeightSequence, rules, order=None):
        self.x, self.y, self.z = x, y, z
        self.rules = rules
        m_y = WeightService.weight_to_m(y)
        self.order = validate_order(m_y, order if order is not None else default_order(m_y))
        self.start = StackedDiagram.stack(x, y, z)

    def initial_terms(self, left_terms, right_terms) -> dict:
        terms = {}
        circles = [comp for comp in self.start.components if comp.is_circle]
        for (lower, a), (upper, b) in itertools.product(left_terms, right_terms):
            marks = dict(zip(self.start.vertices, tuple(lower.marks) + tuple(upper.marks)))
            labels = frozenset((comp.vertices, self.start.label_of(comp, marks)) for comp in circles)
            key = (self.start.clockwise(marks), labels)
            terms[key] = terms.get(key, 0) + a * b
        return terms

    def run(self, left_terms, right_terms) -> dict:
        """Orientation of glue(m(z), m(x)) -> coefficient."""
        diagram = self.start
        terms = self.initial_terms(left_terms, right_terms)
        for item in self.order:
            if not terms:
                break
            if isinstance(item, tuple):
                i, j = item
                after = diagram.saddle(i, j)
                terms = self._step(diagram, after, ((0, i), (1, i)), ((0, i), (0, j)), terms)
            else:
                after = diagram.join(item)
                terms = self._step(diagram, after, ((0, item), (1, item)), ((0, item),), terms)
            diagram = after

        result = {}
        for (degree, labels), coefficient in terms.items():
            marks = diagram.orient(dict(labels))
            if marks is None or diagram.clockwise(marks) != degree:
                continue
            lower = tuple(marks[(0, p)] for p in range(1, self.x.n + 1))
            if lower != tuple(marks[(1, p)] for p in range(1, self.x.n + 1)):
                raise DiagramInternalError(f'метки уровней разошлись для {WeightSequence(lower)}')
            v = WeightSequence(lower)
            result[v] = result.get(v, 0) + coefficient
        return {v: c for v, c in result.items() if c}

    def _step(self, before: StackedDiagram, after: StackedDiagram, touched_before, touched_after, terms):
        involved = self._distinct(before, touched_before)
        produced = self._distinct(after, touched_after)
        untouched = [comp.vertices for comp in after.components if comp.is_circle and comp not in produced]
        lines_involved = not all(comp.is_circle for comp in involved)

        result = {}
        for (degree, key), coefficient in terms.items():
            labels = dict(key)
            kept = {vertices: labels[vertices] for vertices in untouched}
            if lines_involved:
                outcomes = self._line_outcomes(involved, produced, labels)
            else:
                outcomes = self._circle_outcomes(before, after, involved, produced, labels)
            for assigned, factor in outcomes:
                new_key = (degree, frozenset({**kept, **assigned}.items()))
                result[new_key] = result.get(new_key, 0) + coefficient * factor
        return {key: c for key, c in result.items() if c}

    @staticmethod
    def _distinct(diagram, vertices):
        result = []
        for vertex in vertices:
            comp = diagram.component_of[vertex]
            if comp not in result:
                result.append(comp)
        return result

    def _circle_outcomes(self, before, after, involved, produced, labels):
        if len(involved) == 2 and len(produced) == 1:
            first, second = involved
            inner = 0 if before.encloses(second, first) else 1 if before.encloses(first, second) else None
            pair = (labels[first.vertices], labels[second.vertices])
            return [({produced[0].vertices: label}, factor) for label, factor in self.rules.merge(pair, inner)]
        if len(involved) == 1 and len(produced) == 2:
            gamma_i, gamma_j = produced
            outer = 0 if after.encloses(gamma_i, gamma_j) else 1 if after.encloses(gamma_j, gamma_i) else None
            return [
                ({gamma_i.vertices: li, gamma_j.vertices: lj}, factor)
                for (li, lj), factor in self.rules.split(labels[involved[0].vertices], outer)
            ]
        raise DiagramInternalError('седло на окружностях не дало ни слияния, ни разбиения')

    def _line_outcomes(self, involved, produced, labels):
        # x on a circle merging into a line is zero; a circle born from a line carries x
        if any(comp.is_circle and labels[comp.vertices] is Label.X for comp in involved):
            return []
        born = [comp for comp in produced if comp.is_circle]
        return [({comp.vertices: Label.X for comp in born}, self.rules.birth ** len(born))]
