"""
Closed Khovanov product for α = +1, computed without the movie in ``surgery``.

Every weight of shape (n - k, k) is padded with n - k points ∨ on the left
and k points ∧ on the right. Padded weights have cups only, so the stacked
picture is a union of circles and the saddle cobordism is evaluated in one
go on each connected piece: multiply the input labels, multiply by 2x for
every handle, comultiply onto the output circles. Orientations whose
padding does not read ∨…∨ ∧…∧ span an ideal and are dropped.
"""
import itertools

import networkx as nx

from diagrams.exceptions import DiagramInternalError
from diagrams.services import WeightService
from diagrams.types import Mark, Shape, WeightSequence

from .types import Label


def pad(w: WeightSequence, shape: Shape) -> WeightSequence:
    return WeightSequence((Mark.DOWN,) * (shape.n - shape.k) + w.marks + (Mark.UP,) * shape.k)


def _leftmost(component):
    return min(component, key=lambda node: (node[1], node[0]))


def _arcs(graph, level, diagram):
    for a, b in diagram.cups:
        graph.add_edge((level, a), (level, b), flip=True)


def _label(component, marks) -> Label:
    return Label.X if marks[_leftmost(component)] is Mark.UP else Label.ONE


def _evaluate(labels, outputs, genus):
    """Value of a connected cobordism of the given genus on the input labels."""
    power = labels.count(Label.X) + genus
    if power > 1:
        return []
    if power == 1:
        return [({circle: Label.X for circle in outputs}, 2 ** genus)]
    return [
        ({circle: Label.ONE if circle == chosen else Label.X for circle in outputs}, 1)
        for chosen in outputs
    ]


class ClosedPicture:
    """Padded stacked picture of a product Hom(x, y) x Hom(y, z)."""

    def __init__(self, x: WeightSequence, y: WeightSequence, z: WeightSequence):
        self.shape = x.shape
        self.size = 2 * self.shape.n
        m_x, self.m_y, m_z = (WeightService.weight_to_m(pad(w, self.shape)) for w in (x, y, z))
        if m_x.rays or self.m_y.rays or m_z.rays:
            raise DiagramInternalError(f'дополненные веса {x}, {y}, {z} оставили лучи')
        points = range(1, self.size + 1)

        # cups and caps of the same pair of points are parallel edges
        self.levels = []
        for level, below, above in ((0, m_x, self.m_y), (1, self.m_y, m_z)):
            graph = nx.MultiGraph()
            graph.add_nodes_from((level, p) for p in points)
            _arcs(graph, level, below)
            _arcs(graph, level, above)
            self.levels.append(graph)
        self.inputs = [frozenset(c) for graph in self.levels for c in nx.connected_components(graph)]

        self.final = nx.Graph()
        _arcs(self.final, 0, m_x)
        _arcs(self.final, 1, m_z)
        self.final.add_edges_from((((0, p), (1, p)) for p in points), flip=False)
        self.outputs = [frozenset(c) for c in nx.connected_components(self.final)]

        surface = nx.compose(*self.levels)
        surface.add_edges_from((((0, p), (1, p)) for p in points), flip=False)
        self.pieces = []
        for component in nx.connected_components(surface):
            inputs = [c for c in self.inputs if c <= component]
            outputs = [c for c in self.outputs if c <= component]
            handles = sum(1 for i, _ in self.m_y.cups if (0, i) in component)
            genus, odd = divmod(2 - len(inputs) - len(outputs) + handles, 2)
            if odd or genus < 0:
                raise DiagramInternalError(f'кобордизм на {sorted(component)} имеет нецелый род')
            self.pieces.append((inputs, outputs, genus))

    def labels(self, lower: WeightSequence, upper: WeightSequence) -> dict:
        marks = {}
        for level, w in ((0, lower), (1, upper)):
            marks.update({(level, p): mark for p, mark in enumerate(pad(w, self.shape).marks, 1)})
        return {circle: _label(circle, marks) for circle in self.inputs}

    def evaluate(self, labels: dict):
        states = [({}, 1)]
        for inputs, outputs, genus in self.pieces:
            outcomes = _evaluate([labels[c] for c in inputs], outputs, genus)
            states = [
                ({**state, **assigned}, coefficient * factor)
                for (state, coefficient), (assigned, factor) in itertools.product(states, outcomes)
            ]
        return states

    def read(self, labels: dict):
        """Orientation of glue(m(z), m(x)), or None when the padding is not ∨…∨ ∧…∧."""
        marks = {}
        for circle in self.outputs:
            root = _leftmost(circle)
            marks[root] = Mark.UP if labels[circle] is Label.X else Mark.DOWN
            for u, v in nx.dfs_edges(self.final, root):
                marks[v] = marks[u].flipped if self.final.edges[u, v]['flip'] else marks[u]
        lower = tuple(marks[(0, p)] for p in range(1, self.size + 1))
        left, right = self.shape.n - self.shape.k, self.shape.k
        if any(mark is not Mark.DOWN for mark in lower[:left]):
            return None
        if any(mark is not Mark.UP for mark in lower[self.size - right:]):
            return None
        return WeightSequence(lower[left:left + self.shape.n])


def khovanov_product(x: WeightSequence, y: WeightSequence, z: WeightSequence, left_terms, right_terms) -> dict:
    """Orientation of glue(m(z), m(x)) -> coefficient."""
    picture = ClosedPicture(x, y, z)
    result = {}
    for (lower, a), (upper, b) in itertools.product(left_terms, right_terms):
        for state, factor in picture.evaluate(picture.labels(lower, upper)):
            v = picture.read(state)
            if v is not None:
                result[v] = result.get(v, 0) + a * b * factor
    return {v: c for v, c in result.items() if c}
