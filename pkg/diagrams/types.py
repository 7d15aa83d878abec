"""
Value types of the diagram calculus.

Points are numbered 1..n. Every type is a frozen dataclass, validated on
construction, so instances can be shared between threads and used as keys.
"""
import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .exceptions import DiagramValidationError


class Mark(str, enum.Enum):
    UP = '^'
    DOWN = 'v'

    @property
    def flipped(self) -> 'Mark':
        return Mark.DOWN if self is Mark.UP else Mark.UP

    @property
    def symbol(self) -> str:
        return '∧' if self is Mark.UP else '∨'


# Unicode arrows are accepted on input, the wire format is ^/v.
MARK_ALIASES = {
    '^': Mark.UP,
    '∧': Mark.UP,
    'v': Mark.DOWN,
    'V': Mark.DOWN,
    '∨': Mark.DOWN,
}


class ComponentKind(str, enum.Enum):
    CIRCLE = 'circle'
    LINE = 'line'


@dataclass(frozen=True)
class Shape:
    """Two-row shape (n - k, k)."""
    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DiagramValidationError(f'n должно быть положительным, получено {self.n}', argument='n')
        if not isinstance(self.k, int) or self.k < 0:
            raise DiagramValidationError(f'k должно быть неотрицательным, получено {self.k}', argument='k')
        if 2 * self.k > self.n:
            raise DiagramValidationError(f'требуется 2k <= n, получено n={self.n}, k={self.k}', argument='k')

    def __str__(self):
        return f'({self.n},{self.k})'


@dataclass(frozen=True)
class WeightSequence:
    marks: tuple

    def __post_init__(self):
        if not self.marks:
            raise DiagramValidationError('пустая последовательность весов', argument='weight')
        if not all(isinstance(mark, Mark) for mark in self.marks):
            raise DiagramValidationError('метки должны быть ^ или v', argument='weight')

    @classmethod
    def parse(cls, text: str, argument: str = 'weight') -> 'WeightSequence':
        text = (text or '').strip()
        unknown = sorted({ch for ch in text if ch not in MARK_ALIASES})
        if not text or unknown:
            raise DiagramValidationError(
                f'не удалось разобрать вес {text!r}: допустимы только ^ и v', argument=argument
            )
        return cls(tuple(MARK_ALIASES[ch] for ch in text))

    def __str__(self):
        return ''.join(mark.value for mark in self.marks)

    def __len__(self):
        return len(self.marks)

    def __getitem__(self, point: int) -> Mark:
        """Mark at a 1-based point."""
        return self.marks[point - 1]

    @property
    def n(self) -> int:
        return len(self.marks)

    @property
    def k(self) -> int:
        return sum(1 for mark in self.marks if mark is Mark.DOWN)

    @property
    def shape(self) -> Shape:
        return Shape(self.n, self.k)

    @property
    def symbols(self) -> str:
        return ''.join(mark.symbol for mark in self.marks)

    @property
    def up_positions(self) -> tuple:
        return tuple(i for i, mark in enumerate(self.marks, 1) if mark is Mark.UP)

    @property
    def down_positions(self) -> tuple:
        return tuple(i for i, mark in enumerate(self.marks, 1) if mark is Mark.DOWN)

    def top_count(self, i: int) -> int:
        """t_i: number of ∧ among points 1..i."""
        return sum(1 for mark in self.marks[:i] if mark is Mark.UP)

    def bottom_count(self, i: int) -> int:
        """b_i: number of ∨ among points 1..i."""
        return i - self.top_count(i)

    @property
    def is_standard(self) -> bool:
        balance = 0
        for mark in reversed(self.marks):
            balance += 1 if mark is Mark.UP else -1
            if balance < 0:
                return False
        return True

    @property
    def sort_key(self) -> tuple:
        return tuple(0 if mark is Mark.DOWN else 1 for mark in reversed(self.marks))

    def with_marks(self, changes: dict) -> 'WeightSequence':
        marks = list(self.marks)
        for point, mark in changes.items():
            marks[point - 1] = mark
        return WeightSequence(tuple(marks))

    def require_shape(self, shape: Shape, argument: str = 'weight'):
        if self.shape != shape:
            raise DiagramValidationError(
                f'вес {self} имеет форму {self.shape}, ожидалась {shape}', argument=argument
            )


@dataclass(frozen=True)
class StandardTableau:
    top_row: tuple
    bottom_row: tuple

    def __post_init__(self):
        top, bottom = tuple(self.top_row), tuple(self.bottom_row)
        n = len(top) + len(bottom)
        if sorted(top + bottom) != list(range(1, n + 1)):
            raise DiagramValidationError('строки таблицы должны разбивать {1..n}', argument='tableau')
        if len(bottom) > len(top):
            raise DiagramValidationError('вторая строка длиннее первой', argument='tableau')
        for row in (top, bottom):
            if any(a <= b for a, b in zip(row, row[1:])):
                raise DiagramValidationError('строки должны строго убывать', argument='tableau')
        if any(t <= b for t, b in zip(top, bottom)):
            raise DiagramValidationError('столбцы должны строго убывать', argument='tableau')

    @property
    def n(self) -> int:
        return len(self.top_row) + len(self.bottom_row)

    @property
    def k(self) -> int:
        return len(self.bottom_row)

    @property
    def shape(self) -> Shape:
        return Shape(self.n, self.k)

    def __str__(self):
        top = ','.join(str(i) for i in self.top_row)
        bottom = ','.join(str(i) for i in self.bottom_row)
        return f'({top})/({bottom})'


@dataclass(frozen=True)
class CupDiagram:
    """Crossingless matching of n points by cups, with rays on the rest."""
    n: int
    cups: tuple
    rays: tuple = ()

    def __post_init__(self):
        cups = tuple(sorted((min(i, j), max(i, j)) for i, j in self.cups))
        rays = tuple(sorted(self.rays))
        object.__setattr__(self, 'cups', cups)
        object.__setattr__(self, 'rays', rays)

        covered = [p for cup in cups for p in cup] + list(rays)
        if sorted(covered) != list(range(1, self.n + 1)):
            raise DiagramValidationError('каждая точка должна лежать ровно на одной чашке или луче', argument='diagram')
        for (a, b) in cups:
            if a == b:
                raise DiagramValidationError(f'вырожденная чашка ({a},{b})', argument='diagram')
            if (b - a) % 2 == 0:
                raise DiagramValidationError(f'чашка ({a},{b}) охватывает нечетное число точек', argument='diagram')
            for (c, d) in cups:
                if a < c < b < d:
                    raise DiagramValidationError(f'чашки ({a},{b}) и ({c},{d}) пересекаются', argument='diagram')
            for p in rays:
                if a < p < b:
                    raise DiagramValidationError(f'луч {p} лежит внутри чашки ({a},{b})', argument='diagram')

    @cached_property
    def partner(self) -> dict:
        """σ extended to both ends of every cup."""
        mapping = {}
        for a, b in self.cups:
            mapping[a] = b
            mapping[b] = a
        return mapping

    @property
    def left_ends(self) -> tuple:
        return tuple(a for a, _ in self.cups)

    @property
    def cup_count(self) -> int:
        return len(self.cups)

    def encloses(self, outer: tuple, inner: tuple) -> bool:
        return outer[0] < inner[0] and inner[1] < outer[1]

    def enclosing_cups(self, cup: tuple) -> tuple:
        return tuple(other for other in self.cups if self.encloses(other, cup))

    def __str__(self):
        cups = ' '.join(f'({a},{b})' for a, b in self.cups)
        rays = ' '.join(f'|{p}' for p in self.rays)
        return ' '.join(part for part in (cups, rays) if part) or '-'


@dataclass(frozen=True)
class Component:
    kind: ComponentKind
    vertices: tuple
    arcs: tuple  # ('top'|'bottom', i, j)
    ray_ends: tuple = ()  # ('top'|'bottom', p)

    @property
    def leftmost(self) -> int:
        return self.vertices[0]

    @property
    def is_circle(self) -> bool:
        return self.kind is ComponentKind.CIRCLE

    @property
    def is_propagating(self) -> bool:
        """A line with one ray end above the axis and one below."""
        return {side for side, _ in self.ray_ends} == {'top', 'bottom'}


@dataclass(frozen=True)
class CircleDiagram:
    """Glued diagram: ``top`` reflected above the axis, ``bottom`` below."""
    top: CupDiagram
    bottom: CupDiagram
    components: tuple
    parents: tuple = field(default=())  # (circle index, parent index or None)

    @cached_property
    def component_of(self) -> dict:
        return {p: index for index, comp in enumerate(self.components) for p in comp.vertices}

    @property
    def n(self) -> int:
        return self.bottom.n

    @property
    def circles(self) -> tuple:
        return tuple(comp for comp in self.components if comp.is_circle)

    @property
    def lines(self) -> tuple:
        return tuple(comp for comp in self.components if not comp.is_circle)

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def parent_of(self, index: int) -> Optional[int]:
        return dict(self.parents).get(index)


@dataclass(frozen=True)
class Orientation:
    weights: WeightSequence
    diagram: CircleDiagram

    def __str__(self):
        return str(self.weights)


@dataclass(frozen=True)
class EquivalenceData:
    classes: tuple
    min_reps: tuple
    circle_reps: tuple
    line_reps: tuple
    rank: tuple  # (min rep, rank)

    def class_of(self, point: int) -> tuple:
        for members in self.classes:
            if point in members:
                return members
        raise DiagramValidationError(f'точка {point} вне диапазона 0..n', argument='point')

    def min_rep_of(self, point: int) -> int:
        return self.class_of(point)[0]

    @property
    def rank_map(self) -> dict:
        return dict(self.rank)
