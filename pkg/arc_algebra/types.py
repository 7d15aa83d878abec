"""
Elements of the arc algebra.

A basis element of Hom(x, y) is an orientation of the glued diagram with
m(x) below and m(y) above. Coefficients are integers.
"""
import enum
from dataclasses import dataclass
from functools import cached_property

from diagrams.exceptions import DiagramValidationError
from diagrams.services import GluingService
from diagrams.types import Mark, Shape, WeightSequence


class Label(str, enum.Enum):
    ONE = '1'
    X = 'x'


class BasisFilter(str, enum.Enum):
    STANDARD_ONLY = 'standard_only'
    ALL = 'all'


@dataclass(frozen=True)
class BasisElement:
    src: WeightSequence
    tgt: WeightSequence
    orientation: WeightSequence

    @cached_property
    def diagram(self):
        return GluingService.glue_weights(self.src, self.tgt)

    @property
    def labels(self) -> tuple:
        """(leftmost point, label) for every circle; X is the clockwise orientation."""
        return tuple(
            (circle.leftmost, Label.X if self.orientation[circle.leftmost] is Mark.UP else Label.ONE)
            for circle in self.diagram.circles
        )

    @property
    def degree(self) -> int:
        return GluingService.degree_of(self.diagram, self.orientation)

    @property
    def sort_key(self) -> tuple:
        return self.src.sort_key, self.tgt.sort_key, self.orientation.sort_key

    def __str__(self):
        return f'{self.src}>{self.tgt}@{self.orientation}'


@dataclass(frozen=True)
class AlgebraElement:
    """Integer combination of basis elements of one Hom space."""
    src: WeightSequence
    tgt: WeightSequence
    terms: tuple = ()  # ((orientation, coefficient), ...)

    def __post_init__(self):
        if self.src.n != self.tgt.n:
            raise DiagramValidationError(f'веса {self.src} и {self.tgt} разной длины', argument='tgt')
        merged = {}
        for orientation, coefficient in self.terms:
            merged[orientation] = merged.get(orientation, 0) + coefficient
        terms = tuple(sorted(
            ((o, c) for o, c in merged.items() if c),
            key=lambda item: item[0].sort_key,
        ))
        object.__setattr__(self, 'terms', terms)

    @classmethod
    def zero(cls, src, tgt):
        return cls(src, tgt)

    @classmethod
    def from_basis(cls, basis: BasisElement, coefficient: int = 1):
        return cls(basis.src, basis.tgt, ((basis.orientation, coefficient),))

    @classmethod
    def from_dict(cls, src, tgt, mapping):
        return cls(src, tgt, tuple(mapping.items()))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def basis_terms(self):
        return [(BasisElement(self.src, self.tgt, o), c) for o, c in self.terms]

    @property
    def shape(self) -> Shape:
        return self.src.shape

    def scale(self, factor: int) -> 'AlgebraElement':
        return AlgebraElement(self.src, self.tgt, tuple((o, c * factor) for o, c in self.terms))

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise DiagramValidationError(
                f'слагаемые из разных пространств Hom({self.src},{self.tgt}) и Hom({other.src},{other.tgt})',
                argument='element',
            )
        return AlgebraElement(self.src, self.tgt, self.terms + other.terms)

    def __sub__(self, other):
        return self + (-other)


@dataclass(frozen=True)
class StructureTable:
    shape: Shape
    alpha: int
    basis_filter: BasisFilter
    basis: tuple  # BasisElement, ...
    products: tuple  # ((i, j), ((k, coefficient), ...)), ...

    @cached_property
    def index_of(self) -> dict:
        return {b: index for index, b in enumerate(self.basis)}

    @cached_property
    def product_map(self) -> dict:
        return dict(self.products)

    def product(self, i: int, j: int) -> dict:
        return dict(self.product_map.get((i, j), ()))


@dataclass(frozen=True)
class CheckResult:
    kind: str
    passed: bool
    witness: dict = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class CartanMatrix:
    weights: tuple
    entries: tuple  # rows of GradedDim

    def entry(self, x: WeightSequence, y: WeightSequence):
        return self.entries[self.weights.index(x)][self.weights.index(y)]
