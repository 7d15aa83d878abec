import enum
from dataclasses import dataclass
from itertools import combinations

import sympy

Q = sympy.Symbol('q')


class Intersection(enum.Enum):
    EMPTY = 'empty'


@dataclass(frozen=True)
class RingPresentation:
    """Generators x_i in degree 2 with x_i^2 = 0."""
    generators: tuple

    @property
    def dimension(self) -> int:
        return 2 ** len(self.generators)

    @property
    def hilbert_series(self) -> 'GradedDim':
        return GradedDim.from_degrees(
            2 * size
            for size in range(len(self.generators) + 1)
            for _ in combinations(self.generators, size)
        )


@dataclass(frozen=True)
class PullbackMap:
    """Images of x_1..x_n as signed combinations of the generators."""
    generators: tuple
    images: tuple  # images[i - 1] = ((generator, coefficient), ...)

    @property
    def n(self) -> int:
        return len(self.images)

    def image(self, i: int) -> dict:
        return dict(self.images[i - 1])

    def matrix(self) -> sympy.Matrix:
        """Rows are generators, columns are x_1..x_n."""
        column = {g: row for row, g in enumerate(self.generators)}
        entries = sympy.zeros(len(self.generators), self.n)
        for i, image in enumerate(self.images):
            for generator, coefficient in image:
                entries[column[generator], i] += coefficient
        return entries


@dataclass(frozen=True)
class RingElement:
    """Integer combination of square-free monomials."""
    terms: tuple  # ((frozenset of generators, coefficient), ...)

    @classmethod
    def generator(cls, g, coefficient=1):
        return cls(((frozenset([g]), coefficient),)) if coefficient else cls(())

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(sorted(
            ((monomial, c) for monomial, c in mapping.items() if c),
            key=lambda item: sorted(item[0]),
        )))

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other):
        result = self.as_dict()
        for monomial, c in other.terms:
            result[monomial] = result.get(monomial, 0) + c
        return RingElement.from_dict(result)

    def __mul__(self, other):
        result = {}
        for left, a in self.terms:
            for right, b in other.terms:
                if left & right:
                    continue
                monomial = left | right
                result[monomial] = result.get(monomial, 0) + a * b
        return RingElement.from_dict(result)

    @property
    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class GradedDim:
    """Laurent polynomial in q with non-negative coefficients."""
    coefficients: tuple = ()
    offset: int = 0

    def __post_init__(self):
        coefficients = list(self.coefficients)
        offset = self.offset
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
            offset += 1
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            offset = 0
        if any(c < 0 for c in coefficients):
            raise ValueError(f'отрицательный коэффициент в {self.coefficients}')
        object.__setattr__(self, 'coefficients', tuple(coefficients))
        object.__setattr__(self, 'offset', offset)

    @classmethod
    def from_degrees(cls, degrees):
        degrees = list(degrees)
        if not degrees:
            return cls()
        low = min(degrees)
        coefficients = [0] * (max(degrees) - low + 1)
        for d in degrees:
            coefficients[d - low] += 1
        return cls(tuple(coefficients), low)

    @property
    def expr(self):
        return sum((c * Q ** (self.offset + i) for i, c in enumerate(self.coefficients)), sympy.Integer(0))

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def shift(self, d: int) -> 'GradedDim':
        return GradedDim(self.coefficients, self.offset + d)

    def _poly(self):
        return sympy.Poly(list(reversed(self.coefficients)) or [0], Q)

    def __mul__(self, other):
        product = self._poly() * other._poly()
        return GradedDim(
            tuple(int(c) for c in reversed(product.all_coeffs())), self.offset + other.offset
        )

    def __str__(self):
        return str(self.expr)
