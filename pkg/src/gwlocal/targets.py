"""Complete-intersection counting problems on projective space.

Targets, torus weight vectors, and expected-dimension bookkeeping.  All
quantities are exact: curve classes are integer multiples of the line class,
insertions are powers of the hyperplane class, and every rational value is a
``fractions.Fraction`` (lowest terms, positive denominator, guaranteed by the
stdlib).  No floating point enters any computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Insertion",
    "CITarget",
    "WeightVector",
    "DimensionQuery",
    "is_calabi_yau",
    "is_positive_system",
    "positivity_check",
    "expected_dimension",
    "parse_fraction",
    "format_fraction",
]


def parse_fraction(text: str) -> Fraction:
    """Parse ``"num/den"``, or a plain integer string, into an exact Fraction."""
    return Fraction(text.strip())


def format_fraction(value) -> str:
    """Render an exact rational as ``num/den``, or ``num`` when integral.

    EXAMPLES::

        >>> format_fraction(Fraction(4876875, 8))
        '4876875/8'
        >>> format_fraction(Fraction(2875))
        '2875'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Insertion:
    """One marked-point condition: the ``power``-th power of the hyperplane
    class pulled back by evaluation at that mark.  ``power`` is the complex
    codimension the condition imposes."""

    power: int

    def __post_init__(self):
        if not isinstance(self.power, int) or self.power < 0:
            raise ValueError(f"insertion power must be a nonnegative integer, got {self.power!r}")


@dataclass(frozen=True)
class CITarget:
    """A degree-``curve_degree`` counting problem for a complete intersection
    of hypersurface degrees ``degrees`` inside projective space of dimension
    ``ambient_dim``, with one marked point per entry of ``insertions``.

    ``degrees`` may be empty (count curves in the ambient space itself).
    Degree-0 factors are constructible so that the positivity predicate has
    something to reject, but they never pass :func:`positivity_check`.
    """

    ambient_dim: int
    degrees: tuple = ()
    curve_degree: int = 1
    insertions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(a) for a in self.degrees))
        normalized = tuple(
            item if isinstance(item, Insertion) else Insertion(int(item)) for item in self.insertions
        )
        object.__setattr__(self, "insertions", normalized)
        n = self.ambient_dim
        if not isinstance(n, int) or n < 1:
            raise ValueError("ambient dimension must be a positive integer")
        if not isinstance(self.curve_degree, int) or self.curve_degree < 1:
            raise ValueError("curve degree must be a positive integer")
        if any(a < 0 for a in self.degrees):
            raise ValueError("hypersurface degrees must be nonnegative")
        if len(self.degrees) >= n:
            raise ValueError("need fewer hypersurface factors than the ambient dimension")
        if any(ins.power > n for ins in self.insertions):
            raise ValueError("insertion power exceeds the ambient dimension")

    @property
    def num_marks(self) -> int:
        return len(self.insertions)

    @property
    def cut_dimension(self) -> int:
        """Complex dimension of the complete intersection itself."""
        return self.ambient_dim - len(self.degrees)


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive, pairwise-distinct rational torus weights, one per
    homogeneous coordinate of the ambient projective space."""

    weights: tuple

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if len(ws) < 2:
            raise ValueError("need at least two weights")
        if any(w <= 0 for w in ws):
            raise ValueError("weights must be strictly positive")
        if len(set(ws)) != len(ws):
            raise ValueError("weights must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, index: int) -> Fraction:
        return self.weights[index]

    @property
    def ambient_dim(self) -> int:
        return len(self.weights) - 1

    def scaled(self, factor) -> "WeightVector":
        """The weight vector with every entry multiplied by ``factor``."""
        return WeightVector(tuple(w * Fraction(factor) for w in self.weights))

    def permuted(self, perm) -> "WeightVector":
        """Entries rearranged so position ``i`` holds the old entry ``perm[i]``."""
        if sorted(perm) != list(range(len(self.weights))):
            raise ValueError("not a permutation of the weight positions")
        return WeightVector(tuple(self.weights[p] for p in perm))


@dataclass(frozen=True)
class DimensionQuery:
    """Inputs of the expected-dimension formula.

    ``c1_dot_A`` is the pairing of the target's first Chern class with the
    curve class, ``half_dim`` the complex dimension of the target, and
    ``bundle_c1_dot_A``, when present, the pairing of a twisting bundle's
    first Chern class with the curve class.
    """

    genus: int
    marks: int
    c1_dot_A: int
    half_dim: int
    bundle_c1_dot_A: int | None = None

    def __post_init__(self):
        if self.genus not in (0, 1):
            raise ValueError("genus must be 0 or 1")
        if self.marks < 0:
            raise ValueError("mark count must be nonnegative")


def is_calabi_yau(target: CITarget) -> bool:
    """True when the hypersurface degrees sum to ``ambient_dim + 1``, i.e. the
    first Chern class of the cut locus vanishes.  The sum runs over the
    hypersurface factors."""
    return sum(target.degrees) == target.ambient_dim + 1


def is_positive_system(degrees, curve_degree: int) -> bool:
    """Positivity of the split conditions: every factor must pair positively
    with every curve degree from 1 up to ``curve_degree``."""
    return all(a * b > 0 for a in degrees for b in range(1, curve_degree + 1))


def positivity_check(target: CITarget) -> bool:
    """True iff every split hypersurface factor of the target is positive."""
    return is_positive_system(target.degrees, target.curve_degree)


def expected_dimension(query: DimensionQuery) -> int:
    """Real expected dimension of the stable-map space described by ``query``.

    Equals ``2*(c1_dot_A + (1 - genus)*(half_dim - 3) + marks)``; when a
    twisting bundle is given its pairing is subtracted once per complex unit,
    i.e. ``2*bundle_c1_dot_A`` in real units.

    EXAMPLES::

        >>> expected_dimension(DimensionQuery(genus=1, marks=0, c1_dot_A=0, half_dim=3))
        0
        >>> expected_dimension(DimensionQuery(genus=1, marks=2, c1_dot_A=7, half_dim=3))
        18
        >>> expected_dimension(DimensionQuery(genus=1, marks=0, c1_dot_A=10, half_dim=4,
        ...                                   bundle_c1_dot_A=10))
        0
    """
    value = 2 * (query.c1_dot_A + (1 - query.genus) * (query.half_dim - 3) + query.marks)
    if query.bundle_c1_dot_A is not None:
        value -= 2 * query.bundle_c1_dot_A
    return value
