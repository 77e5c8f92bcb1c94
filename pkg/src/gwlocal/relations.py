"""Bridges between the genus-zero engine and genus-one counts.

Covers the Calabi-Yau threefold relation between genus-one invariants, the
genus-zero invariant, and the reduced (main-component) term; the difference
between standard and reduced genus-one invariants in low dimensions; the
multiple-cover (instanton-number) expansions and their inversions; the audit
of the bundled low-degree quintic reference table; and an independent
plane-curve recursion used to cross-check the engine against a second theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb
from pathlib import Path

from .targets import parse_fraction

__all__ = [
    "UnsupportedDimension",
    "BPSTable",
    "QuinticTableRow",
    "ReferenceTable",
    "genus1_from_reduced",
    "gw_difference",
    "bps0_from_gw0",
    "gw0_from_bps0",
    "bps1_from_gw1",
    "gw1_from_bps",
    "reproduce_table1",
    "wdvv_p2",
    "load_table1",
]


class UnsupportedDimension(ValueError):
    """The genus-one difference formula is only available in real dimensions
    4 and 6."""


def _divisors(d):
    return [k for k in range(1, d + 1) if d % k == 0]


def _as_table(values, max_degree=None) -> dict:
    table = {int(d): Fraction(v) for d, v in dict(values).items()}
    top = max_degree if max_degree is not None else (max(table) if table else 0)
    for d in range(1, top + 1):
        if d not in table:
            raise ValueError(f"table is missing degree {d}")
    return {d: table[d] for d in range(1, top + 1)}


@dataclass(frozen=True)
class BPSTable:
    """Integer-conjectural curve counts ``degree -> value`` for one genus.
    Degrees must be contiguous from 1; values stay exact rationals so that
    integrality is a checkable output, not an input assumption."""

    genus: int
    entries: dict

    def __post_init__(self):
        if self.genus not in (0, 1):
            raise ValueError("genus must be 0 or 1")
        object.__setattr__(self, "entries", _as_table(self.entries))

    @property
    def max_degree(self) -> int:
        return len(self.entries)

    def __getitem__(self, d: int) -> Fraction:
        return self.entries[d]

    def items(self):
        return self.entries.items()


def genus1_from_reduced(genus0_value, reduced_term) -> Fraction:
    """Genus-one invariant of a Calabi-Yau threefold class from the genus-zero
    invariant and the reduced term: ``genus0_value / 12 + reduced_term``."""
    return Fraction(genus0_value) / 12 + Fraction(reduced_term)


def gw_difference(real_dim: int, c1_pairing, genus0_value) -> Fraction:
    """Standard minus reduced genus-one invariant.

    Vanishes in real dimension 4; in real dimension 6 it equals
    ``(2 - c1_pairing) / 24 * genus0_value``.  Other dimensions raise
    :class:`UnsupportedDimension`.
    """
    if real_dim == 4:
        return Fraction(0)
    if real_dim == 6:
        return Fraction(2 - c1_pairing, 24) * Fraction(genus0_value)
    raise UnsupportedDimension(f"no difference formula in real dimension {real_dim}")


def bps0_from_gw0(gw0) -> BPSTable:
    """Invert the genus-zero multiple-cover expansion.

    ``n0(d) = N0(d) - sum over divisors k > 1 of n0(d/k) / k**3``, computed
    degree by degree.
    """
    table = _as_table(gw0)
    bps = {}
    for d in sorted(table):
        correction = sum(
            (bps[d // k] / Fraction(k) ** 3 for k in _divisors(d) if k > 1), Fraction(0)
        )
        bps[d] = table[d] - correction
    return BPSTable(0, bps)


def gw0_from_bps0(bps0: BPSTable) -> dict:
    """Forward genus-zero multiple-cover sum: ``N0(d) = sum over divisors k
    of n0(d/k) / k**3``."""
    return {
        d: sum((bps0[d // k] / Fraction(k) ** 3 for k in _divisors(d)), Fraction(0))
        for d in range(1, bps0.max_degree + 1)
    }


def bps1_from_gw1(gw1, bps0: BPSTable) -> BPSTable:
    """Invert the genus-one multiple-cover expansion.

    ``n1(d) = N1(d) - (1/12) * sum over divisors k of n0(d/k) / k
    - sum over divisors k > 1 of n1(d/k) / k``.
    """
    table = _as_table(gw1)
    if bps0.max_degree < len(table):
        raise ValueError("genus-zero counts must cover every requested degree")
    bps = {}
    for d in sorted(table):
        genus0_part = sum((bps0[d // k] / k for k in _divisors(d)), Fraction(0)) / 12
        lower = sum((bps[d // k] / k for k in _divisors(d) if k > 1), Fraction(0))
        bps[d] = table[d] - genus0_part - lower
    return BPSTable(1, bps)


def gw1_from_bps(bps0: BPSTable, bps1: BPSTable) -> dict:
    """Forward genus-one multiple-cover sum: ``N1(d) = (1/12) * sum over
    divisors k of n0(d/k) / k + sum over divisors k of n1(d/k) / k``."""
    top = min(bps0.max_degree, bps1.max_degree)
    return {
        d: sum((bps0[d // k] / k for k in _divisors(d)), Fraction(0)) / 12
        + sum((bps1[d // k] / k for k in _divisors(d)), Fraction(0))
        for d in range(1, top + 1)
    }


def wdvv_p2(max_degree: int) -> dict:
    """Counts of degree-``d`` rational plane curves through ``3d - 1`` general
    points, from the associativity recursion:

    ``N(1) = 1`` and for ``d > 1``

    ``N(d) = sum over d1 + d2 = d of N(d1) N(d2) d1**2 d2 *
    (d2 * C(3d-4, 3d1-2) - d1 * C(3d-4, 3d1-1))``.

    Shares nothing with the fixed-point engine, so agreement between the two
    is a strong cross-theory check.

    EXAMPLES::

        >>> {d: int(v) for d, v in wdvv_p2(3).items()}
        {1: 1, 2: 1, 3: 12}
    """
    if max_degree < 1:
        raise ValueError("max degree must be at least 1")
    counts = {1: Fraction(1)}
    for d in range(2, max_degree + 1):
        total = Fraction(0)
        for d1 in range(1, d):
            d2 = d - d1
            total += (
                counts[d1]
                * counts[d2]
                * d1**2
                * d2
                * (d2 * comb(3 * d - 4, 3 * d1 - 2) - d1 * comb(3 * d - 4, 3 * d1 - 1))
            )
        counts[d] = total
    return counts


@dataclass(frozen=True)
class QuinticTableRow:
    """One audited degree of the quintic reference table.

    ``consistent`` records whether the published genus-one invariant agrees
    with both the reduced-term identity (using the engine's genus-zero value)
    and its own instanton expansion; ``corrected_genus1_gw`` is present
    exactly when it does not, and carries the unique repair compatible with
    both routes.
    """

    degree: int
    reduced_term: Fraction
    genus1_gw: Fraction
    genus1_bps: Fraction
    genus0_gw: Fraction
    consistent: bool
    corrected_genus1_gw: Fraction | None = None


@dataclass(frozen=True)
class ReferenceTable:
    """Published low-degree quintic threefold data: reduced terms, genus-one
    invariants, and genus-one instanton numbers, per degree."""

    reduced_terms: dict
    genus1_gw: dict
    genus1_bps: dict

    @property
    def max_degree(self) -> int:
        return len(self.reduced_terms)


_TABLE1_RESOURCE = "data/quintic_table1.txt"


def load_table1(path=None) -> ReferenceTable:
    """Load the bundled reference table (or a file in the same format):
    ``#`` header lines, then tab-separated ``d reduced N1 n1`` rows with
    fractions written ``num/den``."""
    if path is not None:
        text = Path(path).read_text(encoding="ascii")
    else:
        text = resources.files("gwlocal").joinpath(_TABLE1_RESOURCE).read_text(encoding="ascii")
    reduced, gw1, bps1 = {}, {}, {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ValueError(f"expected 4 tab-separated fields, got {line!r}")
        d = int(fields[0])
        reduced[d] = parse_fraction(fields[1])
        gw1[d] = parse_fraction(fields[2])
        bps1[d] = parse_fraction(fields[3])
    return ReferenceTable(
        reduced_terms=_as_table(reduced), genus1_gw=_as_table(gw1), genus1_bps=_as_table(bps1)
    )


def reproduce_table1(max_degree, reduced_terms, genus1_gw, genus1_bps, engine) -> list:
    """Audit the reference rows degree by degree against the genus-zero engine.

    ``engine`` maps a degree to the exact genus-zero invariant of the quintic
    threefold.  A row is consistent when the published genus-one invariant
    equals ``engine(d)/12 + reduced_term(d)`` and its instanton expansion
    (with genus-zero instanton numbers derived from the engine) returns the
    published genus-one instanton number.  For an inconsistent row the unique
    corrected genus-one invariant satisfying both routes is reported; the two
    routes must agree or a ValueError is raised.
    """
    if max_degree < 1:
        return []
    reduced_terms = _as_table(reduced_terms, max_degree)
    genus1_gw = _as_table(genus1_gw, max_degree)
    genus1_bps = _as_table(genus1_bps, max_degree)
    gw0 = {d: Fraction(engine(d)) for d in range(1, max_degree + 1)}
    bps0 = bps0_from_gw0(gw0)
    derived_bps1 = bps1_from_gw1(genus1_gw, bps0)
    published_bps1 = BPSTable(1, genus1_bps)
    forward_gw1 = gw1_from_bps(bps0, published_bps1)
    rows = []
    for d in range(1, max_degree + 1):
        via_reduced = genus1_from_reduced(gw0[d], reduced_terms[d])
        consistent = via_reduced == genus1_gw[d] and derived_bps1[d] == genus1_bps[d]
        corrected = None
        if not consistent:
            if via_reduced != forward_gw1[d]:
                raise ValueError(
                    f"degree {d}: the reduced-term route and the instanton route "
                    "disagree, so no unique correction exists"
                )
            corrected = via_reduced
        rows.append(
            QuinticTableRow(
                degree=d,
                reduced_term=reduced_terms[d],
                genus1_gw=genus1_gw[d],
                genus1_bps=genus1_bps[d],
                genus0_gw=gw0[d],
                consistent=consistent,
                corrected_genus1_gw=corrected,
            )
        )
    return rows
