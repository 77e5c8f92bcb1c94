"""Fixed-point graph sums for genus-zero stable-map invariants.

The torus acting diagonally on projective ``n``-space has isolated fixed
points; the induced fixed loci on genus-zero stable maps are indexed by the
decorated trees of :mod:`gwlocal.graphs`.  Each tree contributes an explicit
rational function of the torus weights, and the weighted sum over trees is a
weight-independent constant whenever the insertions cut the problem to
dimension zero.  That constant is the invariant.

The engine evaluates the sum at concrete positive rational weight vectors
drawn deterministically from seeds and requires exact agreement across
several seeds, which certifies weight independence without symbolic
computation.  Everything is ``fractions.Fraction``; no floating point.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .graphs import FixedGraph, enumerate_graphs
from .targets import (
    CITarget,
    DimensionQuery,
    WeightVector,
    expected_dimension,
    positivity_check,
)

__all__ = [
    "ENGINE_VERSION",
    "WEIGHT_BOUND",
    "DegenerateWeights",
    "WeightIndependenceFailure",
    "DimensionMismatch",
    "EngineResult",
    "sample_weights",
    "stable_map_dim",
    "required_insertion_total",
    "graph_contribution",
    "lines_closed_form",
    "sum_invariant",
]

ENGINE_VERSION = "0.1.0"

# sample_weights draws integers from 1..WEIGHT_BOUND, so numerators are
# bounded by WEIGHT_BOUND and denominators equal 1
WEIGHT_BOUND = 10_000

_MAX_RESAMPLE = 64


class DegenerateWeights(ArithmeticError):
    """A weight specialization made a denominator factor vanish.  Harmless:
    callers resample from the same seed lineage (seed, attempt + 1)."""


class WeightIndependenceFailure(RuntimeError):
    """Totals at distinct seeds disagreed.  This indicates a bug in the
    formulas or the enumeration, never bad user input."""


class DimensionMismatch(ValueError):
    """The insertions do not cut the moduli problem to dimension zero, so no
    weight-independent number exists."""


def sample_weights(seed: int, n: int, attempt: int = 0) -> WeightVector:
    """Deterministic admissible weights for projective ``n``-space.

    Draws ``n + 1`` pairwise-distinct integers from ``1..WEIGHT_BOUND`` with
    the stdlib generator seeded by ``(seed, attempt)``; the same pair always
    yields the same vector.  Bump ``attempt`` to stay in the same lineage
    while avoiding a degenerate specialization.
    """
    rng = random.Random(1_000_003 * seed + attempt)
    values = rng.sample(range(1, WEIGHT_BOUND + 1), n + 1)
    return WeightVector(tuple(Fraction(v) for v in values))


def stable_map_dim(n: int, d: int, k: int = 0) -> int:
    """Complex expected dimension of the genus-zero stable-map space of
    degree-``d`` maps to projective ``n``-space with ``k`` marks."""
    query = DimensionQuery(genus=0, marks=k, c1_dot_A=(n + 1) * d, half_dim=n)
    return expected_dimension(query) // 2


def required_insertion_total(target: CITarget) -> int:
    """Total insertion codimension that cuts ``target`` to a number: the
    stable-map dimension minus the rank of the bundle of hypersurface
    conditions."""
    d = target.curve_degree
    bundle_rank = sum(a * d + 1 for a in target.degrees)
    return stable_map_dim(target.ambient_dim, d, target.num_marks) - bundle_rank


class _Evaluator:
    """Evaluates tree contributions at one concrete weight vector.

    Edge factors recur across trees, so they are memoized per (pair, degree).
    Instances are cheap and process-local; each worker builds its own.
    """

    def __init__(self, weights: WeightVector, target: CITarget):
        if weights.ambient_dim != target.ambient_dim:
            raise ValueError("weight vector length does not match the ambient dimension")
        self.lam = weights.weights
        self.target = target
        self._bundle_memo = {}
        self._normal_memo = {}

    def _bundle_edge(self, a, i, j, de):
        # hypersurface-section weights along one edge:
        #   prod_{c=0..a*de} (c*lam_i + (a*de - c)*lam_j) / de
        if i > j:
            i, j = j, i
        key = (a, i, j, de)
        value = self._bundle_memo.get(key)
        if value is None:
            li, lj = self.lam[i], self.lam[j]
            m = a * de
            value = Fraction(1)
            for c in range(m + 1):
                value *= Fraction(c * li + (m - c) * lj, de)
            self._bundle_memo[key] = value
        return value

    def _normal_edge(self, i, j, de):
        # edge block of the inverse normal-bundle euler class:
        #   (-1)^de * de^(2de) / ((de!)^2 (lam_i - lam_j)^(2de))
        #   * prod_{k != i,j} prod_{c=0..de} de / (c*lam_i + (de-c)*lam_j - de*lam_k)
        if i > j:
            i, j = j, i
        key = (i, j, de)
        value = self._normal_memo.get(key)
        if value is None:
            li, lj = self.lam[i], self.lam[j]
            value = Fraction((-1) ** de * de ** (2 * de), factorial(de) ** 2)
            value /= (li - lj) ** (2 * de)
            for k, lk in enumerate(self.lam):
                if k == i or k == j:
                    continue
                for c in range(de + 1):
                    denominator = c * li + (de - c) * lj - de * lk
                    if denominator == 0:
                        raise DegenerateWeights(
                            f"edge ({i},{j}) of degree {de} met fixed point {k}"
                        )
                    value *= Fraction(de) / denominator
            self._normal_memo[key] = value
        return value

    def _geometry(self, graph: FixedGraph):
        # per vertex: edge valence, flag weights (lam_i - lam_j)/de, and the
        # sum of reciprocal flag weights
        nv = len(graph.vertices)
        valence = [0] * nv
        flags = [[] for _ in range(nv)]
        for a, b, de in graph.edges:
            la = self.lam[graph.vertices[a][0]]
            lb = self.lam[graph.vertices[b][0]]
            omega = Fraction(la - lb, de)
            flags[a].append(omega)
            flags[b].append(-omega)
            valence[a] += 1
            valence[b] += 1
        recip_sums = [sum((1 / w for w in flag_list), Fraction(0)) for flag_list in flags]
        return valence, flags, recip_sums

    def _core(self, graph, valence, flags, recip_sums, mark_counts):
        # bundle euler class over the graph
        value = Fraction(1)
        for a in self.target.degrees:
            for u, v, de in graph.edges:
                value *= self._bundle_edge(a, graph.vertices[u][0], graph.vertices[v][0], de)
            for v, (label, _marks) in enumerate(graph.vertices):
                value *= (a * self.lam[label]) ** (1 - valence[v])
        # vertex blocks of the inverse normal euler class
        for v, (label, _marks) in enumerate(graph.vertices):
            lv = self.lam[label]
            tangent = Fraction(1)
            for k, lk in enumerate(self.lam):
                if k != label:
                    tangent *= lv - lk
            exponent = valence[v] + mark_counts[v] - 3
            recip = recip_sums[v]
            if recip == 0 and exponent < 0:
                raise DegenerateWeights(f"reciprocal flag weights at vertex {v} summed to zero")
            value *= tangent ** (valence[v] - 1)
            value *= recip**exponent
            for omega in flags[v]:
                value /= omega
        # edge blocks
        for u, v, de in graph.edges:
            value *= self._normal_edge(graph.vertices[u][0], graph.vertices[v][0], de)
        return value

    def _symmetry_divisor(self, graph):
        divisor = graph.aut_order
        for _u, _v, de in graph.edges:
            divisor *= de
        return divisor

    def marked_value(self, graph: FixedGraph) -> Fraction:
        """Contribution of one tree carrying its marks explicitly."""
        insertions = self.target.insertions
        valence, flags, recip_sums = self._geometry(graph)
        mark_counts = [len(marks) for _label, marks in graph.vertices]
        value = self._core(graph, valence, flags, recip_sums, mark_counts)
        for label, marks in graph.vertices:
            for mark in marks:
                value *= self.lam[label] ** insertions[mark - 1].power
        return value / self._symmetry_divisor(graph)

    def summed_value(self, graph: FixedGraph) -> Fraction:
        """Total of :meth:`marked_value` over all ways of placing the target's
        marks on an unmarked tree.

        Placing mark ``l`` at vertex ``v`` multiplies the unmarked
        contribution by ``recip_sums[v] * lam[label(v)] ** power(l)``, and the
        placements are independent, so the sum over placements factors into
        one vertex sum per mark.  Summing the factored form over unmarked
        classes weighted by ``1/aut`` equals summing the explicit form over
        marked classes (orbit counting), with enumeration cost independent of
        the mark count.
        """
        valence, flags, recip_sums = self._geometry(graph)
        value = self._core(graph, valence, flags, recip_sums, [0] * len(graph.vertices))
        for insertion in self.target.insertions:
            vertex_sum = Fraction(0)
            for v, (label, _marks) in enumerate(graph.vertices):
                vertex_sum += recip_sums[v] * self.lam[label] ** insertion.power
            value *= vertex_sum
        return value / self._symmetry_divisor(graph)


def graph_contribution(graph: FixedGraph, weights: WeightVector, target: CITarget) -> Fraction:
    """Exact contribution of one decorated tree at one weight vector.

    The tree must carry exactly the target's marks.  Raises
    :class:`DegenerateWeights` when the specialization hits a vanishing
    denominator factor.
    """
    if graph.num_marks != target.num_marks:
        raise ValueError("graph marks do not match the target insertions")
    return _Evaluator(weights, target).marked_value(graph)


def lines_closed_form(n: int, degrees, weights: WeightVector) -> Fraction:
    """Degree-1 invariant summed directly over pairs of fixed points.

    One term per unordered pair ``i < j``: the product over hypersurface
    degrees ``a`` of ``prod_{c=0..a} (c*lam_i + (a-c)*lam_j)`` divided by
    ``prod_{k != i,j} (lam_i - lam_k)(lam_j - lam_k)``.  Shares no code with
    the tree sum, so it serves as an independent oracle for it.
    """
    if weights.ambient_dim != n:
        raise ValueError("weight vector length does not match the ambient dimension")
    lam = weights.weights
    total = Fraction(0)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            li, lj = lam[i], lam[j]
            numerator = Fraction(1)
            for a in degrees:
                for c in range(a + 1):
                    numerator *= c * li + (a - c) * lj
            denominator = Fraction(1)
            for k in range(n + 1):
                if k != i and k != j:
                    denominator *= (li - lam[k]) * (lj - lam[k])
            total += numerator / denominator
    return total


@dataclass(frozen=True)
class EngineResult:
    """Certified output of :func:`sum_invariant`."""

    value: Fraction
    graph_count: int
    weight_seeds: tuple
    target: CITarget


def _chunk_total(payload):
    graphs, weights, target = payload
    evaluator = _Evaluator(weights, target)
    total = Fraction(0)
    for graph in graphs:
        total += evaluator.summed_value(graph)
    return total


def _total_at(graphs, weights, target, jobs):
    if jobs <= 1 or len(graphs) < 2 * jobs:
        return _chunk_total((graphs, weights, target))
    chunk_count = min(len(graphs), 4 * jobs)
    chunks = [graphs[i::chunk_count] for i in range(chunk_count)]
    payloads = [(chunk, weights, target) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        partials = list(pool.map(_chunk_total, payloads))
    return sum(partials, Fraction(0))


def sum_invariant(target: CITarget, seeds=(1, 2, 3), jobs: int = 1) -> EngineResult:
    """Genus-zero invariant of ``target`` as an exact rational.

    Enumerates the fixed-locus tree classes once, evaluates the graph sum at
    the weight vector of each seed (resampling within a seed's lineage if a
    specialization degenerates), and requires the per-seed totals to agree
    exactly; the certified common value is returned.  ``jobs > 1`` splits the
    per-seed sum over worker processes; exact addition commutes, so the result
    is identical for any worker count.

    Raises :class:`DimensionMismatch` if the insertions do not cut the
    problem to dimension zero, and :class:`WeightIndependenceFailure` if the
    per-seed totals disagree.
    """
    seeds = tuple(int(s) for s in seeds)
    if len(seeds) < 2 or len(set(seeds)) != len(seeds):
        raise ValueError("need at least two distinct seeds")
    if not positivity_check(target):
        raise ValueError("target has a non-positive hypersurface factor")
    supplied = sum(insertion.power for insertion in target.insertions)
    needed = required_insertion_total(target)
    if supplied != needed:
        raise DimensionMismatch(
            f"insertion codimensions total {supplied} but the problem needs {needed}"
        )
    graphs = tuple(enumerate_graphs(target.ambient_dim, target.curve_degree, 0))
    totals = []
    used = set()
    for seed in seeds:
        attempt = 0
        while True:
            if attempt >= _MAX_RESAMPLE:
                raise RuntimeError(f"no admissible weights after {_MAX_RESAMPLE} attempts")
            weights = sample_weights(seed, target.ambient_dim, attempt)
            if weights.weights in used:
                attempt += 1
                continue
            try:
                total = _total_at(graphs, weights, target, jobs)
                break
            except DegenerateWeights:
                attempt += 1
        used.add(weights.weights)
        totals.append(total)
    if any(total != totals[0] for total in totals[1:]):
        raise WeightIndependenceFailure(
            f"seed totals disagree: {[str(t) for t in totals]} for seeds {seeds}"
        )
    return EngineResult(
        value=totals[0], graph_count=len(graphs), weight_seeds=seeds, target=target
    )
