# matrices/tau.py
"""The region matrix tau_D: local 4x4 blocks summed over crossings.

Symbolic entries live in half-step Laurent polynomials of t, i.e. the matrix
built here is tau_D(t^2): x_j = (t_j + t_j^-1)/2. The numeric build evaluates
tau_D(omega) directly with x_j = cos(theta_j / 2).
"""
import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from diagram import ColoredDiagram, Frame, RegionMap
from errors import VariableMismatchError
from laurent import LaurentPoly, RationalFn, TorusPoint
from matrices.base_matrix import RegionMatrix

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)

# Corner order of a local block.
CORNERS = ("a", "b", "c", "d")


def x_single(num_vars: int, j: int) -> LaurentPoly:
    """x_j = (t_j + t_j^-1) / 2."""
    return (LaurentPoly.variable(num_vars, j) + LaurentPoly.variable(num_vars, j, -2)).scale(_HALF)


def x_pair(num_vars: int, j: int, k: int) -> LaurentPoly:
    """x_jk = (t_j t_k + t_j^-1 t_k^-1) / 2; equals 2 x_j^2 - 1 when j == k."""
    up = [0] * num_vars
    up[j - 1] += 2
    up[k - 1] += 2
    down = [-e for e in up]
    return LaurentPoly(num_vars, {tuple(up): _HALF, tuple(down): _HALF})


def q_factor(num_vars: int, j: int) -> LaurentPoly:
    """t_j - t_j^-1."""
    return LaurentPoly.variable(num_vars, j) - LaurentPoly.variable(num_vars, j, -2)


def clasp_denominator(num_vars: int, j: int, k: int) -> LaurentPoly:
    return q_factor(num_vars, j) * q_factor(num_vars, k)


def _block(xjk, xj, xk, bb, one) -> Tuple[Tuple, ...]:
    return (
        (xjk, xj, one, xk),
        (xj, bb, xk, one),
        (one, xk, xjk, xj),
        (xk, one, xj, bb),
    )


def tau_local(num_vars: int, j: int, k: int, bichromatic: Optional[bool] = None) -> Tuple[Tuple[LaurentPoly, ...], ...]:
    """Symbolic 4x4 block over the corners (a, b, c, d).

    The closed forms of x_j and x_jk already satisfy x_jj = 2 x_j^2 - 1, so the
    monochromatic case needs no separate substitution.
    """
    if bichromatic is not None and bichromatic != (j != k):
        raise ValueError(f"colors ({j}, {k}) contradict bichromatic={bichromatic}")
    xj, xk, xjk = x_single(num_vars, j), x_single(num_vars, k), x_pair(num_vars, j, k)
    bb = xj * xk * 2 - xjk
    return _block(xjk, xj, xk, bb, LaurentPoly.one(num_vars))


def tau_local_numeric(theta_j: float, theta_k: float) -> np.ndarray:
    xj, xk = math.cos(theta_j / 2.0), math.cos(theta_k / 2.0)
    xjk = math.cos((theta_j + theta_k) / 2.0)
    return np.array(_block(xjk, xj, xk, 2.0 * xj * xk - xjk, 1.0), dtype=float)


def frame_pairs(frame: Frame) -> Iterable[Tuple[int, int, int, int, int]]:
    """(r, s, p, q, multiplicity) for every unordered corner pair r <= s, with
    p <= q the regions it lands on. Off-diagonal corner pairs landing on one
    region count twice."""
    regions = (frame.a, frame.b, frame.c, frame.d)
    for r in range(4):
        for s in range(r, 4):
            p, q = sorted((regions[r], regions[s]))
            yield r, s, p, q, (2 if r != s and p == q else 1)


class SymbolicSymMatrix(RegionMatrix):
    """Symmetric matrix of rational functions indexed by regions."""

    kind = "tau-sym"

    def __init__(self, num_vars: int, region_order: Sequence[int], entries: Sequence[Sequence[RationalFn]]):
        super().__init__(region_order)
        self.num_vars = num_vars
        self.entries: Tuple[Tuple[RationalFn, ...], ...] = tuple(tuple(row) for row in entries)
        if len(self.entries) != self.dim or any(len(row) != self.dim for row in self.entries):
            raise ValueError("entries do not match the region order")

    def __getitem__(self, key: Tuple[int, int]) -> RationalFn:
        p, q = key
        return self.entries[p][q]

    def entry(self, region_p: int, region_q: int) -> RationalFn:
        return self.entries[self.region_index[region_p]][self.region_index[region_q]]

    def rows(self) -> List[List[RationalFn]]:
        return [list(row) for row in self.entries]

    def without_regions(self, regions: Iterable[int]) -> "SymbolicSymMatrix":
        keep, order = self._kept_positions(regions)
        return SymbolicSymMatrix(self.num_vars, order, [[self.entries[p][q] for q in keep] for p in keep])

    def phi(self) -> "SymbolicSymMatrix":
        return SymbolicSymMatrix(self.num_vars, self.region_order,
                                 [[value.phi() for value in row] for row in self.entries])

    def is_symmetric(self) -> bool:
        return all(self.entries[p][q] == self.entries[q][p]
                   for p in range(self.dim) for q in range(p + 1, self.dim))

    def evaluate(self, point: TorusPoint) -> np.ndarray:
        """Complex matrix of entry values at t = e^{i theta}."""
        values = np.zeros((self.dim, self.dim), dtype=complex)
        for p in range(self.dim):
            for q in range(p, self.dim):
                values[p, q] = values[q, p] = self.entries[p][q].evaluate(point)
        return values

    def to_json(self) -> Dict:
        return {
            "kind": self.kind,
            "region_order": list(self.region_order),
            "entries": [[value.to_json() for value in row] for row in self.entries],
        }


class RealSymMatrix(RegionMatrix):
    """tau_D(omega) at one point of the torus; read-only."""

    kind = "tau"

    def __init__(self, region_order: Sequence[int], entries: np.ndarray, point: Optional[TorusPoint] = None):
        super().__init__(region_order)
        array = np.array(entries, dtype=float, copy=True).reshape(self.dim, self.dim)
        array.setflags(write=False)
        self.entries = array
        self.point = point

    def rows(self) -> List[List[float]]:
        return self.entries.tolist()

    def without_regions(self, regions: Iterable[int]) -> "RealSymMatrix":
        keep, order = self._kept_positions(regions)
        index = np.array(keep, dtype=int)
        return RealSymMatrix(order, self.entries[np.ix_(index, index)], self.point)

    def to_json(self) -> Dict:
        return {
            "kind": self.kind,
            "point": list(self.point.thetas) if self.point is not None else None,
            "region_order": list(self.region_order),
            "entries": self.entries.tolist(),
        }


def build_tau_symbolic(d: ColoredDiagram, r: Optional[RegionMap] = None) -> SymbolicSymMatrix:
    """tau_D(t^2) = sum over crossings of -4 sgn(v) / ((t_j - t_j^-1)(t_k - t_k^-1)) times the local block."""
    regions = r if r is not None else d.regions
    n = d.num_colors
    size = len(regions)
    # Numerators grouped by the clasp denominator they sit over.
    numerators: Dict[Tuple[int, int], Dict[Tuple[int, int], LaurentPoly]] = {}
    blocks: Dict[Tuple[int, int], Tuple[Tuple[LaurentPoly, ...], ...]] = {}

    for frame in d.frames:
        key = (min(frame.j, frame.k), max(frame.j, frame.k))
        block = blocks.get((frame.j, frame.k))
        if block is None:
            block = blocks[(frame.j, frame.k)] = tau_local(n, frame.j, frame.k)
        factor = -4 * frame.sign
        for rr, ss, p, q, multiplicity in frame_pairs(frame):
            cell = numerators.setdefault((p, q), {})
            value = block[rr][ss].scale(factor * multiplicity)
            cell[key] = cell[key] + value if key in cell else value

    zero = RationalFn(LaurentPoly.zero(n))
    entries: List[List[RationalFn]] = [[zero] * size for _ in range(size)]
    for (p, q), groups in numerators.items():
        total = zero
        for (j, k), numerator in sorted(groups.items()):
            if numerator:
                total = total + RationalFn(numerator, clasp_denominator(n, j, k))
        entries[p][q] = entries[q][p] = total

    logger.debug(f"[Tau] symbolic {size}x{size} matrix from {d.num_crossings} crossings")
    return SymbolicSymMatrix(n, range(size), entries)


def build_tau_numeric(d: ColoredDiagram, r: Optional[RegionMap], p: TorusPoint) -> RealSymMatrix:
    """tau_D(omega) with x_j = cos(theta_j / 2) and sqrt(1 - x_j^2) = sin(theta_j / 2)."""
    regions = r if r is not None else d.regions
    if p.num_vars != d.num_colors:
        raise VariableMismatchError(
            f"point has {p.num_vars} angles but the diagram has {d.num_colors} colors",
            expected=d.num_colors, got=p.num_vars)
    thetas = p.thetas
    size = len(regions)
    upper = np.zeros((size, size), dtype=float)
    blocks: Dict[Tuple[int, int], np.ndarray] = {}

    for frame in d.frames:
        theta_j, theta_k = thetas[frame.j - 1], thetas[frame.k - 1]
        block = blocks.get((frame.j, frame.k))
        if block is None:
            block = blocks[(frame.j, frame.k)] = tau_local_numeric(theta_j, theta_k)
        factor = frame.sign / (math.sin(theta_j / 2.0) * math.sin(theta_k / 2.0))
        for rr, ss, a, b, multiplicity in frame_pairs(frame):
            upper[a, b] += factor * multiplicity * block[rr, ss]

    full = np.triu(upper) + np.triu(upper, 1).T
    return RealSymMatrix(range(size), full, p)


