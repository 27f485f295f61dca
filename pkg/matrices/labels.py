# matrices/labels.py
"""Corner-label matrix K_D, the clasp diagonal S and the product K^T S K."""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from diagram import ColoredDiagram, Frame, RegionMap
from laurent import LaurentPoly, RationalFn
from matrices.base_matrix import RegionMatrix
from matrices.tau import SymbolicSymMatrix, clasp_denominator

logger = logging.getLogger(__name__)

# Half-step exponent signs (on t_j, on t_k) of the label at each corner, times sgn(v).
LABEL_SIGNS = {"a": (1, 1), "b": (1, -1), "c": (-1, -1), "d": (-1, 1)}


def corner_labels(num_vars: int, frame: Frame) -> Dict[str, LaurentPoly]:
    labels = {}
    for corner, (sj, sk) in LABEL_SIGNS.items():
        exps = [0] * num_vars
        exps[frame.j - 1] += sj * frame.sign
        exps[frame.k - 1] += sk * frame.sign
        labels[corner] = LaurentPoly.monomial(num_vars, exps)
    return labels


class LabelMatrix(RegionMatrix):
    """Rows are crossings, columns are regions."""

    kind = "K"

    def __init__(self, num_vars: int, crossing_order: Sequence[int], region_order: Sequence[int],
                 entries: Sequence[Sequence[LaurentPoly]]):
        super().__init__(region_order)
        self.num_vars = num_vars
        self.crossing_order: Tuple[int, ...] = tuple(crossing_order)
        self.entries: Tuple[Tuple[LaurentPoly, ...], ...] = tuple(tuple(row) for row in entries)
        if len(self.entries) != len(self.crossing_order) or any(len(row) != self.dim for row in self.entries):
            raise ValueError("entries do not match the crossing and region orders")

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.crossing_order), self.dim

    def __getitem__(self, key: Tuple[int, int]) -> LaurentPoly:
        v, p = key
        return self.entries[v][p]

    def rows(self) -> List[List[LaurentPoly]]:
        return [list(row) for row in self.entries]

    def without_regions(self, regions: Iterable[int]) -> "LabelMatrix":
        keep, order = self._kept_positions(regions)
        return LabelMatrix(self.num_vars, self.crossing_order, order,
                           [[row[p] for p in keep] for row in self.entries])

    def to_json(self) -> Dict:
        return {
            "kind": self.kind,
            "crossing_order": list(self.crossing_order),
            "region_order": list(self.region_order),
            "entries": [[value.to_string() for value in row] for row in self.entries],
        }


def build_K(d: ColoredDiagram, r: Optional[RegionMap] = None) -> LabelMatrix:
    """Labels of the four corners of every crossing; a region meeting a crossing at two corners gets the sum."""
    regions = r if r is not None else d.regions
    n = d.num_colors
    zero = LaurentPoly.zero(n)
    entries = [[zero] * len(regions) for _ in d.crossings]
    for v, frame in enumerate(d.frames):
        labels = corner_labels(n, frame)
        for corner in ("a", "b", "c", "d"):
            region = getattr(frame, corner)
            entries[v][region] = entries[v][region] + labels[corner]
    return LabelMatrix(n, range(d.num_crossings), range(len(regions)), entries)


class ClaspDiagonal:
    """S_vv = -4 sgn(v) / ((t_j - t_j^-1)(t_k - t_k^-1))."""

    def __init__(self, num_vars: int, signs: Sequence[int], colors: Sequence[Tuple[int, int]]):
        self.num_vars = num_vars
        self.signs = tuple(signs)
        self.colors = tuple(colors)
        self.entries: Tuple[RationalFn, ...] = tuple(
            RationalFn(LaurentPoly.constant(num_vars, -4 * s), clasp_denominator(num_vars, j, k))
            for s, (j, k) in zip(self.signs, self.colors))

    def __len__(self) -> int:
        return len(self.entries)

    def determinant(self) -> RationalFn:
        total = RationalFn(LaurentPoly.one(self.num_vars))
        for entry in self.entries:
            total = total * entry
        return total

    def inverse_determinant(self) -> LaurentPoly:
        """prod over v of -sgn(v) (t_j - t_j^-1)(t_k - t_k^-1) / 4."""
        total = LaurentPoly.one(self.num_vars)
        for s, (j, k) in zip(self.signs, self.colors):
            total = total * clasp_denominator(self.num_vars, j, k).scale(Fraction(-s, 4))
        return total


def clasp_diagonal(d: ColoredDiagram) -> ClaspDiagonal:
    return ClaspDiagonal(d.num_colors, [c.sign for c in d.crossings], [(c.j, c.k) for c in d.crossings])


def label_product(K: LabelMatrix, S: ClaspDiagonal) -> SymbolicSymMatrix:
    """K^T S K, with entries grouped over the clasp denominators."""
    if len(S) != len(K.crossing_order):
        raise ValueError(f"S has {len(S)} entries, K has {len(K.crossing_order)} rows")
    n = K.num_vars
    numerators: Dict[Tuple[int, int], Dict[Tuple[int, int], LaurentPoly]] = {}
    for v, row in enumerate(K.entries):
        j, k = S.colors[v]
        key = (min(j, k), max(j, k))
        support = [p for p, value in enumerate(row) if value]
        for i, p in enumerate(support):
            for q in support[i:]:
                value = (row[p] * row[q]).scale(-4 * S.signs[v])
                cell = numerators.setdefault((p, q), {})
                cell[key] = cell[key] + value if key in cell else value

    zero = RationalFn(LaurentPoly.zero(n))
    entries = [[zero] * K.dim for _ in range(K.dim)]
    for (p, q), groups in numerators.items():
        total = zero
        for (j, k), numerator in sorted(groups.items()):
            if numerator:
                total = total + RationalFn(numerator, clasp_denominator(n, j, k))
        entries[p][q] = entries[q][p] = total
    return SymbolicSymMatrix(n, K.region_order, entries)


