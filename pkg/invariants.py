# invariants.py
"""Signature, nullity, Conway function and Alexander polynomial of a colored link
read off the matrices of a colored diagram."""
import csv
import itertools
import logging
import math
from typing import IO, Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg
from joblib import Parallel, delayed
from pydantic import BaseModel

import settings
from diagram import (ColoredDiagram, color_by_components, linking_matrix, linking_number, merge_colors,
                     monochromatic_writhe, parse_pd, require_connected)
from errors import (ColoringError, ConsistencyAlarm, ParityViolationError, RouteMismatchError,
                    VariableMismatchError)
from laurent import LaurentPoly, RationalFn, TorusPoint
from matrices.base_matrix import delete_marked
from matrices.labels import LabelMatrix, build_K, clasp_diagonal
from matrices.tau import RealSymMatrix, SymbolicSymMatrix, build_tau_numeric, build_tau_symbolic, q_factor
from matrices.utils import bareiss_determinant, cancel_common_factors, rational_determinant

logger = logging.getLogger(__name__)

INERTIA_METHODS = ("eigh", "ldl")


class Inertia(BaseModel):
    n_pos: int
    n_neg: int
    n_zero: int
    threshold: float
    smallest_nonzero: Optional[float] = None

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero

    @property
    def signature(self) -> int:
        return self.n_pos - self.n_neg


class SignatureResult(BaseModel):
    point: TorusPoint
    sigma: int
    eta: int
    inertia: Inertia
    near_degenerate: bool


class ConwayReport(BaseModel):
    num_colors: int
    nabla_up_to_sign: str
    nabla_sq: str
    alexander: str
    alexander_terms: List[Dict[str, Any]]
    det_K: str
    consistency_ok: bool


class MergeReport(BaseModel):
    status: Literal["pass", "fail", "skipped"]
    colors: Tuple[int, int]
    point: TorusPoint
    merged_sigma: Optional[int] = None
    original_sigma: Optional[int] = None
    linking_sum: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class DiagramInfo(BaseModel):
    crossings: int
    regions: int
    components: int
    colors: int
    signs: List[int]
    w_m: int
    linking_numbers: List[List[int]]
    mark: int
    connected: bool


class ConwayResult:
    """Both determinant routes for the Conway function of a connected diagram."""

    def __init__(self, num_vars: int, nabla_sq: RationalFn, nabla_up_to_sign: RationalFn,
                 alexander: LaurentPoly, det_K: LaurentPoly, consistency_ok: bool):
        self.num_vars = num_vars
        self.nabla_sq = nabla_sq
        self.nabla_up_to_sign = nabla_up_to_sign
        self.alexander = alexander
        self.det_K = det_K
        self.consistency_ok = consistency_ok

    def to_report(self) -> ConwayReport:
        return ConwayReport(
            num_colors=self.num_vars,
            nabla_up_to_sign=self.nabla_up_to_sign.to_string(),
            nabla_sq=self.nabla_sq.to_string(),
            alexander=self.alexander.to_string(),
            alexander_terms=self.alexander.to_json(),
            det_K=self.det_K.to_string(),
            consistency_ok=self.consistency_ok,
        )


# --- Numeric side ---

def _count(values: np.ndarray, threshold: float) -> Inertia:
    magnitudes = np.abs(values)
    nonzero = magnitudes[magnitudes > threshold]
    return Inertia(
        n_pos=int(np.sum(values > threshold)),
        n_neg=int(np.sum(values < -threshold)),
        n_zero=int(np.sum(magnitudes <= threshold)),
        threshold=threshold,
        smallest_nonzero=float(nonzero.min()) if nonzero.size else None,
    )


def inertia(m: Union[RealSymMatrix, np.ndarray], tol: Optional[float] = None, method: str = "eigh") -> Inertia:
    """(n_pos, n_neg, n_zero) with zero threshold tol * max(1, largest |eigenvalue|)."""
    tol_rel = settings.tolerance(tol)
    entries = m.entries if isinstance(m, RealSymMatrix) else np.asarray(m, dtype=float)
    if entries.size == 0:
        return Inertia(n_pos=0, n_neg=0, n_zero=0, threshold=tol_rel)
    if not np.all(np.isfinite(entries)):
        raise ValueError("matrix has non-finite entries")

    if method == "eigh":
        values = np.linalg.eigvalsh(entries)
        scale = max(1.0, float(np.max(np.abs(values))))
    elif method == "ldl":
        # Sylvester: the block-diagonal factor has the inertia of the matrix.
        _, block_diagonal, _ = scipy.linalg.ldl(entries, lower=True)
        values = np.linalg.eigvalsh(block_diagonal)
        scale = max(1.0, float(np.linalg.norm(entries, 2)))
    else:
        raise ValueError(f"unknown inertia method {method!r}; expected one of {INERTIA_METHODS}")
    return _count(values, tol_rel * scale)


def _near_degenerate(result: Inertia) -> bool:
    if result.smallest_nonzero is None:
        return False
    return result.smallest_nonzero <= settings.NEAR_DEGENERATE_FACTOR * result.threshold


def _check_point(d: ColoredDiagram, p: TorusPoint) -> None:
    if p.num_vars != d.num_colors:
        raise VariableMismatchError(
            f"point has {p.num_vars} angles but the diagram has {d.num_colors} colors",
            expected=d.num_colors, got=p.num_vars)


def reduced_tau_numeric(d: ColoredDiagram, p: TorusPoint) -> RealSymMatrix:
    _check_point(d, p)
    return delete_marked(build_tau_numeric(d, d.regions, p), d)


def signature_at(d: ColoredDiagram, p: TorusPoint, tol: Optional[float] = None,
                 method: str = "eigh") -> SignatureResult:
    counts = inertia(reduced_tau_numeric(d, p), tol, method)
    near = _near_degenerate(counts)
    w_m = monochromatic_writhe(d)
    excess = counts.n_pos - counts.n_neg - w_m
    if excess % 2 or counts.n_zero % 2:
        raise ParityViolationError(
            f"inertia ({counts.n_pos}, {counts.n_neg}, {counts.n_zero}) with w_m = {w_m} breaks parity "
            f"at {p.thetas}", near_degenerate=near, point=list(p.thetas))
    if near:
        logger.warning(f"[Signature] eigenvalue {counts.smallest_nonzero:.3e} is close to the threshold at {p.thetas}")
    return SignatureResult(point=p, sigma=excess // 2, eta=counts.n_zero // 2, inertia=counts, near_degenerate=near)


def grid_points(num_vars: int, resolution: int) -> List[TorusPoint]:
    """Open uniform grid theta = 2 pi k / (N + 1), k = 1..N per axis, row-major."""
    if resolution < 1:
        raise ValueError(f"grid resolution must be positive, got {resolution}")
    axis = [2.0 * math.pi * k / (resolution + 1) for k in range(1, resolution + 1)]
    return [TorusPoint.of(*thetas) for thetas in itertools.product(axis, repeat=num_vars)]


def _grid_chunk(pd_text: str, points: Sequence[TorusPoint], tol: Optional[float], method: str) -> List[SignatureResult]:
    d = parse_pd(pd_text)
    return [signature_at(d, p, tol, method) for p in points]


def signature_grid(d: ColoredDiagram, resolution: int = settings.DEFAULT_GRID_RESOLUTION,
                   jobs: Optional[int] = None, tol: Optional[float] = None,
                   method: str = "eigh") -> List[SignatureResult]:
    points = grid_points(d.num_colors, resolution)
    workers = settings.grid_jobs(jobs)
    logger.info(f"[Grid] {len(points)} points on {workers} worker(s)")
    if workers == 1:
        return [signature_at(d, p, tol, method) for p in points]
    # Workers rebuild the diagram from its PD text.
    pd_text = d.to_pd_text()
    chunks = [points[i::workers] for i in range(workers)]
    parts = Parallel(n_jobs=workers)(delayed(_grid_chunk)(pd_text, chunk, tol, method) for chunk in chunks)
    by_point = {result.point.thetas: result for part in parts for result in part}
    return [by_point[p.thetas] for p in points]


def write_grid_csv(results: Sequence[SignatureResult], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    num_vars = results[0].point.num_vars if results else 0
    writer.writerow([f"theta{i}" for i in range(1, num_vars + 1)] + ["sigma", "eta", "near_degenerate"])
    for result in results:
        writer.writerow([repr(theta) for theta in result.point.thetas]
                        + [result.sigma, result.eta, str(result.near_degenerate).lower()])


def det_sign_change_between(d: ColoredDiagram, p: TorusPoint, q: TorusPoint,
                            depth: int = settings.DET_REFINEMENT_DEPTH) -> bool:
    """True when det tau~(omega) vanishes or changes sign somewhere on the segment p -> q."""
    _check_point(d, p)
    _check_point(d, q)
    start, stop = np.asarray(p.thetas), np.asarray(q.thetas)
    previous = 0
    for s in np.linspace(0.0, 1.0, 2 ** depth + 1):
        point = TorusPoint(thetas=tuple(float(x) for x in start + s * (stop - start)))
        sign, _ = np.linalg.slogdet(reduced_tau_numeric(d, point).entries)
        if sign == 0:
            return True
        if previous and sign != previous:
            return True
        previous = sign
    return False


def xi_invariant(d: ColoredDiagram, tol: Optional[float] = None) -> int:
    """Signature at (-1, ..., -1) with every component in its own color."""
    split = color_by_components(d)
    result = signature_at(split, TorusPoint.of(*([math.pi] * split.num_colors)), tol)
    if result.eta:
        logger.warning(f"[Xi] nullity {result.eta} at (-1, ..., -1)")
    return result.sigma


# --- Symbolic side ---

def det_symbolic(m: Union[SymbolicSymMatrix, LabelMatrix]) -> Union[RationalFn, LaurentPoly]:
    if isinstance(m, LabelMatrix):
        rows, cols = m.shape
        if rows != cols:
            raise ValueError(f"determinant of a {rows}x{cols} label matrix")
        return bareiss_determinant(m.entries, m.num_vars)
    return rational_determinant(m.entries, m.num_vars)


def _canonical_sign(value: RationalFn) -> RationalFn:
    if value.numerator and value.numerator.leading_coefficient() < 0:
        return -value
    return value


def alexander_from(source: LaurentPoly) -> LaurentPoly:
    """Substitute t_i^2 -> t_i in a polynomial of the form Delta(t^2) up to units, then symmetrize."""
    if not source:
        return source
    shifted = source.shift(tuple(-e for e in source.min_exponents()))
    if any(e % 4 for exps, _ in shifted.items() for e in exps):
        raise ConsistencyAlarm(f"{source} is not a polynomial in t_i^2 up to a unit")
    return shifted.contract_exponents(2).centered().with_positive_lead()


def conway(d: ColoredDiagram, strict: bool = True) -> ConwayResult:
    """Route A: det K~ / (t1 - t1^-1). Route B: the squared Conway function from det tau~(t^2)."""
    require_connected(d)
    n = d.num_colors
    q1 = q_factor(n, 1)

    det_k = det_symbolic(delete_marked(build_K(d), d))
    if n >= 2:
        nabla = RationalFn(det_k.exact_div(q1))
    else:
        nabla = RationalFn(det_k, q1)
    nabla = _canonical_sign(nabla)

    det_tau = det_symbolic(delete_marked(build_tau_symbolic(d), d))
    prefactor = RationalFn(clasp_diagonal(d).inverse_determinant(), q1 * q1)
    nabla_sq = cancel_common_factors(prefactor * det_tau)

    consistent = nabla * nabla == nabla_sq
    if not consistent:
        logger.error(f"[Conway] routes disagree: ({nabla})^2 != {nabla_sq}")
        if strict:
            raise RouteMismatchError("determinant routes disagree on the squared Conway function",
                                     route_a=nabla.to_string(), route_b=nabla_sq.to_string())

    alexander = alexander_from(det_k if n == 1 else nabla.as_laurent())
    logger.info(f"[Conway] nabla = +-({nabla}), Delta = {alexander}")
    return ConwayResult(n, nabla_sq, nabla, alexander, det_k, consistent)


# --- Cross-checks ---

def check_color_merge(d: ColoredDiagram, c1: int, c2: int, p: TorusPoint,
                      tol: Optional[float] = None) -> MergeReport:
    """Compare sigma of the merged link at p with sigma of d at the lifted point minus the linking sum."""
    if d.num_colors < 2:
        raise ColoringError("merging colors needs at least two colors")
    merged = merge_colors(d, c1, c2)
    _check_point(merged, p)

    # Original color c lands on merged color lift[c].
    survivors = sorted({c1 if c == c2 else c for c in range(1, d.num_colors + 1)})
    renumber = {old: new for new, old in enumerate(survivors, start=1)}
    lifted = TorusPoint.of(*(p.thetas[renumber[c1 if c == c2 else c] - 1] for c in range(1, d.num_colors + 1)))

    linking_sum = sum(linking_number(d, a.index, b.index)
                      for a in d.components if a.color == c1
                      for b in d.components if b.color == c2)
    report = dict(colors=(c1, c2), point=p, linking_sum=linking_sum)
    try:
        original = signature_at(d, lifted, tol)
        reduced = signature_at(merged, p, tol)
    except ParityViolationError as exc:
        return MergeReport(status="skipped", detail=exc.message, **report)
    if original.near_degenerate or reduced.near_degenerate or original.eta or reduced.eta:
        return MergeReport(status="skipped", original_sigma=original.sigma, merged_sigma=reduced.sigma,
                           detail="point lies on or near a nullity locus", **report)
    status = "pass" if reduced.sigma == original.sigma - linking_sum else "fail"
    return MergeReport(status=status, original_sigma=original.sigma, merged_sigma=reduced.sigma,
                       detail=f"{reduced.sigma} vs {original.sigma} - {linking_sum}", **report)


def diagram_info(d: ColoredDiagram) -> DiagramInfo:
    return DiagramInfo(
        crossings=d.num_crossings,
        regions=len(d.regions),
        components=len(d.components),
        colors=d.num_colors,
        signs=[c.sign for c in d.crossings],
        w_m=monochromatic_writhe(d),
        linking_numbers=linking_matrix(d),
        mark=d.marked_edge,
        connected=d.is_connected(),
    )
