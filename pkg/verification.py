# verification.py
"""Golden values, randomized properties and oracle comparisons run by `verify`."""
import logging
import math
import random
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from corpus import CORPUS, load_diagram, random_diagram
from diagram import ColoredDiagram, merge_colors, relabel_edges
from errors import KashaevError
from invariants import (check_color_merge, conway, det_sign_change_between, det_symbolic, grid_points,
                        reduced_tau_numeric, signature_at)
from laurent import LaurentPoly, RationalFn, TorusPoint, compare_up_to_units
from matrices.base_matrix import delete_marked
from matrices.labels import build_K, clasp_diagonal, label_product
from matrices.tau import build_tau_symbolic, q_factor
from matrices.utils import match_rectangular, match_symmetric
from oracle import alexander_via_fox, wirtinger

logger = logging.getLogger(__name__)

DEFAULT_RANDOM_DIAGRAMS = 25
DEFAULT_SEED = 20231
POINTS_PER_DIAGRAM = 5
MERGE_DIAGRAMS = 5
MAX_MERGE_SAMPLES = 200
MAX_POINT_SAMPLES = 50
NUMERIC_MATCH_TOL = 1e-9


class CheckResult(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str


# --- Golden data for the two-component example link (corpus/clasp_kink.pd) ---

def _p(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text, 2)


def clasp_kink_tau_golden() -> List[List[RationalFn]]:
    """tau_D(t^2), rows and columns in the alphabetical region order a..g."""
    x1, x2 = _p("1/2*t1 + 1/2*t1^-1"), _p("1/2*t2 + 1/2*t2^-1")
    x12 = _p("1/2*t1*t2 + 1/2*t1^-1*t2^-1")
    bb4 = (x1 * x2 * 2 - x12) * 4
    one, zero = _p("1"), _p("0")
    bichromatic = [
        [bb4, x2 * 2, x1 * 2, x2 * 2, one * 4, zero, x1 * 2],
        [x2 * 2, x12 * 2, one, zero, x1 * 2, zero, one],
        [x1 * 2, one, x12 * 2, one, x2 * 2, zero, zero],
        [x2 * 2, zero, one, x12 * 2, x1 * 2, zero, one],
        [one * 4, x1 * 2, x2 * 2, x1 * 2, bb4, zero, x2 * 2],
        [zero] * 7,
        [x1 * 2, one, zero, one, x2 * 2, zero, x12 * 2],
    ]
    monochromatic = {(4, 4): one, (4, 5): one, (4, 6): x1 * 2, (5, 5): one, (5, 6): x1 * 2, (6, 6): x1 * x1 * 4}
    q1, q2 = q_factor(2, 1), q_factor(2, 2)
    outer = RationalFn(_p("-4"), q1 * q2)
    kink = RationalFn(_p("4"), q1 * q1)
    rows = []
    for p in range(7):
        row = []
        for q in range(7):
            value = outer * bichromatic[p][q]
            extra = monochromatic.get((min(p, q), max(p, q)))
            if extra is not None:
                value = value + kink * extra
            row.append(value)
        rows.append(row)
    return rows


def clasp_kink_K_golden() -> List[List[LaurentPoly]]:
    u, v = "t1^(1/2)", "t2^(1/2)"
    ui, vi = "t1^(-1/2)", "t2^(-1/2)"
    o = "0"
    table = [
        [f"{ui}*{v}", f"{u}*{v}", o, o, f"{u}*{vi}", o, f"{ui}*{vi}"],
        [f"{u}*{vi}", f"{ui}*{vi}", f"{u}*{v}", o, f"{ui}*{v}", o, o],
        [f"{ui}*{v}", o, f"{ui}*{vi}", f"{u}*{v}", f"{u}*{vi}", o, o],
        [f"{u}*{vi}", o, o, f"{ui}*{vi}", f"{ui}*{v}", o, f"{u}*{v}"],
        [o, o, o, o, "1", "1", "t1 + t1^-1"],
    ]
    return [[_p(cell) for cell in row] for row in table]


def clasp_kink_det_golden() -> RationalFn:
    q1, q2 = q_factor(2, 1), q_factor(2, 2)
    clasp = RationalFn(_p("-4"), q1 * q2)
    tail = q1 * q2 * _p("t1*t2 + t1^-1*t2^-1") ** 2
    return -(clasp ** 5) * RationalFn(tail)


CLASP_KINK_TAU_AT_MINUS_ONE = np.array([
    [4, 0, 0, 0, 4],
    [0, -2, 1, 0, 0],
    [0, 1, -2, 1, 0],
    [0, 0, 1, -2, 0],
    [4, 0, 0, 0, 3],
], dtype=float)

CLASP_KINK_NABLA = "t1*t2 + t1^-1*t2^-1"


def clasp_kink_sigma(point: TorusPoint) -> int:
    """-sign Re((1 - w1)(1 - w2)) away from w1 w2 = -1."""
    w1, w2 = point.omegas()
    return -int(np.sign(((1 - w1) * (1 - w2)).real))


def _close(x, y) -> bool:
    return abs(x - y) <= NUMERIC_MATCH_TOL


class Verifier:
    """Runs the verification suites; each check yields a CheckResult instead of raising."""

    def __init__(self, random_count: int = DEFAULT_RANDOM_DIAGRAMS, seed: int = DEFAULT_SEED,
                 max_crossings: int = 8, tol: Optional[float] = None):
        self.random_count = random_count
        self.seed = seed
        self.max_crossings = max_crossings
        self.tol = tol
        self.results: List[CheckResult] = []

    def _run(self, suite: str, name: str, check: Callable[[], Tuple[bool, str]]) -> CheckResult:
        try:
            passed, detail = check()
        except KashaevError as exc:
            passed, detail = False, f"{exc.kind}: {exc.message}"
        result = CheckResult(suite, name, passed, detail)
        self.results.append(result)
        level = logging.INFO if passed else logging.WARNING
        logger.log(level, f"  - [{suite}] {name}: {'ok' if passed else 'FAILED'} {detail}")
        return result

    def _random_diagrams(self, num_colors: int, salt: int) -> List[ColoredDiagram]:
        rng = random.Random(self.seed * 7919 + salt)
        return [random_diagram(rng, self.max_crossings, num_colors) for _ in range(self.random_count)]

    def _random_points(self, rng: random.Random, num_vars: int, count: int) -> List[TorusPoint]:
        return [TorusPoint.of(*(rng.uniform(0.05, 2 * math.pi - 0.05) for _ in range(num_vars)))
                for _ in range(count)]

    # --- Suites ---

    def golden(self) -> None:
        d = load_diagram("clasp_kink")

        def tau_matrix():
            perm = match_symmetric(build_tau_symbolic(d).entries, clasp_kink_tau_golden())
            return perm is not None, f"region permutation {perm}"

        def label_matrix():
            match = match_rectangular(build_K(d).entries, clasp_kink_K_golden())
            return match is not None, f"row/column permutations {match}"

        def determinant():
            det = det_symbolic(delete_marked(build_tau_symbolic(d), d))
            return det == clasp_kink_det_golden(), str(det)

        def numeric_matrix():
            tilde = reduced_tau_numeric(d, TorusPoint.of(math.pi, math.pi))
            perm = match_symmetric(tilde.entries.tolist(), CLASP_KINK_TAU_AT_MINUS_ONE.tolist(), _close)
            return perm is not None, f"region permutation {perm}"

        def signature_minus_one():
            result = signature_at(d, TorusPoint.of(math.pi, math.pi), self.tol)
            sign = result.inertia.signature
            return (result.sigma, result.eta, sign) == (-1, 0, -3), f"sigma={result.sigma} eta={result.eta} sign={sign}"

        def signature_grid_closed_form():
            bad = []
            for point in grid_points(2, 16):
                result = signature_at(d, point, self.tol)
                if result.eta != 0 or result.sigma != clasp_kink_sigma(point):
                    bad.append(point.thetas)
            return not bad, f"{len(bad)} mismatching points" if bad else "256 points"

        def nullity_on_locus():
            etas = []
            for theta in np.linspace(0.3, math.pi - 0.3, 8):
                etas.append(signature_at(d, TorusPoint.of(theta, math.pi - theta), self.tol).eta)
            return all(eta == 1 for eta in etas), f"eta values {etas}"

        def conway_value():
            result = conway(d, strict=False)
            expected = RationalFn(_p(CLASP_KINK_NABLA))
            ok = result.consistency_ok and (result.nabla_up_to_sign == expected or result.nabla_up_to_sign == -expected)
            return ok, f"nabla = +-({result.nabla_up_to_sign}), routes agree: {result.consistency_ok}"

        for name, check in (("tau matches the printed matrix", tau_matrix),
                            ("K matches the printed matrix", label_matrix),
                            ("det of reduced tau(t^2)", determinant),
                            ("reduced tau at (-1, -1)", numeric_matrix),
                            ("signature at (-1, -1)", signature_minus_one),
                            ("signature closed form on a 16x16 grid", signature_grid_closed_form),
                            ("nullity on w1 w2 = -1", nullity_on_locus),
                            ("Conway function by both routes", conway_value)):
            self._run("golden", name, check)

    def classical(self) -> None:
        def trefoil():
            d = load_diagram("trefoil_right")
            alexander = conway(d).alexander
            sigma = signature_at(d, TorusPoint.of(math.pi), self.tol).sigma
            ok = compare_up_to_units(alexander, LaurentPoly.parse("t1 - 1 + t1^-1", 1)) and sigma == -2
            return ok, f"Delta = {alexander}, sigma(-1) = {sigma}"

        def unknot():
            d = load_diagram("unknot")
            result = signature_at(d, TorusPoint.of(math.pi), self.tol)
            alexander = conway(d).alexander
            ok = (result.sigma, result.eta) == (0, 0) and alexander == 1
            return ok, f"sigma={result.sigma} eta={result.eta} Delta={alexander}"

        def hopf():
            d = load_diagram("hopf")
            values = {(r.sigma, r.eta) for r in (signature_at(d, p, self.tol) for p in grid_points(2, 3))}
            alexander = conway(d).alexander
            ok = values == {(0, 0)} and compare_up_to_units(alexander, LaurentPoly.one(2))
            return ok, f"(sigma, eta) values {sorted(values)}, Delta = {alexander}"

        def split_nullity():
            d = load_diagram("split_unknots")
            etas = {signature_at(d, p, self.tol).eta for p in grid_points(2, 4)}
            return min(etas) >= 1, f"eta values {sorted(etas)}"

        for name, check in (("right trefoil", trefoil), ("unknot", unknot), ("positive Hopf link", hopf),
                            ("split unknots have nullity", split_nullity)):
            self._run("classical", name, check)

    def properties(self) -> None:
        rng = random.Random(self.seed)
        diagrams = self._random_diagrams(1, 1) + self._random_diagrams(2, 2)
        for index, d in enumerate(diagrams):
            label = f"random #{index} ({d.num_crossings} crossings, {d.num_colors} colors)"
            tau = build_tau_symbolic(d)

            def factorization(d=d, tau=tau):
                product = label_product(build_K(d), clasp_diagonal(d))
                return all(a == b for ra, rb in zip(tau.entries, product.entries) for a, b in zip(ra, rb)), ""

            def symmetry(tau=tau):
                return all(a == b for ra, rb in zip(tau.entries, tau.phi().entries) for a, b in zip(ra, rb)), ""

            def routes(d=d):
                result = conway(d, strict=False)
                return result.consistency_ok, f"nabla = +-({result.nabla_up_to_sign})"

            def parity(d=d):
                points = self._random_points(rng, d.num_colors, POINTS_PER_DIAGRAM)
                values = [(r.sigma, r.eta) for r in (signature_at(d, p, self.tol) for p in points)]
                return True, f"(sigma, eta) = {values}"

            def euler(d=d):
                return len(d.regions) == d.num_crossings + 2, f"{len(d.regions)} regions"

            def relabeling(d=d):
                edges = list(d.edges)
                shuffled = edges[:]
                rng.shuffle(shuffled)
                copy = relabel_edges(d, dict(zip(edges, shuffled)))
                point = self._random_points(rng, d.num_colors, 1)[0]
                a, b = signature_at(d, point, self.tol), signature_at(copy, point, self.tol)
                return (a.sigma, a.eta) == (b.sigma, b.eta), f"{(a.sigma, a.eta)} vs {(b.sigma, b.eta)}"

            def local_constancy(d=d):
                p, q = self._random_points(rng, d.num_colors, 2)
                a, b = signature_at(d, p, self.tol), signature_at(d, q, self.tol)
                if a.eta or b.eta or a.near_degenerate or b.near_degenerate:
                    return True, "endpoint on or near a nullity locus"
                # Without a determinant sign change n_neg keeps its parity.
                if not det_sign_change_between(d, p, q) and (a.sigma - b.sigma) % 2:
                    return False, f"sigma {a.sigma} -> {b.sigma} with no determinant sign change"
                # Weyl: a perturbation smaller than the smallest |eigenvalue| keeps the inertia.
                step = TorusPoint.of(*(theta + 1e-4 for theta in p.thetas))
                gap = float(np.linalg.norm(reduced_tau_numeric(d, p).entries - reduced_tau_numeric(d, step).entries, 2))
                smallest = a.inertia.smallest_nonzero
                if smallest is not None and gap < smallest and signature_at(d, step, self.tol).sigma != a.sigma:
                    return False, f"sigma changed within a perturbation of norm {gap:.2e}"
                return True, f"sigma {a.sigma} -> {b.sigma}"

            self._run("properties", f"{label}: tau = K^T S K", factorization)
            self._run("properties", f"{label}: tau invariant under t -> 1/t", symmetry)
            self._run("properties", f"{label}: route A squared = route B", routes)
            self._run("properties", f"{label}: parity of inertia", parity)
            self._run("properties", f"{label}: region count", euler)
            self._run("properties", f"{label}: invariant under edge relabeling", relabeling)
            self._run("properties", f"{label}: signature locally constant", local_constancy)

    def _generic_merge_diagrams(self) -> List[ColoredDiagram]:
        """Random 2-colored diagrams whose link and merged link both have a nonzero Conway function."""
        rng = random.Random(self.seed * 7919 + 3)
        found: List[ColoredDiagram] = []
        for attempt in range(MAX_MERGE_SAMPLES):
            d = random_diagram(rng, self.max_crossings, 2)
            try:
                # A vanishing Conway function means eta >= 1 on the whole torus.
                generic = bool(conway(d, strict=False).nabla_sq) and bool(
                    conway(merge_colors(d, 1, 2), strict=False).nabla_sq)
            except KashaevError as exc:
                logger.warning(f"[Merge] sample {attempt} rejected: {exc.kind}")
                continue
            if generic:
                found.append(d)
                if len(found) == MERGE_DIAGRAMS:
                    break
        logger.info(f"[Merge] {len(found)} generic diagrams after {attempt + 1} samples")
        return found

    def color_merge(self) -> None:
        rng = random.Random(self.seed + 1)
        cases = [("clasp_kink", load_diagram("clasp_kink"))]
        cases += [(f"random #{i}", d) for i, d in enumerate(self._generic_merge_diagrams())]
        checked = 0
        for name, d in cases:
            generic = 0
            for _ in range(MAX_POINT_SAMPLES):
                if generic == POINTS_PER_DIAGRAM:
                    break
                point = self._random_points(rng, 1, 1)[0]
                try:
                    report = check_color_merge(d, 1, 2, point, self.tol)
                except KashaevError as exc:
                    self._run("color merge", f"{name} at theta={point.thetas[0]:.4f}",
                              lambda exc=exc: (False, f"{exc.kind}: {exc.message}"))
                    break
                if report.status == "skipped":
                    continue
                generic += 1
                self._run("color merge", f"{name} at theta={point.thetas[0]:.4f}",
                          lambda report=report: (report.passed, report.detail))
            if generic < POINTS_PER_DIAGRAM:
                self._run("color merge", f"{name} generic points",
                          lambda generic=generic: (False, f"{generic} of {POINTS_PER_DIAGRAM} points are generic"))
            elif name.startswith("random"):
                checked += 1
        self._run("color merge", "random diagrams checked",
                  lambda: (checked >= MERGE_DIAGRAMS, f"{checked} of {MERGE_DIAGRAMS}"))

    def oracle(self) -> None:
        cases = [(name, load_diagram(name)) for name, entry in CORPUS.items()
                 if entry.connected and load_diagram(name).num_crossings > 0]
        rng = random.Random(self.seed + 2)
        cases += [(f"random #{i}", random_diagram(rng, self.max_crossings, 1 + i % 2))
                  for i in range(self.random_count)]
        for name, d in cases:
            def agreement(d=d):
                fox = alexander_via_fox(wirtinger(d))
                main = conway(d).alexander
                return compare_up_to_units(fox, main), f"Fox {fox} vs Conway route {main}"

            self._run("oracle", name, agreement)

    def run_all(self, suites: Optional[Sequence[str]] = None) -> List[CheckResult]:
        available = {
            "golden": self.golden,
            "classical": self.classical,
            "properties": self.properties,
            "merge": self.color_merge,
            "oracle": self.oracle,
        }
        for suite in suites or available:
            available[suite]()
        return self.results


SUITES = ("golden", "classical", "properties", "merge", "oracle")
