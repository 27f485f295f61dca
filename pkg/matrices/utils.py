# matrices/utils.py
"""Exact determinants over the Laurent ring and permutation matching of matrices."""
import json
import logging
from collections import Counter
from typing import Callable, List, Optional, Sequence, Tuple

from errors import NonExactDivisionError
from laurent import LaurentPoly, RationalFn

logger = logging.getLogger(__name__)


def bareiss_determinant(matrix: Sequence[Sequence[LaurentPoly]], num_vars: int) -> LaurentPoly:
    """Fraction-free elimination; every division is exact by Sylvester's identity."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        return LaurentPoly.one(num_vars)

    a = [list(row) for row in matrix]
    sign = 1
    previous = LaurentPoly.one(num_vars)
    for k in range(size - 1):
        candidates = [i for i in range(k, size) if a[i][k]]
        if not candidates:
            return LaurentPoly.zero(num_vars)
        pivot_row = min(candidates, key=lambda i: len(a[i][k]))
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            factor = a[i][k]
            for j in range(k + 1, size):
                value = pivot * a[i][j]
                if factor and a[k][j]:
                    value = value - factor * a[k][j]
                a[i][j] = value.exact_div(previous)
        previous = pivot
    det = a[size - 1][size - 1]
    return det if sign > 0 else -det


def factor_base(num_vars: int) -> List[LaurentPoly]:
    """The normalized clasp factors t_c^2 - 1, one per color."""
    return [LaurentPoly.variable(num_vars, c, 4) - 1 for c in range(1, num_vars + 1)]


def _split_off(poly: LaurentPoly, base: Sequence[LaurentPoly]) -> Tuple[List[int], LaurentPoly]:
    counts = []
    rest = poly
    for factor in base:
        count = 0
        while not rest.is_constant():
            try:
                rest = rest.exact_div(factor)
            except NonExactDivisionError:
                break
            count += 1
        counts.append(count)
    return counts, rest


def common_denominator(values: Sequence[RationalFn]) -> LaurentPoly:
    """A common multiple of the denominators, lcm-tight on the clasp factors."""
    if not values:
        raise ValueError("no values")
    num_vars = values[0].num_vars
    base = factor_base(num_vars)
    powers = [0] * num_vars
    extras: List[LaurentPoly] = []
    for value in values:
        if not value.numerator or value.denominator.is_constant():
            continue
        counts, rest = _split_off(value.denominator, base)
        powers = [max(p, c) for p, c in zip(powers, counts)]
        if not rest.is_constant() and not any(e == rest for e in extras):
            extras.append(rest)
    total = LaurentPoly.one(num_vars)
    for factor, power in zip(base, powers):
        total = total * factor ** power
    for extra in extras:
        total = total * extra
    return total


def cancel_common_factors(value: RationalFn) -> RationalFn:
    """Remove clasp factors shared by numerator and denominator, then try plain division."""
    num, den = value.numerator, value.denominator
    if not num or den.is_constant():
        return value
    for factor in factor_base(value.num_vars):
        while not den.is_constant():
            try:
                reduced_den = den.exact_div(factor)
                reduced_num = num.exact_div(factor)
            except NonExactDivisionError:
                break
            num, den = reduced_num, reduced_den
    try:
        return RationalFn(num.exact_div(den))
    except NonExactDivisionError:
        return RationalFn(num, den)


def rational_determinant(matrix: Sequence[Sequence[RationalFn]], num_vars: int) -> RationalFn:
    """Clear each row's denominators, run Bareiss, divide back."""
    rows: List[List[LaurentPoly]] = []
    scale = LaurentPoly.one(num_vars)
    for row in matrix:
        multiplier = common_denominator(row) if row else LaurentPoly.one(num_vars)
        cleared = []
        for value in row:
            if not value.numerator:
                cleared.append(LaurentPoly.zero(num_vars))
            else:
                cleared.append(value.numerator * multiplier.exact_div(value.denominator))
        rows.append(cleared)
        scale = scale * multiplier
    det = bareiss_determinant(rows, num_vars)
    return cancel_common_factors(RationalFn(det, scale))


# --- Matching up to permutation ---

Equality = Callable[[object, object], bool]


def _default_equal(x, y) -> bool:
    return x == y


def match_symmetric(source: Sequence[Sequence], target: Sequence[Sequence],
                    equal: Equality = _default_equal) -> Optional[List[int]]:
    """A permutation perm with source[perm[i]][perm[j]] == target[i][j], or None."""
    size = len(target)
    if len(source) != size:
        return None
    perm: List[int] = []
    used = set()

    def extend(i: int) -> bool:
        if i == size:
            return True
        for candidate in range(size):
            if candidate in used or not equal(source[candidate][candidate], target[i][i]):
                continue
            if all(equal(source[candidate][perm[k]], target[i][k]) for k in range(i)):
                perm.append(candidate)
                used.add(candidate)
                if extend(i + 1):
                    return True
                perm.pop()
                used.discard(candidate)
        return False

    return perm if extend(0) else None


def match_rectangular(source: Sequence[Sequence], target: Sequence[Sequence]) -> Optional[Tuple[List[int], List[int]]]:
    """Row and column permutations with source[rows[i]][cols[j]] == target[i][j].

    Entries must be hashable. Columns are assigned one at a time; after each
    step the multisets of partial rows must agree.
    """
    if len(source) != len(target):
        return None
    if not target:
        return [], []
    width = len(target[0])
    if any(len(row) != width for row in list(source) + list(target)):
        return None
    source_columns = [Counter(row[c] for row in source) for c in range(width)]
    target_columns = [Counter(row[c] for row in target) for c in range(width)]
    cols: List[int] = []
    used = set()

    def prefix_ok() -> bool:
        left = Counter(tuple(row[c] for c in cols) for row in source)
        right = Counter(tuple(row[:len(cols)]) for row in target)
        return left == right

    def extend(j: int) -> bool:
        if j == width:
            return True
        for candidate in range(width):
            if candidate in used or source_columns[candidate] != target_columns[j]:
                continue
            cols.append(candidate)
            used.add(candidate)
            if prefix_ok() and extend(j + 1):
                return True
            cols.pop()
            used.discard(candidate)
        return False

    if not extend(0):
        return None
    remaining = {}
    for index, row in enumerate(source):
        remaining.setdefault(tuple(row[c] for c in cols), []).append(index)
    rows = [remaining[tuple(row)].pop() for row in target]
    return rows, cols


def matrix_json(m) -> str:
    return json.dumps(m.to_json(), indent=2)
