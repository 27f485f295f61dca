# oracle.py
"""Multivariable Alexander polynomial from the Wirtinger presentation by Fox calculus.

Independent of the region matrices: arcs, relations and minors are handled with
sympy over ZZ[t1, ..., tmu].
"""
import itertools
import logging
from typing import Dict, List, NamedTuple, Tuple

import networkx as nx
import sympy
from sympy.polys.matrices import DomainMatrix

from diagram import ColoredDiagram
from errors import OracleInconclusiveError, OracleInputError
from laurent import LaurentPoly, compare_up_to_units

logger = logging.getLogger(__name__)


class Arc(NamedTuple):
    index: int
    edges: Tuple[int, ...]
    color: int


class Relation(NamedTuple):
    """x_out = x_over^s x_in x_over^-s at one crossing of sign s."""
    crossing: int
    incoming: int
    outgoing: int
    over: int
    sign: int


class WirtingerPresentation(NamedTuple):
    num_colors: int
    arcs: Tuple[Arc, ...]
    relations: Tuple[Relation, ...]


def wirtinger(d: ColoredDiagram) -> WirtingerPresentation:
    if d.num_crossings == 0:
        raise OracleInputError("the Wirtinger presentation needs at least one crossing")
    if not d.is_connected():
        raise OracleInputError(f"the diagram has {d.num_pieces} connected pieces")

    # Edges on the same over-pass belong to one arc.
    joined = nx.Graph()
    joined.add_nodes_from(d.edges)
    for record in d.slots:
        joined.add_edge(record[1], record[3])
    arcs = []
    arc_of: Dict[int, int] = {}
    for members in sorted(nx.connected_components(joined), key=min):
        edges = tuple(sorted(members))
        for edge in edges:
            arc_of[edge] = len(arcs)
        arcs.append(Arc(index=len(arcs), edges=edges, color=d.edge_colors[edges[0]]))

    relations = tuple(
        Relation(crossing=c.index, incoming=arc_of[c.slots[0]], outgoing=arc_of[c.slots[2]],
                 over=arc_of[c.slots[1]], sign=c.sign)
        for c in d.crossings)
    logger.debug(f"[Oracle] {len(arcs)} arcs, {len(relations)} relations")
    return WirtingerPresentation(d.num_colors, tuple(arcs), relations)


def _symbols(num_colors: int) -> Tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"t1:{num_colors + 1}")


def fox_matrix(w: WirtingerPresentation) -> sympy.Matrix:
    """Abelianized Fox derivatives, one row per relation, each row cleared of inverse powers."""
    ts = _symbols(w.num_colors)
    color = {arc.index: ts[arc.color - 1] for arc in w.arcs}
    rows = []
    for rel in w.relations:
        row = [sympy.Integer(0)] * len(w.arcs)
        t_over, t_in = color[rel.over], color[rel.incoming]
        if rel.sign > 0:
            row[rel.incoming] += t_over
            row[rel.over] += 1 - t_in
            row[rel.outgoing] -= 1
        else:
            # Row multiplied by t_over.
            row[rel.incoming] += 1
            row[rel.over] += t_in - 1
            row[rel.outgoing] -= t_over
        rows.append(row)
    return sympy.Matrix(rows)


def fox_row_sums_at_one(w: WirtingerPresentation) -> List[int]:
    ts = _symbols(w.num_colors)
    at_one = fox_matrix(w).subs({t: 1 for t in ts})
    return [int(sum(at_one.row(i))) for i in range(at_one.rows)]


def _to_laurent(expr, ts: Tuple[sympy.Symbol, ...]) -> LaurentPoly:
    poly = sympy.Poly(sympy.expand(expr), *ts)
    return LaurentPoly(len(ts), {tuple(2 * e for e in exps): int(coeff) for exps, coeff in poly.terms()})


def _deleted_column(w: WirtingerPresentation) -> int:
    counts: Dict[int, int] = {}
    for arc in w.arcs:
        counts[arc.color] = counts.get(arc.color, 0) + 1
    preferred = [arc for arc in w.arcs if counts[arc.color] >= 2]
    return (preferred or list(w.arcs))[0].index


def alexander_via_fox(w: WirtingerPresentation) -> LaurentPoly:
    """Delta up to units, symmetrized; raises OracleInconclusiveError when the minors disagree."""
    ts = _symbols(w.num_colors)
    matrix = fox_matrix(w)
    column = _deleted_column(w)
    color = w.arcs[column].color
    kept_columns = [c for c in range(len(w.arcs)) if c != column]
    size = len(kept_columns)
    if size > matrix.rows:
        raise OracleInputError(f"{matrix.rows} relations cannot give minors of size {size}")
    domain = sympy.ZZ[ts]

    candidates: List[LaurentPoly] = []
    for kept_rows in itertools.combinations(range(matrix.rows), size):
        sub = matrix.extract(list(kept_rows), kept_columns)
        if size == 0:
            det = sympy.Integer(1)
        else:
            dm = DomainMatrix.from_Matrix(sub).convert_to(domain)
            det = domain.to_sympy(dm.det())
        if w.num_colors >= 2 and det != 0:
            quotient, remainder = sympy.div(sympy.Poly(det, *ts), sympy.Poly(ts[color - 1] - 1, *ts))
            if not remainder.is_zero:
                raise OracleInconclusiveError(f"minor {det} is not divisible by t{color} - 1")
            det = quotient.as_expr()
        candidates.append(_to_laurent(det, ts))

    nonzero = [c for c in candidates if c]
    if not nonzero:
        return LaurentPoly.zero(w.num_colors)
    if len(nonzero) != len(candidates) or not all(compare_up_to_units(nonzero[0], c) for c in nonzero[1:]):
        raise OracleInconclusiveError("maximal minors disagree up to units",
                                      minors=[c.to_string() for c in candidates])
    result = nonzero[0].centered().with_positive_lead()
    logger.info(f"[Oracle] Delta = {result}")
    return result


__all__ = ["Arc", "Relation", "WirtingerPresentation", "wirtinger", "fox_matrix", "fox_row_sums_at_one",
           "alexander_via_fox", "compare_up_to_units"]
