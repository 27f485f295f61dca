# diagram.py
"""Colored planar-diagram (PD) codes: parsing, validation, orientation, regions.

A crossing ``X[s1,s2,s3,s4]`` lists its four edges counterclockwise starting
from the incoming under-edge; the over-strand occupies slots 2 and 4. Internally
slots and corners are 0-based: corner ``i`` of a crossing is the angle between
slot ``i`` and slot ``i + 1 (mod 4)``. Crossings are numbered from 0 in input
order.
"""
import json
import logging
import os
import re
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx

from errors import (ColoringError, DiagramError, DisconnectedDiagramError, MarkError, OrientationError,
                    PDSyntaxError)

logger = logging.getLogger(__name__)

Corner = Tuple[int, int]
Occurrence = Tuple[int, int]

INCOMING = "in"
OUTGOING = "out"


class Crossing(NamedTuple):
    index: int
    slots: Tuple[int, int, int, int]
    sign: int
    over_in: int
    j: int
    k: int

    @property
    def incoming_left(self) -> int:
        """Slot of the incoming-left strand when both strands point up."""
        return 3 if self.sign > 0 else 0

    @property
    def is_monochromatic(self) -> bool:
        return self.j == self.k


class Component(NamedTuple):
    index: int
    edges: Tuple[int, ...]
    color: int


class Frame(NamedTuple):
    """Regions at the four corners of a crossing in the upward picture, plus strand colors."""
    a: int
    b: int
    c: int
    d: int
    j: int
    k: int
    sign: int


class RegionMap:
    """Faces of the diagram.

    Each region is a tuple of corners in traversal order; regions coming from
    crossing-free circles have no corners. ``edge_sides`` gives, for every edge,
    the region on the left and on the right of the oriented edge.
    """

    def __init__(self, regions: Sequence[Tuple[Corner, ...]], corner_lookup: Mapping[Corner, int],
                 edge_sides: Mapping[int, Tuple[int, int]]):
        self.regions = tuple(regions)
        self.corner_lookup = MappingProxyType(dict(corner_lookup))
        self.edge_sides = MappingProxyType(dict(edge_sides))

    def __len__(self) -> int:
        return len(self.regions)

    def region_of(self, crossing: int, corner: int) -> int:
        return self.corner_lookup[(crossing, corner % 4)]

    def sides_of(self, edge: int) -> Tuple[int, int]:
        return self.edge_sides[edge]


class ColoredDiagram:
    """A validated colored PD code. Instances are never mutated after construction."""

    def __init__(self, crossings: Sequence[Sequence[int]], circles: Sequence[int] = (),
                 edge_colors: Optional[Mapping[int, int]] = None, mark: Optional[int] = None):
        slots = [tuple(int(e) for e in c) for c in crossings]
        for index, record in enumerate(slots):
            if len(record) != 4:
                raise PDSyntaxError(f"crossing {index} has {len(record)} slots instead of 4")
        self._slots: Tuple[Tuple[int, int, int, int], ...] = tuple(slots)  # type: ignore[assignment]
        self.circles: Tuple[int, ...] = tuple(int(e) for e in circles)
        if not self._slots and not self.circles:
            raise DiagramError("the diagram has no crossings and no circles")

        self._occurrences = _collect_occurrences(self._slots, self.circles)
        self.edges: Tuple[int, ...] = tuple(sorted(set(self._occurrences) | set(self.circles)))
        roles = _infer_orientation(self._slots, self._occurrences)
        self._heads: Dict[int, Occurrence] = {}
        for occ, role in roles.items():
            if role == INCOMING:
                self._heads[self._slots[occ[0]][occ[1]]] = occ

        self.components = self._trace_components()
        colors = dict(edge_colors or {})
        self.edge_colors = MappingProxyType(self._validate_colors(colors))
        self.num_colors = max(self.edge_colors.values())
        self.components = tuple(c._replace(color=self.edge_colors[c.edges[0]]) for c in self.components)
        self._edge_component = {e: c.index for c in self.components for e in c.edges}

        self.crossings: Tuple[Crossing, ...] = tuple(
            self._make_crossing(index, record, roles) for index, record in enumerate(self._slots))
        self.marked_edge = self._validate_mark(mark)

        self._check_planarity()

    # --- Construction helpers ---

    def _make_crossing(self, index: int, record: Tuple[int, int, int, int], roles: Mapping[Occurrence, str]) -> Crossing:
        over_in = 3 if roles[(index, 3)] == INCOMING else 1
        sign = 1 if over_in == 3 else -1
        left = 3 if sign > 0 else 0
        j = self.edge_colors[record[left]]
        k = self.edge_colors[record[(left + 1) % 4]]
        return Crossing(index=index, slots=record, sign=sign, over_in=over_in, j=j, k=k)

    def _trace_components(self) -> Tuple[Component, ...]:
        successor = nx.DiGraph()
        successor.add_nodes_from(self.edges)
        for edge in self.edges:
            if edge in self.circles:
                successor.add_edge(edge, edge)
                continue
            v, s = self._heads[edge]
            successor.add_edge(edge, self._slots[v][(s + 2) % 4])

        components = []
        for members in sorted(nx.weakly_connected_components(successor), key=min):
            start = min(members)
            walk = [start]
            current = next(iter(successor.successors(start)))
            while current != start:
                walk.append(current)
                current = next(iter(successor.successors(current)))
            components.append(Component(index=len(components), edges=tuple(walk), color=0))
        return tuple(components)

    def _validate_colors(self, colors: Dict[int, int]) -> Dict[int, int]:
        for edge in self.edges:
            if edge not in colors:
                raise ColoringError(f"edge {edge} has no color", edge=edge)
        unknown = sorted(set(colors) - set(self.edges))
        if unknown:
            raise ColoringError(f"colors given for unknown edges {unknown}", edges=unknown)
        for edge, color in colors.items():
            if not isinstance(color, int) or color < 1:
                raise ColoringError(f"edge {edge} has invalid color {color!r}", edge=edge)
        for component in self.components:
            used = {colors[e] for e in component.edges}
            if len(used) > 1:
                raise ColoringError(
                    f"component through edge {component.edges[0]} mixes colors {sorted(used)}",
                    edge=component.edges[0])
        used_colors = {colors[e] for e in self.edges}
        missing = sorted(set(range(1, max(used_colors) + 1)) - used_colors)
        if missing:
            raise ColoringError(f"colors {missing} are not used by any component", colors=missing)
        return {e: colors[e] for e in self.edges}

    def _validate_mark(self, mark: Optional[int]) -> int:
        if mark is None:
            return min(e for e in self.edges if self.edge_colors[e] == 1)
        if mark not in self.edge_colors:
            raise MarkError(f"marked edge {mark} does not exist", edge=mark)
        if self.edge_colors[mark] != 1:
            raise MarkError(f"marked edge {mark} has color {self.edge_colors[mark]}, expected 1", edge=mark)
        return mark

    def _check_planarity(self) -> None:
        regions = self.regions
        expected = len(self.crossings) + 2 * self.num_pieces
        if len(regions) != expected:
            raise DiagramError(
                f"PD code is not planar: {len(regions)} faces, expected {expected}",
                faces=len(regions), expected=expected)

    # --- Basic queries ---

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def slots(self) -> Tuple[Tuple[int, int, int, int], ...]:
        return self._slots

    def occurrences(self, edge: int) -> Tuple[Occurrence, ...]:
        return tuple(self._occurrences.get(edge, ()))

    def head(self, edge: int) -> Occurrence:
        """(crossing, slot) where the edge ends."""
        return self._heads[edge]

    def other_occurrence(self, crossing: int, slot: int) -> Occurrence:
        edge = self._slots[crossing][slot]
        first, second = self._occurrences[edge]
        return second if first == (crossing, slot) else first

    def component_of(self, edge: int) -> int:
        return self._edge_component[edge]

    def strand_components(self, crossing: int) -> Tuple[int, int]:
        """(under component, over component) at a crossing."""
        record = self._slots[crossing]
        return self._edge_component[record[0]], self._edge_component[record[1]]

    # --- Topology ---

    @cached_property
    def _piece_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(("x", v) for v in range(len(self._slots)))
        graph.add_nodes_from(("o", e) for e in self.circles)
        for edge, occs in self._occurrences.items():
            (v, _), (w, _) = occs
            graph.add_edge(("x", v), ("x", w), key=edge)
        return graph

    @cached_property
    def num_pieces(self) -> int:
        return nx.number_connected_components(self._piece_graph)

    def is_connected(self) -> bool:
        return self.num_pieces == 1

    @cached_property
    def regions(self) -> RegionMap:
        return compute_regions(self)

    @cached_property
    def frames(self) -> Tuple[Frame, ...]:
        return tuple(crossing_frame(self, v) for v in range(len(self.crossings)))

    def mark_regions(self) -> Tuple[int, int]:
        return self.regions.sides_of(self.marked_edge)

    # --- Derived diagrams ---

    def with_colors(self, edge_colors: Mapping[int, int]) -> "ColoredDiagram":
        """Recolor; the mark is kept while its edge stays on color 1, otherwise reset to the default."""
        mark = self.marked_edge if edge_colors.get(self.marked_edge) == 1 else None
        return ColoredDiagram(self._slots, self.circles, edge_colors, mark)

    def with_mark(self, mark: Optional[int]) -> "ColoredDiagram":
        return ColoredDiagram(self._slots, self.circles, self.edge_colors, mark)

    # --- Serialization ---

    def to_pd_text(self) -> str:
        lines = [f"X[{','.join(str(e) for e in record)}]" for record in self._slots]
        lines += [f"O[{e}]" for e in self.circles]
        lines.append("colors: " + ", ".join(f"{e}={self.edge_colors[e]}" for e in self.edges))
        lines.append(f"mark: {self.marked_edge}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> Dict[str, object]:
        return {
            "crossings": [list(record) for record in self._slots],
            "circles": list(self.circles),
            "colors": {str(e): self.edge_colors[e] for e in self.edges},
            "mark": self.marked_edge,
        }

    def __repr__(self) -> str:
        return (f"ColoredDiagram(crossings={len(self.crossings)}, circles={len(self.circles)}, "
                f"colors={self.num_colors}, mark={self.marked_edge})")


# --- Validation internals ---

def _collect_occurrences(slots: Sequence[Tuple[int, ...]], circles: Sequence[int]) -> Dict[int, List[Occurrence]]:
    occurrences: Dict[int, List[Occurrence]] = {}
    for v, record in enumerate(slots):
        for s, edge in enumerate(record):
            if edge < 1:
                raise PDSyntaxError(f"edge ids must be positive integers, got {edge} in crossing {v}")
            occurrences.setdefault(edge, []).append((v, s))
    for edge, occs in occurrences.items():
        if len(occs) != 2:
            raise DiagramError(f"edge {edge} appears {len(occs)} times instead of twice", edge=edge)
    seen: Set[int] = set()
    for edge in circles:
        if edge < 1:
            raise PDSyntaxError(f"circle edge ids must be positive integers, got {edge}")
        if edge in occurrences or edge in seen:
            raise DiagramError(f"circle edge {edge} is used more than once", edge=edge)
        seen.add(edge)
    return occurrences


def _infer_orientation(slots: Sequence[Tuple[int, int, int, int]],
                       occurrences: Mapping[int, List[Occurrence]]) -> Dict[Occurrence, str]:
    """Assign incoming/outgoing to every slot.

    Slot 1 is incoming and slot 3 outgoing by convention; each edge is outgoing at
    one end and incoming at the other; the over-slots of a crossing have opposite
    roles. Over-strands never pinned by these rules fall back to the
    consecutive-label rule.
    """
    roles: Dict[Occurrence, str] = {}
    pending: List[Occurrence] = []

    def assign(occ: Occurrence, role: str) -> None:
        current = roles.get(occ)
        if current is None:
            roles[occ] = role
            pending.append(occ)
        elif current != role:
            edge = slots[occ[0]][occ[1]]
            which = "incoming" if current == INCOMING else "outgoing"
            raise OrientationError(
                f"edge {edge} is {which} at both of its ends (crossing {occ[0]})", edge=edge)

    def propagate() -> None:
        while pending:
            v, s = pending.pop()
            role = roles[(v, s)]
            opposite = OUTGOING if role == INCOMING else INCOMING
            edge = slots[v][s]
            first, second = occurrences[edge]
            assign(second if first == (v, s) else first, opposite)
            if s in (1, 3):
                assign((v, (s + 2) % 4), opposite)

    for v in range(len(slots)):
        assign((v, 0), INCOMING)
        assign((v, 2), OUTGOING)
    propagate()

    for v, record in enumerate(slots):
        if (v, 1) in roles:
            continue
        x, y = record[1], record[3]
        if y == x + 1:
            incoming_slot = 1
        elif x == y + 1:
            incoming_slot = 3
        else:
            incoming_slot = 1 if x > y else 3
        logger.debug(f"[Orientation] crossing {v}: over-strand fixed by edge labels ({x}, {y})")
        assign((v, incoming_slot), INCOMING)
        propagate()
    return roles


# --- Operations ---

def compute_regions(d: ColoredDiagram) -> RegionMap:
    """Faces as orbits of corners: from corner i of v, cross the edge in slot i+1 and
    continue at the corner that edge occupies at its other end."""
    slots = d.slots
    seen: Set[Corner] = set()
    faces: List[Tuple[Corner, ...]] = []
    for v in range(len(slots)):
        for i in range(4):
            if (v, i) in seen:
                continue
            orbit = []
            corner = (v, i)
            while corner not in seen:
                seen.add(corner)
                orbit.append(corner)
                corner = d.other_occurrence(corner[0], (corner[1] + 1) % 4)
            faces.append(tuple(orbit))

    faces.sort(key=min)
    regions: List[Tuple[Corner, ...]] = []
    lookup: Dict[Corner, int] = {}
    for face in faces:
        start = face.index(min(face))
        rotated = face[start:] + face[:start]
        for corner in rotated:
            lookup[corner] = len(regions)
        regions.append(rotated)

    sides: Dict[int, Tuple[int, int]] = {}
    for edge in d.edges:
        if edge in d.circles:
            continue
        v, s = d.head(edge)
        sides[edge] = (lookup[(v, (s - 1) % 4)], lookup[(v, s)])
    for edge in d.circles:
        inside = len(regions)
        regions.extend([(), ()])
        sides[edge] = (inside, inside + 1)

    logger.debug(f"[Regions] {len(regions)} regions for {len(slots)} crossings and {len(d.circles)} circles")
    return RegionMap(regions, lookup, sides)


def crossing_frame(d: ColoredDiagram, v: int) -> Frame:
    """Regions (a, b, c, d) around crossing v with both strands pointing up.

    c lies between the two incoming edges and a between the two outgoing ones;
    counterclockwise from c come d, a, b. The incoming-left strand (color j)
    bounds b and c, the incoming-right strand (color k) bounds c and d.
    """
    crossing = d.crossings[v]
    left = crossing.incoming_left
    region = d.regions.region_of
    return Frame(a=region(v, left + 2), b=region(v, left + 3), c=region(v, left), d=region(v, left + 1),
                 j=crossing.j, k=crossing.k, sign=crossing.sign)


def monochromatic_writhe(d: ColoredDiagram) -> int:
    return sum(c.sign for c in d.crossings if c.is_monochromatic)


def linking_number(d: ColoredDiagram, comp_a: int, comp_b: int) -> int:
    if comp_a == comp_b:
        raise DiagramError("linking number needs two different components")
    for comp in (comp_a, comp_b):
        if not 0 <= comp < len(d.components):
            raise DiagramError(f"component {comp} does not exist")
    total = 0
    for crossing in d.crossings:
        if set(d.strand_components(crossing.index)) == {comp_a, comp_b}:
            total += crossing.sign
    if total % 2:
        raise DiagramError(f"odd crossing-sign sum {total} between components {comp_a} and {comp_b}")
    return total // 2


def linking_matrix(d: ColoredDiagram) -> List[List[int]]:
    n = len(d.components)
    return [[0 if a == b else linking_number(d, a, b) for b in range(n)] for a in range(n)]


def merge_colors(d: ColoredDiagram, c1: int, c2: int) -> ColoredDiagram:
    """Identify color c2 with c1 and renumber the remaining colors contiguously."""
    for color in (c1, c2):
        if not 1 <= color <= d.num_colors:
            raise ColoringError(f"color {color} does not exist (diagram has {d.num_colors})")
    if c1 == c2:
        raise ColoringError(f"cannot merge color {c1} with itself")
    identified = {c: (c1 if c == c2 else c) for c in range(1, d.num_colors + 1)}
    renumber = {old: new for new, old in enumerate(sorted(set(identified.values())), start=1)}
    colors = {e: renumber[identified[c]] for e, c in d.edge_colors.items()}
    return d.with_colors(colors)


def is_connected(d: ColoredDiagram) -> bool:
    return d.is_connected()


def color_by_components(d: ColoredDiagram) -> ColoredDiagram:
    colors = {e: comp.index + 1 for comp in d.components for e in comp.edges}
    return d.with_colors(colors)


def relabel_edges(d: ColoredDiagram, mapping: Mapping[int, int]) -> ColoredDiagram:
    if sorted(mapping) != list(d.edges) or len(set(mapping.values())) != len(mapping):
        raise DiagramError("edge relabeling must be a bijection on the edge ids")
    slots = [tuple(mapping[e] for e in record) for record in d.slots]
    circles = [mapping[e] for e in d.circles]
    colors = {mapping[e]: c for e, c in d.edge_colors.items()}
    return ColoredDiagram(slots, circles, colors, mapping[d.marked_edge])


def reverse_components(d: ColoredDiagram, components: Iterable[int]) -> ColoredDiagram:
    """Reverse the orientation of the given components.

    Crossings where a reversed component passes under are rotated by two slots;
    the labels along each reversed component are reversed so the over-strand
    fallback rule also sees the new direction.
    """
    reversed_set = set(components)
    for comp in reversed_set:
        if not 0 <= comp < len(d.components):
            raise DiagramError(f"component {comp} does not exist")
    mapping = {e: e for e in d.edges}
    for comp in d.components:
        if comp.index in reversed_set:
            for edge, new in zip(comp.edges, reversed(comp.edges)):
                mapping[edge] = new

    slots = []
    for crossing in d.crossings:
        record = crossing.slots
        if d.component_of(record[0]) in reversed_set:
            record = (record[2], record[3], record[0], record[1])
        slots.append(tuple(mapping[e] for e in record))
    colors = {mapping[e]: c for e, c in d.edge_colors.items()}
    return ColoredDiagram(slots, [mapping[e] for e in d.circles], colors, mapping[d.marked_edge])


# --- Parsing ---

class PDParser:
    """Reader for the line-oriented colored PD format and its JSON mirror."""

    TOKEN_PATTERN = re.compile(r"(?P<record>[XO])\s*\[(?P<args>[^\]]*)\]|(?P<key>colors|mark)\s*:")
    ASSIGNMENT_PATTERN = re.compile(r"(?P<key>default|\d+\s*-\s*\d+|\d+)\s*=\s*(?P<value>-?\d+)")
    INTEGER_PATTERN = re.compile(r"\s*(-?\d+)\s*")

    def parse(self, text: str) -> ColoredDiagram:
        stripped = text.strip()
        if stripped.startswith("{"):
            return self.parse_json(stripped)
        return self.parse_text(text)

    def parse_text(self, text: str) -> ColoredDiagram:
        source = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
        crossings: List[List[int]] = []
        circles: List[int] = []
        color_specs: List[Tuple[str, int, int, int]] = []
        mark: Optional[int] = None

        tokens = list(self.TOKEN_PATTERN.finditer(source))
        position = 0
        for index, token in enumerate(tokens):
            self._expect_blank(source, position, token.start())
            end = tokens[index + 1].start() if index + 1 < len(tokens) else len(source)
            line = source.count("\n", 0, token.start()) + 1
            if token.group("record"):
                values = self._integers(token.group("args"), line)
                if token.group("record") == "X":
                    if len(values) != 4:
                        raise PDSyntaxError(f"X[...] needs 4 edge ids, got {len(values)}", line=line)
                    crossings.append(values)
                else:
                    if len(values) != 1:
                        raise PDSyntaxError("O[...] takes exactly one edge id", line=line)
                    circles.append(values[0])
                position = token.end()
            elif token.group("key") == "colors":
                color_specs.extend(self._color_assignments(source[token.end():end], line))
                position = end
            else:
                if mark is not None:
                    raise PDSyntaxError("mark given twice", line=line)
                match = self.INTEGER_PATTERN.fullmatch(source[token.end():end])
                if match is None:
                    raise PDSyntaxError(f"mark expects one edge id, got {source[token.end():end].strip()!r}", line=line)
                mark = int(match.group(1))
                position = end
        self._expect_blank(source, position, len(source))

        edges = {e for record in crossings for e in record} | set(circles)
        colors = _resolve_colors(color_specs, edges)
        return ColoredDiagram(crossings, circles, colors, mark)

    def parse_json(self, text: str) -> ColoredDiagram:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PDSyntaxError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
        if not isinstance(payload, dict):
            raise PDSyntaxError("JSON diagram must be an object")
        unknown = set(payload) - {"crossings", "circles", "colors", "mark"}
        if unknown:
            raise PDSyntaxError(f"unknown JSON fields {sorted(unknown)}")
        try:
            crossings = [[int(e) for e in record] for record in payload.get("crossings", [])]
            circles = [int(e) for e in payload.get("circles", [])]
            specs = []
            for key, value in dict(payload.get("colors", {})).items():
                specs.append(self._color_spec(str(key), int(value), None))
            mark = payload.get("mark")
            mark = None if mark is None else int(mark)
        except (TypeError, ValueError) as exc:
            raise PDSyntaxError(f"malformed JSON diagram: {exc}") from exc
        for record in crossings:
            if len(record) != 4:
                raise PDSyntaxError(f"crossing {record} needs 4 edge ids")
        edges = {e for record in crossings for e in record} | set(circles)
        return ColoredDiagram(crossings, circles, _resolve_colors(specs, edges), mark)

    @staticmethod
    def _expect_blank(source: str, start: int, end: int) -> None:
        junk = source[start:end].strip()
        if junk:
            line = source.count("\n", 0, start + source[start:end].find(junk[0])) + 1
            raise PDSyntaxError(f"unexpected text {junk[:30]!r}", line=line)

    def _integers(self, args: str, line: int) -> List[int]:
        values = []
        for part in args.split(","):
            match = self.INTEGER_PATTERN.fullmatch(part)
            if match is None:
                raise PDSyntaxError(f"expected an integer edge id, got {part.strip()!r}", line=line)
            values.append(int(match.group(1)))
        return values

    def _color_assignments(self, args: str, line: int) -> List[Tuple[str, int, int, int]]:
        specs = []
        position = 0
        for match in self.ASSIGNMENT_PATTERN.finditer(args):
            if args[position:match.start()].strip(" \t\n,"):
                raise PDSyntaxError(f"cannot read color assignment near {args[position:match.start()].strip()!r}", line=line)
            specs.append(self._color_spec(match.group("key"), int(match.group("value")), line))
            position = match.end()
        if args[position:].strip(" \t\n,"):
            raise PDSyntaxError(f"cannot read color assignment near {args[position:].strip()!r}", line=line)
        if not specs:
            raise PDSyntaxError("colors line has no assignments", line=line)
        return specs

    @staticmethod
    def _color_spec(key: str, color: int, line: Optional[int]) -> Tuple[str, int, int, int]:
        key = key.replace(" ", "")
        if color < 1:
            raise PDSyntaxError(f"colors are positive integers, got {color}", line=line)
        if key == "default":
            return ("default", 0, 0, color)
        if "-" in key:
            low, high = (int(part) for part in key.split("-"))
            if low > high:
                raise PDSyntaxError(f"empty edge range {key}", line=line)
            return ("range", low, high, color)
        return ("edge", int(key), int(key), color)


def _resolve_colors(specs: Sequence[Tuple[str, int, int, int]], edges: Set[int]) -> Dict[int, int]:
    """Explicit edges win over ranges, ranges over the default."""
    default: Optional[int] = None
    ranged: Dict[int, int] = {}
    explicit: Dict[int, int] = {}
    for kind, low, high, color in specs:
        if kind == "default":
            default = color
        elif kind == "range":
            for edge in range(low, high + 1):
                ranged[edge] = color
        else:
            explicit[low] = color
    stray = sorted(set(explicit) - edges)
    if stray:
        raise ColoringError(f"colors given for unknown edges {stray}", edges=stray)
    colors: Dict[int, int] = {}
    for edge in edges:
        if edge in explicit:
            colors[edge] = explicit[edge]
        elif edge in ranged:
            colors[edge] = ranged[edge]
        elif default is not None:
            colors[edge] = default
    return colors


_PARSER = PDParser()


def parse_pd(text: str) -> ColoredDiagram:
    """Parse a colored PD code (text or JSON mirror) into a validated diagram."""
    diagram = _PARSER.parse(text)
    logger.debug(f"[Parser] {diagram!r}")
    return diagram


def load_pd(path: str) -> ColoredDiagram:
    with open(path, "r", encoding="utf-8") as f:
        return parse_pd(f.read())


def read_diagram(source: str) -> ColoredDiagram:
    """A file path if one exists, otherwise inline PD text."""
    if os.path.isfile(source):
        return load_pd(source)
    return parse_pd(source)


def require_connected(d: ColoredDiagram) -> None:
    if not d.is_connected():
        raise DisconnectedDiagramError(f"diagram has {d.num_pieces} connected pieces; a connected diagram is required")
