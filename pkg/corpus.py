# corpus.py
"""The versioned diagram corpus and random closed-braid diagrams."""
import logging
import os
import random
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from diagram import ColoredDiagram, load_pd
from errors import ColoringError, DiagramError

logger = logging.getLogger(__name__)

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")
MAX_SAMPLING_ATTEMPTS = 1000
MIN_STRANDS = 2
MAX_STRANDS = 4


class CorpusEntry(NamedTuple):
    name: str
    crossings: int
    regions: int
    w_m: int
    alexander: Optional[str]
    connected: bool = True

    @property
    def path(self) -> str:
        return os.path.join(CORPUS_DIR, f"{self.name}.pd")


CORPUS: Dict[str, CorpusEntry] = {
    entry.name: entry for entry in (
        CorpusEntry("clasp_kink", 5, 7, -1, "1 + t1*t2"),
        CorpusEntry("trefoil_right", 3, 5, 3, "t1 - 1 + t1^-1"),
        CorpusEntry("trefoil_left", 3, 5, -3, "t1 - 1 + t1^-1"),
        CorpusEntry("figure_eight", 4, 6, 0, "t1 - 3 + t1^-1"),
        CorpusEntry("hopf", 2, 4, 0, "1"),
        CorpusEntry("whitehead", 5, 7, -1, "t1*t2 - t1 - t2 + 1"),
        CorpusEntry("unknot", 0, 2, 0, "1"),
        CorpusEntry("split_unknots", 0, 4, 0, None, connected=False),
    )
}


def load_diagram(name: str) -> ColoredDiagram:
    entry = CORPUS.get(name)
    if entry is None:
        raise DiagramError(f"unknown corpus diagram {name!r}; known: {', '.join(sorted(CORPUS))}")
    return load_pd(entry.path)


class BraidWord(NamedTuple):
    """sigma_i is written i, its inverse -i, with 1 <= i < strands."""
    strands: int
    generators: Tuple[int, ...]

    def permutation(self) -> List[int]:
        """Position at the top of the strand that starts at each bottom position."""
        where = list(range(self.strands))
        for g in self.generators:
            i = abs(g) - 1
            where = [i + 1 if p == i else i if p == i + 1 else p for p in where]
        return where

    def num_components(self) -> int:
        perm = self.permutation()
        seen, cycles = set(), 0
        for start in range(self.strands):
            if start in seen:
                continue
            cycles += 1
            p = start
            while p not in seen:
                seen.add(p)
                p = perm[p]
        return cycles


def braid_closure(word: BraidWord, colors: Optional[Sequence[int]] = None) -> ColoredDiagram:
    """Closed braid with strands pointing up; edges are renumbered consecutively along components."""
    if word.strands < 2:
        raise DiagramError("a braid needs at least two strands")
    for g in word.generators:
        if g == 0 or abs(g) >= word.strands:
            raise DiagramError(f"generator {g} does not exist on {word.strands} strands")
    unused = sorted(set(range(1, word.strands)) - {abs(g) for g in word.generators})
    if unused:
        raise DiagramError(f"generators {unused} never appear; the closure would be disconnected")

    current = list(range(1, word.strands + 1))
    records: List[List[int]] = []
    successor: Dict[int, int] = {}
    label = word.strands
    for g in word.generators:
        i = abs(g) - 1
        a, b = current[i], current[i + 1]
        left_out, right_out = label + 1, label + 2
        label += 2
        if g > 0:
            # a passes over to the right, b under to the left.
            records.append([b, right_out, left_out, a])
            successor[a], successor[b] = right_out, left_out
        else:
            # a passes under to the right, b over to the left.
            records.append([a, b, right_out, left_out])
            successor[a], successor[b] = right_out, left_out
        current[i], current[i + 1] = left_out, right_out

    closing = {top: bottom for top, bottom in zip(current, range(1, word.strands + 1))}
    records = [[closing.get(e, e) for e in record] for record in records]
    successor = {e: closing.get(f, f) for e, f in successor.items()}

    relabel: Dict[int, int] = {}
    component_of: Dict[int, int] = {}
    for start in sorted(successor):
        if start in relabel:
            continue
        component = len(set(component_of.values()))
        edge = start
        while edge not in relabel:
            relabel[edge] = len(relabel) + 1
            component_of[relabel[edge]] = component
            edge = successor[edge]

    slots = [[relabel[e] for e in record] for record in records]
    num_components = len(set(component_of.values()))
    if colors is None:
        colors = [1] * num_components
    if len(colors) != num_components:
        raise ColoringError(f"{len(colors)} colors given for {num_components} components")
    edge_colors = {e: colors[component_of[e]] for e in component_of}
    return ColoredDiagram(slots, (), edge_colors)


def random_braid_word(rng: random.Random, max_crossings: int = 8) -> BraidWord:
    strands = rng.randint(MIN_STRANDS, min(MAX_STRANDS, max_crossings + 1))
    length = rng.randint(strands - 1, max_crossings)
    letters = list(range(1, strands)) + [rng.randint(1, strands - 1) for _ in range(length - strands + 1)]
    rng.shuffle(letters)
    return BraidWord(strands, tuple(g if rng.random() < 0.5 else -g for g in letters))


def random_diagram(rng: random.Random, max_crossings: int = 8, num_colors: int = 1) -> ColoredDiagram:
    """A random connected closed-braid diagram using every color in 1..num_colors."""
    if num_colors < 1:
        raise ColoringError("at least one color is needed")
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        word = random_braid_word(rng, max_crossings)
        components = word.num_components()
        if components < num_colors:
            continue
        colors = list(range(1, num_colors + 1)) + [rng.randint(1, num_colors) for _ in range(components - num_colors)]
        rng.shuffle(colors)
        logger.debug(f"[Corpus] braid {word.generators} on {word.strands} strands, colors {colors}")
        return braid_closure(word, colors)
    raise DiagramError(f"no braid with {num_colors} components found in {MAX_SAMPLING_ATTEMPTS} attempts")
