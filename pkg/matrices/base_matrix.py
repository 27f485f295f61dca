# matrices/base_matrix.py

from abc import ABC, abstractmethod
from typing import Dict, Iterable, Optional, Sequence, Tuple

from diagram import ColoredDiagram, RegionMap
from errors import DegenerateMarkError


class RegionMatrix(ABC):
    """A matrix whose columns (and rows, when square) are indexed by regions."""

    kind = "matrix"

    def __init__(self, region_order: Sequence[int]):
        self.region_order: Tuple[int, ...] = tuple(region_order)
        self.region_index: Dict[int, int] = {r: i for i, r in enumerate(self.region_order)}

    @property
    def dim(self) -> int:
        return len(self.region_order)

    @abstractmethod
    def without_regions(self, regions: Iterable[int]) -> "RegionMatrix":
        """
        Returns a copy with the given regions removed (rows and columns for square
        region matrices, columns only for crossing-by-region matrices).
        """
        pass

    @abstractmethod
    def rows(self) -> list:
        """
        Entries as a list of rows, in region (or crossing) order.
        """
        pass

    @abstractmethod
    def to_json(self) -> Dict:
        pass

    def _kept_positions(self, regions: Iterable[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        dropped = set(regions)
        unknown = dropped - set(self.region_order)
        if unknown:
            raise KeyError(f"regions {sorted(unknown)} are not indices of this matrix")
        positions = tuple(i for i, r in enumerate(self.region_order) if r not in dropped)
        return positions, tuple(self.region_order[i] for i in positions)


def delete_marked(m: RegionMatrix, d: ColoredDiagram, r: Optional[RegionMap] = None) -> RegionMatrix:
    """Removes the two regions on either side of the marked edge."""
    regions = r if r is not None else d.regions
    left, right = regions.sides_of(d.marked_edge)
    if left == right:
        raise DegenerateMarkError(
            f"both sides of the marked edge {d.marked_edge} lie in region {left}; choose another mark",
            edge=d.marked_edge, region=left)
    return m.without_regions((left, right))
