from typing import *

__all__ = ["CoverDefects", "cover_defects", "is_refinement"]


SetType = AbstractSet[Hashable]


class CoverDefects(NamedTuple):
    overlap: FrozenSet  # members of more than one cell
    gap: FrozenSet  # members of the universe in no cell
    stray: FrozenSet  # cell members outside the universe
    empty_cells: int

    def __bool__(self) -> bool:
        return bool(self.overlap or self.gap or self.stray or self.empty_cells)

    def describe(self) -> str:
        parts = []
        if self.overlap:
            parts.append(f"{len(self.overlap)} element(s) in more than one cell")
        if self.gap:
            parts.append(f"{len(self.gap)} element(s) in no cell")
        if self.stray:
            parts.append(f"{len(self.stray)} element(s) outside the vertex set")
        if self.empty_cells:
            parts.append(f"{self.empty_cells} empty cell(s)")
        return ", ".join(parts)


def cover_defects(cells: Iterable[SetType], universe: SetType) -> CoverDefects:
    """Everything that keeps `cells` from being a partition of `universe`."""
    seen: Set[Hashable] = set()
    overlap: Set[Hashable] = set()
    empty_cells = 0
    for cell in cells:
        if not cell:
            empty_cells += 1
        overlap |= seen & cell
        seen |= cell
    return CoverDefects(
        overlap=frozenset(overlap),
        gap=frozenset(universe - seen),
        stray=frozenset(seen - universe),
        empty_cells=empty_cells,
    )


def is_refinement(fine: Iterable[SetType], coarse: Iterable[SetType]) -> bool:
    """True when every cell of `fine` lies inside a single cell of `coarse`."""
    coarse = list(coarse)
    return all(any(cell <= c for c in coarse) for cell in fine)
