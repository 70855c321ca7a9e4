"""Cell orders, admissible total orders, standardness, and picture enumeration.

Three orders drive everything here.  The componentwise partial order
compares cells coordinate by coordinate.  The row-reading total order
("jay") lists cells row by row, right to left within a row.  The
column-reading total order ("eff") lists cells column by column from
the rightmost column, top to bottom within a column.  An admissible
order is any total order that puts a cell before every cell weakly
below it and weakly to its left; the two reading orders are the
standard examples.

A picture is a bijection between two cell sets that is order-standard
in both directions: componentwise-comparable cells must map to cells
in the listing order, and the same must hold for the inverse map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Mapping

from .shapes import Cell, Partition, SkewShape, cells


class OrderCellMismatch(ValueError):
    """The order lists different cells than the shape has."""


class OrderNotAdmissible(ValueError):
    """The listing breaks the admissibility constraint."""


class SizeMismatch(ValueError):
    """Source and target cell sets have different sizes."""


def leq_P(a: Cell, b: Cell) -> bool:
    """Componentwise partial order: both coordinates weakly increase."""
    return a[0] <= b[0] and a[1] <= b[1]


def leq_J(a: Cell, b: Cell) -> bool:
    """Row-reading total order: lower row first, right before left in a row."""
    return a[0] < b[0] or (a[0] == b[0] and a[1] >= b[1])


def leq_F(a: Cell, b: Cell) -> bool:
    """Column-reading total order: righter column first, top before bottom."""
    return a[1] > b[1] or (a[1] == b[1] and a[0] <= b[0])


def _jay_key(cell: Cell) -> tuple[int, int]:
    return (cell[0], -cell[1])


def _eff_key(cell: Cell) -> tuple[int, int]:
    return (-cell[1], cell[0])


@dataclass(frozen=True)
class TotalOrder:
    """A total order on a finite cell set, materialized as a listing.

    Earlier in the listing means smaller in the order.
    """

    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        listing = tuple((int(r), int(c)) for r, c in self.cells)
        if len(set(listing)) != len(listing):
            raise ValueError("listing repeats a cell")
        object.__setattr__(self, "cells", listing)

    @classmethod
    def jay(cls, cell_set: Iterable[Cell]) -> TotalOrder:
        """The row-reading order on the given cells."""
        return cls(tuple(sorted(cell_set, key=_jay_key)))

    @classmethod
    def eff(cls, cell_set: Iterable[Cell]) -> TotalOrder:
        """The column-reading order on the given cells."""
        return cls(tuple(sorted(cell_set, key=_eff_key)))

    @cached_property
    def positions(self) -> dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.cells)}

    @cached_property
    def admissible(self) -> bool:
        return is_admissible_order(self)

    def __len__(self) -> int:
        return len(self.cells)

    def to_json(self) -> dict:
        return {"cells": [list(cell) for cell in self.cells]}


def is_admissible_order(order: TotalOrder) -> bool:
    """Check that every constrained cell pair respects the listing.

    The constraint: a cell must come strictly before any distinct cell
    that sits weakly below it and weakly to its left.
    """
    listing = order.cells
    position = order.positions
    for a in listing:
        for b in listing:
            if a != b and a[0] <= b[0] and a[1] >= b[1] and position[a] >= position[b]:
                return False
    return True


def enumerate_admissible_orders(cell_set: Iterable[Cell],
                                limit: int | None = None) -> tuple[TotalOrder, ...]:
    """All admissible orders on the cells, deterministically.

    These are the linear extensions of the precedence relation used by
    is_admissible_order; candidates are tried in row-major order at each
    step, which fixes the output order.  A limit truncates the output.
    """
    key = tuple(sorted(set(cell_set)))
    orders = _admissible_orders(key)
    if limit is not None:
        return orders[:max(limit, 0)]
    return orders


@lru_cache(maxsize=None)
def _admissible_orders(todo: tuple[Cell, ...]) -> tuple[TotalOrder, ...]:
    predecessors: dict[Cell, set[Cell]] = {c: set() for c in todo}
    for a in todo:
        for b in todo:
            if a != b and a[0] <= b[0] and a[1] >= b[1]:
                predecessors[b].add(a)
    out: list[TotalOrder] = []
    listing: list[Cell] = []
    placed: set[Cell] = set()

    def extend() -> None:
        if len(listing) == len(todo):
            out.append(TotalOrder(tuple(listing)))
            return
        for candidate in todo:
            if candidate not in placed and predecessors[candidate] <= placed:
                listing.append(candidate)
                placed.add(candidate)
                extend()
                placed.discard(candidate)
                listing.pop()

    extend()
    return tuple(out)


def is_standard(mapping: Mapping[Cell, Cell], codomain_order: TotalOrder,
                domain_partial: Callable[[Cell, Cell], bool] = leq_P) -> bool:
    """Order compatibility of a cell map.

    Whenever two distinct source cells compare under the domain partial
    order, their images must respect the codomain listing.  Images that
    the listing does not mention make the map nonstandard.
    """
    position = codomain_order.positions
    items = list(mapping.items())
    if any(image not in position for _, image in items):
        return False
    for x, u in items:
        for y, v in items:
            if x != y and domain_partial(x, y) and position[u] > position[v]:
                return False
    return True


@dataclass(frozen=True)
class Picture:
    """A bijection between two cell sets, stored as pairs sorted by source."""

    pairs: tuple[tuple[Cell, Cell], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted(((int(a), int(b)), (int(c), int(d)))
                             for (a, b), (c, d) in self.pairs))
        if len({p[0] for p in pairs}) != len(pairs):
            raise ValueError("pairing repeats a source cell")
        if len({p[1] for p in pairs}) != len(pairs):
            raise ValueError("pairing repeats a target cell")
        object.__setattr__(self, "pairs", pairs)

    @cached_property
    def mapping(self) -> dict[Cell, Cell]:
        return dict(self.pairs)

    @cached_property
    def inverse(self) -> dict[Cell, Cell]:
        return {image: source for source, image in self.pairs}

    def apply(self, cell: Cell) -> Cell:
        return self.mapping[cell]

    def domain(self) -> tuple[Cell, ...]:
        return tuple(p[0] for p in self.pairs)

    def image(self) -> tuple[Cell, ...]:
        return tuple(p[1] for p in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def to_json(self) -> dict:
        return {"pairs": [[list(a), list(b)] for a, b in self.pairs]}


def is_picture(pairing, domain_order: TotalOrder, codomain_order: TotalOrder) -> bool:
    """Bijectivity plus standardness of the map and of its inverse.

    Accepts a Picture, a mapping, or an iterable of (source, target)
    pairs.  Returns False rather than raising on any structural defect.
    """
    if isinstance(pairing, Picture):
        items = pairing.pairs
    elif isinstance(pairing, Mapping):
        items = tuple(pairing.items())
    else:
        items = tuple(pairing)
    forward = dict(items)
    if len(forward) != len(items):
        return False
    if set(forward) != set(domain_order.cells):
        return False
    images = set(forward.values())
    if len(images) != len(forward) or images != set(codomain_order.cells):
        return False
    inverse = {image: source for source, image in forward.items()}
    return (is_standard(forward, codomain_order)
            and is_standard(inverse, domain_order))


def enumerate_pictures(mu: Partition, skew_shape: SkewShape,
                       domain_order: TotalOrder | None = None,
                       codomain_order: TotalOrder | None = None) -> tuple[Picture, ...]:
    """All pictures from the cells of mu onto the skew cells.

    The orders default to row-reading on both sides.  Backtracking
    assigns sources in domain-order sequence and prunes any partial
    assignment that already violates either standardness condition.
    Output is sorted by pair list, so it is deterministic.
    """
    sources_rowmajor = cells(mu)
    targets = skew_shape.cells()
    if len(sources_rowmajor) != len(targets):
        raise SizeMismatch(
            f"{len(sources_rowmajor)} source cells vs {len(targets)} target cells")
    if domain_order is None:
        domain_order = TotalOrder.jay(sources_rowmajor)
    if codomain_order is None:
        codomain_order = TotalOrder.jay(targets)
    if set(domain_order.cells) != set(sources_rowmajor):
        raise OrderCellMismatch("domain order must list the cells of the source shape")
    if set(codomain_order.cells) != set(targets):
        raise OrderCellMismatch("codomain order must list the skew cells")

    sources = domain_order.cells
    target_position = codomain_order.positions
    assigned: dict[Cell, Cell] = {}
    used: set[Cell] = set()
    found: list[Picture] = []

    def place(t: int) -> None:
        if t == len(sources):
            found.append(Picture(tuple(assigned.items())))
            return
        x = sources[t]
        for u in targets:
            if u in used:
                continue
            good = True
            for y, v in assigned.items():
                # forward standardness against the earlier assignments
                if leq_P(y, x) and target_position[v] > target_position[u]:
                    good = False
                    break
                if leq_P(x, y) and target_position[u] > target_position[v]:
                    good = False
                    break
                # inverse standardness: v was placed earlier in the domain
                # order, so u componentwise below v is already a violation
                if u != v and leq_P(u, v):
                    good = False
                    break
            if good:
                assigned[x] = u
                used.add(u)
                place(t + 1)
                del assigned[x]
                used.discard(u)

    place(0)
    return tuple(sorted(found, key=lambda picture: picture.pairs))
