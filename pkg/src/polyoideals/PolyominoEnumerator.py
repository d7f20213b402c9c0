import logging
from typing import Iterator, List, Optional, Set

from .Interval import Point
from .CellCollection import CellCollection
from .Exceptions import generate_exception_message, PolyominoIdealError

logger = logging.getLogger(__name__)

class PolyominoEnumerator:

    """
    Exhaustive enumeration of the collections of n cells
    up to translation, by Redelmeier's growth: cells are
    added one at a time from a fixed origin, and a cell
    becomes a candidate only once, so every collection is
    produced exactly once.

    Attributes
    ----------
    Rank : int
    ModSymmetry : bool
        If True, one collection per orbit of the 8
        symmetries of the square is kept
    WeaklyConnected : bool
        If True, cells sharing only a corner are also
        neighbours, i.e. weakly connected collections are
        enumerated instead of polyominoes

    Methods
    ----------
    __iter__() -> iterator of CellCollection
    count() -> int
    enumerate_polyominoes(n, mod_symmetry) -> iterator of CellCollection
    enumerate_collections(n) -> iterator of CellCollection
    """

    MaxRank = 10

    __edge_steps = ((1, 0), (0, 1), (-1, 0), (0, -1))
    __corner_steps = __edge_steps + ((1, 1), (-1, 1), (1, -1), (-1, -1))

    def __init__(self,  n : int,
                        mod_symmetry : bool = False,
                        weakly_connected : bool = False,
                        max_rank : Optional[int] = None):

        """
        PolyominoEnumerator class initializer

        Parameters
        ----------
        n : int
            Number of cells, from 1 to max_rank
        mod_symmetry : bool
        weakly_connected : bool
        max_rank : int
            Overrides PolyominoEnumerator.MaxRank
        """

        bound = PolyominoEnumerator.MaxRank if max_rank is None else max_rank
        if not 1 <= n <= bound:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolyominoEnumerator.__init__()',
                                                                    f"The rank must lie in [1, {bound}] (got {n})."))
        self.__n = n
        self.__mod_symmetry = mod_symmetry
        self.__weakly_connected = weakly_connected
        self.__steps = PolyominoEnumerator.__corner_steps if weakly_connected else PolyominoEnumerator.__edge_steps

    #Getters
    @property
    def Rank(self):
        return self.__n

    @property
    def ModSymmetry(self):
        return self.__mod_symmetry

    @property
    def WeaklyConnected(self):
        return self.__weakly_connected

    @staticmethod
    def __admissible(cell : Point) -> bool:
        # The origin is the lowest cell, leftmost in its row
        return cell[1] > 0 or (cell[1] == 0 and cell[0] >= 0)

    def __grow(self,    cells : List[Point],
                        untried : List[Point],
                        seen : Set[Point]) -> Iterator[List[Point]]:

        untried = list(untried)
        while untried:
            cell = untried.pop()
            cells.append(cell)
            if len(cells) == self.__n:
                yield cells
            else:
                fresh = []
                for (di, dj) in self.__steps:
                    other = (cell[0] + di, cell[1] + dj)
                    if PolyominoEnumerator.__admissible(other) and other not in seen:
                        fresh.append(other)
                seen.update(fresh)
                yield from self.__grow(cells, untried + fresh, seen)
                seen.difference_update(fresh)
            cells.pop()

    def __iter__(self) -> Iterator[CellCollection]:

        produced = 0
        for cells in self.__grow([], [(0, 0)], {(0, 0)}):
            collection = CellCollection(cells)
            if self.__mod_symmetry and collection != collection.canonical_under_symmetry():
                continue
            produced += 1
            yield collection

        logger.debug(   "%d collections of rank %d enumerated (mod symmetry: %s, weakly connected: %s)",
                        produced, self.__n, self.__mod_symmetry, self.__weakly_connected)

    def count(self) -> int:
        return sum(1 for _ in self)

    @staticmethod
    def enumerate_polyominoes(  n : int,
                                mod_symmetry : bool = False,
                                max_rank : Optional[int] = None) -> Iterator[CellCollection]:

        """
        Fixed polyominoes of rank n, optionally reduced
        modulo the symmetries of the square. For n = 1, ...,
        5 there are 1, 2, 6, 19, 63 fixed polyominoes.
        """

        return iter(PolyominoEnumerator(n, mod_symmetry = mod_symmetry, max_rank = max_rank))

    @staticmethod
    def enumerate_collections(  n : int,
                                max_rank : Optional[int] = None) -> Iterator[CellCollection]:

        """
        Weakly connected collections of rank n. Their
        number grows much faster than the one of
        polyominoes, so they are meant for n <= 5.
        """

        return iter(PolyominoEnumerator(n, weakly_connected = True, max_rank = max_rank))
