from typing import Iterable, List

from .Interval import Point

class RookConfiguration:

    """
    A set of cells carrying rooks. Whether the rooks
    attack each other depends on the collection they
    are placed on, see RookBoard.

    Attributes
    ----------
    Rooks : tuple of Point
        Sorted cells carrying a rook
    Size : int
    """

    def __init__(self, rooks : Iterable[Point]):
        self.__rooks = tuple(sorted({(int(c[0]), int(c[1])) for c in rooks}))

    #Getters
    @property
    def Rooks(self):
        return self.__rooks

    @property
    def Size(self):
        return len(self.__rooks)

    def switched(self, removed : Iterable[Point], added : Iterable[Point]) -> 'RookConfiguration':
        return RookConfiguration(set(self.__rooks).difference(removed).union(added))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RookConfiguration):
            return NotImplemented
        return self.__rooks == other.Rooks

    def __lt__(self, other : 'RookConfiguration') -> bool:
        return self.__rooks < other.Rooks

    def __hash__(self) -> int:
        return hash(self.__rooks)

    def __repr__(self) -> str:
        return f"RookConfiguration({list(self.__rooks)})"

    def to_list(self) -> List[List[int]]:
        return [list(c) for c in self.__rooks]
