from typing import Set

from .Interval import Interval, Point
from .Exceptions import generate_exception_message, PolyominoIdealError

class EdgeInterval:

    """
    A horizontal or vertical segment of the lattice
    made of edges of the cells of a collection.

    Attributes
    ----------
    Interval : Interval
        Degenerate in one coordinate
    Orientation : str
        'horizontal' or 'vertical'
    Maximal : bool
        True if it cannot be extended on either end
        within the edges of the collection

    Methods
    ----------
    lattice_points() -> set of Point
    contains_point(p) -> bool
    """

    def __init__(self,  interval : Interval,
                        orientation : str,
                        maximal : bool = True):

        """
        EdgeInterval class initializer

        Parameters
        ----------
        interval : Interval
        orientation : str
        maximal : bool
        """

        if orientation == 'horizontal':
            well_formed = interval.Height == 0 and interval.Width > 0
        elif orientation == 'vertical':
            well_formed = interval.Width == 0 and interval.Height > 0
        else:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'EdgeInterval.__init__()',
                                                                    f"Unknown orientation '{orientation}'."))
        if not well_formed:
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'EdgeInterval.__init__()',
                                                                    f"{interval} is not a {orientation} segment."))
        self.__interval = interval
        self.__orientation = orientation
        self.__maximal = maximal

    #Getters
    @property
    def Interval(self):
        return self.__interval

    @property
    def Orientation(self):
        return self.__orientation

    @property
    def Maximal(self):
        return self.__maximal

    def lattice_points(self) -> Set[Point]:
        return self.__interval.lattice_points()

    def contains_point(self, p : Point) -> bool:
        return self.__interval.contains_point(p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeInterval):
            return NotImplemented
        return (self.__interval, self.__orientation) == (other.Interval, other.Orientation)

    def __hash__(self) -> int:
        return hash((self.__interval, self.__orientation))

    def __repr__(self) -> str:
        return f"EdgeInterval({self.__orientation}, {self.__interval})"
