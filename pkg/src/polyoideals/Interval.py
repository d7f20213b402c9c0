from typing import List, Set, Tuple

from .Exceptions import generate_exception_message, PolyominoIdealError

Point = Tuple[int, int]     # A lattice point (i, j). A cell is identified
                            # with the point of its lower-left corner.

class Interval:

    """
    A rectangle [A, B] of the integer lattice, given by
    its lower-left (A) and upper-right (B) diagonal
    corners. The anti-diagonal corners are derived.

    Attributes
    ----------
    A : Point
        Lower-left diagonal corner
    B : Point
        Upper-right diagonal corner
    C : Point
        Upper-left anti-diagonal corner, (A.i, B.j)
    D : Point
        Lower-right anti-diagonal corner, (B.i, A.j)
    IsProper : bool
        True if A.i < B.i and A.j < B.j

    Methods
    ----------
    cells() -> list of Point
        Lower-left corners of the cells of the interval
    lattice_points() -> set of Point
    contains_point(p) -> bool
    intersection(other) -> set of Point
        Lattice points shared by both (closed) intervals
    corners() -> tuple of Point
    opposite_corner(p) -> Point
    adjacent_corners(p) -> tuple of Point
    sides() -> list of (Point, Point)
    """

    def __init__(self, a : Point, b : Point):

        """
        Interval class initializer

        Parameters
        ----------
        a : Point
        b : Point
            It must meet a <= b componentwise
        """

        if a[0] > b[0] or a[1] > b[1]:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Interval.__init__()',
                                                                    f"The corner {a} is not smaller or equal than {b}."))
        self.__a = (int(a[0]), int(a[1]))
        self.__b = (int(b[0]), int(b[1]))

    #Getters
    @property
    def A(self) -> Point:
        return self.__a

    @property
    def B(self) -> Point:
        return self.__b

    @property
    def C(self) -> Point:
        return (self.__a[0], self.__b[1])

    @property
    def D(self) -> Point:
        return (self.__b[0], self.__a[1])

    @property
    def IsProper(self) -> bool:
        return self.__a[0] < self.__b[0] and self.__a[1] < self.__b[1]

    @property
    def Width(self) -> int:
        return self.__b[0] - self.__a[0]

    @property
    def Height(self) -> int:
        return self.__b[1] - self.__a[1]

    @classmethod
    def of_cell(cls, cell : Point) -> 'Interval':
        return cls(cell, (cell[0] + 1, cell[1] + 1))

    @classmethod
    def spanned_by_cells(cls, first : Point, second : Point) -> 'Interval':

        """
        Returns the smallest interval containing both
        given cells.
        """

        return cls( (min(first[0], second[0]), min(first[1], second[1])),
                    (max(first[0], second[0]) + 1, max(first[1], second[1]) + 1))

    def cells(self) -> List[Point]:
        return [(i, j)  for i in range(self.__a[0], self.__b[0])
                        for j in range(self.__a[1], self.__b[1])]

    def lattice_points(self) -> Set[Point]:
        return {(i, j)  for i in range(self.__a[0], self.__b[0] + 1)
                        for j in range(self.__a[1], self.__b[1] + 1)}

    def contains_point(self, p : Point) -> bool:
        return self.__a[0] <= p[0] <= self.__b[0] and self.__a[1] <= p[1] <= self.__b[1]

    def intersection(self, other : 'Interval') -> Set[Point]:

        lower = (max(self.__a[0], other.A[0]), max(self.__a[1], other.A[1]))
        upper = (min(self.__b[0], other.B[0]), min(self.__b[1], other.B[1]))

        if lower[0] > upper[0] or lower[1] > upper[1]:
            return set()

        return Interval(lower, upper).lattice_points()

    def corners(self) -> Tuple[Point, Point, Point, Point]:
        return (self.A, self.B, self.C, self.D)

    def opposite_corner(self, p : Point) -> Point:

        opposites = {self.A: self.B, self.B: self.A, self.C: self.D, self.D: self.C}
        try:
            return opposites[p]
        except KeyError:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Interval.opposite_corner()',
                                                                    f"{p} is not a corner of {self}."))

    def adjacent_corners(self, p : Point) -> Tuple[Point, Point]:

        """
        Returns the two corners which share a side with
        the given corner p.
        """

        if p == self.A or p == self.B:
            return (self.C, self.D)
        if p == self.C or p == self.D:
            return (self.A, self.B)

        raise PolyominoIdealError(generate_exception_message(   1,
                                                                'Interval.adjacent_corners()',
                                                                f"{p} is not a corner of {self}."))

    def is_diagonal_corner(self, p : Point) -> bool:
        return p == self.A or p == self.B

    def sides(self) -> List[Tuple[Point, Point]]:
        return [(self.A, self.C), (self.A, self.D), (self.B, self.C), (self.B, self.D)]

    def __key(self):
        return (self.__a, self.__b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.__key() == other.__key()

    def __lt__(self, other : 'Interval') -> bool:
        return self.__key() < other.__key()

    def __hash__(self) -> int:
        return hash(self.__key())

    def __repr__(self) -> str:
        return f"[{self.__a}, {self.__b}]"

    def to_list(self) -> List[List[int]]:
        return [list(self.__a), list(self.__b)]
