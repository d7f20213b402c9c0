from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:                                   # Import only for type-checking, so as
    from .CellCollection import CellCollection      # to avoid a runtime circular import

from .Interval import Interval, Point
from .Exceptions import generate_exception_message, InvalidWalk

class ZigZagWalk:

    """
    A cyclic sequence I_1, ..., I_l of distinct inner
    intervals together with the points v_1, ..., v_l,
    where v_k and v_{k+1} are adjacent corners of I_k
    (indices mod l). z_k is the corner of I_k opposite
    to v_k and u_k the one opposite to v_{k+1}.

    Attributes
    ----------
    Intervals : tuple of Interval
    V : tuple of Point
    Z : tuple of Point
    U : tuple of Point
    Length : int
    Roles : tuple of str
        'diagonal' if v_k is a diagonal corner of I_k,
        'antiDiagonal' otherwise

    Methods
    ----------
    validate(collection) -> None
        Raises InvalidWalk unless the walk satisfies
        every defining condition on the given collection
    to_dict() -> dict
    """

    def __init__(self,  intervals : Sequence[Interval],
                        v : Sequence[Point]):

        """
        ZigZagWalk class initializer. Only the bookkeeping
        of corners is checked here. Use validate() to
        check the walk against a collection of cells.

        Parameters
        ----------
        intervals : sequence of Interval
        v : sequence of Point
            v[k] must be a corner of intervals[k], adjacent
            to v[k + 1] (mod length)
        """

        if len(intervals) != len(v) or len(intervals) < 2:
            raise InvalidWalk(generate_exception_message(   1,
                                                            'ZigZagWalk.__init__()',
                                                            f"Got {len(intervals)} intervals and {len(v)} corners."))
        length = len(intervals)
        z, u = [], []
        for k in range(length):
            interval, entry, exit_ = intervals[k], v[k], v[(k + 1) % length]
            if entry not in interval.corners() or exit_ not in interval.adjacent_corners(entry):
                raise InvalidWalk(generate_exception_message(   2,
                                                                'ZigZagWalk.__init__()',
                                                                f"{entry} and {exit_} are not adjacent corners of {interval}."))
            z.append(interval.opposite_corner(entry))
            u.append(interval.opposite_corner(exit_))

        self.__intervals = tuple(intervals)
        self.__v = tuple(v)
        self.__z = tuple(z)
        self.__u = tuple(u)

    #Getters
    @property
    def Intervals(self):
        return self.__intervals

    @property
    def V(self):
        return self.__v

    @property
    def Z(self):
        return self.__z

    @property
    def U(self):
        return self.__u

    @property
    def Length(self):
        return len(self.__intervals)

    @property
    def Roles(self):
        return tuple('diagonal' if interval.is_diagonal_corner(p) else 'antiDiagonal'
                        for interval, p in zip(self.__intervals, self.__v))

    def validate(self, collection : 'CellCollection') -> None:

        """
        Checks, independently of the search which found
        this walk, that the intervals are distinct inner
        intervals of the collection, that consecutive
        intervals meet exactly at the shared corner, that
        consecutive corners lie on a common edge interval,
        that no inner interval contains two z corners, and
        that the length is even.

        Parameters
        ----------
        collection : CellCollection
        """

        issuer = 'ZigZagWalk.validate()'
        length = self.Length

        if length % 2 != 0:
            raise InvalidWalk(generate_exception_message(1, issuer, f"The length {length} is odd."))

        if len(set(self.__intervals)) != length:
            raise InvalidWalk(generate_exception_message(2, issuer, "The intervals are not distinct."))

        for interval in self.__intervals:
            if not collection.is_inner_interval(interval):
                raise InvalidWalk(generate_exception_message(3, issuer, f"{interval} is not an inner interval."))

        for k in range(length):
            following = self.__intervals[(k + 1) % length]
            shared = self.__intervals[k].intersection(following)
            if shared != {self.__v[(k + 1) % length]}:
                raise InvalidWalk(generate_exception_message(   4,
                                                                issuer,
                                                                f"{self.__intervals[k]} and {following} meet at {sorted(shared)}."))

        edge_intervals = collection.maximal_edge_intervals('horizontal') + collection.maximal_edge_intervals('vertical')
        for k in range(length):
            p, q = self.__v[k], self.__v[(k + 1) % length]
            if not any(e.contains_point(p) and e.contains_point(q) for e in edge_intervals):
                raise InvalidWalk(generate_exception_message(5, issuer, f"{p} and {q} do not share an edge interval."))

        for first in range(length):
            for second in range(first + 1, length):
                if ZigZagWalk.share_inner_interval(collection, self.__z[first], self.__z[second]):
                    raise InvalidWalk(generate_exception_message(   6,
                                                                    issuer,
                                                                    f"An inner interval contains both {self.__z[first]} and {self.__z[second]}."))

    @staticmethod
    def share_inner_interval(   collection : 'CellCollection',
                                p : Point,
                                q : Point) -> bool:

        """
        Returns True if some inner interval of the given
        collection contains both points p and q.
        """

        lower = (min(p[0], q[0]), min(p[1], q[1]))
        upper = (max(p[0], q[0]), max(p[1], q[1]))

        if lower[0] < upper[0] and lower[1] < upper[1]:     # Any interval containing both
            return collection.is_inner_interval(Interval(lower, upper))    # contains this one

        if lower == upper:
            return lower in collection.vertices()

        if lower[1] == upper[1]:
            candidates = [  Interval((lower[0], lower[1] - 1), upper),
                            Interval(lower, (upper[0], upper[1] + 1))]
        else:
            candidates = [  Interval((lower[0] - 1, lower[1]), upper),
                            Interval(lower, (upper[0] + 1, upper[1]))]

        return any(collection.is_inner_interval(c) for c in candidates)

    def to_dict(self) -> dict:
        return {'length': self.Length,
                'intervals': [i.to_list() for i in self.__intervals],
                'v': [list(p) for p in self.__v],
                'z': [list(p) for p in self.__z],
                'u': [list(p) for p in self.__u],
                'roles': list(self.Roles)}

    def __repr__(self) -> str:
        return f"ZigZagWalk(intervals={list(self.__intervals)}, v={list(self.__v)})"
