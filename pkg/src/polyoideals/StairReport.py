from typing import List, Tuple

class StairReport:

    """
    Stairs of an open path. A stair is a maximal run
    of at least three consecutive maximal rectangles
    of the path, turning alternately left and right,
    whose interior rectangles all have rank 2.

    Attributes
    ----------
    Stairs : list of (int, int)
        (startIndex, rectangleCount) of each stair, where
        startIndex is the index of its first rectangle
        among the maximal blocks of the path
    OddStairs : list of (int, int)
        Stairs with an odd number of rectangles
    BadStairs : list of (int, int)
        Stairs with 4, 6, or at least 8 rectangles
    """

    def __init__(self, stairs : List[Tuple[int, int]]):

        self.__stairs = list(stairs)

    #Getters
    @property
    def Stairs(self):
        return self.__stairs

    @property
    def OddStairs(self):
        return [s for s in self.__stairs if s[1] % 2 == 1]

    @property
    def BadStairs(self):
        return [s for s in self.__stairs if StairReport.is_bad(s[1])]

    @staticmethod
    def is_bad(rectangle_count : int) -> bool:
        return rectangle_count in (4, 6) or rectangle_count >= 8

    def to_dict(self) -> dict:
        return {'stairs': [list(s) for s in self.__stairs],
                'oddStairs': [list(s) for s in self.OddStairs],
                'badStairs': [list(s) for s in self.BadStairs]}
