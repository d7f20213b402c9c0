from typing import List, Optional, Sequence, Tuple

from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import lex, grevlex

from .Interval import Point
from .Settings import Settings
from .Exceptions import generate_exception_message, PolyominoIdealError

class MonomialOrder:

    """
    A monomial order on the polynomial ring of the
    vertices of a collection of cells. It is made of a
    kind, which is either 'lex' or 'degrevlex', and of
    a direction reading, which fixes the order of the
    variables.

    A reading is a pair of compass letters. The first
    one compares the i coordinates and the second one
    the j coordinates, or the other way round if the
    reading starts with N or S. E (resp. W) makes the
    variable with the larger (resp. smaller) i bigger,
    and N (resp. S) does the same for j. For instance,
    'EN' sets x_a > x_b if i > k, or if i = k and j > l,
    for a = (i, j) and b = (k, l).

    Attributes
    ----------
    Kind : str
    Direction : str

    Methods
    ----------
    sort_vertices(vertices) -> list of Point
        Sorts vertices from the biggest variable to the
        smallest one
    sympy_order() -> sympy MonomialOrder
    """

    directions = ('NE', 'NW', 'SE', 'SW', 'EN', 'WN', 'ES', 'WS')

    def __init__(self,  kind : str = 'degrevlex',
                        direction : str = 'EN'):

        if kind not in ('degrevlex', 'lex'):
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'MonomialOrder.__init__()',
                                                                    f"Unknown kind '{kind}'."))
        if direction not in MonomialOrder.directions:
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'MonomialOrder.__init__()',
                                                                    f"Unknown direction '{direction}'."))
        self.__kind = kind
        self.__direction = direction

    #Getters
    @property
    def Kind(self):
        return self.__kind

    @property
    def Direction(self):
        return self.__direction

    @classmethod
    def from_settings(cls, settings : Optional[Settings] = None) -> 'MonomialOrder':
        settings = Settings() if settings is None else settings
        return cls(settings.OrderKind, settings.Direction)

    def sort_vertices(self, vertices : Sequence[Point]) -> List[Point]:

        sign = {'E': -1, 'W': 1, 'N': -1, 'S': 1}
        first, second = self.__direction

        if first in 'EW':
            key = lambda p: (sign[first] * p[0], sign[second] * p[1])
        else:
            key = lambda p: (sign[first] * p[1], sign[second] * p[0])

        return sorted(vertices, key = key)

    def sympy_order(self) -> SympyMonomialOrder:
        return grevlex if self.__kind == 'degrevlex' else lex

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return (self.__kind, self.__direction) == (other.Kind, other.Direction)

    def __hash__(self) -> int:
        return hash((self.__kind, self.__direction))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.__kind!r}, {self.__direction!r})"


class EliminationOrder(SympyMonomialOrder):

    """
    Block order for sympy rings whose first Block
    variables are to be eliminated. Monomials are
    compared by graded reverse lexicographic order on
    the first block, ties being broken by graded
    reverse lexicographic order on the second block.
    """

    alias = 'elimination'
    is_global = True

    def __init__(self, block : int):
        self.Block = block

    def __call__(self, monomial : Tuple[int, ...]) -> tuple:
        return (grevlex(monomial[:self.Block]), grevlex(monomial[self.Block:]))

    def __eq__(self, other) -> bool:
        return isinstance(other, EliminationOrder) and other.Block == self.Block

    def __hash__(self) -> int:
        return hash((self.__class__, self.Block))

    def __repr__(self) -> str:
        return f"EliminationOrder({self.Block})"

    def __str__(self) -> str:
        return repr(self)
