import re
from typing import Optional

from .Exceptions import generate_exception_message, PolyominoIdealError

class Settings:

    """
    Immutable carrier of every tunable of the package. An
    operation which takes an optional settings parameter
    falls back to Settings() when it is not given.

    Attributes
    ----------
    Field : str
        'gf32003' (default), 'q' for the rationals, or
        'gf<p>' for any other prime p
    OrderKind : str
        'degrevlex' (default) or 'lex'
    Direction : str
        One of the eight readings of the vertex grid,
        see MonomialOrder. 'EN' is the default one, i.e.
        x_a > x_b if i > k, or if i = k and j > l
    PairBudget : int
        Maximum number of S-pair reductions per Groebner
        basis computation
    ZigZagBudget : int
        Maximum number of nodes visited by the zig-zag
        walk search
    AdmissibleBudget : int
        Maximum number of irredundant admissible sets
        enumerated; the search also stops after that many
        partial subsets per vertex
    Seed : int
        Seed for every random draw
    Workers : int
        Number of processes used by the campaign runner

    Methods
    ----------
    with_options(**changes) -> Settings
        Returns a copy with the given attributes replaced
    """

    __directions = ('NE', 'NW', 'SE', 'SW', 'EN', 'WN', 'ES', 'WS')

    def __init__(self,  field : str = 'gf32003',
                        order_kind : str = 'degrevlex',
                        direction : str = 'EN',
                        pair_budget : int = 10**6,
                        zigzag_budget : int = 10**7,
                        admissible_budget : int = 2*10**4,
                        seed : int = 0,
                        workers : int = 1):

        """
        Settings class initializer

        Parameters
        ----------
        field : str
        order_kind : str
        direction : str
        pair_budget : int
        zigzag_budget : int
        admissible_budget : int
        seed : int
        workers : int
        """

        if Settings.parse_field(field) is None:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Settings.__init__()',
                                                                    f"Unknown field '{field}'. Use 'gf32003', 'q' or 'gf<p>'."))
        if order_kind not in ('degrevlex', 'lex'):
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'Settings.__init__()',
                                                                    f"Unknown monomial order kind '{order_kind}'."))
        if direction not in Settings.__directions:
            raise PolyominoIdealError(generate_exception_message(   3,
                                                                    'Settings.__init__()',
                                                                    f"Unknown direction '{direction}'."))
        for name, value in (('pair_budget', pair_budget),
                            ('zigzag_budget', zigzag_budget),
                            ('admissible_budget', admissible_budget),
                            ('workers', workers)):
            if value < 1:
                raise PolyominoIdealError(generate_exception_message(   4,
                                                                        'Settings.__init__()',
                                                                        f"'{name}' must be positive (got {value})."))
        self.__field = field
        self.__order_kind = order_kind
        self.__direction = direction
        self.__pair_budget = pair_budget
        self.__zigzag_budget = zigzag_budget
        self.__admissible_budget = admissible_budget
        self.__seed = seed
        self.__workers = workers

    #Getters
    @property
    def Field(self):
        return self.__field

    @property
    def OrderKind(self):
        return self.__order_kind

    @property
    def Direction(self):
        return self.__direction

    @property
    def PairBudget(self):
        return self.__pair_budget

    @property
    def ZigZagBudget(self):
        return self.__zigzag_budget

    @property
    def AdmissibleBudget(self):
        return self.__admissible_budget

    @property
    def Seed(self):
        return self.__seed

    @property
    def Workers(self):
        return self.__workers

    @property
    def Characteristic(self) -> int:
        return Settings.parse_field(self.__field)

    def with_options(self, **changes) -> 'Settings':

        options = dict( field = self.__field,
                        order_kind = self.__order_kind,
                        direction = self.__direction,
                        pair_budget = self.__pair_budget,
                        zigzag_budget = self.__zigzag_budget,
                        admissible_budget = self.__admissible_budget,
                        seed = self.__seed,
                        workers = self.__workers)
        for key, value in changes.items():
            if key not in options:
                raise PolyominoIdealError(generate_exception_message(   1,
                                                                        'Settings.with_options()',
                                                                        f"Unknown option '{key}'."))
            if value is not None:
                options[key] = value

        return Settings(**options)

    @staticmethod
    def parse_field(field : str) -> Optional[int]:

        """
        Parameters
        ----------
        field : str

        Returns
        ----------
        int or None
            The characteristic of the field (0 for the
            rationals), or None if field is not understood
        """

        if field == 'q':
            return 0

        match = re.fullmatch(r'gf(\d+)', field)
        if match is None:
            return None

        p = int(match.group(1))
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            return None

        return p

    def __repr__(self) -> str:
        return (f"Settings(field={self.__field!r}, order_kind={self.__order_kind!r}, "
                f"direction={self.__direction!r}, pair_budget={self.__pair_budget}, "
                f"zigzag_budget={self.__zigzag_budget}, admissible_budget={self.__admissible_budget}, "
                f"seed={self.__seed}, workers={self.__workers})")
