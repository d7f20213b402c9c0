import re
import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy as sp
from sympy.polys.rings import PolyElement, PolyRing
from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.polyerrors import GeneratorsError

from .Interval import Point
from .MonomialOrder import MonomialOrder
from .Settings import Settings
from .Exceptions import generate_exception_message, PolyominoIdealError

logger = logging.getLogger(__name__)

Variable = Union[Point, str]    # A vertex, or the name of an auxiliary variable

class PolynomialRing:

    """
    Sparse multivariate polynomials over GF(p) or the
    rationals, with variables indexed by vertices of the
    lattice, x_(i,j), and optionally by auxiliary names.
    The heavy lifting is done by sympy's sparse rings;
    this class fixes the naming of the variables, their
    order, and the canonical text form of polynomials.

    Polynomials of different PolynomialRing objects are
    converted into each other by variable name, which
    allows to change the monomial order or to drop
    variables that do not occur.

    Attributes
    ----------
    Ring : sympy.polys.rings.PolyRing
    Variables : tuple of Variable
        From the biggest variable to the smallest one
    Domain : sympy domain
        FF(p) or QQ
    Field : str
    Order : sympy MonomialOrder
    NumberOfVariables : int

    Methods
    ----------
    gen(variable) -> PolyElement
    binomial(positive, negative) -> PolyElement
    convert(f) -> PolyElement
    to_text(f) -> str
    parse(text) -> PolyElement
    """

    __term_pattern = re.compile(r'([+-]?)([^+-]+)')
    __factor_pattern = re.compile(r'(x_\((-?\d+),(-?\d+)\)|[A-Za-z]\w*)(?:\^(\d+))?')

    def __init__(self,  variables : Sequence[Variable],
                        field : str = 'gf32003',
                        order : Union[str, SympyMonomialOrder] = 'grevlex'):

        """
        PolynomialRing class initializer

        Parameters
        ----------
        variables : sequence of Variable
            Vertices (pairs of int) and auxiliary names,
            from the biggest variable to the smallest one
        field : str
            'q', or 'gf<p>' for a prime p
        order : str or sympy MonomialOrder
            Anything sympy accepts as a monomial order
        """

        characteristic = Settings.parse_field(field)
        if characteristic is None:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolynomialRing.__init__()',
                                                                    f"Unknown field '{field}'."))
        self.__variables = tuple(v if isinstance(v, str) else (int(v[0]), int(v[1])) for v in variables)
        if len(set(self.__variables)) != len(self.__variables):
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'PolynomialRing.__init__()',
                                                                    'Repeated variables.'))
        self.__field = field
        self.__domain = sp.QQ if characteristic == 0 else sp.FF(characteristic)
        self.__names = tuple(PolynomialRing.internal_name(v) for v in self.__variables)
        self.__index = {v: k for k, v in enumerate(self.__variables)}

        self.__ring = PolyRing([sp.Symbol(name) for name in self.__names], self.__domain, order)

    #Getters
    @property
    def Ring(self):
        return self.__ring

    @property
    def Variables(self):
        return self.__variables

    @property
    def Domain(self):
        return self.__domain

    @property
    def Field(self):
        return self.__field

    @property
    def Order(self):
        return self.__ring.order

    @property
    def NumberOfVariables(self):
        return len(self.__variables)

    @classmethod
    def for_vertices(cls,   vertices : Iterable[Point],
                            settings : Optional[Settings] = None,
                            auxiliary : Sequence[str] = (),
                            order : Optional[Union[str, SympyMonomialOrder]] = None) -> 'PolynomialRing':

        """
        Builds the ring of the given vertices, sorted
        according to the direction reading of the given
        settings. Auxiliary variables, if any, are the
        biggest ones.

        Parameters
        ----------
        vertices : iterable of Point
        settings : Settings
        auxiliary : sequence of str
        order : str or sympy MonomialOrder
            Overrides the monomial order kind of settings

        Returns
        ----------
        PolynomialRing
        """

        settings = Settings() if settings is None else settings
        monomial_order = MonomialOrder.from_settings(settings)
        ordered = monomial_order.sort_vertices(list(vertices))

        return cls( list(auxiliary) + ordered,
                    field = settings.Field,
                    order = monomial_order.sympy_order() if order is None else order)

    def with_variables(self,    variables : Sequence[Variable],
                                order : Optional[Union[str, SympyMonomialOrder]] = None) -> 'PolynomialRing':

        """
        Returns a ring over the same field, with the given
        variables and, unless overriden, the same order.
        """

        return PolynomialRing(variables, field = self.__field, order = self.Order if order is None else order)

    @staticmethod
    def internal_name(variable : Variable) -> str:
        if isinstance(variable, str):
            return f"aux_{variable}"
        return f"x_{variable[0]}_{variable[1]}"

    @staticmethod
    def display_name(variable : Variable) -> str:
        if isinstance(variable, str):
            return variable
        return f"x_({variable[0]},{variable[1]})"

    def index(self, variable : Variable) -> int:
        try:
            return self.__index[variable if isinstance(variable, str) else (int(variable[0]), int(variable[1]))]
        except KeyError:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolynomialRing.index()',
                                                                    f"'{PolynomialRing.display_name(variable)}' is not a variable of this ring."))

    def gen(self, variable : Variable) -> PolyElement:
        return self.__ring.gens[self.index(variable)]

    def monomial(self, variables : Iterable[Variable]) -> PolyElement:
        output = self.__ring.one
        for v in variables:
            output *= self.gen(v)
        return output

    def binomial(self,  positive : Iterable[Variable],
                        negative : Iterable[Variable]) -> PolyElement:
        return self.monomial(positive) - self.monomial(negative)

    def exponents_to_monomial(self, exponents : Sequence[int]) -> PolyElement:
        return self.__ring({tuple(int(e) for e in exponents): self.__domain.one})

    def convert(self, f : PolyElement) -> PolyElement:

        """
        Converts a polynomial of another ring over the
        same field, matching variables by name. Every
        variable occurring in f must belong to this ring.
        """

        if f.ring == self.__ring:
            return f
        try:
            return f.set_ring(self.__ring)
        except GeneratorsError:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolynomialRing.convert()',
                                                                    f"The polynomial uses variables outside of this ring."))

    def support(self, f : PolyElement) -> List[Variable]:

        """
        Returns the variables occurring in f.
        """

        used = set()
        for monomial in f.monoms():
            used.update(k for k, e in enumerate(monomial) if e > 0)

        return [self.__variables[k] for k in sorted(used)]

    def __text_key(self, variable : Variable) -> tuple:
        return (1, variable) if isinstance(variable, str) else (0, variable)

    def __monomial_factors(self, monomial : Tuple[int, ...]) -> List[Tuple[Variable, int]]:
        factors = [(self.__variables[k], e) for k, e in enumerate(monomial) if e > 0]
        return sorted(factors, key = lambda f: self.__text_key(f[0]))

    def to_text(self, f : PolyElement) -> str:

        """
        Canonical text form of f. The factors of every term
        are written in ascending variable order, and the
        terms are sorted by their lists of factors, e.g.
        'x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)'. Coefficients of
        GF(p) are written in their symmetric range.
        """

        if not f:
            return '0'

        terms = []
        for monomial, coefficient in f.terms():
            factors = self.__monomial_factors(monomial)
            key = [(self.__text_key(v), -e) for v, e in factors]
            terms.append((key, factors, self.__domain.to_sympy(coefficient)))
        terms.sort(key = lambda t: t[0])

        output = ''
        for position, (_, factors, coefficient) in enumerate(terms):
            body = '*'.join(PolynomialRing.display_name(v) + (f"^{e}" if e > 1 else '') for v, e in factors)
            negative = coefficient < 0
            magnitude = -coefficient if negative else coefficient
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude}*{body}"
            if position == 0:
                output = ('-' if negative else '') + body
            else:
                output += ('-' if negative else '+') + body

        return output

    def parse(self, text : str) -> PolyElement:

        """
        Parses the grammar written by to_text(). Spaces are
        ignored. Auxiliary variables are referred to by
        their bare names.

        Parameters
        ----------
        text : str

        Returns
        ----------
        PolyElement
        """

        stripped = re.sub(r'\s+', '', text)
        if not stripped:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolynomialRing.parse()',
                                                                    'Empty polynomial.'))
        # Signs inside x_(i,j) are not term separators
        protected = re.sub( r'x_\((-?\d+),(-?\d+)\)',
                            lambda m: f"x_({m.group(1).replace('-', '~')};{m.group(2).replace('-', '~')})",
                            stripped)

        output = self.__ring.zero
        consumed = 0
        for match in PolynomialRing.__term_pattern.finditer(protected):
            if match.start() != consumed:
                break
            consumed = match.end()
            sign = -1 if match.group(1) == '-' else 1
            output += sign * self.__parse_term(match.group(2).replace(';', ',').replace('~', '-'), text)

        if consumed != len(protected):
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'PolynomialRing.parse()',
                                                                    f"Could not parse '{text}'."))
        return output

    def __parse_term(self, term : str, text : str) -> PolyElement:

        output = self.__ring.one
        for piece in term.split('*'):
            number = re.fullmatch(r'(\d+)(?:/(\d+))?', piece)
            if number is not None:
                output *= self.__domain.convert(int(number.group(1)))
                if number.group(2) is not None:
                    output = output.quo_ground(self.__domain.convert(int(number.group(2))))
                continue
            match = PolynomialRing.__factor_pattern.fullmatch(piece)
            if match is None:
                raise PolyominoIdealError(generate_exception_message(   1,
                                                                        'PolynomialRing.__parse_term()',
                                                                        f"Unexpected factor '{piece}' in '{text}'."))
            if match.group(2) is not None:
                variable = (int(match.group(2)), int(match.group(3)))
            else:
                variable = match.group(1)
            output *= self.gen(variable) ** int(match.group(4) or 1)

        return output

    def __repr__(self) -> str:
        return f"PolynomialRing({self.NumberOfVariables} variables over {self.__field}, order={self.Order})"
