from typing import Sequence

from scipy.special import comb

from .HilbertNumerator import HilbertNumerator
from .Exceptions import generate_exception_message, PolyominoIdealError

class UnivariateSeriesData:

    """
    The Hilbert series of a standard graded algebra R,
    written as h(t) / (1 - t)^d with h(1) != 0.

    Attributes
    ----------
    HCoefficients : list of int
        h(t) from the constant term up
    KrullDimension : int
        d
    NumeratorDegree : int
        Degree of the numerator over (1 - t)^n, where n
        is the number of variables
    """

    def __init__(self,  h_coefficients : Sequence[int],
                        krull_dimension : int,
                        numerator_degree : int):

        self.__h = [int(c) for c in h_coefficients]
        self.__d = int(krull_dimension)
        self.__numerator_degree = int(numerator_degree)

    #Getters
    @property
    def HCoefficients(self):
        return list(self.__h)

    @property
    def KrullDimension(self):
        return self.__d

    @property
    def NumeratorDegree(self):
        return self.__numerator_degree

    @property
    def Degree(self):
        return len(self.__h) - 1

    @property
    def Multiplicity(self):
        return sum(self.__h)

    @classmethod
    def from_numerator(cls, numerator : HilbertNumerator) -> 'UnivariateSeriesData':

        """
        Divides N(t) by (1 - t) as long as N(1) = 0, and
        subtracts the number of divisions from the number
        of variables to get the Krull dimension.
        """

        N = numerator.polynomial()
        if not N:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'UnivariateSeriesData.from_numerator()',
                                                                    'The ideal is the whole ring.'))
        degree = N.degree()
        t = HilbertNumerator.T
        divisions = 0
        while N(1) == 0:
            N = N.exquo(1 - t)
            divisions += 1

        h = [0] * (N.degree() + 1)
        for (e,), c in N.terms():
            h[e] = int(c)
        return cls(h, numerator.NumberOfVariables - divisions, degree)

    def hilbert_function(self, degree : int) -> int:

        """
        dim_K R_degree.
        """

        if degree < 0:
            return 0
        if self.__d == 0:
            return self.__h[degree] if degree < len(self.__h) else 0
        return sum(c * int(comb(degree - i + self.__d - 1, self.__d - 1, exact = True))
                   for i, c in enumerate(self.__h) if i <= degree)

    def is_palindromic(self) -> bool:
        return self.__h == self.__h[::-1]

    @staticmethod
    def format_polynomial(coefficients : Sequence[int], variable : str = 't') -> str:

        """
        Human readable form of an ascending coefficient
        list, e.g. [1, 4, 1] -> '1 + 4t + t^2'.
        """

        terms = []
        for e, c in enumerate(coefficients):
            if c == 0:
                continue
            power = '' if e == 0 else (variable if e == 1 else f"{variable}^{e}")
            magnitude = abs(c)
            body = str(magnitude) if e == 0 or magnitude != 1 else ''
            body += power
            if not terms:
                terms.append(('-' if c < 0 else '') + body)
            else:
                terms.append(('- ' if c < 0 else '+ ') + body)

        return ' '.join(terms) if terms else '0'

    def to_dict(self) -> dict:
        return {'h': self.HCoefficients,
                'krullDimension': self.__d,
                'numeratorDegree': self.__numerator_degree}

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnivariateSeriesData):
            return NotImplemented
        return (self.__h, self.__d) == (other.HCoefficients, other.KrullDimension)

    def __repr__(self) -> str:
        return f"UnivariateSeriesData(h={self.__h}, d={self.__d})"
