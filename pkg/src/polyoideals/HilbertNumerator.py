import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Sequence

import numpy as np
import sympy as sp
from scipy.special import comb

from .Exceptions import generate_exception_message, PolyominoIdealError

logger = logging.getLogger(__name__)

class HilbertNumerator:

    """
    Numerator N(t) of the Hilbert series of S/I, where I
    is a monomial ideal of the polynomial ring S in n
    variables:

        HS(S/I) = N(t) / (1 - t)^n

    It is computed by the pivot recursion

        N(I) = N(I + (x)) + t N(I : x)

    on the variable x occurring in the largest number
    of minimal generators, down to the ideals whose
    generators are pairwise coprime.

    Attributes
    ----------
    Generators : numpy.ndarray
        Minimal generators, one exponent row each
    NumberOfVariables : int
    Coefficients : list of int
        N(t) from the constant term up

    Methods
    ----------
    polynomial() -> sympy PolyElement of ZZ[t]
    series(degree) -> list of int
    """

    Ring, T = sp.ring('t', sp.ZZ)

    def __init__(self,  generators : np.ndarray,
                        number_of_variables : int):

        """
        Parameters
        ----------
        generators : numpy.ndarray
            Exponent rows of monomial generators, not
            necessarily minimal
        number_of_variables : int
        """

        generators = np.asarray(generators, dtype = int)
        if generators.size == 0:
            generators = np.zeros((0, number_of_variables), dtype = int)
        generators = generators.reshape(len(generators), number_of_variables)
        self.__generators = HilbertNumerator.minimalize(generators)
        self.__n = number_of_variables
        self.__memo : Dict[bytes, object] = {}

        self.__numerator = self.__compute(self.__generators)
        logger.debug("Hilbert numerator of %d monomials: %d memoized ideals", len(self.__generators), len(self.__memo))

    #Getters
    @property
    def Generators(self):
        return self.__generators

    @property
    def NumberOfVariables(self):
        return self.__n

    @property
    def Coefficients(self) -> List[int]:
        if not self.__numerator:
            return [0]
        output = [0] * (self.__numerator.degree() + 1)
        for (e,), c in self.__numerator.terms():
            output[e] = int(c)
        return output

    def polynomial(self):
        return self.__numerator

    @staticmethod
    def minimalize(A : np.ndarray) -> np.ndarray:
        kept = []
        for m in A:
            if all(not np.all(m >= g) for g in kept):
                kept = [g for g in kept if not np.all(g >= m)]
                kept.append(m)
        if not kept:
            return np.zeros((0, A.shape[1]), dtype = int)
        return np.array(kept, dtype = int)

    @staticmethod
    def pivot(A : np.ndarray, column : int):

        """
        Splits on the variable of the given column.

        Returns
        ----------
        (numpy.ndarray, numpy.ndarray)
            Minimal generators of I + (x) and of I : x
        """

        p = np.zeros(A.shape[1], dtype = int)
        p[column] = 1
        left = [m for m in A if m[column] == 0] + [p]
        right = np.where(A >= p, A - p, 0)
        return np.array(left, dtype = int), HilbertNumerator.minimalize(right)

    def __key(self, A : np.ndarray) -> bytes:
        return np.ascontiguousarray(A[np.lexsort(A.T[::-1])]).tobytes() if len(A) else b''

    def __compute(self, A : np.ndarray):

        t = HilbertNumerator.T
        if len(A) == 0:
            return HilbertNumerator.Ring.one
        if np.any(np.all(A == 0, axis = 1)):
            return HilbertNumerator.Ring.zero

        key = self.__key(A)
        if key in self.__memo:
            return self.__memo[key]

        support = np.count_nonzero(A, axis = 0)
        if np.all(support <= 1):
            output = HilbertNumerator.Ring.one
            for degree in A.sum(axis = 1):
                output *= 1 - t**int(degree)
        else:
            left, right = HilbertNumerator.pivot(A, int(np.argmax(support)))
            output = self.__compute(left) + t * self.__compute(right)

        self.__memo[key] = output
        return output

    def series(self, degree : int) -> List[int]:

        """
        Coefficients of N(t) / (1 - t)^n up to the given
        degree, i.e. the values of the Hilbert function of
        S/I in degrees 0, ..., degree.
        """

        if degree < 0:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'HilbertNumerator.series()',
                                                                    f"Negative degree {degree}."))
        coefficients = self.Coefficients
        output = []
        for k in range(degree + 1):
            value = 0
            for i, c in enumerate(coefficients[:k + 1]):
                value += c * (int(comb(k - i + self.__n - 1, self.__n - 1, exact = True)) if self.__n > 0 else int(k == i))
            output.append(value)
        return output

    @staticmethod
    def count_standard_monomials(generators : Sequence[Sequence[int]], number_of_variables : int, degree : int) -> int:

        """
        Number of monomials of the given degree outside of
        the monomial ideal, by enumeration.
        """

        A = np.asarray(generators, dtype = int).reshape(-1, number_of_variables)
        count = 0
        for choice in combinations_with_replacement(range(number_of_variables), degree):
            m = np.bincount(np.array(choice, dtype = int), minlength = number_of_variables)
            if not any(np.all(m >= g) for g in A):
                count += 1
        return count
