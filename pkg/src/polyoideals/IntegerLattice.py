import logging
from typing import List, Optional, Sequence

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .PolynomialRing import PolynomialRing, Variable
from .Ideal import Ideal
from .Settings import Settings
from .Exceptions import generate_exception_message, PolyominoIdealError

logger = logging.getLogger(__name__)

class IntegerLattice:

    """
    A sublattice L of Z^n given by a list of generating
    vectors, whose coordinates are indexed by the
    variables of a polynomial ring. Its lattice ideal
    is the ideal generated by x^{u+} - x^{u-} for u in L,
    obtained by saturating the binomials of a basis of L
    by the product of all the variables.

    Attributes
    ----------
    Basis : numpy.ndarray
        One generating vector per row
    Variables : tuple of Variable
        Label of every column
    Rank : int

    Methods
    ----------
    invariant_factors() -> list of int
    is_saturated() -> bool
    binomials(ring) -> list of PolyElement
    lattice_ideal(ring, settings) -> Ideal
    kernel_basis(matrix) -> numpy.ndarray
    """

    def __init__(self,  basis : Sequence[Sequence[int]],
                        variables : Sequence[Variable]):

        self.__variables = tuple(variables)
        basis = np.asarray(basis, dtype = np.int64)
        self.__basis = basis.reshape(-1, len(self.__variables)) if basis.size else np.zeros((0, len(self.__variables)), dtype = np.int64)
        self.__invariant_factors = None

    #Getters
    @property
    def Basis(self):
        return self.__basis.copy()

    @property
    def Variables(self):
        return self.__variables

    @property
    def Rank(self) -> int:
        return len(self.invariant_factors())

    def invariant_factors(self) -> List[int]:

        """
        Nonzero elementary divisors of the basis matrix,
        read from the diagonal of its Smith normal form.
        """

        if self.__invariant_factors is None:
            if self.__basis.size == 0:
                self.__invariant_factors = []
            else:
                snf = smith_normal_form(Matrix(self.__basis.tolist()), domain = ZZ)
                diagonal = [abs(int(snf[k, k])) for k in range(min(snf.shape))]
                self.__invariant_factors = sorted(d for d in diagonal if d != 0)
        return list(self.__invariant_factors)

    def is_saturated(self) -> bool:

        """
        L is saturated, i.e. Z^n / L is torsion free, iff
        every nonzero invariant factor equals 1.
        """

        return all(d == 1 for d in self.invariant_factors())

    @staticmethod
    def kernel_basis(matrix : Sequence[Sequence[int]]) -> np.ndarray:

        """
        Integer basis of {u in Z^n : matrix u = 0}. The
        transposed matrix is augmented with the identity
        and reduced by unimodular row operations; the rows
        whose left part vanishes carry a kernel basis.

        Parameters
        ----------
        matrix : (m x n) integer matrix

        Returns
        ----------
        numpy.ndarray
            (k x n), k = n - rank(matrix)
        """

        A = np.asarray(matrix, dtype = np.int64)
        m, n = A.shape
        rows = [[int(x) for x in A[:, r]] + [int(r == c) for c in range(n)] for r in range(n)]

        pivot = 0
        for column in range(m):
            while True:
                candidates = [r for r in range(pivot, n) if rows[r][column] != 0]
                if not candidates:
                    break
                best = min(candidates, key = lambda r: abs(rows[r][column]))
                rows[pivot], rows[best] = rows[best], rows[pivot]
                done = True
                for r in range(pivot + 1, n):
                    if rows[r][column] != 0:
                        q = rows[r][column] // rows[pivot][column]
                        rows[r] = [x - q * y for x, y in zip(rows[r], rows[pivot])]
                        if rows[r][column] != 0:
                            done = False
                if done:
                    pivot += 1
                    break
            if pivot == n:
                break

        kernel = [row[m:] for row in rows[pivot:]]
        if not kernel:
            return np.zeros((0, n), dtype = np.int64)
        return np.array(kernel, dtype = np.int64)

    @classmethod
    def kernel_of(cls,  matrix : Sequence[Sequence[int]],
                        variables : Sequence[Variable]) -> 'IntegerLattice':
        return cls(IntegerLattice.kernel_basis(matrix), variables)

    def binomials(self, ring : PolynomialRing) -> List:

        """
        x^{u+} - x^{u-} for every basis vector u.
        """

        output = []
        for u in self.__basis:
            positive = ring.Ring.one
            negative = ring.Ring.one
            for variable, e in zip(self.__variables, u):
                if e > 0:
                    positive *= ring.gen(variable) ** int(e)
                elif e < 0:
                    negative *= ring.gen(variable) ** int(-e)
            output.append(positive - negative)

        return [f for f in output if f]

    def lattice_ideal(self, ring : PolynomialRing,
                            settings : Optional[Settings] = None) -> Ideal:

        """
        Parameters
        ----------
        ring : PolynomialRing
            Must contain every variable of the lattice
        settings : Settings

        Returns
        ----------
        Ideal
            Saturation of the basis binomials by all the
            variables of the lattice, generated by its
            reduced Groebner basis
        """

        missing = set(self.__variables).difference(ring.Variables)
        if missing:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'IntegerLattice.lattice_ideal()',
                                                                    f"{len(missing)} lattice coordinates are not variables of the ring."))
        generators = Ideal(self.binomials(ring), ring, settings)
        logger.debug("Lattice ideal of a rank %d lattice from %d binomials", len(self.__basis), len(generators))
        return generators.saturate(list(self.__variables)).reduced()

    def __repr__(self) -> str:
        return f"IntegerLattice({len(self.__basis)} generators in Z^{len(self.__variables)})"
