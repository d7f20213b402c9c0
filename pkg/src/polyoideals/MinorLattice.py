import numpy as np

from .Interval import Interval
from .CellCollection import CellCollection
from .IntegerLattice import IntegerLattice

class MinorLattice(IntegerLattice):

    """
    The lattice of Z^{V(P)} spanned by the exponent
    vectors of the inner 2-minors of a collection of
    cells. The minors of the unit cells already span it,
    so there is one row per cell: +1 at the diagonal
    corners and -1 at the anti-diagonal ones. Columns
    follow the vertices sorted by (i, j).

    Attributes
    ----------
    Collection : CellCollection
    Matrix : numpy.ndarray
    IsSaturated : bool
    """

    def __init__(self, collection : CellCollection):

        self.__collection = collection
        vertices = sorted(collection.vertices())
        column = {v: k for k, v in enumerate(vertices)}

        matrix = np.zeros((collection.Rank, len(vertices)), dtype = np.int64)
        for row, cell in enumerate(collection.Cells):
            matrix[row] = MinorLattice.exponent_vector(Interval.of_cell(cell), column, len(vertices))

        super().__init__(matrix, vertices)

    #Getters
    @property
    def Collection(self):
        return self.__collection

    @property
    def Matrix(self):
        return self.Basis

    @property
    def IsSaturated(self):
        return self.is_saturated()

    @staticmethod
    def exponent_vector(interval : Interval,
                        column : dict,
                        size : int) -> np.ndarray:
        output = np.zeros(size, dtype = np.int64)
        output[column[interval.A]] += 1
        output[column[interval.B]] += 1
        output[column[interval.C]] -= 1
        output[column[interval.D]] -= 1
        return output

    def to_dict(self) -> dict:
        return {'vertices': [list(v) for v in self.Variables],
                'matrix': self.Basis.tolist(),
                'invariantFactors': self.invariant_factors(),
                'saturated': self.is_saturated()}
