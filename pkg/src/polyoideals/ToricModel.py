import logging
from typing import List, Optional

import numpy as np
import networkx as nx

from .Interval import Interval, Point
from .CellCollection import CellCollection
from .PolyShape import PolyShape
from .IntegerLattice import IntegerLattice
from .PolynomialRing import PolynomialRing
from .Ideal import Ideal
from .Settings import Settings
from .Exceptions import generate_exception_message, PolyominoIdealError, ShapeMismatch

logger = logging.getLogger(__name__)

class ToricModel:

    """
    A monomial parametrization x_a -> psi(a) of the
    vertices of a collection of cells. Every vertex a
    lies on exactly one maximal vertical edge interval
    V_i and one maximal horizontal one H_j, and psi(a)
    is v_i h_j times the extra variables of the model:

        'graph'     nothing else
        'shikama'   u_e if a lies in the special interval
                    [a0, e], where a0 is the lower-left
                    corner of the bounding box and e the
                    lowest among the leftmost corners of
                    the removed convex region
        'mrr'       w_k for every hole k such that
                    a = (i, j) meets i <= i_k and j <= j_k,
                    (i_k, j_k) being the lower-left corner
                    of the hole

    The toric ideal is the kernel of the induced map, i.e.
    the lattice ideal of the integer kernel of the
    exponent matrix.

    Attributes
    ----------
    Collection : CellCollection
    Kind : str
    ModelVariables : list of str
    Vertices : list of Point
    ExponentMatrix : numpy.ndarray
        (model variables x vertices)

    Methods
    ----------
    edge_interval_graph() -> networkx.Graph
    kernel() -> IntegerLattice
    toric_ideal(ring, settings) -> Ideal
    """

    kinds = ('graph', 'shikama', 'mrr')

    def __init__(self,  collection : CellCollection,
                        kind : str = 'graph',
                        corner : Optional[Point] = None):

        """
        ToricModel class initializer

        Parameters
        ----------
        collection : CellCollection
        kind : str
            'graph', 'shikama' or 'mrr'
        corner : Point
            Overrides the corner e of the special interval
            of the 'shikama' model
        """

        if kind not in ToricModel.kinds:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'ToricModel.__init__()',
                                                                    f"Unknown toric model '{kind}'."))
        self.__collection = collection
        self.__kind = kind
        self.__vertices = sorted(collection.vertices())

        graph = self.edge_interval_graph()
        self.__model_variables = [n for n, side in graph.nodes(data = 'bipartite') if side == 0] \
                               + [n for n, side in graph.nodes(data = 'bipartite') if side == 1]
        rows = [self.__incidence(graph, name) for name in self.__model_variables]

        if kind == 'shikama':
            e = self.__special_corner() if corner is None else (int(corner[0]), int(corner[1]))
            special = Interval((1, 1), e)
            self.__model_variables.append('u_e')
            rows.append([int(special.contains_point(a)) for a in self.__vertices])
        elif kind == 'mrr':
            for k, hole in enumerate(collection.structure().HoleCells):
                i_k, j_k = min(hole)
                self.__model_variables.append(f"w{k + 1}")
                rows.append([int(a[0] <= i_k and a[1] <= j_k) for a in self.__vertices])

        self.__matrix = np.array(rows, dtype = np.int64).reshape(len(rows), len(self.__vertices))

    #Getters
    @property
    def Collection(self):
        return self.__collection

    @property
    def Kind(self):
        return self.__kind

    @property
    def ModelVariables(self):
        return list(self.__model_variables)

    @property
    def Vertices(self):
        return list(self.__vertices)

    @property
    def ExponentMatrix(self):
        return self.__matrix.copy()

    def edge_interval_graph(self) -> nx.Graph:

        """
        Bipartite graph whose nodes are the maximal
        vertical edge intervals (v1, v2, ...) and the
        horizontal ones (h1, h2, ...). Each vertex of the
        collection is the edge joining the two intervals
        it lies on, and is stored as its 'vertex' attribute.
        """

        vertical = self.__collection.maximal_edge_intervals('vertical')
        horizontal = self.__collection.maximal_edge_intervals('horizontal')

        graph = nx.Graph()
        graph.add_nodes_from((f"v{k + 1}" for k in range(len(vertical))), bipartite = 0)
        graph.add_nodes_from((f"h{k + 1}" for k in range(len(horizontal))), bipartite = 1)

        for a in self.__vertices:
            i = next(k for k, e in enumerate(vertical) if e.contains_point(a))
            j = next(k for k, e in enumerate(horizontal) if e.contains_point(a))
            graph.add_edge(f"v{i + 1}", f"h{j + 1}", vertex = a)

        return graph

    def __incidence(self, graph : nx.Graph, name : str) -> List[int]:
        touching = {graph.edges[name, other]['vertex'] for other in graph.neighbors(name)}
        return [int(a in touching) for a in self.__vertices]

    def __special_corner(self) -> Point:

        shape = PolyShape(self.__collection)
        if not shape.is_hq_complement():
            raise ShapeMismatch(generate_exception_message( 1,
                                                            'ToricModel.__special_corner()',
                                                            f"{self.__collection.to_text()} is not a rectangle minus a convex polyomino away from its border."))
        # Lower-left corner of the lowest cell of the leftmost removed column
        return min(shape.hole_cells())

    def kernel(self) -> IntegerLattice:
        return IntegerLattice.kernel_of(self.__matrix, self.__vertices)

    def toric_ideal(self,   ring : Optional[PolynomialRing] = None,
                            settings : Optional[Settings] = None) -> Ideal:

        """
        Returns
        ----------
        Ideal
            The kernel of x_a -> psi(a) in the given ring,
            which defaults to the vertex ring of settings
        """

        ring = PolynomialRing.for_vertices(self.__vertices, settings) if ring is None else ring
        lattice = self.kernel()
        logger.info("Toric model '%s' of %s: %d model variables, kernel of rank %d",
                    self.__kind, self.__collection.to_text(), len(self.__model_variables), len(lattice.Basis))
        return lattice.lattice_ideal(ring, settings)

    def to_dict(self) -> dict:
        return {'kind': self.__kind,
                'modelVariables': self.ModelVariables,
                'vertices': [list(a) for a in self.__vertices],
                'exponentMatrix': self.__matrix.tolist()}
