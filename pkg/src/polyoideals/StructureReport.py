from typing import List, Optional

from .Interval import Interval, Point

class StructureReport:

    """
    Wraps the structural predicates of a collection of
    cells. It is produced by CellCollection.structure().

    Attributes
    ----------
    Rank : int
        Number of cells
    IsPolyomino : bool
        True if the cell adjacency graph (cells sharing
        an edge) is connected. Vacuously True for rank 0.
    ConnectedComponents : list of list of Point
        Cells of each edge-connected component, every
        list sorted, the components sorted by their
        first cell
    WeaklyConnectedComponents : list of list of Point
        Same, for cells sharing at least a vertex
    IsRowConvex (resp. IsColumnConvex) : bool
        True if every row (resp. column) of cells of the
        collection has no gaps
    IsConvex : bool
        Row and column convex
    IsSimple : bool
        True if the complement of the collection, within
        its bounding box enlarged by one ring of cells,
        forms a single edge-connected region
    NumberOfHoles : int
        Number of bounded complement regions
    HoleCells : list of list of Point
        Cells of each bounded complement region
    BoundingBox : Interval or None
        None for the empty collection

    Methods
    ----------
    to_dict() -> dict
    """

    def __init__(self,  rank : int,
                        connected_components : List[List[Point]],
                        weakly_connected_components : List[List[Point]],
                        is_row_convex : bool,
                        is_column_convex : bool,
                        hole_cells : List[List[Point]],
                        bounding_box : Optional[Interval]):

        self.__rank = rank
        self.__connected_components = connected_components
        self.__weakly_connected_components = weakly_connected_components
        self.__is_row_convex = is_row_convex
        self.__is_column_convex = is_column_convex
        self.__hole_cells = hole_cells
        self.__bounding_box = bounding_box

    #Getters
    @property
    def Rank(self):
        return self.__rank

    @property
    def IsPolyomino(self):
        return len(self.__connected_components) <= 1

    @property
    def ConnectedComponents(self):
        return self.__connected_components

    @property
    def WeaklyConnectedComponents(self):
        return self.__weakly_connected_components

    @property
    def IsWeaklyConnected(self):
        return len(self.__weakly_connected_components) <= 1

    @property
    def IsRowConvex(self):
        return self.__is_row_convex

    @property
    def IsColumnConvex(self):
        return self.__is_column_convex

    @property
    def IsConvex(self):
        return self.__is_row_convex and self.__is_column_convex

    @property
    def IsSimple(self):
        return len(self.__hole_cells) == 0

    @property
    def NumberOfHoles(self):
        return len(self.__hole_cells)

    @property
    def HoleCells(self):
        return self.__hole_cells

    @property
    def BoundingBox(self):
        return self.__bounding_box

    def to_dict(self) -> dict:

        def as_lists(components : List[List[Point]]) -> List[List[List[int]]]:
            return [[list(cell) for cell in component] for component in components]

        return {'rank': self.__rank,
                'isPolyomino': self.IsPolyomino,
                'connectedComponents': as_lists(self.__connected_components),
                'weaklyConnectedComponents': as_lists(self.__weakly_connected_components),
                'isRowConvex': self.__is_row_convex,
                'isColumnConvex': self.__is_column_convex,
                'isConvex': self.IsConvex,
                'isSimple': self.IsSimple,
                'numberOfHoles': self.NumberOfHoles,
                'holeCells': as_lists(self.__hole_cells),
                'boundingBox': None if self.__bounding_box is None else self.__bounding_box.to_list()}
