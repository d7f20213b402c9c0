from typing import List, Tuple

from .Interval import Interval, Point

class PathDecomposition:

    """
    Result of PolyShape.classify_path().

    Attributes
    ----------
    Kind : str
        'openPath', 'closedPath' or 'notAPath'
    OrderedCells : tuple of Point
        The path ordering. For a closed path it is read
        cyclically. For 'notAPath' it is the sorted list
        of cells.
    MaximalBlocks : tuple of Interval
        Maximal sets of collinear consecutive cells, in
        path order. Empty for 'notAPath'.
    BlockCellIndices : tuple of tuple of int
        Indices, within OrderedCells, of the cells of
        each maximal block
    ChangesOfDirection : tuple of int
        Indices k such that the cells k - 1 and k + 1
        differ in both coordinates
    Turns : tuple of int
        For every pair of consecutive blocks, +1 if the
        path turns left at their common cell and -1 if
        it turns right. For a closed path, Turns[t] is
        the turn between blocks t and t + 1 (mod s).

    Methods
    ----------
    block_ranks() -> list of int
    to_dict() -> dict
    """

    def __init__(self,  kind : str,
                        ordered_cells : Tuple[Point, ...],
                        block_cell_indices : Tuple[Tuple[int, ...], ...] = (),
                        changes_of_direction : Tuple[int, ...] = (),
                        turns : Tuple[int, ...] = ()):

        self.__kind = kind
        self.__ordered_cells = tuple(ordered_cells)
        self.__block_cell_indices = tuple(tuple(b) for b in block_cell_indices)
        self.__changes_of_direction = tuple(changes_of_direction)
        self.__turns = tuple(turns)

        self.__maximal_blocks = tuple(  Interval.spanned_by_cells(  self.__ordered_cells[b[0]],
                                                                    self.__ordered_cells[b[-1]])
                                        for b in self.__block_cell_indices)

    #Getters
    @property
    def Kind(self):
        return self.__kind

    @property
    def OrderedCells(self):
        return self.__ordered_cells

    @property
    def MaximalBlocks(self):
        return self.__maximal_blocks

    @property
    def BlockCellIndices(self):
        return self.__block_cell_indices

    @property
    def ChangesOfDirection(self):
        return self.__changes_of_direction

    @property
    def Turns(self):
        return self.__turns

    def block_ranks(self) -> List[int]:
        return [len(b) for b in self.__block_cell_indices]

    def __canonical_key(self):

        cells = self.__ordered_cells
        if self.__kind == 'closedPath':
            n = len(cells)
            return (self.__kind, frozenset(frozenset((cells[k], cells[(k + 1) % n])) for k in range(n)))
        if self.__kind == 'openPath':
            return (self.__kind, min(cells, cells[::-1]))

        return (self.__kind, frozenset(cells))

    def __eq__(self, other) -> bool:

        """
        Two decompositions are equal if they describe the
        same path, up to reversal and, for closed paths,
        rotation of the ordering.
        """

        if not isinstance(other, PathDecomposition):
            return NotImplemented
        return self.__canonical_key() == other.__canonical_key()

    def __hash__(self) -> int:
        return hash(self.__canonical_key())

    def to_dict(self) -> dict:
        return {'kind': self.__kind,
                'orderedCells': [list(c) for c in self.__ordered_cells],
                'maximalBlocks': [b.to_list() for b in self.__maximal_blocks],
                'blockRanks': self.block_ranks(),
                'changesOfDirection': list(self.__changes_of_direction)}
