import re
import json
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import numba
import numpy as np
import networkx as nx
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .Interval import Interval, Point
from .EdgeInterval import EdgeInterval
from .StructureReport import StructureReport
from .Exceptions import generate_exception_message, CellParseError, PolyominoIdealError

logger = logging.getLogger(__name__)

class CellCollection:

    """
    A finite collection of cells of the integer lattice.
    Every cell is identified with its lower-left corner.
    The collection is canonicalized by translation, so
    that the minimal lower-left coordinates are (1, 1).
    Objects of this class are immutable, and equality
    and hashing rely on the canonical cells.

    Attributes
    ----------
    Cells : tuple of Point
        Canonical cells, sorted lexicographically
    CellSet : frozenset of Point
    Rank : int
        Number of cells. The empty collection has rank 0.
    CanonicalOffset : Point
        The translation which was applied to the input
        cells to reach the canonical form

    Methods
    ----------
    vertices() -> set of Point
    inner_intervals() -> list of Interval
    is_inner_interval(interval) -> bool
    maximal_edge_intervals(orientation) -> list of EdgeInterval
    structure() -> StructureReport
    cell_graph() -> networkx.Graph
    transformed(symmetry) -> CellCollection
    polyo_matrix() -> list of list of str
    to_text() / to_json()
    from_cells() / from_text() / from_json() / random_collection() / ferrers_diagram()
    """

    symmetries = (  lambda i, j: (i, j),        # The 8 symmetries of the square
                    lambda i, j: (-i, j),       # acting on cell coordinates
                    lambda i, j: (i, -j),
                    lambda i, j: (-i, -j),
                    lambda i, j: (j, i),
                    lambda i, j: (-j, i),
                    lambda i, j: (j, -i),
                    lambda i, j: (-j, -i))

    __edge_neighbourhood = ((1, 0), (-1, 0), (0, 1), (0, -1))
    __vertex_neighbourhood = __edge_neighbourhood + ((1, 1), (1, -1), (-1, 1), (-1, -1))

    def __init__(self, cells : Iterable[Sequence[int]] = ()):

        """
        CellCollection class initializer. Duplicated cells
        are tolerated.

        Parameters
        ----------
        cells : iterable of pairs of int
            Lower-left corners of the cells
        """

        raw = {(int(cell[0]), int(cell[1])) for cell in cells}

        if raw:
            offset = (1 - min(c[0] for c in raw), 1 - min(c[1] for c in raw))
        else:
            offset = (0, 0)

        self.__cells = tuple(sorted((c[0] + offset[0], c[1] + offset[1]) for c in raw))
        self.__cell_set = frozenset(self.__cells)
        self.__offset = offset

        self.__inner_intervals = None   # Computed lazily
        self.__structure = None

    #Getters
    @property
    def Cells(self):
        return self.__cells

    @property
    def CellSet(self):
        return self.__cell_set

    @property
    def Rank(self):
        return len(self.__cells)

    @property
    def CanonicalOffset(self):
        return self.__offset

    @property
    def Width(self) -> int:
        return max((c[0] for c in self.__cells), default=0)

    @property
    def Height(self) -> int:
        return max((c[1] for c in self.__cells), default=0)

    @classmethod
    def from_cells(cls, cells : Iterable[Sequence[int]]) -> 'CellCollection':
        return cls(cells)

    def __contains__(self, cell : Point) -> bool:
        return tuple(cell) in self.__cell_set

    def __len__(self) -> int:
        return len(self.__cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CellCollection):
            return NotImplemented
        return self.__cell_set == other.CellSet

    def __hash__(self) -> int:
        return hash(self.__cell_set)

    def __repr__(self) -> str:
        return f"CellCollection({self.to_text()})"

    def __getstate__(self) -> dict:
        return {'cells': self.__cells}

    def __setstate__(self, state : dict) -> None:
        self.__init__(state['cells'])

    def vertices(self) -> Set[Point]:
        return {(i + di, j + dj)    for (i, j) in self.__cells
                                    for di in (0, 1)
                                    for dj in (0, 1)}

    def occupancy(self) -> np.ndarray:

        """
        Returns a (Width x Height) integer numpy array
        whose entry [i - 1, j - 1] is 1 if the cell (i, j)
        belongs to the collection, and 0 otherwise.
        """

        grid = np.zeros((self.Width, self.Height), dtype = np.int64)
        for (i, j) in self.__cells:
            grid[i - 1, j - 1] = 1

        return grid

    def inner_intervals(self) -> List[Interval]:

        """
        Returns every proper interval whose cells all
        belong to the collection, sorted lexicographically
        by its diagonal corners.
        """

        if self.__inner_intervals is None:
            if not self.__cells:
                self.__inner_intervals = []
            else:
                raw = CellCollection.__scan_inner_intervals(self.occupancy())
                self.__inner_intervals = sorted(Interval((int(row[0]), int(row[1])), (int(row[2]), int(row[3])))
                                                for row in raw)

        return list(self.__inner_intervals)

    @staticmethod
    @numba.njit(nogil=True, parallel=False)
    def __scan_inner_intervals(occupancy : np.ndarray) -> np.ndarray:

        """
        This method is not intended for user usage. It
        must only be called by CellCollection.inner_intervals().
        Scans every proper interval of the bounding box
        using a 2D prefix sum of the occupancy grid. Each
        row of the returned array is (a.i, a.j, b.i, b.j).
        """

        width, height = occupancy.shape
        prefix = np.zeros((width + 1, height + 1), dtype = np.int64)

        for r in range(width):
            for s in range(height):
                prefix[r + 1, s + 1] = occupancy[r, s] + prefix[r, s + 1] + prefix[r + 1, s] - prefix[r, s]

        capacity = (width * (width + 1) // 2) * (height * (height + 1) // 2)
        intervals = np.empty((capacity, 4), dtype = np.int64)
        found = 0

        for i1 in range(width):
            for i2 in range(i1 + 1, width + 1):
                for j1 in range(height):
                    for j2 in range(j1 + 1, height + 1):
                        area = (i2 - i1) * (j2 - j1)
                        filled = prefix[i2, j2] - prefix[i1, j2] - prefix[i2, j1] + prefix[i1, j1]
                        if filled < area:   # Any taller interval contains this one
                            break
                        intervals[found, 0] = i1 + 1
                        intervals[found, 1] = j1 + 1
                        intervals[found, 2] = i2 + 1
                        intervals[found, 3] = j2 + 1
                        found += 1

        return intervals[:found]

    def is_inner_interval(self, interval : Interval) -> bool:
        return interval.IsProper and all(cell in self.__cell_set for cell in interval.cells())

    def maximal_edge_intervals(self, orientation : str) -> List[EdgeInterval]:

        """
        Parameters
        ----------
        orientation : str
            'horizontal' or 'vertical'

        Returns
        ----------
        list of EdgeInterval
            Every maximal edge interval of the given
            orientation, sorted by its lower corner
        """

        if orientation not in ('horizontal', 'vertical'):
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'CellCollection.maximal_edge_intervals()',
                                                                    f"Unknown orientation '{orientation}'."))

        lines : Dict[int, Set[int]] = {}    # line coordinate -> starting points of its unit edges
        for (i, j) in self.__cells:
            if orientation == 'horizontal':
                lines.setdefault(j, set()).add(i)
                lines.setdefault(j + 1, set()).add(i)
            else:
                lines.setdefault(i, set()).add(j)
                lines.setdefault(i + 1, set()).add(j)

        output = []
        for line in sorted(lines):
            starts = sorted(lines[line])
            run_start = previous = starts[0]
            for s in starts[1:] + [None]:
                if s is not None and s == previous + 1:
                    previous = s
                    continue
                if orientation == 'horizontal':
                    interval = Interval((run_start, line), (previous + 1, line))
                else:
                    interval = Interval((line, run_start), (line, previous + 1))
                output.append(EdgeInterval(interval, orientation, maximal = True))
                if s is not None:
                    run_start = previous = s

        return sorted(output, key = lambda e: (e.Interval.A, e.Interval.B))

    @staticmethod
    def __components(   cells : List[Point],
                        neighbourhood : Tuple[Point, ...]) -> List[List[Point]]:

        if not cells:
            return []

        index = {c: k for k, c in enumerate(cells)}
        rows, columns = [], []
        for k, (i, j) in enumerate(cells):
            for (di, dj) in neighbourhood:
                other = index.get((i + di, j + dj))
                if other is not None:
                    rows.append(k)
                    columns.append(other)

        graph = csr_matrix((np.ones(len(rows), dtype = np.int8), (rows, columns)),
                            shape = (len(cells), len(cells)))
        count, labels = connected_components(graph, directed = False)

        groups = [[] for _ in range(count)]
        for k, label in enumerate(labels):
            groups[label].append(cells[k])

        return sorted(sorted(group) for group in groups)

    def structure(self) -> StructureReport:

        if self.__structure is not None:
            return self.__structure

        cells = list(self.__cells)
        components = CellCollection.__components(cells, CellCollection.__edge_neighbourhood)
        weak_components = CellCollection.__components(cells, CellCollection.__vertex_neighbourhood)

        rows : Dict[int, List[int]] = {}
        columns : Dict[int, List[int]] = {}
        for (i, j) in cells:
            rows.setdefault(j, []).append(i)
            columns.setdefault(i, []).append(j)

        is_row_convex = all(max(v) - min(v) + 1 == len(v) for v in rows.values())
        is_column_convex = all(max(v) - min(v) + 1 == len(v) for v in columns.values())

        holes = []
        bounding_box = None
        if cells:
            bounding_box = Interval((1, 1), (self.Width + 1, self.Height + 1))
            complement = [  (i, j)  for i in range(0, self.Width + 2)
                                    for j in range(0, self.Height + 2)
                                    if (i, j) not in self.__cell_set]
            regions = CellCollection.__components(complement, CellCollection.__edge_neighbourhood)
            holes = [region for region in regions if (0, 0) not in region]     # (0, 0) lies in the outer ring

        self.__structure = StructureReport( len(cells),
                                            components,
                                            weak_components,
                                            is_row_convex,
                                            is_column_convex,
                                            holes,
                                            bounding_box)
        return self.__structure

    def cell_graph(self) -> nx.Graph:

        """
        Returns the graph whose vertices are 1, ..., n,
        one per cell (in the order of self.Cells, stored
        in the 'cell' node attribute), with an edge
        between cells which share an edge.
        """

        graph = nx.Graph()
        index = {cell: k + 1 for k, cell in enumerate(self.__cells)}
        for cell, k in index.items():
            graph.add_node(k, cell = cell)
        for (i, j), k in index.items():
            for other in ((i + 1, j), (i, j + 1)):
                if other in index:
                    graph.add_edge(k, index[other])

        return graph

    def transformed(self, symmetry : int) -> 'CellCollection':

        """
        Applies one of the 8 symmetries of the square,
        indexed 0 to 7 as in CellCollection.symmetries.
        Cell (i, j) covers [i, i+1] x [j, j+1], so the image
        of a cell is the cell whose lower-left corner is
        the minimum of the images of its four corners.
        """

        transform = CellCollection.symmetries[symmetry]
        images = []
        for (i, j) in self.__cells:
            corners = [transform(i + di, j + dj) for di in (0, 1) for dj in (0, 1)]
            images.append((min(c[0] for c in corners), min(c[1] for c in corners)))

        return CellCollection(images)

    def canonical_under_symmetry(self) -> 'CellCollection':

        """
        Returns the representative of the orbit of this
        collection under the 8 symmetries of the square
        whose sorted cells are lexicographically least.
        """

        return min((self.transformed(k) for k in range(8)), key = lambda c: c.Cells)

    def polyo_matrix(self) -> List[List[str]]:

        """
        Returns the matrix of the bounding box of the
        collection, listed from the top row to the bottom
        one. The entry of row j and column i is 'x_(i,j)'
        if (i, j) is a vertex of the collection, and '0'
        otherwise.
        """

        vertices = self.vertices()
        return [[f"x_({i},{j})" if (i, j) in vertices else '0'
                    for i in range(1, self.Width + 2)]
                    for j in range(self.Height + 1, 0, -1)]

    def to_text(self) -> str:
        return '{' + ','.join(f"{{{i},{j}}}" for (i, j) in self.__cells) + '}'

    def to_json(self) -> dict:
        return {'cells': [list(cell) for cell in self.__cells]}

    @classmethod
    def from_text(cls, text : str) -> 'CellCollection':

        """
        Parses the text form '{{i,j},{i,j},...}'.

        Parameters
        ----------
        text : str

        Returns
        ----------
        CellCollection
        """

        stripped = re.sub(r'\s+', '', text)
        if not re.fullmatch(r'\{(\{-?\d+,-?\d+\}(,\{-?\d+,-?\d+\})*)?\}', stripped):
            raise CellParseError(generate_exception_message(1,
                                                            'CellCollection.from_text()',
                                                            f"'{text}' does not match the grammar {{{{i,j}},{{i,j}},...}}."))

        return cls((int(i), int(j)) for i, j in re.findall(r'\{(-?\d+),(-?\d+)\}', stripped))

    @classmethod
    def from_json(cls, data : Union[str, dict]) -> 'CellCollection':

        """
        Parses {"cells": [[i, j], ...]}, given either as
        a string or as an already decoded dictionary.
        """

        try:
            if isinstance(data, str):
                data = json.loads(data)
            cells = data['cells']
            if not all(len(cell) == 2 and all(isinstance(x, int) for x in cell) for cell in cells):
                raise ValueError('every cell must be a pair of integers')
        except (ValueError, KeyError, TypeError) as error:
            raise CellParseError(generate_exception_message(1,
                                                            'CellCollection.from_json()',
                                                            f"Malformed cells document ({error})."))
        return cls(cells)

    @classmethod
    def parse(cls, text : str) -> 'CellCollection':

        """
        Parses either the JSON or the text form.
        """

        if text.lstrip().startswith('{"') or text.lstrip().startswith("{'"):
            return cls.from_json(text)

        return cls.from_text(text)

    @classmethod
    def random_collection(  cls,
                            max_rank : int,
                            seed : int = 0,
                            require_polyomino : bool = True,
                            fixed_rank : Optional[bool] = None) -> 'CellCollection':

        """
        Grows a random collection of cells from a single
        cell. The output is deterministic for a fixed seed.

        Parameters
        ----------
        max_rank : int
            Must be positive
        seed : int
        require_polyomino : bool
            If True, every new cell shares an edge with the
            current collection. Otherwise, it is drawn among
            the cells within Chebyshev distance 2, so that
            the result may be weakly connected or disconnected.
        fixed_rank : bool
            If True, the rank is exactly max_rank. Otherwise,
            it is drawn uniformly from 1, ..., max_rank. It
            defaults to require_polyomino.

        Returns
        ----------
        CellCollection
        """

        if max_rank < 1:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'CellCollection.random_collection()',
                                                                    f"'max_rank' must be positive (got {max_rank})."))
        if fixed_rank is None:
            fixed_rank = require_polyomino

        generator = np.random.default_rng(seed)
        target = max_rank if fixed_rank else int(generator.integers(1, max_rank + 1))

        if require_polyomino:
            steps = CellCollection.__edge_neighbourhood
        else:
            steps = tuple((di, dj)  for di in range(-2, 3)
                                    for dj in range(-2, 3)
                                    if (di, dj) != (0, 0))
        cells = {(0, 0)}
        while len(cells) < target:
            frontier = sorted({ (i + di, j + dj)    for (i, j) in cells
                                                    for (di, dj) in steps} - cells)
            cells.add(frontier[int(generator.integers(len(frontier)))])

        logger.debug("Random collection of rank %d drawn with seed %d", target, seed)
        return cls(cells)

    @classmethod
    def ferrers_diagram(cls,    u : Sequence[int],
                                r : Sequence[int]) -> 'CellCollection':

        """
        Builds the Ferrers diagram whose first r[0] columns
        consist of u[0] cells, the next r[1] columns of
        u[0] + u[1] cells, and so on.

        Parameters
        ----------
        u : sequence of int
        r : sequence of int
            Both must have the same length, with positive
            entries

        Returns
        ----------
        CellCollection
        """

        if len(u) != len(r) or not all(x > 0 for x in list(u) + list(r)):
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'CellCollection.ferrers_diagram()',
                                                                    f"Ill-formed parameters u={list(u)}, r={list(r)}."))
        cells = []
        column = 1
        height = 0
        for block_height, block_width in zip(u, r):
            height += block_height
            for _ in range(block_width):
                cells.extend((column, j) for j in range(1, height + 1))
                column += 1

        return cls(cells)
