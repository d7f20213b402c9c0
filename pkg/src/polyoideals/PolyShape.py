import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .Interval import Interval, Point
from .CellCollection import CellCollection
from .PathDecomposition import PathDecomposition
from .StairReport import StairReport
from .ZigZagWalk import ZigZagWalk
from .Settings import Settings
from .Exceptions import generate_exception_message
from .Exceptions import NotAPolyomino, NotAPath, NotAClosedPath, NotConvex, SearchBudgetExceeded

logger = logging.getLogger(__name__)

class PolyShape:

    """
    Shape classification of a collection of cells
    beyond connectivity and convexity: thinness, open
    and closed paths, their blocks, L-configurations,
    ladders and stairs, k-convexity, complements of
    convex holes and the zig-zag walk search.

    Attributes
    ----------
    Collection : CellCollection
    Settings : Settings

    Methods
    ----------
    is_thin() -> bool
    classify_path() -> PathDecomposition
    closed_path_features() -> dict
    find_zig_zag_walks(max_walks) -> list of ZigZagWalk
    convexity_degree() -> int
    is_k_convex(k) -> bool
    stair_analysis() -> StairReport
    is_hq_complement() -> bool
    hole_cells() -> list of Point
    pseudo_gorenstein_path_criterion() -> bool
    """

    __quadrant_at = {'A': 'NE', 'B': 'SW', 'C': 'SE', 'D': 'NW'}   # Where an interval lies, seen from each of its corners
    __opposite_quadrant = {'NE': 'SW', 'SW': 'NE', 'SE': 'NW', 'NW': 'SE'}

    def __init__(self,  collection : CellCollection,
                        settings : Optional[Settings] = None):

        self.__collection = collection
        self.__settings = Settings() if settings is None else settings
        self.__path = None

    #Getters
    @property
    def Collection(self):
        return self.__collection

    @property
    def Settings(self):
        return self.__settings

    def is_thin(self) -> bool:

        """
        Returns True if the collection contains no 2x2
        square of cells.
        """

        cells = self.__collection.CellSet
        return not any( (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
                        for (i, j) in cells)

    def __neighbours(self, cell : Point) -> List[Point]:
        i, j = cell
        return [c for c in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)) if c in self.__collection]

    @staticmethod
    def __disjoint(first : Point, second : Point) -> bool:
        return abs(first[0] - second[0]) > 1 or abs(first[1] - second[1]) > 1

    def classify_path(self) -> PathDecomposition:

        """
        Decides whether the cells admit an ordering
        A_1, ..., A_n where consecutive cells share an
        edge and A_i, A_j share no vertex whenever j is
        not within i - 2, ..., i + 2. The indices are read
        cyclically for a closed path, which also needs
        n > 5. An open path starts at its lexicographically
        smallest end and a closed path at its smallest
        cell, moving towards its smallest neighbour.

        Returns
        ----------
        PathDecomposition
        """

        if self.__path is not None:
            return self.__path

        collection = self.__collection
        if collection.Rank == 0 or not collection.structure().IsPolyomino:
            raise NotAPolyomino(generate_exception_message( 1,
                                                            'PolyShape.classify_path()',
                                                            f"{collection.to_text()} is not a nonempty polyomino."))
        not_a_path = PathDecomposition('notAPath', collection.Cells)
        n = collection.Rank

        if n == 1:
            self.__path = PathDecomposition('openPath', collection.Cells, block_cell_indices = ((0,),))
            return self.__path

        neighbours = {cell: self.__neighbours(cell) for cell in collection.Cells}
        if any(len(v) > 2 for v in neighbours.values()):
            self.__path = not_a_path
            return self.__path

        ends = [cell for cell, v in neighbours.items() if len(v) == 1]
        closed = len(ends) == 0
        start = min(ends) if ends else collection.Cells[0]

        order = [start]
        previous, current = None, start
        following = min(neighbours[start])
        while following is not None and following != start:
            order.append(following)
            previous, current = current, following
            candidates = [c for c in neighbours[current] if c != previous]
            following = candidates[0] if candidates else None

        if closed:
            valid = n > 5 and all(  PolyShape.__disjoint(order[a], order[b])
                                    for a in range(n) for b in range(a + 1, n)
                                    if min(b - a, n - b + a) > 2)
        else:
            valid = all(PolyShape.__disjoint(order[a], order[b])
                        for a in range(n) for b in range(a + 3, n))
        if not valid:
            self.__path = not_a_path
            return self.__path

        self.__path = PolyShape.__decompose(order, closed)
        logger.debug("%s classified as %s with %d blocks", collection.to_text(), self.__path.Kind, len(self.__path.MaximalBlocks))
        return self.__path

    @staticmethod
    def __decompose(order : List[Point], closed : bool) -> PathDecomposition:

        """
        Splits an ordered path into its maximal blocks.
        The lexicographically smallest cell of a closed path
        is always a change of direction, so that the first
        block of a closed path starts at index 0.
        """

        n = len(order)
        steps = [(order[(k + 1) % n][0] - order[k][0], order[(k + 1) % n][1] - order[k][1])
                    for k in range(n if closed else n - 1)]

        if closed:
            changes = [k for k in range(n) if steps[k - 1] != steps[k]]
        else:
            changes = [k for k in range(1, n - 1) if steps[k - 1] != steps[k]]

        def turn(k : int) -> int:
            before, after = steps[k - 1], steps[k]
            return 1 if before[0] * after[1] - before[1] * after[0] > 0 else -1

        if closed:
            bounds = changes + [changes[0] + n]
            blocks = [tuple(k % n for k in range(bounds[t], bounds[t + 1] + 1)) for t in range(len(changes))]
            turns = [turn(changes[(t + 1) % len(changes)]) for t in range(len(changes))]
        else:
            bounds = [0] + changes + [n - 1]
            blocks = [tuple(range(bounds[t], bounds[t + 1] + 1)) for t in range(len(bounds) - 1)]
            turns = [turn(k) for k in changes]

        return PathDecomposition(   'closedPath' if closed else 'openPath',
                                    tuple(order),
                                    block_cell_indices = tuple(blocks),
                                    changes_of_direction = tuple(changes),
                                    turns = tuple(turns))

    @staticmethod
    def __staircase_links(path : PathDecomposition) -> List[bool]:

        """
        Entry t tells whether the blocks t, t + 1, t + 2
        (cyclically for a closed path) form a step, i.e.
        the middle block has rank 2 and the path turns
        in opposite senses at its two ends.
        """

        ranks, turns = path.block_ranks(), path.Turns
        s = len(ranks)

        if path.Kind == 'closedPath':
            return [ranks[(t + 1) % s] == 2 and turns[t] != turns[(t + 1) % s] for t in range(s)]

        return [ranks[t + 1] == 2 and turns[t] != turns[t + 1] for t in range(s - 2)]

    def closed_path_features(self) -> Dict[str, object]:

        """
        Returns
        ----------
        dict
            'hasLConfiguration' is True if five consecutive
            cells C_1, ..., C_5 are such that C_1, C_2, C_3
            and C_3, C_4, C_5 are collinear in orthogonal
            directions. 'maxLadderSteps' is the largest
            number of parallel blocks joined, one to the
            next, by rank-2 blocks at whose ends the path
            turns in opposite senses, all the steps shifting
            the same way (the turns repeat every two blocks).
        """

        path = self.classify_path()
        if path.Kind != 'closedPath':
            raise NotAClosedPath(generate_exception_message(1,
                                                            'PolyShape.closed_path_features()',
                                                            f"{self.__collection.to_text()} is a {path.Kind}."))
        cells = path.OrderedCells
        n = len(cells)
        steps = [(cells[(k + 1) % n][0] - cells[k][0], cells[(k + 1) % n][1] - cells[k][1]) for k in range(n)]

        has_l_configuration = any(  steps[k] == steps[(k + 1) % n]
                                    and steps[(k + 2) % n] == steps[(k + 3) % n]
                                    and steps[(k + 1) % n] != steps[(k + 2) % n]
                                    for k in range(n))

        links = PolyShape.__staircase_links(path)
        turns = path.Turns
        s = len(links)
        max_steps = 0
        for t in range(s):
            length = 0
            while length < s // 2 and links[(t + 2 * length) % s] \
                                  and turns[(t + 2 * length) % s] == turns[t]:
                length += 1
            if length > 0:
                max_steps = max(max_steps, length + 1)

        return {'hasLConfiguration': has_l_configuration,
                'maxLadderSteps': max_steps}

    def stair_analysis(self) -> StairReport:

        """
        Identifies the stairs of an open path: maximal
        runs of consecutive steps, each of which is made
        of three consecutive blocks with a middle block
        of rank 2 and opposite turns at its ends.
        """

        path = self.classify_path()
        if path.Kind != 'openPath':
            raise NotAPath(generate_exception_message(  1,
                                                        'PolyShape.stair_analysis()',
                                                        f"{self.__collection.to_text()} is not an open path ({path.Kind})."))
        links = PolyShape.__staircase_links(path)
        stairs = []
        t = 0
        while t < len(links):
            if not links[t]:
                t += 1
                continue
            first = t
            while t < len(links) and links[t]:
                t += 1
            stairs.append((first, t - first + 2))

        return StairReport(stairs)

    def pseudo_gorenstein_path_criterion(self) -> bool:

        """
        Combinatorial criterion for open paths: either the
        path is a single cell, or it has s >= 2 maximal
        blocks of ranks l_1, ..., l_s with l_1 = l_s = 2,
        every other l_k <= 3, and it contains no odd stair.
        """

        path = self.classify_path()
        if path.Kind != 'openPath':
            raise NotAPath(generate_exception_message(  1,
                                                        'PolyShape.pseudo_gorenstein_path_criterion()',
                                                        f"{self.__collection.to_text()} is not an open path ({path.Kind})."))
        if self.__collection.Rank == 1:
            return True

        ranks = path.block_ranks()
        if len(ranks) < 2:
            return False

        return  ranks[0] == 2 and ranks[-1] == 2 \
                and all(l <= 3 for l in ranks[1:-1]) \
                and not self.stair_analysis().OddStairs

    def convexity_degree(self) -> int:

        """
        Returns the least k such that every two cells are
        joined by a monotone path of cells with at most k
        changes of direction. The collection must be a
        convex polyomino.
        """

        report = self.__collection.structure()
        if not (report.IsPolyomino and report.IsConvex):
            raise NotConvex(generate_exception_message( 1,
                                                        'PolyShape.convexity_degree()',
                                                        f"{self.__collection.to_text()} is not a convex polyomino."))
        cells = self.__collection.Cells
        degree = 0
        for horizontal in (1, -1):
            for vertical in (1, -1):
                graph = self.__monotone_state_graph(horizontal, vertical)
                for source in cells:
                    distances = nx.multi_source_dijkstra_path_length(graph, {(source, 'h'), (source, 'v')})
                    for target in cells:
                        if (target[0] - source[0]) * horizontal < 0 or (target[1] - source[1]) * vertical < 0:
                            continue
                        reached = [distances[(target, d)] for d in ('h', 'v') if (target, d) in distances]
                        if not reached:     # Cannot happen on a convex polyomino
                            raise NotConvex(generate_exception_message( 2,
                                                                        'PolyShape.convexity_degree()',
                                                                        f"No monotone path from {source} to {target}."))
                        degree = max(degree, min(reached))

        return degree

    def __monotone_state_graph(self, horizontal : int, vertical : int) -> nx.DiGraph:

        """
        Directed graph on (cell, last move) states, where
        a move keeps its weight 0 if it does not change
        direction and costs 1 otherwise.
        """

        graph = nx.DiGraph()
        for cell in self.__collection.Cells:
            for kind, (di, dj) in (('h', (horizontal, 0)), ('v', (0, vertical))):
                target = (cell[0] + di, cell[1] + dj)
                if target not in self.__collection:
                    continue
                graph.add_edge((cell, kind), (target, kind), weight = 0)
                graph.add_edge((cell, 'v' if kind == 'h' else 'h'), (target, kind), weight = 1)
            graph.add_node((cell, 'h'))
            graph.add_node((cell, 'v'))

        return graph

    def is_k_convex(self, k : int) -> bool:
        return self.convexity_degree() <= k

    def hole_cells(self) -> List[Point]:

        """
        Returns the cells of the bounding box of the
        collection which do not belong to it.
        """

        collection = self.__collection
        return [(i, j)  for i in range(1, collection.Width + 1)
                        for j in range(1, collection.Height + 1)
                        if (i, j) not in collection]

    def is_hq_complement(self) -> bool:

        """
        Returns True if the collection is a polyomino
        obtained by removing, from its bounding box, a
        nonempty convex polyomino none of whose cells
        lies on the border of the box.
        """

        collection = self.__collection
        if collection.Rank == 0 or not collection.structure().IsPolyomino:
            return False

        removed = self.hole_cells()
        if not removed:
            return False
        if any(i in (1, collection.Width) or j in (1, collection.Height) for (i, j) in removed):
            return False

        report = CellCollection(removed).structure()
        return report.IsPolyomino and report.IsConvex

    def find_zig_zag_walks(self, max_walks : Optional[int] = None) -> List[ZigZagWalk]:

        """
        Exhaustive depth-first search of zig-zag walks.
        Every walk is found once: it starts at its inner
        interval of least index, and a walk and its
        reversal count as the same walk. Every returned
        walk is re-validated by ZigZagWalk.validate().

        Parameters
        ----------
        max_walks : int
            If given, the search stops as soon as this many
            walks have been found

        Returns
        ----------
        list of ZigZagWalk
            An empty list means that no walk exists
        """

        collection = self.__collection
        intervals = collection.inner_intervals()
        budget = self.__settings.ZigZagBudget

        corner_map : Dict[Tuple[Point, str], List[int]] = {}
        for index, interval in enumerate(intervals):
            for name, corner in zip('ABCD', interval.corners()):
                corner_map.setdefault((corner, PolyShape.__quadrant_at[name]), []).append(index)

        def quadrant(interval : Interval, corner : Point) -> str:
            name = 'ABCD'[interval.corners().index(corner)]
            return PolyShape.__quadrant_at[name]

        share_cache : Dict[Tuple[Point, Point], bool] = {}
        def share(p : Point, q : Point) -> bool:
            key = (min(p, q), max(p, q))
            if key not in share_cache:
                share_cache[key] = ZigZagWalk.share_inner_interval(collection, p, q)
            return share_cache[key]

        found = []
        seen = set()
        nodes = 0

        def extend(chain : List[int], v : List[Point], z : List[Point]) -> bool:

            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(generate_exception_message(  1,
                                                                        'PolyShape.find_zig_zag_walks()',
                                                                        f"More than {budget} search nodes visited on {collection.to_text()}."))
            current = intervals[chain[-1]]
            for exit_ in current.adjacent_corners(v[-1]):
                if exit_ == v[0]:
                    first = intervals[chain[0]]
                    if len(chain) >= 4 and len(chain) % 2 == 0 \
                        and quadrant(first, exit_) == PolyShape.__opposite_quadrant[quadrant(current, exit_)]:
                        walk = ZigZagWalk([intervals[k] for k in chain], v)
                        key = (frozenset(chain), frozenset((frozenset(walk.Z), frozenset(walk.U))))
                        if key not in seen:
                            seen.add(key)
                            walk.validate(collection)
                            found.append(walk)
                            if max_walks is not None and len(found) >= max_walks:
                                return True
                    continue
                if exit_ in v:
                    continue
                wanted = PolyShape.__opposite_quadrant[quadrant(current, exit_)]
                for following in corner_map.get((exit_, wanted), []):
                    if following <= chain[0] or following in chain:
                        continue
                    new_z = intervals[following].opposite_corner(exit_)
                    if any(share(new_z, previous) for previous in z):
                        continue
                    chain.append(following)
                    v.append(exit_)
                    z.append(new_z)
                    stop = extend(chain, v, z)
                    chain.pop()
                    v.pop()
                    z.pop()
                    if stop:
                        return True
            return False

        for start, interval in enumerate(intervals):
            for entry in interval.corners():
                if extend([start], [entry], [interval.opposite_corner(entry)]):
                    break
            if max_walks is not None and len(found) >= max_walks:
                break

        logger.debug("Zig-zag search on %s: %d walks, %d nodes", collection.to_text(), len(found), nodes)
        return found
