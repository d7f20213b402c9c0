import logging
from typing import Dict, Iterable, List

import networkx as nx

from .Interval import Interval, Point
from .CellCollection import CellCollection
from .RookConfiguration import RookConfiguration
from .SwitchingClass import SwitchingClass
from .Exceptions import generate_exception_message
from .Exceptions import PolyominoIdealError, CellNotInCollection, Unimplemented

logger = logging.getLogger(__name__)

class RookBoard:

    """
    Rook theory on a collection of cells. Two rooks
    attack each other if their cells are in horizontal
    or vertical position and the interval they span is
    an inner interval of the collection.

    Attributes
    ----------
    Collection : CellCollection

    Methods
    ----------
    attacks(c1, c2) -> bool
    is_non_attacking(cells) -> bool
    rook_configurations(k) -> list of RookConfiguration
    rook_polynomial() -> list of int
    rook_number() -> int
    switches(configuration) -> list of RookConfiguration
    switching_classes(k) -> list of SwitchingClass
    switching_rook_polynomial() -> list of int
    standard_rook_configurations(k), standard_rook_polynomial(),
    standard_rook_number()
        Always raise Unimplemented
    """

    def __init__(self, collection : CellCollection):

        self.__collection = collection
        self.__levels = None    # k -> sorted list of k-rook configurations

    #Getters
    @property
    def Collection(self):
        return self.__collection

    def attacks(self, c1 : Point, c2 : Point) -> bool:

        """
        Parameters
        ----------
        c1 : Point
        c2 : Point
            Two different cells of the collection

        Returns
        ----------
        bool
        """

        for cell in (c1, c2):
            if tuple(cell) not in self.__collection:
                raise CellNotInCollection(generate_exception_message(   1,
                                                                        'RookBoard.attacks()',
                                                                        f"The cell {tuple(cell)} does not belong to {self.__collection.to_text()}."))
        if tuple(c1) == tuple(c2):
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'RookBoard.attacks()',
                                                                    f"Both rooks sit on {tuple(c1)}."))

        if c1[0] != c2[0] and c1[1] != c2[1]:
            return False

        return self.__collection.is_inner_interval(Interval.spanned_by_cells(tuple(c1), tuple(c2)))

    def is_non_attacking(self, cells : Iterable[Point]) -> bool:
        cells = sorted({tuple(c) for c in cells})
        return not any( self.attacks(cells[a], cells[b])
                        for a in range(len(cells)) for b in range(a + 1, len(cells)))

    def attack_graph(self) -> nx.Graph:

        graph = nx.Graph()
        cells = self.__collection.Cells
        graph.add_nodes_from(cells)
        graph.add_edges_from(   (cells[a], cells[b])    for a in range(len(cells))
                                                        for b in range(a + 1, len(cells))
                                                        if self.attacks(cells[a], cells[b]))
        return graph

    def __configurations_by_size(self) -> Dict[int, List[RookConfiguration]]:

        """
        Non-attacking configurations are the independent
        sets of the attack graph, i.e. the cliques of its
        complement. They are computed once and cached.
        """

        if self.__levels is None:
            levels : Dict[int, List[RookConfiguration]] = {0: [RookConfiguration(())]}
            if self.__collection.Rank > 0:
                for clique in nx.enumerate_all_cliques(nx.complement(self.attack_graph())):
                    levels.setdefault(len(clique), []).append(RookConfiguration(clique))
            self.__levels = {k: sorted(v) for k, v in levels.items()}
            logger.debug("Rook configurations of %s: %s", self.__collection.to_text(),
                            {k: len(v) for k, v in self.__levels.items()})

        return self.__levels

    def rook_configurations(self, k : int) -> List[RookConfiguration]:

        if k < 0:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'RookBoard.rook_configurations()',
                                                                    f"The number of rooks must be nonnegative (got {k})."))
        return list(self.__configurations_by_size().get(k, []))

    def rook_polynomial(self) -> List[int]:

        """
        Returns the coefficients r_0, ..., r_m of the rook
        polynomial, where r_k is the number of k-rook
        configurations and m is the rook number.
        """

        levels = self.__configurations_by_size()
        return [len(levels[k]) for k in range(max(levels) + 1)]

    def rook_number(self) -> int:
        return max(self.__configurations_by_size())

    def switches(self, configuration : RookConfiguration) -> List[RookConfiguration]:

        """
        Returns every configuration reached by a single
        switch: two rooks sitting at the diagonal (resp.
        anti-diagonal) corner cells of an inner interval
        move to its anti-diagonal (resp. diagonal) corner
        cells. Only non-attacking results are kept.
        """

        rooks = configuration.Rooks
        output = set()
        for a in range(len(rooks)):
            for b in range(a + 1, len(rooks)):
                first, second = rooks[a], rooks[b]
                if first[0] == second[0] or first[1] == second[1]:
                    continue
                if not self.__collection.is_inner_interval(Interval.spanned_by_cells(first, second)):
                    continue
                moved = configuration.switched( (first, second),
                                                ((first[0], second[1]), (second[0], first[1])))
                if moved.Size == configuration.Size and self.is_non_attacking(moved.Rooks):
                    output.add(moved)

        return sorted(output)

    def switching_classes(self, k : int) -> List[SwitchingClass]:

        """
        Connected components of the graph whose vertices
        are the k-rook configurations and whose edges are
        single switches, sorted by representative.
        """

        configurations = self.rook_configurations(k)
        graph = nx.Graph()
        graph.add_nodes_from(configurations)
        for configuration in configurations:
            graph.add_edges_from((configuration, other) for other in self.switches(configuration))

        classes = [SwitchingClass(min(component), len(component)) for component in nx.connected_components(graph)]
        return sorted(classes, key = lambda c: c.Representative)

    def switching_rook_polynomial(self) -> List[int]:
        return [len(self.switching_classes(k)) for k in range(self.rook_number() + 1)]

    def __unimplemented(self, name : str):
        raise Unimplemented(generate_exception_message( 1,
                                                        f"RookBoard.{name}()",
                                                        "Standard rook configurations are defined elsewhere and are not available here."))

    def standard_rook_configurations(self, k : int) -> List[RookConfiguration]:
        self.__unimplemented('standard_rook_configurations')

    def standard_rook_polynomial(self) -> List[int]:
        self.__unimplemented('standard_rook_polynomial')

    def standard_rook_number(self) -> int:
        self.__unimplemented('standard_rook_number')
