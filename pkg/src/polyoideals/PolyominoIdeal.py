import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np
from sympy.polys.rings import PolyElement

from .Interval import Interval, Point
from .CellCollection import CellCollection
from .PolyShape import PolyShape
from .ZigZagWalk import ZigZagWalk
from .PolynomialRing import PolynomialRing
from .Ideal import Ideal
from .IntegerLattice import IntegerLattice
from .MinorLattice import MinorLattice
from .ToricModel import ToricModel
from .HilbertNumerator import HilbertNumerator
from .UnivariateSeriesData import UnivariateSeriesData
from .PrimalityVerdict import PrimalityVerdict
from .Settings import Settings
from .Exceptions import generate_exception_message
from .Exceptions import PolyominoIdealError, BudgetExceeded, NotAClosedPath, NotApplicable

logger = logging.getLogger(__name__)

class PolyominoIdeal:

    """
    The polyomino ideal I_P of a collection of cells P,
    generated by the inner 2-minors x_a x_b - x_c x_d of
    the inner intervals of P, where a, b (resp. c, d) are
    the diagonal (resp. anti-diagonal) corners. It lives
    in the polynomial ring of the vertices of P, whose
    field and monomial order come from the settings.

    Attributes
    ----------
    Collection : CellCollection
    Settings : Settings
    Ring : PolynomialRing
    Shape : PolyShape

    Methods
    ----------
    inner_minor_ideal() -> Ideal
    adjacent_minor_ideal() -> Ideal
    minor_lattice() -> MinorLattice
    lattice_ideal() -> Ideal
    toric_ideal(model, corner) -> Ideal
    zigzag_binomial(walk) -> PolyElement
    is_prime(method) -> PrimalityVerdict
    radical_via_admissible() -> Ideal
    closed_path_p1() -> (Ideal, PrimalityVerdict, int)
    """

    def __init__(self,  collection : CellCollection,
                        settings : Optional[Settings] = None):

        self.__collection = collection
        self.__settings = Settings() if settings is None else settings
        self.__ring = PolynomialRing.for_vertices(collection.vertices(), self.__settings)
        self.__shape = PolyShape(collection, self.__settings)

        self.__inner_minor_ideal = None
        self.__lattice_ideal = None

    #Getters
    @property
    def Collection(self):
        return self.__collection

    @property
    def Settings(self):
        return self.__settings

    @property
    def Ring(self):
        return self.__ring

    @property
    def Shape(self):
        return self.__shape

    def minor(self, interval : Interval) -> PolyElement:
        return self.__ring.binomial((interval.A, interval.B), (interval.C, interval.D))

    def inner_minor_ideal(self) -> Ideal:

        """
        One generator per inner interval, in the order of
        CellCollection.inner_intervals().
        """

        if self.__inner_minor_ideal is None:
            self.__inner_minor_ideal = Ideal(   [self.minor(I) for I in self.__collection.inner_intervals()],
                                                self.__ring, self.__settings)
        return self.__inner_minor_ideal

    def adjacent_minor_ideal(self) -> Ideal:

        """
        The 2-minors of the unit cells of P only.
        """

        return Ideal([self.minor(Interval.of_cell(c)) for c in self.__collection.Cells], self.__ring, self.__settings)

    def minor_lattice(self) -> MinorLattice:
        return MinorLattice(self.__collection)

    def lattice_ideal(self) -> Ideal:

        """
        I_P saturated by the product of all the variables,
        i.e. the lattice ideal of the minor lattice.
        """

        if self.__lattice_ideal is None:
            self.__lattice_ideal = self.inner_minor_ideal().saturate().reduced()
        return self.__lattice_ideal

    def toric_ideal(self,   model : str = 'graph',
                            corner : Optional[Point] = None) -> Ideal:

        """
        Parameters
        ----------
        model : str
            'graph', 'shikama' or 'mrr', see ToricModel
        corner : Point
            Special corner of the 'shikama' model

        Returns
        ----------
        Ideal
        """

        return ToricModel(self.__collection, model, corner).toric_ideal(self.__ring, self.__settings)

    def zigzag_binomial(self, walk : ZigZagWalk) -> PolyElement:

        """
        prod x_z - prod x_u over the corners of the walk,
        which is validated against the collection first.
        """

        walk.validate(self.__collection)
        return self.__ring.binomial(walk.Z, walk.U)

    @staticmethod
    def __pure_binomial_exponents(g : PolyElement) -> np.ndarray:

        one = g.ring.domain.one
        terms = g.terms()
        if len(terms) != 2 or {terms[0][1], terms[1][1]} != {one, -one}:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolyominoIdeal.__pure_binomial_exponents()',
                                                                    f"{g} is not a difference of two monomials."))
        (first, _), (second, _) = terms
        return np.array(first, dtype = np.int64) - np.array(second, dtype = np.int64)

    @staticmethod
    def binomial_ideal_is_prime(ideal : Ideal) -> PrimalityVerdict:

        """
        Exact primality test for an ideal generated by
        differences of monomials. It is prime iff it equals
        its saturation by the product of all the variables
        and the lattice spanned by the exponent differences
        of the saturation is saturated.

        Returns
        ----------
        PrimalityVerdict
            With certificate 'saturationGap' (the witness is
            a basis element of the saturation outside of the
            ideal) or 'latticeNotSaturated' (the witness is
            the list of invariant factors) when not prime
        """

        ring = ideal.Ring
        if not ideal.Generators:
            return PrimalityVerdict('prime', reason = 'zero ideal')

        saturation = ideal.saturate()
        basis = ideal.groebner_basis()
        for g in saturation.groebner_basis():
            if not basis.contains(g):
                logger.info("Saturation gap: %s", ring.to_text(g))
                return PrimalityVerdict('notPrime', 'saturationGap', ring.to_text(g))

        vectors = [PolyominoIdeal.__pure_binomial_exponents(g) for g in saturation.groebner_basis()]
        lattice = IntegerLattice(vectors, ring.Variables)
        if not lattice.is_saturated():
            return PrimalityVerdict('notPrime', 'latticeNotSaturated', lattice.invariant_factors())

        return PrimalityVerdict('prime', reason = 'exact check')

    def is_prime(self, method : str = 'auto') -> PrimalityVerdict:

        """
        Decides whether I_P is prime. With method 'auto',
        shape shortcuts come first:

            - simple polyominoes are prime
            - a rectangle minus a convex polyomino away from
              its border is prime
            - a closed path with an L-configuration or a
              ladder of at least 3 steps is prime

        then a zig-zag walk proves non-primality, and the
        exact check decides the rest. Method 'exact' runs
        the exact check only. A budget running out yields
        an indeterminate verdict.

        Parameters
        ----------
        method : str
            'auto' or 'exact'

        Returns
        ----------
        PrimalityVerdict
        """

        if method not in ('auto', 'exact'):
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PolyominoIdeal.is_prime()',
                                                                    f"Unknown method '{method}'."))
        try:
            if method == 'auto':
                verdict = self.__shape_shortcuts()
                if verdict is not None:
                    return verdict
            return PolyominoIdeal.binomial_ideal_is_prime(self.inner_minor_ideal())
        except BudgetExceeded as error:
            logger.warning("Primality of %s is indeterminate: %s", self.__collection.to_text(), error)
            return PrimalityVerdict('indeterminate', reason = str(error))

    def __shape_shortcuts(self) -> Optional[PrimalityVerdict]:

        collection, shape = self.__collection, self.__shape
        if collection.Rank == 0:
            return PrimalityVerdict('prime', 'simpleShape')

        structure = collection.structure()
        if not structure.IsPolyomino:
            return None
        if structure.IsSimple:
            return PrimalityVerdict('prime', 'simpleShape')
        if shape.is_hq_complement():
            return PrimalityVerdict('prime', 'hqComplement')

        if shape.classify_path().Kind == 'closedPath':
            features = shape.closed_path_features()
            if features['hasLConfiguration'] or features['maxLadderSteps'] >= 3:
                return PrimalityVerdict('prime', 'closedPathShape')
            walks = shape.find_zig_zag_walks(max_walks = 1)
            if walks:
                return PrimalityVerdict('notPrime', 'zigZagWalk', walks[0])
            logger.warning( "%s has neither an L-configuration, nor a ladder of 3 steps, nor a zig-zag walk; "
                            "falling back to the exact test", collection.to_text())
            return None

        walks = shape.find_zig_zag_walks(max_walks = 1)
        if walks:
            return PrimalityVerdict('notPrime', 'zigZagWalk', walks[0])

        return None

    def __admissible_sets(self) -> List[FrozenSet[Point]]:

        """
        Backtracking over the vertices in (i, j) order.

        Once a vertex is decided, every inner interval
        through it must still be able to meet X in an edge
        if X already meets it. Once every interval through
        a chosen vertex v is decided, the branch is dropped
        when X minus v is still admissible with the same
        surviving intervals, since J_X then strictly
        contains J_{X minus v}. Only these irredundant
        admissible sets are returned.
        """

        vertices = sorted(self.__collection.vertices())
        position = {v: k for k, v in enumerate(vertices)}
        intervals = self.__collection.inner_intervals()
        points = [frozenset(position[p] for p in I.lattice_points()) for I in intervals]
        sides = [[(position[p], position[q]) for p, q in I.sides()] for I in intervals]

        through : List[List[int]] = [[] for _ in vertices]
        for i, lattice_points in enumerate(points):
            for k in lattice_points:
                through[k].append(i)
        closers : Dict[int, List[int]] = {}
        for k in range(len(vertices)):
            closing = max((max(points[i]) for i in through[k]), default = k)
            closers.setdefault(closing, []).append(k)

        chosen = set()

        def meets_in_an_edge(i : int, decided : int, without : int = -1) -> bool:
            return any( all(x != without and (x in chosen or x > decided) for x in side)
                        for side in sides[i])

        def redundant(v : int) -> bool:
            for i in through[v]:
                if not (points[i] & chosen) - {v}:
                    return False
                if not meets_in_an_edge(i, len(vertices), without = v):
                    return False
            return True

        budget = self.__settings.AdmissibleBudget
        output = []
        nodes = 0

        def extend(k : int) -> None:
            nonlocal nodes
            nodes += 1
            if len(output) > budget or nodes > budget * (len(vertices) + 1):
                raise BudgetExceeded(generate_exception_message(1,
                                                                'PolyominoIdeal.__admissible_sets()',
                                                                f"More than {budget} admissible sets of {self.__collection.to_text()} or {nodes - 1} partial subsets visited."))
            if k == len(vertices):
                output.append(frozenset(vertices[x] for x in chosen))
                return
            for take in (False, True):
                if take:
                    chosen.add(k)
                if all(not points[i] & chosen or meets_in_an_edge(i, k) for i in through[k]) \
                        and not any(v in chosen and redundant(v) for v in closers.get(k, [])):
                    extend(k + 1)
                if take:
                    chosen.discard(k)

        extend(0)
        logger.debug("%d irredundant admissible sets of %s (%d nodes)", len(output), self.__collection.to_text(), nodes)
        return output

    def radical_via_admissible(self) -> Ideal:

        """
        sqrt(I_P) as the intersection of the ideals

            J_X = (x_a : a in X) + L_X

        over the admissible sets X, where L_X is the
        lattice ideal of the inner intervals whose lattice
        points avoid X. Sets with a removable vertex are
        skipped during the enumeration. For each set of
        surviving inner intervals only the inclusion-minimal
        X are used, and J_Y is dropped when it contains J_X
        for some kept X inside Y.

        Returns
        ----------
        Ideal
        """

        intervals = self.__collection.inner_intervals()
        by_survivors : Dict[FrozenSet[int], List[FrozenSet[Point]]] = {}
        for X in self.__admissible_sets():
            survivors = frozenset(k for k, I in enumerate(intervals) if not X.intersection(I.lattice_points()))
            kept = [Y for Y in by_survivors.get(survivors, []) if not X < Y]
            if not any(Y <= X for Y in kept):
                kept.append(X)
            by_survivors[survivors] = kept

        lattice_ideals : Dict[FrozenSet[int], Ideal] = {}
        for survivors in by_survivors:
            minors = Ideal([self.minor(intervals[k]) for k in sorted(survivors)], self.__ring, self.__settings)
            support = sorted(set().union(*(intervals[k].lattice_points() for k in survivors)))
            lattice_ideals[survivors] = minors.saturate(support)

        candidates = sorted(((X, survivors) for survivors, sets in by_survivors.items() for X in sets),
                            key = lambda item: (len(item[0]), sorted(item[0]), sorted(item[1])))
        minimal : List[Tuple[FrozenSet[Point], Ideal]] = []
        for Y, survivors in candidates:
            J = lattice_ideals[survivors].with_generators(self.__ring.gen(a) for a in sorted(Y))
            # J_X is inside J_Y only if X is inside Y
            if not any(X <= Y and J.contains_ideal(other) for X, other in minimal):
                minimal.append((Y, J))

        logger.info("%d admissible components of %s, %d minimal",
                    len(candidates), self.__collection.to_text(), len(minimal))
        return Ideal.intersect_all([J for _, J in minimal]).reduced()

    def closed_path_p1(self) -> Tuple[Ideal, PrimalityVerdict, int]:

        """
        I_P plus the binomials of every zig-zag walk of a
        closed path, together with the exact primality
        verdict of this ideal and its height.

        Returns
        ----------
        (Ideal, PrimalityVerdict, int)
        """

        if self.__shape.classify_path().Kind != 'closedPath':
            raise NotAClosedPath(generate_exception_message(1,
                                                            'PolyominoIdeal.closed_path_p1()',
                                                            f"{self.__collection.to_text()} is not a closed path."))
        walks = self.__shape.find_zig_zag_walks()
        if not walks:
            raise NotApplicable(generate_exception_message( 1,
                                                            'PolyominoIdeal.closed_path_p1()',
                                                            f"{self.__collection.to_text()} has no zig-zag walk, so its ideal is prime."))

        p1 = self.inner_minor_ideal().with_generators(self.zigzag_binomial(W) for W in walks)
        verdict = PolyominoIdeal.binomial_ideal_is_prime(p1)
        height = self.__ring.NumberOfVariables - PolyominoIdeal.series_of(p1).KrullDimension

        return p1, verdict, height

    @staticmethod
    def series_of(ideal : Ideal) -> UnivariateSeriesData:

        """
        Hilbert series data of R/I, read from the initial
        ideal of I.
        """

        numerator = HilbertNumerator(ideal.groebner_basis().leading_monomials(), ideal.Ring.NumberOfVariables)
        return UnivariateSeriesData.from_numerator(numerator)

    def __repr__(self) -> str:
        return f"PolyominoIdeal({self.__collection.to_text()})"
