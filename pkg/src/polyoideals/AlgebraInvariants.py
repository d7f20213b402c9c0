import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import comb
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grevlex

from .CellCollection import CellCollection
from .PolyominoIdeal import PolyominoIdeal
from .PolynomialRing import PolynomialRing
from .GroebnerBasis import GroebnerBasis
from .UnivariateSeriesData import UnivariateSeriesData
from .Settings import Settings
from .Exceptions import generate_exception_message
from .Exceptions import PolyominoIdealError, NotAPath, NotAPolyomino, NotArtinianAfterReduction, ShapeMismatch

logger = logging.getLogger(__name__)

class AlgebraInvariants:

    """
    Invariants of the coordinate ring K[P] = S / I_P: its
    Hilbert series, and the Gorenstein, pseudo-Gorenstein
    and level properties together with the Cohen-Macaulay
    type.

    Attributes
    ----------
    Ideal : PolyominoIdeal
    Settings : Settings

    Methods
    ----------
    hilbert_data() -> UnivariateSeriesData
    regularity_proxy() -> (int, bool)
    is_palindromic(coefficients) -> bool
    gorenstein_probe() -> dict
    pseudo_gorenstein_check() -> bool
    level_probe_for_paths() -> bool
    socle_degrees() -> list of int
    cm_type_via_socle() -> int
    level_via_socle() -> bool
    fuss_catalan(p, n) -> int
    """

    __attempts = 6

    def __init__(self,  collection : CellCollection,
                        settings : Optional[Settings] = None):

        self.__settings = Settings() if settings is None else settings
        self.__ideal = PolyominoIdeal(collection, self.__settings)
        self.__series = None
        self.__socle = None

    #Getters
    @property
    def Ideal(self):
        return self.__ideal

    @property
    def Settings(self):
        return self.__settings

    def hilbert_data(self) -> UnivariateSeriesData:

        """
        h-polynomial and Krull dimension of K[P], read from
        the initial ideal of I_P.
        """

        if self.__series is None:
            self.__series = PolyominoIdeal.series_of(self.__ideal.inner_minor_ideal())
            logger.info("Hilbert data of %s: %s", self.__ideal.Collection.to_text(), self.__series)
        return self.__series

    def __cohen_macaulay_known(self) -> bool:

        collection = self.__ideal.Collection
        if collection.Rank == 0:
            return True
        structure = collection.structure()
        if not structure.IsPolyomino:
            return False
        return structure.IsSimple or self.__ideal.Shape.classify_path().Kind == 'closedPath'

    def regularity_proxy(self) -> Tuple[int, bool]:

        """
        Returns
        ----------
        (int, bool)
            The degree of h(t), and whether K[P] is known
            to be Cohen-Macaulay (simple polyominoes and
            closed paths), in which case it equals the
            Castelnuovo-Mumford regularity
        """

        return self.hilbert_data().Degree, self.__cohen_macaulay_known()

    @staticmethod
    def is_palindromic(coefficients : Sequence[int]) -> bool:
        return list(coefficients) == list(coefficients)[::-1]

    def gorenstein_probe(self) -> Dict[str, object]:

        """
        Gorenstein test. For a prime closed path, K[P] is
        Gorenstein iff every maximal block has rank 3, and
        palindromicity of h(t) is used as a cross-check.
        For any other prime ideal, K[P] is a domain and
        palindromicity decides. Otherwise palindromicity
        is only necessary.

        Returns
        ----------
        dict
            'verdict' is 'gorenstein', 'notGorenstein' or
            'inconclusive', 'reasons' a list of str
        """

        h = self.hilbert_data().HCoefficients
        palindromic = AlgebraInvariants.is_palindromic(h)
        verdict = self.__ideal.is_prime()
        reasons = [f"h = {h} is {'' if palindromic else 'not '}palindromic", f"ideal is {verdict}"]

        collection = self.__ideal.Collection
        closed = collection.Rank > 0 and collection.structure().IsPolyomino \
                    and self.__ideal.Shape.classify_path().Kind == 'closedPath'

        if closed and verdict.IsPrime:
            ranks = self.__ideal.Shape.classify_path().block_ranks()
            all_rank_three = all(r == 3 for r in ranks)
            reasons.append(f"maximal blocks of ranks {ranks}")
            if all_rank_three != palindromic:
                logger.warning("Block criterion and palindromicity disagree on %s", collection.to_text())
                reasons.append('the block criterion and palindromicity disagree')
            return {'verdict': 'gorenstein' if all_rank_three else 'notGorenstein', 'reasons': reasons}

        if verdict.IsPrime:
            return {'verdict': 'gorenstein' if palindromic else 'notGorenstein', 'reasons': reasons}

        reasons.append('palindromicity is only necessary for a non-domain')
        return {'verdict': 'inconclusive' if palindromic else 'notGorenstein', 'reasons': reasons}

    def pseudo_gorenstein_check(self) -> bool:
        return self.hilbert_data().HCoefficients[-1] == 1

    def level_probe_for_paths(self) -> bool:

        """
        An open path is level iff it has no bad stair. The
        collection must be simple and thin.
        """

        collection = self.__ideal.Collection
        if not collection.structure().IsSimple or not self.__ideal.Shape.is_thin():
            raise ShapeMismatch(generate_exception_message( 2,
                                                            'AlgebraInvariants.level_probe_for_paths()',
                                                            f"{collection.to_text()} is not a simple thin collection of cells."))
        try:
            report = self.__ideal.Shape.stair_analysis()
        except NotAPolyomino as error:
            raise NotAPath(generate_exception_message(  1,
                                                        'AlgebraInvariants.level_probe_for_paths()',
                                                        str(error)))
        return not report.BadStairs

    def __reduction_field(self) -> str:
        return self.__settings.Field if self.__settings.Characteristic > 0 else 'gf32003'

    def __artinian_reduction(self, rng : np.random.Generator) -> Tuple[GroebnerBasis, List[List[Tuple[int, ...]]]]:

        """
        Replaces the d smallest variables by random linear
        forms in the others, and returns the degrevlex
        basis of the reduced ideal with its standard
        monomials, degree by degree.
        """

        series = self.hilbert_data()
        d = series.KrullDimension
        ring = PolynomialRing(self.__ideal.Ring.Variables, field = self.__reduction_field(), order = grevlex)
        n = ring.NumberOfVariables
        kept, replaced = ring.Variables[:n - d], ring.Variables[n - d:]
        p = ring.Domain.characteristic()

        substitution = []
        for variable in replaced:
            coefficients = rng.integers(1, p, size = len(kept))
            form = ring.Ring.zero
            for c, x in zip(coefficients, kept):
                form += ring.Domain.convert(int(c)) * ring.gen(x)
            substitution.append((ring.gen(variable), form))

        small = ring.with_variables(list(kept))
        generators = []
        for f in self.__ideal.inner_minor_ideal().Generators:
            g = ring.convert(f)
            if substitution:
                g = g.compose(substitution)
            generators.append(small.convert(g))
        basis = GroebnerBasis(generators, small, self.__settings)

        leading = basis.leading_monomials()
        pure_powers = {int(np.flatnonzero(m)[0]) for m in leading if np.count_nonzero(m) == 1}
        if len(pure_powers) < len(kept):
            raise NotArtinianAfterReduction(generate_exception_message( 1,
                                                                        'AlgebraInvariants.__artinian_reduction()',
                                                                        'The reduced quotient is not Artinian.'))
        standard = []
        degree = 0
        while True:
            layer = []
            for choice in combinations_with_replacement(range(len(kept)), degree):
                m = np.bincount(np.array(choice, dtype = int), minlength = len(kept))
                if not any(np.all(m >= g) for g in leading):
                    layer.append(tuple(int(e) for e in m))
            if not layer:
                break
            standard.append(layer)
            degree += 1

        if sum(len(layer) for layer in standard) != series.Multiplicity:
            raise NotArtinianAfterReduction(generate_exception_message( 2,
                                                                        'AlgebraInvariants.__artinian_reduction()',
                                                                        f"{sum(len(layer) for layer in standard)} standard monomials instead of {series.Multiplicity}."))
        return basis, standard

    @staticmethod
    def __socle_of(basis : GroebnerBasis, standard : List[List[Tuple[int, ...]]]) -> List[int]:

        R = basis.Ring.Ring
        domain = R.domain
        output = []
        for k, layer in enumerate(standard):
            if k + 1 == len(standard):
                output.append(len(layer))
                continue
            following = {m: r for r, m in enumerate(standard[k + 1])}
            rows = []
            for x in R.gens:
                block = [[domain.zero] * len(layer) for _ in following]
                for c, m in enumerate(layer):
                    image = basis.normal_form(x * R({m: domain.one}))
                    for monomial, coefficient in image.terms():
                        block[following[monomial]][c] = coefficient
                rows.extend(block)
            rank = DomainMatrix(rows, (len(rows), len(layer)), domain).rank() if rows else 0
            output.append(len(layer) - rank)
        return output

    def socle_degrees(self) -> List[int]:

        """
        Dimension of the socle of a generic Artinian
        reduction of K[P] in each degree. The reduction is
        drawn from the seed of the settings, and repeated
        with the following seeds until two draws agree.

        Returns
        ----------
        list of int
            Entry k is the socle dimension in degree k
        """

        if self.__socle is not None:
            return list(self.__socle)

        if self.__ideal.Collection.Rank == 0:
            self.__socle = [1]
            return [1]

        results = []
        for attempt in range(AlgebraInvariants.__attempts):
            rng = np.random.default_rng(self.__settings.Seed + attempt)
            try:
                basis, standard = self.__artinian_reduction(rng)
            except NotArtinianAfterReduction as error:
                logger.info("Seed %d rejected: %s", self.__settings.Seed + attempt, error)
                continue
            socle = AlgebraInvariants.__socle_of(basis, standard)
            if socle in results:
                self.__socle = socle
                logger.info("Socle degrees of %s: %s", self.__ideal.Collection.to_text(), socle)
                return list(socle)
            results.append(socle)

        raise NotArtinianAfterReduction(generate_exception_message( 3,
                                                                    'AlgebraInvariants.socle_degrees()',
                                                                    f"No two agreeing Artinian reductions in {AlgebraInvariants.__attempts} draws."))

    def cm_type_via_socle(self) -> int:
        return sum(self.socle_degrees())

    def level_via_socle(self) -> bool:
        return sum(1 for s in self.socle_degrees() if s > 0) == 1

    @staticmethod
    def fuss_catalan(p : int, n : int) -> int:

        """
        C_p(n) = binom(np, p) / ((n - 1) p + 1).
        """

        if p < 1 or n < 1:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'AlgebraInvariants.fuss_catalan()',
                                                                    f"Both p and n must be positive (got p={p}, n={n})."))
        return int(comb(n * p, p, exact = True)) // ((n - 1) * p + 1)
