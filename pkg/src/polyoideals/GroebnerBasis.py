import logging
from typing import Iterable, List, Optional, Set, Tuple

import numpy as np
from sympy.polys.rings import PolyElement

from .PolynomialRing import PolynomialRing
from .Settings import Settings
from .Exceptions import generate_exception_message, BudgetExceeded

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

class GroebnerBasis:

    """
    Reduced Groebner basis of an ideal, computed with
    Buchberger's algorithm: normal pair selection (least
    lcm of leading monomials first) together with the
    Gebauer-Moeller criteria to discard useless pairs.
    The basis is made of monic polynomials sorted by
    increasing leading monomial, so that two bases of
    the same ideal and order are equal term by term.

    Attributes
    ----------
    Ring : PolynomialRing
    Generators : tuple of PolyElement
    PairsReduced : int
        Number of S-polynomials reduced while computing

    Methods
    ----------
    normal_form(f) -> PolyElement
    contains(f) -> bool
    contains_all(fs) -> bool
    is_unit() -> bool
    leading_monomials() -> numpy.ndarray
    verify() -> bool
    """

    def __init__(self,  generators : Iterable[PolyElement],
                        ring : PolynomialRing,
                        settings : Optional[Settings] = None):

        """
        GroebnerBasis class initializer

        Parameters
        ----------
        generators : iterable of PolyElement
            Polynomials of ring.Ring, or of any ring over
            the same field whose variables belong to ring
        ring : PolynomialRing
        settings : Settings
            Only PairBudget is used
        """

        self.__ring = ring
        self.__settings = Settings() if settings is None else settings
        self.__pairs_reduced = 0

        polynomials = [ring.convert(f) for f in generators]
        self.__generators = tuple(self.__buchberger([f for f in polynomials if f]))

        logger.debug(   "Groebner basis with %d elements after %d reductions (%d variables, %s)",
                        len(self.__generators), self.__pairs_reduced, ring.NumberOfVariables, ring.Order)

    #Getters
    @property
    def Ring(self):
        return self.__ring

    @property
    def Generators(self):
        return self.__generators

    @property
    def PairsReduced(self):
        return self.__pairs_reduced

    def __len__(self) -> int:
        return len(self.__generators)

    def __iter__(self):
        return iter(self.__generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.__ring.Ring == other.Ring.Ring and self.__generators == other.Generators

    @staticmethod
    def spoly(f : PolyElement, g : PolyElement) -> PolyElement:

        """
        S-polynomial of the monic polynomials f and g.
        """

        R = f.ring
        lcm = R.monomial_lcm(f.LM, g.LM)
        return f.mul_monom(R.monomial_div(lcm, f.LM)) - g.mul_monom(R.monomial_div(lcm, g.LM))

    @staticmethod
    def __update(   G : List[PolyElement],
                    P : Set[Pair],
                    f : PolyElement) -> Tuple[List[PolyElement], Set[Pair]]:

        R = f.ring
        lcm, mul, div = R.monomial_lcm, R.monomial_mul, R.monomial_div
        lmf = f.LM
        lmG = [g.LM for g in G]

        # Chain criterion on the old pairs
        P = {p for p in P if (  not div(lcm(lmG[p[0]], lmG[p[1]]), lmf) or
                                lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                                lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}

        lcm_groups = {}
        for i in range(len(G)):
            lcm_groups.setdefault(lcm(lmG[i], lmf), []).append(i)

        minimal_lcms = []
        for L in sorted(lcm_groups, key = R.order):
            if all(not div(L, M) for M in minimal_lcms):
                minimal_lcms.append(L)

        # Coprime leading monomials make the whole lcm class useless
        new_pairs = set()
        for L in minimal_lcms:
            if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_groups[L]):
                new_pairs.add((min(lcm_groups[L]), len(G)))

        return G + [f], P | new_pairs

    @staticmethod
    def __minimalize(G : List[PolyElement]) -> List[PolyElement]:

        if not G:
            return []
        R = G[0].ring
        output = []
        for f in sorted(G, key = lambda h: R.order(h.LM)):
            if all(not R.monomial_div(f.LM, g.LM) for g in output):
                output.append(f)
        return output

    @staticmethod
    def __interreduce(G : List[PolyElement]) -> List[PolyElement]:
        return [G[i].rem(G[:i] + G[i+1:]).monic() for i in range(len(G))]

    def __buchberger(self, F : List[PolyElement]) -> List[PolyElement]:

        if not F:
            return []

        R = self.__ring.Ring
        if any(f.is_ground for f in F):
            return [R.one]

        G, P = [], set()
        for f in F:
            G, P = GroebnerBasis.__update(G, P, f.monic())

        while P:
            i, j = min(P, key = lambda p: R.order(R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)))
            P.remove((i, j))

            self.__pairs_reduced += 1
            if self.__pairs_reduced > self.__settings.PairBudget:
                raise BudgetExceeded(generate_exception_message(1,
                                                                'GroebnerBasis.__buchberger()',
                                                                f"More than {self.__settings.PairBudget} S-pairs were reduced."))

            r = GroebnerBasis.spoly(G[i], G[j]).rem(G)
            if r:
                if r.is_ground:
                    return [R.one]
                G, P = GroebnerBasis.__update(G, P, r.monic())

        reduced = GroebnerBasis.__interreduce(GroebnerBasis.__minimalize(G))
        return sorted(reduced, key = lambda h: R.order(h.LM))

    def normal_form(self, f : PolyElement) -> PolyElement:

        """
        Remainder of f modulo the basis. No term of the
        output is divisible by a leading monomial of the
        basis, hence the output is 0 iff f is in the ideal.
        """

        f = self.__ring.convert(f)
        if not self.__generators:
            return f
        return f.rem(list(self.__generators))

    def contains(self, f : PolyElement) -> bool:
        return not self.normal_form(f)

    def contains_all(self, fs : Iterable[PolyElement]) -> bool:
        return all(self.contains(f) for f in fs)

    def is_unit(self) -> bool:
        return len(self.__generators) == 1 and self.__generators[0].is_ground

    def leading_monomials(self) -> np.ndarray:

        """
        Returns
        ----------
        numpy.ndarray
            One row of exponents per basis element, with
            one column per variable of Ring
        """

        if not self.__generators:
            return np.zeros((0, self.__ring.NumberOfVariables), dtype = int)
        return np.array([g.LM for g in self.__generators], dtype = int)

    def verify(self) -> bool:

        """
        Buchberger's criterion: every S-polynomial of two
        basis elements reduces to zero modulo the basis.
        """

        G = list(self.__generators)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                if GroebnerBasis.spoly(G[i], G[j]).rem(G):
                    return False
        return True

    def to_text(self) -> List[str]:
        return [self.__ring.to_text(g) for g in self.__generators]

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.__generators)} elements in {self.__ring!r})"
