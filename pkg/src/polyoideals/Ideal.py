import logging
from functools import reduce
from operator import mul
from typing import Iterable, List, Optional, Sequence

from sympy.polys.rings import PolyElement
from sympy.polys.orderings import grevlex

from .PolynomialRing import PolynomialRing, Variable
from .MonomialOrder import EliminationOrder
from .GroebnerBasis import GroebnerBasis
from .Settings import Settings
from .Exceptions import generate_exception_message, PolyominoIdealError, NotHomogeneous

logger = logging.getLogger(__name__)

class Ideal:

    """
    An ideal given by a finite list of generators in a
    PolynomialRing. The reduced Groebner basis with
    respect to the order of the ring is computed on
    demand and cached; every other operation builds the
    auxiliary rings it needs and converts back.

    Attributes
    ----------
    Ring : PolynomialRing
    Generators : tuple of PolyElement
    Settings : Settings

    Methods
    ----------
    groebner_basis() -> GroebnerBasis
    contains(f) -> bool
    contains_ideal(other) -> bool
    equals(other) -> bool
    is_homogeneous() -> bool
    quadratic_part() -> Ideal
    colon(variable) -> Ideal
    saturate(variables, method) -> Ideal
    eliminate(keep) -> Ideal
    intersect(other) -> Ideal
    """

    def __init__(self,  generators : Iterable[PolyElement],
                        ring : PolynomialRing,
                        settings : Optional[Settings] = None):

        self.__ring = ring
        self.__settings = Settings() if settings is None else settings
        self.__generators = tuple(ring.convert(f) for f in generators if f)
        self.__groebner_basis = None

    #Getters
    @property
    def Ring(self):
        return self.__ring

    @property
    def Generators(self):
        return self.__generators

    @property
    def Settings(self):
        return self.__settings

    def __len__(self) -> int:
        return len(self.__generators)

    def __add__(self, other : 'Ideal') -> 'Ideal':
        return Ideal(self.__generators + tuple(self.__ring.convert(f) for f in other.Generators),
                     self.__ring, self.__settings)

    def with_generators(self, generators : Iterable[PolyElement]) -> 'Ideal':
        return Ideal(list(self.__generators) + list(generators), self.__ring, self.__settings)

    def groebner_basis(self) -> GroebnerBasis:
        if self.__groebner_basis is None:
            self.__groebner_basis = GroebnerBasis(self.__generators, self.__ring, self.__settings)
        return self.__groebner_basis

    def reduced(self) -> 'Ideal':

        """
        The same ideal, generated by its reduced Groebner
        basis.
        """

        return Ideal(self.groebner_basis().Generators, self.__ring, self.__settings)

    def contains(self, f : PolyElement) -> bool:
        return self.groebner_basis().contains(f)

    def contains_ideal(self, other : 'Ideal') -> bool:
        return self.groebner_basis().contains_all(other.Generators)

    def equals(self, other : 'Ideal') -> bool:

        """
        Compares the reduced Groebner bases of both ideals
        in the ring of self.
        """

        if self.__ring.Ring == other.Ring.Ring:
            return self.groebner_basis() == other.groebner_basis()
        return self.contains_ideal(other) and Ideal(other.Generators, self.__ring, self.__settings).contains_ideal(self)

    @staticmethod
    def is_homogeneous_polynomial(f : PolyElement) -> bool:
        return len({sum(m) for m in f.monoms()}) <= 1

    def is_homogeneous(self) -> bool:
        return all(Ideal.is_homogeneous_polynomial(f) for f in self.__generators)

    def quadratic_part(self) -> 'Ideal':

        """
        The ideal generated by the degree 2 elements of the
        reduced Groebner basis.
        """

        return Ideal(   [g for g in self.groebner_basis() if g.monoms() and max(sum(m) for m in g.monoms()) == 2],
                        self.__ring, self.__settings)

    def __variable_last_ring(self, variable : Variable) -> PolynomialRing:
        others = [v for v in self.__ring.Variables if v != variable]
        return self.__ring.with_variables(others + [variable], order = grevlex)

    def __divide_out_last(self, basis : GroebnerBasis, bound : Optional[int]) -> List[PolyElement]:

        """
        Divides every basis element by the largest power of
        the last variable dividing it, never beyond bound
        if it is given.
        """

        R = basis.Ring.Ring
        output = []
        for g in basis:
            k = min(m[-1] for m in g.monoms())
            if bound is not None:
                k = min(k, bound)
            output.append(R.from_dict({m[:-1] + (m[-1] - k,): c for m, c in g.items()}))
        return output

    def colon(self, variable : Variable) -> 'Ideal':

        """
        I : x_v for a homogeneous ideal I, computed from a
        degrevlex basis where x_v is the smallest variable.
        """

        if not self.is_homogeneous():
            raise NotHomogeneous(generate_exception_message(1,
                                                            'Ideal.colon()',
                                                            'The colon by a variable needs a homogeneous ideal.'))
        ring = self.__variable_last_ring(variable)
        basis = GroebnerBasis(self.__generators, ring, self.__settings)
        return Ideal(self.__divide_out_last(basis, 1), self.__ring, self.__settings)

    def saturate(self,  variables : Optional[Sequence[Variable]] = None,
                        method : str = 'auto') -> 'Ideal':

        """
        I : (prod of the given variables)^infinity.

        Parameters
        ----------
        variables : sequence of Variable
            Defaults to every variable of the ring
        method : str
            'homogeneous' saturates one variable at a time,
            dividing a degrevlex basis where the variable is
            the smallest one by the largest power of it;
            'tag' eliminates y from I + (y*prod - 1); 'auto'
            picks the former for homogeneous ideals

        Returns
        ----------
        Ideal
        """

        variables = list(self.__ring.Variables if variables is None else variables)
        if method not in ('auto', 'homogeneous', 'tag'):
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Ideal.saturate()',
                                                                    f"Unknown saturation method '{method}'."))
        homogeneous = self.is_homogeneous()
        if method == 'homogeneous' and not homogeneous:
            raise NotHomogeneous(generate_exception_message(2,
                                                            'Ideal.saturate()',
                                                            'The homogeneous method needs a homogeneous ideal.'))
        if not self.__generators or not variables:
            return Ideal(self.__generators, self.__ring, self.__settings)

        if method == 'tag' or not homogeneous:
            return self.__saturate_by_tag(variables)

        current = list(self.__generators)
        for variable in variables:
            ring = self.__variable_last_ring(variable)
            basis = GroebnerBasis(current, ring, self.__settings)
            current = [self.__ring.convert(f) for f in self.__divide_out_last(basis, None)]
            logger.debug("Saturated by %s: %d generators", PolynomialRing.display_name(variable), len(current))

        return Ideal(current, self.__ring, self.__settings)

    def __fresh_name(self, base : str) -> str:
        taken = {v for v in self.__ring.Variables if isinstance(v, str)}
        name, k = base, 0
        while name in taken:
            k += 1
            name = f"{base}{k}"
        return name

    def __saturate_by_tag(self, variables : Sequence[Variable]) -> 'Ideal':

        tag = self.__fresh_name('y')
        ring = self.__ring.with_variables([tag] + list(self.__ring.Variables), order = EliminationOrder(1))
        product = reduce(mul, (ring.gen(v) for v in variables), ring.Ring.one)
        generators = [ring.convert(f) for f in self.__generators] + [ring.gen(tag) * product - 1]

        basis = GroebnerBasis(generators, ring, self.__settings)
        kept = [g for g in basis if all(m[0] == 0 for m in g.monoms())]
        return Ideal([self.__ring.convert(g) for g in kept], self.__ring, self.__settings)

    def eliminate(self, keep : Sequence[Variable]) -> 'Ideal':

        """
        Generators of I intersected with the polynomial
        ring of the variables in keep. The eliminated
        variables form the first block of an elimination
        order.

        Returns
        ----------
        Ideal
            An ideal of the ring of the kept variables,
            listed in the order of self.Ring
        """

        kept = set(keep)
        unknown = kept.difference(self.__ring.Variables)
        if unknown:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Ideal.eliminate()',
                                                                    f"{sorted(map(str, unknown))} are not variables of the ring."))
        eliminated = [v for v in self.__ring.Variables if v not in kept]
        remaining = [v for v in self.__ring.Variables if v in kept]

        target = self.__ring.with_variables(remaining)
        if not eliminated:
            return Ideal(self.__generators, target, self.__settings)

        ring = self.__ring.with_variables(eliminated + remaining, order = EliminationOrder(len(eliminated)))
        basis = GroebnerBasis(self.__generators, ring, self.__settings)
        block = len(eliminated)
        survivors = [g for g in basis if all(not any(m[:block]) for m in g.monoms())]
        logger.debug("Eliminated %d variables: %d of %d basis elements survive", block, len(survivors), len(basis))

        return Ideal([target.convert(g) for g in survivors], target, self.__settings)

    def intersect(self, other : 'Ideal') -> 'Ideal':

        """
        I cap J, eliminating t from t*I + (1-t)*J.
        """

        if not self.__generators or not other.Generators:
            return Ideal([], self.__ring, self.__settings)

        tag = self.__fresh_name('t')
        ring = self.__ring.with_variables([tag] + list(self.__ring.Variables), order = EliminationOrder(1))
        t = ring.gen(tag)
        generators = [t * ring.convert(f) for f in self.__generators]
        generators += [(1 - t) * ring.convert(g) for g in other.Generators]

        basis = GroebnerBasis(generators, ring, self.__settings)
        kept = [g for g in basis if all(m[0] == 0 for m in g.monoms())]
        return Ideal([self.__ring.convert(g) for g in kept], self.__ring, self.__settings).reduced()

    @staticmethod
    def intersect_all(ideals : Sequence['Ideal']) -> 'Ideal':
        if not ideals:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Ideal.intersect_all()',
                                                                    'Nothing to intersect.'))
        return reduce(lambda I, J: I.intersect(J), ideals[1:], ideals[0])

    def to_text(self) -> List[str]:
        return [self.__ring.to_text(f) for f in self.__generators]

    def __repr__(self) -> str:
        return f"Ideal({len(self.__generators)} generators in {self.__ring!r})"
