from typing import Optional

from .ZigZagWalk import ZigZagWalk
from .Exceptions import generate_exception_message, PolyominoIdealError

class PrimalityVerdict:

    """
    Outcome of a primality decision for a polyomino ideal.

    Attributes
    ----------
    Status : str
        'prime', 'notPrime' or 'indeterminate'
    Certificate : str or None
        'simpleShape', 'hqComplement', 'closedPathShape',
        'zigZagWalk', 'saturationGap' or
        'latticeNotSaturated'. None for a prime verdict of
        the exact check, and for indeterminate verdicts
    Witness : ZigZagWalk, str, list of int or None
        The walk of a 'zigZagWalk' certificate, the text
        of a binomial of the saturation which is not in
        the ideal for 'saturationGap', the invariant
        factors for 'latticeNotSaturated'
    Reason : str
        Free text, e.g. the budget that ran out
    """

    statuses = ('prime', 'notPrime', 'indeterminate')
    certificates = ('simpleShape', 'hqComplement', 'closedPathShape',
                    'zigZagWalk', 'saturationGap', 'latticeNotSaturated')

    def __init__(self,  status : str,
                        certificate : Optional[str] = None,
                        witness = None,
                        reason : str = ''):

        if status not in PrimalityVerdict.statuses:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'PrimalityVerdict.__init__()',
                                                                    f"Unknown status '{status}'."))
        if certificate is not None and certificate not in PrimalityVerdict.certificates:
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'PrimalityVerdict.__init__()',
                                                                    f"Unknown certificate '{certificate}'."))
        if status == 'notPrime' and witness is None:
            raise PolyominoIdealError(generate_exception_message(   3,
                                                                    'PrimalityVerdict.__init__()',
                                                                    'A notPrime verdict needs a witness.'))
        self.__status = status
        self.__certificate = certificate
        self.__witness = witness
        self.__reason = reason

    #Getters
    @property
    def Status(self):
        return self.__status

    @property
    def Certificate(self):
        return self.__certificate

    @property
    def Witness(self):
        return self.__witness

    @property
    def Reason(self):
        return self.__reason

    @property
    def IsPrime(self) -> bool:
        return self.__status == 'prime'

    def to_dict(self) -> dict:

        witness = self.__witness
        if isinstance(witness, ZigZagWalk):
            witness = witness.to_dict()

        return {'status': self.__status,
                'certificate': self.__certificate,
                'witness': witness,
                'reason': self.__reason}

    def __str__(self) -> str:
        if self.__certificate is None:
            return self.__status if not self.__reason else f"{self.__status} ({self.__reason})"
        return f"{self.__status} (certificate: {self.__certificate})"

    def __repr__(self) -> str:
        return f"PrimalityVerdict({self.__status!r}, {self.__certificate!r})"
