from .RookConfiguration import RookConfiguration

class SwitchingClass:

    """
    An equivalence class of rook configurations under
    switch moves.

    Attributes
    ----------
    Representative : RookConfiguration
        The member whose sorted cells are
        lexicographically least
    Size : int
        Number of configurations in the class
    """

    def __init__(self,  representative : RookConfiguration,
                        size : int):

        self.__representative = representative
        self.__size = size

    #Getters
    @property
    def Representative(self):
        return self.__representative

    @property
    def Size(self):
        return self.__size

    def to_dict(self) -> dict:
        return {'representative': self.__representative.to_list(),
                'size': self.__size}

    def __repr__(self) -> str:
        return f"SwitchingClass({self.__representative!r}, size={self.__size})"
