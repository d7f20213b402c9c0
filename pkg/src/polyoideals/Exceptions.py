def generate_exception_message( code, 
                                issuer,
                                reason=''):
    
        """
        Parameters
        ----------
        code : int
        issuer : str
            Name of the method which raises, e.g.
            'CellCollection.from_text()'
        reason : str

        Returns
        -----------
        str
        """
    
        message = f"{issuer} raised exception #{code}"

        if reason!='':
            message += f": {reason}"
        
        return message

class PolyominoIdealError(Exception):
    """
    Base class of every error raised by this package.
    The message is expected to be built with 
    generate_exception_message().
    """
    pass

class CellParseError(PolyominoIdealError):
    pass

class NotAPolyomino(PolyominoIdealError):
    pass

class NotAPath(PolyominoIdealError):
    pass

class NotAClosedPath(PolyominoIdealError):
    pass

class NotConvex(PolyominoIdealError):
    pass

class CellNotInCollection(PolyominoIdealError):
    pass

class ShapeMismatch(PolyominoIdealError):
    pass

class InvalidWalk(PolyominoIdealError):
    pass

class NotApplicable(PolyominoIdealError):
    pass

class NotHomogeneous(PolyominoIdealError):
    pass

class NotArtinianAfterReduction(PolyominoIdealError):
    pass

class Unimplemented(PolyominoIdealError):
    pass

class BudgetExceeded(PolyominoIdealError):
    """
    The computation was stopped before completion, so
    its outcome is indeterminate. It is never a negative
    answer.
    """
    pass

class SearchBudgetExceeded(BudgetExceeded):
    pass
