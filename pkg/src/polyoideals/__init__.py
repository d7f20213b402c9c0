from .Exceptions            import *
from .Settings              import *
from .Interval              import *
from .EdgeInterval          import *
from .StructureReport       import *
from .CellCollection        import *
from .PathDecomposition     import *
from .StairReport           import *
from .ZigZagWalk            import *
from .PolyShape             import *
from .RookConfiguration     import *
from .SwitchingClass        import *
from .RookBoard             import *
from .MonomialOrder         import *
from .PolynomialRing        import *
from .GroebnerBasis         import *
from .Ideal                 import *
from .HilbertNumerator      import *
from .UnivariateSeriesData  import *
from .IntegerLattice        import *
from .MinorLattice          import *
from .ToricModel            import *
from .PrimalityVerdict      import *
from .PolyominoIdeal        import *
from .AlgebraInvariants     import *
from .PolyominoEnumerator   import *
from .CampaignReport        import *
from .Campaign              import *
