import logging
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .CellCollection import CellCollection
from .RookBoard import RookBoard
from .AlgebraInvariants import AlgebraInvariants
from .PolyominoEnumerator import PolyominoEnumerator
from .CampaignReport import CampaignReport
from .Settings import Settings
from .Exceptions import generate_exception_message, PolyominoIdealError, BudgetExceeded

logger = logging.getLogger(__name__)

class Campaign:

    """
    Runs identity checks over every polyomino up to a
    given rank. The instances are independent: they are
    evaluated by a pool of Settings.Workers processes and
    merged back in canonical order, so the report does
    not depend on the number of workers.

    The available checks are

        hEqualsSwitchingRook    h(t) is the switching rook
                                polynomial
        regEqualsRookNumber     deg h(t) is the rook number
        primeIffNoZigzag        I_P is prime iff P has no
                                zig-zag walk, primality
                                being decided exactly
        simpleImpliesPrime      simple polyominoes are prime
        heightEqualsRank        ht(I_P) = |P|
        thinImpliesHEqualsRook  h(t) is the rook polynomial
                                for simple thin polyominoes
        closedPathGorenstein    for prime closed paths, all
                                blocks have rank 3 iff h(t)
                                is palindromic

    Attributes
    ----------
    MaxRank : int
    Checks : list of str
    Settings : Settings

    Methods
    ----------
    instances() -> list of CellCollection
    run(progress) -> CampaignReport
    """

    checks = (  'hEqualsSwitchingRook', 'regEqualsRookNumber', 'primeIffNoZigzag',
                'simpleImpliesPrime', 'heightEqualsRank', 'thinImpliesHEqualsRook',
                'closedPathGorenstein')

    def __init__(self,  max_rank : int,
                        checks : Optional[Iterable[str]] = None,
                        settings : Optional[Settings] = None):

        """
        Campaign class initializer

        Parameters
        ----------
        max_rank : int
            Polyominoes of rank 1, ..., max_rank are visited
        checks : iterable of str
            Defaults to every check
        settings : Settings
        """

        checks = list(Campaign.checks) if checks is None else sorted(set(checks))
        unknown = [c for c in checks if c not in Campaign.checks]
        if unknown:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'Campaign.__init__()',
                                                                    f"Unknown checks {unknown}. Choose among {list(Campaign.checks)}."))
        if max_rank < 1:
            raise PolyominoIdealError(generate_exception_message(   2,
                                                                    'Campaign.__init__()',
                                                                    f"'max_rank' must be positive (got {max_rank})."))
        self.__max_rank = max_rank
        self.__checks = checks
        self.__settings = Settings() if settings is None else settings

    #Getters
    @property
    def MaxRank(self):
        return self.__max_rank

    @property
    def Checks(self):
        return list(self.__checks)

    @property
    def Settings(self):
        return self.__settings

    def instances(self) -> List[CellCollection]:
        output = []
        for n in range(1, self.__max_rank + 1):
            output.extend(PolyominoEnumerator.enumerate_polyominoes(n, max_rank = max(self.__max_rank, PolyominoEnumerator.MaxRank)))
        return sorted(output, key = lambda c: (c.Rank, c.Cells))

    def run(self, progress : bool = False) -> CampaignReport:

        """
        Parameters
        ----------
        progress : bool
            Whether to display a tqdm progress bar

        Returns
        ----------
        CampaignReport
        """

        inputs = [(collection.Cells, tuple(self.__checks), self.__settings) for collection in self.instances()]
        workers = max(1, min(self.__settings.Workers, len(inputs)))
        logger.info("Campaign over %d polyominoes of rank <= %d with %d worker(s), checks %s",
                    len(inputs), self.__max_rank, workers, self.__checks)

        if workers == 1:
            records = [evaluate_instance(x) for x in tqdm(inputs, disable = not progress, desc = 'campaign')]
        else:
            with Pool(workers) as pool:
                records = list(tqdm(pool.imap(evaluate_instance, inputs, chunksize = 4),
                                    total = len(inputs), disable = not progress, desc = 'campaign'))

        report = CampaignReport(records, self.__checks)
        logger.info("Campaign finished: %s", report.summary())
        return report

def evaluate_instance(arguments : Tuple[Sequence[Tuple[int, int]], Sequence[str], Settings]) -> Dict[str, object]:

    """
    Evaluates the requested checks on a single
    polyomino. It is a module level function so that
    the worker processes can unpickle it.

    Parameters
    ----------
    arguments : tuple
        (cells, checks, settings)

    Returns
    ----------
    dict
        A record of CampaignReport
    """

    cells, checks, settings = arguments
    collection = CellCollection(cells)
    invariants = AlgebraInvariants(collection, settings)
    ideal = invariants.Ideal
    shape = ideal.Shape
    board = RookBoard(collection)
    structure = collection.structure()

    kind = shape.classify_path().Kind
    thin = shape.is_thin()
    record = {  'cells': [list(c) for c in collection.Cells],
                'rank': collection.Rank,
                'classification': {'path': kind, 'simple': structure.IsSimple, 'thin': thin},
                'h': None,
                'rookPoly': board.rook_polynomial(),
                'switchingRookPoly': board.switching_rook_polynomial(),
                'primeVerdict': None,
                'zigZagFound': None,
                'gorensteinVerdict': None,
                'checks': {},
                'details': {},
                'budgetExceeded': None}

    def settle(name : str, passed : bool, detail : str = '') -> None:
        record['checks'][name] = 'passed' if passed else 'failed'
        if not passed:
            record['details'][name] = detail
            logger.warning("Check %s failed on %s: %s", name, collection.to_text(), detail)

    try:
        series = invariants.hilbert_data()
        h = series.HCoefficients
        record['h'] = h
    except BudgetExceeded as error:
        series, h = None, None
        record['budgetExceeded'] = str(error)

    for name in ('hEqualsSwitchingRook', 'regEqualsRookNumber', 'heightEqualsRank', 'thinImpliesHEqualsRook'):
        if name not in checks:
            continue
        if series is None:
            record['checks'][name] = 'indeterminate'
        elif name == 'hEqualsSwitchingRook':
            settle(name, h == record['switchingRookPoly'], f"h = {h}, switching rook polynomial = {record['switchingRookPoly']}")
        elif name == 'regEqualsRookNumber':
            settle(name, series.Degree == board.rook_number(), f"deg h = {series.Degree}, rook number = {board.rook_number()}")
        elif name == 'heightEqualsRank':
            height = ideal.Ring.NumberOfVariables - series.KrullDimension
            settle(name, height == collection.Rank, f"height {height}")
        elif structure.IsSimple and thin:
            settle(name, h == record['rookPoly'], f"h = {h}, rook polynomial = {record['rookPoly']}")
        else:
            record['checks'][name] = 'skipped'

    if 'primeIffNoZigzag' in checks or 'simpleImpliesPrime' in checks:
        verdict = ideal.is_prime(method = 'exact')
        record['primeVerdict'] = verdict.to_dict()
        if verdict.Status == 'indeterminate':
            record['budgetExceeded'] = verdict.Reason

        if 'simpleImpliesPrime' in checks:
            if not structure.IsSimple:
                record['checks']['simpleImpliesPrime'] = 'skipped'
            elif verdict.Status == 'indeterminate':
                record['checks']['simpleImpliesPrime'] = 'indeterminate'
            else:
                settle('simpleImpliesPrime', verdict.IsPrime, str(verdict))

        if 'primeIffNoZigzag' in checks:
            try:
                record['zigZagFound'] = bool(shape.find_zig_zag_walks(max_walks = 1))
            except BudgetExceeded as error:
                record['budgetExceeded'] = str(error)
            if verdict.Status == 'indeterminate' or record['zigZagFound'] is None:
                record['checks']['primeIffNoZigzag'] = 'indeterminate'
            else:
                settle('primeIffNoZigzag', verdict.IsPrime != record['zigZagFound'],
                       f"{verdict}, zig-zag walk found: {record['zigZagFound']}")

    if 'closedPathGorenstein' in checks:
        if kind != 'closedPath' or series is None:
            record['checks']['closedPathGorenstein'] = 'skipped' if kind != 'closedPath' else 'indeterminate'
        else:
            probe = invariants.gorenstein_probe()
            record['gorensteinVerdict'] = probe['verdict']
            if not ideal.is_prime().IsPrime:
                record['checks']['closedPathGorenstein'] = 'skipped'
            else:
                ranks = shape.classify_path().block_ranks()
                settle('closedPathGorenstein', all(r == 3 for r in ranks) == series.is_palindromic(),
                       f"block ranks {ranks}, h = {h}")

    return record
