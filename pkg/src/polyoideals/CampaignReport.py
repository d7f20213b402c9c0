import json
from typing import Dict, Sequence

from .Exceptions import generate_exception_message, PolyominoIdealError

class CampaignReport:

    """
    Outcome of a verification campaign over enumerated
    collections of cells. Each record describes one
    instance:

        cells               canonical cells, as lists
        rank                number of cells
        classification      {'path', 'simple', 'thin'}
        h                   h-polynomial coefficients
        rookPoly            rook polynomial coefficients
        switchingRookPoly   switching rook polynomial
        primeVerdict        PrimalityVerdict.to_dict()
        zigZagFound         bool
        gorensteinVerdict   str or None
        checks              check name -> 'passed',
                            'failed', 'skipped' or
                            'indeterminate'
        budgetExceeded      message or None

    Attributes
    ----------
    Records : list of dict
        Sorted by rank, then by cells
    Checks : list of str
    Failures : list of dict
        One entry {cells, check, detail} per failed check

    Methods
    ----------
    summary() -> dict
    to_jsonl() -> str
    from_jsonl(text) -> CampaignReport
    """

    outcomes = ('passed', 'failed', 'skipped', 'indeterminate')

    def __init__(self,  records : Sequence[dict],
                        checks : Sequence[str]):

        self.__records = sorted(records, key = lambda r: (r['rank'], r['cells']))
        self.__checks = sorted(checks)
        self.__failures = [{'cells': r['cells'], 'check': name, 'detail': r.get('details', {}).get(name, '')}
                                for r in self.__records
                                for name in self.__checks
                                if r['checks'].get(name) == 'failed']

    #Getters
    @property
    def Records(self):
        return list(self.__records)

    @property
    def Checks(self):
        return list(self.__checks)

    @property
    def Failures(self):
        return list(self.__failures)

    @property
    def Passed(self) -> bool:
        return not self.__failures

    def summary(self) -> Dict[str, object]:

        """
        Returns
        ----------
        dict
            Number of instances per rank, the outcome counts
            of every check, the number of instances which
            ran out of budget and the number of failures
        """

        per_rank : Dict[str, int] = {}
        counts = {name: {outcome: 0 for outcome in CampaignReport.outcomes} for name in self.__checks}
        exhausted = 0
        for record in self.__records:
            key = str(record['rank'])
            per_rank[key] = per_rank.get(key, 0) + 1
            for name in self.__checks:
                counts[name][record['checks'].get(name, 'skipped')] += 1
            if record.get('budgetExceeded'):
                exhausted += 1

        return {'instances': len(self.__records),
                'perRank': per_rank,
                'checks': counts,
                'budgetExceeded': exhausted,
                'failures': len(self.__failures)}

    def to_jsonl(self) -> str:

        """
        One JSON object per line: a header with the checks,
        then one line per record, with sorted keys.
        """

        lines = [json.dumps({'checks': self.__checks}, sort_keys = True)]
        lines.extend(json.dumps(r, sort_keys = True) for r in self.__records)
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_jsonl(cls, text : str) -> 'CampaignReport':

        lines = [line for line in text.splitlines() if line.strip()]
        try:
            header = json.loads(lines[0])
            records = [json.loads(line) for line in lines[1:]]
            checks = header['checks']
        except (IndexError, KeyError, ValueError) as error:
            raise PolyominoIdealError(generate_exception_message(   1,
                                                                    'CampaignReport.from_jsonl()',
                                                                    f"Malformed campaign report ({error})."))
        return cls(records, checks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CampaignReport):
            return NotImplemented
        return (self.__records, self.__checks) == (other.Records, other.Checks)

    def __repr__(self) -> str:
        return f"CampaignReport({len(self.__records)} instances, {len(self.__failures)} failures)"
