import json

import pytest

from polyoideals import (   PolyominoEnumerator, Campaign, CampaignReport, CellCollection, Settings,
                            AlgebraInvariants, PolyShape, RookBoard, PolyominoIdealError)
from polyoideals.Campaign import evaluate_instance

@pytest.mark.parametrize('n, fixed, free', [(1, 1, 1), (2, 2, 1), (3, 6, 2), (4, 19, 5), (5, 63, 12)])
def test_polyomino_counts(n, fixed, free):
    assert PolyominoEnumerator(n).count() == fixed
    assert PolyominoEnumerator(n, mod_symmetry = True).count() == free

@pytest.mark.parametrize('n, count', [(1, 1), (2, 4), (3, 20)])
def test_weakly_connected_counts(n, count):
    assert sum(1 for _ in PolyominoEnumerator.enumerate_collections(n)) == count

def test_enumerated_polyominoes_are_distinct_and_connected():
    found = list(PolyominoEnumerator.enumerate_polyominoes(5))
    assert len(set(found)) == len(found)
    assert all(c.Rank == 5 and c.structure().IsPolyomino for c in found)

def test_free_polyominoes_are_canonical():
    for collection in PolyominoEnumerator.enumerate_polyominoes(4, mod_symmetry = True):
        assert collection == collection.canonical_under_symmetry()

def test_weakly_connected_collections():
    found = list(PolyominoEnumerator.enumerate_collections(2))
    assert CellCollection([(1, 1), (2, 2)]) in found
    assert CellCollection([(1, 2), (2, 1)]) in found
    assert all(c.structure().IsWeaklyConnected for c in found)

def test_rank_bound():
    with pytest.raises(PolyominoIdealError):
        PolyominoEnumerator(0)
    with pytest.raises(PolyominoIdealError):
        PolyominoEnumerator(PolyominoEnumerator.MaxRank + 1)
    assert PolyominoEnumerator(12, max_rank = 12).Rank == 12

def test_evaluate_instance_record():
    record = evaluate_instance((((1, 1), (1, 2), (2, 1), (2, 2)), tuple(Campaign.checks), Settings()))
    assert record['rank'] == 4
    assert record['h'] == [1, 4, 1]
    assert record['rookPoly'] == [1, 4, 2]
    assert record['switchingRookPoly'] == [1, 4, 1]
    assert record['classification'] == {'path': 'notAPath', 'simple': True, 'thin': False}
    assert record['primeVerdict']['status'] == 'prime'
    assert record['zigZagFound'] is False
    assert record['checks'] == {'hEqualsSwitchingRook': 'passed',
                                'regEqualsRookNumber': 'passed',
                                'primeIffNoZigzag': 'passed',
                                'simpleImpliesPrime': 'passed',
                                'heightEqualsRank': 'passed',
                                'thinImpliesHEqualsRook': 'skipped',
                                'closedPathGorenstein': 'skipped'}
    assert record['budgetExceeded'] is None
    json.dumps(record)

def test_evaluate_instance_on_a_thin_path():
    record = evaluate_instance((((1, 1), (2, 1), (2, 2)), ('thinImpliesHEqualsRook',), Settings()))
    assert record['checks'] == {'thinImpliesHEqualsRook': 'passed'}
    assert record['primeVerdict'] is None

def test_evaluate_instance_out_of_budget():
    record = evaluate_instance((((1, 1), (1, 2), (2, 1), (2, 2)), ('hEqualsSwitchingRook',), Settings(pair_budget = 1)))
    assert record['h'] is None
    assert record['checks'] == {'hEqualsSwitchingRook': 'indeterminate'}
    assert record['budgetExceeded']

def test_closed_path_gorenstein_check(frame):
    record = evaluate_instance((frame.Cells, ('closedPathGorenstein',), Settings()))
    assert record['checks'] == {'closedPathGorenstein': 'passed'}
    assert record['gorensteinVerdict'] == 'gorenstein'

def test_campaign_validation():
    with pytest.raises(PolyominoIdealError):
        Campaign(3, checks = ['hEqualsRook'])
    with pytest.raises(PolyominoIdealError):
        Campaign(0)

def test_campaign_instances():
    instances = Campaign(3).instances()
    assert [c.Rank for c in instances] == [1, 2, 2] + [3] * 6
    assert instances == sorted(instances, key = lambda c: (c.Rank, c.Cells))

def test_small_campaign():
    report = Campaign(3).run()
    assert report.Passed
    summary = report.summary()
    assert summary['instances'] == 9
    assert summary['perRank'] == {'1': 1, '2': 2, '3': 6}
    assert summary['failures'] == 0
    assert summary['checks']['hEqualsSwitchingRook']['passed'] == 9
    assert summary['checks']['closedPathGorenstein']['skipped'] == 9

@pytest.mark.slow
def test_campaign_up_to_rank_five():
    report = Campaign(5).run()
    assert report.Passed
    assert report.summary()['instances'] == 1 + 2 + 6 + 19 + 63

@pytest.mark.slow
def test_campaign_of_rank_six():
    checks = ['hEqualsSwitchingRook', 'regEqualsRookNumber', 'primeIffNoZigzag', 'simpleImpliesPrime', 'heightEqualsRank']
    report = Campaign(6, checks, Settings(workers = 2)).run()
    assert report.Passed
    summary = report.summary()
    assert summary['perRank']['6'] == 216
    for check in checks:
        assert summary['checks'][check]['failed'] == 0
    assert summary['checks']['hEqualsSwitchingRook']['passed'] == 1 + 2 + 6 + 19 + 63 + 216

@pytest.mark.slow
@pytest.mark.parametrize('n', range(1, 9))
def test_h_polynomial_of_simple_thin_polyominoes_is_the_rook_polynomial(n):
    for collection in PolyominoEnumerator.enumerate_polyominoes(n, mod_symmetry = True):
        if not collection.structure().IsSimple or not PolyShape(collection).is_thin():
            continue
        series = AlgebraInvariants(collection).hilbert_data()
        assert series.HCoefficients == RookBoard(collection).rook_polynomial(), collection.to_text()

def test_campaign_does_not_depend_on_the_number_of_workers():
    checks = ['hEqualsSwitchingRook', 'regEqualsRookNumber']
    sequential = Campaign(3, checks).run()
    parallel = Campaign(3, checks, Settings(workers = 2)).run()
    assert sequential == parallel
    assert sequential.to_jsonl() == parallel.to_jsonl()

def test_report_jsonl():
    report = Campaign(2, ['hEqualsSwitchingRook']).run()
    text = report.to_jsonl()
    lines = text.splitlines()
    assert json.loads(lines[0]) == {'checks': ['hEqualsSwitchingRook']}
    assert len(lines) == 1 + 3
    assert CampaignReport.from_jsonl(text) == report

def test_malformed_report():
    with pytest.raises(PolyominoIdealError):
        CampaignReport.from_jsonl('')
    with pytest.raises(PolyominoIdealError):
        CampaignReport.from_jsonl('{"checks": ["a"]}\nnot json\n')

def test_report_failures():
    records = [{'cells': [[1, 1]], 'rank': 1, 'checks': {'a': 'failed', 'b': 'passed'}, 'details': {'a': 'oops'}},
               {'cells': [[1, 1], [2, 1]], 'rank': 2, 'checks': {'a': 'passed', 'b': 'indeterminate'}, 'budgetExceeded': 'budget'}]
    report = CampaignReport(records[::-1], ['b', 'a'])
    assert not report.Passed
    assert report.Checks == ['a', 'b']
    assert report.Failures == [{'cells': [[1, 1]], 'check': 'a', 'detail': 'oops'}]
    summary = report.summary()
    assert summary['checks']['a'] == {'passed': 1, 'failed': 1, 'skipped': 0, 'indeterminate': 0}
    assert summary['checks']['b'] == {'passed': 1, 'failed': 0, 'skipped': 0, 'indeterminate': 1}
    assert summary['budgetExceeded'] == 1
