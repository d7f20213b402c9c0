import json
import pickle

import pytest

from polyoideals import CellCollection, Interval, CellParseError, PolyominoIdealError

from conftest import column

def test_interval_corners():
    I = Interval((1, 1), (3, 2))
    assert I.C == (1, 2)
    assert I.D == (3, 1)
    assert I.corners() == ((1, 1), (3, 2), (1, 2), (3, 1))
    assert I.Width == 2 and I.Height == 1
    assert I.IsProper
    assert I.opposite_corner((1, 2)) == (3, 1)
    assert set(I.adjacent_corners((1, 1))) == {(1, 2), (3, 1)}
    assert set(I.adjacent_corners((1, 2))) == {(1, 1), (3, 2)}
    assert I.is_diagonal_corner((3, 2))
    assert not I.is_diagonal_corner((3, 1))

def test_interval_with_reversed_corners_is_rejected():
    with pytest.raises(PolyominoIdealError):
        Interval((2, 2), (1, 3))

def test_interval_cells_and_points():
    I = Interval((1, 1), (3, 2))
    assert I.cells() == [(1, 1), (2, 1)]
    assert len(I.lattice_points()) == 6
    assert I.contains_point((2, 2))
    assert not I.contains_point((4, 1))
    assert I.intersection(Interval((3, 2), (4, 4))) == {(3, 2)}
    assert Interval.spanned_by_cells((2, 3), (1, 1)) == Interval((1, 1), (3, 4))

def test_canonical_translation():
    collection = CellCollection([(3, 4), (4, 4), (4, 4)])
    assert collection.Cells == ((1, 1), (2, 1))
    assert collection.CanonicalOffset == (-2, -3)
    assert collection.Rank == 2
    assert collection == CellCollection([(1, 1), (2, 1)])

def test_empty_collection():
    collection = CellCollection()
    assert collection.Rank == 0
    assert collection.vertices() == set()
    assert collection.inner_intervals() == []

def test_vertices_of_l_tromino(l_tromino):
    assert l_tromino.vertices() == {(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)}

def test_inner_intervals_of_l_tromino(l_tromino):
    intervals = l_tromino.inner_intervals()
    assert len(intervals) == 5
    assert Interval((1, 1), (3, 2)) in intervals
    assert Interval((2, 1), (3, 3)) in intervals
    assert intervals == sorted(intervals)
    assert not l_tromino.is_inner_interval(Interval((1, 1), (3, 3)))

def test_inner_intervals_of_square(square_tetromino):
    # 4 cells, 2 + 2 dominoes and the whole square
    assert len(square_tetromino.inner_intervals()) == 9

def test_maximal_edge_intervals(l_tromino):
    horizontal = l_tromino.maximal_edge_intervals('horizontal')
    vertical = l_tromino.maximal_edge_intervals('vertical')
    assert len(horizontal) == 3
    assert len(vertical) == 3
    assert all(e.Maximal for e in horizontal + vertical)
    assert any(e.contains_point((2, 3)) and e.contains_point((3, 3)) for e in horizontal)

def test_structure_of_frame(frame):
    report = frame.structure()
    assert report.IsPolyomino
    assert not report.IsSimple
    assert report.NumberOfHoles == 1
    assert report.HoleCells == [[(2, 2)]]
    assert not report.IsRowConvex
    assert report.BoundingBox == Interval((1, 1), (4, 4))

def test_structure_of_diagonal_pair(diagonal_pair):
    report = diagonal_pair.structure()
    assert not report.IsPolyomino
    assert report.IsWeaklyConnected
    assert report.IsSimple

def test_structure_dictionary(l_tromino):
    payload = l_tromino.structure().to_dict()
    assert payload['rank'] == 3
    assert payload['isPolyomino'] and payload['isConvex'] and payload['isSimple']
    assert payload['numberOfHoles'] == 0
    json.dumps(payload)

def test_cell_graph(l_tromino):
    graph = l_tromino.cell_graph()
    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 2

def test_symmetries_of_domino(domino):
    vertical = CellCollection([(1, 1), (1, 2)])
    assert {domino.transformed(k) for k in range(8)} == {domino, vertical}
    assert domino.canonical_under_symmetry() == vertical.canonical_under_symmetry()

def test_identity_symmetry_keeps_the_collection(s_shape):
    assert s_shape.transformed(0) == s_shape

def test_polyo_matrix(single_cell):
    assert single_cell.polyo_matrix() == [['x_(1,2)', 'x_(2,2)'], ['x_(1,1)', 'x_(2,1)']]

def test_text_codec(l_tromino):
    assert l_tromino.to_text() == '{{1,1},{2,1},{2,2}}'
    assert CellCollection.from_text(' { {1, 1},{2,1} , {2,2}} ') == l_tromino
    assert CellCollection.from_text('{}').Rank == 0

@pytest.mark.parametrize('text', ['{{1,1}', '{{1,1},}', '{(1,1)}', '{{a,1}}', ''])
def test_malformed_text(text):
    with pytest.raises(CellParseError):
        CellCollection.from_text(text)

def test_json_codec(l_tromino):
    assert l_tromino.to_json() == {'cells': [[1, 1], [2, 1], [2, 2]]}
    assert CellCollection.from_json(json.dumps(l_tromino.to_json())) == l_tromino
    assert CellCollection.parse('{"cells": [[5, 5], [6, 5]]}') == CellCollection([(1, 1), (2, 1)])

@pytest.mark.parametrize('text', ['{"cells": [[1]]}', '{"cell": []}', '{"cells": [[1, "a"]]}'])
def test_malformed_json(text):
    with pytest.raises(CellParseError):
        CellCollection.from_json(text)

def test_pickling(frame):
    assert pickle.loads(pickle.dumps(frame)) == frame

def test_random_collection_is_deterministic():
    first = CellCollection.random_collection(6, seed = 11)
    assert first == CellCollection.random_collection(6, seed = 11)
    assert first.Rank == 6
    assert first.structure().IsPolyomino

def test_random_collection_needs_a_positive_rank():
    with pytest.raises(PolyominoIdealError):
        CellCollection.random_collection(0)

def test_ferrers_diagram():
    assert CellCollection.ferrers_diagram([2, 2], [1, 1]).Cells == ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (2, 4))
    assert CellCollection.ferrers_diagram([3], [1]) == column(3)
    with pytest.raises(PolyominoIdealError):
        CellCollection.ferrers_diagram([1, 2], [1])
