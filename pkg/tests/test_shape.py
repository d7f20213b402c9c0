import pytest

from polyoideals import (   CellCollection, Interval, PolyShape, PathDecomposition, ZigZagWalk, Settings,
                            NotAPolyomino, NotAPath, NotAClosedPath, NotConvex, InvalidWalk, SearchBudgetExceeded)

from conftest import staircase, column

def test_thinness(l_tromino, square_tetromino, frame):
    assert PolyShape(l_tromino).is_thin()
    assert PolyShape(frame).is_thin()
    assert not PolyShape(square_tetromino).is_thin()

def test_single_cell_is_an_open_path(single_cell):
    path = PolyShape(single_cell).classify_path()
    assert path.Kind == 'openPath'
    assert path.block_ranks() == [1]

def test_open_path_blocks(s_shape):
    path = PolyShape(s_shape).classify_path()
    assert path.Kind == 'openPath'
    assert path.OrderedCells == ((1, 1), (2, 1), (2, 2), (2, 3), (3, 3))
    assert path.block_ranks() == [2, 3, 2]
    assert path.MaximalBlocks[1] == Interval((2, 1), (3, 4))
    assert path.ChangesOfDirection == (1, 3)
    assert path.Turns[0] != path.Turns[1]

def test_square_is_not_a_path(square_tetromino):
    assert PolyShape(square_tetromino).classify_path().Kind == 'notAPath'

def test_t_tetromino_is_not_a_path():
    t = CellCollection([(1, 1), (2, 1), (3, 1), (2, 2)])
    assert PolyShape(t).classify_path().Kind == 'notAPath'

def test_u_pentomino_is_an_open_path():
    u = CellCollection([(1, 1), (1, 2), (2, 1), (3, 1), (3, 2)])
    path = PolyShape(u).classify_path()
    assert path.Kind == 'openPath'
    assert path.block_ranks() == [2, 3, 2]

def test_frame_is_a_closed_path(frame):
    path = PolyShape(frame).classify_path()
    assert path.Kind == 'closedPath'
    assert path.block_ranks() == [3, 3, 3, 3]
    assert path.OrderedCells[0] == (1, 1)

def test_classification_needs_a_polyomino(diagonal_pair):
    with pytest.raises(NotAPolyomino):
        PolyShape(diagonal_pair).classify_path()
    with pytest.raises(NotAPolyomino):
        PolyShape(CellCollection()).classify_path()

def test_path_equality_up_to_reversal(s_shape):
    path = PolyShape(s_shape).classify_path()
    reversed_path = PathDecomposition('openPath', path.OrderedCells[::-1])
    assert path == reversed_path

def test_closed_path_features(frame, witness):
    assert PolyShape(frame).closed_path_features() == {'hasLConfiguration': True, 'maxLadderSteps': 0}
    features = PolyShape(witness).closed_path_features()
    assert not features['hasLConfiguration']
    assert features['maxLadderSteps'] == 2

def test_steps_that_turn_back_are_not_a_ladder(witness):
    # the vertical blocks of a corner sit in columns 4, 5, then 4 again
    assert PolyShape(witness).closed_path_features()['maxLadderSteps'] < 3

def test_ladder_of_three_steps(ladder):
    path = PolyShape(ladder).classify_path()
    assert path.Kind == 'closedPath'
    assert sorted(path.block_ranks()) == [2] * 10 + [3, 3, 4, 4]
    assert PolyShape(ladder).closed_path_features() == {'hasLConfiguration': False, 'maxLadderSteps': 3}

def test_closed_path_features_need_a_closed_path(s_shape):
    with pytest.raises(NotAClosedPath):
        PolyShape(s_shape).closed_path_features()

@pytest.mark.parametrize('steps, stairs, odd, bad', [   (3, [], [], []),
                                                        (4, [(0, 3)], [(0, 3)], []),
                                                        (5, [(0, 4)], [], [(0, 4)]),
                                                        (6, [(0, 5)], [(0, 5)], [])])
def test_stairs_of_staircases(steps, stairs, odd, bad):
    report = PolyShape(staircase(steps)).stair_analysis()
    assert report.Stairs == stairs
    assert report.OddStairs == odd
    assert report.BadStairs == bad

def test_s_shape_has_no_stair(s_shape):
    assert PolyShape(s_shape).stair_analysis().Stairs == []

def test_stairs_need_an_open_path(frame):
    with pytest.raises(NotAPath):
        PolyShape(frame).stair_analysis()

@pytest.mark.parametrize('collection, expected', [  (CellCollection([(1, 1)]), True),
                                                    (CellCollection([(1, 1), (2, 1), (2, 2)]), True),
                                                    (CellCollection([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)]), True),
                                                    (staircase(4), False),
                                                    (column(3), False)])
def test_pseudo_gorenstein_path_criterion(collection, expected):
    assert PolyShape(collection).pseudo_gorenstein_path_criterion() == expected

@pytest.mark.parametrize('collection, degree', [(column(4), 0),
                                                (CellCollection([(1, 1), (2, 1), (2, 2)]), 1),
                                                (CellCollection([(1, 1), (1, 2), (2, 1), (2, 2)]), 1),
                                                (CellCollection([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)]), 2)])
def test_convexity_degree(collection, degree):
    shape = PolyShape(collection)
    assert shape.convexity_degree() == degree
    assert shape.is_k_convex(degree)
    assert degree == 0 or not shape.is_k_convex(degree - 1)

def test_convexity_degree_needs_a_convex_polyomino(frame):
    with pytest.raises(NotConvex):
        PolyShape(frame).convexity_degree()

def test_hq_complement(frame, witness, l_tromino):
    assert PolyShape(frame).hole_cells() == [(2, 2)]
    assert PolyShape(frame).is_hq_complement()
    assert not PolyShape(witness).is_hq_complement()
    assert not PolyShape(l_tromino).is_hq_complement()

def test_simple_shapes_have_no_zig_zag_walk(l_tromino, square_tetromino, s_shape, frame):
    for collection in (l_tromino, square_tetromino, s_shape, frame):
        assert PolyShape(collection).find_zig_zag_walks() == []

def test_witness_has_a_zig_zag_walk(witness):
    walks = PolyShape(witness).find_zig_zag_walks(max_walks = 1)
    assert len(walks) == 1
    walks[0].validate(witness)
    assert walks[0].Length % 2 == 0

@pytest.mark.slow
def test_every_zig_zag_walk_of_the_witness(witness):
    expected = {Interval((2, 1), (5, 2)), Interval((5, 2), (6, 5)), Interval((2, 5), (5, 6)), Interval((1, 2), (2, 5))}
    walks = PolyShape(witness).find_zig_zag_walks()
    assert any(set(W.Intervals) == expected for W in walks)
    for W in walks:
        W.validate(witness)

def test_zig_zag_search_budget(witness):
    shape = PolyShape(witness, Settings(zigzag_budget = 1))
    with pytest.raises(SearchBudgetExceeded):
        shape.find_zig_zag_walks()

def test_zig_zag_walk_bookkeeping(witness):
    walk = ZigZagWalk(  [Interval((2, 1), (5, 2)), Interval((5, 2), (6, 5)), Interval((2, 5), (5, 6)), Interval((1, 2), (2, 5))],
                        [(2, 2), (5, 2), (5, 5), (2, 5)])
    assert walk.Z == ((5, 1), (6, 5), (2, 6), (1, 2))
    assert walk.U == ((2, 1), (6, 2), (5, 6), (1, 5))
    assert walk.Roles == ('antiDiagonal', 'diagonal', 'antiDiagonal', 'diagonal')
    walk.validate(witness)
    assert walk.to_dict()['length'] == 4

def test_zig_zag_walk_needs_two_intervals():
    with pytest.raises(InvalidWalk):
        ZigZagWalk([Interval((1, 1), (2, 2))], [(1, 1)])

def test_zig_zag_walk_outside_the_collection_is_invalid(l_tromino):
    walk = ZigZagWalk(  [Interval((2, 1), (5, 2)), Interval((5, 2), (6, 5)), Interval((2, 5), (5, 6)), Interval((1, 2), (2, 5))],
                        [(2, 2), (5, 2), (5, 5), (2, 5)])
    with pytest.raises(InvalidWalk):
        walk.validate(l_tromino)

def test_zig_zag_walk_with_non_adjacent_corners_is_invalid():
    with pytest.raises(InvalidWalk):
        ZigZagWalk([Interval((1, 1), (2, 2)), Interval((2, 2), (3, 3))], [(1, 1), (2, 2)])
