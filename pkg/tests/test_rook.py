import pytest

from polyoideals import CellCollection, RookBoard, RookConfiguration, CellNotInCollection, PolyominoIdealError, Unimplemented

from conftest import staircase, column

def test_attacks_along_inner_intervals(l_tromino):
    board = RookBoard(l_tromino)
    assert board.attacks((1, 1), (2, 1))
    assert board.attacks((2, 1), (2, 2))
    assert not board.attacks((1, 1), (2, 2))

def test_rooks_in_a_row_across_a_hole_do_not_attack(frame):
    board = RookBoard(frame)
    assert not board.attacks((1, 2), (3, 2))
    assert board.attacks((1, 1), (3, 1))

def test_attacks_needs_cells_of_the_collection(l_tromino):
    board = RookBoard(l_tromino)
    with pytest.raises(CellNotInCollection):
        board.attacks((1, 1), (1, 2))
    with pytest.raises(PolyominoIdealError):
        board.attacks((1, 1), (1, 1))

def test_non_attacking(square_tetromino):
    board = RookBoard(square_tetromino)
    assert board.is_non_attacking([(1, 1), (2, 2)])
    assert not board.is_non_attacking([(1, 1), (1, 2)])
    assert board.is_non_attacking([])

def test_attack_graph(l_tromino):
    graph = RookBoard(l_tromino).attack_graph()
    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 2

def test_square_rook_polynomials(square_tetromino):
    board = RookBoard(square_tetromino)
    assert board.rook_polynomial() == [1, 4, 2]
    assert board.rook_number() == 2
    assert board.switching_rook_polynomial() == [1, 4, 1]
    assert board.rook_configurations(2) == [RookConfiguration([(1, 1), (2, 2)]), RookConfiguration([(1, 2), (2, 1)])]

def test_switches(square_tetromino):
    board = RookBoard(square_tetromino)
    assert board.switches(RookConfiguration([(1, 1), (2, 2)])) == [RookConfiguration([(1, 2), (2, 1)])]
    classes = board.switching_classes(2)
    assert len(classes) == 1
    assert classes[0].Size == 2
    assert classes[0].Representative == RookConfiguration([(1, 1), (2, 2)])

@pytest.mark.parametrize('collection, rook', [  (CellCollection([(1, 1)]), [1, 1]),
                                                (CellCollection([(1, 1), (2, 1), (2, 2)]), [1, 3, 1]),
                                                (column(4), [1, 4]),
                                                (staircase(4), [1, 4, 3]),
                                                (CellCollection([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)]), [1, 5, 5, 1])])
def test_rook_polynomials(collection, rook):
    board = RookBoard(collection)
    assert board.rook_polynomial() == rook
    assert board.switching_rook_polynomial() == rook

def test_ferrers_rook_polynomials():
    board = RookBoard(CellCollection.ferrers_diagram([2, 2], [1, 1]))
    assert board.rook_polynomial() == [1, 6, 6]
    assert board.switching_rook_polynomial() == [1, 6, 5]

def test_empty_board():
    board = RookBoard(CellCollection())
    assert board.rook_polynomial() == [1]
    assert board.rook_number() == 0

def test_negative_number_of_rooks(single_cell):
    with pytest.raises(PolyominoIdealError):
        RookBoard(single_cell).rook_configurations(-1)

def test_standard_rook_configurations_are_not_available(single_cell):
    board = RookBoard(single_cell)
    with pytest.raises(Unimplemented):
        board.standard_rook_polynomial()
    with pytest.raises(Unimplemented):
        board.standard_rook_configurations(1)
    with pytest.raises(Unimplemented):
        board.standard_rook_number()

def test_configuration_ordering_and_serialization():
    first = RookConfiguration([(2, 2), (1, 1)])
    assert first.Rooks == ((1, 1), (2, 2))
    assert first.Size == 2
    assert first.to_list() == [[1, 1], [2, 2]]
    assert first.switched([(1, 1), (2, 2)], [(1, 2), (2, 1)]) == RookConfiguration([(1, 2), (2, 1)])
    assert first < RookConfiguration([(1, 2), (2, 1)])
