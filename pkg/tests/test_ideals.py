import pytest

from polyoideals import (   CellCollection, PolyominoIdeal, PolynomialRing, Ideal, MinorLattice, ToricModel, ZigZagWalk,
                            Interval, PolyShape, PrimalityVerdict, Settings, PolyominoIdealError, NotAClosedPath, NotApplicable,
                            ShapeMismatch)

from conftest import column

L_TROMINO_GENERATORS = {'x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)',
                        'x_(1,1)*x_(3,2)-x_(1,2)*x_(3,1)',
                        'x_(2,1)*x_(3,2)-x_(2,2)*x_(3,1)',
                        'x_(2,1)*x_(3,3)-x_(2,3)*x_(3,1)',
                        'x_(2,2)*x_(3,3)-x_(2,3)*x_(3,2)'}

def witness_walk():
    return ZigZagWalk(  [Interval((2, 1), (5, 2)), Interval((5, 2), (6, 5)), Interval((2, 5), (5, 6)), Interval((1, 2), (2, 5))],
                        [(2, 2), (5, 2), (5, 5), (2, 5)])

def test_inner_minors_of_l_tromino(l_tromino):
    ideal = PolyominoIdeal(l_tromino).inner_minor_ideal()
    assert len(ideal) == 5
    assert set(ideal.to_text()) == L_TROMINO_GENERATORS

def test_ring_of_the_vertices(l_tromino):
    polyomino_ideal = PolyominoIdeal(l_tromino)
    assert polyomino_ideal.Ring.NumberOfVariables == 8
    assert set(polyomino_ideal.Ring.Variables) == l_tromino.vertices()

def test_variable_order_does_not_change_the_generators(l_tromino):
    for direction in ('NE', 'WS'):
        ideal = PolyominoIdeal(l_tromino, Settings(direction = direction)).inner_minor_ideal()
        assert set(ideal.to_text()) == L_TROMINO_GENERATORS

def test_adjacent_minors(square_tetromino):
    polyomino_ideal = PolyominoIdeal(square_tetromino)
    adjacent = polyomino_ideal.adjacent_minor_ideal()
    assert len(adjacent) == 4
    assert polyomino_ideal.inner_minor_ideal().contains_ideal(adjacent)
    # The outer 2-minor is not generated by the adjacent ones
    assert not adjacent.contains_ideal(polyomino_ideal.inner_minor_ideal())

def test_groebner_basis_of_square(square_tetromino):
    basis = PolyominoIdeal(square_tetromino).inner_minor_ideal().groebner_basis()
    assert basis.verify()
    assert all(len(g.terms()) == 2 for g in basis)

def test_minor_lattice(square_tetromino, frame):
    lattice = PolyominoIdeal(square_tetromino).minor_lattice()
    assert lattice.Matrix.shape == (4, 9)
    assert lattice.IsSaturated
    assert MinorLattice(frame).IsSaturated
    assert MinorLattice(frame).to_dict()['invariantFactors'] == [1] * 8

@pytest.mark.parametrize('cells', [ [(1, 1)],
                                    [(1, 1), (2, 1), (2, 2)],
                                    [(1, 1), (1, 2), (2, 1), (2, 2)]])
def test_simple_polyomino_ideals_are_toric(cells):
    polyomino_ideal = PolyominoIdeal(CellCollection(cells))
    ideal = polyomino_ideal.inner_minor_ideal()
    assert polyomino_ideal.toric_ideal('graph').equals(ideal)
    assert polyomino_ideal.lattice_ideal().equals(ideal)

def test_toric_models_of_frame(frame):
    polyomino_ideal = PolyominoIdeal(frame)
    ideal = polyomino_ideal.inner_minor_ideal()
    assert polyomino_ideal.toric_ideal('shikama').equals(ideal)
    assert polyomino_ideal.lattice_ideal().equals(ideal)

@pytest.mark.slow
def test_mrr_model_of_frame(frame):
    polyomino_ideal = PolyominoIdeal(frame)
    assert polyomino_ideal.toric_ideal('mrr').contains_ideal(polyomino_ideal.inner_minor_ideal())

@pytest.mark.parametrize('model', ['graph', 'mrr'])
def test_toric_ideal_of_the_empty_collection(model):
    polyomino_ideal = PolyominoIdeal(CellCollection([]))
    assert ToricModel(CellCollection([]), model).ExponentMatrix.shape == (0, 0)
    assert len(polyomino_ideal.toric_ideal(model)) == 0
    assert polyomino_ideal.toric_ideal(model).equals(polyomino_ideal.inner_minor_ideal())

def test_minor_lattice_of_the_empty_collection():
    lattice = PolyominoIdeal(CellCollection([])).minor_lattice()
    assert lattice.Matrix.shape == (0, 0)
    assert lattice.Rank == 0
    assert lattice.IsSaturated
    assert lattice.to_dict()['invariantFactors'] == []

def test_toric_model_matrix(l_tromino):
    model = ToricModel(l_tromino)
    graph = model.edge_interval_graph()
    assert graph.number_of_nodes() == 6
    assert graph.number_of_edges() == 8
    assert model.ExponentMatrix.shape == (6, 8)
    assert model.to_dict()['kind'] == 'graph'
    assert model.kernel().Basis.shape[0] == 8 - 5

def test_shikama_model_needs_a_rectangle_with_a_convex_hole(l_tromino):
    with pytest.raises(ShapeMismatch):
        ToricModel(l_tromino, 'shikama')
    with pytest.raises(PolyominoIdealError):
        ToricModel(l_tromino, 'torus')

def test_shikama_model_with_an_explicit_corner(frame):
    model = ToricModel(frame, 'shikama', corner = (2, 2))
    assert model.ModelVariables[-1] == 'u_e'
    assert model.ExponentMatrix[-1].sum() == 4

@pytest.mark.parametrize('fixture, certificate', [  ('single_cell', 'simpleShape'),
                                                    ('l_tromino', 'simpleShape'),
                                                    ('square_tetromino', 'simpleShape'),
                                                    ('frame', 'hqComplement')])
def test_prime_shapes(request, fixture, certificate):
    verdict = PolyominoIdeal(request.getfixturevalue(fixture)).is_prime()
    assert verdict.IsPrime
    assert verdict.Certificate == certificate

def test_frame_verdict_text(frame):
    assert str(PolyominoIdeal(frame).is_prime()) == 'prime (certificate: hqComplement)'

@pytest.mark.parametrize('fixture', ['l_tromino', 'square_tetromino', 's_shape', pytest.param('frame', marks = pytest.mark.slow)])
def test_exact_primality(request, fixture):
    verdict = PolyominoIdeal(request.getfixturevalue(fixture)).is_prime('exact')
    assert verdict.Status == 'prime'
    assert verdict.Certificate is None

def test_exact_primality_of_a_weakly_connected_collection(diagonal_pair):
    # Two cells sharing a vertex: a complete intersection of two 2-minors in 7
    # variables, with no minimal prime containing a variable.
    verdict = PolyominoIdeal(diagonal_pair).is_prime()
    assert verdict.Status == 'prime'
    assert verdict.Status == PolyominoIdeal(diagonal_pair).is_prime('exact').Status

def test_unknown_primality_method(l_tromino):
    with pytest.raises(PolyominoIdealError):
        PolyominoIdeal(l_tromino).is_prime('guess')

def test_witness_is_not_prime(witness):
    verdict = PolyominoIdeal(witness).is_prime()
    assert verdict.Status == 'notPrime'
    assert verdict.Certificate == 'zigZagWalk'
    assert isinstance(verdict.Witness, ZigZagWalk)
    assert verdict.to_dict()['witness']['length'] % 2 == 0

def test_exhausted_budget_is_indeterminate(witness):
    verdict = PolyominoIdeal(witness, Settings(zigzag_budget = 1)).is_prime()
    assert verdict.Status == 'indeterminate'
    assert not verdict.IsPrime

def test_ladder_closed_path_is_prime(ladder):
    verdict = PolyominoIdeal(ladder, Settings(zigzag_budget = 1)).is_prime()
    assert verdict.Status == 'prime'
    assert verdict.Certificate == 'closedPathShape'

@pytest.mark.slow
def test_ladder_closed_path_has_no_zig_zag_walk(ladder):
    assert not PolyShape(ladder).find_zig_zag_walks(max_walks = 1)

@pytest.mark.slow
def test_witness_is_not_prime_exactly(witness):
    assert PolyominoIdeal(witness).is_prime('exact').Status == 'notPrime'

@pytest.mark.slow
def test_zig_zag_binomial_lies_in_the_lattice_ideal(witness):
    polyomino_ideal = PolyominoIdeal(witness)
    f = polyomino_ideal.zigzag_binomial(witness_walk())
    ideal = polyomino_ideal.inner_minor_ideal()
    assert not ideal.contains(f)
    assert polyomino_ideal.lattice_ideal().contains(f)
    for v in witness_walk().V:
        assert ideal.contains(polyomino_ideal.Ring.gen(v) * f)

@pytest.mark.slow
def test_closed_path_p1(witness):
    polyomino_ideal = PolyominoIdeal(witness)
    ideal = polyomino_ideal.inner_minor_ideal()
    p1, verdict, height = polyomino_ideal.closed_path_p1()
    assert verdict.IsPrime
    assert height == witness.Rank
    assert p1.contains_ideal(ideal) and not ideal.contains_ideal(p1)
    assert p1.quadratic_part().equals(ideal)
    for walk in polyomino_ideal.Shape.find_zig_zag_walks():
        f = polyomino_ideal.zigzag_binomial(walk)
        assert not ideal.contains(f)
        assert all(ideal.contains(polyomino_ideal.Ring.gen(v) * f) for v in walk.V)

def test_zig_zag_binomial_uses_the_corners_of_the_walk(witness):
    polyomino_ideal = PolyominoIdeal(witness)
    f = polyomino_ideal.zigzag_binomial(witness_walk())
    ring = polyomino_ideal.Ring
    assert set(ring.support(f)) == {(5, 1), (6, 5), (2, 6), (1, 2), (2, 1), (6, 2), (5, 6), (1, 5)}

def test_closed_path_p1_needs_a_closed_path(l_tromino, frame):
    with pytest.raises(NotAClosedPath):
        PolyominoIdeal(l_tromino).closed_path_p1()
    with pytest.raises(NotApplicable):
        PolyominoIdeal(frame).closed_path_p1()

def test_binomial_primality_certificates():
    ring = PolynomialRing(['x', 'y', 'z'], field = 'q')
    gap = PolyominoIdeal.binomial_ideal_is_prime(Ideal([ring.parse('x*y-x*z')], ring))
    assert gap.Status == 'notPrime' and gap.Certificate == 'saturationGap'
    assert gap.Witness == 'y-z'
    torsion = PolyominoIdeal.binomial_ideal_is_prime(Ideal([ring.parse('x^2-y^2')], ring))
    assert torsion.Status == 'notPrime' and torsion.Certificate == 'latticeNotSaturated'
    assert torsion.Witness == [2]
    assert PolyominoIdeal.binomial_ideal_is_prime(Ideal([], ring)).IsPrime

@pytest.mark.parametrize('fixture', ['domino', 'l_tromino', 'square_tetromino'])
def test_radical_of_prime_ideals(request, fixture):
    polyomino_ideal = PolyominoIdeal(request.getfixturevalue(fixture))
    assert polyomino_ideal.radical_via_admissible().equals(polyomino_ideal.inner_minor_ideal())

@pytest.mark.slow
def test_radical_of_a_non_prime_closed_path(witness):
    polyomino_ideal = PolyominoIdeal(witness)
    radical = polyomino_ideal.radical_via_admissible()
    assert radical.equals(polyomino_ideal.inner_minor_ideal())
    p1, _, _ = polyomino_ideal.closed_path_p1()
    assert p1.contains_ideal(radical)

def test_admissible_budget(l_tromino):
    with pytest.raises(PolyominoIdealError):
        PolyominoIdeal(l_tromino, Settings(admissible_budget = 3)).radical_via_admissible()

def test_series_of_column():
    series = PolyominoIdeal.series_of(PolyominoIdeal(column(3)).inner_minor_ideal())
    assert series.HCoefficients == [1, 3]
    assert series.KrullDimension == 8 - 3

def test_verdict_validation():
    with pytest.raises(PolyominoIdealError):
        PrimalityVerdict('maybe')
    with pytest.raises(PolyominoIdealError):
        PrimalityVerdict('notPrime', 'zigZagWalk')
    with pytest.raises(PolyominoIdealError):
        PrimalityVerdict('prime', 'intuition')
