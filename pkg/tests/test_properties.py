from hypothesis import assume, given, settings
from hypothesis.strategies import integers, lists, tuples

from polyoideals import AlgebraInvariants, CellCollection, HilbertNumerator, RookBoard

seeds = integers(min_value = 0, max_value = 10**6)
symmetries = integers(min_value = 0, max_value = 7)

@given(seeds, symmetries, integers(min_value = -5, max_value = 5), integers(min_value = -5, max_value = 5))
@settings(deadline = None)
def test_collections_are_taken_up_to_translation(seed, symmetry, di, dj):
    collection = CellCollection.random_collection(6, seed = seed, require_polyomino = False).transformed(symmetry)
    assert CellCollection((i + di, j + dj) for (i, j) in collection.Cells) == collection
    assert min(i for i, _ in collection.Cells) == 1
    assert min(j for _, j in collection.Cells) == 1

@given(seeds, symmetries)
@settings(max_examples = 100, deadline = None)
def test_symmetries_preserve_the_combinatorics(seed, symmetry):
    collection = CellCollection.random_collection(7, seed = seed)
    image = collection.transformed(symmetry)
    assert image.canonical_under_symmetry() == collection.canonical_under_symmetry()
    assert len(image.inner_intervals()) == len(collection.inner_intervals())
    assert RookBoard(image).rook_polynomial() == RookBoard(collection).rook_polynomial()
    assert RookBoard(image).switching_rook_polynomial() == RookBoard(collection).switching_rook_polynomial()

@given(seeds, symmetries)
@settings(max_examples = 100, deadline = None)
def test_symmetries_preserve_the_hilbert_series(seed, symmetry):
    collection = CellCollection.random_collection(5, seed = seed)
    image = collection.transformed(symmetry)
    assert AlgebraInvariants(image).hilbert_data() == AlgebraInvariants(collection).hilbert_data()

@given(seeds)
@settings(max_examples = 15, deadline = None)
def test_h_polynomial_of_simple_polyominoes_is_the_switching_rook_polynomial(seed):
    collection = CellCollection.random_collection(5, seed = seed)
    assume(collection.structure().IsSimple)
    series = AlgebraInvariants(collection).hilbert_data()
    board = RookBoard(collection)
    assert series.HCoefficients == board.switching_rook_polynomial()
    assert series.Degree == board.rook_number()
    assert series.KrullDimension == len(collection.vertices()) - collection.Rank

@given(integers(min_value = 1, max_value = 3).flatmap(
        lambda n: lists(tuples(*[integers(min_value = 0, max_value = 2)] * n), max_size = 4).map(lambda g: (n, g))))
@settings(deadline = None)
def test_hilbert_numerator_counts_standard_monomials(data):
    n, generators = data
    assume(all(sum(g) > 0 for g in generators))
    numerator = HilbertNumerator([list(g) for g in generators], n)
    values = numerator.series(4)
    for degree in range(5):
        assert values[degree] == HilbertNumerator.count_standard_monomials(generators, n, degree)
