import pytest

from polyoideals import CellCollection, Settings

def pytest_addoption(parser):
    parser.addoption('--runslow', action = 'store_true', default = False, help = 'run the slow tests')

def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip = pytest.mark.skip(reason = 'needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)

WITNESS_CELLS = [   (2, 1), (3, 1), (4, 1),
                    (1, 2), (2, 2), (4, 2), (5, 2),
                    (1, 3), (5, 3),
                    (1, 4), (2, 4), (4, 4), (5, 4),
                    (2, 5), (3, 5), (4, 5)]

# Closed path whose lower right corner climbs two steps: no two
# consecutive blocks of rank 3 or more, and a ladder of three steps.
LADDER_CELLS = [    (2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (5, 3), (6, 3), (6, 4), (6, 5), (5, 5),
                    (5, 6), (4, 6), (3, 6), (2, 6), (2, 5), (1, 5), (1, 4), (1, 3), (1, 2), (2, 2)]

def staircase(steps : int) -> CellCollection:

    """
    (1,1), (2,1), (2,2), (3,2), ... with the given number
    of cells.
    """

    cells = []
    i, j = 1, 1
    for k in range(steps):
        cells.append((i, j))
        if k % 2 == 0:
            i += 1
        else:
            j += 1
    return CellCollection(cells)

def column(n : int) -> CellCollection:
    return CellCollection((1, j) for j in range(1, n + 1))

def row(n : int) -> CellCollection:
    return CellCollection((i, 1) for i in range(1, n + 1))

@pytest.fixture
def settings():
    return Settings()

@pytest.fixture
def single_cell():
    return CellCollection([(1, 1)])

@pytest.fixture
def domino():
    return CellCollection([(1, 1), (2, 1)])

@pytest.fixture
def l_tromino():
    return CellCollection([(1, 1), (2, 1), (2, 2)])

@pytest.fixture
def square_tetromino():
    return CellCollection([(1, 1), (1, 2), (2, 1), (2, 2)])

@pytest.fixture
def s_shape():
    return CellCollection([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)])

@pytest.fixture
def frame():
    return CellCollection((i, j) for i in range(1, 4) for j in range(1, 4) if (i, j) != (2, 2))

@pytest.fixture
def diagonal_pair():
    return CellCollection([(1, 1), (2, 2)])

@pytest.fixture
def witness():
    return CellCollection(WITNESS_CELLS)

@pytest.fixture
def ladder():
    return CellCollection(LADDER_CELLS)
