import pytest

from lucasnomial import (
    CIRCULAR,
    CIRCULAR_PAIR,
    DOMINO,
    LINEAR,
    LINEAR_PAIR,
    MONO,
    Partition,
    Tiling,
    TilingPair,
)

# The worked 5x4 example: rows of [3,2,2,0,0] and columns of its complement
# [5,4,2,2], each column read from its domino end.
_ROW_TILES = ((MONO, DOMINO), (DOMINO,), (MONO, MONO), (), ())
_COL_TILES = ((DOMINO, MONO, DOMINO), (DOMINO, MONO, MONO), (DOMINO,), (DOMINO,))


@pytest.fixture
def rect_partition_5x4() -> Partition:
    return Partition((3, 2, 2, 0, 0), 4)


@pytest.fixture
def rect_pair_linear() -> TilingPair:
    return TilingPair(
        tuple(Tiling(LINEAR, tiles) for tiles in _ROW_TILES),
        tuple(Tiling(LINEAR, tiles) for tiles in _COL_TILES),
        LINEAR_PAIR,
    )


@pytest.fixture
def rect_pair_circular() -> TilingPair:
    return TilingPair(
        tuple(Tiling(CIRCULAR, tiles) for tiles in _ROW_TILES),
        tuple(Tiling(CIRCULAR, tiles) for tiles in _COL_TILES),
        CIRCULAR_PAIR,
    )
