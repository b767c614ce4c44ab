import pytest

from fibostirling import boards
from fibostirling.boards import FerrersBoard, TEST_BOARDS, parse_board, staircase
from fibostirling.fibtiles import fib, unrank
from fibostirling.qalgebra import QPoly, qbracket

SMALL = [b for b in TEST_BOARDS if b.n <= 4]


def test_board_validation_and_parsing():
    assert parse_board("B(4)") == staircase(4) == FerrersBoard((0, 1, 2, 3))
    assert parse_board("F(2, 3,4)").heights == (2, 3, 4)
    assert str(FerrersBoard((1, 2))) == "F(1,2)"
    with pytest.raises(ValueError):
        FerrersBoard((3, 1))
    with pytest.raises(ValueError):
        parse_board("G(1)")


def test_test_set_size():
    assert len(TEST_BOARDS) >= 30
    assert all(b.n <= 6 and (b.n == 0 or b.heights[-1] <= 6) for b in TEST_BOARDS)


def test_file_poly_by_hand():
    # one column of height 3: two tilings with ranks 0 and 1
    board = FerrersBoard((3,))
    assert boards.file_poly(board, 1, True) == qbracket(2)
    assert boards.file_poly(board, 0, False) == QPoly.monomial(2)


@pytest.mark.parametrize("board", SMALL, ids=str)
def test_file_three_ways(board):
    for k in range(board.n + 1):
        for barred in (False, True):
            enum = boards.file_poly(board, k, barred)
            assert enum == boards.file_poly_rec(board, k, barred)
            assert enum == boards.file_poly_z(board, k, barred)


@pytest.mark.parametrize("board", SMALL, ids=str)
def test_rook_recursion_and_rel(board):
    for k in range(board.n + 1):
        for barred in (False, True):
            assert boards.rook_poly(board, k, barred) == boards.rook_poly_rec(board, k, barred)
        assert boards.rel_check(board, k)


def test_rook_placement_effective_heights():
    board = FerrersBoard((2, 3, 4))
    p = boards.RookPlacement(board, ((2, unrank(3, 0)), (3, unrank(3, 1))))
    assert p.effective_heights == (3, 3)
    with pytest.raises(ValueError):
        boards.RookPlacement(board, ((3, unrank(4, 0)), (2, unrank(3, 0))))


def test_cancellation_trace():
    board = FerrersBoard((1, 2, 3, 4))
    trace = boards.simulate_cancellation(board, (2, 4))
    assert trace.effective == (2, 3)
    assert trace.untiled == (1, 2)


@pytest.mark.parametrize("x", [1, 2, 3])
@pytest.mark.parametrize("board", SMALL, ids=str)
def test_mixed_sums_match_brute_force(board, x):
    for barred in (False, True):
        assert boards.mixed_file_sum(board, x, barred) == boards.mixed_sum_bruteforce(board, x, False, barred)
        assert boards.mixed_file_sum(board, x, barred) == boards.file_product(board, x, barred)
    assert boards.mixed_aug_sum(board, x) == boards.mixed_sum_bruteforce(board, x, True, True)
    assert boards.mixed_aug_sum(board, x) == qbracket(x) ** board.n
    assert boards.rook_product_check(board, x)


def test_mixed_placement_rejects_bad_rows():
    board = FerrersBoard((1,))
    with pytest.raises(ValueError):
        boards.MixedPlacement(board, 2, (boards.BarRook(3),))
    with pytest.raises(ValueError):
        boards.MixedPlacement(board, 2, (boards.FlippedTiling(unrank(1, 0)),))


def test_rook_product_applicability():
    board = FerrersBoard((2, 4))
    assert not boards.rook_product_applicable(board, 2)
    assert boards.rook_product_applicable(board, fib(4))


def test_dump_placement_lines():
    board = FerrersBoard((2, 3))
    p = boards.file_placements(board, 1)[-1]
    assert boards.dump_placement(p) == ["col=2 height=3 rank=1"]
