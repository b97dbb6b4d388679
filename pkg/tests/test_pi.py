import itertools

import pytest

from macmahon.bijections.pi import InvalidPair, pi_backward, pi_forward, pi_statistics, slices
from macmahon.bijections.tableaux import InvalidTableau, ShiftedTableau
from macmahon.components import analyze, k_via_rhombi
from macmahon.partitions import Partition, PlanePartition, enumerate_spp, frobenius

PP = PlanePartition.from_rows
ST = ShiftedTableau.from_rows

WORKED_S = ((5, 3, 2, 1, 1), (3, 2, 1), (1, 1))
WORKED_T = ((4, 4, 3, 2, 1), (3, 3, 2), (2, 1))


def test_worked_example_forward(worked_pp):
    S, T = pi_forward(worked_pp)
    assert S.rows == WORKED_S
    assert T.rows == WORKED_T


def test_worked_example_statistics(worked_pp):
    stats = pi_statistics(*pi_forward(worked_pp))
    assert (stats.size_s, stats.size_t, stats.size_shape) == (20, 25, 10)
    assert (stats.weight, stats.trace) == (35, 10)
    assert (stats.k_s, stats.k_t, stats.length, stats.k) == (4, 6, 3, 7)


def test_worked_example_backward(worked_pp):
    assert pi_backward(ST(WORKED_S), ST(WORKED_T)) == worked_pp


def test_empty():
    S, T = pi_forward(PP([]))
    assert S.rows == T.rows == ()
    assert pi_backward(S, T) == PP([])


def test_single_box_backward():
    assert pi_backward(ST([[1]]), ST([[1]])) == PP([[1]])


def test_first_slice_of_worked_example(worked_pp):
    assert slices(worked_pp)[0] == Partition((5, 4, 3, 3))


def test_rejects_non_strict():
    with pytest.raises(ValueError):
        pi_forward(PP([[1, 1], [1, 1]]))


def test_backward_rejects_shape_mismatch():
    with pytest.raises(InvalidPair):
        pi_backward(ST([[1]]), ST([[2, 1]]))


def shifted_tableaux(shape, largest):
    cells = sum(shape)
    for values in itertools.product(range(1, largest + 1), repeat=cells):
        rows, k = [], 0
        for n in shape:
            rows.append(values[k:k + n])
            k += n
        try:
            yield ST(rows)
        except InvalidTableau:
            pass


@pytest.mark.parametrize("shape", [(2,), (2, 1), (3, 1), (3, 2)])
def test_every_same_shape_pair_is_an_image(shape):
    tableaux = list(shifted_tableaux(shape, 4))
    assert tableaux
    for S in tableaux:
        for T in tableaux:
            pp = pi_backward(S, T)
            assert pi_forward(pp) == (S, T)


def test_roundtrip_and_statistics_4x4_weight_10():
    count = 0
    for pp in enumerate_spp(4, 4, 10):
        S, T = pi_forward(pp)
        assert S.shape == T.shape
        assert pi_backward(S, T) == pp
        stats = pi_statistics(S, T)
        assert stats.weight == pp.weight
        assert stats.trace == pp.trace
        assert stats.k == analyze(pp).k
        rhombi = k_via_rhombi(pp)
        assert (stats.k_s, stats.k_t) == (rhombi.b, rhombi.g)
        assert S.shape.parts == tuple(pp(i, i) for i in range(1, pp.num_rows + 1) if pp(i, i))
        for d, mu in enumerate(slices(pp), start=1):
            fc = frobenius(mu)
            assert S.diagonal(d) == fc.p and T.diagonal(d) == fc.q
        count += 1
    assert count == 684


def test_forward_of_backward_on_all_images():
    images = {pi_forward(pp) for pp in enumerate_spp(3, 3, 9)}
    for S, T in images:
        assert pi_forward(pi_backward(S, T)) == (S, T)
