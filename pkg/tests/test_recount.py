from macmahon.bijections.recount import recount_shifted
from macmahon.components import analyze
from macmahon.partitions import enumerate_spp


def test_three_routes_agree_in_two_by_two_box():
    result = recount_shifted(2, 2, 6)
    assert result.preimages_distinct
    assert result.direct == result.via_markings == result.via_knuth == result.product
    assert result.ok


def test_direct_route_matches_brute_force_sum():
    result = recount_shifted(2, 2, 6)
    totals = [0] * 7
    for pp in enumerate_spp(2, 2, 6):
        totals[pp.weight] += 2 ** analyze(pp).k
    assert [sum(c.coeffs) for c in result.direct.coeffs] == totals


def test_single_cell_box():
    # one cell: each positive entry n contributes 2 x^n s^n
    result = recount_shifted(1, 1, 4)
    assert result.ok
    assert [sum(c.coeffs) for c in result.product.coeffs] == [1, 2, 2, 2, 2]
