import pytest

hookratio = pytest.importorskip("hookratio")


def test_parse_and_print():
    assert hookratio.parse_partition("66^55") == [66] * 55
    assert hookratio.partition_text([3, 1, 1, 1, 1]) == "3,1^4"
    assert hookratio.parse_partition("") == []


def test_hooks_of_small_shape():
    assert hookratio.hook_diagram([3, 1]) == [[4, 2, 1], [1]]
    assert hookratio.hook_lengths([3, 1]) == [1, 1, 2, 4]


def test_decompose_round_trip():
    lam = [9, 7, 5, 3, 3, 2, 1]
    for p in range(2, 6):
        core, quotients, charges = hookratio.decompose(lam, p)
        assert sum(charges) == 0
        assert hookratio.compose(core, quotients, p) == lam
        assert hookratio.p_core(lam, p) == core


def test_chebyshev_factorization():
    exps = hookratio.ratio_exponents([66] * 55, [30, 1], [2, 3, 5])
    assert exps[11] == -11
    assert [q for q, e in exps.items() if e < 0] == [11]
    assert exps[2] == 60 and exps[113] == 8


def test_f_table():
    t = hookratio.f_table([30, 1], [2, 3, 5])
    assert t["M"] == 30
    assert t["P"] == 30
    assert t["min"] == 0
    assert t["max"] == 1


def test_decide_chebyshev():
    v = hookratio.decide([30, 1], [2, 3, 5], bound=30)
    assert v["status"] == "Fails"
    assert v["witness"]["mu"] == "11,1^25"
    assert v["witness"]["p"] == 37
    assert v["valuation_at_p"] == -37


def test_decide_canonical_exception():
    v = hookratio.decide([3], [6, 6])
    assert v["status"] == "Integral-Certified"
    assert v["witness"] is None


def test_construct_failing_lambda():
    p, lam = hookratio.construct_failing_lambda([11] + [1] * 25, [30, 1], [2, 3, 5])
    assert p == 37
    size = sum(hookratio.parse_partition(lam))
    assert size == p * p * 36


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        hookratio.decide([1], [2])
    with pytest.raises(ValueError):
        hookratio.partition_text([0])
    with pytest.raises(ValueError):
        hookratio.f_table([1, 1], [2])


def test_height1_verdicts():
    assert hookratio.decide_height1([5], [10, 10])["status"] == "Integral-Certified"
    assert hookratio.decide_height1([30, 1], [2, 3, 5])["status"] == "Fails"
    with pytest.raises(ValueError):
        hookratio.decide_height1([1], [3, 3])
