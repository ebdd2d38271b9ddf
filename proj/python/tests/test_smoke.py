from fractions import Fraction

import pytest

import sumdiv


def test_set_operations():
    assert sumdiv.sumset([1, 2, 3]) == [Fraction(n) for n in range(2, 7)]
    assert sumdiv.productset([1, 2, 4]) == [1, 2, 4, 8, 16]
    assert sumdiv.ratioset([1, 2, 4]) == [Fraction(1, 4), Fraction(1, 2), 1, 2, 4]
    assert sumdiv.make_set(["6/4", 0.25, Fraction(3, 2)]) == [Fraction(1, 4), Fraction(3, 2)]
    assert sumdiv.square_set([Fraction(1, 2), 2]) == [Fraction(1, 4), 4]
    assert sumdiv.grid_sumset_size([1, 2, 3]) == 25
    assert sumdiv.rad_ang_sizes([1, 2]) == (3, 3)


def test_spectrum_and_verify():
    assert [m for _, m in sumdiv.ratio_spectrum([1, 2, 4])] == [1, 1, 2, 2, 3]
    assert sumdiv.threshold_index([1, 2, 3]) == {"k": 5, "m_k": 1, "head_mass": 4, "tail_mass": 5}
    report = sumdiv.verify([1, 2, 4])
    assert report["passes_theorem"] is True
    assert (report["sumset_size"], report["ratioset_size"], report["k"], report["m_k"],
            report["tail_mass"]) == (6, 5, 4, 2, 5)
    cert = sumdiv.ray_certificate([1, 2, 4])
    assert cert["pair_bound"] == 12
    assert cert["distinctness_verified"] is True


def test_families_and_search():
    assert sumdiv.farey_set(3) == [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), 1]
    assert sumdiv.farey_size(5) == 10
    assert sumdiv.mult_table_count(4) == 9
    assert f"{sumdiv.beta_constant():.7f}" == "0.0860713"
    assert sumdiv.random_set(10, 50, 7) == sumdiv.random_set(10, 50, 7)
    assert sumdiv.geometric_set(2, 4) == [1, 2, 4, 8]
    assert sumdiv.farey_statistics(2)["positive_difference_count"] == 1
    result = sumdiv.search("J", "exhaustive", size=3, universe=12)
    assert result["best_value"] == "175/81"
    local = sumdiv.search("J", "local", size=4, seed=3, iterations=50)
    assert local == sumdiv.search("J", "local", size=4, seed=3, iterations=50)


def test_errors():
    with pytest.raises(ValueError):
        sumdiv.make_set([])
    with pytest.raises(ValueError):
        sumdiv.make_set(["-1"])
    with pytest.raises(sumdiv.CapExceeded):
        sumdiv.sumset(range(1, 101), pair_cap=100)
    with pytest.raises(sumdiv.InputError):
        sumdiv.interval_set(0)
