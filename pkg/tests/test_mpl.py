import random

import pytest

from lawsonarea.mpl import (DivergentSeriesError, convert_word, li, mpl_spec,
                            series_extrapolated, series_partial_sum, zeta_signed)
from lawsonarea.precision import PrecisionConfig, agreement_digits
from lawsonarea.verify import (distribution_residual, li11_inversion_residual,
                               zagier_residual)
from lawsonarea.words import letter, stuffle

CFG = PrecisionConfig(40)
CTX = CFG.context

# frozen from the split evaluator at 50 and 60 target digits (agreement 6e-64)
# and cross-checked below against the tail-extrapolated direct series
ZETA_113BAR = "-0.009601568443129832539131914818197563243143333703941385"


def test_depth1_closed_forms():
    assert abs(li(mpl_spec([2], [1], CFG), CFG) - CTX.pi ** 2 / 6) < CFG.eps(4)
    assert abs(li(mpl_spec([2], [-1], CFG), CFG) + CTX.pi ** 2 / 12) < CFG.eps(4)
    assert abs(li(mpl_spec([1], ["0.5"], CFG), CFG) - CTX.ln(2)) < CFG.eps(4)
    assert abs(li(mpl_spec([4], [-1], CFG), CFG)
               + CTX.mpf(7) / 8 * CTX.zeta(4)) < CFG.eps(4)


def test_li2_at_i():
    v = li(mpl_spec([2], [CTX.mpc(0, 1)], CFG), CFG)
    expected = -CTX.pi ** 2 / 48 + CTX.mpc(0, 1) * CTX.catalan
    assert abs(v - expected) < CFG.eps(4)


def test_li11_at_minus_one():
    v = li(mpl_spec([1, 1], [-1, -1], CFG), CFG)
    expected = (CTX.ln(2) ** 2 - CTX.pi ** 2 / 6) / 2
    assert abs(v - expected) < CFG.eps(4)


def test_empty_depth():
    assert li(mpl_spec([], [], CFG), CFG) == 1


def test_divergence_rejected():
    with pytest.raises(DivergentSeriesError):
        li(mpl_spec([1], [1], CFG), CFG)
    with pytest.raises(DivergentSeriesError):
        li(mpl_spec([2, 1], [0.5, 1], CFG), CFG)
    with pytest.raises(DivergentSeriesError):
        li(mpl_spec([2], [1.2], CFG), CFG)
    with pytest.raises(DivergentSeriesError):
        # inner partial product exceeds the polydisk even though |z_2| < 1
        li(mpl_spec([2, 2], [4, 0.3], CFG), CFG)
    with pytest.raises(DivergentSeriesError):
        zeta_signed([2, 1], [1, 1], CFG)


def test_spec_validation():
    with pytest.raises(ValueError):
        mpl_spec([1, 2], [0.5], CFG)
    with pytest.raises(ValueError):
        mpl_spec([0], [0.5], CFG)


def test_zeta_signed_values():
    assert abs(zeta_signed([3], [-1], CFG)
               + CTX.mpf(3) / 4 * CTX.zeta(3)) < CFG.eps(4)
    assert abs(zeta_signed([2], [1], CFG) - CTX.pi ** 2 / 6) < CFG.eps(4)
    v = zeta_signed([1, 1, 3], [1, 1, -1], CFG)
    assert abs(v - CTX.mpf(ZETA_113BAR)) < CFG.eps(4)


def test_zeta_113bar_series_oracle():
    """Independent oracle: raw partial sums with oscillating-tail averaging."""
    cfg = PrecisionConfig(25)
    spec = mpl_spec([1, 1, 3], [1, 1, -1], cfg)
    oracle = series_extrapolated(spec, cfg, cutoff=900, passes=8)
    assert abs(oracle - cfg.context.mpf(ZETA_113BAR)) < cfg.context.mpf("1e-18")


def test_direct_series_agrees_with_split_path():
    # argument just outside the direct-summation regime exercises the split
    spec_in = mpl_spec([2, 1], ["0.35", "0.55"], CFG)
    spec_out = mpl_spec([2, 1], ["0.35", CTX.mpf("0.98")], CFG)
    direct = series_partial_sum(spec_out, CFG, 9000)
    split = li(spec_out, CFG)
    assert abs(direct - split) < CTX.mpf("1e-15")
    assert abs(li(spec_in, CFG) - series_partial_sum(spec_in, CFG, 400)) < CFG.eps(6)


def test_convert_word_term_counts():
    assert len(convert_word((3,), CTX.pi / 4, CFG)) == 4
    assert len(convert_word((2, 1), CTX.pi / 4, CFG)) == 16
    assert len(convert_word((1, 2, 3), CTX.pi / 4, CFG)) == 64
    with pytest.raises(ValueError):
        convert_word((), CTX.pi / 4, CFG)


def test_convert_word_weight1_values():
    pi4 = CTX.pi / 4
    I = CTX.mpc(0, 1)
    assert abs(convert_word((3,), pi4, CFG).value(CFG) - I * CTX.pi) < CFG.eps(6)
    assert abs(convert_word((1,), pi4, CFG).value(CFG) - I * CTX.pi / 2) < CFG.eps(6)
    phi = CTX.mpf("0.3")
    assert abs(convert_word((1,), phi, CFG).value(CFG)
               - I * (CTX.pi - 2 * phi)) < CFG.eps(6)


def test_convert_word_weight2():
    v = convert_word((2, 1), CTX.pi / 4, CFG).value(CFG)
    assert abs(v + CTX.mpc(0, 1) * CTX.pi * CTX.ln(2)) < CFG.eps(6)


def test_stuffle_product_consistency():
    rng = random.Random(0)
    for _ in range(5):
        w1 = tuple(letter(rng.randint(1, 3),
                          CTX.mpf(rng.randint(2, 6)) / 10
                          * CTX.expjpi(CTX.mpf(rng.randint(0, 7)) / 4))
                   for _ in range(rng.randint(1, 2)))
        w2 = (letter(rng.randint(1, 3),
                     CTX.mpf(rng.randint(2, 6)) / 10
                     * CTX.expjpi(CTX.mpf(rng.randint(0, 7)) / 4)),)
        lhs = (li(mpl_spec([l.n for l in w1], [l.z for l in w1], CFG), CFG)
               * li(mpl_spec([l.n for l in w2], [l.z for l in w2], CFG), CFG))
        rhs = CTX.mpc(0)
        for word, mult in stuffle(w1, w2).items():
            rhs += mult * li(mpl_spec([l.n for l in word],
                                      [l.z for l in word], CFG), CFG)
        assert abs(lhs - rhs) < CFG.eps(6)


def test_distribution_relation():
    rng = random.Random(4)
    for s in (2, 3):
        for _ in range(3):
            z = CTX.mpf(rng.randint(3, 9)) / 10 \
                * CTX.expjpi(CTX.mpf(rng.randint(0, 15)) / 8)
            assert distribution_residual(s, z, CFG) < CFG.eps(6)


def test_zagier_reduction():
    rng = random.Random(9)
    for _ in range(3):
        x = CTX.mpf(3) / 10 * CTX.expjpi(CTX.mpf(rng.randint(0, 15)) / 8)
        y = CTX.mpf(rng.randint(4, 8)) / 10 * CTX.expjpi(CTX.mpf(rng.randint(0, 15)) / 8)
        assert zagier_residual(x, y, CFG) < CFG.eps(6)


def test_parity_spot_check():
    eta = CTX.expjpi(CTX.mpf(1) / 4)
    assert li11_inversion_residual(CTX.mpc(-1), eta ** 3, CFG) < CFG.eps(6)


def test_precision_doubling():
    lo = PrecisionConfig(30)
    hi = PrecisionConfig(40)
    cases = [
        ((2,), (-1,)),
        ((1, 1), (-1, -1)),
        ((1, 1, 3), (1, 1, -1)),
    ]
    for indices, args in cases:
        vlo = li(mpl_spec(indices, args, lo), lo)
        vhi = li(mpl_spec(indices, args, hi), hi)
        assert agreement_digits(vlo, vhi, lo) >= 28
