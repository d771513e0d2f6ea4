import numpy as np
import pytest

import oracles
from ternary_codes.cosets import coset_members
from ternary_codes.errors import BadDecimation, UnsupportedCharacteristic
from ternary_codes.families import valid_instances
from ternary_codes.field import make_field
from ternary_codes.sequences import correlation_values, crosscorrelation, m_sequence, predicted_values


@pytest.mark.parametrize("m", [3, 5, 7])
def test_balance(m):
    seq = m_sequence(make_field(3, m))
    counts = np.bincount(seq.symbols, minlength=3)
    assert seq.period == 3**m - 1
    assert list(counts) == [3 ** (m - 1) - 1, 3 ** (m - 1), 3 ** (m - 1)]


def test_shift_is_multiplication_by_generator(f3):
    seq = m_sequence(f3)
    shifted = seq.shifted(1)
    for t in range(f3.n):
        assert shifted[t] == (f3.alpha_pow(t) * f3.generator).trace()


def test_autocorrelation(f3):
    vals = correlation_values(m_sequence(f3), 1)
    assert vals[0] == 26
    assert set(vals[1:].tolist()) == {-1}


@pytest.mark.parametrize("m", [3, 5])
def test_correlation_matches_complex_oracle(m):
    seq = m_sequence(make_field(3, m))
    for params in valid_instances(m):
        if params.family_id < 3:
            continue
        exact = correlation_values(seq, params.v)
        approx = oracles.complex_crosscorrelation(seq.symbols, params.v)
        assert np.allclose(approx.imag, 0, atol=1e-7)
        assert np.array_equal(np.rint(approx.real).astype(int), exact)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_three_valued(m):
    cfg = make_field(3, m)
    seq = m_sequence(cfg)
    want = predicted_values(m)
    for params in valid_instances(m):
        if params.family_id >= 3:
            spec = crosscorrelation(seq, params.v, cfg)
            assert spec.distinct == want
            assert spec.total == cfg.n


def test_frozen_spectra(f3, f5):
    assert crosscorrelation(m_sequence(f3), 7).values == {-10: 3, -1: 17, 8: 6}
    assert crosscorrelation(m_sequence(f5), 147).distinct == [-28, -1, 26]


def test_decimation_by_coset_member_preserves_spectrum(f5):
    seq = m_sequence(f5)
    base = crosscorrelation(seq, 61).values
    for v in coset_members(61, 3, f5.n):
        assert crosscorrelation(seq, v).values == base


def test_rejects_non_coprime_decimation(f3):
    with pytest.raises(BadDecimation):
        crosscorrelation(m_sequence(f3), 20)


def test_only_ternary(f3):
    with pytest.raises(UnsupportedCharacteristic):
        correlation_values(m_sequence(f3), 1, p=5)


def test_decimated(f3):
    seq = m_sequence(f3)
    dec = seq.decimated(7)
    assert [dec[t] for t in range(5)] == [seq.symbols[(7 * t) % 26] for t in range(5)]
