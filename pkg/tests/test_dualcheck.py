from math import comb, gcd

import numpy as np
import pytest

from ternary_codes.codes import code_spec
from ternary_codes.cosets import all_cosets
from ternary_codes.dualcheck import (
    AboveLimit, check_conditions, circle_solutions_ext, dual_min_distance, dual_report, find_dual_word,
    gcd_facts, generator_matrix, hyperbola_solutions, naive_dual_min_distance, sphere_packing_max_d,
)
from ternary_codes.errors import BadCongruence, BadCosetSize, CosetsOverlap
from ternary_codes.families import family_v, valid_instances
from ternary_codes.field import make_field


def admissible_v(cfg):
    return [c.leader for c in all_cosets(cfg) if c.size == cfg.m and 1 not in c.members]


def test_family_examples(f3, f5):
    assert dual_min_distance(code_spec(f3, 1, 20)) == 4
    assert dual_min_distance(code_spec(f3, 1, 7)) == 2
    assert dual_min_distance(code_spec(f5, 1, 182)) == 4
    assert check_conditions(20, f3).all_hold
    assert check_conditions(7, f3).c1 is False


def test_naive_oracle_agrees_on_every_m3_code(f3):
    for v in admissible_v(f3):
        spec = code_spec(f3, 1, v)
        assert dual_min_distance(spec) == naive_dual_min_distance(spec), v


@pytest.mark.parametrize("m", [3, 5])
def test_condition_iff_distance_four(m):
    cfg = make_field(3, m)
    for v in admissible_v(cfg):
        cond = check_conditions(v, cfg)
        d = dual_min_distance(code_spec(cfg, 1, v))
        assert cond.all_hold == (d == 4), (v, cond, d)


def test_witness_is_a_dual_codeword(f3, f5):
    for cfg, v in ((f3, 20), (f3, 7), (f5, 182), (f5, 61)):
        spec = code_spec(cfg, 1, v)
        word = find_dual_word(spec)
        assert word is not None
        G = generator_matrix(spec)
        assert not np.any(G @ word.dense(cfg.n) % 3)
        assert word.weight == dual_min_distance(spec)


def test_limit_and_above_limit(f3):
    spec = code_spec(f3, 1, 20)
    res = dual_min_distance(spec, limit=3)
    assert isinstance(res, AboveLimit) and res.limit == 3
    assert dual_min_distance(spec, limit=5) == 4


def test_generator_matrix_shape(f3):
    G = generator_matrix(code_spec(f3, 1, 20))
    assert G.shape == (6, 26)
    # rank 6 over GF(3): the code has 3^6 codewords
    words = {tuple(np.array(c) @ G % 3) for c in np.ndindex(*(3,) * 6)}
    assert len(words) == 729


def test_precondition_errors(f3):
    with pytest.raises(BadCosetSize):
        check_conditions(13, f3)
    with pytest.raises(CosetsOverlap):
        check_conditions(3, f3)


def hamming_ball(n, t, p=3):
    return sum(comb(n, j) * (p - 1) ** j for j in range(t + 1))


@pytest.mark.parametrize("n, k, want", [(26, 20, 4), (242, 232, 4), (2186, 2172, 4), (26, 6, 20)])
def test_sphere_packing(n, k, want):
    assert sphere_packing_max_d(n, k, 3) == want
    t = (want - 1) // 2
    assert hamming_ball(n, t) <= 3 ** (n - k)
    if want < n:
        assert hamming_ball(n, t + 1) > 3 ** (n - k)


def test_dual_report(f3):
    rep = dual_report(code_spec(f3, 1, 20))
    doc = rep.as_dict()
    assert doc["d_perp"] == 4 and doc["dual_dimension"] == 20
    assert doc["optimal"] and doc["c1"] and doc["c2"] and doc["c3"]
    odd = dual_report(code_spec(f3, 1, 7))
    assert odd.d_perp == 2 and not odd.optimal


@pytest.mark.parametrize("m", [3, 5])
def test_odd_families_have_distance_two(m):
    cfg = make_field(3, m)
    for params in valid_instances(m):
        if params.family_id >= 3:
            assert dual_min_distance(code_spec(cfg, 1, params.v)) == 2


@pytest.mark.slow
@pytest.mark.parametrize("fid", [1, 2])
def test_distance_four_m7(f7, fid):
    v = family_v(fid, 7).v
    assert dual_min_distance(code_spec(f7, 1, v)) == 4
    assert check_conditions(v, f7).all_hold


def test_hyperbola(f3, f7):
    rep = hyperbola_solutions(f3)
    assert rep.brute_count == rep.param_count == 26
    assert rep.passed
    rep7 = hyperbola_solutions(f7)
    assert rep7.h == 1 and rep7.s == 4 and rep7.passed and rep7.brute_count == 2186


def test_circle(f3):
    rep = circle_solutions_ext(f3)
    assert rep.brute_count == rep.param_count == 728
    assert rep.passed


@pytest.mark.parametrize("m, h, s, gcd_s", [(7, 1, 4, 4), (23, 3, 28, 4), (15, 2, 10, 2)])
def test_gcd_facts(m, h, s, gcd_s):
    rep = gcd_facts(m)
    assert (rep.h, rep.s) == (h, s) and rep.passed
    q2 = 3 ** (2 * m) - 1
    assert gcd(s, q2) == gcd_s


def test_gcd_facts_rejects():
    with pytest.raises(BadCongruence):
        gcd_facts(5)
