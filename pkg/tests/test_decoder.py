import random

import pytest

from oracles import all_error_patterns, locator_from_error, random_error
from z4negacyclic.decoder import (decode, locate_error_positions,
                                  locator_from_pair, residue_locator,
                                  resolve_unit_errors)
from z4negacyclic.keyeq import key_pair_from_locator, syndromes
from z4negacyclic.negacyclic import build_code, encode, lee_weight
from z4negacyclic.polynomial import poly_mul
from z4negacyclic.solver import PairVector


def test_locator_from_pair_identity():
    code = build_code(15, 2)
    ring = code.ring
    assert locator_from_pair(ring, [ring.one], [ring.one]) == [ring.one]


def test_residue_locator_single_and_double():
    code = build_code(15, 2)
    ring = code.ring
    field = code.field()
    x = code.alpha_pow(6)
    # single error: g = 1 - x y, h = 1
    pair = PairVector([ring.one, -x], [ring.one])
    mu = residue_locator(pair, field)
    assert mu == [1, x.residue()]
    # double error: g = 1 + (x^2 - 2x) y, h = 1 + x^2 y
    sq = x * x
    pair = PairVector([ring.one, sq - x * 2], [ring.one, sq])
    mu = residue_locator(pair, field)
    mu_x = x.residue()
    assert mu == poly_mul(field, [1, mu_x], [1, mu_x])


def test_locate_error_positions_examples():
    code = build_code(15, 2)
    field = code.field()
    assert locate_error_positions([1], code) == (set(), set())

    # singles at 4 and 13
    mu = poly_mul(field, [1, code.alpha_pow(4).residue()],
                  [1, code.alpha_pow(13).residue()])
    assert locate_error_positions(mu, code) == (set(), {4, 13})

    # constructed double at position 5
    err = [0] * 15
    err[5] = 2
    sigma = locator_from_error(code, err)
    mu = [c.residue() for c in sigma]
    assert locate_error_positions(mu, code) == ({5}, set())


def test_resolve_unit_errors_examples():
    code = build_code(15, 2)
    ring = code.ring
    assert resolve_unit_errors([ring.one], code) == [0] * 15

    for j, val in ((4, 1), (13, 3), (0, 3)):
        err = [0] * 15
        err[j] = val
        sigma = locator_from_error(code, err)
        assert resolve_unit_errors(sigma, code) == err


def test_decode_reference_word():
    code = build_code(15, 2)
    word = [3, 1, 3, 0, 2, 3, 2, 2, 1, 0, 1, 0, 0, 3, 0]
    out = decode(word, code)
    expected_err = [0] * 15
    expected_err[4], expected_err[13] = 1, 3
    assert out.success
    assert out.error == expected_err
    assert out.codeword == [(v - e) % 4 for v, e in zip(word, expected_err)]
    assert not any(syndromes(out.codeword, code))


def test_decode_codeword_is_clean():
    code = build_code(15, 2)
    rng = random.Random(30)
    for _ in range(25):
        word = encode([rng.randrange(4) for _ in range(code.k)], code)
        out = decode(word, code)
        assert out.success and out.error == [0] * 15 and out.codeword == word


def test_decode_all_low_weight_patterns_one_codeword():
    code = build_code(15, 2)
    codeword = encode([1, 0, 3, 2, 0, 1, 2], code)
    for err in all_error_patterns(15, 2):
        received = [(c + e) % 4 for c, e in zip(codeword, err)]
        out = decode(received, code)
        assert out.success and out.codeword == codeword and out.error == err


def test_decode_round_trip_t3():
    code = build_code(15, 3)
    rng = random.Random(31)
    for _ in range(300):
        codeword = encode([rng.randrange(4) for _ in range(code.k)], code)
        err = random_error(rng, code.n, rng.randint(0, code.t))
        received = [(c + e) % 4 for c, e in zip(codeword, err)]
        out = decode(received, code)
        assert out.success and out.codeword == codeword and out.error == err
        # outcome contract: codeword + error = received, weight within t,
        # syndromes clean
        assert [(c + e) % 4 for c, e in zip(out.codeword, out.error)] == received
        assert lee_weight(out.error) <= code.t
        assert not any(syndromes(out.codeword, code))


def test_decode_round_trip_n31():
    for t in (1, 2, 3):
        code = build_code(31, t)
        rng = random.Random(40 + t)
        for _ in range(60):
            codeword = encode([rng.randrange(4) for _ in range(code.k)], code)
            err = random_error(rng, code.n, rng.randint(0, t))
            received = [(c + e) % 4 for c, e in zip(codeword, err)]
            out = decode(received, code)
            assert out.success and out.codeword == codeword and out.error == err


def test_pass_one_singles_match_support_without_doubles():
    code = build_code(15, 3)
    rng = random.Random(32)
    for _ in range(100):
        err = random_error(rng, code.n, rng.randint(1, code.t))
        if any(e == 2 for e in err):
            continue
        out = decode(err, code, with_trace=True)
        assert out.success
        assert set(out.trace["singles"]) == {i for i, e in enumerate(err) if e}
        assert out.trace["doubles"] == []


def test_decode_never_claims_distant_codeword():
    code = build_code(15, 3)
    rng = random.Random(33)
    over = 0
    for _ in range(150):
        codeword = encode([rng.randrange(4) for _ in range(code.k)], code)
        err = random_error(rng, code.n, code.t + 1)
        received = [(c + e) % 4 for c, e in zip(codeword, err)]
        out = decode(received, code)
        if out.success:
            assert lee_weight([(r - c) % 4 for r, c in zip(received, out.codeword)]) <= code.t
            assert not any(syndromes(out.codeword, code))
        else:
            over += 1
    assert over  # weight t+1 on a distance-10 code can never decode


def test_decode_wrong_length():
    code = build_code(15, 2)
    out = decode([0] * 14, code)
    assert not out.success and "length" in out.reason


def test_trace_fields_stable():
    code = build_code(15, 2)
    word = [3, 1, 3, 0, 2, 3, 2, 2, 1, 0, 1, 0, 0, 3, 0]
    out = decode(word, code, with_trace=True)
    assert out.success
    assert list(out.trace) == ["syndromes", "u", "oneplusT", "solverpair",
                               "solver_rounds", "sigma_mod2", "doubles", "singles",
                               "sigma_pass2", "error", "codeword"]
    assert len(out.trace["solver_rounds"]) == code.t + 1
    assert list(out.trace["solver_rounds"][0]) == ["round", "basis", "discrepancies"]
    assert out.trace["syndromes"] == ["2,3,1,3", "1,2,1,2"]
    assert out.trace["oneplusT"] == ["1,0,0,0", "2,3,1,3", "0,1,1,2"]
    # the trace carries the normalized pair (constant terms scaled to 1)
    assert out.trace["solverpair"] == ["1,0,0,0;2,1,0,1", "1,0,0,0;0,0,1,0"]
    assert out.trace["doubles"] == [] and out.trace["singles"] == [4, 13]
    assert out.trace["error"] == "000010000000030"
