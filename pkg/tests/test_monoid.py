import itertools
import json
import random
from pathlib import Path

import pytest

from monideal import (
    FAILURE,
    FractionalMonoid,
    LambdaSpec,
    QUASINORMAL_ON_WINDOW,
    VACUOUS,
    almost_quasinormal,
    conductor,
    default_window_bound,
    in_M,
    is_normal_lambda,
    membership_table,
    quasinormal_window,
)
from monideal.oracles import max_parts_table, window_split_oracle

FIXTURES = Path(__file__).parent / "fixtures"


def mon(*lam):
    return FractionalMonoid(LambdaSpec(lam))


def test_membership_examples():
    table = membership_table((3, 2), 10)
    assert [s for s in range(11) if table[s]] == [0, 2, 3, 4, 5, 6, 7, 8, 9, 10]
    assert not in_M(mon(2, 3), 1)
    assert in_M(mon(2, 3), 7)
    assert in_M(mon(2, 3), 0)
    assert not in_M(mon(2, 3), -4)
    # the coin check that drives the (2,3,7) story: 43 is not reachable
    assert not in_M(mon(2, 3, 7), 43)
    assert in_M(mon(2, 3, 7), 44)


def test_membership_table_validation():
    with pytest.raises(ValueError):
        membership_table((2, 3), -1)


def test_membership_shift_invariance():
    rng = random.Random(5)
    for lam in ((2, 3), (2, 3, 7), (4, 6), (5, 3, 2)):
        m = mon(*lam)
        table = membership_table(m.omega, 200)
        for s in range(150):
            if table[s]:
                for w in m.omega:
                    assert table[s + w], (lam, s, w)


def test_almost_quasinormal_examples():
    assert almost_quasinormal(mon(2, 3))  # 7 = 3 + 2 + 2
    assert almost_quasinormal(mon(2, 2))  # omega = (1, 1)
    assert almost_quasinormal(mon(1, 7))
    assert almost_quasinormal(mon(2, 3, 5))  # 31 = 15 + 10 + 6
    assert not almost_quasinormal(mon(2, 3, 7))
    assert not almost_quasinormal(mon(2, 5, 7))  # 71 not in <35, 14, 10>


def test_conductor_examples():
    assert conductor(mon(2, 3)) == 2  # <3,2>: gap only at 1
    assert conductor(mon(2, 3, 7)) == 44  # <21,14,6>: last gap at 43
    assert conductor(mon(1, 9)) == 0  # omega contains 1
    assert conductor(mon(5, 3, 2)) == 30  # <6,10,15>: last gap at 29


def test_conductor_is_tight():
    for lam in ((2, 3), (2, 3, 7), (5, 3, 2), (4, 6), (5, 7)):
        m = mon(*lam)
        c = conductor(m)
        table = membership_table(m.omega, c + 50 * m.g)
        for s in range(c, c + 50 * m.g + 1):
            if s % m.g == 0:
                assert table[s], (lam, s)
        if c > 0:
            assert not table[c - m.g], lam


def test_default_window_bound_formula():
    assert default_window_bound(mon(2, 3, 7)) == max(4 * 3 * 42, 2 * (42 + 44))
    assert default_window_bound(mon(1, 1)) == 8


def test_window_examples():
    m = mon(2, 3, 7)
    verdict = quasinormal_window(m)
    assert verdict.status == FAILURE
    assert verdict.bound == 504
    fixture = json.loads((FIXTURES / "lambda_2_3_7.json").read_text())
    s, p = verdict.witness
    assert {"s": s, "p": p} == fixture["window"]["witness"]
    # shorter window: no failure yet (84 = 42 + 42 still splits)
    assert quasinormal_window(m, 84).status == QUASINORMAL_ON_WINDOW
    assert quasinormal_window(m, 41).status == VACUOUS
    assert quasinormal_window(mon(2, 2), 20).status == QUASINORMAL_ON_WINDOW
    assert quasinormal_window(mon(1,), 10).status == QUASINORMAL_ON_WINDOW


def test_window_failure_witness_is_in_monoid_and_unsplittable():
    m = mon(2, 3, 7)
    s, p = quasinormal_window(m).witness
    assert in_M(m, s)
    assert p == s // m.L
    assert max_parts_table(m, s)[s] < p


def test_window_agrees_with_parts_maximization_oracle():
    """The excess coin table must give the same verdict and witness as the
    literal maximization table, which is computed very differently."""
    for lam in ((2, 3, 7), (2, 3, 5), (3, 4, 5), (2, 2, 3), (5, 3, 2), (2, 5, 7)):
        m = mon(*lam)
        bound = min(default_window_bound(m), 700)
        got = quasinormal_window(m, bound)
        expect = window_split_oracle(m, bound)
        if expect is None:
            assert got.status == QUASINORMAL_ON_WINDOW, lam
        else:
            assert got.status == FAILURE and got.witness == expect, lam


def test_missing_almost_quasinormality_always_surfaces_in_default_window():
    """If L+1 is unreachable, some k*L+1 is reachable past the conductor
    and cannot split into k parts, and the default bound covers it."""
    for lam in itertools.product(range(1, 7), repeat=3):
        m = mon(*lam)
        if not almost_quasinormal(m):
            assert quasinormal_window(m).status == FAILURE, lam


def test_window_pass_points_really_split():
    m = mon(2, 3, 7)
    table = max_parts_table(m, 84)
    for s in range(m.L, 85):
        if in_M(m, s):
            assert table[s] >= s // m.L, s


def test_normal_lambda_implies_clean_default_window():
    for lam in itertools.product(range(1, 6), repeat=3):
        spec = LambdaSpec(lam)
        if is_normal_lambda(spec).normal:
            m = FractionalMonoid(spec)
            assert quasinormal_window(m).status == QUASINORMAL_ON_WINDOW, lam
