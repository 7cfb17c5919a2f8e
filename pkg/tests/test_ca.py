import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from digitgroups.ca import (
    CaConfig,
    ca_evolve,
    ca_step,
    load_row,
    max_rule,
    rule_from_function,
    single_seed,
    to_wolfram_order,
)
from digitgroups.digitcore import RangeError, digit


def neighborhoods(row, l, r, eta):
    """Oracle neighborhood index, left neighbor least significant."""
    w = len(row)
    return [sum(eta ** (k + r) * row[(j + k) % w] for k in range(-r, l + 1)) for j in range(w)]


def test_null_rules():
    cfg = CaConfig(2, 1, 1, 110, 17)
    assert ca_step(cfg, np.zeros(17, dtype=int)).tolist() == [0] * 17
    zero = CaConfig(2, 1, 1, 0, 17)
    rows = ca_evolve(zero, single_seed(17), 5)
    assert all(not r.any() for r in rows[1:])


def test_index_seven_under_110():
    cfg = CaConfig(2, 1, 1, 110, 5)
    # all-ones row: every neighborhood index is 7 and bit 7 of 110 is 0
    assert ca_step(cfg, [1] * 5).tolist() == [0] * 5
    assert digit(2, 7, 110) == 0


@pytest.mark.parametrize("eta,l,r", [(2, 1, 1), (3, 1, 0), (2, 2, 1), (3, 0, 1)])
def test_max_rule_saturates(eta, l, r):
    R = max_rule(eta, l, r)
    cfg = CaConfig(eta, l, r, R, 12)
    rng = np.random.default_rng(1)
    out = ca_step(cfg, rng.integers(0, eta, 12))
    assert (out == eta - 1).all()


def test_evolve_shape():
    cfg = CaConfig(2, 1, 1, 30, 9)
    rows = ca_evolve(cfg, single_seed(9), 1)
    assert len(rows) == 2
    assert rows[0].tolist() == single_seed(9).tolist()
    assert rows[1].tolist() == ca_step(cfg, rows[0]).tolist()


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2), st.integers(0, 2), st.data())
def test_step_matches_oracle(eta, l, r, data):
    span = l + r + 1
    assume(eta**span <= 32)  # keeps every rule number below 2**63
    width = data.draw(st.integers(span, 20))
    table = data.draw(st.lists(st.integers(0, eta - 1), min_size=eta**span, max_size=eta**span))
    R = rule_from_function(eta, span, lambda s: table[s])
    row = data.draw(st.lists(st.integers(0, eta - 1), min_size=width, max_size=width))
    cfg = CaConfig(eta, l, r, R, width)
    expected = [table[s] for s in neighborhoods(row, l, r, eta)]
    assert ca_step(cfg, row).tolist() == expected
    # the same value read as f(g(n)): digit g(n) of the tabulated rule
    assert expected == [digit(eta, s, R) for s in neighborhoods(row, l, r, eta)]


def test_output_stays_in_radix():
    cfg = CaConfig(3, 1, 1, 3**27 - 12345, 40)
    rows = ca_evolve(cfg, np.random.default_rng(0).integers(0, 3, 40), 20)
    assert all(((r >= 0) & (r < 3)).all() for r in rows)


def test_wolfram_order_conversion():
    # rule 110 is not left-right symmetric, so the two orderings differ
    w = to_wolfram_order(2, 1, 1, 110)
    assert w == 124 and to_wolfram_order(2, 1, 1, w) == 110
    # a symmetric rule is its own image
    assert to_wolfram_order(2, 1, 1, 90) == 90


def test_wolfram_order_reproduces_mirror():
    width = 41
    ours = ca_evolve(CaConfig(2, 1, 1, 110, width), single_seed(width), 15)
    conv = ca_evolve(CaConfig(2, 1, 1, to_wolfram_order(2, 1, 1, 110), width),
                     single_seed(width)[::-1].copy(), 15)
    assert all((a[::-1] == b).all() for a, b in zip(ours, conv))


def test_config_guards():
    with pytest.raises(RangeError):
        CaConfig(1, 1, 1, 0, 5)
    with pytest.raises(RangeError):
        CaConfig(2, 1, 1, 256, 5)
    with pytest.raises(RangeError):
        CaConfig(2, 1, 1, 30, 2)
    with pytest.raises(ValueError):
        CaConfig(2, 1, 1, 30, 5, boundary="fixed")
    with pytest.raises(ValueError):
        ca_step(CaConfig(2, 1, 1, 30, 5), [0, 1, 0])
    with pytest.raises(RangeError):
        ca_step(CaConfig(2, 1, 1, 30, 3), [0, 2, 0])
    with pytest.raises(RangeError):
        ca_evolve(CaConfig(2, 1, 1, 30, 3), [0, 1, 0], 0)


def test_wide_binary_neighborhood_is_capped():
    # 2**(2**6) exceeds 64-bit, so the rule number is capped below 2**63
    assert max_rule(2, 3, 2) == 2**63 - 1
    cfg = CaConfig(2, 3, 2, 2**63 - 1, 16)
    out = ca_step(cfg, [1] * 16)
    # index 63 reads bit 63 of a rule below 2**63, which is 0
    assert out.tolist() == [0] * 16


def test_load_row():
    assert load_row("0010\n") == [0, 0, 1, 0]
    assert load_row("1,12,3") == [1, 12, 3]
