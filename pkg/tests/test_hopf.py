import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgalois.hopf import (
    CharacterError,
    Functional,
    coinn,
    convolution,
    convolution_inverse,
    counit_functional,
    cyclic_order,
    enumerate_characters,
    group_table,
    verify_hopf_axioms,
)

from conftest import entry


@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft_hopf_axioms(N):
    e = entry("taft", N=N)
    rep = verify_hopf_axioms(e.hs)
    assert rep.ok, rep.failures()[:3]
    assert sum(c.id.startswith("hopf/antipode/") for c in rep.checks) == N * N


def test_infinite_hopf_truncated(monopole):
    rep = verify_hopf_axioms(monopole.hs, 4)
    assert rep.ok
    assert rep.status_of("hopf/truncation") == "limitation"


@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft_characters_form_ZN(N):
    e = entry("taft", N=N)
    chars = enumerate_characters(e.H)
    assert len(chars) == N
    table = group_table(chars, e.hs)
    eps = counit_functional(e.hs)
    unit = next(i for i, c in enumerate(chars) if c.equals(eps))
    orders = cyclic_order(table, unit)
    assert max(orders.values()) == N
    # oracle: a character is fixed by its value on g, an N-th root of unity; x goes to 0
    F, g = e.field, (e.H.index["g"],)
    vals = sorted(str(c.value_word(g)) for c in chars)
    assert vals == sorted(str(F.zeta**k) for k in range(N))


def test_characters_of_klein_group(klein):
    chars = enumerate_characters(klein.H)
    # brute force: homomorphisms Z2 x Z2 -> {+1, -1}
    homs = [v for v in itertools.product([1, -1], repeat=2)]
    assert len(chars) == len(homs) == 4


def test_unsupported_relation_shape():
    e = entry("podles-monopole")
    with pytest.raises(CharacterError):
        enumerate_characters(e.A)


@given(st.integers(1, 5), st.integers(-5, 5), st.integers(1, 5), st.integers(-5, 5))
def test_convolution_associative_and_invertible(a, b, c, d):
    e = entry("taft", N=2)
    hs, F = e.hs, e.field
    f = Functional(e.H, values={w: F(v) for w, v in zip(e.H.finite_basis(), [1, a, b, a * b])})
    g = Functional(e.H, values={w: F(v) for w, v in zip(e.H.finite_basis(), [1, c, d, 0])})
    h = convolution(f, g, hs)
    assert convolution(convolution(f, g, hs), f, hs).equals(convolution(f, convolution(g, f, hs), hs))
    inv = convolution_inverse(h, hs)
    assert convolution(h, inv, hs).equals(counit_functional(hs))


@pytest.mark.parametrize("N", [2, 3])
def test_coinn_is_hopf_automorphism(N):
    e = entry("taft", N=N)
    hs, H = e.hs, e.H
    for phi in enumerate_characters(H):
        m = coinn(phi, hs)
        for w in H.finite_basis():
            d = hs.coproduct.image_word(w)
            lhs = hs.coproduct(m.image_word(w))
            rhs = d.map_slot(0, m.image_word, (H,)).map_slot(1, m.image_word, (H,))
            assert lhs == rhs
