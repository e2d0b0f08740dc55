
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgalois import catalog
from hopfgalois.gauge import (
    Bisection,
    GaugeError,
    bisection_convolution,
    bisection_from_gauge,
    bisection_inverse,
    bisection_round_trip,
    check_inverse,
    counit_bisection,
    family_member,
    gauge_compose,
    gauge_from_bisection,
    gauge_from_matrix,
    gauge_inverse,
    identity_gauge,
    in_family,
    lemma_lecb,
    restrict_to_algebra_maps,
    solve_extended_gauge,
    verify_bisection,
    verify_gauge,
)
from hopfgalois.suites import gauge_suite

from conftest import entry

nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


def test_monopole_X_family(monopole):
    F = family_member(monopole, "X")
    assert verify_gauge(F).ok
    inv = gauge_inverse(F)
    assert inv.equals(family_member(monopole, "X", {"X": "X^-1"}))
    assert check_inverse(F, inv).ok


def test_monopole_XY_family_fails(monopole):
    rep = verify_gauge(family_member(monopole, "XY"))
    assert rep.status_of("gauge/XY/relations") == "fail"
    assert rep.status_of("gauge/XY/equivariance/a") == "pass"


def test_sl2_h_family(sl2):
    F = family_member(sl2, "h")
    rep = verify_gauge(F)
    assert rep.ok
    inv = gauge_inverse(F)
    assert inv("a") == sl2.a("a - h*c") and inv("b") == sl2.a("b - h*d")
    # determinant preserved: F(a)F(d) - F(b)F(c) = 1
    assert F("a") * F("d") - F("b") * F("c") == sl2.A.one()


def test_lemma_lecb(sl2):
    ok, x = lemma_lecb(family_member(sl2, "h"), "a", "b")
    assert ok
    # oracle: (a + hc)b − (b + hd)a = h(cb − da) = −h(ad − bc) = −h
    assert x == sl2.a("-h")


@given(nonzero)
def test_sl2_family_specializations(h):
    e = entry("sl2-nff")
    F = family_member(e, "h", {"h": h})
    assert verify_gauge(F).ok
    assert bisection_round_trip(e.bialgebroid, F=F).ok


@given(nonzero, nonzero)
def test_monopole_group_law_specialized(x, y):
    e = entry("podles-monopole")
    F = family_member(e, "X", {"X": x})
    G = family_member(e, "X", {"X": y})
    assert gauge_compose(F, G).equals(family_member(e, "X", {"X": x * y}))


def test_compositions(sl2, monopole):
    F, G = family_member(sl2, "h"), family_member(sl2, "h", {"h": "k"})
    assert gauge_compose(F, G).equals(family_member(sl2, "h", {"h": "h + k"}))
    assert gauge_compose(F, gauge_inverse(F)).equals(identity_gauge(sl2.ext))
    X, Y = family_member(monopole, "X"), family_member(monopole, "X", {"X": "Y"})
    assert gauge_compose(X, Y).equals(family_member(monopole, "X", {"X": "X*Y"}))


def test_bisection_values_sl2(sl2):
    sigma = bisection_from_gauge(family_member(sl2, "h"), sl2.bialgebroid)
    assert sigma("alpha") == sl2.a("1 + h*c*d")
    assert sigma("beta") == sl2.a("h*d^2")
    assert sigma("gamma") == sl2.a("-h*c^2")
    assert sigma("delta") == sl2.a("1 - h*d*c")
    assert verify_bisection(sigma).ok


def test_bisection_values_monopole(monopole):
    sigma = bisection_from_gauge(family_member(monopole, "X"), monopole.bialgebroid)
    assert sigma("alpha") == monopole.a("X*a*d")
    assert sigma("delta") == monopole.a("X^-1*d*a")
    assert sigma("gammat") == monopole.a("X*c*d")


@pytest.mark.parametrize("name,fam", [("sl2-nff", "h"), ("podles-monopole", "X")])
def test_round_trips(name, fam):
    e = entry(name)
    F = family_member(e, fam)
    explicit = Bisection(e.bialgebroid, values=e.gauge_families[fam]["bisection"], name="tau")
    rep = bisection_round_trip(e.bialgebroid, F=F, sigma=explicit)
    assert rep.ok, rep.failures()
    assert gauge_from_bisection(explicit).equals(F)


def test_counit_bisection_is_identity(monopole):
    eps = counit_bisection(monopole.bialgebroid)
    assert gauge_from_bisection(eps).equals(identity_gauge(monopole.ext))
    sigma = bisection_from_gauge(family_member(monopole, "X"), monopole.bialgebroid)
    for n in monopole.bialgebroid.generators:
        assert bisection_convolution(eps, sigma)(n) == sigma(n)
        assert bisection_convolution(sigma, bisection_inverse(sigma))(n) == eps(n)


def test_convolution_matches_composition(sl2):
    bia = sl2.bialgebroid
    F, G = family_member(sl2, "h"), family_member(sl2, "h", {"h": "k"})
    conv = bisection_convolution(bisection_from_gauge(G, bia), bisection_from_gauge(F, bia))
    comp = bisection_from_gauge(gauge_compose(F, G), bia)
    for n in bia.generators:
        assert conv(n) == comp(n)


def test_extended_inverse_formula_rejected(taft2):
    fam = solve_extended_gauge(taft2.ext)
    e2 = catalog.with_indeterminates(taft2, fam.entry_names())
    F = fam.member(e2.ext, fam.entry_names())
    sigma = bisection_from_gauge(F, e2.bialgebroid)
    with pytest.raises(GaugeError):
        bisection_inverse(sigma)


@pytest.mark.parametrize("N,dim", [(2, 3), (3, 8)])
def test_extended_family_dimension(N, dim):
    e = entry("taft", N=N)
    fam = solve_extended_gauge(e.ext)
    assert fam.dimension == dim
    e2 = catalog.with_indeterminates(e, fam.entry_names())
    F = fam.member(e2.ext, fam.entry_names())
    _, _, count = restrict_to_algebra_maps(F, fam.entry_names())
    assert count == N


def test_printed_autverT_in_family(taft2):
    e = catalog.with_indeterminates(taft2, ["al", "be", "ga"])
    data = e.spec["extended_gauge"]["blocks"][0]
    from hopfgalois.parse import parse_scalar

    rows = [[parse_scalar(e.field, r) for r in row] for row in data["rows"]]
    M = gauge_from_matrix(e.ext, [e.a(x) for x in data["elements"]], rows)
    assert in_family(M) == []
    # a non-equivariant perturbation is not in the family
    rows[3][0] = e.field.one
    assert in_family(gauge_from_matrix(e.ext, [e.a(x) for x in data["elements"]], rows))


def test_extended_requires_finite(monopole):
    with pytest.raises(GaugeError):
        solve_extended_gauge(monopole.ext)


@pytest.mark.parametrize("name,params", [("taft", {"N": 2}), ("taft", {"N": 3}), ("podles-monopole", {}),
                                         ("sl2-nff", {}), ("group", {}), ("self-galois", {"N": 2})])
def test_gauge_suite(name, params):
    rep = gauge_suite(entry(name, **params))
    assert rep.ok, rep.failures()[:3]


def test_limitation_recorded(monopole):
    rep = gauge_suite(monopole)
    assert rep.status_of("gauge/limitation/exhaustive") == "limitation"
    assert rep.status_of("gauge/XY/rejected") == "pass"
