import pytest

from hopfgalois.crossed import (
    act_on_bisection,
    ad_alternative,
    ad_of_bisection,
    gauge_family_bisections,
    t2_extended_report,
    taft_crossed_report,
    verify_crossed_module,
)
from hopfgalois.gauge import bisection_convolution, bisection_inverse, counit_bisection
from hopfgalois.suites import crossed_suite

from conftest import entry


@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft_crossed_module(N):
    rep = taft_crossed_report(entry("taft", N=N))
    assert rep.ok, rep.failures()[:3]
    for k in range(N):
        assert rep.status_of(f"crossed/taft/trivial-action/phi{k}") == "pass"
        assert rep.status_of(f"crossed/taft/ad-coinn/phi{k}") == "pass"
    assert rep.status_of("crossed/taft/j-injective") == "pass"


def test_t2_extended_closing_matrix():
    rep = t2_extended_report()
    assert rep.ok, rep.failures()
    ids = {c.id for c in rep.checks}
    assert any("closing-matrix" in i for i in ids)
    assert any("erratum" in i for i in ids)
    assert any(i.endswith("non-trivial") for i in ids)


def test_ad_of_counit_is_identity(monopole):
    bia = monopole.bialgebroid
    Ad = ad_of_bisection(counit_bisection(bia))
    for X in bia.generators.values():
        assert Ad(X) == X


@pytest.mark.parametrize("name,fam,names", [("podles-monopole", "X", ["X", "Y"]), ("sl2-nff", "h", ["h", "k"])])
def test_abelian_families(name, fam, names):
    e = entry(name)
    sigma, tau = gauge_family_bisections(e, fam, names)
    rep = verify_crossed_module([sigma, tau], [ad_of_bisection(tau)])
    assert rep.ok, rep.failures()[:3]
    acted = act_on_bisection(ad_of_bisection(tau), sigma)
    conj = bisection_convolution(bisection_convolution(tau, sigma), bisection_inverse(tau))
    for n, X in e.bialgebroid.generators.items():
        assert acted(n) == sigma(n) == conj(X)


def test_altad_agrees(sl2):
    sigma, = gauge_family_bisections(sl2, "h", ["h"])
    Ad = ad_of_bisection(sigma)
    for X in sl2.bialgebroid.generators.values():
        assert Ad(X) == ad_alternative(sigma, X)


def test_ad_is_vertical(monopole):
    sigma, = gauge_family_bisections(monopole, "X", ["X"])
    Ad = ad_of_bisection(sigma)
    bia = monopole.bialgebroid
    for b in monopole.ext.b_names.values():
        assert Ad(bia.s(b)) == bia.s(b)
        assert Ad(bia.t(b)) == bia.t(b)


@pytest.mark.parametrize("name,params", [("taft", {"N": 2}), ("group", {}), ("self-galois", {"N": 2}),
                                         ("podles-monopole", {})])
def test_crossed_suite(name, params):
    rep = crossed_suite(entry(name, **params))
    assert rep.ok, rep.failures()[:3]
