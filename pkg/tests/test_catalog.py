import itertools
import json

import pytest

from hopfgalois import catalog
from hopfgalois.groups import CocycledGroup, group_of, group_report, self_galois_report

from conftest import entry


@pytest.mark.parametrize("name", [n for n, _ in catalog.list_entries()])
def test_entries_load(name):
    e = catalog.load(name)
    assert e.load_report.ok
    assert all(c.status == "pass" for c in e.load_report.checks if c.id.startswith("load/p7/"))


def test_unknown_entry():
    with pytest.raises(catalog.CatalogError):
        catalog.load("nope")
    with pytest.raises(catalog.CatalogError):
        catalog.load("taft", {"N": 1})


def test_export_round_trip(tmp_path):
    text = catalog.export("podles-monopole")
    path = tmp_path / "m.json"
    path.write_text(text)
    e = catalog.load(str(path))
    assert e.name == "podles-monopole"
    assert json.loads(catalog.export("podles-monopole")) == json.loads(text)
    assert sorted(e.c_generators) == sorted(entry("podles-monopole").c_generators)


def test_failing_entry_does_not_load():
    spec = catalog.taft_spec(2)
    spec["translation"]["x"] = "tensor(1, X)"
    with pytest.raises(catalog.CatalogError):
        catalog.build(spec)


def test_taft_with_numeric_s():
    e = catalog.load("taft", {"N": 3, "s": "0"})
    assert not e.field.has_name("s")
    assert e.a("X^3") == e.A.zero()
    assert e.load_report.ok


# oracle: the klein cocycle (-1)^{a2 b1} by plain integer arithmetic
def _klein(g, h):
    return -1 if (g[1] * h[0]) % 2 else 1


def _add(g, h):
    return ((g[0] + h[0]) % 2, (g[1] + h[1]) % 2)


def test_klein_cocycle_brute_force(klein):
    G = list(itertools.product(range(2), repeat=2))
    for g, h, k in itertools.product(G, repeat=3):
        assert _klein(g, h) * _klein(_add(g, h), k) == _klein(h, k) * _klein(g, _add(h, k))
    cg = group_of(klein)
    for g in G:
        for h in G:
            assert cg.lam[(g, h)] == klein.field(_klein(g, h))
            lam = _klein(g, h) * _klein(h, g)  # inverses are trivial in Z2 x Z2
            mu = lambda x: _klein(x, x)  # noqa: E731
            assert cg.Lambda(g, h) == klein.field(lam) == klein.field(mu(g) * mu(h) * mu(_add(g, h)))


def test_group_report(klein):
    rep = group_report(klein)
    assert rep.ok
    assert rep.status_of("group/characters") == "pass"
    assert rep.status_of("group/prog0") == "pass"
    assert rep.status_of("group/rescaled") == "skipped"
    rep4 = group_report(entry("group", order=4))
    assert rep4.status_of("group/rescaled") == "pass"


def test_bad_cocycle_rejected():
    table = catalog.cocycle_table([2, 2], "trivial")
    table["1,0|0,1"] = "2"
    with pytest.raises(catalog.CatalogError, match="2-cocycle"):
        catalog.group_spec((2, 2), table)
    cg = CocycledGroup([2, 2], table, entry("group").field)
    assert cg.cocycle_violations()


def test_trivial_cocycle_is_group_algebra():
    e = entry("group", cocycle="trivial")
    rep = group_report(e)
    assert rep.ok and rep.status_of("group/rescaled") == "pass"
    for u in e.A.generators:
        assert e.a(f"{u}*{u}") == e.A.one()


def test_z2_z3():
    e = entry("group", orders="2,3", cocycle="trivial", order=3)
    assert len(e.A.finite_basis()) == 6
    assert group_report(e).ok


@pytest.mark.parametrize("N", [2, 3])
def test_self_galois(N):
    rep = self_galois_report(entry("self-galois", N=N))
    assert rep.ok, rep.failures()
    assert rep.status_of("self-galois/algebra") == "pass"
    assert rep.status_of("self-galois/coalgebra") == "pass"
