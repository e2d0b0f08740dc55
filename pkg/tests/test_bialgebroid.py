import cmath

import pytest

from hopfgalois.bialgebroid import c_iso_report, diagonal_coinvariant_dimension
from hopfgalois.suites import antipode_suite, bialgebroid_suite

from conftest import entry


# oracle for C(A_s, T_N): the N-dimensional representation G e_k = q^k e_k,
# X e_k = e_{k-1} (X e_0 = s e_{N-1}) and x⊗y ↦ M(x) ⊗ M(y)^T on A⊗A^op
def _rep(N, s=2.0):
    q = cmath.exp(2j * cmath.pi / N)
    G = [[q**k if i == k else 0 for k in range(N)] for i in range(N)]
    X = [[0] * N for _ in range(N)]
    for k in range(1, N):
        X[k - 1][k] = 1
    X[N - 1][0] = s
    return q, G, X


def _mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _kron(a, b):
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def _T(a):
    return [list(r) for r in zip(*a)]


def _add(a, b, c=1):
    return [[x + c * y for x, y in zip(r, t)] for r, t in zip(a, b)]


def _close(a, b):
    return all(abs(x - y) < 1e-9 for r, t in zip(a, b) for x, y in zip(r, t))


def _eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _pow(a, k):
    out = _eye(len(a))
    for _ in range(k):
        out = _mul(out, a)
    return out


@pytest.mark.parametrize("N", [2, 3, 4])
def test_xi_gamma_oracle(N):
    q, G, X = _rep(N)
    Gi = _pow(G, N - 1)
    one = _eye(N)
    Xi = _add(_kron(X, _T(Gi)), _kron(one, _T(_mul(X, Gi))), -1)
    Gamma = _kron(G, _T(Gi))
    lhs, rhs = _mul(Xi, Gamma), _mul(Gamma, Xi)
    assert _close(lhs, [[q * x for x in r] for r in rhs])
    assert _close(_pow(Gamma, N), _eye(N * N))
    assert _close(_pow(Xi, N), [[0] * (N * N) for _ in range(N * N)])


def _as_matrix(e, t, N, s=2.0):
    q, G, X = _rep(N, s)
    A = e.A
    gm = {"G": G, "X": X}

    def word(w):
        out = _eye(N)
        for i in w:
            out = _mul(out, gm[A.generators[i]])
        return out

    acc = [[0] * (N * N) for _ in range(N * N)]
    for (u, v), c in t.terms.items():
        val = complex(eval(str(c).replace("^", "**"), {"zeta": q, "s": s}))
        acc = _add(acc, _kron(word(u), _T(word(v))), val)
    return acc


@pytest.mark.parametrize("N", [2, 3])
def test_bialgebroid_product_matches_oracle(N):
    e = entry("taft", N=N)
    bia = e.bialgebroid
    Xi, Gamma = bia.generators["Xi"], bia.generators["Gamma"]
    for x, y in [(Xi, Gamma), (Gamma, Xi), (Xi, Xi)]:
        assert _close(_as_matrix(e, bia.product(x, y), N), _mul(_as_matrix(e, x, N), _as_matrix(e, y, N)))


@pytest.mark.parametrize("N", [2, 3])
def test_xi_gamma_relation(N):
    e = entry("taft", N=N)
    rep = bialgebroid_suite(e)
    for rid in ("Xi-Gamma", "Gamma-power", "Xi-power"):
        assert rep.status_of(f"bialgebroid/relation/{rid}") == "pass"


@pytest.mark.parametrize("N", [2, 3])
def test_prop_taft_isomorphism(N):
    e = entry("taft", N=N)
    rep = c_iso_report(e.bialgebroid, e.spec["c_iso"])
    assert rep.ok, rep.failures()
    for part in ("relations", "bijective", "coalgebra", "counit", "antipode"):
        assert rep.status_of(f"Psi/{part}") == "pass"
    assert diagonal_coinvariant_dimension(e.bialgebroid) == N * N


def test_wrong_iso_is_rejected(taft2):
    rep = c_iso_report(taft2.bialgebroid, {"x": "Gamma", "g": "Xi"})
    assert not rep.ok


def test_monopole_bialgebroid(monopole):
    rep = bialgebroid_suite(monopole)
    assert rep.ok, rep.failures()[:3]
    ids = {c.id for c in rep.checks}
    for g in ("alpha", "alphat", "beta", "betat", "gamma", "gammat", "delta", "deltat"):
        assert rep.status_of(f"bialgebroid/coproduct/{g}") == "pass"
        assert rep.status_of(f"bialgebroid/counit/{g}") == "pass"
    assert "bialgebroid/relation/sph-rel-bi1" in ids
    assert rep.status_of("bialgebroid/erratum/circle/betat-alphat") == "pass"


def test_monopole_counit_alpha(monopole):
    # ε(α) = 1 − q²B₀ with B₀ = −q⁻¹cb
    bia = monopole.bialgebroid
    assert bia.counit(bia.generators["alpha"]) == monopole.a("1 - q^2*(-q^-1*c*b)")


def test_monopole_antipode(monopole):
    rep = antipode_suite(monopole)
    assert rep.ok, rep.failures()[:3]
    hop = [c for c in rep.checks if "hopbroid2" in c.anchor]
    assert len([c for c in hop if c.status == "pass"]) >= 16


def test_sl2_hopf_algebroid(sl2):
    rep = bialgebroid_suite(sl2)
    assert rep.ok, rep.failures()[:3]
    for rid in ("sph-rel-bi2", "abcdst/s-c", "abcdst/t-d"):
        assert rep.status_of(f"bialgebroid/relation/{rid}") == "pass"
    rep = antipode_suite(sl2)
    assert rep.ok and any(c.status == "pass" for c in rep.checks)


def test_wrong_coproduct_is_caught(sl2):
    from hopfgalois.report import Report

    rep = Report("x")
    sl2.bialgebroid.verify_coproducts({"alpha": [["1", "alpha", "alpha"]]}, "copr2ex", rep)
    assert rep.status_of("bialgebroid/coproduct/alpha") == "fail"
