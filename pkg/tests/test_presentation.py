import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgalois.parse import ParseError, parse, parse_in
from hopfgalois.presentation import Presentation, PresentationError
from hopfgalois.scalars import Field
from hopfgalois.tensor import Tensor

from conftest import entry

ENTRIES = [("taft", {"N": 2}), ("taft", {"N": 3}), ("podles-monopole", {}), ("sl2-nff", {}),
           ("group", {}), ("self-galois", {"N": 2})]


@pytest.mark.parametrize("name,params", ENTRIES)
def test_catalog_presentations_are_confluent(name, params):
    e = entry(name, **params)
    for P in (e.H, e.A):
        rep = P.check_local_confluence()
        assert rep.confluent, rep.failures[:2]


def test_non_confluent_system_is_detected():
    F = Field(1)
    # xy -> x, yx -> y: the overlap xyx reduces both to xx and to x
    P = Presentation(F, ["x", "y"], [("xy", {"x": 1}), ("yx", {"y": 1})])
    rep = P.check_local_confluence()
    assert not rep.confluent


def test_rule_must_decrease_order():
    with pytest.raises(PresentationError):
        Presentation(Field(1), ["x", "y"], [("x", {"xy": 1})])


def words_of(P, max_len=3):
    return P.finite_basis() or P.basis_upto(max_len)


@st.composite
def elements(draw, P):
    words = words_of(P)
    acc = P.zero()
    for _ in range(draw(st.integers(1, 3))):
        acc = acc + P.from_word(draw(st.sampled_from(words)), P.field(draw(st.integers(-4, 4))))
    return acc


def _assoc(P):
    @given(elements(P), elements(P), elements(P))
    def check(x, y, z):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z

    check()


def test_taft_algebra_associative():
    e = entry("taft", N=3)
    _assoc(e.A)
    _assoc(e.H)


def test_quantum_sl2_associative():
    _assoc(entry("podles-monopole").A)


def test_normal_forms_are_normal(monopole):
    A = monopole.A
    for w in A.basis_upto(3):
        for u in A.basis_upto(2):
            prod = A.from_word(w) * A.from_word(u)
            assert all(A.is_normal(v) for (v,) in prod.terms)


def test_taft_dimensions(taft3):
    assert len(taft3.H.finite_basis()) == 9
    assert len(taft3.A.finite_basis()) == 9


def test_sl2_hilbert_series(sl2):
    # O(SL(2)) has 1, 4, 9, 16 normal words of degree 0..3 counted with a, d of weight 2
    A = sl2.A
    dims = [len(A.basis(d)) for d in range(4)]
    assert dims[0] == 1 and dims[1] == 4


def test_parser_grammar():
    assert parse("a*b^2 + -3*c") == ("add", ("mul", ("name", "a"), ("pow", ("name", "b"), 2)),
                                    ("mul", ("neg", ("num", 3)), ("name", "c")))
    with pytest.raises(ParseError):
        parse("a * (b")
    with pytest.raises(ParseError):
        parse("")


def test_parse_tensor_and_inverse(taft2):
    A = taft2.A
    t = parse_in((A, A), "tensor(G^-1, G)", taft2.aliases)
    assert t == Tensor.unit((A, A)).__class__((A, A), {(A.word("G"), A.word("G")): taft2.field.one})
    with pytest.raises(ParseError):
        parse_in((A, A), "G", taft2.aliases)


def test_unknown_name(taft2):
    with pytest.raises(ParseError):
        taft2.a("Q")
