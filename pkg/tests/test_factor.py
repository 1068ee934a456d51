import pytest

from oracles import f2_order_of_x
from ru4.factor import (
    PreconditionError,
    crt_idempotents,
    cyclotomic_cosets,
    factor_xn1,
    factor_xn1_f2,
    hensel_lift,
    extension_degree,
    hensel_lift_newton,
    is_basic_irreducible,
    is_basic_primitive,
)
from ru4.poly import (
    F2,
    R,
    Z4,
    NotCoprimeError,
    Polynomial,
    ResiduePolynomial,
    bezout_lift,
    divmod_monic,
    proj_mod_maximal,
)

P = Polynomial.parse
ODD = range(1, 32, 2)


def test_cosets():
    assert [sorted(c.members) for c in cyclotomic_cosets(7)] == [[0], [1, 2, 4], [3, 5, 6]]
    assert [c.members for c in cyclotomic_cosets(15)] == [(0,), (1, 2, 4, 8), (3, 6, 12, 9), (5, 10), (7, 14, 13, 11)]
    assert [c.members for c in cyclotomic_cosets(1)] == [(0,)]
    with pytest.raises(PreconditionError, match="length must be odd"):
        cyclotomic_cosets(6)


@pytest.mark.parametrize("n", ODD)
def test_cosets_partition(n):
    cs = cyclotomic_cosets(n)
    seen = sorted(i for c in cs for i in c.members)
    assert seen == list(range(n))
    for c in cs:
        assert all(2 * i % n in c.members for i in c.members)
        assert extension_degree(n) % len(c) == 0


def test_f2_factorisation():
    rec = factor_xn1_f2(7)
    assert [str(f) for f in rec.factors] == ["x+1", "x^3+x+1", "x^3+x^2+1"]
    assert [str(f) for f in factor_xn1_f2(3).factors] == ["x+1", "x^2+x+1"]
    assert factor_xn1_f2(15).degrees == [1, 4, 4, 2, 4]


def test_hensel_examples():
    assert hensel_lift(P("x^3+x+1", F2)) == P("x^3+2x^2+x+3", Z4)
    assert hensel_lift(P("x+1", F2)) == P("x+3", Z4)
    assert hensel_lift(P("x^4+x^3+1", F2), "R") == P("x^4+3x^3+2x^2+1")
    with pytest.raises(PreconditionError):
        hensel_lift(P("x^2+x+1", F2), n=7)
    with pytest.raises(PreconditionError):
        hensel_lift(P("x^2", F2))


def test_factor_examples():
    rec = factor_xn1(7, "Z4")
    assert [str(f) for f in rec.factors] == ["x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3"]
    assert rec.to_json() == {"n": 7, "ring": "Z4", "factors": ["x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3"], "cosets": [[0], [1, 2, 4], [3, 5, 6]]}
    r15 = {str(f) for f in factor_xn1(15, "R").factors}
    assert {"x+3", "x^4+3x^3+2x^2+1", "x^4+x^3+x^2+x+1", "x^2+x+1"} <= r15
    assert [str(f) for f in factor_xn1(1).factors] == ["x+3"]


@pytest.mark.parametrize("n", ODD)
@pytest.mark.parametrize("ring", ["Z4", "R"])
def test_factorisation_invariants(n, ring):
    rec = factor_xn1(n, ring, max_degree=28)
    assert rec.product() == Polynomial.x_n_minus_1(n, rec.ring)
    assert len(rec.factors) == len(cyclotomic_cosets(n))
    base = factor_xn1_f2(n, max_degree=28)
    for f, g in zip(rec.factors, base.factors):
        assert f.is_monic() and is_basic_irreducible(f)
        assert proj_mod_maximal(f) == g
    for i, f in enumerate(rec.factors):
        for g in rec.factors[i + 1:]:
            A, B = bezout_lift(f.as_ring(R), g.as_ring(R))
            assert A * f.as_ring(R) + B * g.as_ring(R) == Polynomial.one()


@pytest.mark.parametrize("n", [7, 15, 21, 31])
def test_newton_lift_agrees(n):
    for g in factor_xn1_f2(n).factors:
        assert hensel_lift_newton(g, n) == hensel_lift(g, "Z4", n)


def test_basic_primitive():
    assert is_basic_primitive(P("x^4+3x^3+2x^2+1"))
    f = P("x^4+x^3+x^2+x+1")
    assert is_basic_irreducible(f) and not is_basic_primitive(f)
    assert f2_order_of_x(0b11111) == 5
    assert f2_order_of_x(0b11001) == 15
    assert not is_basic_irreducible(P("2x+1+u"))
    assert not is_basic_irreducible(P("x^2+1"))


def test_crt_examples():
    ids = crt_idempotents(3, "Z4")
    assert [str(e) for e in ids] == ["3x^2+3x+3", "x^2+x+2"]
    assert ids[0] + ids[1] == ResiduePolynomial.one(3, Z4)
    assert [str(e) for e in crt_idempotents(1)] == ["1"]


@pytest.mark.parametrize("n", ODD)
@pytest.mark.parametrize("ring", ["Z4", "R"])
def test_idempotent_laws(n, ring):
    ids = crt_idempotents(n, ring, max_degree=28)
    total = ResiduePolynomial.zero(n, ids.ring)
    for i, e in enumerate(ids):
        assert e * e == e
        for j, f in enumerate(ids):
            if i != j:
                assert (e * f).is_zero()
        total = total + e
        for j, f in enumerate(ids.factors):
            rem = divmod_monic(e.lift(), f.as_ring(ids.ring))[1]
            assert rem == (Polynomial.one(ids.ring) if i == j else Polynomial.zero(ids.ring))
    assert total == ResiduePolynomial.one(n, ids.ring)


def test_default_degree_cap():
    with pytest.raises(PreconditionError, match="extension degree"):
        factor_xn1(29)


def test_even_length_rejected():
    for fn in (factor_xn1, crt_idempotents):
        with pytest.raises(PreconditionError, match="length must be odd"):
            fn(8)
    with pytest.raises(NotCoprimeError):
        bezout_lift(P("x+3"), P("x^2+3"))
