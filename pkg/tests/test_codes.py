import random

import numpy as np
import pytest

import oracles
from ru4.codes import (
    CyclicCode,
    EnumerationLimitError,
    LocalKind,
    brute_force_dual,
    code_from_generators,
    component_dual,
    count_cyclic_codes,
    divisors_of_xn1,
    dual,
    dual_idempotent,
    enumerate_cyclic_codes,
    gray_vector,
    idempotent_generator,
    inner_products_vanish,
    bch_bound,
    local_ideal_choices,
    max_enum,
    principal_freeness,
    random_code,
    z4_freeness_report,
)
from ru4.factor import PreconditionError
from ru4.galois import gr_construct
from ru4.poly import R, Polynomial, ResiduePolynomial
from ru4.ring import pack


def rp(text, n):
    return ResiduePolynomial(n, Polynomial.parse(text))


def as_pairs(code):
    n = code.n
    return frozenset(tuple((int(w[j]), int(w[n + j])) for j in range(n)) for w in code.codewords())


def pairs_of(text, n):
    return tuple((c & 3, c >> 2) for c in rp(text, n).coeffs)


ALL3 = list(enumerate_cyclic_codes(3))


# --- construction examples ------------------------------------------------


def test_n5_example():
    C = code_from_generators(5, [rp("ux^2+2x+u", 5)])
    assert str(C.res.generator) == "2"
    assert C.res == CyclicCode(5, [rp("2x", 5)]).res
    g, p, a = C.canonical
    assert (str(g), str(p), str(a)) == ("2", "x^4+x", "2")
    assert C.canonical_code() == C
    rep = z4_freeness_report(C)
    assert not rep.C1_free
    assert rep.code == (4, 2) and not rep.code_free


def test_n7_principal_collapses():
    C = code_from_generators(7, [rp("x^3+2x^2+x+3", 7)])
    g, p, a = C.canonical
    assert str(g) == "x^3+2x^2+x+3" and p.is_zero() and a == g
    assert C.is_free() and C.free_rank == 4
    assert [str(b) for b in C.free_basis()][0] == "x^3+2x^2+x+3"
    assert C.size == 16**4


def test_u_multiple_has_zero_residue():
    C = code_from_generators(3, [rp("ux+3u", 3)])
    g, _, a = C.canonical
    assert g.is_zero() and str(a) == "x+3"
    U = code_from_generators(3, [rp("u", 3)])
    assert U.res.size == 1 and U.tor.size == 64 and U.size == 64
    assert CyclicCode.zero(3).size == 1
    assert CyclicCode.zero(3).min_distance() is None


def test_tor_contains_res():
    rng = random.Random(3)
    for n in (3, 5, 7):
        for _ in range(15):
            C = random_code(n, rng)
            assert C.tor.module.contains_module(C.res.module)
            assert C.size == C.res.size * C.tor.size


@pytest.mark.parametrize("n", [3, 5])
def test_canonical_round_trip(n):
    for C in enumerate_cyclic_codes(n):
        D = C.canonical_code()
        assert D == C
        g, p, a = C.canonical
        if not a.is_zero():
            assert p.lift().degree < a.lift().degree or p.is_zero() or C.tor.size < 4**n


def test_ideal_sets_match_closure_oracle():
    rng = random.Random(11)
    sample = rng.sample(ALL3, 15)
    for C in sample:
        gens = [tuple((c & 3, c >> 2) for c in g.coeffs) for g in C.generators]
        assert as_pairs(C) == oracles.ideal_closure(gens, 3)


def test_local_choice_counts():
    assert [len(local_ideal_choices(d)) for d in (1, 2, 3)] == [7, 9, 13]
    assert all(len(local_ideal_choices(d, "unit-line")) == 7 for d in (1, 2, 3))
    assert count_cyclic_codes(1) == 7
    assert count_cyclic_codes(3) == 63
    assert count_cyclic_codes(5) == 147
    assert count_cyclic_codes(7) == 1183
    assert count_cyclic_codes(7, "unit-line") == 343
    with pytest.raises(ValueError):
        local_ideal_choices(2, "some")


def test_n3_codes_distinct_and_classified():
    assert len(set(ALL3)) == 63
    for C in ALL3:
        assert C.is_shift_closed()
        assert C.log2_size == sum(loc.log2_size for loc in C.local_ideals)
        assert CyclicCode.from_local(3, C.local_ideals) == C


def test_n1_matches_additive_search():
    # every subset of R closed under + and multiplication by u is an ideal of R (n = 1)
    ideals = set()
    for mask in range(1 << 16):
        s = {e for i, e in enumerate(oracles.R_ELEMENTS) if mask >> i & 1}
        if (0, 0) not in s:
            continue
        if all(oracles.radd(x, y) in s for x in s for y in s) and all(oracles.rmul((0, 1), x) in s for x in s):
            ideals.add(frozenset(s))
    assert len(ideals) == 7
    assert {as_pairs(C) for C in enumerate_cyclic_codes(1)} == {frozenset(((a, b),) for a, b in s) for s in ideals}


# --- structural laws -----------------------------------------------------


def test_collapse_law():
    rng = random.Random(7)
    for n in (3, 5, 7):
        for _ in range(20):
            g = ResiduePolynomial(n, [rng.randrange(4) for _ in range(n)], R)
            p = ResiduePolynomial(n, [rng.randrange(4) for _ in range(n)], R)
            gp = g + p.scale_code(pack(0, 1))
            assert CyclicCode(n, [gp, g.scale_code(pack(0, 1))]) == CyclicCode(n, [gp])


def test_weight_identity():
    rng = random.Random(9)
    for n in (3, 5, 7):
        for _ in range(10):
            C = random_code(n, rng)
            if C.size == 1 or C.size > 1 << 20:
                continue
            _, _, a = C.canonical
            K = CyclicCode(n, [a.as_ring(R).scale_code(pack(0, 1))])
            assert C.min_distance() == K.min_distance()


def test_r_n_structure():
    C = CyclicCode.full(5)
    assert C.size == 16**5 and C.rank == 5 and C.ideal_generators == 1
    assert C.is_free() and C.free_rank == 5
    assert C.min_distance() == 1


# --- freeness --------------------------------------------------------------


def test_divisors_of_x7_free():
    divs = divisors_of_xn1(7)
    assert len(divs) == 8
    for g in divs:
        C = CyclicCode(7, [ResiduePolynomial(7, g)])
        assert C.is_free()
        assert C.free_rank == 7 - g.degree
        assert C.size == 16 ** (7 - g.degree)
        assert principal_freeness(ResiduePolynomial(7, g), 7)[0]
    for gen in ("2", "u", "2+u"):
        assert not CyclicCode(7, [rp(gen, 7)]).is_free()


def test_principal_freeness_associates():
    f = ResiduePolynomial(3, Polynomial.parse("x+3").scale(pack(1, 1)))
    free, g = principal_freeness(f, 3)
    assert free and str(g) == "x+3"
    assert CyclicCode(3, [f]).free_generator() == Polynomial.parse("x+3")
    assert principal_freeness(rp("x+1", 5), 5) == (False, None)
    assert principal_freeness(rp("2x+u", 5), 5) == (False, None)


def test_free_oracle_agrees_with_divisors():
    rng = random.Random(4)
    divs = {str(d) for d in divisors_of_xn1(5)}
    for _ in range(40):
        f = ResiduePolynomial(5, [(rng.randrange(4), rng.randrange(4)) for _ in range(5)], R)
        C = CyclicCode(5, [f])
        if C.is_free():
            assert str(C.free_generator()) in divs
            assert CyclicCode(5, [ResiduePolynomial(5, C.free_generator())]) == C


def test_z4_freeness_examples():
    C = CyclicCode(7, [rp("x^3+2x^2+x+3", 7), rp("ux^3+3ux^2+2ux+3u", 7)])
    rep = C.z4_freeness_report()
    assert rep.C1_free and rep.C2_free and rep.code_free
    assert rep.components_free_implies_free.status == "holds"
    z = CyclicCode.zero(3).z4_freeness_report()
    assert z.code == (0, 0) and z.code_free
    assert z.to_json()["code"] == {"z4": 0, "z2": 0, "free": True}


# --- duality ---------------------------------------------------------------


def test_dual_n3_exhaustive():
    agree_literal = 0
    for C in ALL3:
        D = dual(C)
        assert C.size * D.size == 16**3
        assert D.module == brute_force_dual(C)
        assert inner_products_vanish(C, D)
        agree_literal += component_dual(C) == D.module
    assert agree_literal < 63


def test_dual_against_pair_oracle():
    rng = random.Random(2)
    for C in rng.sample(ALL3, 6):
        assert as_pairs(dual(C)) == oracles.brute_dual(as_pairs(C), 3)


def test_dual_n5_sampled():
    rng = random.Random(5)
    for _ in range(8):
        C = random_code(5, rng)
        D = dual(C)
        assert C.size * D.size == 16**5
        assert D.module == brute_force_dual(C)
        assert dual(D) == C
    with pytest.raises(PreconditionError):
        brute_force_dual(CyclicCode.full(7))


def test_dual_trivial():
    assert dual(CyclicCode.full(3)) == CyclicCode.zero(3)
    assert dual(CyclicCode.zero(5)) == CyclicCode.full(5)


# --- idempotents -------------------------------------------------------------


def test_idempotent_examples():
    e = idempotent_generator(rp("x+3", 3), 3)
    assert str(e) == "x^2+x+2"
    assert str(dual_idempotent(e)) == "3x^2+3x+3"
    assert str(idempotent_generator(rp("1", 5), 5)) == "1"
    eu = idempotent_generator(CyclicCode(3, [rp("ux+3u", 3)]))
    assert eu == e.scale_code(pack(0, 1))
    with pytest.raises(PreconditionError):
        idempotent_generator(rp("x+1", 3), 3)
    with pytest.raises(PreconditionError):
        idempotent_generator(rp("2x+1+u", 3).scale_code(2), 3)


@pytest.mark.parametrize("n", [3, 7, 15])
def test_idempotent_laws(n):
    for g in divisors_of_xn1(n):
        gr = ResiduePolynomial(n, g)
        e = idempotent_generator(gr, n)
        assert e * e == e
        assert gr * e == gr
        if n < 15:
            assert CyclicCode(n, [e]) == CyclicCode(n, [gr])
        d = dual_idempotent(e)
        assert d * d == d


# --- distances, Gray map, BCH -----------------------------------------------


def test_lee_of_2u():
    C = CyclicCode(1, [rp("2u", 1)])
    assert C.min_distance("lee") == 4
    assert gray_vector([pack(2, 3)]) == (3, 1)
    with pytest.raises(ValueError):
        C.min_distance("taxicab")


def test_gray_image_lee_enumerator():
    C = CyclicCode(7, [rp("x^4+x^3+3x^2+2x+1", 7)])
    words = C.codewords()
    img = C.gray_image()
    assert len({tuple(r) for r in img.tolist()}) == C.size
    lee = np.array([oracles.lee_z4(k) for k in range(4)])
    from_img = np.bincount(lee[img].sum(axis=1))
    n = 7
    direct = np.bincount([oracles.lee_word([(int(w[j]), int(w[n + j])) for j in range(n)]) for w in words])
    assert from_img.tolist() == direct.tolist()
    img_mod = C.gray_module()
    assert img_mod.size == C.size
    assert {tuple(r) for r in img.tolist()} == {tuple(r) for r in img_mod.elements().tolist()}


def test_bch_examples():
    ctx = gr_construct(2)
    one = bch_bound(CyclicCode.full(3), ctx)
    assert one.bound == 1 and not one.root_exponents
    b = bch_bound(CyclicCode(3, [rp("x+3", 3)]), ctx)
    assert b.root_exponents == {0} and b.bound == 2 and b.literal_bound == 1
    assert CyclicCode(3, [rp("x+3", 3)]).min_distance() == 2


@pytest.mark.parametrize("n", [7, 15])
def test_bch_soundness(n):
    for g in divisors_of_xn1(n):
        C = CyclicCode(n, [ResiduePolynomial(n, g)])
        if C.size == 1 or C.size > 1 << 16:
            continue
        res = bch_bound(C)
        assert res.applicable
        assert res.bound <= C.min_distance()


# --- enumeration bound -------------------------------------------------------


def test_enumeration_bound(monkeypatch):
    C = CyclicCode.full(7)
    with pytest.raises(EnumerationLimitError):
        C.min_distance()
    with pytest.raises(EnumerationLimitError):
        C.codewords(limit=1000)
    monkeypatch.setenv("RU4_MAX_ENUM", "64")
    assert max_enum() == 64
    assert max_enum(10) == 10
    with pytest.raises(EnumerationLimitError):
        CyclicCode(3, [rp("x+3", 3)]).codewords()
    assert CyclicCode(3, [rp("u", 3)]).codewords().shape == (64, 6)
    monkeypatch.delenv("RU4_MAX_ENUM")
    assert max_enum() == 1 << 24


def test_chunked_enumeration_matches_full():
    C = CyclicCode(5, [rp("x+3", 5)])
    full = {tuple(r) for r in C.codewords().tolist()}
    chunks = [tuple(r) for b in C.iter_codeword_blocks(chunk=64) for r in b.tolist()]
    assert len(chunks) == len(full) == C.size and set(chunks) == full


def test_rank_reports():
    n = 7
    C = CyclicCode.from_form(n, "x^4+x^3+3x^2+2x+1", "1", "x+3")
    rep = C.rank_and_spanning()
    assert rep.form == "given" and rep.theorem_rank == 9
    assert rep.refined_applicable and rep.refined_rank == 6
    assert len(rep.spanning_set) == 6 and not rep.spanning_set_spans
    assert rep.oracle_rank == 7 == len(rep.minimal_generators)
    can = C.rank_and_spanning("canonical")
    assert can.refined_rank == 7 and can.spanning_set_spans and can.agrees
    with pytest.raises(ValueError):
        CyclicCode.full(3).rank_and_spanning("given")
    assert [loc.kind for loc in CyclicCode(n, [rp("2", n)]).local_ideals] == [LocalKind.TWO] * 3
