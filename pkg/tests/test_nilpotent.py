import random

import pytest

from surfacebraids.nilpotent import (HallBasis, ResourceLimitError,
                                     abelian_invariants, collect_letters,
                                     determinant, evaluate_in_quotient,
                                     hall_collect, invariant_factors,
                                     lcs_quotients, left_kernel_basis, mobius,
                                     nf_index_word, smith_normal_form,
                                     witt_rank)
from surfacebraids.presentations import Presentation, build_presentation
from surfacebraids.words import GeneratorId, Word, commutator, parse_word

X = [GeneratorId("x", (i,)) for i in range(1, 5)]


# ---------------------------------------------------------------------------
# Smith normal form


def _mat_mul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def _check_snf(mat):
    d, u, v = smith_normal_form(mat)
    rows, cols = len(mat), len(mat[0]) if mat else 0
    if rows and cols:
        assert _mat_mul(_mat_mul(u, [list(r) for r in mat]), v) == d
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0
    diag = [d[i][i] for i in range(min(rows, cols))]
    for a, b in zip(diag, diag[1:]):
        if b:
            assert a != 0 and b % a == 0
        assert a >= 0 and b >= 0
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    return d


def test_snf_examples():
    d, _, _ = smith_normal_form([[2, 4], [6, 8]])
    assert d == [[2, 0], [0, 4]]
    d, _, _ = smith_normal_form([[1, 0], [0, 1]])
    assert d == [[1, 0], [0, 1]]
    d, _, _ = smith_normal_form([[0, 0], [0, 0]])
    assert d == [[0, 0], [0, 0]]


def test_snf_postconditions_randomized():
    rng = random.Random(4)
    for _ in range(400):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        _check_snf(mat)
    for _ in range(3):
        mat = [[rng.randint(-50, 50) for _ in range(40)] for _ in range(40)]
        _check_snf(mat)


def test_left_kernel_basis():
    rows = [[2, 0], [1, 0], [0, 3]]
    basis = left_kernel_basis(rows, 2)
    assert len(basis) == 1
    alpha = basis[0]
    assert [sum(a * r[c] for a, r in zip(alpha, rows)) for c in range(2)] == [0, 0]


def test_invariant_factors():
    assert invariant_factors([], 3) == (3, ())
    assert invariant_factors([[2, 0, 0], [0, 3, 0]], 3) == (1, ())
    assert invariant_factors([[2, 0], [0, 2]], 2) == (0, (2, 2))


# ---------------------------------------------------------------------------
# Witt formula


def test_mobius():
    assert [mobius(k) for k in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_witt_rank_examples():
    assert witt_rank(2, 1) == 2
    assert witt_rank(2, 3) == 2  # (2^3 - 2) / 3
    assert witt_rank(3, 2) == 3  # (3^2 - 3) / 2
    assert witt_rank(4, 3) == 20
    with pytest.raises(ValueError):
        witt_rank(0, 1)


def test_hall_basis_counts_match_witt():
    for m in range(1, 5):
        basis = HallBasis(m, 3)
        assert len(basis.weight2) == m * (m - 1) // 2 == witt_rank(m, 2)
        assert len(basis.weight3) == witt_rank(m, 3)


# ---------------------------------------------------------------------------
# collection, checked against a truncated Magnus expansion oracle


def _magnus(letters, deg=3):
    """Image of a word under x_i -> 1 + X_i in Z<<X>> truncated at deg."""
    def mul(p, q):
        out = {}
        for k1, c1 in p.items():
            for k2, c2 in q.items():
                if len(k1) + len(k2) <= deg:
                    key = k1 + k2
                    out[key] = out.get(key, 0) + c1 * c2
        return {k: c for k, c in out.items() if c}

    poly = {(): 1}
    for i, e in letters:
        if e == 1:
            factor = {(): 1, (i,): 1}
        else:
            factor = {(): 1, (i,): -1, (i, i): 1, (i, i, i): -1}
        poly = mul(poly, factor)
    return poly


def _random_letters(rng, m, size):
    return [(rng.randrange(m), rng.choice((1, -1))) for _ in range(size)]


@pytest.mark.parametrize("m,cls", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_collection_against_magnus_oracle(m, cls):
    # the normal-form word must equal the input in the free class-cls group;
    # the truncated Magnus expansion separates elements of that quotient
    rng = random.Random(10 * m + cls)
    deg = cls
    for _ in range(300):
        letters = _random_letters(rng, m, rng.randint(0, 8))
        exps = collect_letters(letters, cls)
        nf = nf_index_word(exps)
        assert _magnus(letters, deg) == _magnus(nf, deg)


def test_collect_spec_examples():
    alphabet = X[:2]
    w = Word.of([(X[1], 1), (X[0], 1)])  # x2 x1
    cw = hall_collect(w, alphabet, 2)
    assert cw.exponent((0,)) == 1
    assert cw.exponent((1,)) == 1
    assert cw.exponent((1, 0)) == 1
    assert hall_collect(Word.identity(), alphabet, 2).is_identity
    w3 = commutator(commutator(Word.gen(X[1]), Word.gen(X[0])), Word.gen(X[0]))
    assert hall_collect(w3, alphabet, 2).is_identity  # weight-3 truncation
    assert not hall_collect(w3, alphabet, 3).is_identity


@pytest.mark.parametrize("cls", [2, 3])
def test_collection_is_homomorphism(cls):
    rng = random.Random(20 + cls)
    for _ in range(300):
        u = _random_letters(rng, 3, rng.randint(0, 6))
        v = _random_letters(rng, 3, rng.randint(0, 6))
        combined = collect_letters(u + v, cls)
        product = collect_letters(
            nf_index_word(collect_letters(u, cls))
            + nf_index_word(collect_letters(v, cls)), cls)
        assert combined == product


# ---------------------------------------------------------------------------
# quotients of presented groups


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_free_group_ranks_match_witt(m):
    pres = build_presentation("free", m)
    quotients = lcs_quotients(pres, 3)
    assert quotients.rational_ranks == tuple(witt_rank(m, k) for k in (1, 2, 3))
    assert all(not q.torsion for q in quotients.quotients)


@pytest.mark.parametrize("n", [3, 4])
def test_artin_braid_lcs(n):
    pres = build_presentation("artin-braid", n)
    quotients = lcs_quotients(pres, 2)
    assert quotients.quotients[0].rank == 1
    assert quotients.quotients[0].torsion == ()
    assert quotients.quotients[1].is_trivial
    assert quotients.gamma_equals_next(2)


def test_surface_group_quotients():
    pres = build_presentation("surface-group", g=1)
    quotients = lcs_quotients(pres, 3)
    assert quotients.rational_ranks == (2, 0, 0)  # the group is Z^2
    assert abelian_invariants(build_presentation("surface-group", g=2)) == (4, ())


def test_abelianization_examples():
    assert abelian_invariants(build_presentation("artin-braid", 3)) == (1, ())
    assert abelian_invariants(build_presentation("pure-closed-abt", 2, 1)) == (4, ())


def _fp(gens, relators):
    return Presentation("free", len(gens), 0, tuple(gens), tuple(relators))


def test_torsion_quotients():
    x, y = X[:2]
    wx, wy = Word.gen(x), Word.gen(y)
    klein = _fp([x, y], [wx ** 2, wy ** 2, commutator(wx, wy)])
    q = lcs_quotients(klein, 2)
    assert (q.quotients[0].rank, q.quotients[0].torsion) == (0, (2, 2))
    assert q.quotients[1].is_trivial
    # quaternion group: Gamma_2/Gamma_3 is the order-2 center
    quat = _fp([x, y], [wx ** 4, wx ** 2 * wy ** -2, ~wy * wx * wy * wx])
    q = lcs_quotients(quat, 2)
    assert (q.quotients[0].rank, q.quotients[0].torsion) == (0, (2, 2))
    assert (q.quotients[1].rank, q.quotients[1].torsion) == (0, (2,))
    q3 = lcs_quotients(quat, 3)
    assert q3.quotients[2].is_trivial  # Gamma_3(Q8) = 1


def test_heisenberg_class3():
    # <x, y | [x,[x,y]], [y,[x,y]]>: gr = (2, 1, 0)
    x, y = X[:2]
    wx, wy = Word.gen(x), Word.gen(y)
    z = commutator(wx, wy)
    heis = _fp([x, y], [commutator(z, wx), commutator(z, wy)])
    q = lcs_quotients(heis, 3)
    assert q.rational_ranks == (2, 1, 0)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_two_strand_quotients_match_split_structure(g):
    # for two strands the kernel of the strand-forgetting map is free of
    # rank 2g and the extension is almost-direct, so the graded ranks are
    # the sum of the free-group and surface-group contributions
    abt = lcs_quotients(build_presentation("pure-closed-abt", 2, g), 2)
    surf = lcs_quotients(build_presentation("surface-group", g=g), 2)
    assert abt.quotients[0].rank == 4 * g
    assert abt.quotients[1].rank == witt_rank(2 * g, 2) + surf.quotients[1].rank
    assert not abt.quotients[1].torsion


def test_evaluate_in_quotient():
    pres = build_presentation("pure-closed-abt", 2, 1)
    for rel in pres.relators:
        assert evaluate_in_quotient(rel, pres, 2).is_trivial
    free = build_presentation("free", 2)
    img = evaluate_in_quotient(Word.gen(X[0]), free, 2)
    assert not img.is_trivial
    with pytest.raises(ValueError):
        evaluate_in_quotient(parse_word("x[9]"), free, 2)


def test_class3_resource_guard():
    pres = build_presentation("pure-closed-abt", 4, 2)  # 22 generators
    with pytest.raises(ResourceLimitError):
        lcs_quotients(pres, 3)


def test_class3_small_presented_group():
    pres = build_presentation("pure-closed-abt", 2, 1)
    q = lcs_quotients(pres, 3)
    assert q.quotients[0].rank == 4
    for rel in pres.relators:
        assert evaluate_in_quotient(rel, pres, 3).is_trivial
