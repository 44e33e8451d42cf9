import random

import pytest

from surfacebraids.words import (GeneratorId, Word, WordSyntaxError, commutator,
                                 conj_lower, conj_upper, exponent_vector,
                                 format_word, invert, multiply, parse_word,
                                 reduce, substitute)


def x(i, e=1):
    return (GeneratorId("x", (i,)), e)


X1 = Word.gen(GeneratorId("x", (1,)))
X2 = Word.gen(GeneratorId("x", (2,)))
X3 = Word.gen(GeneratorId("x", (3,)))


def test_reduce_examples():
    assert reduce([x(1), x(1, -1)]).is_identity
    assert reduce([x(1), x(2), x(2, -1), x(1, -1)]).is_identity
    assert reduce([x(1), x(2), x(1, -1)]).letters == (x(1), x(2), x(1, -1))


def test_multiply_invert_examples():
    assert (X1 * ~X1).is_identity
    assert ~(X1 * X2) == ~X2 * ~X1
    assert multiply(X1 * X2, ~X2 * X3) == X1 * X3
    assert invert(X1) == X1 ** -1


def test_commutator_convention():
    # [a, b] = a^-1 b^-1 a b
    assert commutator(X1, X2).letters == (x(1, -1), x(2, -1), x(1), x(2))
    assert commutator(X1, X1).is_identity


def test_conjugation_conventions():
    # ^b a = b a b^-1 and a^b = b^-1 a b
    assert conj_upper(X2, X1).letters == (x(2), x(1), x(2, -1))
    assert conj_lower(X1, X2).letters == (x(2, -1), x(1), x(2))


def test_exponent_vector_examples():
    alphabet = (GeneratorId("x", (1,)), GeneratorId("x", (2,)))
    assert exponent_vector(X1 * X2 * X1, alphabet) == (2, 1)
    assert exponent_vector(commutator(X1 * X2, X2 * X1), alphabet) == (0, 0)
    assert exponent_vector(Word.identity(), alphabet) == (0, 0)
    with pytest.raises(ValueError):
        exponent_vector(X3, alphabet)


def test_substitute_examples():
    u, v = X2 * X3, X3 * ~X1
    mapping = {GeneratorId("x", (1,)): u, GeneratorId("x", (2,)): v}
    assert substitute(X1 * X2, mapping) == u * v
    ident = {GeneratorId("x", (i,)): Word.gen(GeneratorId("x", (i,)))
             for i in (1, 2, 3)}
    w = X1 * X2 * ~X1
    assert substitute(w, ident) == w
    with pytest.raises(ValueError):
        substitute(X1, {})


def test_generator_validation():
    with pytest.raises(WordSyntaxError):
        GeneratorId("tau", (2, 1))
    with pytest.raises(WordSyntaxError):
        GeneratorId("A", (3, 3))
    with pytest.raises(WordSyntaxError):
        GeneratorId("c", (1, 2))
    with pytest.raises(WordSyntaxError):
        GeneratorId("y", (1,))


def test_text_syntax_roundtrip():
    text = "a[2,1] b[1,1]^-1 t[1,2]"
    w = parse_word(text)
    assert format_word(w) == text
    assert parse_word("1").is_identity
    assert format_word(Word.identity()) == "1"
    assert parse_word("x[1]^3") == X1 * X1 * X1
    with pytest.raises(WordSyntaxError):
        parse_word("q[1]")


def _random_word(rng, size):
    return reduce([x(rng.randint(1, 4), rng.choice((1, -1)))
                   for _ in range(size)])


def test_reduce_idempotent_randomized():
    rng = random.Random(0)
    for _ in range(10000):
        raw = [x(rng.randint(1, 3), rng.choice((1, -1)))
               for _ in range(rng.randint(0, 12))]
        w = reduce(raw)
        assert reduce(w.letters) == w


def test_group_laws_randomized():
    rng = random.Random(1)
    for _ in range(10000):
        u = _random_word(rng, rng.randint(0, 8))
        v = _random_word(rng, rng.randint(0, 8))
        w = _random_word(rng, rng.randint(0, 8))
        assert (u * v) * w == u * (v * w)
        assert ~(~u) == u
        assert (u * ~u).is_identity


def test_exponent_vector_is_homomorphism_randomized():
    rng = random.Random(2)
    alphabet = tuple(GeneratorId("x", (i,)) for i in (1, 2, 3, 4))
    for _ in range(10000):
        u = _random_word(rng, rng.randint(0, 8))
        v = _random_word(rng, rng.randint(0, 8))
        lhs = exponent_vector(u * v, alphabet)
        rhs = tuple(a + b for a, b in zip(exponent_vector(u, alphabet),
                                          exponent_vector(v, alphabet)))
        assert lhs == rhs


def test_substitute_distributes_over_multiply():
    rng = random.Random(3)
    gens = [GeneratorId("x", (i,)) for i in (1, 2, 3, 4)]
    for _ in range(2000):
        mapping = {gid: _random_word(rng, rng.randint(0, 5)) for gid in gens}
        u = _random_word(rng, rng.randint(0, 8))
        v = _random_word(rng, rng.randint(0, 8))
        assert substitute(u * v, mapping) == \
            substitute(u, mapping) * substitute(v, mapping)
