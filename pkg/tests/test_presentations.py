import random

import pytest

from surfacebraids.nilpotent import evaluate_in_quotient
from surfacebraids.presentations import (ABT_FAMILIES, A_FAMILIES,
                                         PresentationError, SideConditionError,
                                         build_presentation,
                                         enumerate_instances, instantiate,
                                         translate, translate_back)
from surfacebraids.words import GeneratorId, Word, parse_word

GRID = [(n, g) for n in range(2, 6) for g in range(1, 4)]


def test_pure_closed_A_generators_example():
    pres = build_presentation("pure-closed-A", 2, 1)
    assert [repr(gid) for gid in pres.generators] == \
        ["A[1,3]", "A[2,3]", "A[1,4]", "A[2,4]", "A[3,4]"]


def test_pure_closed_abt_generators_example():
    pres = build_presentation("pure-closed-abt", 2, 1)
    assert [repr(gid) for gid in pres.generators] == \
        ["a[1,1]", "a[2,1]", "b[1,1]", "b[2,1]", "t[1,2]"]


@pytest.mark.parametrize("n,g", GRID)
def test_generator_counts_agree(n, g):
    expected = 2 * g * n + n * (n - 1) // 2
    for preset in ("pure-closed-A", "pure-closed-abt"):
        pres = build_presentation(preset, n, g)
        assert len(pres.generators) == expected


def test_parameter_validation():
    with pytest.raises(PresentationError):
        build_presentation("pure-closed-abt", 1, 1)
    with pytest.raises(PresentationError):
        build_presentation("pure-closed-A", 3, 0)
    with pytest.raises(PresentationError):
        build_presentation("surface-group", g=0)
    with pytest.raises(PresentationError):
        build_presentation("artin-braid", 0)
    with pytest.raises(PresentationError):
        build_presentation("septonion-group", 2, 2)


def test_surface_group_relator():
    pres = build_presentation("surface-group", g=2)
    assert len(pres.generators) == 4
    assert len(pres.relators) == 1
    # one commutator [c_i^-1, d_i] per handle, four letters each
    assert len(pres.relators[0]) == 4 * 2
    assert pres.relators[0] == parse_word(
        "c[1] d[1]^-1 c[1]^-1 d[1] c[2] d[2]^-1 c[2]^-1 d[2]")


def test_translate_examples():
    a13 = Word.gen(GeneratorId("A", (1, 3)))
    a34 = Word.gen(GeneratorId("A", (3, 4)))
    assert translate(a13, 2, 1) == parse_word("a[1,1]")
    assert translate(a34, 2, 1) == parse_word("t[1,2]")
    assert translate_back(parse_word("b[2,1]"), 2, 1) == \
        Word.gen(GeneratorId("A", (2, 4)))
    with pytest.raises(ValueError):
        translate(parse_word("a[1,1]"), 2, 1)
    with pytest.raises(ValueError):
        translate(Word.gen(GeneratorId("A", (5, 6))), 2, 1)


@pytest.mark.parametrize("n,g", GRID)
def test_translate_roundtrip_random_words(n, g):
    rng = random.Random(100 * n + g)
    gens = build_presentation("pure-closed-A", n, g).generators
    for _ in range(200):
        w = Word.of([(rng.choice(gens), rng.choice((1, -1)))
                     for _ in range(rng.randint(0, 10))])
        assert translate_back(translate(w, n, g), n, g) == w


def test_translate_is_bijection_and_homomorphism():
    n, g = 3, 2
    a_gens = build_presentation("pure-closed-A", n, g).generators
    abt_gens = build_presentation("pure-closed-abt", n, g).generators
    images = {translate(Word.gen(gid), n, g).letters[0][0] for gid in a_gens}
    assert images == set(abt_gens)
    rng = random.Random(7)
    for _ in range(200):
        u = Word.of([(rng.choice(a_gens), rng.choice((1, -1)))
                     for _ in range(rng.randint(0, 8))])
        v = Word.of([(rng.choice(a_gens), rng.choice((1, -1)))
                     for _ in range(rng.randint(0, 8))])
        assert translate(u * v, n, g) == translate(u, n, g) * translate(v, n, g)


def test_instantiate_er2_example():
    inst = instantiate("ER2", {"j": 1, "l": 2, "k": 1}, 2, 1)
    assert inst.lhs == parse_word("b[1,1] a[2,1] b[1,1]^-1")
    assert inst.rhs == parse_word("a[2,1] t[1,2]")


def test_instantiate_tr_example():
    inst = instantiate("TR", {"l": 1}, 2, 1)
    # with n = 2 and l = 1 the leading tau product is empty
    assert inst.lhs == parse_word("a[1,1] b[1,1]^-1 a[1,1]^-1 b[1,1]")
    assert inst.rhs == parse_word("t[1,2]^-1")


def test_instantiate_side_condition_violation():
    with pytest.raises(SideConditionError) as err:
        instantiate("PR1", {"i": 2, "j": 3, "r": 1, "s": 4}, 2, 1)
    assert "PR1" in str(err.value)
    with pytest.raises(SideConditionError):
        instantiate("ER2", {"j": 2, "l": 2, "k": 1}, 2, 1)
    with pytest.raises(SideConditionError):
        instantiate("II-tau", {"s": 2, "j": 1, "l": 3}, 3, 1)


def test_enumerate_examples():
    assert len(enumerate_instances("ER2", 2, 1)) == 1
    assert enumerate_instances("ER2", 2, 1)[0].index_dict == \
        {"j": 1, "l": 2, "k": 1}
    va = enumerate_instances("V-a", 3, 1)
    assert [(i.index_dict["j"], i.index_dict["l"]) for i in va] == \
        [(1, 2), (1, 3), (2, 3)]
    assert enumerate_instances("I-a", 4, 1) == []


@pytest.mark.parametrize("n,g", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2)])
def test_enumerated_instances_self_consistent(n, g):
    for family in ABT_FAMILIES + A_FAMILIES:
        for inst in enumerate_instances(family, n, g):
            again = instantiate(family, inst.index_dict, n, g)
            assert again == inst


def test_enumeration_is_duplicate_free():
    for family in ABT_FAMILIES + A_FAMILIES:
        insts = enumerate_instances(family, 4, 2)
        assert len({inst.indices for inst in insts}) == len(insts)


def test_relators_are_lhs_times_rhs_inverse():
    pres = build_presentation("pure-closed-abt", 3, 1)
    for inst, relator in zip(pres.instances, pres.relators):
        assert relator == inst.lhs * ~inst.rhs


def test_artin_presets():
    bn = build_presentation("artin-braid", 4)
    assert len(bn.generators) == 3
    assert len(bn.relators) == 2 + 1  # two braid relations, one commutation
    pn = build_presentation("artin-pure-braid", 3)
    assert len(pn.generators) == 3
    assert all(r for r in pn.relators)
    free = build_presentation("free", 2)
    assert len(free.generators) == 2 and not free.relators


@pytest.mark.parametrize("n,g", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_abt_relators_vanish_in_own_class2_quotient(n, g):
    pres = build_presentation("pure-closed-abt", n, g)
    for rel in pres.relators:
        assert evaluate_in_quotient(rel, pres, 2).is_trivial


@pytest.mark.parametrize("n,g", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_renamed_A_relators_are_abt_consequences(n, g):
    # the renaming carries the A relation set into consequences of the abt
    # one; the converse fails because ER2-A's side condition r < 2g skips
    # the top even row (see the note next to that family)
    pres_a = build_presentation("pure-closed-A", n, g)
    pres_abt = build_presentation("pure-closed-abt", n, g)
    for rel in pres_a.relators:
        assert evaluate_in_quotient(translate(rel, n, g), pres_abt, 2).is_trivial


def test_literal_A_side_conditions_miss_top_handle_conjugation():
    # documented asymmetry: the abt relation ^a[1,1] b[2,1] = ... is not a
    # class-2 consequence of the literally enumerated A relations at (2,1)
    pres_a = build_presentation("pure-closed-A", 2, 1)
    pres_abt = build_presentation("pure-closed-abt", 2, 1)
    er1 = instantiate("ER1", {"j": 1, "k": 1, "l": 2}, 2, 1)
    back = translate_back(er1.relator, 2, 1)
    assert not evaluate_in_quotient(back, pres_a, 2).is_trivial
    assert evaluate_in_quotient(er1.relator, pres_abt, 2).is_trivial
