"""Presentations of surface pure braid groups and auxiliary standard groups.

Two presentations of the pure braid group of a closed orientable surface of
genus g >= 1 on n >= 2 strands are built here:

* ``pure-closed-A``: generators ``A[i,j]`` with 1 <= i <= 2g+n-1,
  2g+1 <= j <= 2g+n, i < j, and relation families PR1-PR4, ER1-A, ER2-A and
  one TR-A relation per strand.

* ``pure-closed-abt``: generators ``a[j,k], b[j,k]`` (strand j, handle k)
  and ``t[p,q]`` (p < q), related to the first presentation by the renaming
  A[2r-1, 2g+j] = a[j,r], A[2r, 2g+j] = b[j,r], A[2g+i, 2g+j] = t[i,j].
  Its relation families are I-a ... V-tau, ER1, ER2 and TR.  The families
  share one index chain 1 <= s < p < j < r < l < q <= n; each family
  constrains exactly the index names that occur in its displayed equation
  (absent names are unconstrained), which is the maximal consistent reading.

Also provided: the one-relator surface group presentation, the standard
Artin presentations of the braid and pure braid groups, and free groups.
Relations lhs = rhs are stored as relators lhs * rhs^-1, freely reduced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .words import GeneratorId, Word, commutator, conj_lower, conj_upper

PRESETS = ("pure-closed-A", "pure-closed-abt", "surface-group",
           "artin-braid", "artin-pure-braid", "free")

ABT_FAMILIES = ("I-a", "I-b", "I-tau1", "I-tau2",
                "II-a", "II-b", "II-tau",
                "III-a1", "III-a2", "III-b1", "III-b2", "III-tau",
                "IV-a", "IV-b", "IV-tau",
                "V-a", "V-b", "V-tau",
                "ER1", "ER2", "TR")

A_FAMILIES = ("PR1", "PR2", "PR3", "PR4", "ER1-A", "ER2-A", "TR-A")

FAMILIES = ABT_FAMILIES + A_FAMILIES


class PresentationError(ValueError):
    """Parameter out of range for a preset."""


class SideConditionError(ValueError):
    """An index assignment violates a relation family's side condition."""


def _a(j: int, k: int) -> GeneratorId:
    return GeneratorId("a", (j, k))


def _b(j: int, k: int) -> GeneratorId:
    return GeneratorId("b", (j, k))


def _t(p: int, q: int) -> GeneratorId:
    return GeneratorId("tau", (p, q))


def _A(i: int, j: int) -> GeneratorId:
    return GeneratorId("A", (i, j))


def _gen_word(gid: GeneratorId, exp: int = 1) -> Word:
    return Word.gen(gid, exp)


def _prod(gids: list[GeneratorId]) -> Word:
    out = Word.identity()
    for gid in gids:
        out = out * Word.gen(gid)
    return out


def _c_gen(c: str, j: int, k: int) -> GeneratorId:
    if c == "a":
        return _a(j, k)
    if c == "b":
        return _b(j, k)
    raise SideConditionError(f"target variant must be 'a' or 'b', got {c!r}")


@dataclass(frozen=True)
class RelationInstance:
    """One fully indexed relation lhs = rhs of a presentation family."""

    family: str
    indices: tuple[tuple[str, object], ...]
    lhs: Word
    rhs: Word

    @property
    def index_dict(self) -> dict:
        return dict(self.indices)

    @property
    def relator(self) -> Word:
        return self.lhs * ~self.rhs

    def __repr__(self) -> str:
        idx = ",".join(f"{k}={v}" for k, v in self.indices)
        return f"{self.family}({idx})"


def _freeze(indices: dict) -> tuple[tuple[str, object], ...]:
    return tuple(sorted(indices.items()))


# ---------------------------------------------------------------------------
# abt relation families


def _require(cond: bool, family: str, message: str) -> None:
    if not cond:
        raise SideConditionError(f"{family}: side condition violated: {message}")


def _chk_strand(family: str, n: int, **vals: int) -> None:
    for name, v in vals.items():
        _require(1 <= v <= n, family, f"strand index {name}={v} outside 1..{n}")


def _chk_handle(family: str, g: int, **vals: int) -> None:
    for name, v in vals.items():
        _require(1 <= v <= g, family, f"handle index {name}={v} outside 1..{g}")


def _abt_conj_instance(family: str, idx: dict, n: int, g: int) -> tuple[Word, Word]:
    """Return (lhs, rhs) for the conjugation-style abt families."""
    if family in ("I-a", "I-b"):
        j, k, l, m, c = idx["j"], idx["k"], idx["l"], idx["m"], idx["c"]
        _chk_strand(family, n, j=j, l=l)
        _chk_handle(family, g, k=k, m=m)
        _require(j < l, family, f"needs j < l, got j={j}, l={l}")
        _require(m < k, family, f"needs m < k, got m={m}, k={k}")
        conj = _a(j, k) if family == "I-a" else _b(j, k)
        target = _c_gen(c, l, m)
        return conj_upper(_gen_word(conj), _gen_word(target)), _gen_word(target)

    if family == "I-tau1":
        s, j, l, m, c = idx["s"], idx["j"], idx["l"], idx["m"], idx["c"]
        _chk_strand(family, n, s=s, j=j, l=l)
        _chk_handle(family, g, m=m)
        _require(s < j < l, family, f"needs s < j < l, got s={s}, j={j}, l={l}")
        target = _c_gen(c, l, m)
        return conj_upper(_gen_word(_t(s, j)), _gen_word(target)), _gen_word(target)

    if family == "I-tau2":
        s, p, j, l = idx["s"], idx["p"], idx["j"], idx["l"]
        _chk_strand(family, n, s=s, p=p, j=j, l=l)
        _require(s < p < j < l, family,
                 f"needs s < p < j < l, got s={s}, p={p}, j={j}, l={l}")
        target = _t(s, l)
        return conj_upper(_gen_word(_t(p, j)), _gen_word(target)), _gen_word(target)

    if family in ("II-a", "II-b"):
        j, k, l = idx["j"], idx["k"], idx["l"]
        _chk_strand(family, n, j=j, l=l)
        _chk_handle(family, g, k=k)
        _require(j < l, family, f"needs j < l, got j={j}, l={l}")
        conj = _a(j, k) if family == "II-a" else _b(j, k)
        target = _a(l, k) if family == "II-a" else _b(l, k)
        rhs = conj_lower(_gen_word(target), _gen_word(_t(j, l)))
        return conj_upper(_gen_word(conj), _gen_word(target)), rhs

    if family == "II-tau":
        s, j, l = idx["s"], idx["j"], idx["l"]
        _chk_strand(family, n, s=s, j=j, l=l)
        _require(s < j < l, family, f"needs s < j < l, got s={s}, j={j}, l={l}")
        rhs = conj_lower(_gen_word(_t(s, l)), _gen_word(_t(j, l)))
        return conj_upper(_gen_word(_t(s, j)), _gen_word(_t(s, l))), rhs

    if family in ("III-a1", "III-b1"):
        j, k, l, m, c = idx["j"], idx["k"], idx["l"], idx["m"], idx["c"]
        _chk_strand(family, n, j=j, l=l)
        _chk_handle(family, g, k=k, m=m)
        _require(j < l, family, f"needs j < l, got j={j}, l={l}")
        _require(k < m, family, f"needs k < m, got k={k}, m={m}")
        conj = _a(j, k) if family == "III-a1" else _b(j, k)
        inner = _a(l, k) if family == "III-a1" else _b(l, k)
        target = _c_gen(c, l, m)
        wrap = commutator(_gen_word(_t(j, l)), _gen_word(inner))
        return (conj_upper(_gen_word(conj), _gen_word(target)),
                conj_upper(wrap, _gen_word(target)))

    if family in ("III-a2", "III-b2"):
        s, j, l, k = idx["s"], idx["j"], idx["l"], idx["k"]
        _chk_strand(family, n, s=s, j=j, l=l)
        _chk_handle(family, g, k=k)
        _require(s < j < l, family, f"needs s < j < l, got s={s}, j={j}, l={l}")
        conj = _a(j, k) if family == "III-a2" else _b(j, k)
        inner = _a(l, k) if family == "III-a2" else _b(l, k)
        wrap = commutator(_gen_word(_t(j, l)), _gen_word(inner))
        return (conj_upper(_gen_word(conj), _gen_word(_t(s, l))),
                conj_upper(wrap, _gen_word(_t(s, l))))

    if family == "III-tau":
        s, p, j, l = idx["s"], idx["p"], idx["j"], idx["l"]
        _chk_strand(family, n, s=s, p=p, j=j, l=l)
        _require(s < p < j < l, family,
                 f"needs s < p < j < l, got s={s}, p={p}, j={j}, l={l}")
        wrap = commutator(_gen_word(_t(j, l)), _gen_word(_t(s, l)))
        return (conj_upper(_gen_word(_t(s, j)), _gen_word(_t(p, l))),
                conj_upper(wrap, _gen_word(_t(p, l))))

    if family in ("IV-a", "IV-b"):
        j, k, r, l = idx["j"], idx["k"], idx["r"], idx["l"]
        _chk_strand(family, n, j=j, r=r, l=l)
        _chk_handle(family, g, k=k)
        _require(j < r < l, family, f"needs j < r < l, got j={j}, r={r}, l={l}")
        conj = _a(j, k) if family == "IV-a" else _b(j, k)
        target = _t(r, l)
        return conj_upper(_gen_word(conj), _gen_word(target)), _gen_word(target)

    if family == "IV-tau":
        p, j, r, l = idx["p"], idx["j"], idx["r"], idx["l"]
        _chk_strand(family, n, p=p, j=j, r=r, l=l)
        _require(p < j < r < l, family,
                 f"needs p < j < r < l, got p={p}, j={j}, r={r}, l={l}")
        target = _t(r, l)
        return conj_upper(_gen_word(_t(p, j)), _gen_word(target)), _gen_word(target)

    if family in ("V-a", "V-b"):
        j, k, l = idx["j"], idx["k"], idx["l"]
        _chk_strand(family, n, j=j, l=l)
        _chk_handle(family, g, k=k)
        _require(j < l, family, f"needs j < l, got j={j}, l={l}")
        conj = _a(j, k) if family == "V-a" else _b(j, k)
        inner = _a(l, k) if family == "V-a" else _b(l, k)
        rhs = commutator(_gen_word(_t(j, l)), _gen_word(inner)) * _gen_word(_t(j, l))
        return conj_upper(_gen_word(conj), _gen_word(_t(j, l))), rhs

    if family == "V-tau":
        s, j, l = idx["s"], idx["j"], idx["l"]
        _chk_strand(family, n, s=s, j=j, l=l)
        _require(s < j < l, family, f"needs s < j < l, got s={s}, j={j}, l={l}")
        rhs = (commutator(_gen_word(_t(j, l)), _gen_word(_t(s, l)))
               * _gen_word(_t(j, l)))
        return conj_upper(_gen_word(_t(s, j)), _gen_word(_t(j, l))), rhs

    if family == "ER1":
        j, k, l = idx["j"], idx["k"], idx["l"]
        _chk_strand(family, n, j=j, l=l)
        _chk_handle(family, g, k=k)
        _require(j < l, family, f"needs j < l, got j={j}, l={l}")
        rhs = (_gen_word(_t(j, l), -1) * _gen_word(_b(l, k))
               * commutator(_gen_word(_a(l, k)), _gen_word(_t(j, l))))
        return conj_upper(_gen_word(_a(j, k)), _gen_word(_b(l, k))), rhs

    if family == "ER2":
        j, k, l = idx["j"], idx["k"], idx["l"]
        _chk_strand(family, n, j=j, l=l)
        _chk_handle(family, g, k=k)
        _require(j < l, family, f"needs j < l, got j={j}, l={l}")
        rhs = _gen_word(_a(l, k)) * _gen_word(_t(j, l))
        return conj_upper(_gen_word(_b(j, k)), _gen_word(_a(l, k))), rhs

    if family == "TR":
        l = idx["l"]
        _chk_strand(family, n, l=l)
        lhs = Word.identity()
        for i in range(1, g + 1):
            lhs = lhs * commutator(_gen_word(_a(l, i), -1), _gen_word(_b(l, i)))
        prod = Word.identity()
        for w in range(1, l):
            prod = prod * _gen_word(_t(w, l))
        for d in range(l + 1, n + 1):
            prod = prod * _gen_word(_t(l, d))
        return lhs, ~prod

    raise SideConditionError(f"unknown abt family {family!r}")


def _abt_enumerate(family: str, n: int, g: int) -> Iterator[dict]:
    strands = range(1, n + 1)
    handles = range(1, g + 1)
    if family in ("I-a", "I-b"):
        for j, l in itertools.combinations(strands, 2):
            for m, k in itertools.combinations(handles, 2):
                for c in ("a", "b"):
                    yield {"j": j, "k": k, "l": l, "m": m, "c": c}
    elif family == "I-tau1":
        for s, j, l in itertools.combinations(strands, 3):
            for m in handles:
                for c in ("a", "b"):
                    yield {"s": s, "j": j, "l": l, "m": m, "c": c}
    elif family == "I-tau2":
        for s, p, j, l in itertools.combinations(strands, 4):
            yield {"s": s, "p": p, "j": j, "l": l}
    elif family in ("II-a", "II-b", "V-a", "V-b", "ER1", "ER2"):
        for j, l in itertools.combinations(strands, 2):
            for k in handles:
                yield {"j": j, "k": k, "l": l}
    elif family == "II-tau":
        for s, j, l in itertools.combinations(strands, 3):
            yield {"s": s, "j": j, "l": l}
    elif family in ("III-a1", "III-b1"):
        for j, l in itertools.combinations(strands, 2):
            for k, m in itertools.combinations(handles, 2):
                for c in ("a", "b"):
                    yield {"j": j, "k": k, "l": l, "m": m, "c": c}
    elif family in ("III-a2", "III-b2"):
        for s, j, l in itertools.combinations(strands, 3):
            for k in handles:
                yield {"s": s, "j": j, "l": l, "k": k}
    elif family == "III-tau":
        for s, p, j, l in itertools.combinations(strands, 4):
            yield {"s": s, "p": p, "j": j, "l": l}
    elif family in ("IV-a", "IV-b"):
        for j, r, l in itertools.combinations(strands, 3):
            for k in handles:
                yield {"j": j, "k": k, "r": r, "l": l}
    elif family == "IV-tau":
        for p, j, r, l in itertools.combinations(strands, 4):
            yield {"p": p, "j": j, "r": r, "l": l}
    elif family == "V-tau":
        for s, j, l in itertools.combinations(strands, 3):
            yield {"s": s, "j": j, "l": l}
    elif family == "TR":
        for l in strands:
            yield {"l": l}
    else:
        raise SideConditionError(f"unknown abt family {family!r}")


# ---------------------------------------------------------------------------
# A-alphabet relation families


def _valid_A(i: int, j: int, n: int, g: int) -> bool:
    return 1 <= i < j and 2 * g + 1 <= j <= 2 * g + n and i <= 2 * g + n - 1


def _chk_A(family: str, n: int, g: int, **pairs) -> None:
    for name, (i, j) in pairs.items():
        _require(_valid_A(i, j, n, g), family,
                 f"A[{i},{j}] (from {name}) is not a generator for n={n}, g={g}")


def _a_instance(family: str, idx: dict, n: int, g: int) -> tuple[Word, Word]:
    if family == "PR1":
        i, j, r, s = idx["i"], idx["j"], idx["r"], idx["s"]
        _chk_A(family, n, g, conj=(i, j), target=(r, s))
        ok = (i < j < r < s) or (r + 1 < i < j < s) or (
            i == r + 1 < j < s and ((r % 2 == 0 and r < 2 * g) or r > 2 * g))
        _require(ok, family,
                 "needs (i<j<r<s) or (r+1<i<j<s) or "
                 "(i=r+1<j<s with r even and r<2g, or r>2g); "
                 f"got i={i}, j={j}, r={r}, s={s}")
        lhs = conj_lower(_gen_word(_A(r, s)), _gen_word(_A(i, j)))
        return lhs, _gen_word(_A(r, s))

    if family == "PR2":
        i, j, s = idx["i"], idx["j"], idx["s"]
        _chk_A(family, n, g, conj=(i, j), target=(j, s), img=(i, s))
        _require(i < j < s, family, f"needs i < j < s, got i={i}, j={j}, s={s}")
        lhs = conj_lower(_gen_word(_A(j, s)), _gen_word(_A(i, j)))
        rhs = _prod([_A(i, s), _A(j, s)]) * _gen_word(_A(i, s), -1)
        return lhs, rhs

    if family == "PR3":
        i, j, s = idx["i"], idx["j"], idx["s"]
        _chk_A(family, n, g, conj=(i, j), target=(i, s), img=(j, s))
        _require(i < j < s, family, f"needs i < j < s, got i={i}, j={j}, s={s}")
        lhs = conj_lower(_gen_word(_A(i, s)), _gen_word(_A(i, j)))
        rhs = (_prod([_A(i, s), _A(j, s), _A(i, s)])
               * _gen_word(_A(j, s), -1) * _gen_word(_A(i, s), -1))
        return lhs, rhs

    if family == "PR4":
        i, j, r, s = idx["i"], idx["j"], idx["r"], idx["s"]
        _chk_A(family, n, g, conj=(i, j), target=(r, s))
        ok = (i + 1 < r < j < s) or (
            i + 1 == r < j < s and ((r % 2 == 1 and r < 2 * g) or r > 2 * g))
        _require(ok, family,
                 "needs (i+1<r<j<s) or "
                 "(i+1=r<j<s with r odd and r<2g, or r>2g); "
                 f"got i={i}, j={j}, r={r}, s={s}")
        lhs = conj_lower(_gen_word(_A(r, s)), _gen_word(_A(i, j)))
        w = _prod([_A(i, s), _A(j, s)]) * _gen_word(_A(i, s), -1) * _gen_word(_A(j, s), -1)
        rhs = w * _gen_word(_A(r, s)) * ~w
        return lhs, rhs

    if family == "ER1-A":
        r, j, s = idx["r"], idx["j"], idx["s"]
        _require(r % 2 == 1 and r < 2 * g, family,
                 f"needs r odd and r < 2g, got r={r}, g={g}")
        _require(j < s, family, f"needs j < s, got j={j}, s={s}")
        _chk_A(family, n, g, conj=(r + 1, j), target=(r, s))
        lhs = conj_lower(_gen_word(_A(r, s)), _gen_word(_A(r + 1, j)))
        rhs = (_prod([_A(r, s), _A(r + 1, s)])
               * _gen_word(_A(j, s), -1) * _gen_word(_A(r + 1, s), -1))
        return lhs, rhs

    if family == "ER2-A":
        # The stated side condition r < 2g never admits the top even row
        # r = 2g, so the a-on-b conjugation of the last handle has no ER2-A
        # instance.  Those instances are true relations (their renamings are
        # consequences of the abt relation set), and without them the two
        # presets' low-class nilpotent quotients differ, e.g. at n=2, g=1
        # this preset yields gr_2 of rank 2 while pure-closed-abt yields the
        # rank-1 value consistent with the semidirect splitting.  The
        # condition is kept literally; pure-closed-abt carries the full
        # relation table and is what the verification suites run on.
        r, j, s = idx["r"], idx["j"], idx["s"]
        _require(r % 2 == 0 and r < 2 * g, family,
                 f"needs r even and r < 2g, got r={r}, g={g}")
        _require(j < s, family, f"needs j < s, got j={j}, s={s}")
        _chk_A(family, n, g, conj=(r - 1, j), target=(r, s))
        lhs = conj_lower(_gen_word(_A(r, s)), _gen_word(_A(r - 1, j)))
        rhs = (_prod([_A(r - 1, s), _A(j, s)]) * _gen_word(_A(r - 1, s), -1)
               * _prod([_A(r, s), _A(j, s), _A(r - 1, s)])
               * _gen_word(_A(j, s), -1) * _gen_word(_A(r - 1, s), -1))
        return lhs, rhs

    if family == "TR-A":
        k = idx["k"]
        _require(1 <= k <= n, family, f"strand index k={k} outside 1..{n}")
        lhs = Word.identity()
        for i in range(1, g + 1):
            lhs = lhs * commutator(_gen_word(_A(2 * i - 1, 2 * g + k), -1),
                                   _gen_word(_A(2 * i, 2 * g + k)))
        lhs = ~lhs
        rhs = Word.identity()
        for l in range(2 * g + 1, 2 * g + k):
            rhs = rhs * _gen_word(_A(l, 2 * g + k))
        for j in range(2 * g + k + 1, 2 * g + n + 1):
            rhs = rhs * _gen_word(_A(2 * g + k, j))
        return lhs, rhs

    raise SideConditionError(f"unknown A family {family!r}")


def _a_enumerate(family: str, n: int, g: int) -> Iterator[dict]:
    gens = [(i, j) for j in range(2 * g + 1, 2 * g + n + 1)
            for i in range(1, j)]
    if family in ("PR1", "PR4"):
        for (i, j), (r, s) in itertools.product(gens, gens):
            try:
                _a_instance(family, {"i": i, "j": j, "r": r, "s": s}, n, g)
            except SideConditionError:
                continue
            yield {"i": i, "j": j, "r": r, "s": s}
    elif family in ("PR2", "PR3"):
        for j in range(2 * g + 1, 2 * g + n + 1):
            for s in range(j + 1, 2 * g + n + 1):
                for i in range(1, j):
                    yield {"i": i, "j": j, "s": s}
    elif family == "ER1-A":
        for r in range(1, 2 * g, 2):
            for j in range(2 * g + 1, 2 * g + n + 1):
                for s in range(j + 1, 2 * g + n + 1):
                    yield {"r": r, "j": j, "s": s}
    elif family == "ER2-A":
        for r in range(2, 2 * g, 2):
            for j in range(2 * g + 1, 2 * g + n + 1):
                for s in range(j + 1, 2 * g + n + 1):
                    yield {"r": r, "j": j, "s": s}
    elif family == "TR-A":
        for k in range(1, n + 1):
            yield {"k": k}
    else:
        raise SideConditionError(f"unknown A family {family!r}")


# ---------------------------------------------------------------------------
# public API


def instantiate(family: str, indices: dict, n: int, g: int) -> RelationInstance:
    """Build one relation instance, checking the family's side conditions."""
    if family in ABT_FAMILIES:
        lhs, rhs = _abt_conj_instance(family, indices, n, g)
    elif family in A_FAMILIES:
        lhs, rhs = _a_instance(family, indices, n, g)
    else:
        raise SideConditionError(f"unknown family {family!r}")
    return RelationInstance(family, _freeze(indices), lhs, rhs)


def enumerate_instances(family: str, n: int, g: int) -> list[RelationInstance]:
    """All valid instances of a family, in deterministic index order."""
    if family in ABT_FAMILIES:
        it = _abt_enumerate(family, n, g)
    elif family in A_FAMILIES:
        it = _a_enumerate(family, n, g)
    else:
        raise SideConditionError(f"unknown family {family!r}")
    return [instantiate(family, idx, n, g) for idx in it]


@dataclass(frozen=True)
class Presentation:
    preset: str
    n: int
    g: int
    generators: tuple[GeneratorId, ...]
    relators: tuple[Word, ...]
    instances: tuple[RelationInstance, ...] = ()

    def __repr__(self) -> str:
        return (f"Presentation({self.preset}, n={self.n}, g={self.g}, "
                f"{len(self.generators)} generators, {len(self.relators)} relators)")


def abt_generators(n: int, g: int) -> tuple[GeneratorId, ...]:
    gens = [_a(j, k) for j in range(1, n + 1) for k in range(1, g + 1)]
    gens += [_b(j, k) for j in range(1, n + 1) for k in range(1, g + 1)]
    gens += [_t(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    return tuple(sorted(gens, key=GeneratorId.sort_key))


def a_generators(n: int, g: int) -> tuple[GeneratorId, ...]:
    # grouped per strand column j, ascending i within a column
    return tuple(_A(i, j) for j in range(2 * g + 1, 2 * g + n + 1)
                 for i in range(1, j))


_CACHE: dict[tuple[str, int, int], Presentation] = {}


def build_presentation(preset: str, n: int = 0, g: int = 0) -> Presentation:
    """Construct a preset presentation with the full relator enumeration."""
    key = (preset, n, g)
    if key in _CACHE:
        return _CACHE[key]
    pres = _build(preset, n, g)
    _CACHE[key] = pres
    return pres


def _build(preset: str, n: int, g: int) -> Presentation:
    if preset == "pure-closed-abt":
        if n < 2 or g < 1:
            raise PresentationError(f"{preset} requires n >= 2 and g >= 1")
        instances = []
        for family in ABT_FAMILIES:
            instances.extend(enumerate_instances(family, n, g))
        return Presentation(preset, n, g, abt_generators(n, g),
                            tuple(inst.relator for inst in instances),
                            tuple(instances))

    if preset == "pure-closed-A":
        if n < 2 or g < 1:
            raise PresentationError(f"{preset} requires n >= 2 and g >= 1")
        instances = []
        for family in A_FAMILIES:
            instances.extend(enumerate_instances(family, n, g))
        return Presentation(preset, n, g, a_generators(n, g),
                            tuple(inst.relator for inst in instances),
                            tuple(instances))

    if preset == "surface-group":
        if g < 1:
            raise PresentationError("surface-group requires g >= 1")
        gens = tuple(GeneratorId("c", (k,)) for k in range(1, g + 1)) + \
            tuple(GeneratorId("d", (k,)) for k in range(1, g + 1))
        rel = Word.identity()
        for i in range(1, g + 1):
            rel = rel * commutator(Word.gen(GeneratorId("c", (i,)), -1),
                                   Word.gen(GeneratorId("d", (i,))))
        return Presentation(preset, n, g, gens, (rel,))

    if preset == "artin-braid":
        if n < 1:
            raise PresentationError("artin-braid requires n >= 1")
        sig = [GeneratorId("sigma", (i,)) for i in range(1, n)]
        relators = []
        for i in range(len(sig) - 1):
            u, v = Word.gen(sig[i]), Word.gen(sig[i + 1])
            relators.append(u * v * u * ~(v * u * v))
        for i in range(len(sig)):
            for j in range(i + 2, len(sig)):
                u, v = Word.gen(sig[i]), Word.gen(sig[j])
                relators.append(commutator(u, v))
        return Presentation(preset, n, g, tuple(sig), tuple(relators))

    if preset == "artin-pure-braid":
        if n < 1:
            raise PresentationError("artin-pure-braid requires n >= 1")
        # Thm-style conjugation relation families at genus 0, without the
        # closed-surface TR relation: the classical pure braid presentation.
        instances = []
        for family in ("PR1", "PR2", "PR3", "PR4"):
            instances.extend(enumerate_instances(family, n, 0))
        gens = tuple(_A(i, j) for j in range(1, n + 1) for i in range(1, j))
        return Presentation(preset, n, g, gens,
                            tuple(inst.relator for inst in instances),
                            tuple(instances))

    if preset == "free":
        if n < 0:
            raise PresentationError("free requires n >= 0")
        gens = tuple(GeneratorId("x", (i,)) for i in range(1, n + 1))
        return Presentation(preset, n, g, gens, ())

    raise PresentationError(f"unknown preset {preset!r}")


# ---------------------------------------------------------------------------
# renaming between the two pure-closed alphabets


def _translate_gen(gid: GeneratorId, n: int, g: int) -> GeneratorId:
    if gid.kind != "A":
        raise ValueError(f"letter {gid!r} outside the A-alphabet")
    i, j = gid.indices
    if not _valid_A(i, j, n, g):
        raise ValueError(f"letter {gid!r} outside the A-alphabet for n={n}, g={g}")
    if i > 2 * g:
        return _t(i - 2 * g, j - 2 * g)
    if i % 2 == 1:
        return _a(j - 2 * g, (i + 1) // 2)
    return _b(j - 2 * g, i // 2)


def _translate_gen_back(gid: GeneratorId, n: int, g: int) -> GeneratorId:
    if gid.kind == "a":
        j, r = gid.indices
        out = _A(2 * r - 1, 2 * g + j)
    elif gid.kind == "b":
        j, r = gid.indices
        out = _A(2 * r, 2 * g + j)
    elif gid.kind == "tau":
        p, q = gid.indices
        out = _A(2 * g + p, 2 * g + q)
    else:
        raise ValueError(f"letter {gid!r} outside the abt alphabet")
    if not _valid_A(out.indices[0], out.indices[1], n, g):
        raise ValueError(f"letter {gid!r} outside the abt alphabet for n={n}, g={g}")
    return out


def translate(w: Word, n: int, g: int) -> Word:
    """Rename an A-alphabet word to the abt alphabet, letter by letter."""
    return Word.of((_translate_gen(gid, n, g), e) for gid, e in w.letters)


def translate_back(w: Word, n: int, g: int) -> Word:
    """Rename an abt-alphabet word to the A alphabet, letter by letter."""
    return Word.of((_translate_gen_back(gid, n, g), e) for gid, e in w.letters)
