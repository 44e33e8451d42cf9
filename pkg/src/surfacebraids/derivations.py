"""Replay and verify step-by-step word derivations in presented groups.

A derivation script proves an identity lhs = rhs by transforming a start
word into a target word through auditable steps:

* ``apply-relation``: splice one side of a fully indexed relation instance
  for the other at a stated letter offset.  The matched side must occur
  literally; the splice is not auto-reduced, so positions stay stable.
  A step may be ``inverted``, matching the inverse of a side and splicing
  the inverse of the other (sound: u = v iff u^-1 = v^-1).
* ``free-reduce``: cancel the adjacent inverse pair at a stated position,
  or fully reduce the word when no position is given.
* ``free-expand``: insert a cancelling pair x x^-1 at a stated position.
  This is the inverse of a single cancellation and is what lets a script
  conjugate a product letter by letter.
* ``substitute-named``: apply a named abbreviation.  ``tau-comm`` rewrites
  between t[p,q] and the commutator word a[q,g]^-1 b[p,g] a[q,g] b[p,g]^-1
  (a consequence of ER2, verified by its own bundled script); ``T``,
  ``sc`` and ``sd`` are checkpoints asserting that the subword at the
  position equals the named definition.

The built-in suites bundle machine-generated scripts for the product
identities behind the section construction (lemma41-1, lemma41-2,
identity-A, identity-B), the commutator expression of the t[1,l]
generators (tau-gamma2), and the vanishing of the section image of the
surface relation (splitting).
"""

from __future__ import annotations

import dataclasses
import itertools
import json
from dataclasses import dataclass

from .presentations import SideConditionError, build_presentation, instantiate
from .words import (GeneratorId, Letter, Word, format_letter, format_word,
                    parse_letter, parse_word, reduce_letters)

STEP_KINDS = ("apply-relation", "free-reduce", "free-expand", "substitute-named")
SUITES = ("lemma41-1", "lemma41-2", "identity-A", "identity-B",
          "tau-gamma2", "splitting")


class StepError(ValueError):
    """A rewrite step does not apply at its stated position."""


@dataclass(frozen=True)
class Ambient:
    preset: str
    n: int
    g: int

    @property
    def presentation(self):
        return build_presentation(self.preset, self.n, self.g)


@dataclass(frozen=True)
class RewriteStep:
    kind: str
    family: str | None = None
    indices: tuple[tuple[str, object], ...] | None = None
    direction: str | None = None  # "lr" or "rl"
    position: int | None = None
    letter: Letter | None = None  # free-expand payload
    inverted: bool = False
    name: str | None = None  # substitute-named abbreviation

    @property
    def index_dict(self) -> dict:
        return dict(self.indices or ())

    def shifted(self, offset: int) -> "RewriteStep":
        if self.position is None:
            raise StepError("cannot offset a step without a position")
        return dataclasses.replace(self, position=self.position + offset)


def _freeze(indices: dict | None):
    return None if indices is None else tuple(sorted(indices.items()))


def step_apply(family: str, indices: dict, direction: str, position: int,
               inverted: bool = False) -> RewriteStep:
    return RewriteStep("apply-relation", family=family, indices=_freeze(indices),
                       direction=direction, position=position, inverted=inverted)


def step_reduce(position: int | None = None) -> RewriteStep:
    return RewriteStep("free-reduce", position=position)


def step_expand(position: int, letter: Letter) -> RewriteStep:
    return RewriteStep("free-expand", position=position, letter=letter)


def step_named(name: str, indices: dict, direction: str, position: int) -> RewriteStep:
    return RewriteStep("substitute-named", name=name, indices=_freeze(indices),
                       direction=direction, position=position)


# ---------------------------------------------------------------------------
# the engine


def _named_equation(name: str, indices: dict, ambient: Ambient):
    """Resolve a named abbreviation to (pattern, replacement, checkpoint)."""
    n, g = ambient.n, ambient.g
    if name == "tau-comm":
        p, q = indices["p"], indices["q"]
        if not 1 <= p < q <= n:
            raise StepError(f"tau-comm needs 1 <= p < q <= n, got p={p}, q={q}")
        tau = Word.gen(GeneratorId("tau", (p, q)))
        a = Word.gen(GeneratorId("a", (q, g)))
        b = Word.gen(GeneratorId("b", (p, g)))
        return tau, ~a * b * a * ~b, False
    if name == "T":
        l, q = indices["l"], indices["q"]
        if not 1 <= l < q <= n:
            raise StepError(f"T needs 1 <= l < q <= n, got l={l}, q={q}")
        word = Word.of([(GeneratorId("tau", (l, d)), 1) for d in range(l + 1, q + 1)])
        return word, word, True
    if name in ("sc", "sd"):
        from . import splitting  # section formulas live with the verifier
        k = indices["k"]
        gen_kind = "c" if name == "sc" else "d"
        image = splitting.section_map(n, g).images[GeneratorId(gen_kind, (k,))]
        return image, image, True
    raise StepError(f"unknown abbreviation {name!r}")


def apply_step(letters, step: RewriteStep, ambient: Ambient) -> tuple[Letter, ...]:
    """Apply one rewrite step to a raw letter sequence."""
    if isinstance(letters, Word):
        letters = letters.letters
    letters = tuple(letters)

    if step.kind == "apply-relation":
        inst = instantiate(step.family, step.index_dict, ambient.n, ambient.g)
        side, other = (inst.lhs, inst.rhs) if step.direction == "lr" else (inst.rhs, inst.lhs)
        if step.inverted:
            side, other = ~side, ~other
        pos = step.position
        if pos is None or not 0 <= pos <= len(letters) - len(side.letters):
            raise StepError(f"position {pos} out of range for {inst!r}")
        found = letters[pos:pos + len(side.letters)]
        if found != side.letters:
            raise StepError(
                f"no match for {inst!r} at position {pos}: expected "
                f"{format_word(side)!r}, found "
                f"{format_word(Word(tuple(found))) if _is_reduced(found) else found!r}")
        return letters[:pos] + other.letters + letters[pos + len(side.letters):]

    if step.kind == "free-reduce":
        if step.position is None:
            return reduce_letters(letters)
        p = step.position
        if not 0 <= p < len(letters) - 1:
            raise StepError(f"free-reduce position {p} out of range")
        (g1, e1), (g2, e2) = letters[p], letters[p + 1]
        if g1 != g2 or e1 != -e2:
            raise StepError(
                f"letters at {p} do not cancel: "
                f"{format_letter(letters[p])} {format_letter(letters[p + 1])}")
        return letters[:p] + letters[p + 2:]

    if step.kind == "free-expand":
        p = step.position
        if step.letter is None:
            raise StepError("free-expand needs a letter")
        if p is None or not 0 <= p <= len(letters):
            raise StepError(f"free-expand position {p} out of range")
        gid, exp = step.letter
        return letters[:p] + ((gid, exp), (gid, -exp)) + letters[p:]

    if step.kind == "substitute-named":
        pattern, replacement, checkpoint = _named_equation(
            step.name, step.index_dict, ambient)
        if step.direction == "rl":
            pattern, replacement = replacement, pattern
        pos = step.position
        if pos is None or not 0 <= pos <= len(letters) - len(pattern.letters):
            raise StepError(f"position {pos} out of range for {step.name!r}")
        found = letters[pos:pos + len(pattern.letters)]
        if found != pattern.letters:
            raise StepError(
                f"no match for abbreviation {step.name!r} at {pos}: expected "
                f"{format_word(pattern)!r}")
        if checkpoint:
            return letters
        return letters[:pos] + replacement.letters + letters[pos + len(pattern.letters):]

    raise StepError(f"unknown step kind {step.kind!r}")


def _is_reduced(letters) -> bool:
    return all(letters[i] != (letters[i + 1][0], -letters[i + 1][1])
               for i in range(len(letters) - 1))


@dataclass(frozen=True)
class DerivationScript:
    name: str
    ambient: Ambient
    start: Word
    target: Word
    steps: tuple[RewriteStep, ...]


@dataclass(frozen=True)
class DerivationReport:
    name: str
    passed: bool
    steps_checked: int
    failure: str | None = None
    intermediates: tuple[tuple[Letter, ...], ...] = ()

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed,
               "steps_checked": self.steps_checked}
        if self.failure is not None:
            out["failure"] = self.failure
        return out


def check_derivation(script: DerivationScript,
                     keep_intermediates: bool = True) -> DerivationReport:
    """Replay a script from its start word; pass iff the target is reached."""
    letters = script.start.letters
    trail = [letters]
    for idx, step in enumerate(script.steps):
        try:
            letters = apply_step(letters, step, script.ambient)
        except (StepError, SideConditionError, ValueError) as exc:
            return DerivationReport(script.name, False, idx,
                                    f"step {idx}: {exc}",
                                    tuple(trail) if keep_intermediates else ())
        trail.append(letters)
    if letters != script.target.letters:
        return DerivationReport(
            script.name, False, len(script.steps),
            f"replay ended at {format_word(Word.of(letters))!r}, "
            f"target is {format_word(script.target)!r}",
            tuple(trail) if keep_intermediates else ())
    return DerivationReport(script.name, True, len(script.steps), None,
                            tuple(trail) if keep_intermediates else ())


# ---------------------------------------------------------------------------
# script authoring


class _Author:
    """Builds a script by actually replaying each step as it is recorded."""

    def __init__(self, ambient: Ambient, start: Word):
        self.ambient = ambient
        self.start = start
        self.word: tuple[Letter, ...] = start.letters
        self.pairs: list[tuple[RewriteStep, RewriteStep | None]] = []

    def play(self, step: RewriteStep) -> None:
        inverse = self._inverse_of(step)
        self.word = apply_step(self.word, step, self.ambient)
        self.pairs.append((step, inverse))

    def _inverse_of(self, step: RewriteStep) -> RewriteStep | None:
        if step.kind == "apply-relation" or step.kind == "substitute-named":
            flipped = "rl" if step.direction == "lr" else "lr"
            return dataclasses.replace(step, direction=flipped)
        if step.kind == "free-expand":
            return step_reduce(step.position)
        if step.kind == "free-reduce":
            if step.position is None:
                return None
            return step_expand(step.position, self.word[step.position])
        return None

    # conveniences
    def apply(self, family, indices, direction, position, inverted=False):
        self.play(step_apply(family, indices, direction, position, inverted))

    def expand(self, position, letter):
        self.play(step_expand(position, letter))

    def reduce_at(self, position):
        self.play(step_reduce(position))

    def reduce_all(self):
        self.play(step_reduce(None))

    def named(self, name, indices, direction, position):
        self.play(step_named(name, indices, direction, position))

    def cancel_pairs(self, lo: int, hi: int) -> None:
        """Cancel adjacent inverse pairs inside [lo, hi) until none remain."""
        hi = min(hi, len(self.word))
        while True:
            for p in range(lo, hi - 1):
                g1, e1 = self.word[p]
                g2, e2 = self.word[p + 1]
                if g1 == g2 and e1 == -e2:
                    self.reduce_at(p)
                    hi -= 2
                    break
            else:
                return

    def find_letter(self, letter: Letter, start: int = 0) -> int:
        for p in range(start, len(self.word)):
            if self.word[p] == letter:
                return p
        raise StepError(f"letter {format_letter(letter)} not found")

    def replay_reversed(self, pairs, offset: int) -> None:
        for step, inverse in reversed(pairs):
            if inverse is None:
                raise StepError("cannot reverse a full free reduction")
            self.play(inverse.shifted(offset))

    def script(self, name: str, target: Word) -> DerivationScript:
        if self.word != target.letters:
            raise AssertionError(
                f"builder for {name!r} ended at "
                f"{format_word(Word.of(self.word))!r}, wanted {format_word(target)!r}")
        return DerivationScript(name, self.ambient, self.start, target,
                                tuple(step for step, _ in self.pairs))


def _ga(j, k):
    return GeneratorId("a", (j, k))


def _gb(j, k):
    return GeneratorId("b", (j, k))


def _gt(p, q):
    return GeneratorId("tau", (p, q))


def _cgen(variant: str, j: int, k: int) -> GeneratorId:
    return _ga(j, k) if variant == "a" else _gb(j, k)


def _fam(variant: str, stem: str) -> str:
    # II-a / II-b, V-a / V-b, III-a2 / III-b2
    return stem.replace("x", variant)


# -- inline emitters -------------------------------------------------------


def _emit_identity_a(author: _Author, off: int, i: int, l: int, j: int,
                     k: int, variant: str) -> None:
    """Collapse [t_il^-1 c t_il t_ij t_il^-1 c^-1 t_il] to [t_ij] in place."""
    c = _cgen(variant, l, k)
    v_fam = _fam(variant, "V-x")
    iii_fam = _fam(variant, "III-x2")
    author.apply("II-tau", {"s": i, "j": l, "l": j}, "lr", off + 2)
    author.expand(off + 3, (c, -1))
    author.expand(off + 6, (c, -1))
    author.apply(v_fam, {"j": l, "k": k, "l": j}, "lr", off + 1, inverted=True)
    author.apply(iii_fam, {"s": i, "j": l, "l": j, "k": k}, "lr", off + 6)
    author.apply(v_fam, {"j": l, "k": k, "l": j}, "lr", off + 15)
    author.cancel_pairs(off + 1, off + 20)
    author.apply("II-tau", {"s": i, "j": l, "l": j}, "rl", off + 1)
    author.cancel_pairs(off, off + 5)


def _emit_conj_collapse(author: _Author, off: int, l: int, q: int,
                        k: int, variant: str) -> None:
    """Collapse [c_l .. c_q  t_lq  c_q^-1 .. c_l^-1] to [t_lq] in place."""
    m = q - l
    c_l = _cgen(variant, l, k)
    ii_fam = _fam(variant, "II-x")
    v_fam = _fam(variant, "V-x")
    # wrap every inner letter in a conjugate by c_l
    for t in range(2 * m):
        author.expand(off + 2 + 3 * t, (c_l, -1))
    # rewrite each conjugate block
    cur = off
    for t in range(2 * m + 1):
        if t < m:
            d = l + 1 + t
            author.apply(ii_fam, {"j": l, "k": k, "l": d}, "lr", cur)
            cur += 3
        elif t == m:
            author.apply(v_fam, {"j": l, "k": k, "l": q}, "lr", cur)
            cur += 5
        else:
            d = q - (t - m - 1)
            author.apply(ii_fam, {"j": l, "k": k, "l": d}, "lr", cur, inverted=True)
            cur += 3
    # the three blocks around t_lq collapse to t_lq
    author.cancel_pairs(off + 3 * (m - 1), off + 3 * m + 8)
    # peel the remaining conjugated pairs from the inside out
    for d in range(q - 1, l, -1):
        _emit_identity_a(author, off + 3 * (d - l - 1), l, d, q, k, variant)


def _emit_block_swap(author: _Author, off: int, l: int, q: int,
                     k: int, variant: str) -> None:
    """Rewrite [c_l .. c_q  t_lq] to [t_lq  c_l .. c_q] in place."""
    m = q - l
    for t, d in enumerate(range(q, l - 1, -1)):
        author.expand(off + m + 2 + t, (_cgen(variant, d, k), -1))
    _emit_conj_collapse(author, off, l, q, k, variant)



def _emit_interleave(author: _Author, off: int, l: int,
                     q: int, k: int, variant: str) -> None:
    """Turn [c_l .. c_q  t_l,l+1 .. t_lq] into [.. c_d t_ld ..] by commuting
    each t_ld left past the c letters of higher strands (relation I-tau1)."""
    for d in range(l + 1, q):
        pos = author.find_letter((_gt(l, d), 1), off)
        while pos - 1 >= off:
            gid, exp = author.word[pos - 1]
            if exp != 1 or gid.kind not in ("a", "b"):
                break
            strand = gid.indices[0]
            if strand <= d:
                break
            author.apply("I-tau1",
                         {"s": l, "j": d, "l": strand, "m": k, "c": variant},
                         "rl", pos - 1)
            author.reduce_at(pos + 1)
            pos -= 1


def _emit_lemma41_1(author: _Author, off: int, l: int, q: int, k: int,
                    variant: str) -> None:
    """Rewrite [c_l .. c_q  T_lq] to [T_lq  c_l .. c_q] in place."""
    _emit_interleave(author, off, l, q, k, variant)
    for qq in range(l + 1, q + 1):
        _emit_block_swap(author, off + (qq - l - 1), l, qq, k, variant)


# -- script builders -------------------------------------------------------


def _prod_word(gids) -> Word:
    return Word.of([(gid, 1) for gid in gids])


def build_identity_a_script(n: int, g: int, i: int, l: int, j: int, k: int,
                            variant: str) -> DerivationScript:
    ambient = Ambient("pure-closed-abt", n, g)
    c = _cgen(variant, l, k)
    til, tij = _gt(i, l), _gt(i, j)
    start = Word.of([(til, -1), (c, 1), (til, 1), (tij, 1),
                     (til, -1), (c, -1), (til, 1)])
    author = _Author(ambient, start)
    _emit_identity_a(author, 0, i, l, j, k, variant)
    return author.script(
        f"identity-A[i={i},l={l},j={j},k={k},c={variant}]", Word.gen(tij))


def build_identity_b_script(n: int, g: int, l: int, q: int, k: int,
                            variant: str) -> DerivationScript:
    ambient = Ambient("pure-closed-abt", n, g)
    cs = [_cgen(variant, d, k) for d in range(l, q + 1)]
    start = _prod_word(cs) * Word.gen(_gt(l, q))
    target = Word.gen(_gt(l, q)) * _prod_word(cs)
    author = _Author(ambient, start)
    _emit_block_swap(author, 0, l, q, k, variant)
    return author.script(
        f"identity-B[l={l},q={q},k={k},c={variant}]", target)


def build_lemma41_1_script(n: int, g: int, l: int, q: int, k: int,
                           variant: str) -> DerivationScript:
    ambient = Ambient("pure-closed-abt", n, g)
    cs = [_cgen(variant, d, k) for d in range(l, q + 1)]
    taus = [_gt(l, d) for d in range(l + 1, q + 1)]
    start = _prod_word(cs) * _prod_word(taus)
    target = _prod_word(taus) * _prod_word(cs)
    author = _Author(ambient, start)
    _emit_lemma41_1(author, 0, l, q, k, variant)
    return author.script(
        f"lemma41-1[l={l},q={q},k={k},c={variant}]", target)


def _lemma41_2_pairs(n: int, g: int, l: int, q: int, k: int):
    """Recorded (step, inverse) pairs rewriting [a_l+1 .. a_q  T_lq] to
    [b_lk  a_l+1 .. a_q  b_lk^-1]."""
    ambient = Ambient("pure-closed-abt", n, g)
    a_s = [_ga(d, k) for d in range(l + 1, q + 1)]
    taus = [_gt(l, d) for d in range(l + 1, q + 1)]
    start = _prod_word(a_s) * _prod_word(taus)
    author = _Author(ambient, start)
    _emit_interleave(author, 0, l, q, k, "a")
    for d in range(l + 1, q + 1):
        pos = author.find_letter((_ga(d, k), 1))
        author.apply("ER2", {"j": l, "k": k, "l": d}, "rl", pos)
    author.cancel_pairs(0, len(author.word))
    b = _gb(l, k)
    target = Word.gen(b) * _prod_word(a_s) * Word.gen(b, -1)
    if author.word != target.letters:
        raise AssertionError("lemma41-2 builder did not reach its target")
    return author.pairs, start, target


def build_lemma41_2_script(n: int, g: int, l: int, q: int, k: int) -> DerivationScript:
    ambient = Ambient("pure-closed-abt", n, g)
    pairs, start, target = _lemma41_2_pairs(n, g, l, q, k)
    return DerivationScript(f"lemma41-2[l={l},q={q},k={k}]", ambient,
                            start, target, tuple(step for step, _ in pairs))


def build_tau_comm_script(n: int, g: int, p: int, q: int) -> DerivationScript:
    """Verify the tau-comm abbreviation t[p,q] = [a[q,g], b[p,g]^-1] via ER2."""
    ambient = Ambient("pure-closed-abt", n, g)
    a, b = _ga(q, g), _gb(p, g)
    start = Word.of([(a, -1), (b, 1), (a, 1), (b, -1)])
    author = _Author(ambient, start)
    author.apply("ER2", {"j": p, "k": g, "l": q}, "lr", 1)
    author.reduce_at(0)
    return author.script(f"tau-comm[p={p},q={q}]", Word.gen(_gt(p, q)))


def tau_gamma2_commutator_word(n: int, g: int, l: int) -> Word:
    """The commutator word over kernel letters that equals t[1,l]^-1."""
    letters: list[Letter] = []
    for w in range(2, l):
        a, b = _ga(l, g), _gb(w, g)
        letters += [(a, -1), (b, 1), (a, 1), (b, -1)]
    for d in range(l + 1, n + 1):
        a, b = _ga(d, g), _gb(l, g)
        letters += [(a, -1), (b, 1), (a, 1), (b, -1)]
    for i in range(1, g + 1):
        a, b = _ga(l, i), _gb(l, i)
        letters += [(a, 1), (b, -1), (a, -1), (b, 1)]
    return Word.of(letters)


def build_tau_gamma2_script(n: int, g: int, l: int) -> DerivationScript:
    ambient = Ambient("pure-closed-abt", n, g)
    start = tau_gamma2_commutator_word(n, g, l)
    author = _Author(ambient, start)
    pairs = [(w, l) for w in range(2, l)] + [(l, d) for d in range(l + 1, n + 1)]
    for t, (p, q) in enumerate(pairs):
        author.named("tau-comm", {"p": p, "q": q}, "rl", t)
    author.apply("TR", {"l": l}, "lr", len(pairs))
    author.reduce_all()
    return author.script(f"tau-gamma2[l={l}]", Word.gen(_gt(1, l), -1))


def build_splitting_script(n: int, g: int) -> DerivationScript:
    """The image of the surface relation under the section reduces to 1."""
    from . import splitting

    ambient = Ambient("pure-closed-abt", n, g)
    smap = splitting.section_map(n, g)
    word = Word.identity()
    for i in range(1, g + 1):
        sc = smap.images[GeneratorId("c", (i,))]
        sd = smap.images[GeneratorId("d", (i,))]
        word = word * (sc * ~sd * ~sc * sd)
    author = _Author(ambient, word)

    t_len = n - 1
    base = t_len + 4 * (g - 1)  # start of the a[.,g] block once T Q lead it
    # commute the a[.,g] block past T (Lemma 4.1 identity (1) inline);
    # for g = 1 the start word opens directly with that block
    off0 = base + t_len if g > 1 else 0
    _emit_lemma41_1(author, off0, 1, n, k=g, variant="a")
    if g > 1:
        author.cancel_pairs(base, base + 2 * t_len)
    # conjugate the tail block by b[1,g] (Lemma 4.1 identity (2), reversed)
    author.expand(base + 1, (_gb(1, g), -1))
    pairs, _, _ = _lemma41_2_pairs(n, g, 1, n, g)
    author.replay_reversed(pairs, base + 2)
    author.cancel_pairs(base + 2, len(author.word) - 1)
    # what remains left of the closing b[1,g] is the surface relation TR(1)
    author.apply("TR", {"l": 1}, "lr", t_len)
    author.reduce_all()
    return author.script(f"splitting[n={n},g={g}]", Word.identity())


# ---------------------------------------------------------------------------
# built-in suites


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    passed: bool
    details: str = ""

    def to_dict(self) -> dict:
        out = {"case": self.case_id, "pass": self.passed}
        if self.details:
            out["details"] = self.details
        return out


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    n: int
    g: int
    passed: bool
    cases: tuple[CaseResult, ...]

    def to_dict(self) -> dict:
        return {"suite": self.suite, "n": self.n, "g": self.g,
                "pass": self.passed,
                "cases": [c.to_dict() for c in self.cases]}


def _script_case(script: DerivationScript) -> CaseResult:
    report = check_derivation(script, keep_intermediates=False)
    return CaseResult(script.name, report.passed, report.failure or "")


def suite_scripts(name: str, n: int, g: int) -> list[DerivationScript]:
    """All bundled scripts of a built-in suite, in deterministic order."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if n < 2 or g < 1:
        raise ValueError(f"suite {name!r} requires n >= 2 and g >= 1")
    out: list[DerivationScript] = []
    strands = range(1, n + 1)
    if name == "lemma41-1":
        for l, q in itertools.combinations(strands, 2):
            for k in range(1, g + 1):
                for variant in ("a", "b"):
                    out.append(build_lemma41_1_script(n, g, l, q, k, variant))
    elif name == "lemma41-2":
        for l, q in itertools.combinations(strands, 2):
            for k in range(1, g + 1):
                out.append(build_lemma41_2_script(n, g, l, q, k))
    elif name == "identity-A":
        for i, l, j in itertools.combinations(strands, 3):
            for k in range(1, g + 1):
                for variant in ("a", "b"):
                    out.append(build_identity_a_script(n, g, i, l, j, k, variant))
    elif name == "identity-B":
        for l, q in itertools.combinations(strands, 2):
            for k in range(1, g + 1):
                for variant in ("a", "b"):
                    out.append(build_identity_b_script(n, g, l, q, k, variant))
    elif name == "tau-gamma2":
        for p, q in itertools.combinations(range(2, n + 1), 2):
            out.append(build_tau_comm_script(n, g, p, q))
        for l in range(2, n + 1):
            out.append(build_tau_gamma2_script(n, g, l))
    elif name == "splitting":
        out.append(build_splitting_script(n, g))
    return out


def builtin_suite(name: str, n: int, g: int) -> SuiteReport:
    """Check every bundled script of a suite; extra membership checks for
    tau-gamma2 (zero exponent sum, kernel letters only)."""
    cases = [_script_case(script) for script in suite_scripts(name, n, g)]
    if name == "tau-gamma2":
        from .words import exponent_vector
        alphabet = build_presentation("pure-closed-abt", n, g).generators
        for l in range(2, n + 1):
            word = tau_gamma2_commutator_word(n, g, l)
            vec = exponent_vector(word, alphabet)
            balanced = all(v == 0 for v in vec)
            in_kernel = all(gid.kind in ("a", "b") and gid.indices[0] >= 2
                            for gid, _ in word.letters)
            cases.append(CaseResult(
                f"tau-gamma2-membership[l={l}]", balanced and in_kernel,
                "" if balanced and in_kernel else
                f"balanced={balanced}, kernel letters only={in_kernel}"))
    return SuiteReport(name, n, g, all(c.passed for c in cases), tuple(cases))


# ---------------------------------------------------------------------------
# breadth-first derivation search (authoring aid)


def search_derivation(lhs: Word, rhs: Word, ambient: Ambient,
                      depth_bound: int, state_limit: int = 20000):
    """Search for a script from lhs to rhs using at most depth_bound
    relation applications (on freely reduced intermediate words).
    Returns a DerivationScript or None."""
    if depth_bound < 1:
        raise ValueError("depth bound must be >= 1")
    start, target = Word.of(lhs.letters), Word.of(rhs.letters)
    if start == target:
        return DerivationScript("search[trivial]", ambient, start, target, ())
    instances = ambient.presentation.instances
    seen = {start: ()}
    frontier = [start]
    for _ in range(depth_bound):
        new_frontier = []
        for word in frontier:
            path = seen[word]
            for inst, direction in itertools.product(instances, ("lr", "rl")):
                side, other = ((inst.lhs, inst.rhs) if direction == "lr"
                               else (inst.rhs, inst.lhs))
                sl = side.letters
                for pos in range(len(word.letters) - len(sl) + 1):
                    if word.letters[pos:pos + len(sl)] != sl:
                        continue
                    spliced = (word.letters[:pos] + other.letters
                               + word.letters[pos + len(sl):])
                    steps = path + (step_apply(inst.family, inst.index_dict,
                                               direction, pos),)
                    if not _is_reduced(spliced):
                        steps = steps + (step_reduce(None),)
                    new_word = Word.of(spliced)
                    if new_word in seen:
                        continue
                    seen[new_word] = steps
                    if new_word == target:
                        script = DerivationScript(
                            "search", ambient, start, target, steps)
                        report = check_derivation(script, keep_intermediates=False)
                        assert report.passed
                        return script
                    if len(seen) > state_limit:
                        return None
                    new_frontier.append(new_word)
        frontier = new_frontier
    return None


# ---------------------------------------------------------------------------
# JSON script files


def script_to_dict(script: DerivationScript) -> dict:
    steps = []
    for step in script.steps:
        entry: dict = {"kind": step.kind}
        if step.family is not None:
            entry["family"] = step.family
        if step.indices is not None:
            entry["indices"] = dict(step.indices)
        if step.direction is not None:
            entry["direction"] = step.direction
        if step.position is not None:
            entry["position"] = step.position
        if step.letter is not None:
            entry["letter"] = format_letter(step.letter)
        if step.inverted:
            entry["inverted"] = True
        if step.name is not None:
            entry["name"] = step.name
        steps.append(entry)
    return {"name": script.name,
            "ambient": {"preset": script.ambient.preset,
                        "n": script.ambient.n, "g": script.ambient.g},
            "start": format_word(script.start),
            "target": format_word(script.target),
            "steps": steps}


def script_from_dict(data: dict) -> DerivationScript:
    amb = data["ambient"]
    steps = []
    for entry in data["steps"]:
        letter = parse_letter(entry["letter"]) if "letter" in entry else None
        steps.append(RewriteStep(
            kind=entry["kind"],
            family=entry.get("family"),
            indices=_freeze(entry.get("indices")),
            direction=entry.get("direction"),
            position=entry.get("position"),
            letter=letter,
            inverted=entry.get("inverted", False),
            name=entry.get("name")))
    return DerivationScript(
        data.get("name", "script"),
        Ambient(amb["preset"], int(amb["n"]), int(amb["g"])),
        parse_word(data["start"]), parse_word(data["target"]), tuple(steps))


def load_script(path: str) -> DerivationScript:
    with open(path, "r", encoding="utf-8") as fh:
        return script_from_dict(json.load(fh))


def save_script(script: DerivationScript, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(script_to_dict(script), fh, indent=2)
