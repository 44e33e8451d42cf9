"""Lower-central-series quotients of finitely presented groups at class <= 3.

The free nilpotent group of class c on an ordered alphabet is handled by
collection over a Hall basis of basic commutators:

* weight 1: the generators x_1 < ... < x_m;
* weight 2: [x_j, x_i] for j > i;
* weight 3: [[x_j, x_i], x_k] for j > i and k >= i.

Collection rewrites a letter sequence into the normal form
x_1^e1 ... x_m^em * (weight-2 part) * (weight-3 part) using the exact
class-c commutator identities; all corrections of weight > c vanish.

For a presented group G = F/K the graded quotients Gamma_i(G)/Gamma_i+1(G)
are W_i / L_i, where W_i is the weight-i lattice of the free class-c group
and L_i is the image of K.  L_1 is spanned by relator exponent vectors.
For i >= 2 the lattice is produced by saturating the relator set under
commutation with generators (and with other relators), plus exact products
along integer kernels of the lower-weight exponent matrices; products of
elements that already vanish in lower weights are coordinatewise additive,
so the higher stages reduce to integer linear algebra.  Invariant factors
come from an exact integer Smith normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .presentations import Presentation
from .words import GeneratorId, Word

IndexWord = tuple[tuple[int, int], ...]  # letters (generator index, +-1)


class ResourceLimitError(RuntimeError):
    """A quotient computation would exceed the supported desk scale."""


# ---------------------------------------------------------------------------
# exact integer linear algebra


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def smith_normal_form(mat) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Exact Smith normal form: returns (D, U, V) with U*mat*V = D,
    D diagonal with a divisibility chain, U and V unimodular."""
    m = [[int(v) for v in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(r1, r2):
        if r1 != r2:
            m[r1], m[r2] = m[r2], m[r1]
            U[r1], U[r2] = U[r2], U[r1]

    def swap_cols(c1, c2):
        if c1 != c2:
            for row in m:
                row[c1], row[c2] = row[c2], row[c1]
            for row in V:
                row[c1], row[c2] = row[c2], row[c1]

    def add_row(dst, src, mult):
        if mult:
            m[dst] = [v + mult * w for v, w in zip(m[dst], m[src])]
            U[dst] = [v + mult * w for v, w in zip(U[dst], U[src])]

    def add_col(dst, src, mult):
        if mult:
            for row in m:
                row[dst] += mult * row[src]
            for row in V:
                row[dst] += mult * row[src]

    # phase 1: diagonalize, smallest entry first (keeps growth moderate)
    rank = 0
    for t in range(min(rows, cols)):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            again = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    add_row(i, t, -(m[i][t] // m[t][t]))
                    if m[i][t]:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    add_col(j, t, -(m[t][j] // m[t][t]))
                    if m[t][j]:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        if m[t][t] < 0:
            m[t] = [-v for v in m[t]]
            U[t] = [-v for v in U[t]]
        rank = t + 1

    # phase 2: enforce the divisibility chain with 2x2 diagonal repairs
    done = False
    while not done:
        done = True
        for i in range(rank - 1):
            a, b = m[i][i], m[i + 1][i + 1]
            if b % a == 0:
                continue
            done = False
            add_col(i, i + 1, 1)            # (i+1, i) becomes b
            while m[i + 1][i]:              # Euclid on rows i, i+1 in col i
                q = m[i][i] // m[i + 1][i]
                add_row(i, i + 1, -q)
                if m[i][i] == 0:
                    swap_rows(i, i + 1)
                else:
                    m[i], m[i + 1] = m[i + 1], m[i]
                    U[i], U[i + 1] = U[i + 1], U[i]
            if m[i][i] < 0:
                m[i] = [-v for v in m[i]]
                U[i] = [-v for v in U[i]]
            add_col(i + 1, i, -(m[i][i + 1] // m[i][i]))  # clear fill-in
            if m[i + 1][i + 1] < 0:
                m[i + 1] = [-v for v in m[i + 1]]
                U[i + 1] = [-v for v in U[i + 1]]
    return m, U, V


def determinant(mat) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    a = [[int(v) for v in row] for row in mat]
    k = len(a)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for t in range(k - 1):
        if a[t][t] == 0:
            for i in range(t + 1, k):
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
        prev = a[t][t]
    return sign * a[k - 1][k - 1]


def left_kernel_basis(rows: list[list[int]], cols: int) -> list[list[int]]:
    """Basis of { alpha : sum_i alpha_i * rows_i = 0 } over the integers."""
    if not rows:
        return []
    d, u, _ = smith_normal_form([list(r) for r in rows])
    out = []
    for i, coeffs in enumerate(u):
        if i >= len(d) or all(v == 0 for v in d[i]):
            out.append(coeffs)
    return out


def invariant_factors(rows: list[list[int]], cols: int) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion chain) of Z^cols / rowspan(rows)."""
    if not rows:
        return cols, ()
    d, _, _ = smith_normal_form(rows)
    diag = [d[i][i] for i in range(min(len(d), cols)) if d[i][i] != 0]
    torsion = tuple(v for v in diag if v > 1)
    return cols - len(diag), torsion


def mobius(k: int) -> int:
    if k == 1:
        return 1
    out, p, rest = 1, 2, k
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                return 0
            out = -out
        p += 1
    if rest > 1:
        out = -out
    return out


def witt_rank(m: int, k: int) -> int:
    """Rank of the weight-k graded piece of a free group of rank m."""
    if m < 1 or k < 1:
        raise ValueError("witt_rank requires m >= 1 and k >= 1")
    total = sum(mobius(d) * m ** (k // d) for d in range(1, k + 1) if k % d == 0)
    assert total % k == 0
    return total // k


# ---------------------------------------------------------------------------
# Hall basis and collection

BasisKey = tuple[int, ...]  # (i) weight 1, (j,i) weight 2, (j,i,k) weight 3


@dataclass(frozen=True)
class HallBasis:
    """Basic commutators on m generators up to weight cls <= 3."""

    m: int
    cls: int

    def __post_init__(self):
        if self.cls not in (1, 2, 3):
            raise ValueError("supported classes are 1, 2 and 3")

    @property
    def weight1(self) -> list[BasisKey]:
        return [(i,) for i in range(self.m)]

    @property
    def weight2(self) -> list[BasisKey]:
        if self.cls < 2:
            return []
        return [(j, i) for j in range(self.m) for i in range(j)]

    @property
    def weight3(self) -> list[BasisKey]:
        if self.cls < 3:
            return []
        return [(j, i, k) for j in range(self.m) for i in range(j)
                for k in range(i, self.m)]

    def keys(self, weight: int) -> list[BasisKey]:
        return (self.weight1, self.weight2, self.weight3)[weight - 1]

    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.keys(w)) for w in range(1, self.cls + 1))


def _swap_correction(ku: BasisKey, eu: int, kv: BasisKey, ev: int,
                     cls: int) -> list[tuple[BasisKey, int]]:
    """Items of [u^eu, v^ev] when swapping the out-of-order pair u^eu v^ev."""
    wu, wv = len(ku), len(kv)
    if wu == 1 and wv == 1:
        j, i = ku[0], kv[0]
        if cls < 2:
            return []
        z = (j, i)
        if cls == 2:
            return [(z, eu * ev)]
        if (eu, ev) == (1, 1):
            return [(z, 1)]
        if (eu, ev) == (-1, 1):
            return [(z, -1), ((j, i, j), 1)]
        if (eu, ev) == (1, -1):
            return [(z, -1), ((j, i, i), 1)]
        return [(z, 1), ((j, i, i), -1), ((j, i, j), -1)]
    if wu == 2 and wv == 1:
        if cls < 3:
            return []
        j, i = ku
        k = kv[0]
        e = eu * ev
        if k >= i:
            return [((j, i, k), e)]
        # [[x_j,x_i],x_k] = [[x_j,x_k],x_i] - [[x_i,x_k],x_j] for k < i
        return [((j, k, i), e), ((i, k, j), -e)]
    # weight-3 items are central; weight-2 items commute at class <= 3
    return []


def collect_letters(letters, cls: int) -> dict[BasisKey, int]:
    """Collect a letter sequence [(gen index, +-1), ...] into exponent form."""
    items: list[tuple[BasisKey, int]] = []
    for gidx, exp in letters:
        sign = 1 if exp > 0 else -1
        items.extend([((gidx,), sign)] * abs(exp))
    pos = 0
    while pos + 1 < len(items):
        (ku, eu), (kv, ev) = items[pos], items[pos + 1]
        if ku == kv and eu == -ev:
            del items[pos:pos + 2]
            pos = max(pos - 1, 0)
            continue
        if (len(ku), ku) > (len(kv), kv):
            corr = _swap_correction(ku, eu, kv, ev, cls)
            items[pos:pos + 2] = [(kv, ev), (ku, eu)] + corr
            pos = max(pos - 1, 0)
            continue
        pos += 1
    exps: dict[BasisKey, int] = {}
    for key, e in items:
        exps[key] = exps.get(key, 0) + e
    return {k: v for k, v in exps.items() if v}


@dataclass(frozen=True)
class CollectedWord:
    """Normal form of an element of the free class-c nilpotent group."""

    basis: HallBasis
    exps: tuple[tuple[BasisKey, int], ...]

    @property
    def is_identity(self) -> bool:
        return not self.exps

    def exponent(self, key: BasisKey) -> int:
        return dict(self.exps).get(key, 0)

    def vector(self, weight: int) -> dict[BasisKey, int]:
        return {k: v for k, v in self.exps if len(k) == weight}

    def __repr__(self) -> str:
        if not self.exps:
            return "CollectedWord(1)"
        parts = " ".join(f"{k}^{v}" for k, v in self.exps)
        return f"CollectedWord({parts})"


def hall_collect(w: Word, alphabet, cls: int) -> CollectedWord:
    """Normal form of a word in the free class-c group on ``alphabet``."""
    index = {gid: k for k, gid in enumerate(alphabet)}
    letters = []
    for gid, exp in w.letters:
        if gid not in index:
            raise ValueError(f"letter {gid!r} outside alphabet")
        letters.append((index[gid], exp))
    basis = HallBasis(len(alphabet), cls)
    exps = collect_letters(letters, cls)
    return CollectedWord(basis, tuple(sorted(exps.items(),
                                             key=lambda kv: (len(kv[0]), kv[0]))))


def nf_index_word(exps: dict[BasisKey, int]) -> list[tuple[int, int]]:
    """A letter sequence whose collection is the given normal form."""
    out: list[tuple[int, int]] = []

    def emit(key: BasisKey, e: int):
        word = _basis_word(key)
        seq = word if e > 0 else [(gg, -ee) for gg, ee in reversed(word)]
        for _ in range(abs(e)):
            out.extend(seq)

    for key in sorted(exps, key=lambda k: (len(k), k)):
        if exps[key]:
            emit(key, exps[key])
    return out


def _basis_word(key: BasisKey) -> list[tuple[int, int]]:
    if len(key) == 1:
        return [(key[0], 1)]
    if len(key) == 2:
        j, i = key
        return [(j, -1), (i, -1), (j, 1), (i, 1)]
    j, i, k = key
    inner = _basis_word((j, i))
    inv = [(gg, -ee) for gg, ee in reversed(inner)]
    return inv + [(k, -1)] + inner + [(k, 1)]


# ---------------------------------------------------------------------------
# quotients of presented groups

_VecD = dict  # sparse vector: column index -> int


def _vec_of(exps: dict[BasisKey, int], keys: list[BasisKey]) -> _VecD:
    pos = {k: c for c, k in enumerate(keys)}
    return {pos[k]: v for k, v in exps.items() if k in pos and v}


def _vec_sub(v: _VecD, w: _VecD, mult: int) -> _VecD:
    out = dict(v)
    for c, val in w.items():
        nv = out.get(c, 0) - mult * val
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


class IntLattice:
    """Row lattice in Z^n kept in echelon form; optional word witnesses."""

    def __init__(self):
        self.pivots: dict[int, tuple[_VecD, list | None]] = {}

    def add(self, vec: _VecD, word: list | None = None) -> None:
        queue = [(dict(vec), list(word) if word is not None else None)]
        while queue:
            v, w = queue.pop()
            while v:
                lead = min(v)
                if lead not in self.pivots:
                    if v[lead] < 0:
                        v = {c: -val for c, val in v.items()}
                        w = _inv_index_word(w) if w is not None else None
                    self.pivots[lead] = (v, w)
                    break
                pvec, pword = self.pivots[lead]
                if v[lead] % pvec[lead] == 0:
                    q = v[lead] // pvec[lead]
                    v = _vec_sub(v, pvec, q)
                    if w is not None:
                        w = _pow_index_word(pword, -q) + w
                else:
                    g, x, y = xgcd(pvec[lead], v[lead])
                    new = {c: x * pvec.get(c, 0) + y * v.get(c, 0)
                           for c in set(pvec) | set(v)}
                    new = {c: val for c, val in new.items() if val}
                    nw = None
                    if w is not None:
                        nw = _pow_index_word(pword, x) + _pow_index_word(w, y)
                    del self.pivots[lead]
                    queue.append((pvec, pword))
                    queue.append((v, w))
                    v, w = new, nw

    def reduce(self, vec: _VecD, witness: bool = False):
        """Reduce vec modulo the lattice; optionally track a witness word
        whose additive vector equals vec - residual."""
        v = dict(vec)
        wit: list = []
        for lead in sorted(self.pivots):
            if v.get(lead, 0):
                pvec, pword = self.pivots[lead]
                q = v[lead] // pvec[lead]
                if q:
                    v = _vec_sub(v, pvec, q)
                    if witness:
                        wit = wit + _pow_index_word(pword, q)
        v = {c: val for c, val in v.items() if val}
        return (v, wit) if witness else v

    def contains(self, vec: _VecD) -> bool:
        return not self.reduce(vec)

    def rows(self) -> list[_VecD]:
        return [vec for vec, _ in self.pivots.values()]


def _inv_index_word(word: list) -> list:
    return [(g, -e) for g, e in reversed(word)]


def _pow_index_word(word: list, k: int) -> list:
    if k == 0 or not word:
        return []
    base = word if k > 0 else _inv_index_word(word)
    return base * abs(k)


def _comm_index_words(u: list, v: list) -> list:
    return _inv_index_word(u) + _inv_index_word(v) + u + v


_CLASS3_GENERATOR_LIMIT = 14


class QuotientContext:
    """Graded data of the class-cls nilpotent quotient of a presentation."""

    def __init__(self, pres: Presentation, cls: int):
        if cls not in (1, 2, 3):
            raise ValueError("supported classes are 1, 2 and 3")
        m = len(pres.generators)
        if cls == 3 and pres.relators and m > _CLASS3_GENERATOR_LIMIT:
            basis = HallBasis(m, 3)
            raise ResourceLimitError(
                f"class-3 quotient of a presented group on {m} generators "
                f"needs weight lattices of dimensions {basis.counts()}; "
                f"the supported limit is {_CLASS3_GENERATOR_LIMIT} generators")
        self.pres = pres
        self.cls = cls
        self.basis = HallBasis(m, cls)
        self.index = {gid: k for k, gid in enumerate(pres.generators)}
        self._build()

    # -- construction

    def _to_index_word(self, w: Word) -> list[tuple[int, int]]:
        out = []
        for gid, exp in w.letters:
            if gid not in self.index:
                raise ValueError(f"letter {gid!r} outside presentation alphabet")
            out.append((self.index[gid], exp))
        return out

    def _vectors(self, word: list) -> tuple[_VecD, ...]:
        exps = collect_letters(word, self.cls)
        return tuple(_vec_of(exps, self.basis.keys(w))
                     for w in range(1, self.cls + 1))

    def _build(self) -> None:
        cls = self.cls
        m = self.basis.m
        rel_words = [self._to_index_word(r) for r in self.pres.relators]
        rel_vecs = [self._vectors(w) for w in rel_words]

        self.lat1 = IntLattice()
        for vecs, word in zip(rel_vecs, rel_words):
            self.lat1.add(vecs[0], word)

        if cls == 1:
            self.lat23 = None
            return

        stage2: list[tuple] = []  # elements with zero weight-1 part

        def feed(word: list) -> None:
            vecs = self._vectors(word)
            if vecs[0]:
                raise AssertionError("saturation produced a nonzero weight-1 part")
            stage2.append(vecs)

        gens = [[(k, 1)] for k in range(m)]
        nonzero1 = [(w, v) for w, v in zip(rel_words, rel_vecs) if v[0]]
        for word, vecs in zip(rel_words, rel_vecs):
            if not vecs[0]:
                stage2.append(vecs)

        # brackets of relators with generators (and with each other)
        for word, vecs in zip(rel_words, rel_vecs):
            if vecs[0] or cls == 3:
                for gword in gens:
                    br = _comm_index_words(word, gword)
                    feed(br)
                    if cls == 3 and vecs[0]:
                        for gword2 in gens:
                            feed(_comm_index_words(br, gword2))
        for (w1, v1), (w2, v2) in itertools.combinations(nonzero1, 2):
            br = _comm_index_words(w1, w2)
            feed(br)
            if cls == 3:
                for gword in gens:
                    feed(_comm_index_words(br, gword))

        # exact products along the integer kernel of the weight-1 exponents
        if nonzero1:
            dense = []
            for _, vecs in nonzero1:
                row = [0] * m
                for c, val in vecs[0].items():
                    row[c] = val
                dense.append(row)
            for alpha in left_kernel_basis(dense, m):
                if all(a == 0 for a in alpha):
                    continue
                word: list = []
                for (rw, _), a in zip(nonzero1, alpha):
                    word.extend(_pow_index_word(rw, a))
                feed(word)
                if cls == 3:
                    for gword in gens:
                        feed(_comm_index_words(word, gword))

        # weights >= 2: products of weight-1-trivial elements are additive,
        # so one echelon lattice over the joined (weight-2 | weight-3)
        # coordinates captures the whole contribution.
        off = len(self.basis.keys(2))
        self.lat23 = IntLattice()
        for vecs in stage2:
            joined = dict(vecs[1])
            if cls == 3:
                for c, val in vecs[2].items():
                    joined[off + c] = val
            self.lat23.add(joined)

    # -- queries

    def image(self, w: Word) -> "QuotientImage":
        """Canonical residual of w in the class-cls quotient."""
        word = self._to_index_word(w)
        vecs = self._vectors(word)
        res1, wit = self.lat1.reduce(vecs[0], witness=True)
        residuals = [res1]
        if self.cls >= 2:
            if res1:
                rest = [vecs[i] for i in range(1, self.cls)]
            else:
                # cancel the weight-1 part exactly, then reduce higher weights
                adjusted = self._vectors(_inv_index_word(wit) + word)
                if adjusted[0]:
                    raise AssertionError("witness failed to cancel weight-1 part")
                rest = [adjusted[i] for i in range(1, self.cls)]
            off = len(self.basis.keys(2))
            joined = dict(rest[0])
            if self.cls == 3:
                for c, val in rest[1].items():
                    joined[off + c] = val
            red = self.lat23.reduce(joined)
            res2 = {c: v for c, v in red.items() if c < off}
            residuals.append(res2)
            if self.cls == 3:
                residuals.append({c - off: v for c, v in red.items() if c >= off})
        return QuotientImage(self, tuple(residuals))

    def lattice_rows(self, weight: int) -> list[list[int]]:
        keys = self.basis.keys(weight)
        ncols = len(keys)
        rows = []
        if weight == 1:
            vecs = self.lat1.rows()
        else:
            off = len(self.basis.keys(2))
            vecs = []
            for lead in sorted(self.lat23.pivots):
                vec, _ = self.lat23.pivots[lead]
                if weight == 2 and lead < off:
                    vecs.append({c: v for c, v in vec.items() if c < off})
                elif weight == 3 and lead >= off:
                    vecs.append({c - off: v for c, v in vec.items() if c >= off})
        for vec in vecs:
            row = [0] * ncols
            for c, val in vec.items():
                row[c] = val
            if any(row):
                rows.append(row)
        return rows

    def quotients(self) -> "LcsQuotients":
        entries = []
        for weight in range(1, self.cls + 1):
            ncols = len(self.basis.keys(weight))
            rank, torsion = invariant_factors(self.lattice_rows(weight), ncols)
            entries.append(ClassQuotient(weight, rank, torsion))
        return LcsQuotients(self.pres, self.cls, tuple(entries))


@dataclass(frozen=True)
class QuotientImage:
    """Residual coordinates of a word's image; zero means trivial."""

    context: QuotientContext
    residuals: tuple[dict, ...]

    @property
    def is_trivial(self) -> bool:
        return all(not r for r in self.residuals)

    def __repr__(self) -> str:
        if self.is_trivial:
            return "QuotientImage(trivial)"
        return f"QuotientImage(residuals={self.residuals!r})"


@dataclass(frozen=True)
class ClassQuotient:
    weight: int
    rank: int
    torsion: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __repr__(self) -> str:
        return f"gr_{self.weight} = rank {self.rank}, torsion {list(self.torsion)}"


@dataclass(frozen=True)
class LcsQuotients:
    """Per-class abelian invariants gr_i = Gamma_i / Gamma_i+1, i <= cls."""

    presentation: Presentation
    cls: int
    quotients: tuple[ClassQuotient, ...]

    @property
    def rational_ranks(self) -> tuple[int, ...]:
        return tuple(q.rank for q in self.quotients)

    def gamma_equals_next(self, i: int) -> bool:
        """Whether Gamma_i = Gamma_i+1, i.e. the class-i quotient is trivial."""
        for q in self.quotients:
            if q.weight == i:
                return q.is_trivial
        raise ValueError(f"class {i} not computed (cls={self.cls})")


_CONTEXTS: dict[tuple, QuotientContext] = {}


def quotient_context(pres: Presentation, cls: int) -> QuotientContext:
    key = (pres.preset, pres.n, pres.g, cls)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = QuotientContext(pres, cls)
    return _CONTEXTS[key]


def lcs_quotients(pres: Presentation, cls: int) -> LcsQuotients:
    """Gamma_i/Gamma_i+1 for i <= cls of the presented group."""
    return quotient_context(pres, cls).quotients()


def abelian_invariants(pres: Presentation) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion chain) of the abelianization."""
    q = lcs_quotients(pres, 1).quotients[0]
    return q.rank, q.torsion


def evaluate_in_quotient(w: Word, pres: Presentation, cls: int) -> QuotientImage:
    """Image of a word in the class-cls quotient of the presented group."""
    return quotient_context(pres, cls).image(w)
