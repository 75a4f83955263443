"""Representations, characters and character tables over cyclotomic fields.

Two independent routes produce character tables:

* constructively, as traces of explicitly built irreducible representations;
* from the class algebra (Burnside/Dixon), by splitting the class-sum
  multiplication matrices into common eigenvectors modulo a prime and lifting
  the eigenvalues back to cyclotomic integers.

All comparisons are exact.  Gaussian-integer tables take a fast integer path
through numpy; everything else goes through :class:`Cyclotomic`.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

import numpy as np

from .exact_arith import (
    CMatrix, Cyclotomic, ONE, ZERO, block_diag, cyc_sum, mat_kron, mat_mul, mat_trace,
)
from .group_core import ConjugacyClass, FiniteGroup, GroupHom

PROVENANCES = ("constructive", "dixon", "orthogonality-completion")


class RepresentationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

class Representation:
    """One square matrix per group element, checked to be a homomorphism.

    The check is exhaustive over all ordered pairs.  Products are computed once
    per pair of *distinct* matrices and the pair check itself is done on
    interned matrix ids, which keeps order-128 groups cheap.
    """

    def __init__(self, group: FiniteGroup, matrices: Sequence[CMatrix], name: str = "", verify: bool = True):
        if len(matrices) != group.order:
            raise RepresentationError("one matrix per group element required")
        dim = matrices[0].rows
        if any(m.rows != dim or m.cols != dim for m in matrices):
            raise RepresentationError("all matrices must be square of one dimension")
        self.group = group
        self.matrices = tuple(matrices)
        self.dim = dim
        self.name = name
        if verify:
            bad = homomorphism_violations(self)
            if bad:
                a, b = bad[0]
                raise RepresentationError(
                    f"{name or 'representation'} fails rho(ab) = rho(a)rho(b) on {len(bad)} pairs, "
                    f"first ({group.labels[a]}, {group.labels[b]})")

    def __call__(self, x: int) -> CMatrix:
        return self.matrices[x]

    def __repr__(self) -> str:
        return f"Representation({self.name or '?'}, dim={self.dim}, group={self.group.name})"

    def at(self, label: str) -> CMatrix:
        return self.matrices[self.group.index(label)]

    @classmethod
    def from_generators(cls, group: FiniteGroup, images: dict[int, CMatrix], name: str = "") -> Representation:
        """Extend images given on a generating set along right multiplication."""
        dim = next(iter(images.values())).rows
        mats: dict[int, CMatrix] = {group.identity: CMatrix.identity(dim)}
        queue = deque([group.identity])
        while queue:
            x = queue.popleft()
            for s, m in images.items():
                y = group.mul(x, s)
                if y not in mats:
                    mats[y] = mat_mul(mats[x], m)
                    queue.append(y)
        if len(mats) != group.order:
            raise RepresentationError("images are not given on a generating set")
        return cls(group, [mats[x] for x in range(group.order)], name=name)


def homomorphism_violations(rep: Representation) -> list[tuple[int, int]]:
    """Every pair (a, b) with rho(ab) != rho(a) rho(b), plus identity failures."""
    g = rep.group
    intern: dict[CMatrix, int] = {}
    ids = np.array([intern.setdefault(m, len(intern)) for m in rep.matrices], dtype=np.int64)
    distinct = list(intern)
    k = len(distinct)
    prod = np.full((k, k), -1, dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[i, j] = intern.get(mat_mul(distinct[i], distinct[j]), -1)
    lhs = ids[g.cayley]
    rhs = prod[ids[:, None], ids[None, :]]
    bad = [(int(a), int(b)) for a, b in np.argwhere(lhs != rhs)]
    if rep.matrices[g.identity] != CMatrix.identity(rep.dim):
        bad.insert(0, (g.identity, g.identity))
    return bad


def trivial_rep(group: FiniteGroup) -> Representation:
    return Representation(group, [CMatrix.scalar(1)] * group.order, name="trivial")


def regular_representation(group: FiniteGroup) -> Representation:
    n = group.order
    mats = []
    for g in range(n):
        rows = [[ZERO] * n for _ in range(n)]
        for x in range(n):
            rows[group.mul(g, x)][x] = ONE
        mats.append(CMatrix.from_rows(rows))
    return Representation(group, mats, name="regular")


def one_dim_rep(character: Character, name: str = "") -> Representation:
    """The 1-dim representation whose values are a (linear) class function."""
    g = character.group
    if character.dim != 1:
        raise RepresentationError("character is not linear")
    mats = [CMatrix.scalar(character.values[g.class_of[x]]) for x in range(g.order)]
    return Representation(g, mats, name=name)


def direct_sum(*reps: Representation) -> Representation:
    g = reps[0].group
    if any(r.group is not g for r in reps):
        raise RepresentationError("group mismatch")
    return Representation(g, [block_diag(*(r.matrices[x] for r in reps)) for x in range(g.order)],
                          name="+".join(r.name for r in reps))


def conjugated(rep: Representation, s: CMatrix) -> Representation:
    """x -> S rho(x) S^-1."""
    sinv = s.inverse()
    return Representation(rep.group, [s @ m @ sinv for m in rep.matrices], name=f"S{rep.name}S^-1")


def tensor_product_rep(*reps: Representation, group: FiniteGroup) -> Representation:
    """Outer tensor product on a direct product built from the reps' groups."""
    info = getattr(group, "product_info", None)
    if info is None or len(info.factors) != len(reps):
        raise RepresentationError("target must be the direct product of the factor groups")
    for f, r in zip(info.factors, reps):
        if f is not r.group:
            raise RepresentationError("factor group mismatch")
    mats = []
    for x in range(group.order):
        parts = info.decode(x)
        m = reps[0].matrices[parts[0]]
        for r, p in zip(reps[1:], parts[1:]):
            m = mat_kron(m, r.matrices[p])
        mats.append(m)
    return Representation(group, mats, name="⊗".join(r.name for r in reps))


def pullback_rep(rep: Representation, projection: GroupHom, name: str = "") -> Representation:
    if projection.target is not rep.group:
        raise RepresentationError("projection does not land in the representation's group")
    if not projection.is_surjective:
        raise RepresentationError("projection is not surjective")
    src = projection.source
    return Representation(src, [rep.matrices[projection(x)] for x in range(src.order)], name=name or rep.name)


def restrict_rep(rep: Representation, embedding: GroupHom, name: str = "") -> Representation:
    if embedding.target is not rep.group:
        raise RepresentationError("embedding does not land in the representation's group")
    if not embedding.is_injective:
        raise RepresentationError("embedding is not injective")
    src = embedding.source
    return Representation(src, [rep.matrices[embedding(x)] for x in range(src.order)], name=name or rep.name)


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """Class function; values follow ``group.classes`` order."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    @property
    def dim(self) -> int:
        v = self.values[self.group.class_of[self.group.identity]]
        return int(v.to_rational())

    def at(self, x: int) -> Cyclotomic:
        return self.values[self.group.class_of[x]]

    def __mul__(self, other: Character) -> Character:
        _same_group(self, other)
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: Character) -> Character:
        _same_group(self, other)
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def conj(self) -> Character:
        return Character(self.group, tuple(v.conj() for v in self.values))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _same_group(a, b) -> None:
    if a.group is not b.group:
        raise ValueError("characters belong to different groups")


def character_of(rep: Representation) -> Character:
    g = rep.group
    return Character(g, tuple(mat_trace(rep.matrices[c.representative]) for c in g.classes))


def regular_character(g: FiniteGroup) -> Character:
    return Character(g, tuple(Cyclotomic.rational(g.order if g.identity in c.members else 0) for c in g.classes))


def char_inner_product(a: Character, b: Character) -> Cyclotomic:
    """(1/|G|) sum_C |C| a(C) conj(b(C))."""
    _same_group(a, b)
    g = a.group
    total = cyc_sum(Cyclotomic.rational(c.size) * x * y.conj() for c, x, y in zip(g.classes, a.values, b.values))
    return total * Cyclotomic.rational(Fraction(1, g.order))


def is_irreducible(rep: Representation) -> bool:
    chi = character_of(rep)
    return char_inner_product(chi, chi) == 1


def are_equivalent(a: Representation, b: Representation) -> bool:
    """Equivalence over C for finite groups: equal characters."""
    if a.group is not b.group:
        raise ValueError("representations of different groups")
    return character_of(a) == character_of(b)


# ---------------------------------------------------------------------------
# character tables
# ---------------------------------------------------------------------------

@dataclass
class CharacterTable:
    """Rows of irreducible character values over a fixed column order of classes."""

    group: FiniteGroup
    classes: tuple[ConjugacyClass, ...]
    rows: tuple[tuple[Cyclotomic, ...], ...]
    provenance: tuple[str, ...]
    prime: Optional[int] = None
    row_names: tuple[str, ...] = ()
    class_names: tuple[str, ...] = ()

    def __post_init__(self):
        self.classes = tuple(self.classes)
        self.rows = tuple(tuple(r) for r in self.rows)
        self.provenance = tuple(self.provenance)
        if len(self.provenance) != len(self.rows):
            raise ValueError("one provenance entry per row")
        if any(len(r) != len(self.classes) for r in self.rows):
            raise ValueError("row length must equal the number of classes")
        if not self.row_names:
            self.row_names = tuple(f"χ{i + 1}" for i in range(len(self.rows)))
        if not self.class_names:
            self.class_names = tuple(class_label(self.group, c) for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def identity_column(self) -> int:
        return next(j for j, c in enumerate(self.classes) if self.group.identity in c.members)

    @property
    def dims(self) -> tuple[int, ...]:
        j = self.identity_column
        return tuple(int(r[j].to_rational()) for r in self.rows)

    def is_square(self) -> bool:
        return len(self.rows) == len(self.classes)

    def character(self, i: int) -> Character:
        pos = {c.representative: j for j, c in enumerate(self.classes)}
        return Character(self.group, tuple(self.rows[i][pos[c.representative]] for c in self.group.classes))

    def characters(self) -> list[Character]:
        return [self.character(i) for i in range(len(self.rows))]

    def problems(self) -> list[str]:
        """Orthogonality and degree-sum failures (empty list means valid)."""
        out = []
        n = self.group.order
        gram = _row_gram(self)
        for a in range(len(self.rows)):
            for b in range(len(self.rows)):
                want = n if a == b else 0
                if gram[a][b] != want:
                    out.append(f"row orthogonality fails for ({self.row_names[a]}, {self.row_names[b]})")
        if self.is_square():
            col = _col_gram(self)
            for i in range(len(self.classes)):
                for j in range(len(self.classes)):
                    want = Fraction(n, self.sizes[i]) if i == j else 0
                    if col[i][j] != want:
                        out.append(f"column orthogonality fails for ({self.class_names[i]}, {self.class_names[j]})")
            if sum(d * d for d in self.dims) != n:
                out.append("sum of squared dimensions differs from the group order")
        return out

    def to_json(self, names: Optional[Sequence[str]] = None) -> dict:
        """Export; ``names`` optionally replaces element labels in class headers."""
        labels = names or self.group.labels
        return {
            "classes": [{"label": class_label(self.group, c, labels), "size": c.size,
                         "representative": labels[c.representative]} for c in self.classes],
            "rows": [{"dim": d, "values": [v.to_json() for v in r], "provenance": p}
                     for d, r, p in zip(self.dims, self.rows, self.provenance)],
        }

    def with_rows(self, rows, provenance, row_names=()) -> CharacterTable:
        return CharacterTable(self.group, self.classes, rows, provenance, self.prime, tuple(row_names))

    @classmethod
    def from_representations(cls, reps: Sequence[Representation], names: Sequence[str] = ()) -> CharacterTable:
        g = reps[0].group
        rows = [character_of(r).values for r in reps]
        return cls(g, g.classes, rows, ["constructive"] * len(rows),
                   row_names=tuple(names) or tuple(r.name or f"χ{i + 1}" for i, r in enumerate(reps)))


def class_label(g: FiniteGroup, cls: ConjugacyClass, names: Optional[Sequence[str]] = None) -> str:
    lab = (names or g.labels)[cls.representative]
    return f"[{lab}]" if cls.size == 1 else f"{cls.size}[{lab}]"


def _gaussian_arrays(rows) -> Optional[tuple[np.ndarray, np.ndarray]]:
    flat = [v for r in rows for v in r]
    if not all(v.is_integral_gaussian() for v in flat):
        return None
    re = np.array([[int(v.real_imag()[0]) for v in r] for r in rows], dtype=np.int64)
    im = np.array([[int(v.real_imag()[1]) for v in r] for r in rows], dtype=np.int64)
    return re, im


def _row_gram(t: CharacterTable):
    """sum_C |C| chi_a(C) conj(chi_b(C)) for all row pairs (exact)."""
    arrs = _gaussian_arrays(t.rows)
    sizes = np.array(t.sizes, dtype=np.int64)
    if arrs is not None:
        re, im = arrs
        real = (re * sizes) @ re.T + (im * sizes) @ im.T
        imag = (im * sizes) @ re.T - (re * sizes) @ im.T
        return [[Cyclotomic.from_powers(4, {0: int(real[a, b]), 1: int(imag[a, b])}) for b in range(len(t.rows))]
                for a in range(len(t.rows))]
    return [[cyc_sum(Cyclotomic.rational(s) * x * y.conj() for s, x, y in zip(t.sizes, ra, rb))
             for rb in t.rows] for ra in t.rows]


def _col_gram(t: CharacterTable):
    arrs = _gaussian_arrays(t.rows)
    if arrs is not None:
        re, im = arrs
        real = re.T @ re + im.T @ im
        imag = im.T @ re - re.T @ im
        r = len(t.classes)
        return [[Cyclotomic.from_powers(4, {0: int(real[i, j]), 1: int(imag[i, j])}) for j in range(r)] for i in range(r)]
    cols = list(zip(*t.rows))
    return [[cyc_sum(x * y.conj() for x, y in zip(ci, cj)) for cj in cols] for ci in cols]


def _row_sort_key(row: Sequence[Cyclotomic], dim_col: int) -> tuple:
    return (int(row[dim_col].to_rational()), tuple(v.sort_key() for v in row))


# --- class-algebra route -----------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def dixon_prime(g: FiniteGroup) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(|G|)."""
    e, n = g.exponent, g.order
    p = 2
    while not (_is_prime(p) and (p - 1) % e == 0 and p * p > 4 * n):
        p += 1
    return p


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    return next(a for a in range(2, p) if all(pow(a, (p - 1) // q, p) != 1 for q in factors)) if p > 2 else 1


def _rref_mod(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = m.copy() % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if not len(nz):
            continue
        s = r + int(nz[0])
        if s != r:
            m[[r, s]] = m[[s, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        f = m[:, c].copy()
        f[r] = 0
        m = (m - np.outer(f, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _nullspace_mod(m: np.ndarray, p: int) -> np.ndarray:
    k = m.shape[1]
    red, piv = _rref_mod(m, p)
    free = [c for c in range(k) if c not in piv]
    out = np.zeros((len(free), k), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, pc in enumerate(piv):
            out[i, pc] = (-red[r, f]) % p
    return out


def _split(a: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> list[tuple[np.ndarray, list[int]]]:
    k = basis.shape[0]
    restricted = ((a @ basis.T) % p)[pivots, :]
    if np.array_equal(restricted, (restricted[0, 0] * np.eye(k, dtype=np.int64)) % p):
        return [(basis, pivots)]
    pieces = []
    found = 0
    for lam in range(p):
        null = _nullspace_mod((restricted - lam * np.eye(k, dtype=np.int64)) % p, p)
        if len(null):
            sub, piv = _rref_mod((null @ basis) % p, p)
            pieces.append((sub, piv))
            found += sub.shape[0]
            if found == k:
                break
    if found != k:
        raise ArithmeticError("class matrix is not diagonalisable mod p")
    return pieces


def class_constants(g: FiniteGroup) -> np.ndarray:
    """c[i, j, k] = #{(x, y) in C_i x C_j : xy = z_k} for the class representative z_k."""
    r = len(g.classes)
    cls = np.array(g.class_of, dtype=np.int64)
    inv = np.array(g.inverses, dtype=np.int64)
    c = np.zeros((r, r, r), dtype=np.int64)
    xs = np.arange(g.order)
    for k, ck in enumerate(g.classes):
        ys = g.cayley[inv, ck.representative]
        np.add.at(c, (cls[xs], cls[ys], k), 1)
    return c


def character_table(g: FiniteGroup) -> CharacterTable:
    """Exact character table from the class algebra, independent of any representation."""
    classes = g.classes
    r = len(classes)
    n = g.order
    e = g.exponent
    p = dixon_prime(g)
    sizes = [c.size for c in classes]
    consts = class_constants(g) % p
    id_cls = g.class_of[g.identity]
    inv_cls = [g.class_of[g.inv(c.representative)] for c in classes]

    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for i in range(r):
        if all(b.shape[0] == 1 for b, _ in spaces):
            break
        if i == id_cls:
            continue
        nxt = []
        for basis, piv in spaces:
            nxt.extend([(basis, piv)] if basis.shape[0] == 1 else _split(consts[i], basis, piv, p))
        spaces = nxt
    if len(spaces) != r:
        raise ArithmeticError("class algebra did not split into one-dimensional pieces")

    z = pow(_primitive_root(p), (p - 1) // e, p) if e > 1 else 1
    e_inv = pow(e, -1, p)
    powmap = [[g.class_of[g.power(c.representative, l)] for c in classes] for l in range(e)]
    rows = []
    for basis, _ in spaces:
        v = basis[0]
        omega = [(int(x) * pow(int(v[id_cls]), -1, p)) % p for x in v]
        s = sum(omega[i] * omega[inv_cls[i]] * pow(sizes[i], -1, p) for i in range(r)) % p
        dsq = (n * pow(s, -1, p)) % p
        dims = [d for d in range(1, isqrt(n) + 1) if (d * d - dsq) % p == 0]
        if len(dims) != 1:
            raise ArithmeticError("could not recover a degree")
        d = dims[0]
        chi_mod = [(d * omega[i] * pow(sizes[i], -1, p)) % p for i in range(r)]
        row = []
        for i in range(r):
            mult = {}
            for k in range(e):
                m_k = (e_inv * sum(chi_mod[powmap[l][i]] * pow(z, (-k * l) % e, p) for l in range(e))) % p
                if m_k > d:
                    raise ArithmeticError("eigenvalue multiplicity out of range")
                if m_k:
                    mult[k] = m_k
            if sum(mult.values()) != d:
                raise ArithmeticError("multiplicities do not add up to the degree")
            row.append(Cyclotomic.from_powers(e, mult))
        rows.append(tuple(row))
    rows.sort(key=lambda row: _row_sort_key(row, id_cls))
    table = CharacterTable(g, classes, rows, ["dixon"] * r, prime=p)
    bad = table.problems()
    if bad:
        raise ArithmeticError("lifted table fails orthogonality: " + bad[0])
    return table


# --- completion, decomposition, matching ---------------------------------------

def partial_class_index(t: CharacterTable) -> list[int]:
    """Column of ``t`` holding each element."""
    out = [0] * t.group.order
    for j, c in enumerate(t.classes):
        for m in c.members:
            out[m] = j
    return out


def complete_by_orthogonality(partial: CharacterTable) -> CharacterTable:
    """Fill missing linear rows with +-1 vectors forced by orthogonality.

    Candidates are +-1 class functions (1 on the identity) that are
    multiplicative on the group and orthogonal to every known row; the missing
    rows must be the unique set of that size which makes the table pass both
    orthogonality relations.  Orthogonality alone does not suffice: a
    Hadamard-type mix of four +-1 rows is again a set of orthonormal +-1 rows.
    """
    missing = len(partial.classes) - len(partial.rows)
    if missing == 0:
        return partial
    bad = [m for m in partial.problems() if m.startswith("row")]
    if bad:
        raise ValueError("inconsistent partial table: " + bad[0])
    dim_sq = sum(d * d for d in partial.dims)
    if dim_sq + missing != partial.group.order:
        raise ValueError("missing rows cannot all be one-dimensional")
    idc = partial.identity_column
    others = [j for j in range(len(partial.classes)) if j != idc]
    g = partial.group
    table = np.asarray(g.cayley)
    cls_of = np.asarray(partial_class_index(partial))
    candidates = []
    for signs in itertools.product((1, -1), repeat=len(others)):
        col_signs = np.ones(len(partial.classes), dtype=np.int64)
        col_signs[others] = signs
        v = col_signs[cls_of]
        if not np.array_equal(v[table], np.outer(v, v)):
            continue
        row = [ONE] * len(partial.classes)
        for j, s in zip(others, signs):
            row[j] = Cyclotomic.rational(s)
        row = tuple(row)
        if row in partial.rows:
            continue
        probe = partial.with_rows(partial.rows + (row,), partial.provenance + ("orthogonality-completion",))
        if not [m for m in probe.problems() if m.startswith("row")]:
            candidates.append(row)
    solutions = []
    for combo in itertools.combinations(candidates, missing):
        full = partial.with_rows(partial.rows + combo, partial.provenance + ("orthogonality-completion",) * missing,
                                 partial.row_names + tuple(f"χ{len(partial.rows) + i + 1}" for i in range(missing)))
        if not full.problems():
            solutions.append(full)
            if len(solutions) > 1:
                raise ValueError("completion is not unique")
    if not solutions:
        raise ValueError("no +-1 completion satisfies orthogonality")
    return solutions[0]


def decompose_character(x: Character, table: CharacterTable) -> tuple[int, ...]:
    if x.group is not table.group:
        raise ValueError("character and table belong to different groups")
    out = []
    for chi in table.characters():
        m = char_inner_product(x, chi)
        if not m.is_rational() or m.to_rational().denominator != 1 or m.to_rational() < 0:
            raise ValueError(f"multiplicity {m} is not a non-negative integer")
        out.append(int(m.to_rational()))
    recon = [ZERO] * len(x.values)
    for m, chi in zip(out, table.characters()):
        recon = [a + Cyclotomic.rational(m) * b for a, b in zip(recon, chi.values)]
    if tuple(recon) != x.values:
        raise ValueError("character is not a combination of the table's rows")
    return tuple(out)


def tables_match(a: CharacterTable, b: CharacterTable) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Row and column permutations with a[i][j] == b[rows[i]][cols[j]], or None.

    Column sizes must agree.  Columns are assigned one at a time by
    backtracking; after each assignment the rows are refined by value, and a
    branch dies as soon as some refinement cell has unequal counts.
    """
    ra, rb = len(a.rows), len(b.rows)
    ca, cb = len(a.classes), len(b.classes)
    if (ra, ca) != (rb, cb):
        return None
    if sorted(a.sizes) != sorted(b.sizes):
        return None
    if Counter(v for r in a.rows for v in r) != Counter(v for r in b.rows for v in r):
        return None
    if Counter(frozenset(Counter(r).items()) for r in a.rows) != Counter(frozenset(Counter(r).items()) for r in b.rows):
        return None
    col_sig_a = [(a.sizes[j], frozenset(Counter(r[j] for r in a.rows).items())) for j in range(ca)]
    col_sig_b = [(b.sizes[j], frozenset(Counter(r[j] for r in b.rows).items())) for j in range(cb)]
    if Counter(col_sig_a) != Counter(col_sig_b):
        return None

    cols = [-1] * ca
    used = [False] * cb

    def refine(cells, ja, jb):
        out = []
        for rows_a, rows_b in cells:
            by_a: dict = {}
            by_b: dict = {}
            for i in rows_a:
                by_a.setdefault(a.rows[i][ja], []).append(i)
            for i in rows_b:
                by_b.setdefault(b.rows[i][jb], []).append(i)
            if by_a.keys() != by_b.keys():
                return None
            for v, xs in by_a.items():
                if len(xs) != len(by_b[v]):
                    return None
                out.append((xs, by_b[v]))
        return out

    def rec(ja, cells):
        if ja == ca:
            return cells
        cand = [jb for jb in range(cb) if not used[jb] and col_sig_b[jb] == col_sig_a[ja]]
        cand.sort(key=lambda jb: (jb != ja, jb))
        for jb in cand:
            nxt = refine(cells, ja, jb)
            if nxt is None:
                continue
            used[jb] = True
            cols[ja] = jb
            done = rec(ja + 1, nxt)
            if done is not None:
                return done
            used[jb] = False
        return None

    cells = rec(0, [(list(range(ra)), list(range(rb)))])
    if cells is None:
        return None
    rows = [-1] * ra
    for xs, ys in cells:
        for x, y in zip(xs, ys):
            rows[x] = y
    return tuple(rows), tuple(cols)
