"""Exact arithmetic over Q and the cyclotomic fields Q(zeta_n).

A :class:`Cyclotomic` is stored in the power basis of Q(zeta_n) modulo the
n-th cyclotomic polynomial, always at the smallest conductor n that contains
the value.  Two values are equal iff their (order, coeffs) pairs are equal.
No floating point is used anywhere.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "Cyclotomic"]


# ---------------------------------------------------------------------------
# cyclotomic polynomial machinery (all cached per conductor)
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficients low -> high
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return q, num[: len(den) - 1]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
        assert not any(rem)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _power_reductions(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the coordinates of x^k mod Phi_n for k = 0..n-1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce with x^deg = -sum(phi[i] x^i)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(n: int, raw: dict[int, Fraction]) -> list[Fraction]:
    red = _power_reductions(n)
    out = [Fraction(0)] * totient(n)
    for k, c in raw.items():
        if not c:
            continue
        for i, r in enumerate(red[k % n]):
            if r:
                out[i] += c * r
    return out


@functools.lru_cache(maxsize=None)
def _subfield_solver(big: int, small: int):
    """Data for recognising elements of Q(zeta_big) lying in Q(zeta_small).

    Returns (pivot_rows, inverse, columns) where columns[j] is the image of
    zeta_small^j in big-coordinates, and inverse solves the square system on
    pivot_rows.
    """
    red = _power_reductions(big)
    step = big // small
    cols = [red[(j * step) % big] for j in range(totient(small))]
    m, d = len(cols), len(cols[0])
    # choose m independent coordinate rows greedily
    mat = [[Fraction(cols[j][i]) for j in range(m)] for i in range(d)]
    pivots: list[int] = []
    basis: list[list[Fraction]] = []
    for i in range(d):
        cand = mat[i]
        trial = basis + [cand]
        if _rank(trial) == len(trial):
            basis.append(cand)
            pivots.append(i)
        if len(pivots) == m:
            break
    inv = _invert([row[:] for row in basis])
    return tuple(pivots), inv, cols


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [a / p for a in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _try_descend(big: int, vec: list[Fraction], small: int) -> list[Fraction] | None:
    pivots, inv, cols = _subfield_solver(big, small)
    rhs = [vec[i] for i in pivots]
    sol = [sum((inv[j][k] * rhs[k] for k in range(len(rhs))), Fraction(0)) for j in range(len(inv))]
    for i in range(len(vec)):
        if sum((sol[j] * cols[j][i] for j in range(len(sol))), Fraction(0)) != vec[i]:
            return None
    return sol


def _canonical(n: int, vec: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    if all(c == 0 for c in vec[1:]):
        return 1, (vec[0],)
    for m in _divisors(n):
        if m == n:
            break
        if m % 4 == 2 or m == 1:
            continue
        sol = _try_descend(n, vec, m)
        if sol is not None:
            return m, tuple(sol) + (Fraction(0),) * (m - len(sol))
    return n, tuple(vec) + (Fraction(0),) * (n - len(vec))


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------

class Cyclotomic:
    """Exact element sum_k c_k zeta_n^k of Q(zeta_n) in canonical form."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence[Fraction | int]):
        # trusted constructor: callers pass canonical data
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._hash = hash((self.order, self.coeffs))

    # construction -------------------------------------------------------
    @classmethod
    def from_powers(cls, n: int, powers: dict[int, Fraction | int]) -> Cyclotomic:
        """Build sum_k powers[k] * zeta_n^k and canonicalise."""
        if n < 1:
            raise ValueError("conductor must be positive")
        vec = _reduce(n, {k: Fraction(c) for k, c in powers.items()})
        return cls(*_canonical(n, vec))

    @classmethod
    def rational(cls, value: int | Fraction) -> Cyclotomic:
        return cls(1, (Fraction(value),))

    @classmethod
    def coerce(cls, value: Scalar) -> Cyclotomic:
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot coerce {value!r} to Cyclotomic")

    # structure ----------------------------------------------------------
    def _powers(self) -> dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def _lift(self, n: int) -> dict[int, Fraction]:
        step = n // self.order
        return {k * step: c for k, c in self._powers().items()}

    def is_rational(self) -> bool:
        return self.order == 1

    def is_zero(self) -> bool:
        return self.order == 1 and self.coeffs[0] == 0

    def is_integral_gaussian(self) -> bool:
        return self.order in (1, 4) and all(c.denominator == 1 for c in self.coeffs)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def real_imag(self) -> tuple[Fraction, Fraction]:
        """(re, im) for values in Q(i)."""
        if self.order == 1:
            return self.coeffs[0], Fraction(0)
        if self.order == 4:
            return self.coeffs[0], self.coeffs[1]
        raise ValueError(f"{self} is not in Q(i)")

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: Scalar) -> Cyclotomic:
        return cyc_add(self, Cyclotomic.coerce(other))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> Cyclotomic:
        return cyc_add(self, -Cyclotomic.coerce(other))

    def __rsub__(self, other: Scalar) -> Cyclotomic:
        return cyc_add(Cyclotomic.coerce(other), -self)

    def __mul__(self, other: Scalar) -> Cyclotomic:
        return cyc_mul(self, Cyclotomic.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> Cyclotomic:
        return cyc_mul(self, Cyclotomic.coerce(other).inverse())

    def __rtruediv__(self, other: Scalar) -> Cyclotomic:
        return cyc_mul(Cyclotomic.coerce(other), self.inverse())

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> Cyclotomic:
        return cyc_conj(self)

    def galois(self, k: int) -> Cyclotomic:
        """Image under zeta_n -> zeta_n^k (k coprime to the conductor)."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not coprime to {n}")
        return Cyclotomic.from_powers(n, {(j * k) % n: c for j, c in self._powers().items()})

    def norm(self) -> Fraction:
        out = ONE
        for k in range(1, self.order + 1):
            if math.gcd(k, self.order) == 1:
                out = out * self.galois(k)
        return out.to_rational()

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0])
        others = ONE
        for k in range(2, self.order):
            if math.gcd(k, self.order) == 1:
                others = others * self.galois(k)
        nrm = (self * others).to_rational()
        return others * Cyclotomic.rational(1 / nrm)

    # comparison ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.order == 1 and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        """Total order used for deterministic table layouts (1 sorts before -1)."""
        return (self.order, tuple(-c for c in self.coeffs))

    # rendering ----------------------------------------------------------
    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Cyclotomic:
        n = int(data["order"])
        coeffs = data["coeffs"]
        if len(coeffs) != n:
            raise ValueError("coeffs length must equal order")
        return cls.from_powers(n, {k: Fraction(a, b) for k, (a, b) in enumerate(coeffs)})


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(x: Cyclotomic) -> str:
    """Human string: '2i', '-1', '1+i', 'z8^3' style for general conductors."""
    if x.order == 1:
        return _frac_str(x.coeffs[0])
    terms: list[tuple[Fraction, str]] = []
    if x.order == 4:
        terms = [(x.coeffs[0], ""), (x.coeffs[1], "i")]
    else:
        for k, c in enumerate(x.coeffs):
            unit = "" if k == 0 else (f"z{x.order}" if k == 1 else f"z{x.order}^{k}")
            terms.append((c, unit))
    out = ""
    for c, unit in terms:
        if c == 0:
            continue
        mag = abs(c)
        if unit:
            body = unit if mag == 1 else (f"{_frac_str(mag)}{unit}" if mag.denominator == 1 else f"({_frac_str(mag)}){unit}")
        else:
            body = _frac_str(mag)
        if c < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out or "0"


ZERO = Cyclotomic(1, (0,))
ONE = Cyclotomic(1, (1,))


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form; root_of_unity(4, 1) is i."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return Cyclotomic.from_powers(n, {k % n: 1})


I_UNIT = root_of_unity(4, 1)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    if a.order == b.order:
        if a.order == 1:
            return Cyclotomic(1, (a.coeffs[0] + b.coeffs[0],))
        vec = [x + y for x, y in zip(a.coeffs, b.coeffs)]
        return Cyclotomic(*_canonical(a.order, vec[: totient(a.order)]))
    n = math.lcm(a.order, b.order)
    raw = a._lift(n)
    for k, c in b._lift(n).items():
        raw[k] = raw.get(k, Fraction(0)) + c
    return Cyclotomic.from_powers(n, raw)


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    if a.order == 1 and b.order == 1:
        return Cyclotomic(1, (a.coeffs[0] * b.coeffs[0],))
    if a.order == 1 or b.order == 1:
        r, x = (a, b) if a.order == 1 else (b, a)
        s = r.coeffs[0]
        if s == 0:
            return ZERO
        return Cyclotomic(x.order, tuple(s * c for c in x.coeffs))
    n = math.lcm(a.order, b.order)
    raw: dict[int, Fraction] = {}
    for i, c in a._lift(n).items():
        for j, d in b._lift(n).items():
            k = (i + j) % n
            raw[k] = raw.get(k, Fraction(0)) + c * d
    return Cyclotomic.from_powers(n, raw)


def cyc_conj(a: Cyclotomic) -> Cyclotomic:
    if a.order == 1:
        return a
    n = a.order
    return Cyclotomic.from_powers(n, {(-k) % n: c for k, c in a._powers().items()})


def cyc_sum(values: Iterable[Cyclotomic]) -> Cyclotomic:
    out = ZERO
    for v in values:
        out = cyc_add(out, v)
    return out


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CMatrix:
    rows: int
    cols: int
    entries: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if self.rows * self.cols != len(self.entries):
            raise ValueError("rows * cols must equal the number of entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> CMatrix:
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(Cyclotomic.coerce(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> CMatrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, value: Scalar) -> CMatrix:
        return cls(1, 1, (Cyclotomic.coerce(value),))

    def __getitem__(self, ij: tuple[int, int]) -> Cyclotomic:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[Cyclotomic]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: CMatrix) -> CMatrix:
        return mat_mul(self, other)

    def __neg__(self) -> CMatrix:
        return CMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __add__(self, other: CMatrix) -> CMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return CMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, s: Scalar) -> CMatrix:
        s = Cyclotomic.coerce(s)
        return CMatrix(self.rows, self.cols, tuple(s * x for x in self.entries))

    def transpose(self) -> CMatrix:
        return CMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def conj_transpose(self) -> CMatrix:
        return CMatrix(self.cols, self.rows, tuple(self[i, j].conj() for j in range(self.cols) for i in range(self.rows)))

    def inverse(self) -> CMatrix:
        if not self.is_square:
            raise ValueError("non-square matrix")
        n = self.rows
        aug = [r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.row_lists())]
        for c in range(n):
            piv = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            p = aug[c][c].inverse()
            aug[c] = [p * x for x in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return CMatrix.from_rows([r[n:] for r in aug])

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.row_lists()) + "]"


def mat_mul(a: CMatrix, b: CMatrix) -> CMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        arow = a.entries[i * a.cols:(i + 1) * a.cols]
        for j in range(b.cols):
            acc = ZERO
            for k, x in enumerate(arow):
                if x.is_zero():
                    continue
                y = b.entries[k * b.cols + j]
                if not y.is_zero():
                    acc = cyc_add(acc, cyc_mul(x, y))
            out.append(acc)
    return CMatrix(a.rows, b.cols, tuple(out))


def mat_kron(a: CMatrix, b: CMatrix) -> CMatrix:
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                x = a[i, j]
                for l in range(b.cols):
                    out.append(cyc_mul(x, b[k, l]))
    return CMatrix(a.rows * b.rows, a.cols * b.cols, tuple(out))


def mat_trace(a: CMatrix) -> Cyclotomic:
    if not a.is_square:
        raise ValueError("trace of a non-square matrix")
    return cyc_sum(a[i, i] for i in range(a.rows))


def block_diag(*blocks: CMatrix) -> CMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return CMatrix.from_rows(rows)


def nullspace(rows: Sequence[Sequence[Cyclotomic]], ncols: int) -> list[list[Cyclotomic]]:
    """Basis of {x : A x = 0} for a matrix given as a list of rows."""
    mat = [[Cyclotomic.coerce(x) for x in r] for r in rows]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if not mat[r][c].is_zero()), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][c].inverse()
        mat[rank] = [inv * x for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][c].is_zero():
                f = mat[r][c]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][f]
        basis.append(vec)
    return basis
