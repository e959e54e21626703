"""Exact arithmetic over Q and Q(i) with dense matrices.

Scalars are Gaussian rationals (pairs of ``fractions.Fraction``), so every
computation in the package is bit-exact; no floating point appears anywhere.
Matrices are immutable dense grids with the row-reduction based kit needed
upstream: rank, kernel, solving, inversion, and the signature of a Hermitian
form by exact congruence diagonalization (Sylvester's law of inertia).

Serialization: a rational prints as ``"a/b"`` (``/b`` omitted when b = 1) and
a Gaussian rational as ``"a/b+c/d*i"`` with either part omissible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotHermitianError, ParseError

Rational = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class GaussRational:
    """An element of Q(i), held as exact real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "GaussRational | None":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """x * conj(x), always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates / protocol -------------------------------------------

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational('{format_scalar(self)}')"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussRational(0)
ONE = GaussRational(1)
I_UNIT = GaussRational(0, 1)


def parse_rational(s: str) -> Fraction:
    s = s.strip().replace(" ", "")
    if not _RAT_RE.match(s):
        raise ParseError(f"not a rational: {s!r}")
    return Fraction(s)


def parse_scalar(s: str) -> GaussRational:
    """Parse ``"a/b"``, ``"c/d*i"``, or ``"a/b+c/d*i"`` (signs allowed)."""
    t = s.strip().replace(" ", "")
    if not t:
        raise ParseError("empty scalar")
    if "i" not in t:
        return GaussRational(parse_rational(t))
    if not t.endswith("i"):
        raise ParseError(f"malformed scalar: {s!r}")
    t = t[:-1]
    if t.endswith("*"):
        t = t[:-1]
    # split the remaining "a/b+c/d" at the imaginary part's sign
    split = -1
    for idx in range(len(t) - 1, 0, -1):
        if t[idx] in "+-" and t[idx - 1] not in "+-/":
            split = idx
            break
    if split > 0:
        re_part, im_part = t[:split], t[split:]
    else:
        re_part, im_part = "", t
    if im_part in ("", "+"):
        im = Fraction(1)
    elif im_part == "-":
        im = Fraction(-1)
    else:
        im = parse_rational(im_part)
    re_val = parse_rational(re_part) if re_part else Fraction(0)
    return GaussRational(re_val, im)


def format_scalar(x: GaussRational) -> str:
    if x.im == 0:
        return str(x.re)
    im_str = f"{abs(x.im)}*i"
    if x.re == 0:
        return im_str if x.im > 0 else "-" + im_str
    sign = "+" if x.im > 0 else "-"
    return f"{x.re}{sign}{im_str}"


Vector = tuple  # tuple[GaussRational, ...]; kept loose on purpose


def vec(entries) -> Vector:
    return tuple(_as_scalar(e) for e in entries)


def _as_scalar(e) -> GaussRational:
    if isinstance(e, GaussRational):
        return e
    if isinstance(e, (int, Fraction)):
        return GaussRational(e)
    if isinstance(e, str):
        return parse_scalar(e)
    raise ParseError(f"cannot coerce {e!r} to a scalar")


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = _as_scalar(c)
    return tuple(c * a for a in v)


def vec_conj(v: Vector) -> Vector:
    return tuple(a.conj() for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(not a for a in v)


class GMatrix:
    """Immutable dense matrix over Q(i).  Columns are images of basis
    vectors, so composition is plain matrix product."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(_as_scalar(e) for e in row) for row in entries)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ParseError("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("GMatrix is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zeros(rows: int, cols: int) -> "GMatrix":
        return GMatrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "GMatrix":
        return GMatrix(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_columns(columns, rows: int | None = None) -> "GMatrix":
        cols = [vec(c) for c in columns]
        if not cols:
            if rows is None:
                raise ParseError("cannot infer row count of an empty matrix")
            return GMatrix.zeros(rows, 0)
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ParseError("columns of unequal length")
        return GMatrix([[c[i] for c in cols] for i in range(n)])

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(
            " ".join(format_scalar(e) for e in row) for row in self.entries
        )
        return f"GMatrix({self.rows}x{self.cols}: {body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    # -- elementwise ------------------------------------------------------

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in matrix addition")
        return GMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in matrix subtraction")
        return GMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self):
        return GMatrix([[-a for a in row] for row in self.entries])

    def scale(self, c) -> "GMatrix":
        c = _as_scalar(c)
        return GMatrix([[c * a for a in row] for row in self.entries])

    def conj(self) -> "GMatrix":
        return GMatrix([[a.conj() for a in row] for row in self.entries])

    def transpose(self) -> "GMatrix":
        return GMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def conj_transpose(self) -> "GMatrix":
        return self.transpose().conj()

    # -- products ---------------------------------------------------------

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.entries[i]
            acc = out[i]
            for k in range(self.cols):
                a = row[k]
                if not a:
                    continue
                orow = other.entries[k]
                for j in range(other.cols):
                    b = orow[j]
                    if b:
                        acc[j] = acc[j] + a * b
        return GMatrix(out)

    def apply(self, v: Vector) -> Vector:
        if self.cols != len(v):
            raise ValueError("shape mismatch in matrix-vector product")
        out = []
        for i in range(self.rows):
            s = ZERO
            for a, x in zip(self.entries[i], v):
                if a and x:
                    s = s + a * x
            out.append(s)
        return tuple(out)

    # -- slicing ----------------------------------------------------------

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "GMatrix":
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise ValueError("submatrix bounds out of range")
        if r0 == r1:
            return GMatrix.zeros(0, c1 - c0)
        return GMatrix([row[c0:c1] for row in self.entries[r0:r1]])

    def hstack(self, other: "GMatrix") -> "GMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return GMatrix(
            [ra + rb for ra, rb in zip(self.entries, other.entries)]
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["GMatrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(row) for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = ONE / m[r][c]
            m[r] = [inv * e for e in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return GMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[Vector]:
        """Basis of the right kernel, one vector per free column."""
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -R.entries[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, rhs: "GMatrix") -> "GMatrix | None":
        """A particular solution X of self @ X = rhs, or None if
        inconsistent.  Free variables are set to zero."""
        if rhs.rows != self.rows:
            raise ValueError("shape mismatch in solve")
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        for r in range(len(pivots)):
            if pivots[r] >= self.cols:
                return None  # a pivot landed in the rhs block
        sol = [[ZERO] * rhs.cols for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            for j in range(rhs.cols):
                sol[pc][j] = R.entries[r][self.cols + j]
        return GMatrix(sol)

    def solve_vector(self, b: Vector) -> Vector | None:
        x = self.solve(GMatrix.from_columns([b], rows=self.rows))
        return None if x is None else x.column(0)

    def inverse(self) -> "GMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices invert")
        x = self.solve(GMatrix.identity(self.rows))
        if x is None or (self @ x) != GMatrix.identity(self.rows):
            raise ValueError("matrix is singular")
        return x

    def column_space_basis(self) -> "GMatrix":
        """Canonical basis of the column space (reduced column echelon)."""
        R, pivots = self.transpose().rref()
        return R.submatrix(0, len(pivots), 0, self.cols).transpose()


def mat_kernel_rank(M: GMatrix) -> tuple[int, list[Vector]]:
    """Rank and a kernel basis; rank + len(kernel) == M.cols."""
    R, pivots = M.rref()
    del R
    return len(pivots), M.kernel_basis()


# -- subspaces (matrices whose columns span) ------------------------------


def span_contains(span: GMatrix, v: Vector) -> bool:
    if vec_is_zero(v):
        return True
    return span.solve_vector(v) is not None


def span_le(inner: GMatrix, outer: GMatrix) -> bool:
    """Column space containment: col(inner) <= col(outer)."""
    if inner.cols == 0 or inner.is_zero():
        return True
    return outer.hstack(inner).rank() == outer.rank()


def span_eq(a: GMatrix, b: GMatrix) -> bool:
    return span_le(a, b) and span_le(b, a)


def span_intersection(a: GMatrix, b: GMatrix) -> GMatrix:
    """Canonical basis of col(a) ∩ col(b)."""
    if a.cols == 0 or b.cols == 0:
        return GMatrix.zeros(a.rows, 0)
    stacked = a.hstack(b.scale(-1))
    vectors = []
    for k in stacked.kernel_basis():
        coeffs = k[: a.cols]
        vectors.append(a.apply(coeffs))
    if not vectors:
        return GMatrix.zeros(a.rows, 0)
    return GMatrix.from_columns(vectors, rows=a.rows).column_space_basis()


# -- Hermitian forms ------------------------------------------------------


@dataclass(frozen=True)
class SignatureTriple:
    """Inertia of a Hermitian form: positive, negative, and null counts."""

    plus: int
    minus: int
    zero: int

    @property
    def net(self) -> int:
        return self.plus - self.minus

    @property
    def dimension(self) -> int:
        return self.plus + self.minus + self.zero


def _check_hermitian(G: GMatrix) -> None:
    if G.rows != G.cols:
        raise NotHermitianError(-1, -1, f"matrix is {G.rows}x{G.cols}")
    for i in range(G.rows):
        for j in range(i, G.cols):
            if G.entries[i][j] != G.entries[j][i].conj():
                raise NotHermitianError(i, j)


def hermitian_diagonalize(G: GMatrix) -> tuple[list[GaussRational], GMatrix]:
    """Exact congruence diagonalization of a Hermitian G.

    Returns ``(diag, P)`` where the columns of P form a basis in which the
    sesquilinear form x^T G conj(y) is diagonal with the (real) entries
    ``diag``; i.e. P^T G conj(P) is the diagonal matrix.  Zero diagonal
    pivots are repaired by the standard add-a-row/column move, with the i
    factor when the off-diagonal witness is purely imaginary.
    """
    _check_hermitian(G)
    n = G.rows
    w = [list(row) for row in G.entries]
    p = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    def add_multiple(dst: int, src: int, mu: GaussRational) -> None:
        # basis change e_dst += mu * e_src
        mu_c = mu.conj()
        for c in range(n):
            w[dst][c] = w[dst][c] + mu * w[src][c]
        for r in range(n):
            w[r][dst] = w[r][dst] + mu_c * w[r][src]
        for r in range(n):
            p[r][dst] = p[r][dst] + mu * p[r][src]

    def swap(a: int, b: int) -> None:
        w[a], w[b] = w[b], w[a]
        for r in range(n):
            w[r][a], w[r][b] = w[r][b], w[r][a]
        for r in range(n):
            p[r][a], p[r][b] = p[r][b], p[r][a]

    for i in range(n):
        if not w[i][i]:
            j = next((k for k in range(i + 1, n) if w[k][k]), None)
            if j is not None:
                swap(i, j)
            else:
                witness = None
                for a in range(i, n):
                    for b in range(a + 1, n):
                        if w[a][b]:
                            witness = (a, b)
                            break
                    if witness:
                        break
                if witness is None:
                    break  # trailing block is zero
                a, b = witness
                mu = ONE if w[a][b].re != 0 else I_UNIT
                add_multiple(a, b, mu)
                if a != i:
                    swap(i, a)
        pivot = w[i][i]
        for r in range(i + 1, n):
            if w[r][i]:
                add_multiple(r, i, -(w[r][i] / pivot))

    diag = [w[i][i] for i in range(n)]
    return diag, GMatrix(p)


def hermitian_signature(G: GMatrix) -> SignatureTriple:
    """Inertia of a Hermitian G by exact congruence diagonalization."""
    diag, _ = hermitian_diagonalize(G)
    plus = minus = zero = 0
    for d in diag:
        if d.im != 0:
            raise NotHermitianError(-1, -1, "non-real congruence pivot")
        if d.re > 0:
            plus += 1
        elif d.re < 0:
            minus += 1
        else:
            zero += 1
    return SignatureTriple(plus, minus, zero)


def is_positive_definite(G: GMatrix) -> bool:
    sig = hermitian_signature(G)
    return sig.minus == 0 and sig.zero == 0


def sesquilinear_value(G: GMatrix, x: Vector, y: Vector) -> GaussRational:
    """x^T G conj(y): linear in x, conjugate-linear in y."""
    gy = G.apply(vec_conj(y))
    s = ZERO
    for a, b in zip(x, gy, strict=True):
        if a and b:
            s = s + a * b
    return s
