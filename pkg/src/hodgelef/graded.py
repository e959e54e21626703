"""Bigraded vector spaces with a real structure.

A :class:`HodgeFrame` is the discrete shape of an instance: a table of
block dimensions h^{p,q} for 0 <= p, q <= m, symmetric under swapping p and
q, with degrees k = p + q running from 0 to 2m.  Degree-k coordinates
concatenate the blocks (p, q) with p + q = k in order of decreasing p;
blocks of dimension zero are kept as zero-width slices so indexing is
uniform across degrees.

:class:`Conjugation` holds the antilinear involution exchanging (p, q) and
(q, p) blocks and computes real (conjugation-fixed) bases by splitting the
fixed-point equation into its rational real and imaginary parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import StructuralError
from .exactnum import (
    GMatrix,
    GaussRational,
    Vector,
    vec,
    vec_add,
    vec_conj,
    vec_is_zero,
    vec_scale,
    vec_sub,
)


class HodgeFrame:
    """Dimension table h^{p,q} with middle degree m (top degree 2m)."""

    __slots__ = ("m", "_h")

    def __init__(self, table: dict, m: int):
        if m < 0:
            raise StructuralError("middle degree must be nonnegative")
        h = {}
        for (p, q), d in table.items():
            if not (0 <= p <= m and 0 <= q <= m):
                raise StructuralError(f"block ({p},{q}) outside 0..{m}")
            if d < 0:
                raise StructuralError(f"negative dimension at ({p},{q})")
            if d:
                h[(p, q)] = int(d)
        for (p, q), d in h.items():
            if h.get((q, p), 0) != d:
                raise StructuralError(
                    f"asymmetric table: h^{{{p},{q}}} = {d} != h^{{{q},{p}}}"
                )
        if h.get((0, 0), 0) < 1:
            raise StructuralError("h^{0,0} must be at least 1 (unit class)")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_h", h)

    def __setattr__(self, name, value):
        raise AttributeError("HodgeFrame is immutable")

    def h(self, p: int, q: int) -> int:
        return self._h.get((p, q), 0)

    def table(self) -> dict:
        return dict(self._h)

    def blocks(self, k: int) -> list[tuple[int, int]]:
        """All (p, q) with p + q = k inside the frame, p decreasing."""
        if not 0 <= k <= 2 * self.m:
            return []
        p_hi = min(k, self.m)
        p_lo = max(0, k - self.m)
        return [(p, k - p) for p in range(p_hi, p_lo - 1, -1)]

    def betti(self, k: int) -> int:
        return sum(self.h(p, q) for p, q in self.blocks(k))

    def offset(self, k: int, p: int, q: int) -> int:
        """Start of block (p, q) inside the degree-k coordinate vector."""
        if p + q != k:
            raise StructuralError(f"block ({p},{q}) not in degree {k}")
        off = 0
        for bp, bq in self.blocks(k):
            if (bp, bq) == (p, q):
                return off
            off += self.h(bp, bq)
        raise StructuralError(f"block ({p},{q}) outside the frame")

    def degrees(self) -> range:
        return range(0, 2 * self.m + 1)

    def __eq__(self, other):
        if not isinstance(other, HodgeFrame):
            return NotImplemented
        return self.m == other.m and self._h == other._h

    def __hash__(self):
        return hash((self.m, tuple(sorted(self._h.items()))))

    def __repr__(self):
        return f"HodgeFrame(m={self.m}, h={dict(sorted(self._h.items()))})"


def build_frame(table: dict, m: int) -> HodgeFrame:
    """Validate a (p, q) -> dimension table and wrap it in a frame."""
    return HodgeFrame(table, m)


@dataclass(frozen=True)
class BigradedVector:
    """An element of H^k with coordinates per bigraded block."""

    frame: HodgeFrame
    degree: int
    coords: Vector

    def __post_init__(self):
        expected = self.frame.betti(self.degree)
        if len(self.coords) != expected:
            raise StructuralError(
                f"degree-{self.degree} vector needs {expected} coordinates, "
                f"got {len(self.coords)}"
            )

    @staticmethod
    def zero(frame: HodgeFrame, degree: int) -> "BigradedVector":
        return BigradedVector(frame, degree, vec([0] * frame.betti(degree)))

    @staticmethod
    def from_blocks(frame: HodgeFrame, degree: int, blocks: dict) -> "BigradedVector":
        coords = []
        for p, q in frame.blocks(degree):
            part = blocks.get((p, q))
            d = frame.h(p, q)
            if part is None:
                coords.extend([GaussRational(0)] * d)
            else:
                part = vec(part)
                if len(part) != d:
                    raise StructuralError(
                        f"block ({p},{q}) expects {d} coordinates"
                    )
                coords.extend(part)
        return BigradedVector(frame, degree, tuple(coords))

    def block(self, p: int, q: int) -> Vector:
        off = self.frame.offset(self.degree, p, q)
        return self.coords[off : off + self.frame.h(p, q)]

    def is_zero(self) -> bool:
        return vec_is_zero(self.coords)

    def is_block_pure(self, p: int, q: int) -> bool:
        """True when every coordinate outside block (p, q) vanishes."""
        off = self.frame.offset(self.degree, p, q)
        end = off + self.frame.h(p, q)
        return all(
            not c for i, c in enumerate(self.coords) if not off <= i < end
        )

    def __add__(self, other: "BigradedVector") -> "BigradedVector":
        self._compat(other)
        return BigradedVector(
            self.frame, self.degree, vec_add(self.coords, other.coords)
        )

    def __sub__(self, other: "BigradedVector") -> "BigradedVector":
        self._compat(other)
        return BigradedVector(
            self.frame, self.degree, vec_sub(self.coords, other.coords)
        )

    def scale(self, c) -> "BigradedVector":
        return BigradedVector(self.frame, self.degree, vec_scale(c, self.coords))

    def _compat(self, other: "BigradedVector") -> None:
        if self.frame != other.frame or self.degree != other.degree:
            raise StructuralError("vectors live in different spaces")


class Conjugation:
    """Antilinear involution given per block by matrices H^{p,q} -> H^{q,p}.

    Application conjugates coordinates and then moves them by the block
    matrices; the frame symmetry h^{p,q} = h^{q,p} makes shapes square in
    the assembled per-degree form.
    """

    def __init__(self, frame: HodgeFrame, blocks: dict):
        self.frame = frame
        self._blocks: dict[tuple[int, int], GMatrix] = {}
        self._degree_cache: dict[int, GMatrix] = {}
        for k in frame.degrees():
            for p, q in frame.blocks(k):
                d = frame.h(p, q)
                if d == 0:
                    continue
                blk = blocks.get((p, q))
                if blk is None:
                    raise StructuralError(f"missing conjugation block ({p},{q})")
                if not isinstance(blk, GMatrix):
                    blk = GMatrix(blk)
                if blk.rows != frame.h(q, p) or blk.cols != d:
                    raise StructuralError(
                        f"conjugation block ({p},{q}) must be "
                        f"{frame.h(q, p)}x{d}, got {blk.rows}x{blk.cols}"
                    )
                self._blocks[(p, q)] = blk

    def block(self, p: int, q: int) -> GMatrix:
        blk = self._blocks.get((p, q))
        if blk is None:
            return GMatrix.zeros(self.frame.h(q, p), self.frame.h(p, q))
        return blk

    def degree_matrix(self, k: int) -> GMatrix:
        """Matrix C_k with conj(v) = C_k * conj(coords of v) in degree k."""
        if k in self._degree_cache:
            return self._degree_cache[k]
        frame = self.frame
        n = frame.betti(k)
        rows = [[GaussRational(0)] * n for _ in range(n)]
        for p, q in frame.blocks(k):
            d = frame.h(p, q)
            if d == 0:
                continue
            blk = self.block(p, q)
            src = frame.offset(k, p, q)
            dst = frame.offset(k, q, p)
            for i in range(blk.rows):
                for j in range(d):
                    rows[dst + i][src + j] = blk.entries[i][j]
        c = GMatrix(rows)
        self._degree_cache[k] = c
        return c

    def apply(self, v: BigradedVector) -> BigradedVector:
        c = self.degree_matrix(v.degree)
        return BigradedVector(v.frame, v.degree, c.apply(vec_conj(v.coords)))

    def apply_coords(self, k: int, coords: Vector) -> Vector:
        return self.degree_matrix(k).apply(vec_conj(coords))

    def is_fixed(self, v: BigradedVector) -> bool:
        return self.apply(v).coords == v.coords

    # -- real (conjugation-fixed) bases ----------------------------------

    def real_points_of_span(self, k: int, span: GMatrix) -> list[Vector]:
        """Rational basis of the conjugation-fixed points of col(span).

        For a conjugation-stable span of complex dimension d the fixed
        locus is a Q-vector space of dimension d; it is found as the
        kernel of (conj - id) written out over Q by splitting coefficients
        into real and imaginary parts.
        """
        d = span.cols
        if d == 0:
            return []
        u = self.degree_matrix(k) @ span.conj()
        m1 = u - span  # multiplies x
        m2 = u + span  # multiplies -i y
        top = _real_part(m1).hstack(_imag_part(m2))
        bot = _imag_part(m1).hstack(_real_part(m2).scale(-1))
        system = GMatrix(list(top.entries) + list(bot.entries))
        fixed = []
        for kv in system.kernel_basis():
            x = kv[:d]
            y = kv[d:]
            coeffs = tuple(
                GaussRational(a.re, b.re) for a, b in zip(x, y, strict=True)
            )
            fixed.append(span.apply(coeffs))
        return fixed

    def real_basis(self, k: int) -> list[BigradedVector]:
        """Basis of the conjugation-fixed real form of H^k."""
        n = self.frame.betti(k)
        vectors = self.real_points_of_span(k, GMatrix.identity(n))
        return [BigradedVector(self.frame, k, v) for v in vectors]


def _real_part(m: GMatrix) -> GMatrix:
    return GMatrix([[GaussRational(e.re) for e in row] for row in m.entries])


def _imag_part(m: GMatrix) -> GMatrix:
    return GMatrix([[GaussRational(e.im) for e in row] for row in m.entries])


def real_basis(algebra, k: int) -> list[BigradedVector]:
    """Conjugation-fixed rational basis of H^k for a validated algebra."""
    algebra.require_valid()
    return algebra.conjugation.real_basis(k)


Fraction  # re-exported type appears in annotations downstream
