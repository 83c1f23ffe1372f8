"""Exact linear algebra over the rationals.

Every scalar is a ``fractions.Fraction`` and no floating point is used
anywhere: kernels, linear solves, ranks and inertia signatures are computed
by exact elimination, so algebraic identities downstream can be checked with
plain ``==``.

Elimination pivots on the entry of smallest height (max of |numerator| and
denominator) over the whole remaining submatrix, which keeps coefficient
growth under control when structure constants get combinatorially large.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class Inconsistent(ValueError):
    """A linear system has no exact solution."""


def rat(value) -> Fraction:
    """Coerce ints, Fractions, or strings like ``"3/4"`` / ``"-2"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Serialize as ``"p"`` or ``"p/q"`` with q > 0."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(entries: Iterable) -> Vector:
    return tuple(rat(e) for e in entries)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def vadd(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vsub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vscale(c: Fraction, x: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in x)


def vdot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y, strict=True)), ZERO)


def is_zero_vec(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


def _height(x: Fraction) -> int:
    return max(abs(x.numerator), x.denominator)


def _gauss_jordan(data: list[list[Fraction]], ncols: int | None = None) -> list[tuple[int, int]]:
    """In-place Gauss-Jordan elimination with free pivot order.

    Pivots are picked among untouched rows/columns by smallest height.  Pivot
    columns end up as unit columns; returns the (row, col) pivot list.  When
    ``ncols`` is given, pivots are only sought in the first ``ncols`` columns
    (row operations still apply to full rows), which is how augmented systems
    are solved.
    """
    m = len(data)
    n = len(data[0]) if m else 0
    limit = n if ncols is None else ncols
    free_rows = set(range(m))
    free_cols = set(range(limit))
    pivots: list[tuple[int, int]] = []
    while True:
        best = None
        for i in free_rows:
            row = data[i]
            for j in free_cols:
                x = row[j]
                if x:
                    h = _height(x)
                    if best is None or h < best[0]:
                        best = (h, i, j)
                        if h == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        pivot = data[pi][pj]
        if pivot != 1:
            data[pi] = [x / pivot for x in data[pi]]
        prow = data[pi]
        for i in range(m):
            if i == pi:
                continue
            f = data[i][pj]
            if f:
                data[i] = [x - f * y for x, y in zip(data[i], prow)]
        free_rows.discard(pi)
        free_cols.discard(pj)
        pivots.append((pi, pj))
    return pivots


@dataclass(frozen=True)
class Signature:
    """Inertia of a symmetric bilinear form: counts of +, -, 0 eigenvalue signs."""

    positive: int
    negative: int
    zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    def __str__(self) -> str:
        return f"({self.positive},{self.negative},{self.zero})"


@dataclass(frozen=True)
class Matrix:
    """Immutable dense rational matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match declared shape")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        data = tuple(vec(r) for r in rows)
        ncols = len(data[0]) if data else 0
        return Matrix(len(data), ncols, data)

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            return Matrix(0, 0, ())
        return Matrix.from_rows(list(zip(*[vec(c) for c in cols])))

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, tuple(zero_vec(cols) for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(values: Sequence) -> "Matrix":
        v = vec(values)
        n = len(v)
        return Matrix(n, n, tuple(tuple(v[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    # -- access ------------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(self.rows, self.cols, tuple(vscale(c, r) for r in self.entries))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        ot = other.transpose().entries
        return Matrix(self.rows, other.cols,
                      tuple(tuple(vdot(r, c) for c in ot) for r in self.entries))

    def apply(self, v: Sequence) -> Vector:
        x = vec(v)
        if len(x) != self.cols:
            raise ValueError(f"vector length {len(x)} does not match {self.cols} columns")
        return tuple(vdot(r, x) for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else tuple(() for _ in range(self.cols)))

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(self.rows, self.cols + other.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.entries)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_skew(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows) for j in range(i, self.cols))

    # -- elimination-backed operations --------------------------------------

    def rank(self) -> int:
        data = [list(r) for r in self.entries]
        return len(_gauss_jordan(data))

    def kernel(self) -> list[Vector]:
        """Basis of the right null space {v : self*v = 0}."""
        data = [list(r) for r in self.entries]
        pivots = _gauss_jordan(data)
        pivot_cols = {c for _, c in pivots}
        basis = []
        for j in range(self.cols):
            if j in pivot_cols:
                continue
            v = [ZERO] * self.cols
            v[j] = ONE
            for pi, pj in pivots:
                v[pj] = -data[pi][j]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence) -> Vector:
        """One exact solution of self*x = b; raises Inconsistent otherwise."""
        rhs = vec(b)
        if len(rhs) != self.rows:
            raise ValueError(f"rhs length {len(rhs)} does not match {self.rows} rows")
        data = [list(r) + [rhs[i]] for i, r in enumerate(self.entries)]
        pivots = _gauss_jordan(data, ncols=self.cols)
        pivot_rows = {r for r, _ in pivots}
        for i in range(self.rows):
            if i not in pivot_rows and data[i][self.cols] != 0:
                raise Inconsistent("inconsistent linear system")
        x = [ZERO] * self.cols
        for pi, pj in pivots:
            x[pj] = data[pi][self.cols]
        return tuple(x)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Canonical reduced row echelon form (fixed column order) and pivot columns.

        Within a column the pivot row is the smallest-height candidate; the
        result is the unique RREF, so it serves as a normal form for row spaces.
        """
        data = [list(r) for r in self.entries]
        r = 0
        pivots: list[int] = []
        for c in range(self.cols):
            best = None
            for i in range(r, self.rows):
                x = data[i][c]
                if x:
                    h = _height(x)
                    if best is None or h < best[0]:
                        best = (h, i)
            if best is None:
                continue
            _, bi = best
            data[r], data[bi] = data[bi], data[r]
            pivot = data[r][c]
            if pivot != 1:
                data[r] = [x / pivot for x in data[r]]
            prow = data[r]
            for i in range(self.rows):
                if i != r and data[i][c]:
                    f = data[i][c]
                    data[i] = [x - f * y for x, y in zip(data[i], prow)]
            pivots.append(c)
            r += 1
        return Matrix(self.rows, self.cols, tuple(tuple(row) for row in data)), tuple(pivots)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        data = [list(r) for r in self.entries]
        n = self.rows
        det = ONE
        for c in range(n):
            piv = None
            for i in range(c, n):
                if data[i][c]:
                    h = _height(data[i][c])
                    if piv is None or h < piv[0]:
                        piv = (h, i)
            if piv is None:
                return ZERO
            _, bi = piv
            if bi != c:
                data[c], data[bi] = data[bi], data[c]
                det = -det
            det *= data[c][c]
            inv = ONE / data[c][c]
            for i in range(c + 1, n):
                if data[i][c]:
                    f = data[i][c] * inv
                    data[i] = [x - f * y for x, y in zip(data[i], data[c])]
        return det

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __str__(self) -> str:
        return "\n".join("[" + "  ".join(rat_str(x) for x in r) + "]" for r in self.entries)


def solve_kernel(m: Matrix) -> list[Vector]:
    """Alias of Matrix.kernel as a free function."""
    return m.kernel()


def solve_linear(m: Matrix, b: Sequence) -> Vector:
    """Alias of Matrix.solve as a free function."""
    return m.solve(b)


def symmetric_signature(m: Matrix) -> Signature:
    """Exact inertia of a symmetric matrix by Lagrange congruence reduction.

    Diagonal pivots are cleared by symmetric row+column operations; when all
    remaining diagonal entries vanish but an off-diagonal entry m[i][j] does
    not, the substitution e_i += e_j manufactures the diagonal entry 2*m[i][j].
    No eigenvalues, no radicals: the count of +/-/0 pivots is the signature
    by Sylvester's law.
    """
    if not m.is_symmetric():
        raise ValueError("symmetric_signature requires a symmetric matrix")
    n = m.rows
    a = [list(r) for r in m.entries]
    active = list(range(n))
    pos = neg = 0
    while active:
        pivot_idx = None
        best_h = None
        for i in active:
            x = a[i][i]
            if x:
                h = _height(x)
                if best_h is None or h < best_h:
                    best_h, pivot_idx = h, i
        if pivot_idx is None:
            # all active diagonal entries are zero; look off-diagonal
            od = None
            for ii, i in enumerate(active):
                for j in active[ii + 1:]:
                    if a[i][j]:
                        h = _height(a[i][j])
                        if od is None or h < od[0]:
                            od = (h, i, j)
            if od is None:
                break  # remaining block is zero
            _, i, j = od
            # congruence e_i += e_j: row then matching column
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for row in a:
                row[i] = row[i] + row[j]
            continue
        i = pivot_idx
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        others = [j for j in active if j != i]
        factors = {j: a[j][i] / d for j in others if a[j][i]}
        for j, f in factors.items():
            a[j] = [x - f * y for x, y in zip(a[j], a[i])]
        for j, f in factors.items():
            for row in a:
                row[j] = row[j] - f * row[i]
        active.remove(i)
    return Signature(pos, neg, n - pos - neg)
