"""Finite-dimensional real Lie algebras with rational structure constants.

An algebra is its structure-constant table against a named basis.  The
constructor validates antisymmetry and the Jacobi identity on every basis
triple, so any :class:`LieAlgebra` in circulation actually is one.  Subspaces
carry canonical reduced-echelon bases, which turns ideal/radical comparisons
into plain equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .linalg import (
    Matrix,
    Vector,
    ZERO,
    is_zero_vec,
    vadd,
    vec,
    vscale,
    vsub,
    zero_vec,
)


class StructureError(ValueError):
    """Raised when raw structure constants fail antisymmetry or Jacobi.

    ``violations`` lists every offence, e.g. ``("jacobi_violation", i, j, k,
    defect_vector)`` or ``("antisymmetry_violation", i, j)``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        parts = []
        for v in self.violations[:8]:
            if v[0] == "jacobi_violation":
                parts.append(f"jacobi_violation{v[1:4]}")
            else:
                parts.append(f"{v[0]}{tuple(v[1:3])}")
        more = "" if len(self.violations) <= 8 else f" (+{len(self.violations) - 8} more)"
        super().__init__("; ".join(parts) + more)


class NotClosed(ValueError):
    """A subspace expected to be a subalgebra is not closed under the bracket."""


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra given by [e_i, e_j] = sum_k c[i][j][k] e_k over Q."""

    dim: int
    basis_names: tuple[str, ...]
    table: tuple[tuple[Vector, ...], ...]  # table[i][j] = coords of [e_i, e_j]

    @staticmethod
    def from_brackets(dim: int, basis_names: Sequence[str],
                      brackets: Mapping[tuple[int, int], Sequence]) -> "LieAlgebra":
        """Build and validate from the sparse i < j bracket table."""
        names = tuple(basis_names)
        if len(names) != dim:
            raise ValueError(f"{len(names)} basis names for dimension {dim}")
        full = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coords in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range for dim {dim}")
            if i >= j:
                raise StructureError([("antisymmetry_violation", i, j)])
            v = vec(coords)
            if len(v) != dim:
                raise ValueError(f"bracket ({i},{j}) has {len(v)} coordinates, expected {dim}")
            full[i][j] = v
            full[j][i] = vscale(Fraction(-1), v)
        alg = LieAlgebra(dim, names, tuple(tuple(row) for row in full))
        violations = alg._jacobi_violations()
        if violations:
            raise StructureError(violations)
        return alg

    def _jacobi_violations(self):
        out = []
        for i, j, k in itertools.combinations(range(self.dim), 3):
            defect = vadd(
                vadd(self.bracket(self.table[i][j], self._unit(k)),
                     self.bracket(self.table[j][k], self._unit(i))),
                self.bracket(self.table[k][i], self._unit(j)))
            if not is_zero_vec(defect):
                out.append(("jacobi_violation", i, j, k, defect))
        return out

    def _unit(self, i: int) -> Vector:
        return tuple(Fraction(1) if t == i else ZERO for t in range(self.dim))

    # -- core operations -----------------------------------------------------

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """[x, y] for coordinate vectors, by bilinear extension of the table."""
        xv, yv = vec(x), vec(y)
        if len(xv) != self.dim or len(yv) != self.dim:
            raise ValueError("bracket operand length does not match algebra dimension")
        out = [ZERO] * self.dim
        for i, a in enumerate(xv):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(yv):
                if not b:
                    continue
                coeff = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += coeff * c
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad(x): column j is [x, e_j]."""
        xv = vec(x)
        if len(xv) != self.dim:
            raise ValueError("ad operand length does not match algebra dimension")
        cols = [self.bracket(xv, self._unit(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def killing(self, x: Sequence, y: Sequence) -> Fraction:
        """kappa(x, y) = trace(ad x . ad y)."""
        K = killing_matrix(self)
        return sum((a * kb for a, kb in zip(vec(x), K.apply(vec(y)), strict=True)), ZERO)

    def is_abelian(self) -> bool:
        return all(is_zero_vec(self.table[i][j])
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    # -- distinguished subspaces ----------------------------------------------

    def full_subspace(self) -> "Subspace":
        return Subspace.from_vectors(self, [self._unit(i) for i in range(self.dim)])

    def zero_subspace(self) -> "Subspace":
        return Subspace.from_vectors(self, [])

    def with_basis(self, p: Matrix, names: Sequence[str] | None = None) -> "LieAlgebra":
        """Transport the structure to the basis given by the columns of p."""
        if p.rows != self.dim or p.cols != self.dim:
            raise ValueError("change-of-basis matrix has wrong shape")
        new_names = tuple(names) if names is not None else tuple(f"y{i}" for i in range(self.dim))
        brackets = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = self.bracket(p.column(i), p.column(j))
                brackets[(i, j)] = p.solve(w)
        return LieAlgebra.from_brackets(self.dim, new_names, brackets)


@lru_cache(maxsize=None)
def killing_matrix(g: LieAlgebra) -> Matrix:
    """Gram matrix of the Killing form on the given basis."""
    ads = [g.ad(g._unit(i)) for i in range(g.dim)]
    rows = []
    for i in range(g.dim):
        row = []
        for j in range(g.dim):
            prod = ads[i] * ads[j]
            row.append(sum((prod[t, t] for t in range(g.dim)), ZERO))
        rows.append(row)
    return Matrix.from_rows(rows)


def validate(dim: int, basis_names: Sequence[str],
             brackets: Mapping[tuple[int, int], Sequence]) -> LieAlgebra:
    """Public constructor: returns a validated algebra or raises StructureError
    listing every violated triple."""
    return LieAlgebra.from_brackets(dim, basis_names, brackets)


@dataclass(frozen=True)
class Subspace:
    """Subspace of a LieAlgebra with canonical (RREF) basis.

    ``basis`` columns are the basis vectors; the column set is the unique
    reduced echelon basis of the span, so two Subspaces are equal iff they
    are the same subspace of the same parent.
    """

    parent: LieAlgebra
    basis: Matrix  # parent.dim x k

    @staticmethod
    def from_vectors(parent: LieAlgebra, vectors: Iterable[Sequence]) -> "Subspace":
        vs = [vec(v) for v in vectors]
        for v in vs:
            if len(v) != parent.dim:
                raise ValueError("spanning vector length does not match parent dimension")
        if not vs:
            return Subspace(parent, Matrix(parent.dim, 0, tuple(() for _ in range(parent.dim))))
        reduced, pivots = Matrix.from_rows(vs).rref()
        rows = [reduced.row(r) for r in range(len(pivots))]
        return Subspace(parent, Matrix.from_columns(rows) if rows
                        else Matrix(parent.dim, 0, tuple(() for _ in range(parent.dim))))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def pivots(self) -> tuple[int, ...]:
        """Leading coordinate of each canonical basis vector."""
        out = []
        for v in self.vectors():
            lead = next(i for i, x in enumerate(v) if x)
            out.append(lead)
        return tuple(out)

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after subtracting its component in this subspace."""
        w = list(vec(v))
        for bvec, p in zip(self.vectors(), self.pivots()):
            c = w[p]
            if c:
                w = [x - c * y for x, y in zip(w, bvec)]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._same_parent(other)
        return Subspace.from_vectors(self.parent, self.vectors() + other.vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_parent(other)
        if self.dim == 0 or other.dim == 0:
            return self.parent.zero_subspace()
        stacked = self.basis.hstack(other.basis)
        vecs = [self.basis.apply(k[: self.dim]) for k in stacked.kernel()]
        return Subspace.from_vectors(self.parent, vecs)

    def bracket_with(self, other: "Subspace") -> "Subspace":
        self._same_parent(other)
        g = self.parent
        return Subspace.from_vectors(
            g, [g.bracket(u, v) for u in self.vectors() for v in other.vectors()])

    def is_subalgebra(self) -> bool:
        return self.contains_subspace(self.bracket_with(self))

    def is_ideal(self) -> bool:
        return self.contains_subspace(self.parent.full_subspace().bracket_with(self))

    def _same_parent(self, other: "Subspace"):
        if self.parent is not other.parent and self.parent != other.parent:
            raise ValueError("subspaces of different algebras")


# -- series, closures, centralizers --------------------------------------------


def derived_series(space: Subspace) -> list[Subspace]:
    """D0 = space, D{n+1} = [Dn, Dn], until stable.  Input must be a subalgebra."""
    if not space.is_subalgebra():
        raise NotClosed("derived_series input is not a subalgebra")
    chain = [space]
    while True:
        nxt = chain[-1].bracket_with(chain[-1])
        if nxt.dim == chain[-1].dim:
            break
        chain.append(nxt)
        if nxt.dim == 0:
            break
    return chain

def is_solvable(space: Subspace) -> bool:
    return derived_series(space)[-1].dim == 0


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """C0 = g, C{n+1} = [g, Cn], until stable."""
    full = g.full_subspace()
    chain = [full]
    while True:
        nxt = full.bracket_with(chain[-1])
        if nxt.dim == chain[-1].dim:
            break
        chain.append(nxt)
        if nxt.dim == 0:
            break
    return chain


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def derived_subspace(g: LieAlgebra) -> Subspace:
    """[g, g] as a subspace."""
    return Subspace.from_vectors(
        g, [g.table[i][j] for i in range(g.dim) for j in range(i + 1, g.dim)])


def ideal_closure(g: LieAlgebra, seed: Subspace) -> Subspace:
    """Smallest ideal containing seed: fixpoint of V -> V + [g, V]."""
    full = g.full_subspace()
    cur = seed
    while True:
        nxt = cur.sum_with(full.bracket_with(cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def centralizer(g: LieAlgebra, space: Subspace) -> Subspace:
    """{x : [x, w] = 0 for all w in space}, via stacked ad kernels."""
    if space.dim == 0:
        return g.full_subspace()
    stacked = None
    for w in space.vectors():
        adw = g.ad(w)
        stacked = adw if stacked is None else stacked.vstack(adw)
    return Subspace.from_vectors(g, stacked.kernel())


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, g.full_subspace())


# -- derived algebras: subalgebras and quotients as standalone LieAlgebras -----


def subalgebra_algebra(space: Subspace, name_prefix: str = "s") -> tuple[LieAlgebra, Matrix]:
    """The subspace as a Lie algebra in its own right, plus the embedding.

    The embedding matrix maps sub-coordinates to parent coordinates (it is just
    the basis).  Raises NotClosed when the subspace is not a subalgebra.
    """
    g = space.parent
    k = space.dim
    names = tuple(f"{name_prefix}{i}" for i in range(k))
    basis = space.vectors()
    brackets = {}
    for a in range(k):
        for b in range(a + 1, k):
            w = g.bracket(basis[a], basis[b])
            try:
                brackets[(a, b)] = space.basis.solve(w)
            except Exception as exc:
                raise NotClosed("subspace is not closed under the bracket") from exc
    return LieAlgebra.from_brackets(k, names, brackets), space.basis


def quotient_algebra(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix, Matrix]:
    """Quotient g/ideal with projection (q x n) and linear section (n x q).

    The section picks the coordinate complement of the ideal's pivot columns,
    so proj . section = identity.
    """
    if not ideal.is_ideal():
        raise ValueError("quotient by a non-ideal")
    n = g.dim
    pivots = set(ideal.pivots())
    free = [j for j in range(n) if j not in pivots]
    q = len(free)
    section = Matrix.from_columns([g._unit(j) for j in free]) if free else Matrix(n, 0, tuple(() for _ in range(n)))
    proj_cols = []
    for t in range(n):
        rem = ideal.reduce(g._unit(t))
        proj_cols.append(tuple(rem[j] for j in free))
    proj = Matrix.from_columns(proj_cols) if q else Matrix(0, n, ())
    names = tuple(g.basis_names[j] for j in free)
    brackets = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = g.bracket(section.column(a), section.column(b))
            brackets[(a, b)] = proj.apply(w)
    quo = LieAlgebra.from_brackets(q, names, brackets)
    return quo, proj, section
