"""Builders for the algebra zoo.

Everything the verdict engine is exercised on can be constructed here:
abelian algebras, Heisenberg algebras, sl2 and its friends, direct sums, and
semidirect products r >| s where s acts on r by derivations.  The sl2-module
machinery uses the integer ladder convention H v_k = (m-1-2k) v_k,
F v_k = v_{k+1}, E v_k = k(m-k) v_{k-1}, which keeps every matrix integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lie import LieAlgebra, Subspace
from .linalg import Matrix, ONE, ZERO, rat


class SemidirectActionError(ValueError):
    """The proposed action is not by derivations, or not an s-homomorphism."""


class InvariantFormError(ValueError):
    """No invariant symplectic form, or the invariant space is not a line."""


def mat_comm(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


@dataclass(frozen=True)
class Sl2ModuleAction:
    """Action matrices of the m-dimensional irreducible sl2-module.

    The defining relations [H,E] = 2E, [H,F] = -2F, [E,F] = H are checked
    exactly at construction.
    """

    m: int
    E: Matrix
    F: Matrix
    H: Matrix

    def __post_init__(self):
        if mat_comm(self.H, self.E) != self.E.scale(2):
            raise ValueError("[H,E] != 2E")
        if mat_comm(self.H, self.F) != self.F.scale(-2):
            raise ValueError("[H,F] != -2F")
        if mat_comm(self.E, self.F) != self.H:
            raise ValueError("[E,F] != H")


def irreducible_sl2_module(m: int) -> Sl2ModuleAction:
    """Weight-basis ladder matrices for the unique m-dimensional irreducible."""
    if m < 1:
        raise ValueError("module dimension must be >= 1")
    h = Matrix.diagonal([m - 1 - 2 * k for k in range(m)])
    e_rows = [[Fraction((k + 1) * (m - k - 1)) if j == k + 1 else ZERO for j in range(m)]
              for k in range(m)]
    f_rows = [[ONE if j == k - 1 else ZERO for j in range(m)] for k in range(m)]
    return Sl2ModuleAction(m=m, E=Matrix.from_rows(e_rows), F=Matrix.from_rows(f_rows), H=h)


def invariant_symplectic(action: Sl2ModuleAction) -> Matrix:
    """The invariant symplectic form of an even-dimensional module.

    Solves X^T w + w X = 0 for X in {E, F, H} together with skewness, checks
    the solution space is a line, and normalizes the first nonzero entry of
    row 0 to 1.
    """
    m = action.m
    if m % 2 != 0:
        raise InvariantFormError("invariant symplectic form requires even dimension")
    rows = []

    def idx(p, q):
        return p * m + q

    # skew-symmetry: w[p][q] + w[q][p] = 0
    for p in range(m):
        for q in range(p, m):
            row = [ZERO] * (m * m)
            row[idx(p, q)] += ONE
            row[idx(q, p)] += ONE
            rows.append(row)
    # invariance: (X^T w + w X)[p][q] = 0
    for X in (action.E, action.F, action.H):
        for p in range(m):
            for q in range(m):
                row = [ZERO] * (m * m)
                for r in range(m):
                    if X[r, p]:
                        row[idx(r, q)] += X[r, p]
                    if X[r, q]:
                        row[idx(p, r)] += X[r, q]
                rows.append(row)
    kernel = Matrix.from_rows(rows).kernel()
    if not kernel:
        raise InvariantFormError("no_invariant_form")
    if len(kernel) != 1:
        raise InvariantFormError("not_unique")
    flat = kernel[0]
    lead = next((x for x in flat[:m] if x), None)
    if lead is None:
        # first row of the form is zero: form would be degenerate
        raise InvariantFormError("no_invariant_form")
    flat = tuple(x / lead for x in flat)
    omega = Matrix.from_rows([flat[p * m:(p + 1) * m] for p in range(m)])
    if not omega.is_skew() or omega.rank() != m:
        raise InvariantFormError("no_invariant_form")
    return omega


# -- elementary builders ---------------------------------------------------------


def abelian(m: int) -> LieAlgebra:
    if m < 1:
        raise ValueError("abelian dimension must be >= 1")
    return LieAlgebra.from_brackets(m, [f"x{i + 1}" for i in range(m)], {})


def sl2() -> LieAlgebra:
    """Split basis h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    return LieAlgebra.from_brackets(3, ["h", "e", "f"], {
        (0, 1): [0, 2, 0],
        (0, 2): [0, 0, -2],
        (1, 2): [1, 0, 0],
    })


def so3() -> LieAlgebra:
    """Rotation algebra: [x,y]=z, [y,z]=x, [z,x]=y."""
    return LieAlgebra.from_brackets(3, ["x", "y", "z"], {
        (0, 1): [0, 0, 1],
        (1, 2): [1, 0, 0],
        (0, 2): [0, -1, 0],
    })


def heisenberg(dim: int) -> LieAlgebra:
    """Heisenberg algebra of odd dimension 2n+1: [e_i, e_j] = w(e_i, e_j) z.

    The pairing w is the invariant symplectic form of the 2n-dimensional
    sl2-module, so the h_sl2 builder can act on this algebra by automorphisms.
    """
    if dim < 3 or dim % 2 == 0:
        raise ValueError("heisenberg dimension must be odd and >= 3")
    n = (dim - 1) // 2
    omega = invariant_symplectic(irreducible_sl2_module(2 * n))
    names = [f"e{i + 1}" for i in range(2 * n)] + ["z"]
    brackets = {}
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            if omega[i, j]:
                brackets[(i, j)] = [ZERO] * (2 * n) + [omega[i, j]]
    return LieAlgebra.from_brackets(dim, names, brackets)


def complexify(g: LieAlgebra) -> LieAlgebra:
    """g tensor C viewed as a real algebra of twice the dimension.

    Basis is (x_1..x_n, i*x_1..i*x_n); brackets follow from (i)(i) = -1.
    """
    n = g.dim
    names = list(g.basis_names) + [f"i{name}" for name in g.basis_names]
    brackets = {}
    for a in range(n):
        for b in range(n):
            w = g.table[a][b]
            for (s, t) in ((0, 0), (0, 1), (1, 0), (1, 1)):
                i, j = a + n * s, b + n * t
                if i >= j:
                    continue
                sign = -1 if (s, t) == (1, 1) else 1
                part = (s + t) % 2  # 0: real slot, 1: imaginary slot
                coords = [ZERO] * (2 * n)
                for k, c in enumerate(w):
                    if c:
                        coords[k + n * part] = sign * c
                if any(coords):
                    brackets[(i, j)] = coords
    return LieAlgebra.from_brackets(2 * n, names, brackets)


def sl2c_real() -> LieAlgebra:
    """sl(2,C) as a 6-dimensional real algebra."""
    return complexify(sl2())


def algebra_from_matrices(mats: Sequence[Matrix], names: Sequence[str]) -> LieAlgebra:
    """Structure constants of a matrix Lie algebra on the given basis."""
    if not mats:
        raise ValueError("empty matrix basis")
    d = mats[0].rows
    flat = Matrix.from_columns([[m[i, j] for i in range(d) for j in range(d)] for m in mats])
    brackets = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            c = mat_comm(mats[a], mats[b])
            coords = flat.solve([c[i, j] for i in range(d) for j in range(d)])
            brackets[(a, b)] = coords
    return LieAlgebra.from_brackets(len(mats), names, brackets)


def sl3r() -> LieAlgebra:
    """sl(3,R) on the basis h1, h2 and the six elementary off-diagonal matrices."""
    def E(i, j):
        rows = [[ONE if (r, c) == (i, j) else ZERO for c in range(3)] for r in range(3)]
        return Matrix.from_rows(rows)

    h1 = E(0, 0) - E(1, 1)
    h2 = E(1, 1) - E(2, 2)
    mats = [h1, h2, E(0, 1), E(0, 2), E(1, 2), E(1, 0), E(2, 0), E(2, 1)]
    names = ["h1", "h2", "e12", "e13", "e23", "e21", "e31", "e32"]
    return algebra_from_matrices(mats, names)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    """Block direct sum; right-hand basis names get a suffix on collision."""
    names1 = list(g1.basis_names)
    names2 = list(g2.basis_names)
    if set(names1) & set(names2):
        names2 = [f"{n}_2" for n in names2]
    d1, d2 = g1.dim, g2.dim
    brackets = {}
    for i in range(d1):
        for j in range(i + 1, d1):
            w = g1.table[i][j]
            if any(w):
                brackets[(i, j)] = list(w) + [ZERO] * d2
    for i in range(d2):
        for j in range(i + 1, d2):
            w = g2.table[i][j]
            if any(w):
                brackets[(d1 + i, d1 + j)] = [ZERO] * d1 + list(w)
    return LieAlgebra.from_brackets(d1 + d2, names1 + names2, brackets)


def semidirect(r: LieAlgebra, s: LieAlgebra, action: Sequence[Matrix]) -> LieAlgebra:
    """Semidirect product r >| s for s acting on r by the given matrices.

    ``action[a]`` is the derivation of r implementing the bracket with the
    a-th basis vector of s.  Checks the Leibniz rule for each matrix and the
    homomorphism property on s-brackets before assembling; the assembled
    constants are then Jacobi-validated as usual.
    """
    if len(action) != s.dim:
        raise SemidirectActionError(f"expected {s.dim} action matrices, got {len(action)}")
    dr, ds = r.dim, s.dim
    for a, A in enumerate(action):
        if A.rows != dr or A.cols != dr:
            raise SemidirectActionError(f"not_derivation({a}): matrix shape {A.rows}x{A.cols}")
        for i in range(dr):
            for j in range(i + 1, dr):
                lhs = A.apply(r.table[i][j])
                rhs = tuple(x + y for x, y in zip(
                    r.bracket(A.column(i), r._unit(j)),
                    r.bracket(r._unit(i), A.column(j))))
                if lhs != rhs:
                    raise SemidirectActionError(f"not_derivation({a})")
    for a in range(ds):
        for b in range(a + 1, ds):
            expect = Matrix.zero(dr, dr)
            for k, c in enumerate(s.table[a][b]):
                if c:
                    expect = expect + action[k].scale(c)
            if mat_comm(action[a], action[b]) != expect:
                raise SemidirectActionError(f"not_homomorphism({a},{b})")
    names1 = list(r.basis_names)
    names2 = list(s.basis_names)
    if set(names1) & set(names2):
        names2 = [f"{n}_2" for n in names2]
    brackets = {}
    for i in range(dr):
        for j in range(i + 1, dr):
            w = r.table[i][j]
            if any(w):
                brackets[(i, j)] = list(w) + [ZERO] * ds
    for a in range(ds):
        for b in range(a + 1, ds):
            w = s.table[a][b]
            if any(w):
                brackets[(dr + a, dr + b)] = [ZERO] * dr + list(w)
    for i in range(dr):
        for a in range(ds):
            col = action[a].column(i)
            if any(col):
                # [r_i, s_a] = -action[a] e_i
                brackets[(i, dr + a)] = [-x for x in col] + [ZERO] * ds
    return LieAlgebra.from_brackets(dr + ds, names1 + names2, brackets)


def v_sl2(m: int) -> LieAlgebra:
    """R^m >| sl2 via the m-dimensional irreducible module."""
    mod = irreducible_sl2_module(m)
    return semidirect(abelian(m), sl2(), [mod.H, mod.E, mod.F])


def h_sl2(n: int) -> LieAlgebra:
    """H_{2n+1} >| sl2: the module acts on the e's and kills the center."""
    if n < 1:
        raise ValueError("h_sl2 requires n >= 1")
    mod = irreducible_sl2_module(2 * n)

    def extend(mtx: Matrix) -> Matrix:
        rows = [list(mtx.row(i)) + [ZERO] for i in range(2 * n)]
        rows.append([ZERO] * (2 * n + 1))
        return Matrix.from_rows(rows)

    return semidirect(heisenberg(2 * n + 1), sl2(), [extend(mod.H), extend(mod.E), extend(mod.F)])


def so3_r3() -> LieAlgebra:
    """R^3 >| so3 with the standard rotation action."""
    g = so3()
    mats = [g.ad(g._unit(i)) for i in range(3)]
    return semidirect(abelian(3), g, mats)


# -- named builder registry (CLI) ------------------------------------------------

_NO_PARAM = {
    "sl2": sl2,
    "so3": so3,
    "sl2C_real": sl2c_real,
    "sl3R": sl3r,
    "so3_r3": so3_r3,
}

_ONE_PARAM = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "v_sl2": v_sl2,
    "h_sl2": h_sl2,
}


def builder_names() -> list[str]:
    return sorted(_NO_PARAM) + sorted(_ONE_PARAM) + ["direct_sum"]


def build_named(name: str, params: Sequence[str] = ()) -> LieAlgebra:
    """Dispatch by builder name; direct_sum takes two builder specs.

    A spec is ``name`` or ``name:k`` for the one-parameter builders, e.g.
    ``build_named("direct_sum", ["sl2", "heisenberg:3"])``.
    """
    if name in _NO_PARAM:
        if params:
            raise ValueError(f"builder {name} takes no parameters")
        return _NO_PARAM[name]()
    if name in _ONE_PARAM:
        if len(params) != 1:
            raise ValueError(f"builder {name} takes exactly one integer parameter")
        return _ONE_PARAM[name](int(params[0]))
    if name == "direct_sum":
        if len(params) != 2:
            raise ValueError("direct_sum takes exactly two builder specs")
        return direct_sum(_build_spec(params[0]), _build_spec(params[1]))
    raise ValueError(f"unknown builder {name!r}; known: {', '.join(builder_names())}")


def _build_spec(spec: str) -> LieAlgebra:
    if ":" in spec:
        base, arg = spec.split(":", 1)
        return build_named(base, [arg])
    return build_named(spec, [])
