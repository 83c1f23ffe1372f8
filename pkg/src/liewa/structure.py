"""Structure theory: radical, Levi decomposition, simple ideals, real forms.

The radical is the Killing-orthogonal complement of the derived algebra (a
characteristic-zero theorem, so it is one exact kernel computation).  The
Levi factor is constructed recursively: quotient by the derived algebra of
the radical until the radical is abelian, then correct a linear complement to
a subalgebra by solving the cocycle-lifting equations that Levi's theorem
guarantees solvable.

Real forms of the simple factors are identified by the exact invariant triple
(dimension, Killing signature, Cartan dimension) against a user-extensible
catalog; negative-definite Killing forms short-circuit to "compact" without
touching the catalog.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .lie import (
    LieAlgebra,
    Subspace,
    derived_subspace,
    ideal_closure,
    is_solvable,
    killing_matrix,
    quotient_algebra,
    subalgebra_algebra,
)
from .linalg import (
    Matrix,
    Signature,
    Inconsistent,
    ONE,
    ZERO,
    rat,
    rat_str,
    symmetric_signature,
)


class InternalError(RuntimeError):
    """A theorem-backed step failed; this signals a bug, not bad input."""


class NotSemisimple(ValueError):
    """Killing form is degenerate where a semisimple algebra was required."""


class SplitError(ValueError):
    """The decomposition into minimal ideals is not defined over Q."""


class CatalogError(ValueError):
    """Malformed or colliding real-form catalog."""


class UnrecognizedRealForm(LookupError):
    """No catalog entry for (dim, signature, cartan_dim)."""

    def __init__(self, dim: int, signature: Signature, cartan_dim: int):
        self.dim = dim
        self.signature = signature
        self.cartan_dim = cartan_dim
        super().__init__(
            f"unrecognized_real_form(dim={dim}, signature={signature}, cartan_dim={cartan_dim})")


class Infinity:
    """Extended value +inf for weak amenability constants.

    A distinguished singleton, never a sentinel number; it absorbs exact
    rational multiplication from either side.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __mul__(self, other):
        return self

    __rmul__ = __mul__

    def __repr__(self):
        return "inf"


INF = Infinity()


def lambda_str(value) -> str:
    return "inf" if isinstance(value, Infinity) else rat_str(value)


def lambda_from_str(text: str):
    return INF if text.strip() == "inf" else rat(text)


# -- radical and Levi decomposition ----------------------------------------------


def radical(g: LieAlgebra) -> Subspace:
    """Maximal solvable ideal, as the Killing-perp of [g, g]."""
    derived = derived_subspace(g)
    if derived.dim == 0:
        return g.full_subspace()
    K = killing_matrix(g)
    rows = [K.apply(d) for d in derived.vectors()]
    rad = Subspace.from_vectors(g, Matrix.from_rows(rows).kernel())
    if not rad.is_ideal() or not is_solvable(rad):
        raise InternalError("radical computation produced a non-solvable or non-ideal subspace")
    return rad


@dataclass(frozen=True)
class LeviDecomposition:
    radical: Subspace
    levi: Subspace


def levi(g: LieAlgebra) -> LeviDecomposition:
    """Radical plus a semisimple complement subalgebra (Levi-Malcev)."""
    rad = radical(g)
    return LeviDecomposition(radical=rad, levi=_levi_subalgebra(g, rad))


def _levi_subalgebra(g: LieAlgebra, rad: Subspace) -> Subspace:
    if rad.dim == 0:
        return g.full_subspace()
    if rad.dim == g.dim:
        return g.zero_subspace()
    rad_derived = rad.bracket_with(rad)
    if rad_derived.dim > 0:
        # reduce to an abelian radical: pass to g / [r, r], lift, and recurse
        quo, proj, sect = quotient_algebra(g, rad_derived)
        quo_rad = Subspace.from_vectors(quo, [proj.apply(v) for v in rad.vectors()])
        levi_bar = _levi_subalgebra(quo, quo_rad)
        preimage = Subspace.from_vectors(
            g, [sect.apply(v) for v in levi_bar.vectors()] + rad_derived.vectors())
        sub, embed = subalgebra_algebra(preimage)
        sub_rad = radical(sub)
        inner = _levi_subalgebra(sub, sub_rad)
        return Subspace.from_vectors(g, [embed.apply(v) for v in inner.vectors()])
    return _levi_abelian_radical(g, rad)


def _levi_abelian_radical(g: LieAlgebra, rad: Subspace) -> Subspace:
    """Cocycle-correct a linear section of g/rad to a subalgebra.

    With rad abelian, a section sigma of the projection fails to be a
    homomorphism by a 2-cocycle f with values in rad; solvability of
    x.h(y) - y.h(x) - h([x,y]) = f(x,y) in h is exactly the vanishing of the
    obstruction, and tau = sigma - h spans the Levi subalgebra.
    """
    quo, proj, sect = quotient_algebra(g, rad)
    sdim, rdim = quo.dim, rad.dim
    rbasis = rad.basis
    # action of quo on rad through the section, in rad coordinates
    action = []
    for a in range(sdim):
        cols = [rbasis.solve(g.bracket(sect.column(a), rv)) for rv in rad.vectors()]
        action.append(Matrix.from_columns(cols))
    pairs = [(a, b) for a in range(sdim) for b in range(a + 1, sdim)]
    rows = []
    rhs = []
    for a, b in pairs:
        f_ab = g.bracket(sect.column(a), sect.column(b))
        f_ab = tuple(x - y for x, y in zip(f_ab, sect.apply(quo.bracket(quo._unit(a), quo._unit(b)))))
        f_coords = rbasis.solve(f_ab)
        s_ab = quo.table[a][b]
        for rho in range(rdim):
            row = [ZERO] * (sdim * rdim)
            for t in range(rdim):
                row[b * rdim + t] += action[a][rho, t]
                row[a * rdim + t] -= action[b][rho, t]
            for c, coeff in enumerate(s_ab):
                if coeff:
                    row[c * rdim + rho] -= coeff
            rows.append(row)
            rhs.append(f_coords[rho])
    if rows:
        try:
            h = Matrix.from_rows(rows).solve(rhs)
        except Inconsistent as exc:
            raise InternalError("lifting_inconsistent") from exc
    else:
        h = ()
    vectors = []
    for a in range(sdim):
        hv = [ZERO] * g.dim
        for t in range(rdim):
            coeff = h[a * rdim + t] if h else ZERO
            if coeff:
                hv = [x + coeff * y for x, y in zip(hv, rbasis.column(t))]
        vectors.append(tuple(x - y for x, y in zip(sect.column(a), hv)))
    out = Subspace.from_vectors(g, vectors)
    if out.dim != sdim or not out.is_subalgebra():
        raise InternalError("levi correction did not produce a complement subalgebra")
    return out


# -- splitting a semisimple algebra into simple ideals ----------------------------


def killing_perp(space: Subspace, inside: Subspace) -> Subspace:
    """Orthogonal complement of ``space`` within ``inside`` for inside's own Killing form."""
    alg, embed = subalgebra_algebra(inside)
    K = killing_matrix(alg)
    coords = [inside.basis.solve(v) for v in space.vectors()]
    rows = [K.apply(c) for c in coords]
    perp_coords = Matrix.from_rows(rows).kernel() if rows else [alg._unit(i) for i in range(alg.dim)]
    return Subspace.from_vectors(space.parent, [embed.apply(c) for c in perp_coords])


def _centroid(alg: LieAlgebra) -> list[Matrix]:
    """Basis of {phi : phi ad(x) = ad(x) phi for all x}."""
    n = alg.dim
    ads = [alg.ad(alg._unit(i)) for i in range(n)]
    rows = []
    for A in ads:
        # (A phi - phi A)[p][q] = 0, unknowns phi[r][s] flattened
        for p in range(n):
            for q in range(n):
                row = [ZERO] * (n * n)
                for r in range(n):
                    if A[p, r]:
                        row[r * n + q] += A[p, r]
                    if A[r, q]:
                        row[p * n + r] -= A[r, q]
                rows.append(row)
    basis = []
    for k in Matrix.from_rows(rows).kernel():
        basis.append(Matrix.from_rows([k[p * n:(p + 1) * n] for p in range(n)]))
    return basis


def _min_poly(phi: Matrix) -> list[Fraction]:
    """Monic minimal polynomial coefficients (constant first)."""
    n = phi.rows
    powers = [Matrix.identity(n)]
    while True:
        powers.append(powers[-1] * phi)
        cols = [[m[i, j] for i in range(n) for j in range(n)] for m in powers]
        system = Matrix.from_columns(cols[:-1])
        try:
            sol = system.solve([-x for x in cols[-1]])
        except Inconsistent:
            continue
        return list(sol) + [ONE]


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of the polynomial with the given coefficients."""
    from math import gcd

    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)

    def divisors(m):
        m = abs(m)
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return sorted(set(out))

    lead, const = ints[-1], ints[0]
    for p in divisors(const):
        for q in divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


def split_semisimple(s: Subspace) -> list[Subspace]:
    """Decompose a semisimple subalgebra into its simple ideals.

    Strategy: (1) the ideal generated by a single basis vector is a sum of
    simple ideals, so basis vectors usually split block-shaped inputs
    immediately; (2) otherwise, centroid elements with a rational eigenvalue
    lambda yield proper ideals ker(phi - lambda).  A one-dimensional centroid
    certifies Q-simplicity; a two-dimensional centroid with negative
    discriminant certifies a complex-type simple algebra.  Anything else means
    the ideal lattice is not defined over Q and raises SplitError.
    """
    alg, _ = subalgebra_algebra(s)
    if killing_matrix(alg).rank() != alg.dim:
        raise NotSemisimple("not_semisimple")
    if s.dim == 0:
        return []
    out: list[Subspace] = []
    _split_into(s, out)
    out.sort(key=lambda sp: sp.pivots())
    return out


def _split_into(s: Subspace, out: list[Subspace]):
    g = s.parent
    alg, embed = subalgebra_algebra(s)
    n = alg.dim

    def emit(ideal_coords: Sequence) -> Subspace:
        return Subspace.from_vectors(g, [embed.apply(v) for v in ideal_coords])

    def recurse_on(ideal_coords: list) -> None:
        inner = Subspace.from_vectors(alg, ideal_coords)
        part = emit(inner.vectors())
        rest = killing_perp(part, s)
        if part.dim + rest.dim != s.dim or part.intersect(rest).dim != 0:
            raise InternalError("killing-orthogonal split failed on a semisimple algebra")
        _split_into(part, out)
        _split_into(rest, out)

    for i in range(n):
        ideal = ideal_closure(alg, Subspace.from_vectors(alg, [alg._unit(i)]))
        if 0 < ideal.dim < n:
            recurse_on(ideal.vectors())
            return
    centroid = _centroid(alg)
    if len(centroid) == 1:
        out.append(s)
        return
    ident = Matrix.identity(n)
    candidates = list(centroid)
    candidates += [a * b for a in centroid for b in centroid]
    candidates += [a - b for a in centroid for b in centroid if a != b]
    for phi in candidates:
        if phi.is_zero():
            continue
        for lam in _rational_roots(_min_poly(phi)):
            kern = (phi - ident.scale(lam)).kernel()
            if 0 < len(kern) < n:
                recurse_on(list(kern))
                return
    if len(centroid) == 2:
        non_scalar = next(phi for phi in centroid if _min_poly(phi)[:-1] != [ZERO] * (len(_min_poly(phi)) - 1) or True)
        # pick the element that is not a multiple of the identity
        for phi in centroid:
            mp = _min_poly(phi)
            if len(mp) == 3:
                c0, c1, _ = mp
                disc = c1 * c1 - 4 * c0
                if disc < 0:
                    # centroid is an imaginary quadratic field: complex-type simple
                    out.append(s)
                    return
    raise SplitError(
        "ideal decomposition is not defined over the rationals for this input")


# -- Cartan dimension and real-form identification --------------------------------


def cartan_dimension(s: Subspace, *, samples: int = 24, seed: int = 0) -> int:
    """Dimension of the generic generalized null space of ad.

    Sampled: the minimum of dim ker(ad(x)^dim) over pseudo-random integer
    vectors x (fixed default seed).  For a simple algebra this is the rank of
    the complexification.
    """
    if samples < 20:
        raise ValueError("at least 20 samples are required for genericity")
    alg, _ = subalgebra_algebra(s)
    n = alg.dim
    rng = random.Random(seed)
    best = n
    for _ in range(samples):
        x = [rng.randint(-9, 9) for _ in range(n)]
        if not any(x):
            x[rng.randrange(n)] = 1
        adx = alg.ad(x)
        nullity = n - adx.power(n).rank()
        best = min(best, nullity)
        if best == 1:
            break
    return best


@dataclass(frozen=True)
class RealFormRecord:
    """Catalog row keyed by (dim, signature, cartan_dim)."""

    name: str
    dim: int
    signature: Signature
    cartan_dim: int
    real_rank: int
    lambda_wa: object  # Fraction or INF

    def key(self):
        return (self.dim, self.signature.as_tuple(), self.cartan_dim)


@dataclass
class Catalog:
    """Loaded real-form catalog; immutable records, a lookup counter for tests."""

    records: tuple[RealFormRecord, ...]
    lookups: int = 0
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        index = {}
        for rec in self.records:
            key = rec.key()
            if key in index:
                raise CatalogError(
                    f"catalog key collision on {key}: {index[key].name!r} vs {rec.name!r}")
            index[key] = rec
        self._index = index

    @staticmethod
    def from_json(text: str) -> "Catalog":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"catalog is not valid JSON: {exc}") from exc
        if not isinstance(raw, list):
            raise CatalogError("catalog must be a JSON array of records")
        records = []
        for entry in raw:
            try:
                sig = entry["signature"]
                records.append(RealFormRecord(
                    name=str(entry["name"]),
                    dim=int(entry["dim"]),
                    signature=Signature(int(sig[0]), int(sig[1]), int(sig[2])),
                    cartan_dim=int(entry["cartan_dim"]),
                    real_rank=int(entry["real_rank"]),
                    lambda_wa=lambda_from_str(str(entry["lambda_wa"])),
                ))
            except (KeyError, IndexError, ValueError, TypeError) as exc:
                raise CatalogError(f"malformed catalog record {entry!r}: {exc}") from exc
        return Catalog(records=tuple(records))

    @staticmethod
    def load(path: str | None = None) -> "Catalog":
        if path is None:
            text = resources.files("liewa").joinpath("data/realforms.json").read_text()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        return Catalog.from_json(text)

    def lookup(self, dim: int, signature: Signature, cartan_dim: int) -> RealFormRecord:
        self.lookups += 1
        key = (dim, signature.as_tuple(), cartan_dim)
        rec = self._index.get(key)
        if rec is None:
            raise UnrecognizedRealForm(dim, signature, cartan_dim)
        return rec


_default_catalog = None


def default_catalog() -> Catalog:
    global _default_catalog
    if _default_catalog is None:
        _default_catalog = Catalog.load()
    return _default_catalog


def identify_real_form(s: Subspace, catalog: Catalog | None = None) -> RealFormRecord:
    """Identify a simple subalgebra; caller guarantees simplicity.

    Negative-definite Killing short-circuits to a compact record without a
    catalog lookup; otherwise the invariant triple is looked up and a
    UnrecognizedRealForm error escapes on a miss.
    """
    alg, _ = subalgebra_algebra(s)
    sig = symmetric_signature(killing_matrix(alg))
    if sig.zero != 0:
        raise NotSemisimple("not_semisimple")
    if sig.positive == 0:
        return RealFormRecord(
            name=f"compact({alg.dim})", dim=alg.dim, signature=sig,
            cartan_dim=cartan_dimension(s), real_rank=0, lambda_wa=Fraction(1))
    if catalog is None:
        catalog = default_catalog()
    return catalog.lookup(alg.dim, sig, cartan_dimension(s))
