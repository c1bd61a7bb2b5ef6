"""Matrix models of the modules and the independent tensor-product oracle.

The algebra is generated by a, b, c, d with

    ba = -ab   db = -bd   ca = -ac   dc = -cd   bc = cb
    a^2 = 0    b^2 = 1    c^2 = 1    d^2 = 0    da + ad = 1 - bc

A :class:`Representation` stores the four generator actions as exact
rational matrices.  :func:`build` produces the standard model of each
label, :func:`tensor` and :func:`dual` implement the comultiplication and
antipode, and :func:`decompose` splits an arbitrary representation into
labelled indecomposables -- without ever consulting the symbolic
multiplication table, so the two can be checked against each other.

The decomposition works structurally:

1. ``bc`` is a central involution; its -1 eigenspace is a semisimple sum
   of the two-dimensional simples, counted by rank arguments.
2. On the +1 part, the square of the radical isolates the multiplicities
   of the four-dimensional projectives.
3. What remains has radical square zero and is equivalent to a pair of
   linear maps (the ``a`` and ``d`` actions from top to socle), graded by
   the ``b`` eigenvalue.  Kronecker's classification of matrix pencils
   then yields the string (syzygy/cosyzygy) and band summands, with the
   band parameter read off the generalised eigenvalues.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .green import (
    ETA_INF,
    Eta,
    Label,
    LabelKind,
    band,
    label_dimension,
    omega,
    projective,
    simple_one,
    simple_two,
)
from .linalg import (
    RatMatrix,
    annihilator_basis,
    express_in_basis,
    preimage_basis,
    quotient_maps,
    restrict_to_invariant,
    span_basis,
)

_HALF = Fraction(1, 2)


class DecompositionError(RuntimeError):
    """Raised when a representation cannot be split over the rationals.

    Signals either corrupted input (the defining relations fail, the
    claimed module structure is absent) or a genuine rationality gap
    (an indecomposable summand not defined over Q).
    """


@dataclass(frozen=True)
class Representation:
    """Actions of the four generators on a finite-dimensional module."""

    a: RatMatrix
    b: RatMatrix
    c: RatMatrix
    d: RatMatrix

    def __post_init__(self):
        n = self.a.rows
        for mat in (self.a, self.b, self.c, self.d):
            if mat.rows != n or mat.cols != n:
                raise ValueError("generator actions must be square matrices of one size")

    @property
    def dim(self) -> int:
        return self.a.rows

    def generators(self) -> tuple[RatMatrix, RatMatrix, RatMatrix, RatMatrix]:
        return (self.a, self.b, self.c, self.d)


@dataclass
class HomSpace:
    """Basis of the space of intertwiners between two representations."""

    source_dim: int
    target_dim: int
    basis: list[RatMatrix]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class RMatrixElement:
    """Universal braiding element: integer tensor words over a common denominator.

    Each term is ((i,j,l,k), (i',j',l',k'), coefficient) standing for the
    monomial a^i b^j c^l d^k tensor a^i' b^j' c^l' d^k'.
    """

    terms: tuple
    denominator: int


R_MATRIX = RMatrixElement(
    terms=(
        ((0, 0, 0, 0), (0, 0, 0, 0), 1),
        ((0, 1, 0, 0), (0, 0, 0, 0), 1),
        ((0, 0, 0, 0), (0, 0, 1, 0), 1),
        ((0, 1, 0, 0), (0, 0, 1, 0), -1),
        ((1, 0, 0, 0), (0, 0, 0, 1), 1),
        ((1, 1, 0, 0), (0, 0, 0, 1), 1),
        ((1, 0, 0, 0), (0, 0, 1, 1), 1),
        ((1, 1, 0, 0), (0, 0, 1, 1), -1),
    ),
    denominator=2,
)


# -- construction of the standard models ---------------------------------


def _simple_one_rep(r: int) -> Representation:
    sign = 1 if r == 0 else -1
    z = RatMatrix.zeros(1, 1)
    s = RatMatrix.from_rows([[sign]])
    return Representation(z, s, s, z)


def _simple_two_rep(r: int) -> Representation:
    e = 1 if r == 0 else -1
    a = RatMatrix.from_rows([[0, 0], [1, 0]])
    d = RatMatrix.from_rows([[0, 2], [0, 0]])
    b = RatMatrix.diagonal([e, -e])
    c = RatMatrix.diagonal([-e, e])
    return Representation(a, b, c, d)


def _projective_rep(r: int) -> Representation:
    e = 1 if r == 0 else -1
    a = RatMatrix.zeros(4, 4)
    a.data[1][0] = Fraction(1)
    a.data[3][2] = Fraction(1)
    d = RatMatrix.zeros(4, 4)
    d.data[2][0] = Fraction(1)
    d.data[3][1] = Fraction(-1)
    b = RatMatrix.diagonal([e, -e, -e, e])
    return Representation(a, b, b.copy(), d)


def _band_rep(s: int, r: int, e: Eta) -> Representation:
    # basis order: v_{1,1}..v_{1,s}, v_{2,1}..v_{2,s}
    n = 2 * s
    a = RatMatrix.zeros(n, n)
    d = RatMatrix.zeros(n, n)
    if e.is_infinite:
        for i in range(1, s):
            a.data[s + i - 1][i] = Fraction(1)
        for i in range(s):
            d.data[s + i][i] = Fraction(1)
    else:
        for i in range(s):
            a.data[s + i][i] = Fraction(1)
            d.data[s + i][i] = -e.value
            if i >= 1:
                d.data[s + i - 1][i] = Fraction(-1)
    top = 1 if r == 1 else -1
    b = RatMatrix.diagonal([top] * s + [-top] * s)
    return Representation(a, b, b.copy(), d)


def build(label: Label) -> Representation:
    """Standard representation of a label; cached, treat as immutable."""
    return _build_cached(label)


@lru_cache(maxsize=None)
def _build_cached(label: Label) -> Representation:
    kind = label.kind
    if kind is LabelKind.SIMPLE_ONE:
        return _simple_one_rep(label.r)
    if kind is LabelKind.SIMPLE_TWO:
        return _simple_two_rep(label.r)
    if kind is LabelKind.PROJECTIVE:
        return _projective_rep(label.r)
    if kind is LabelKind.BAND:
        return _band_rep(label.s, label.r, label.eta)
    if kind is LabelKind.SYZYGY:
        rep = build(simple_one(label.r))
        for _ in range(label.s):
            rep = syzygy(rep)
        return rep
    return dual(build(omega(label.s, label.r)))


def check_relations(rep: Representation) -> bool:
    """All ten defining relations, exactly."""
    a, b, c, d = rep.generators()
    n = rep.dim
    ident = RatMatrix.identity(n)
    zero = RatMatrix.zeros(n, n)
    return (
        b @ a == -(a @ b)
        and d @ b == -(b @ d)
        and c @ a == -(a @ c)
        and d @ c == -(c @ d)
        and b @ c == c @ b
        and a @ a == zero
        and b @ b == ident
        and c @ c == ident
        and d @ d == zero
        and d @ a + a @ d == ident - b @ c
    )


# -- monoidal structure ----------------------------------------------------


def tensor(m: Representation, n: Representation) -> Representation:
    """Tensor product along the comultiplication a -> a(x)b + 1(x)a, d -> d(x)c + 1(x)d."""
    im = RatMatrix.identity(m.dim)
    a = m.a.kron(n.b) + im.kron(n.a)
    d = m.d.kron(n.c) + im.kron(n.d)
    return Representation(a, m.b.kron(n.b), m.c.kron(n.c), d)


def dual(m: Representation) -> Representation:
    """Dual module via the antipode: S(a) = ba, S(b) = b, S(c) = c, S(d) = cd."""
    return Representation(
        (m.b @ m.a).transpose(),
        m.b.transpose(),
        m.c.transpose(),
        (m.c @ m.d).transpose(),
    )


def direct_sum(reps: list[Representation]) -> Representation:
    dims = [r.dim for r in reps]
    total = sum(dims)

    def block(pick) -> RatMatrix:
        out = RatMatrix.zeros(total, total)
        off = 0
        for r in reps:
            mat = pick(r)
            for i in range(r.dim):
                row = out.data[off + i]
                src = mat.data[i]
                for j in range(r.dim):
                    if src[j]:
                        row[off + j] = src[j]
            off += r.dim
        return out

    return Representation(
        block(lambda r: r.a), block(lambda r: r.b), block(lambda r: r.c), block(lambda r: r.d)
    )


# -- hom spaces and isomorphism --------------------------------------------


def hom_space(m: Representation, n: Representation) -> HomSpace:
    """All F with F a_M = a_N F (and likewise for b, c, d)."""
    nm, nn = m.dim, n.dim
    if nm == 0 or nn == 0:
        return HomSpace(nm, nn, [])
    blocks = []
    i_m = RatMatrix.identity(nm)
    i_n = RatMatrix.identity(nn)
    for xm, xn in zip(m.generators(), n.generators()):
        blocks.append(i_m.kron(xn) - xm.transpose().kron(i_n))
    stacked = RatMatrix(
        4 * nm * nn, nm * nn, [row for blk in blocks for row in blk.data]
    )
    basis = []
    for vec in stacked.kernel_basis():
        # column-major unvec: entry (i, j) of F sits at index j*nn + i
        mat = RatMatrix.zeros(nn, nm)
        for j in range(nm):
            for i in range(nn):
                mat.data[i][j] = vec[j * nn + i]
        basis.append(mat)
    return HomSpace(nm, nn, basis)


def is_isomorphic(m: Representation, n: Representation, seed: int | None = None) -> bool:
    """Exact isomorphism test.

    Searches for an invertible intertwiner among random integer
    combinations of the hom basis with doubling coefficient bounds, then a
    bounded deterministic enumeration.  A returned False is always
    certified by a rank bound on the joint column space; if neither a
    witness nor the certificate is found the test raises rather than
    guess.
    """
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    hom = hom_space(m, n)
    if not hom.basis:
        return False
    rng = random.Random(seed)
    k = len(hom.basis)

    def combine(coeffs) -> RatMatrix:
        acc = RatMatrix.zeros(n.dim, m.dim)
        for coef, mat in zip(coeffs, hom.basis):
            if coef:
                acc = acc + mat.scale(coef)
        return acc

    bound = 2
    for _ in range(8):
        cand = combine([rng.randint(-bound, bound) for _ in range(k)])
        if cand.is_invertible():
            return True
        bound *= 2
    if 5**k <= 200_000:
        for coeffs in itertools.product(range(-2, 3), repeat=k):
            if any(coeffs) and combine(coeffs).is_invertible():
                return True
    stacked = RatMatrix(
        n.dim, m.dim * k, [sum((hom.basis[t].data[i] for t in range(k)), []) for i in range(n.dim)]
    )
    if stacked.rank() < n.dim:
        return False
    raise RuntimeError("isomorphism test inconclusive: no invertible combination found")


# -- radical series ---------------------------------------------------------


def _e_plus(rep: Representation) -> RatMatrix:
    """Projector onto the +1 eigenspace of the central involution bc."""
    n = rep.dim
    return (RatMatrix.identity(n) + rep.b @ rep.c).scale(_HALF)


def radical_basis(rep: Representation) -> list[list[Fraction]]:
    """Basis of JM.

    The radical ideal is spanned by a and d cut to the bc = +1 block, so
    JM = a(e+ M) + d(e+ M) where e+ projects onto that block.
    """
    ep = _e_plus(rep)
    ae, de = rep.a @ ep, rep.d @ ep
    return span_basis(ae.columns() + de.columns(), rep.dim)


def socle_basis(rep: Representation) -> list[list[Fraction]]:
    """Basis of the socle, the joint kernel of the radical action."""
    ep = _e_plus(rep)
    ae, de = rep.a @ ep, rep.d @ ep
    stacked = RatMatrix(2 * rep.dim, rep.dim, ae.data + de.data)
    return stacked.kernel_basis()


def loewy_length(rep: Representation) -> int:
    """Least k with J^k M = 0 (at most 3 for genuine modules)."""
    ep = _e_plus(rep)
    ae, de = rep.a @ ep, rep.d @ ep
    layer = [row for row in RatMatrix.identity(rep.dim).data]
    k = 0
    while layer:
        nxt = [ae.apply(v) for v in layer] + [de.apply(v) for v in layer]
        layer = span_basis(nxt, rep.dim)
        k += 1
        if k > rep.dim + 1:
            raise DecompositionError("radical series does not terminate")
    return k


# -- projective covers and syzygies -----------------------------------------


def _restrict(rep: Representation, basis: list) -> Representation:
    return Representation(
        restrict_to_invariant(rep.a, basis),
        restrict_to_invariant(rep.b, basis),
        restrict_to_invariant(rep.c, basis),
        restrict_to_invariant(rep.d, basis),
    )


def _quotient(rep: Representation, sub_basis: list) -> Representation:
    proj, lift = quotient_maps(sub_basis, rep.dim)
    return Representation(
        proj @ rep.a @ lift, proj @ rep.b @ lift, proj @ rep.c @ lift, proj @ rep.d @ lift
    )


def _joint_eigen(m1: RatMatrix, v1: int, m2: RatMatrix, v2: int) -> list[list[Fraction]]:
    n = m1.rows
    ident = RatMatrix.identity(n)
    top = m1 - ident.scale(v1)
    bot = m2 - ident.scale(v2)
    return RatMatrix(2 * n, n, top.data + bot.data).kernel_basis()


def projective_cover_map(rep: Representation) -> tuple[Representation, RatMatrix]:
    """Projective cover and the covering surjection.

    The top is split into simple summands by simultaneous (b, c)
    eigenvalues; matching projectives are assembled and their generators
    lifted through the quotient.  Four-dimensional covers take a lift u to
    the column block (u, au, du, adu); two-dimensional (projective simple)
    covers take a socle-free vector w of the bc = -1 part to (w, aw).
    """
    n = rep.dim
    if n == 0:
        return rep, RatMatrix.zeros(0, 0)
    a, b, c, d = rep.generators()
    jm = radical_basis(rep)
    proj, lift = quotient_maps(jm, n)
    top_b = proj @ b @ lift
    top_c = proj @ c @ lift
    ep = _e_plus(rep)

    pieces: list[Representation] = []
    columns: list[list[Fraction]] = []

    for r in (0, 1):
        sign = 1 if r == 0 else -1
        for t in _joint_eigen(top_b, sign, top_c, sign):
            u = lift.apply(t)
            u = ep.apply(u)
            half_proj = (RatMatrix.identity(n) + b.scale(sign)).scale(_HALF)
            u = half_proj.apply(u)
            if proj.apply(u) != list(t):
                raise DecompositionError("projective cover lift failed")
            au = a.apply(u)
            du = d.apply(u)
            adu = a.apply(du)
            pieces.append(build(projective(r)))
            columns.extend([u, au, du, adu])

    bc = b @ c
    minus = (bc + RatMatrix.identity(n)).kernel_basis()
    if minus:
        mmat = RatMatrix.from_columns(minus, rows=n)
        b_on = restrict_to_invariant(b, minus)
        for r in (0, 1):
            sign = 1 if r == 0 else -1
            u_r = (b_on - RatMatrix.identity(len(minus)).scale(sign)).kernel_basis()
            if not u_r:
                continue
            umat = mmat @ RatMatrix.from_columns(u_r, rows=len(minus))
            for coords in (d @ umat).kernel_basis():
                w = umat.apply(coords)
                pieces.append(build(simple_two(r)))
                columns.extend([w, a.apply(w)])

    cover = direct_sum(pieces)
    phi = RatMatrix.from_columns(columns, rows=n)
    for xc, xm in zip(cover.generators(), rep.generators()):
        if phi @ xc != xm @ phi:
            raise DecompositionError("projective cover map is not a module map")
    if phi.rank() != n:
        raise DecompositionError("projective cover map is not surjective")
    return cover, phi


def syzygy(rep: Representation) -> Representation:
    """Kernel of the projective cover, as a representation."""
    cover, phi = projective_cover_map(rep)
    kernel = phi.kernel_basis()
    if not kernel:
        return Representation(
            RatMatrix.zeros(0, 0), RatMatrix.zeros(0, 0), RatMatrix.zeros(0, 0), RatMatrix.zeros(0, 0)
        )
    return _restrict(cover, kernel)


def cosyzygy(rep: Representation) -> Representation:
    return dual(syzygy(dual(rep)))


# -- band parameter recovery -------------------------------------------------


def recover_eta(rep: Representation) -> Eta:
    """Band parameter of an indecomposable (s,s)-type representation.

    Looks for the one vector v (up to scalar) in the top eigencomponent
    whose images av, dv span at most a line; dv = -eta * av fixes the
    parameter, with av = 0 marking the point at infinity.
    """
    n = rep.dim
    if n == 0 or n % 2:
        raise ValueError("not an (s,s)-type representation")
    s = n // 2
    if rep.b @ rep.c != RatMatrix.identity(n):
        raise ValueError("band modules have bc acting as the identity")
    soc = socle_basis(rep)
    if len(soc) != s:
        raise ValueError("socle length does not match (s,s)-type")
    b_soc = restrict_to_invariant(rep.b, soc)
    if b_soc == RatMatrix.identity(s):
        r = 0
    elif b_soc == RatMatrix.identity(s).scale(-1):
        r = 1
    else:
        raise ValueError("socle is not b-isotypic")
    top_sign = -1 if r == 0 else 1
    e_basis = (rep.b - RatMatrix.identity(n).scale(top_sign)).kernel_basis()
    if len(e_basis) != s:
        raise ValueError("top eigencomponent has the wrong dimension")
    emat = RatMatrix.from_columns(e_basis, rows=n)
    ae = rep.a @ emat
    de = rep.d @ emat
    ker = ae.kernel_basis()
    if ker:
        if len(ker) != 1:
            raise ValueError("kernel vector is not unique; not an (s,s) band")
        v = emat.apply(ker[0])
        if not any(rep.d.apply(v)):
            raise ValueError("candidate vector has av = dv = 0")
        return ETA_INF
    x = ae.solve_matrix(de)
    if x is None:
        raise ValueError("d does not act through a on the top component")
    trace = sum(x.data[i][i] for i in range(s))
    value = -trace / s
    shifted = x + RatMatrix.identity(s).scale(value)
    power = shifted
    for _ in range(s - 1):
        power = power @ shifted
    if not power.is_zero():
        raise ValueError("top action is not a single generalised eigenvalue")
    ker_v = (de + ae.scale(value)).kernel_basis()
    if len(ker_v) != 1:
        raise ValueError("collinear vector is not unique")
    return Eta(value)


# -- Kronecker pencil machinery ---------------------------------------------


class _BadShift(Exception):
    """Internal: the chosen pencil shift hits a band eigenvalue."""


def _chain_counts(a1: RatMatrix, delta: RatMatrix) -> tuple[dict[int, int], list, list]:
    """Minimal-index staircase of the pencil (a1, delta).

    Returns (counts, T_part_basis, S_part_basis) where counts[s] is the
    number of (s+1) x s singular blocks; requires a1 to be injective on
    the regular part (guaranteed by a good shift, checked by the caller).
    """
    dim_t, dim_s = a1.cols, a1.rows
    k = span_basis(a1.kernel_basis(), dim_t)
    dims = [0, len(k)]
    while True:
        img = span_basis([delta.apply(v) for v in k], dim_s)
        k2 = preimage_basis(a1, img)
        if len(k2) == len(k):
            break
        if len(k2) < len(k):
            raise _BadShift
        k = k2
        dims.append(len(k))
    incs = [dims[i] - dims[i - 1] for i in range(1, len(dims))]
    incs.append(0)
    counts: dict[int, int] = {}
    for s in range(len(incs) - 1):
        cnt = incs[s] - incs[s + 1]
        if cnt < 0:
            raise _BadShift
        if cnt:
            counts[s] = cnt
    t_part = k
    s_part = span_basis([delta.apply(v) for v in k], dim_s)
    if sum((s + 1) * c for s, c in counts.items()) != len(t_part):
        raise _BadShift
    if sum(s * c for s, c in counts.items()) != len(s_part):
        raise _BadShift
    return counts, t_part, s_part


def _charpoly(mat: RatMatrix) -> list[Fraction]:
    """Characteristic polynomial det(xI - mat), coefficients low to high.

    Computed exactly by evaluating the determinant at m+1 integer points
    and interpolating (Newton form); basis-invariant by construction.
    """
    m = mat.rows
    xs = [Fraction(k) for k in range(m + 1)]
    ident = RatMatrix.identity(m)
    coef = [(ident.scale(x) - mat).det() for x in xs]
    for j in range(1, m + 1):
        for i in range(m, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * (m + 1)
    acc = [Fraction(1)]
    for k in range(m + 1):
        for idx, c in enumerate(acc):
            poly[idx] += coef[k] * c
        nxt = [Fraction(0)] * (len(acc) + 1)
        for idx, c in enumerate(acc):
            nxt[idx + 1] += c
            nxt[idx] -= c * xs[k]
        acc = nxt
    return poly


def _divisors(n: int) -> list[int]:
    """Positive divisors; trial division with a cap, leftover treated prime."""
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n and d < 1_000_000:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for p, e in factors.items():
        divs = [dv * p**k for dv in divs for k in range(e + 1)]
        if len(divs) > 50_000:
            raise DecompositionError("too many divisor candidates in eigenvalue search")
    return divs


def _poly_eval(poly: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _rational_eigen_blocks(phi: RatMatrix) -> list[tuple[Fraction, list[int]]]:
    """Rational eigenvalues of phi with Jordan block sizes.

    Candidate roots come from the rational root theorem applied to the
    characteristic polynomial; each found eigenvalue gets its Jordan data
    from kernel ranks.  Raises when the blocks do not exhaust the space,
    i.e. some eigenvalue is irrational.
    """
    m = phi.rows
    if m == 0:
        return []
    poly = _charpoly(phi)
    den = lcm(*[c.denominator for c in poly], 1)
    ints = [int(c * den) for c in poly]
    roots: set[Fraction] = set()
    low = 0
    while low <= m and ints[low] == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
    for u in _divisors(ints[low]):
        for v in _divisors(ints[m]):
            for cand in (Fraction(u, v), Fraction(-u, v)):
                if cand not in roots and _poly_eval(poly, cand) == 0:
                    roots.add(cand)

    ident = RatMatrix.identity(m)
    blocks: list[tuple[Fraction, list[int]]] = []
    total = 0
    for theta in sorted(roots):
        shifted = phi - ident.scale(theta)
        kdims = [0]
        power = ident
        while True:
            power = power @ shifted
            kd = m - power.rank()
            if kd == kdims[-1]:
                break
            kdims.append(kd)
        if len(kdims) == 1:
            continue
        geq = [kdims[i] - kdims[i - 1] for i in range(1, len(kdims))]
        geq.append(0)
        sizes = []
        for j in range(len(geq) - 1):
            sizes.extend([j + 1] * (geq[j] - geq[j + 1]))
        blocks.append((theta, sizes))
        total += sum(sizes)
    if total != m:
        raise DecompositionError(
            "band part has non-rational generalised eigenvalues (rationality gap)"
        )
    return blocks


def _kronecker_blocks(alpha: RatMatrix, delta: RatMatrix):
    """Full Kronecker block data of the pencil (alpha, delta): T -> S.

    Returns (up, down, bands): counts of (s+1) x s blocks by s >= 0,
    counts of u x (u+1) blocks by u >= 1, and a list of (size, Eta) for
    the regular part.
    """
    shifts = [Fraction(0)]
    for k in range(1, alpha.rows + 3):
        shifts.extend((Fraction(k), Fraction(-k)))
    last_error: Exception | None = None
    for c in shifts:
        try:
            return _kronecker_with_shift(alpha, delta, c)
        except _BadShift as exc:
            last_error = exc
    raise DecompositionError(f"no pencil shift separates the band part: {last_error}")


def _kronecker_with_shift(alpha: RatMatrix, delta: RatMatrix, c: Fraction):
    dim_t, dim_s = alpha.cols, alpha.rows
    a1 = alpha + delta.scale(c) if c else alpha

    up_counts, t_left, s_left = _chain_counts(a1, delta)

    proj_t, lift_t = quotient_maps(t_left, dim_t)
    proj_s, _ = quotient_maps(s_left, dim_s)
    abar = proj_s @ a1 @ lift_t
    dbar = proj_s @ delta @ lift_t

    down_counts_raw, s_right, t_right = _chain_counts(abar.transpose(), dbar.transpose())
    if down_counts_raw.get(0):
        raise DecompositionError("socle vectors outside the image of the radical action")

    t_reg = annihilator_basis(t_right, abar.cols)
    s_reg = annihilator_basis(s_right, abar.rows)
    m = dim_t - len(t_left) - sum(u * cnt for u, cnt in down_counts_raw.items())
    if len(t_reg) != m or len(s_reg) != m:
        raise _BadShift

    bands: list[tuple[int, Eta]] = []
    if m:
        t_reg_mat = RatMatrix.from_columns(t_reg, rows=abar.cols)
        try:
            a_reg = express_in_basis((abar @ t_reg_mat).columns(), s_reg, abar.rows)
            d_reg = express_in_basis((dbar @ t_reg_mat).columns(), s_reg, abar.rows)
        except ValueError as exc:
            raise _BadShift from exc
        if not a_reg.is_invertible():
            raise _BadShift
        phi = a_reg.inverse() @ d_reg
        for theta, sizes in _rational_eigen_blocks(phi):
            # theta = -eta/(1 - c*eta); c*theta = 1 marks the infinite point
            if c * theta == 1:
                e = ETA_INF
            else:
                e = Eta(theta / (c * theta - 1))
            bands.extend((size, e) for size in sizes)

    down_counts = {u: cnt for u, cnt in down_counts_raw.items() if u >= 1}
    return up_counts, down_counts, bands


# -- full decomposition -------------------------------------------------------


def _two_dim_labels(rep: Representation) -> list[Label]:
    """Split the bc = -1 block: a semisimple pile of two-dimensional simples."""
    n = rep.dim
    if n % 2:
        raise DecompositionError("bc = -1 block has odd dimension")
    half = n // 2
    ident = RatMatrix.identity(n)
    u_plus = (rep.b - ident).kernel_basis()
    u_minus = (rep.b + ident).kernel_basis()
    if len(u_plus) != half or len(u_minus) != half:
        raise DecompositionError("b eigenspaces of the bc = -1 block are unbalanced")
    up = RatMatrix.from_columns(u_plus, rows=n) if u_plus else RatMatrix.zeros(n, 0)
    um = RatMatrix.from_columns(u_minus, rows=n) if u_minus else RatMatrix.zeros(n, 0)
    m0 = (rep.a @ up).rank()
    m1 = (rep.a @ um).rank()
    if m0 + m1 != half:
        raise DecompositionError("bc = -1 block is not a sum of two-dimensional simples")
    if (rep.d @ up).rank() != m1 or (rep.d @ um).rank() != m0:
        raise DecompositionError("d action inconsistent on the bc = -1 block")
    return [simple_two(0)] * m0 + [simple_two(1)] * m1


def _ll2_labels(rep: Representation) -> list[Label]:
    """Labels of a radical-square-zero representation with bc = +1."""
    n = rep.dim
    if n == 0:
        return []
    a, b, d = rep.a, rep.b, rep.d
    soc = span_basis(a.columns() + d.columns(), n)
    for v in soc:
        if any(a.apply(v)) or any(d.apply(v)):
            raise DecompositionError("radical square is nonzero after peeling")
    proj_t, lift_t = quotient_maps(soc, n)
    tdim = proj_t.rows
    sdim = len(soc)
    if tdim == 0:
        raise DecompositionError("module equals its own radical")
    if sdim == 0:
        # semisimple pile of one-dimensional simples
        b_t = proj_t @ b @ lift_t
        p0 = len((b_t - RatMatrix.identity(tdim)).kernel_basis())
        p1 = tdim - p0
        return [simple_one(0)] * p0 + [simple_one(1)] * p1

    smat = RatMatrix.from_columns(soc, rows=n)
    alpha_full = smat.solve_matrix(a @ lift_t)
    delta_full = smat.solve_matrix(d @ lift_t)
    if alpha_full is None or delta_full is None:
        raise DecompositionError("radical images escape the socle span")
    b_t = proj_t @ b @ lift_t
    b_s = restrict_to_invariant(b, soc)

    t_par = [
        (b_t - RatMatrix.identity(tdim)).kernel_basis(),
        (b_t + RatMatrix.identity(tdim)).kernel_basis(),
    ]
    s_par = [
        (b_s - RatMatrix.identity(sdim)).kernel_basis(),
        (b_s + RatMatrix.identity(sdim)).kernel_basis(),
    ]
    if len(t_par[0]) + len(t_par[1]) != tdim or len(s_par[0]) + len(s_par[1]) != sdim:
        raise DecompositionError("b does not act semisimply")

    labels: list[Label] = []
    for p in (0, 1):
        tp = t_par[p]
        sq = s_par[1 - p]
        if not tp:
            if sq:
                raise DecompositionError("socle component with empty matching top")
            continue
        tmat = RatMatrix.from_columns(tp, rows=tdim)
        a_img = alpha_full @ tmat
        d_img = delta_full @ tmat
        if not sq:
            if not a_img.is_zero() or not d_img.is_zero():
                raise DecompositionError("generator action does not flip the grading")
            alpha_p = delta_p = RatMatrix.zeros(0, len(tp))
        else:
            try:
                alpha_p = express_in_basis(a_img.columns(), sq, sdim)
                delta_p = express_in_basis(d_img.columns(), sq, sdim)
            except ValueError as exc:
                raise DecompositionError("generator action does not flip the grading") from exc
        up, down, bands = _kronecker_blocks(alpha_p, delta_p)
        for s, cnt in up.items():
            lab = simple_one(p) if s == 0 else Label(LabelKind.SYZYGY, (p + s) % 2, s)
            labels.extend([lab] * cnt)
        for u, cnt in down.items():
            labels.extend([Label(LabelKind.COSYZYGY, (p + u + 1) % 2, u)] * cnt)
        for size, e in bands:
            labels.append(band(size, p + 1, e))
    return labels


def _one_dim_type_labels(rep: Representation) -> list[Label]:
    """Labels of the bc = +1 block: projectives plus the radical-square-zero core."""
    n = rep.dim
    a, d = rep.a, rep.d
    j1 = span_basis(a.columns() + d.columns(), n)
    j2 = span_basis(
        [a.apply(v) for v in j1] + [d.apply(v) for v in j1], n
    )
    j3 = span_basis([a.apply(v) for v in j2] + [d.apply(v) for v in j2], n)
    if j3:
        raise DecompositionError("radical cube is nonzero")
    p0 = p1 = 0
    if j2:
        b_j2 = restrict_to_invariant(rep.b, j2)
        p0 = len((b_j2 - RatMatrix.identity(len(j2))).kernel_basis())
        p1 = len(j2) - p0
        core = _quotient(rep, j2)
    else:
        core = rep
    labels = _ll2_labels(core)
    for r, count in ((0, p0), (1, p1)):
        shadow = Label(LabelKind.COSYZYGY, r, 1)
        for _ in range(count):
            try:
                labels.remove(shadow)
            except ValueError:
                raise DecompositionError(
                    "projective socle without its cosyzygy shadow in the core"
                ) from None
        labels.extend([projective(r)] * count)
    return labels


def decompose(rep: Representation, seed: int | None = None) -> list[Label]:
    """Multiset of indecomposable labels of a representation, sorted.

    Deterministic; the seed argument exists for interface parity with
    is_isomorphic and is unused.  Raises DecompositionError when the input
    does not split into the known label set over the rationals.
    """
    del seed
    n = rep.dim
    if n == 0:
        return []
    bc = rep.b @ rep.c
    ident = RatMatrix.identity(n)
    plus = (bc - ident).kernel_basis()
    minus = (bc + ident).kernel_basis()
    if len(plus) + len(minus) != n:
        raise DecompositionError("bc is not an involution; defining relations fail")
    labels: list[Label] = []
    if minus:
        labels.extend(_two_dim_labels(_restrict(rep, minus)))
    if plus:
        labels.extend(_one_dim_type_labels(_restrict(rep, plus)))
    labels.sort()
    if sum(label_dimension(l) for l in labels) != n:
        raise DecompositionError("decomposition does not exhaust the space")
    return labels


# -- braiding ------------------------------------------------------------------


def _word_action(rep: Representation, exps: tuple[int, int, int, int]) -> RatMatrix:
    mat = RatMatrix.identity(rep.dim)
    for gen, e in zip(rep.generators(), exps):
        if e:
            mat = mat @ gen
    return mat


def r_matrix_action(m: Representation, n: Representation) -> RatMatrix:
    """Action of the universal braiding element on the tensor product."""
    total = RatMatrix.zeros(m.dim * n.dim, m.dim * n.dim)
    for em, en, coeff in R_MATRIX.terms:
        term = _word_action(m, em).kron(_word_action(n, en))
        total = total + (term.scale(coeff) if coeff != 1 else term)
    return total.scale(Fraction(1, R_MATRIX.denominator))


def braiding_check(m: Representation, n: Representation) -> bool:
    """Whether flip . R is an invertible intertwiner M(x)N -> N(x)M."""
    nm, nn = m.dim, n.dim
    rmat = r_matrix_action(m, n)
    flip = RatMatrix.zeros(nm * nn, nm * nn)
    for i in range(nm):
        for j in range(nn):
            flip.data[j * nm + i][i * nn + j] = Fraction(1)
    f = flip @ rmat
    mn = tensor(m, n)
    nmr = tensor(n, m)
    if not f.is_invertible():
        return False
    return all(f @ xm == xn @ f for xm, xn in zip(mn.generators(), nmr.generators()))
