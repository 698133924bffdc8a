"""Dense exact matrices over R, C or H, forms, and group membership tests.

Everything here is exact: entries are rationals, Gaussian rationals or
rational quaternions, and zero tests are literal equalities.  The matrix
product skips zero entries, which matters because almost every matrix in
this package is a shift, a diagonal or a signed permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .families import FamilyInfo, family_info
from .scalars import (
    GaussianRational,
    Rational,
    RationalQuaternion,
    Ring,
    Scalar,
    QJ,
    coerce,
    conj_value,
    quat_to_complex_block,
    rat,
    real_part,
)


class NotNilpotentError(ValueError):
    pass


def _zero(ring: Ring):
    return coerce(ring, 0)


def _one(ring: Ring):
    return coerce(ring, 1)


class Mat:
    """An immutable rows x cols matrix over a single ring."""

    __slots__ = ("ring", "rows", "cols", "data", "_hash")

    def __init__(self, ring: Ring, rows: Iterable[Iterable]):
        data = tuple(tuple(coerce(ring, x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(ring: Ring, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        z = _zero(ring)
        return Mat(ring, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(ring: Ring, n: int) -> "Mat":
        z, o = _zero(ring), _one(ring)
        return Mat(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(ring: Ring, values) -> "Mat":
        vals = [coerce(ring, v) for v in values]
        z = _zero(ring)
        n = len(vals)
        return Mat(ring, [[vals[i] if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def from_scalars(rows: Iterable[Iterable[Scalar]]) -> "Mat":
        rows = [list(r) for r in rows]
        ring = rows[0][0].ring
        for r in rows:
            for s in r:
                if s.ring is not ring:
                    raise ValueError("mixed-ring matrix rejected")
        return Mat(ring, [[s.value for s in r] for r in rows])

    @staticmethod
    def column(ring: Ring, values) -> "Mat":
        return Mat(ring, [[v] for v in values])

    # -- access --------------------------------------------------------

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def scalar_at(self, i: int, j: int) -> Scalar:
        return Scalar(self.ring, self.data[i][j])

    def column_at(self, j: int) -> "Mat":
        return Mat(self.ring, [[self.data[i][j]] for i in range(self.rows)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    # -- arithmetic ----------------------------------------------------

    def _check_same_shape(self, other: "Mat"):
        if self.ring is not other.ring:
            raise ValueError("mixed-ring matrix arithmetic rejected")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(
            self.ring,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(
            self.ring,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __neg__(self) -> "Mat":
        return Mat(self.ring, [[-a for a in row] for row in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ring is not other.ring:
            raise ValueError("mixed-ring matrix arithmetic rejected")
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        z = _zero(self.ring)
        bd = other.data
        out = []
        for arow in self.data:
            acc = [z] * other.cols
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = bd[k]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Mat(self.ring, out)

    def scale(self, c) -> "Mat":
        """Left-multiply every entry by the scalar c."""
        c = coerce(self.ring, c)
        return Mat(self.ring, [[c * a for a in row] for row in self.data])

    def scale_right(self, c) -> "Mat":
        """Right-multiply every entry by the scalar c (H is noncommutative)."""
        c = coerce(self.ring, c)
        return Mat(self.ring, [[a * c for a in row] for row in self.data])

    def transpose(self) -> "Mat":
        return Mat(self.ring, list(zip(*self.data)))

    def conj(self) -> "Mat":
        return Mat(self.ring, [[conj_value(a) for a in row] for row in self.data])

    def sigma_t(self, sigma: str) -> "Mat":
        """sigma applied entrywise, then transpose."""
        m = self.conj() if sigma == "conj" else self
        return m.transpose()

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        t = _zero(self.ring)
        for i in range(self.rows):
            t = t + self.data[i][i]
        return t

    def power(self, k: int) -> "Mat":
        if not self.is_square():
            raise ValueError("power of non-square matrix")
        out = Mat.identity(self.ring, self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, self.data))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Mat({self.ring.value}, [{body}])"


# -- elimination over a division ring ---------------------------------


def _rref(rows, ncols):
    """In-place reduced row echelon form; returns the pivot column list.

    Row operations multiply coefficients from the left, which is the
    correct side for right vector spaces over H.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = _inv_value(rows[r][c])
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _inv_value(x):
    if isinstance(x, (GaussianRational, RationalQuaternion)):
        return x.inverse()
    return 1 / x


def rank(M: Mat) -> int:
    rows = [list(r) for r in M.data]
    return len(_rref(rows, M.cols))


def kernel(M: Mat) -> list[Mat]:
    """A basis of right-solutions of Mx = 0, as column matrices."""
    rows = [list(r) for r in M.data]
    pivots = _rref(rows, M.cols)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    z, o = _zero(M.ring), _one(M.ring)
    basis = []
    for f in free:
        vec = [z] * M.cols
        vec[f] = o
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][f]
        basis.append(Mat.column(M.ring, vec))
    return basis


def inverse(M: Mat) -> Mat:
    if not M.is_square():
        raise ValueError("inverse of non-square matrix")
    n = M.rows
    ident = Mat.identity(M.ring, n)
    rows = [list(mr) + list(ir) for mr, ir in zip(M.data, ident.data)]
    pivots = _rref(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return Mat(M.ring, [row[n:] for row in rows])


def stack(mats: list[Mat]) -> Mat:
    ring = mats[0].ring
    rows = []
    for m in mats:
        rows.extend(m.data)
    return Mat(ring, rows)


def hcat(mats: list[Mat]) -> Mat:
    ring = mats[0].ring
    rows = []
    for i in range(mats[0].rows):
        row = []
        for m in mats:
            row.extend(m.data[i])
        rows.append(row)
    return Mat(ring, rows)


# -- determinant, reduced norm ----------------------------------------


def _det_raw(M: Mat):
    """Fraction-free (Bareiss) determinant over R or C."""
    if M.ring is Ring.H:
        raise ValueError("determinant is not defined over H; use reduced_norm")
    if not M.is_square():
        raise ValueError("determinant of non-square matrix")
    n = M.rows
    a = [list(r) for r in M.data]
    sign = 1
    prev = _one(M.ring)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _zero(M.ring)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = _zero(M.ring)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def determinant(M: Mat) -> Scalar:
    """Exact determinant of a square matrix over R or C."""
    return Scalar(M.ring, _det_raw(M))


def complexify(M: Mat) -> Mat:
    """The 2r x 2c complex matrix obtained by embedding each H entry."""
    if M.ring is not Ring.H:
        raise ValueError("complexify expects a quaternionic matrix")
    rows = [[None] * (2 * M.cols) for _ in range(2 * M.rows)]
    for i in range(M.rows):
        for j in range(M.cols):
            block = quat_to_complex_block(M.data[i][j])
            for bi in range(2):
                for bj in range(2):
                    rows[2 * i + bi][2 * j + bj] = block[bi][bj]
    return Mat(Ring.C, rows)


def reduced_norm(M: Mat) -> Rational:
    """Reduced norm of a square quaternionic matrix (rational, >= 0)."""
    d = _det_raw(complexify(M))
    if d.im != 0:
        raise AssertionError("reduced norm must be real; embedding is broken")
    return d.re


def _det_like(M: Mat):
    """det over R/C, reduced norm over H: nonzero iff invertible."""
    if M.ring is Ring.H:
        return reduced_norm(M)
    return _det_raw(M)


# -- forms -------------------------------------------------------------


@dataclass(frozen=True)
class FormSpec:
    """An epsilon-sigma Hermitian form given by its Gram matrix."""

    gram: Mat
    sigma: str  # 'id' or 'conj'
    epsilon: int  # +1 or -1

    def __post_init__(self):
        if self.sigma not in ("id", "conj"):
            raise ValueError("sigma must be 'id' or 'conj'")
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if not self.gram.is_square():
            raise ValueError("Gram matrix must be square")
        sym = self.gram.sigma_t(self.sigma)
        if self.epsilon == -1:
            sym = -sym
        if sym != self.gram:
            raise ValueError("Gram matrix is not epsilon-sigma symmetric")
        if rank(self.gram) != self.gram.rows:
            raise ValueError("Gram matrix is singular")

    @property
    def n(self) -> int:
        return self.gram.rows

    @property
    def ring(self) -> Ring:
        return self.gram.ring


def form_eval(F: FormSpec, x: Mat, y: Mat) -> Scalar:
    """<x, y> = sigma(x)^t . gram . y for column vectors x, y."""
    if x.cols != 1 or y.cols != 1 or x.rows != F.n or y.rows != F.n:
        raise ValueError("form_eval expects columns matching the Gram matrix")
    v = x.sigma_t(F.sigma) @ F.gram @ y
    return Scalar(F.gram.ring, v.data[0][0])


def form_preserved(F: FormSpec, g: Mat) -> bool:
    return g.sigma_t(F.sigma) @ F.gram @ g == F.gram


def form_compatible(F: FormSpec, Z: Mat) -> bool:
    """Infinitesimal invariance: sigma(Z)^t . gram + gram . Z = 0."""
    return (Z.sigma_t(F.sigma) @ F.gram + F.gram @ Z).is_zero()


# -- groups ------------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int                      # matrix size over the family's ring
    form: Optional[FormSpec]
    det_condition: str          # 'det_one', 'nrd_one' or 'none'
    ring: Ring
    identity_component: bool = False

    @property
    def info(self) -> FamilyInfo:
        return family_info(self.family)


def ipq_gram(ring: Ring, p: int, q: int) -> Mat:
    return Mat.diag(ring, [1] * p + [-1] * q)


def jn_gram(ring: Ring, m: int) -> Mat:
    """The 2m x 2m matrix [[0, -I], [I, 0]]."""
    z, o = _zero(ring), _one(ring)
    rows = [[z] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        rows[i][m + i] = -o
        rows[m + i][i] = o
    return Mat(ring, rows)


def jstar_gram(n: int) -> Mat:
    """The skew-Hermitian Gram matrix j * I_n over H."""
    return Mat.diag(Ring.H, [QJ] * n)


def group_spec(
    family: str,
    n: int | None = None,
    p: int | None = None,
    q: int | None = None,
    gram: Mat | None = None,
    identity_component: bool = False,
) -> GroupSpec:
    """Build a GroupSpec, with the standard Gram matrix unless one is given.

    The standard matrices are I_{p,q} for su/so/sp_hq, the identity for
    so_c, [[0,-I],[I,0]] for sp_c/sp_r and j*I_n for so_star.  Passing a
    custom ``gram`` yields the congruent group adapted to another basis.
    """
    info = family_info(family)
    if identity_component and family != "so":
        raise ValueError("identity_component only applies to so(p,q)")
    if info.sigma is None:
        if n is None:
            raise ValueError(f"{family} needs n")
        return GroupSpec(family, n, None, info.det_condition, info.ring)
    if gram is None:
        if info.size == "pq":
            if p is None or q is None:
                raise ValueError(f"{family} needs p and q")
            gram = ipq_gram(info.ring, p, q)
        elif family in ("sp_c", "sp_r"):
            if n is None:
                raise ValueError(f"{family} needs n")
            gram = jn_gram(info.ring, n)
        elif family == "so_star":
            if n is None:
                raise ValueError(f"{family} needs n")
            gram = jstar_gram(n)
        else:  # so_c, o_c
            if n is None:
                raise ValueError(f"{family} needs n")
            gram = Mat.identity(info.ring, n)
    form = FormSpec(gram, info.sigma, info.epsilon)
    return GroupSpec(
        family, form.n, form, info.det_condition, info.ring, identity_component
    )


def _trace_vanishes(Z: Mat, det_condition: str) -> bool:
    if det_condition == "det_one":
        return not Z.trace()
    if det_condition == "nrd_one":
        # reduced trace: twice the sum of the real parts of the diagonal
        t = rat(0)
        for i in range(Z.rows):
            t += real_part(Z.data[i][i])
        return not t
    return True


def in_algebra(Z: Mat, G: GroupSpec) -> bool:
    """Membership of Z in the Lie algebra of G."""
    if not Z.is_square() or Z.rows != G.n:
        raise ValueError("dimension mismatch")
    if Z.ring is not G.ring:
        raise ValueError("wrong base ring")
    if G.form is not None and not form_compatible(G.form, Z):
        return False
    return _trace_vanishes(Z, G.det_condition)


@dataclass(frozen=True)
class MembershipReport:
    form_ok: bool
    det_ok: bool
    component_sign: Optional[int] = None
    component_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.form_ok and self.det_ok and self.component_ok


def in_group(g: Mat, G: GroupSpec) -> MembershipReport:
    """Check g against the defining conditions of G.

    ``component_sign`` is filled only for so(p, q); membership of the
    identity component additionally requires sign +1.
    """
    if not g.is_square() or g.rows != G.n:
        raise ValueError("dimension mismatch")
    if g.ring is not G.ring:
        raise ValueError("wrong base ring")
    d = _det_like(g)
    if not d:
        raise ValueError("singular matrix is not a group element")
    form_ok = G.form is None or form_preserved(G.form, g)
    if G.det_condition == "det_one":
        det_ok = d == _one(G.ring)
    elif G.det_condition == "nrd_one":
        det_ok = d == 1
    else:
        det_ok = True
    sign = None
    if G.family == "so" and form_ok:
        sign = so_component_sign(g, G.form)
    component_ok = (sign == 1) if G.identity_component else True
    return MembershipReport(form_ok, det_ok, sign, component_ok)


# -- signature and component detection ---------------------------------


def _congruence_diagonalize(F: FormSpec):
    """Exact symmetric-pivot diagonalization of a +1-Hermitian form.

    Returns (basis, values): basis[i] is a coordinate column t_i and
    values[i] the rational <t_i, t_i>, with <t_i, t_j> = 0 for i != j.
    """
    if F.epsilon != 1:
        raise ValueError("signature needs a +1-Hermitian form")
    n = F.n
    ring = F.ring
    conj = (lambda x: conj_value(x)) if F.sigma == "conj" else (lambda x: x)
    g = [list(row) for row in F.gram.data]
    basis = [[_zero(ring)] * n for _ in range(n)]
    for i in range(n):
        basis[i][i] = _one(ring)

    def add_multiple(i, j, a):
        # t_i <- t_i + t_j * a ; update Gram rows/cols accordingly
        for c in range(n):
            basis[i][c] = basis[i][c] + basis[j][c] * a
        ca = conj(a)
        for m in range(n):
            g[i][m] = g[i][m] + ca * g[j][m]
        for m in range(n):
            g[m][i] = g[m][i] + g[m][j] * a

    values = []
    for k in range(n):
        piv = None
        for i in range(k, n):
            if g[i][i]:
                piv = i
                break
        if piv is None:
            found = None
            for i in range(k, n):
                for j in range(k, n):
                    if i != j and g[i][j]:
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                raise ValueError("degenerate form has no signature")
            i, j = found
            add_multiple(i, j, conj(g[i][j]))
            piv = i
        if piv != k:
            basis[k], basis[piv] = basis[piv], basis[k]
            g[k], g[piv] = g[piv], g[k]
            for row in g:
                row[k], row[piv] = row[piv], row[k]
        d = g[k][k]
        dr = real_part(d)
        if coerce(ring, dr) != d:
            raise AssertionError("Hermitian diagonal entry must be real")
        for m in range(k + 1, n):
            if g[k][m]:
                add_multiple(m, k, -g[k][m] / dr)
        values.append(dr)
    cols = [Mat.column(ring, b) for b in basis]
    return cols, values


def signature(F: FormSpec) -> tuple[int, int]:
    """Sylvester signature (p, q) of a +1-Hermitian form.

    Over H the count is taken after the complex-block embedding and
    halved; over R and C the congruence diagonalization is direct.
    """
    if F.ring is Ring.H:
        FC = FormSpec(complexify(F.gram), "conj", 1)
        p2, q2 = signature(FC)
        if p2 % 2 or q2 % 2:
            raise AssertionError("embedded quaternionic signature must be even")
        return p2 // 2, q2 // 2
    _, values = _congruence_diagonalize(F)
    p = sum(1 for v in values if v > 0)
    q = sum(1 for v in values if v < 0)
    if p + q != F.n:
        raise ValueError("degenerate form has no signature")
    return p, q


def positive_subspace(F: FormSpec) -> Mat:
    """Columns spanning a fixed maximal positive-definite subspace of F."""
    cols, values = _congruence_diagonalize(F)
    pos = [c for c, v in zip(cols, values) if v > 0]
    if not pos:
        raise ValueError("form has no positive part")
    return hcat(pos)

def so_component_sign(g: Mat, F: FormSpec) -> int:
    """Identity-component detector for the orthogonal group of F over R.

    Project g onto a fixed maximal positive-definite subspace P and take
    the sign of the determinant of the resulting endomorphism of P; for g
    with det 1 the value is +1 exactly on the identity component.
    """
    if F.ring is not Ring.R or F.sigma != "id" or F.epsilon != 1:
        raise ValueError("component sign is defined for real symmetric forms")
    if not form_preserved(F, g):
        raise ValueError("matrix does not preserve the form")
    P = positive_subspace(F)
    m = P.transpose() @ F.gram @ g @ P
    d = _det_raw(m)
    if not d:
        raise AssertionError("projected block of an isometry cannot be singular")
    return 1 if d > 0 else -1


# -- exponential --------------------------------------------------------


def exp_nilpotent(X: Mat) -> Mat:
    """exp(X) as the exact finite sum, for nilpotent X."""
    if not X.is_square():
        raise ValueError("exp of non-square matrix")
    n = X.rows
    out = Mat.identity(X.ring, n)
    term = Mat.identity(X.ring, n)
    k = 0
    while True:
        term = term @ X
        k += 1
        if term.is_zero():
            return out
        if k > n:
            raise NotNilpotentError("matrix is not nilpotent")
        out = out + term.scale(rat(1, _factorial(k)))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out
