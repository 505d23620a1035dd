"""Exact dense linear algebra over any supported field.

Matrices act on column vectors: column j of a matrix is the image of the
j-th basis vector.  Vectors are plain lists of scalars.  Row reduction is
exact Gauss-Jordan with first-nonzero pivoting; there are no magnitude
heuristics because the arithmetic is exact.
"""

from __future__ import annotations

from .errors import Inconsistent, MixedFields, NonUnique, ShapeMismatch, Singular
from .exactnum import Field

# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


def zero_vec(field, n):
    z = field.zero()
    return [z] * n


def unit_vec(field, n, i):
    v = zero_vec(field, n)
    v[i] = field.one()
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(v, c):
    return [c * x for x in v]


def vec_eq(u, v):
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))


def vec_is_zero(v):
    return not any(v)


def vec_tensor(u, v, field):
    """Kronecker product of two coordinate vectors."""
    z = field.zero()
    out = []
    for a in u:
        if a:
            out.extend(a * b for b in v)
        else:
            out.extend([z] * len(v))
    return out


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class Matrix:
    __slots__ = ("field", "rows", "cols", "e")

    def __init__(self, field: Field, entries):
        self.field = field
        self.e = [[field.promote(x) for x in row] for row in entries]
        self.rows = len(self.e)
        self.cols = len(self.e[0]) if self.e else 0
        for row in self.e:
            if len(row) != self.cols:
                raise ShapeMismatch("ragged matrix rows")

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(field, rows, cols):
        return Matrix(field, [[field.zero()] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, n):
        m = Matrix.zero(field, n, n)
        one = field.one()
        for i in range(n):
            m.e[i][i] = one
        return m

    @staticmethod
    def from_columns(field, columns):
        rows = len(columns[0]) if columns else 0
        return Matrix(field, [[columns[j][i] for j in range(len(columns))] for i in range(rows)])

    @staticmethod
    def diagonal(field, diag):
        m = Matrix.zero(field, len(diag), len(diag))
        for i, d in enumerate(diag):
            m.e[i][i] = field.promote(d)
        return m

    def copy(self):
        out = Matrix.__new__(Matrix)
        out.field = self.field
        out.rows, out.cols = self.rows, self.cols
        out.e = [row[:] for row in self.e]
        return out

    # -- queries ---------------------------------------------------------

    def column(self, j):
        return [self.e[i][j] for i in range(self.rows)]

    def transpose(self):
        out = Matrix.__new__(Matrix)
        out.field = self.field
        out.rows, out.cols = self.cols, self.rows
        out.e = [[self.e[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return out

    def is_identity(self):
        if self.rows != self.cols:
            return False
        one = self.field.one()
        for i in range(self.rows):
            for j in range(self.cols):
                want = one if i == j else None
                x = self.e[i][j]
                if want is None:
                    if x:
                        return False
                elif x != want:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.e[i][j] == other.e[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.e)
        return f"Matrix[{self.rows}x{self.cols}]({body})"

    # -- application ------------------------------------------------------

    def apply(self, v):
        """Matrix times column vector, skipping zero coordinates of v."""
        if len(v) != self.cols:
            raise ShapeMismatch(f"{self.rows}x{self.cols} applied to len-{len(v)}")
        out = zero_vec(self.field, self.rows)
        e = self.e
        for j, x in enumerate(v):
            if x:
                for i in range(self.rows):
                    y = e[i][j]
                    if y:
                        out[i] = out[i] + y * x
        return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise MixedFields("matrix product across fields")
    if a.cols != b.rows:
        raise ShapeMismatch(f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = Matrix.zero(a.field, a.rows, b.cols)
    oe, ae, be = out.e, a.e, b.e
    for i in range(a.rows):
        arow = ae[i]
        orow = oe[i]
        for k in range(a.cols):
            x = arow[k]
            if x:
                brow = be[k]
                for j in range(b.cols):
                    y = brow[j]
                    if y:
                        orow[j] = orow[j] + x * y
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeMismatch("matrix sum shape")
    out = a.copy()
    for i in range(a.rows):
        for j in range(a.cols):
            out.e[i][j] = out.e[i][j] + b.e[i][j]
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeMismatch("matrix difference shape")
    out = a.copy()
    for i in range(a.rows):
        for j in range(a.cols):
            out.e[i][j] = out.e[i][j] - b.e[i][j]
    return out


def mat_eq_witness(a: Matrix, b: Matrix):
    """None if equal, else ((i, j), a_ij, b_ij) at the first mismatch."""
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeMismatch("comparing matrices of different shapes")
    for i in range(a.rows):
        for j in range(a.cols):
            if a.e[i][j] != b.e[i][j]:
                return ((i, j), a.e[i][j], b.e[i][j])
    return None


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; acts on flattened u (x) v with index i*b.rows + k."""
    if a.field != b.field:
        raise MixedFields("kron across fields")
    field = a.field
    z = field.zero()
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = Matrix.zero(field, rows, cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.e[i][j]
            if not x:
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    y = b.e[k][l]
                    if y:
                        out.e[i * b.rows + k][j * b.cols + l] = x * y
    return out


# ---------------------------------------------------------------------------
# row reduction, solving, kernels, inverses
# ---------------------------------------------------------------------------


def _rref(rows, ncols):
    """In-place reduced row echelon form.  Returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv_row = rows[r]
            rows[r] = [x / pv for x in inv_row]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [ri[j] - f * rr[j] for j in range(len(ri))]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(a: Matrix) -> int:
    rows = [row[:] for row in a.e]
    return len(_rref(rows, a.cols))


def kernel(a: Matrix):
    """Basis of the right kernel; each vector satisfies A v = 0 exactly."""
    field = a.field
    rows = [row[:] for row in a.e]
    pivots = _rref(rows, a.cols)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = zero_vec(field, a.cols)
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve_affine(a: Matrix, b):
    """Solve A x = b.  Returns (particular, kernel_basis) or None."""
    if len(b) != a.rows:
        raise ShapeMismatch("rhs length != row count")
    field = a.field
    rows = [a.e[i][:] + [field.promote(b[i])] for i in range(a.rows)]
    pivots = _rref(rows, a.cols)
    for i in range(len(pivots), a.rows):
        if rows[i][a.cols]:
            return None
    x = zero_vec(field, a.cols)
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][a.cols]
    return x, kernel(a)


def solve_unique(a: Matrix, b):
    """Solve A x = b when the solution must be unique."""
    res = solve_affine(a, b)
    if res is None:
        raise Inconsistent("linear system has no solution")
    x, null = res
    if null:
        raise NonUnique(f"solution space has dimension {len(null)}")
    return x


def solve_linear(a: Matrix, b=None):
    """Spec surface: kernel basis when b is None, else the affine solution.

    Returns kernel(a) for b=None; otherwise (particular, kernel_basis),
    raising Inconsistent when the system has no solution.
    """
    if b is None:
        return kernel(a)
    res = solve_affine(a, b)
    if res is None:
        raise Inconsistent("linear system has no solution")
    return res


def mat_inverse(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ShapeMismatch("inverting a non-square matrix")
    field = a.field
    n = a.rows
    rows = [a.e[i][:] + Matrix.identity(field, n).e[i] for i in range(n)]
    pivots = _rref(rows, n)
    if len(pivots) < n:
        raise Singular(f"matrix has rank {len(pivots)} < {n}", rank=len(pivots))
    inv = Matrix.zero(field, n, n)
    for i in range(n):
        inv.e[i] = rows[i][n:]
    return inv


class MatrixPowers:
    """Integer powers of a fixed square matrix with memoization.

    Negative powers invert once and reuse; M**0 is the identity.
    """

    def __init__(self, m: Matrix):
        self.m = m
        self._cache = {0: Matrix.identity(m.field, m.rows), 1: m}
        self._inv = None

    def __call__(self, k: int) -> Matrix:
        if k in self._cache:
            return self._cache[k]
        if k > 0:
            self._cache[k] = mat_mul(self(k - 1), self.m)
        else:
            if self._inv is None:
                self._inv = mat_inverse(self.m)
                self._cache[-1] = self._inv
            if k not in self._cache:
                self._cache[k] = mat_mul(self(k + 1), self._inv)
        return self._cache[k]


def commute(a: Matrix, b: Matrix) -> bool:
    return mat_eq_witness(mat_mul(a, b), mat_mul(b, a)) is None


# ---------------------------------------------------------------------------
# rank-3 tensors (structure constants)
# ---------------------------------------------------------------------------


class Tensor3:
    """Dense rank-3 tensor t[i][j][k].

    For a multiplication, t[i][j] is the coordinate vector of e_i * e_j;
    for a comultiplication, t[i] is the matrix of coefficients of
    Delta(e_i) = sum_{j,k} t[i][j][k] e_j (x) e_k.
    """

    __slots__ = ("field", "d1", "d2", "d3", "t")

    def __init__(self, field, entries):
        self.field = field
        self.t = [
            [[field.promote(x) for x in vec] for vec in plane] for plane in entries
        ]
        self.d1 = len(self.t)
        self.d2 = len(self.t[0]) if self.d1 else 0
        self.d3 = len(self.t[0][0]) if self.d1 and self.d2 else 0
        for plane in self.t:
            if len(plane) != self.d2:
                raise ShapeMismatch("ragged tensor")
            for vec in plane:
                if len(vec) != self.d3:
                    raise ShapeMismatch("ragged tensor")

    @staticmethod
    def zero(field, d1, d2, d3):
        z = field.zero()
        out = Tensor3.__new__(Tensor3)
        out.field = field
        out.d1, out.d2, out.d3 = d1, d2, d3
        out.t = [[[z] * d3 for _ in range(d2)] for _ in range(d1)]
        return out

    @staticmethod
    def from_function(field, d1, d2, d3, f):
        """f(i, j) must return the length-d3 coordinate vector t[i][j]."""
        out = Tensor3.zero(field, d1, d2, d3)
        for i in range(d1):
            for j in range(d2):
                v = f(i, j)
                if len(v) != d3:
                    raise ShapeMismatch("tensor column of wrong length")
                out.t[i][j] = [field.promote(x) for x in v]
        return out

    def column(self, i, j):
        return self.t[i][j]

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return (
            self.field == other.field
            and (self.d1, self.d2, self.d3) == (other.d1, other.d2, other.d3)
            and all(
                self.t[i][j][k] == other.t[i][j][k]
                for i in range(self.d1)
                for j in range(self.d2)
                for k in range(self.d3)
            )
        )

    def __hash__(self):
        return hash((self.d1, self.d2, self.d3))

    def __repr__(self):
        return f"Tensor3[{self.d1}x{self.d2}x{self.d3}]"


def bilinear_apply(mu: Tensor3, x, y):
    """Evaluate the bilinear map with structure constants mu on (x, y)."""
    if len(x) != mu.d1 or len(y) != mu.d2:
        raise ShapeMismatch(
            f"bilinear map {mu.d1}x{mu.d2} applied to ({len(x)}, {len(y)})"
        )
    out = zero_vec(mu.field, mu.d3)
    for i, xi in enumerate(x):
        if not xi:
            continue
        plane = mu.t[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            col = plane[j]
            for k in range(mu.d3):
                z = col[k]
                if z:
                    out[k] = out[k] + c * z
    return out


def tensor_as_matrix(mu: Tensor3) -> Matrix:
    """The d3 x (d1*d2) matrix of the induced linear map on the tensor square."""
    out = Matrix.zero(mu.field, mu.d3, mu.d1 * mu.d2)
    for i in range(mu.d1):
        for j in range(mu.d2):
            col = mu.t[i][j]
            for k in range(mu.d3):
                if col[k]:
                    out.e[k][i * mu.d2 + j] = col[k]
    return out


def matrix_as_tensor(field, m: Matrix, d1, d2) -> Tensor3:
    """Inverse of tensor_as_matrix for a d3 x (d1*d2) matrix."""
    if m.cols != d1 * d2:
        raise ShapeMismatch("matrix columns != d1*d2")
    out = Tensor3.zero(field, d1, d2, m.rows)
    for i in range(d1):
        for j in range(d2):
            out.t[i][j] = m.column(i * d2 + j)
    return out
