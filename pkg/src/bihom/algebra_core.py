"""BiHom-associative algebras: representation, axiom checking, and the
basic constructions (twists, untwisting, tensor products, conjugation
algebras, fixed subalgebras, the two 2-dimensional example families).

An algebra is stored by structure constants: e_i e_j = sum_k mu[i][j][k] e_k,
together with the two structure-map matrices alpha and beta and an optional
unit vector.  Axioms are never enforced at construction; check_bihom_algebra
verifies them exhaustively over basis tuples and reports witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import (
    DegenerateParameter,
    MapsDoNotCommute,
    NotClosed,
    NotMultiplicative,
    ShapeMismatch,
)
from .exactnum import Field
from .linalg import (
    Matrix,
    Tensor3,
    bilinear_apply,
    kron,
    mat_eq_witness,
    mat_inverse,
    mat_mul,
    solve_affine,
    kernel,
    unit_vec,
    vec_eq,
    vec_tensor,
    zero_vec,
)
from .report import CheckReport


def _default_labels(prefix, n):
    return [f"{prefix}{i}" for i in range(n)]


@dataclass
class BiHomAlgebra:
    field: Field
    dim: int
    mu: Tensor3
    alpha: Matrix
    beta: Matrix
    unit: Optional[list] = None
    labels: list = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = _default_labels("e", self.dim)
        d = self.dim
        if (self.mu.d1, self.mu.d2, self.mu.d3) != (d, d, d):
            raise ShapeMismatch("multiplication tensor shape")
        for m in (self.alpha, self.beta):
            if (m.rows, m.cols) != (d, d):
                raise ShapeMismatch("structure map shape")
        if self.unit is not None and len(self.unit) != d:
            raise ShapeMismatch("unit vector length")
        if len(self.labels) != d:
            raise ShapeMismatch("label count")

    @property
    def is_unital(self):
        return self.unit is not None

    def multiply(self, x, y):
        return bilinear_apply(self.mu, x, y)

    def same_tensors(self, other: "BiHomAlgebra") -> bool:
        """Exact structure-constant and structure-map equality."""
        units_equal = (self.unit is None) == (other.unit is None) and (
            self.unit is None or vec_eq(self.unit, other.unit)
        )
        return (
            self.dim == other.dim
            and self.mu == other.mu
            and self.alpha == other.alpha
            and self.beta == other.beta
            and units_equal
        )


@dataclass
class LeftModule:
    """A left module (M, alpha_M, beta_M) over a BiHom-associative algebra.

    action[i][j] is the coordinate vector of e_i . m_j.
    """

    dim: int
    action: Tensor3
    alphaM: Matrix
    betaM: Matrix

    def __post_init__(self):
        if (self.action.d2, self.action.d3) != (self.dim, self.dim):
            raise ShapeMismatch("module action tensor shape")
        for m in (self.alphaM, self.betaM):
            if (m.rows, m.cols) != (self.dim, self.dim):
                raise ShapeMismatch("module map shape")


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------


def _check_map_multiplicative(report, axiom, mu, m):
    """m(e_i e_j) = m(e_i) m(e_j) over all basis pairs."""
    d = mu.d1
    for i in range(d):
        for j in range(d):
            lhs = m.apply(mu.column(i, j))
            rhs = bilinear_apply(mu, m.column(i), m.column(j))
            if not vec_eq(lhs, rhs):
                report.add(axiom, False, ((i, j), lhs, rhs))
                return
    report.add(axiom, True)


def check_bihom_algebra(a: BiHomAlgebra) -> CheckReport:
    """Verify every BiHom-associative-algebra axiom over all basis tuples."""
    report = CheckReport()
    d = a.dim
    w = mat_eq_witness(mat_mul(a.alpha, a.beta), mat_mul(a.beta, a.alpha))
    report.add("alpha_beta_commute", w is None, w)
    _check_map_multiplicative(report, "alpha_multiplicative", a.mu, a.alpha)
    _check_map_multiplicative(report, "beta_multiplicative", a.mu, a.beta)

    ok = True
    for i in range(d):
        ai = a.alpha.column(i)
        for j in range(d):
            mij = a.mu.column(i, j)
            for k in range(d):
                lhs = bilinear_apply(a.mu, ai, a.mu.column(j, k))
                rhs = bilinear_apply(a.mu, mij, a.beta.column(k))
                if not vec_eq(lhs, rhs):
                    report.add("bihom_associativity", False, ((i, j, k), lhs, rhs))
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        report.add("bihom_associativity", True)

    if a.unit is not None:
        report.add_eq("unit_fixed_by_alpha", ("1",), a.alpha.apply(a.unit), a.unit)
        report.add_eq("unit_fixed_by_beta", ("1",), a.beta.apply(a.unit), a.unit)
        right_ok = left_ok = True
        for i in range(d):
            ei = unit_vec(a.field, d, i)
            lhs = a.multiply(ei, a.unit)
            rhs = a.alpha.column(i)
            if not vec_eq(lhs, rhs):
                report.add("unit_right_action", False, ((i,), lhs, rhs))
                right_ok = False
                break
        if right_ok:
            report.add("unit_right_action", True)
        for i in range(d):
            ei = unit_vec(a.field, d, i)
            lhs = a.multiply(a.unit, ei)
            rhs = a.beta.column(i)
            if not vec_eq(lhs, rhs):
                report.add("unit_left_action", False, ((i,), lhs, rhs))
                left_ok = False
                break
        if left_ok:
            report.add("unit_left_action", True)
    return report


def check_left_module(a: BiHomAlgebra, mod: LeftModule) -> CheckReport:
    """The left-module axioms over all basis pairs/triples."""
    report = CheckReport()
    if mod.action.d1 != a.dim:
        raise ShapeMismatch("module action first index != algebra dimension")
    w = mat_eq_witness(
        mat_mul(mod.alphaM, mod.betaM), mat_mul(mod.betaM, mod.alphaM)
    )
    report.add("module_maps_commute", w is None, w)

    act = mod.action
    for axiom, mapA, mapM in (
        ("action_alpha_equivariance", a.alpha, mod.alphaM),
        ("action_beta_equivariance", a.beta, mod.betaM),
    ):
        ok = True
        for i in range(a.dim):
            for j in range(mod.dim):
                lhs = mapM.apply(act.column(i, j))
                rhs = bilinear_apply(act, mapA.column(i), mapM.column(j))
                if not vec_eq(lhs, rhs):
                    report.add(axiom, False, ((i, j), lhs, rhs))
                    ok = False
                    break
            if not ok:
                break
        if ok:
            report.add(axiom, True)

    ok = True
    for i in range(a.dim):
        ai = a.alpha.column(i)
        for j in range(a.dim):
            mij = a.mu.column(i, j)
            for k in range(mod.dim):
                lhs = bilinear_apply(act, ai, act.column(j, k))
                rhs = bilinear_apply(act, mij, mod.betaM.column(k))
                if not vec_eq(lhs, rhs):
                    report.add("module_associativity", False, ((i, j, k), lhs, rhs))
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        report.add("module_associativity", True)

    if a.unit is not None:
        ok = True
        for k in range(mod.dim):
            mk = unit_vec(act.field, mod.dim, k)
            lhs = bilinear_apply(act, a.unit, mk)
            rhs = mod.betaM.column(k)
            if not vec_eq(lhs, rhs):
                report.add("unital_module", False, ((k,), lhs, rhs))
                ok = False
                break
        if ok:
            report.add("unital_module", True)
    return report


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def _require_multiplicative(mu, m, name):
    d = mu.d1
    for i in range(d):
        for j in range(d):
            lhs = m.apply(mu.column(i, j))
            rhs = bilinear_apply(mu, m.column(i), m.column(j))
            if not vec_eq(lhs, rhs):
                raise NotMultiplicative(
                    f"{name} is not multiplicative at basis pair ({i}, {j})",
                    witness=((i, j), lhs, rhs),
                )


def _require_pairwise_commuting(named_maps):
    items = list(named_maps)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            (n1, m1), (n2, m2) = items[i], items[j]
            w = mat_eq_witness(mat_mul(m1, m2), mat_mul(m2, m1))
            if w is not None:
                raise MapsDoNotCommute(f"{n1} and {n2} do not commute", witness=w)


def _carried_unit(unit, *maps):
    if unit is None:
        return None
    for m in maps:
        if not vec_eq(m.apply(unit), unit):
            return None
    return list(unit)


def yau_twist(a: BiHomAlgebra, alpha2: Matrix, beta2: Matrix) -> BiHomAlgebra:
    """Deform the product to mu o (alpha2 (x) beta2), composing the maps.

    alpha2 and beta2 must be multiplicative for mu and all four maps must
    pairwise commute; both preconditions are verified, not trusted.
    """
    _require_multiplicative(a.mu, alpha2, "alpha2")
    _require_multiplicative(a.mu, beta2, "beta2")
    _require_pairwise_commuting(
        [("alpha", a.alpha), ("beta", a.beta), ("alpha2", alpha2), ("beta2", beta2)]
    )
    mu2 = Tensor3.from_function(
        a.field,
        a.dim,
        a.dim,
        a.dim,
        lambda i, j: bilinear_apply(a.mu, alpha2.column(i), beta2.column(j)),
    )
    return BiHomAlgebra(
        field=a.field,
        dim=a.dim,
        mu=mu2,
        alpha=mat_mul(a.alpha, alpha2),
        beta=mat_mul(a.beta, beta2),
        unit=_carried_unit(a.unit, alpha2, beta2),
        labels=list(a.labels),
    )


def untwist(a: BiHomAlgebra) -> BiHomAlgebra:
    """Recover the underlying associative product mu o (alpha^-1 (x) beta^-1)."""
    ainv = mat_inverse(a.alpha)
    binv = mat_inverse(a.beta)
    mu2 = Tensor3.from_function(
        a.field,
        a.dim,
        a.dim,
        a.dim,
        lambda i, j: bilinear_apply(a.mu, ainv.column(i), binv.column(j)),
    )
    ident = Matrix.identity(a.field, a.dim)
    return BiHomAlgebra(
        field=a.field,
        dim=a.dim,
        mu=mu2,
        alpha=ident,
        beta=ident.copy(),
        unit=_carried_unit(a.unit, ainv, binv),
        labels=list(a.labels),
    )


def tensor_product(a: BiHomAlgebra, b: BiHomAlgebra) -> BiHomAlgebra:
    """(a (x) b)(a' (x) b') = aa' (x) bb' with maps alpha_A (x) alpha_B etc."""
    if a.field != b.field:
        from .errors import MixedFields

        raise MixedFields("tensor product across fields")
    da, db = a.dim, b.dim
    d = da * db

    def col(i, j):
        ia, ib = divmod(i, db)
        ja, jb = divmod(j, db)
        return vec_tensor(a.mu.column(ia, ja), b.mu.column(ib, jb), a.field)

    mu = Tensor3.from_function(a.field, d, d, d, col)
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = vec_tensor(a.unit, b.unit, a.field)
    labels = [f"{la}.{lb}" for la in a.labels for lb in b.labels]
    return BiHomAlgebra(
        field=a.field,
        dim=d,
        mu=mu,
        alpha=kron(a.alpha, b.alpha),
        beta=kron(a.beta, b.beta),
        unit=unit,
        labels=labels,
    )


def endomorphism_algebra(u: Matrix, v: Matrix) -> BiHomAlgebra:
    """The conjugation deformation E(u, v) of a full matrix algebra.

    On n x n matrices: a * b = u a u^-1 b v^-1 with structure maps
    conjugation by u and by v; the unit is v.  Requires invertible u, v
    with uv = vu.
    """
    if u.rows != u.cols or v.rows != v.cols or u.rows != v.rows:
        raise ShapeMismatch("u and v must be square of equal size")
    w = mat_eq_witness(mat_mul(u, v), mat_mul(v, u))
    if w is not None:
        raise MapsDoNotCommute("u and v do not commute", witness=w)
    field = u.field
    n = u.rows
    uinv = mat_inverse(u)
    vinv = mat_inverse(v)
    d = n * n

    def flat(i, j):
        return i * n + j

    # u E_ij u^-1 E_kl v^-1 has (r, c) entry u[r][i] * uinv[j][k] * vinv[l][c]
    def mu_col(p, q):
        i, j = divmod(p, n)
        k, l = divmod(q, n)
        out = zero_vec(field, d)
        f = uinv.e[j][k]
        if f:
            for r in range(n):
                ur = u.e[r][i]
                if not ur:
                    continue
                c0 = f * ur
                for c in range(n):
                    vc = vinv.e[l][c]
                    if vc:
                        out[flat(r, c)] = c0 * vc
        return out

    mu = Tensor3.from_function(field, d, d, d, mu_col)

    def conj_matrix(g, ginv):
        m = Matrix.zero(field, d, d)
        for k in range(n):
            for l in range(n):
                # g E_kl g^-1 has (r, c) entry g[r][k] * ginv[l][c]
                for r in range(n):
                    grk = g.e[r][k]
                    if not grk:
                        continue
                    for c in range(n):
                        glc = ginv.e[l][c]
                        if glc:
                            m.e[flat(r, c)][flat(k, l)] = grk * glc
        return m

    unit = [v.e[i][j] for i in range(n) for j in range(n)]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return BiHomAlgebra(
        field=field,
        dim=d,
        mu=mu,
        alpha=conj_matrix(u, uinv),
        beta=conj_matrix(v, vinv),
        unit=unit,
        labels=labels,
    )


def fixed_subalgebra(a: BiHomAlgebra) -> tuple:
    """The joint fixed subspace {x : alpha(x) = beta(x) = x} as an algebra.

    Returns (subalgebra, basis) where basis holds the coordinate vectors of
    the chosen subspace basis inside a.  The structure maps of the result
    are identities; raises NotClosed (with the offending pair) if the fixed
    subspace is not closed under the product.
    """
    field = a.field
    d = a.dim
    ident = Matrix.identity(field, d)
    stacked = Matrix.zero(field, 2 * d, d)
    for i in range(d):
        for j in range(d):
            stacked.e[i][j] = a.alpha.e[i][j] - ident.e[i][j]
            stacked.e[d + i][j] = a.beta.e[i][j] - ident.e[i][j]
    basis = kernel(stacked)
    r = len(basis)
    basis_matrix = Matrix.zero(field, d, r)
    for j, vec in enumerate(basis):
        for i in range(d):
            basis_matrix.e[i][j] = vec[i]

    def coords(w):
        res = solve_affine(basis_matrix, w)
        if res is None:
            return None
        x, null = res
        assert not null, "subspace basis is linearly dependent"
        return x

    mu_entries = []
    for s in range(r):
        plane = []
        for t in range(r):
            w = bilinear_apply(a.mu, basis[s], basis[t])
            x = coords(w)
            if x is None:
                raise NotClosed(
                    f"fixed subspace not closed at basis pair ({s}, {t})",
                    witness=((s, t), w),
                )
            plane.append(x)
        mu_entries.append(plane)
    mu = (
        Tensor3(field, mu_entries) if r else Tensor3.zero(field, 0, 0, 0)
    )
    unit = None
    if a.unit is not None:
        unit = coords(a.unit)
    sub = BiHomAlgebra(
        field=field,
        dim=r,
        mu=mu,
        alpha=Matrix.identity(field, r),
        beta=Matrix.identity(field, r),
        unit=unit,
        labels=_default_labels("w", r),
    )
    return sub, basis


def example_family(which: int, a, b, field=None) -> BiHomAlgebra:
    """The two 2-dimensional unital families with parameters a, b.

    Family 1 requires b != 1; family 2 requires a != 0.  The unit is e1.
    """
    if field is None:
        from .exactnum import QQ

        field = QQ
    a = field.promote(a)
    b = field.promote(b)
    one = field.one()
    zero = field.zero()
    if which == 1:
        if b == one:
            raise DegenerateParameter("family 1 needs b != 1")
        alpha_e2 = [(a + a) / (b - one), -one]
        beta_e2 = [-a, b]
        mu22 = [-(a * a * (b - one - one)) / ((b - one) * (b - one)), a]
        mu = Tensor3(
            field,
            [
                [[one, zero], beta_e2],
                [alpha_e2, mu22],
            ],
        )
    elif which == 2:
        if not a:
            raise DegenerateParameter("family 2 needs a != 0")
        alpha_e2 = [b * (one - a) / a, a]
        beta_e2 = [b, one - a]
        mu = Tensor3(
            field,
            [
                [[one, zero], beta_e2],
                [alpha_e2, [zero, b / a]],
            ],
        )
    else:
        raise ValueError("family index must be 1 or 2")
    alpha = Matrix(field, [[one, alpha_e2[0]], [zero, alpha_e2[1]]])
    beta = Matrix(field, [[one, beta_e2[0]], [zero, beta_e2[1]]])
    return BiHomAlgebra(
        field=field,
        dim=2,
        mu=mu,
        alpha=alpha,
        beta=beta,
        unit=[one, zero],
        labels=["e1", "e2"],
    )


def find_unit(a: BiHomAlgebra):
    """Solve the linear unit equations; None when no unit exists.

    The system encodes e_i u = alpha(e_i), u e_i = beta(e_i), alpha(u) = u,
    beta(u) = u; by uniqueness of units a consistent system has exactly one
    solution.
    """
    field = a.field
    d = a.dim
    rows = []
    rhs = []
    for i in range(d):
        for k in range(d):
            rows.append([a.mu.t[i][j][k] for j in range(d)])
            rhs.append(a.alpha.e[k][i])
    for i in range(d):
        for k in range(d):
            rows.append([a.mu.t[j][i][k] for j in range(d)])
            rhs.append(a.beta.e[k][i])
    ident = Matrix.identity(field, d)
    for m in (a.alpha, a.beta):
        for i in range(d):
            rows.append([m.e[i][j] - ident.e[i][j] for j in range(d)])
            rhs.append(field.zero())
    res = solve_affine(Matrix(field, rows), rhs)
    if res is None:
        return None
    x, null = res
    assert not null, "unit equations cannot be underdetermined"
    return x


# ---------------------------------------------------------------------------
# truncated polynomial fixtures (the k[X]/(X^N) test bed)
# ---------------------------------------------------------------------------


def truncated_polynomial_algebra(field, n: int) -> BiHomAlgebra:
    """k[X]/(X^n) with basis 1, X, ..., X^(n-1); high products truncate to 0."""
    zero = field.zero()
    one = field.one()

    def col(i, j):
        v = [zero] * n
        if i + j < n:
            v[i + j] = one
        return v

    mu = Tensor3.from_function(field, n, n, n, col)
    ident = Matrix.identity(field, n)
    unit = unit_vec(field, n, 0)
    labels = ["1"] + [f"X^{i}" if i > 1 else "X" for i in range(1, n)]
    return BiHomAlgebra(
        field=field, dim=n, mu=mu, alpha=ident, beta=ident.copy(), unit=unit,
        labels=labels,
    )


def monomial_substitution(field, n: int, power: int, scale=1) -> Matrix:
    """The linear map X^i -> scale^i X^(power*i) on k[X]/(X^n).

    For scale=1 this is the multiplicative substitution X -> X^power; the
    general form also covers maps like X^i -> c^i X^(3i).
    """
    m = Matrix.zero(field, n, n)
    c = field.one()
    s = field.promote(scale)
    for i in range(n):
        j = power * i
        if j < n:
            m.e[j][i] = c
        c = c * s
    return m
