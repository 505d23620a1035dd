"""BiHom-Lie algebras, their representations, semidirect products, and the
commutator construction on BiHom-associative algebras.

A representation stores one matrix per basis element of L as a rank-3
tensor rho with rho[x][j] the coordinates of rho(e_x)(m_j), uniform with
module actions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra_core import (
    BiHomAlgebra,
    LeftModule,
    check_left_module,
    _default_labels,
    _require_pairwise_commuting,
)
from .errors import ModuleAxiomFailure, NotMultiplicative, ShapeMismatch
from .exactnum import Field
from .linalg import (
    Matrix,
    Tensor3,
    bilinear_apply,
    mat_eq_witness,
    mat_inverse,
    mat_mul,
    unit_vec,
    vec_eq,
    vec_sub,
    zero_vec,
)
from .report import CheckReport


@dataclass
class BiHomLieAlgebra:
    field: Field
    dim: int
    bracket: Tensor3
    alpha: Matrix
    beta: Matrix
    labels: list = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = _default_labels("x", self.dim)
        d = self.dim
        if (self.bracket.d1, self.bracket.d2, self.bracket.d3) != (d, d, d):
            raise ShapeMismatch("bracket tensor shape")
        for m in (self.alpha, self.beta):
            if (m.rows, m.cols) != (d, d):
                raise ShapeMismatch("structure map shape")

    def br(self, x, y):
        return bilinear_apply(self.bracket, x, y)

    def same_tensors(self, other: "BiHomLieAlgebra") -> bool:
        return (
            self.dim == other.dim
            and self.bracket == other.bracket
            and self.alpha == other.alpha
            and self.beta == other.beta
        )


@dataclass
class LieRepresentation:
    dim: int  # dimension of the target space M
    rho: Tensor3  # rho[x][j] = coordinates of rho(e_x)(m_j)
    alphaM: Matrix
    betaM: Matrix

    def __post_init__(self):
        if (self.rho.d2, self.rho.d3) != (self.dim, self.dim):
            raise ShapeMismatch("representation tensor shape")
        for m in (self.alphaM, self.betaM):
            if (m.rows, m.cols) != (self.dim, self.dim):
                raise ShapeMismatch("representation map shape")

    def matrix_of(self, x) -> Matrix:
        """The endomorphism rho(x) for a coordinate vector x in L."""
        out = Matrix.zero(self.rho.field, self.dim, self.dim)
        for g, c in enumerate(x):
            if not c:
                continue
            plane = self.rho.t[g]
            for j in range(self.dim):
                col = plane[j]
                for i in range(self.dim):
                    if col[i]:
                        out.e[i][j] = out.e[i][j] + c * col[i]
        return out


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------


def check_bihom_lie(L: BiHomLieAlgebra) -> CheckReport:
    """All five axiom families, exhaustively over basis tuples."""
    report = CheckReport()
    d = L.dim
    w = mat_eq_witness(mat_mul(L.alpha, L.beta), mat_mul(L.beta, L.alpha))
    report.add("alpha_beta_commute", w is None, w)

    for axiom, m in (
        ("alpha_bracket_multiplicative", L.alpha),
        ("beta_bracket_multiplicative", L.beta),
    ):
        ok = True
        for i in range(d):
            for j in range(d):
                lhs = m.apply(L.bracket.column(i, j))
                rhs = bilinear_apply(L.bracket, m.column(i), m.column(j))
                if not vec_eq(lhs, rhs):
                    report.add(axiom, False, ((i, j), lhs, rhs))
                    ok = False
                    break
            if not ok:
                break
        if ok:
            report.add(axiom, True)

    # skew-symmetry in the twisted form: [beta(a), alpha(b)] = -[beta(b), alpha(a)]
    ok = True
    for i in range(d):
        for j in range(d):
            lhs = L.br(L.beta.column(i), L.alpha.column(j))
            rhs = [-x for x in L.br(L.beta.column(j), L.alpha.column(i))]
            if not vec_eq(lhs, rhs):
                report.add("skew_symmetry", False, ((i, j), lhs, rhs))
                ok = False
                break
        if not ok:
            break
    if ok:
        report.add("skew_symmetry", True)

    beta2 = mat_mul(L.beta, L.beta)
    ok = True
    for i in range(d):
        for j in range(d):
            for k in range(d):
                triples = ((i, j, k), (j, k, i), (k, i, j))
                total = zero_vec(L.field, d)
                for (x, y, z) in triples:
                    inner = L.br(L.beta.column(y), L.alpha.column(z))
                    term = L.br(beta2.column(x), inner)
                    total = [a + b for a, b in zip(total, term)]
                if any(total):
                    report.add(
                        "bihom_jacobi", False, ((i, j, k), total, zero_vec(L.field, d))
                    )
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        report.add("bihom_jacobi", True)
    return report


def check_representation(L: BiHomLieAlgebra, rep: LieRepresentation) -> CheckReport:
    """The three representation equations plus map commutation."""
    report = CheckReport()
    if rep.rho.d1 != L.dim:
        raise ShapeMismatch("representation tensor first index != dim L")
    w = mat_eq_witness(
        mat_mul(rep.alphaM, rep.betaM), mat_mul(rep.betaM, rep.alphaM)
    )
    report.add("rep_maps_commute", w is None, w)

    rho_of = rep.matrix_of
    d = L.dim
    for axiom, mapL, mapM in (
        ("rep_alpha_equivariance", L.alpha, rep.alphaM),
        ("rep_beta_equivariance", L.beta, rep.betaM),
    ):
        ok = True
        for x in range(d):
            lhs = mat_mul(rho_of(mapL.column(x)), mapM)
            rhs = mat_mul(mapM, rho_of(unit_vec(L.field, d, x)))
            wtn = mat_eq_witness(lhs, rhs)
            if wtn is not None:
                report.add(axiom, False, ((x,) + wtn[0], wtn[1], wtn[2]))
                ok = False
                break
        if ok:
            report.add(axiom, True)

    ok = True
    alphabeta = mat_mul(L.alpha, L.beta)
    for x in range(d):
        bx = L.beta.column(x)
        rho_ab_x = rho_of(alphabeta.column(x))
        rho_a_x = rho_of(L.alpha.column(x))
        for y in range(d):
            ey = unit_vec(L.field, d, y)
            lhs = mat_mul(rho_of(L.br(bx, ey)), rep.betaM)
            rhs_m = mat_mul(rho_ab_x, rho_of(ey))
            rhs_s = mat_mul(rho_of(L.beta.column(y)), rho_a_x)
            rhs = Matrix(
                L.field,
                [
                    [rhs_m.e[i][j] - rhs_s.e[i][j] for j in range(rep.dim)]
                    for i in range(rep.dim)
                ],
            )
            wtn = mat_eq_witness(lhs, rhs)
            if wtn is not None:
                report.add("rep_bracket_equation", False, ((x, y) + wtn[0], wtn[1], wtn[2]))
                ok = False
                break
        if not ok:
            break
    if ok:
        report.add("rep_bracket_equation", True)
    return report


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def commutator_lie(a: BiHomAlgebra) -> BiHomLieAlgebra:
    """L(A): [x, y] = xy - (alpha^-1 beta)(y) (alpha beta^-1)(x)."""
    ainv = mat_inverse(a.alpha)
    binv = mat_inverse(a.beta)
    p = mat_mul(ainv, a.beta)  # alpha^-1 beta
    q = mat_mul(a.alpha, binv)  # alpha beta^-1

    def col(i, j):
        first = a.mu.column(i, j)
        second = bilinear_apply(a.mu, p.column(j), q.column(i))
        return vec_sub(first, second)

    bracket = Tensor3.from_function(a.field, a.dim, a.dim, a.dim, col)
    return BiHomLieAlgebra(
        field=a.field,
        dim=a.dim,
        bracket=bracket,
        alpha=a.alpha.copy(),
        beta=a.beta.copy(),
        labels=list(a.labels),
    )


def _require_bracket_multiplicative(bracket, m, name):
    d = bracket.d1
    for i in range(d):
        for j in range(d):
            lhs = m.apply(bracket.column(i, j))
            rhs = bilinear_apply(bracket, m.column(i), m.column(j))
            if not vec_eq(lhs, rhs):
                raise NotMultiplicative(
                    f"{name} does not preserve the bracket at ({i}, {j})",
                    witness=((i, j), lhs, rhs),
                )


def yau_twist_lie(L: BiHomLieAlgebra, alpha2: Matrix, beta2: Matrix) -> BiHomLieAlgebra:
    """Deform the bracket to [-] o (alpha2 (x) beta2), composing the maps."""
    _require_bracket_multiplicative(L.bracket, alpha2, "alpha2")
    _require_bracket_multiplicative(L.bracket, beta2, "beta2")
    _require_pairwise_commuting(
        [("alpha", L.alpha), ("beta", L.beta), ("alpha2", alpha2), ("beta2", beta2)]
    )
    bracket = Tensor3.from_function(
        L.field,
        L.dim,
        L.dim,
        L.dim,
        lambda i, j: bilinear_apply(L.bracket, alpha2.column(i), beta2.column(j)),
    )
    return BiHomLieAlgebra(
        field=L.field,
        dim=L.dim,
        bracket=bracket,
        alpha=mat_mul(L.alpha, alpha2),
        beta=mat_mul(L.beta, beta2),
        labels=list(L.labels),
    )


def adjoint_rep(L: BiHomLieAlgebra) -> LieRepresentation:
    """ad(x)(y) = [x, y]; a representation when alpha, beta are bijective."""
    mat_inverse(L.alpha)  # raises Singular when not bijective
    mat_inverse(L.beta)
    return LieRepresentation(
        dim=L.dim, rho=L.bracket, alphaM=L.alpha.copy(), betaM=L.beta.copy()
    )


def semidirect_product(L: BiHomLieAlgebra, rep: LieRepresentation) -> BiHomLieAlgebra:
    """L x| M with [(x,a),(y,b)] = ([x,y], x.b - (a^-1 b)(y).(aM bM^-1)(a)).

    Requires alpha (on L) and beta_M (on M) invertible.
    """
    field = L.field
    n, m = L.dim, rep.dim
    p = mat_mul(mat_inverse(L.alpha), L.beta)  # alpha^-1 beta on L
    q = mat_mul(rep.alphaM, mat_inverse(rep.betaM))  # alpha_M beta_M^-1 on M
    d = n + m

    def act(xvec, avec):
        return bilinear_apply(rep.rho, xvec, avec)

    def col(i, j):
        out = zero_vec(field, d)
        if i < n and j < n:
            br = L.bracket.column(i, j)
            for k in range(n):
                out[k] = br[k]
        elif i < n and j >= n:
            b = unit_vec(field, m, j - n)
            v = act(unit_vec(field, n, i), b)
            for k in range(m):
                out[n + k] = v[k]
        elif i >= n and j < n:
            avec = q.column(i - n)
            v = act(p.column(j), avec)
            for k in range(m):
                out[n + k] = -v[k]
        return out

    bracket = Tensor3.from_function(field, d, d, d, col)

    def direct_sum(m1, m2):
        out = Matrix.zero(field, d, d)
        for i in range(n):
            for j in range(n):
                out.e[i][j] = m1.e[i][j]
        for i in range(m):
            for j in range(m):
                out.e[n + i][n + j] = m2.e[i][j]
        return out

    labels = list(L.labels) + [f"m{i}" for i in range(m)]
    return BiHomLieAlgebra(
        field=field,
        dim=d,
        bracket=bracket,
        alpha=direct_sum(L.alpha, rep.alphaM),
        beta=direct_sum(L.beta, rep.betaM),
        labels=labels,
    )


def module_to_lie_rep(a: BiHomAlgebra, mod: LeftModule) -> LieRepresentation:
    """A left A-module as a representation of L(A) via rho(x)(m) = x.m."""
    mat_inverse(a.alpha)
    mat_inverse(a.beta)
    rep_check = check_left_module(a, mod)
    if not rep_check.ok:
        raise ModuleAxiomFailure(
            "module axioms fail; first failure "
            f"{rep_check.failures()[0].axiom}",
            report=rep_check,
        )
    return LieRepresentation(
        dim=mod.dim, rho=mod.action, alphaM=mod.alphaM.copy(), betaM=mod.betaM.copy()
    )
