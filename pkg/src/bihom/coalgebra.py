"""BiHom-coassociative coalgebras, comodules, finite-dimensional duality in
both directions, and convolution algebras.

Comultiplications are stored as rank-3 tensors: Delta(e_i) has coefficient
delta[i][j][k] on e_j (x) e_k.  Tensor-square and tensor-cube elements are
flattened row-major: (j, k) -> j*d + k.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra_core import (
    BiHomAlgebra,
    _default_labels,
    _require_pairwise_commuting,
    fixed_subalgebra,
)
from .errors import (
    ConditionFailure,
    MixedFields,
    NotComultiplicative,
    ShapeMismatch,
)
from .exactnum import Field
from .linalg import (
    Matrix,
    Tensor3,
    kron,
    mat_eq_witness,
    mat_mul,
    vec_eq,
    vec_tensor,
    zero_vec,
)
from .report import CheckReport


@dataclass
class BiHomCoalgebra:
    field: Field
    dim: int
    delta: Tensor3
    psi: Matrix
    omega: Matrix
    counit: Optional[list] = None
    labels: list = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = _default_labels("c", self.dim)
        d = self.dim
        if (self.delta.d1, self.delta.d2, self.delta.d3) != (d, d, d):
            raise ShapeMismatch("comultiplication tensor shape")
        for m in (self.psi, self.omega):
            if (m.rows, m.cols) != (d, d):
                raise ShapeMismatch("structure map shape")
        if self.counit is not None and len(self.counit) != d:
            raise ShapeMismatch("counit covector length")

    @property
    def is_counital(self):
        return self.counit is not None

    def coproduct(self, v):
        """Delta(v) as a flattened d*d vector."""
        d = self.dim
        out = zero_vec(self.field, d * d)
        for i, c in enumerate(v):
            if not c:
                continue
            plane = self.delta.t[i]
            for j in range(d):
                row = plane[j]
                for k in range(d):
                    if row[k]:
                        out[j * d + k] = out[j * d + k] + c * row[k]
        return out

    def same_tensors(self, other: "BiHomCoalgebra") -> bool:
        counits_equal = (self.counit is None) == (other.counit is None) and (
            self.counit is None or vec_eq(self.counit, other.counit)
        )
        return (
            self.dim == other.dim
            and self.delta == other.delta
            and self.psi == other.psi
            and self.omega == other.omega
            and counits_equal
        )


@dataclass
class Comodule:
    """A right C-comodule: coaction rho(m_i) = sum rho[i][j][k] m_j (x) c_k."""

    dim: int
    rho: Tensor3
    psiM: Matrix
    omegaM: Matrix

    def __post_init__(self):
        if self.rho.d1 != self.dim or self.rho.d2 != self.dim:
            raise ShapeMismatch("coaction tensor shape")
        for m in (self.psiM, self.omegaM):
            if (m.rows, m.cols) != (self.dim, self.dim):
                raise ShapeMismatch("comodule map shape")


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------


def _pairs(plane, d=None):
    """Nonzero (j, k, coeff) triples of a coefficient plane.

    Iterates the actual (possibly rectangular) shape; the second argument
    is accepted for call-site symmetry and ignored.
    """
    out = []
    for j, row in enumerate(plane):
        for k, x in enumerate(row):
            if x:
                out.append((j, k, x))
    return out


def _check_comultiplicative(report, axiom, C: BiHomCoalgebra, m: Matrix):
    """(m (x) m) o Delta = Delta o m, checked per basis element."""
    d = C.dim
    for i in range(d):
        lhs = zero_vec(C.field, d * d)
        for (j, k, c) in _pairs(C.delta.t[i], d):
            mj = m.column(j)
            mk = m.column(k)
            for p in range(d):
                if mj[p]:
                    cp = c * mj[p]
                    for r in range(d):
                        if mk[r]:
                            lhs[p * d + r] = lhs[p * d + r] + cp * mk[r]
        rhs = C.coproduct(m.column(i))
        if not vec_eq(lhs, rhs):
            report.add(axiom, False, ((i,), lhs, rhs))
            return
    report.add(axiom, True)


def check_bihom_coalgebra(C: BiHomCoalgebra) -> CheckReport:
    report = CheckReport()
    d = C.dim
    w = mat_eq_witness(mat_mul(C.psi, C.omega), mat_mul(C.omega, C.psi))
    report.add("psi_omega_commute", w is None, w)
    _check_comultiplicative(report, "psi_comultiplicative", C, C.psi)
    _check_comultiplicative(report, "omega_comultiplicative", C, C.omega)

    # (Delta (x) psi) o Delta = (omega (x) Delta) o Delta on each basis element
    ok = True
    for i in range(d):
        lhs = zero_vec(C.field, d * d * d)
        rhs = zero_vec(C.field, d * d * d)
        for (j, k, c) in _pairs(C.delta.t[i], d):
            psik = C.psi.column(k)
            for (p, r, c2) in _pairs(C.delta.t[j], d):
                cc = c * c2
                for s in range(d):
                    if psik[s]:
                        idx = (p * d + r) * d + s
                        lhs[idx] = lhs[idx] + cc * psik[s]
            omj = C.omega.column(j)
            for p in range(d):
                if omj[p]:
                    cp = c * omj[p]
                    for (r, s, c3) in _pairs(C.delta.t[k], d):
                        idx = (p * d + r) * d + s
                        rhs[idx] = rhs[idx] + cp * c3
        if not vec_eq(lhs, rhs):
            report.add("bihom_coassociativity", False, ((i,), lhs, rhs))
            ok = False
            break
    if ok:
        report.add("bihom_coassociativity", True)

    if C.counit is not None:
        eps = C.counit
        for axiom, m in (("counit_psi", C.psi), ("counit_omega", C.omega)):
            composed = [
                sum((eps[j] * m.e[j][i] for j in range(d) if m.e[j][i]), C.field.zero())
                for i in range(d)
            ]
            report.add_eq(axiom, ("eps",), composed, list(eps))
        left_ok = right_ok = True
        for i in range(d):
            id_eps = zero_vec(C.field, d)
            eps_id = zero_vec(C.field, d)
            for (j, k, c) in _pairs(C.delta.t[i], d):
                if eps[k]:
                    id_eps[j] = id_eps[j] + c * eps[k]
                if eps[j]:
                    eps_id[k] = eps_id[k] + c * eps[j]
            if right_ok and not vec_eq(id_eps, C.omega.column(i)):
                report.add(
                    "counit_right", False, ((i,), id_eps, C.omega.column(i))
                )
                right_ok = False
            if left_ok and not vec_eq(eps_id, C.psi.column(i)):
                report.add("counit_left", False, ((i,), eps_id, C.psi.column(i)))
                left_ok = False
        if right_ok:
            report.add("counit_right", True)
        if left_ok:
            report.add("counit_left", True)
    return report


def check_comodule(C: BiHomCoalgebra, M: Comodule) -> CheckReport:
    report = CheckReport()
    if M.rho.d3 != C.dim:
        raise ShapeMismatch("coaction target coalgebra dimension")
    dm, dc = M.dim, C.dim
    w = mat_eq_witness(mat_mul(M.psiM, M.omegaM), mat_mul(M.omegaM, M.psiM))
    report.add("comodule_maps_commute", w is None, w)

    for axiom, mm, mc in (
        ("coaction_psi_equivariance", M.psiM, C.psi),
        ("coaction_omega_equivariance", M.omegaM, C.omega),
    ):
        ok = True
        for i in range(dm):
            lhs = zero_vec(C.field, dm * dc)
            for (j, k, c) in _pairs(M.rho.t[i], dc):
                mj = mm.column(j)
                mk = mc.column(k)
                for p in range(dm):
                    if mj[p]:
                        cp = c * mj[p]
                        for r in range(dc):
                            if mk[r]:
                                lhs[p * dc + r] = lhs[p * dc + r] + cp * mk[r]
            rhs = zero_vec(C.field, dm * dc)
            for p, cp in enumerate(mm.column(i)):
                if cp:
                    for (j, k, c) in _pairs(M.rho.t[p], dc):
                        rhs[j * dc + k] = rhs[j * dc + k] + cp * c
            if not vec_eq(lhs, rhs):
                report.add(axiom, False, ((i,), lhs, rhs))
                ok = False
                break
        if ok:
            report.add(axiom, True)

    # (omega_M (x) Delta_C) o rho = (rho (x) psi_C) o rho
    ok = True
    for i in range(dm):
        lhs = zero_vec(C.field, dm * dc * dc)
        rhs = zero_vec(C.field, dm * dc * dc)
        for (j, k, c) in _pairs(M.rho.t[i], dc):
            omj = M.omegaM.column(j)
            for p in range(dm):
                if omj[p]:
                    cp = c * omj[p]
                    for (r, s, c2) in _pairs(C.delta.t[k], dc):
                        idx = (p * dc + r) * dc + s
                        lhs[idx] = lhs[idx] + cp * c2
            psik = C.psi.column(k)
            for (p, r, c2) in _pairs(M.rho.t[j], dc):
                cc = c * c2
                for s in range(dc):
                    if psik[s]:
                        idx = (p * dc + r) * dc + s
                        rhs[idx] = rhs[idx] + cc * psik[s]
        if not vec_eq(lhs, rhs):
            report.add("comodule_coassociativity", False, ((i,), lhs, rhs))
            ok = False
            break
    if ok:
        report.add("comodule_coassociativity", True)

    if C.counit is not None:
        eps = C.counit
        ok = True
        for i in range(dm):
            lhs = zero_vec(C.field, dm)
            for (j, k, c) in _pairs(M.rho.t[i], dc):
                if eps[k]:
                    lhs[j] = lhs[j] + c * eps[k]
            if not vec_eq(lhs, M.omegaM.column(i)):
                report.add("comodule_counital", False, ((i,), lhs, M.omegaM.column(i)))
                ok = False
                break
        if ok:
            report.add("comodule_counital", True)
    return report


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def _require_comultiplicative(C: BiHomCoalgebra, m: Matrix, name):
    probe = CheckReport()
    _check_comultiplicative(probe, "x", C, m)
    if not probe.ok:
        raise NotComultiplicative(
            f"{name} is not comultiplicative", witness=probe.failures()[0].witness
        )


def yau_twist_coalgebra(
    C: BiHomCoalgebra, psi2: Matrix, omega2: Matrix
) -> BiHomCoalgebra:
    """Deform the coproduct to (omega2 (x) psi2) o Delta, composing the maps.

    The counit is carried over whenever it is invariant under both twisting
    maps (always the case for counital coalgebra endomorphisms).
    """
    _require_comultiplicative(C, psi2, "psi2")
    _require_comultiplicative(C, omega2, "omega2")
    _require_pairwise_commuting(
        [("psi", C.psi), ("omega", C.omega), ("psi2", psi2), ("omega2", omega2)]
    )
    d = C.dim

    def col(i):
        out = [[C.field.zero()] * d for _ in range(d)]
        for (j, k, c) in _pairs(C.delta.t[i], d):
            oj = omega2.column(j)
            pk = psi2.column(k)
            for p in range(d):
                if oj[p]:
                    cp = c * oj[p]
                    for r in range(d):
                        if pk[r]:
                            out[p][r] = out[p][r] + cp * pk[r]
        return out

    delta2 = Tensor3(C.field, [col(i) for i in range(d)])
    counit = None
    if C.counit is not None:
        eps = C.counit
        keeps = True
        for m in (psi2, omega2):
            comp = [
                sum((eps[j] * m.e[j][i] for j in range(d) if m.e[j][i]), C.field.zero())
                for i in range(d)
            ]
            if not vec_eq(comp, list(eps)):
                keeps = False
        if keeps:
            counit = list(eps)
    return BiHomCoalgebra(
        field=C.field,
        dim=d,
        delta=delta2,
        psi=mat_mul(C.psi, psi2),
        omega=mat_mul(C.omega, omega2),
        counit=counit,
        labels=list(C.labels),
    )


def dual_algebra(C: BiHomCoalgebra) -> BiHomAlgebra:
    """(C*, Delta^T, omega^T, psi^T); unital with unit eps when C is counital."""
    d = C.dim
    mu = Tensor3.from_function(
        C.field, d, d, d, lambda i, j: [C.delta.t[k][i][j] for k in range(d)]
    )
    return BiHomAlgebra(
        field=C.field,
        dim=d,
        mu=mu,
        alpha=C.omega.transpose(),
        beta=C.psi.transpose(),
        unit=list(C.counit) if C.counit is not None else None,
        labels=[f"{l}*" for l in C.labels],
    )


def dual_coalgebra(A: BiHomAlgebra) -> BiHomCoalgebra:
    """(A*, mu^T, beta^T, alpha^T); counital iff A is unital.

    In finite dimension the finite dual is all of A*, so the transpose of
    the multiplication is a genuine comultiplication.
    """
    d = A.dim
    delta = Tensor3.zero(A.field, d, d, d)
    for i in range(d):
        for j in range(d):
            col = A.mu.t[i][j]
            for k in range(d):
                if col[k]:
                    delta.t[k][i][j] = col[k]
    return BiHomCoalgebra(
        field=A.field,
        dim=d,
        delta=delta,
        psi=A.beta.transpose(),
        omega=A.alpha.transpose(),
        counit=list(A.unit) if A.unit is not None else None,
        labels=[f"{l}*" for l in A.labels],
    )


def tensor_product_coalgebras(C: BiHomCoalgebra, D: BiHomCoalgebra) -> BiHomCoalgebra:
    """Delta(c (x) d) = c1 (x) d1 (x) c2 (x) d2 with maps psi (x) psi etc."""
    if C.field != D.field:
        raise MixedFields("tensor product across fields")
    dc, dd = C.dim, D.dim
    d = dc * dd
    delta = Tensor3.zero(C.field, d, d, d)
    for i in range(dc):
        for a in range(dd):
            src = i * dd + a
            for (j, k, c1) in _pairs(C.delta.t[i], dc):
                for (b, e, c2) in _pairs(D.delta.t[a], dd):
                    delta.t[src][j * dd + b][k * dd + e] = c1 * c2
    counit = None
    if C.counit is not None and D.counit is not None:
        counit = vec_tensor(C.counit, D.counit, C.field)
    labels = [f"{lc}.{ld}" for lc in C.labels for ld in D.labels]
    return BiHomCoalgebra(
        field=C.field,
        dim=d,
        delta=delta,
        psi=kron(C.psi, D.psi),
        omega=kron(C.omega, D.omega),
        counit=counit,
        labels=labels,
    )


def twist_comodule(
    C: BiHomCoalgebra,
    psi2: Matrix,
    omega2: Matrix,
    M: Comodule,
) -> tuple:
    """Twist a comodule along a coalgebra twist.

    C with candidate twisting endomorphisms psi2/omega2, and M a comodule
    over C whose maps psiM/omegaM satisfy the intertwining conditions
    (psiM (x) psi2) o rho = rho o psiM and (omegaM (x) omega2) o rho =
    rho o omegaM.  Returns (C twisted, comodule over it) with new coaction
    m -> omegaM(m_(0)) (x) psi2(m_(1)).
    """
    dm, dc = M.dim, C.dim
    w = mat_eq_witness(mat_mul(M.psiM, M.omegaM), mat_mul(M.omegaM, M.psiM))
    if w is not None:
        raise ConditionFailure("psiM and omegaM do not commute", witness=w)
    for name, mm, mc in (
        ("psi", M.psiM, psi2),
        ("omega", M.omegaM, omega2),
    ):
        for i in range(dm):
            lhs = zero_vec(C.field, dm * dc)
            for (j, k, c) in _pairs(M.rho.t[i], dc):
                mj = mm.column(j)
                mk = mc.column(k)
                for p in range(dm):
                    if mj[p]:
                        cp = c * mj[p]
                        for r in range(dc):
                            if mk[r]:
                                lhs[p * dc + r] = lhs[p * dc + r] + cp * mk[r]
            rhs = zero_vec(C.field, dm * dc)
            for p, cp in enumerate(mm.column(i)):
                if cp:
                    for (j, k, c) in _pairs(M.rho.t[p], dc):
                        rhs[j * dc + k] = rhs[j * dc + k] + cp * c
            if not vec_eq(lhs, rhs):
                raise ConditionFailure(
                    f"({name}_M (x) {name}_C) o rho != rho o {name}_M",
                    witness=((i,), lhs, rhs),
                )
    C2 = yau_twist_coalgebra(C, psi2, omega2)
    rho2 = Tensor3.zero(C.field, dm, dm, dc)
    for i in range(dm):
        for (j, k, c) in _pairs(M.rho.t[i], dc):
            oj = M.omegaM.column(j)
            pk = psi2.column(k)
            for p in range(dm):
                if oj[p]:
                    cp = c * oj[p]
                    for r in range(dc):
                        if pk[r]:
                            rho2.t[i][p][r] = rho2.t[i][p][r] + cp * pk[r]
    return C2, Comodule(dim=dm, rho=rho2, psiM=M.psiM.copy(), omegaM=M.omegaM.copy())


def regular_comodule(C: BiHomCoalgebra) -> Comodule:
    """C over itself with coaction rho = Delta."""
    return Comodule(dim=C.dim, rho=C.delta, psiM=C.psi.copy(), omegaM=C.omega.copy())


# ---------------------------------------------------------------------------
# convolution algebras
# ---------------------------------------------------------------------------


def convolution_algebra(C: BiHomCoalgebra, A: BiHomAlgebra) -> BiHomAlgebra:
    """(Hom(C, A), f * g = mu o (f (x) g) o Delta, phi, gamma).

    The base is the elementary maps e_c -> e_a, flattened (c, a) ->
    c * dim A + a.  phi(f) = alpha o f o omega and gamma(f) = beta o f o psi;
    the unit is eta o eps when A is unital and C counital.
    """
    if C.field != A.field:
        raise MixedFields("convolution across fields")
    dc, da = C.dim, A.dim
    d = dc * da
    mu = Tensor3.zero(C.field, d, d, d)
    for c in range(dc):
        for a in range(da):
            src1 = c * da + a
            for e in range(dc):
                for b in range(da):
                    src2 = e * da + b
                    prod = A.mu.column(a, b)
                    col = mu.t[src1][src2]
                    for i in range(dc):
                        coeff = C.delta.t[i][c][e]
                        if coeff:
                            for t in range(da):
                                if prod[t]:
                                    col[i * da + t] = col[i * da + t] + coeff * prod[t]
    phi = kron(C.omega.transpose(), A.alpha)
    gamma = kron(C.psi.transpose(), A.beta)
    unit = None
    if A.unit is not None and C.counit is not None:
        unit = vec_tensor(C.counit, A.unit, C.field)
    labels = [f"{lc}->{la}" for lc in C.labels for la in A.labels]
    return BiHomAlgebra(
        field=C.field, dim=d, mu=mu, alpha=phi, beta=gamma, unit=unit, labels=labels
    )


def underline_hom(C: BiHomCoalgebra, A: BiHomAlgebra) -> tuple:
    """The joint fixed subspace of (phi, gamma) in the convolution algebra.

    Returns (subalgebra, basis, convolution_algebra): the subalgebra has
    identity structure maps, is associative and carries the unit eta o eps
    when A is unital and C counital; basis embeds it into Hom(C, A).
    """
    conv = convolution_algebra(C, A)
    sub, basis = fixed_subalgebra(conv)
    return sub, basis, conv
