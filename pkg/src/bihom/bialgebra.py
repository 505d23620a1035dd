"""BiHom-bialgebras, module BiHom-algebras, primitive elements, monoidal
BiHom-bialgebras and antipodes (monoidal and Yau-twist-invariant forms).

A bialgebra carries algebra data (mu, alpha, beta, unit) and coalgebra data
(delta, psi, omega, counit) on one space.  Antipode solving assembles one
stacked linear system over the d^2 matrix unknowns so that uniqueness and
inconsistency become rank facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra_core import (
    BiHomAlgebra,
    LeftModule,
    _default_labels,
    _require_pairwise_commuting,
    check_bihom_algebra,
    check_left_module,
)
from .coalgebra import BiHomCoalgebra, _pairs, check_bihom_coalgebra
from .errors import (
    HypothesisFailure,
    MissingUnit,
    NonUnique,
    NotBialgebraMap,
    NotPrimitive,
    ShapeMismatch,
    Singular,
)
from .exactnum import Field
from .linalg import (
    Matrix,
    MatrixPowers,
    Tensor3,
    bilinear_apply,
    kernel,
    mat_eq_witness,
    mat_inverse,
    mat_mul,
    solve_affine,
    unit_vec,
    vec_eq,
    vec_sub,
    vec_tensor,
    zero_vec,
)
from .report import CheckReport


@dataclass
class BiHomBialgebra:
    field: Field
    dim: int
    mu: Tensor3
    delta: Tensor3
    alpha: Matrix
    beta: Matrix
    psi: Matrix
    omega: Matrix
    unit: Optional[list] = None
    counit: Optional[list] = None
    labels: list = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = _default_labels("h", self.dim)
        self.algebra_part()  # shape validation via the component constructors
        self.coalgebra_part()

    def algebra_part(self) -> BiHomAlgebra:
        return BiHomAlgebra(
            field=self.field,
            dim=self.dim,
            mu=self.mu,
            alpha=self.alpha,
            beta=self.beta,
            unit=self.unit,
            labels=list(self.labels),
        )

    def coalgebra_part(self) -> BiHomCoalgebra:
        return BiHomCoalgebra(
            field=self.field,
            dim=self.dim,
            delta=self.delta,
            psi=self.psi,
            omega=self.omega,
            counit=self.counit,
            labels=list(self.labels),
        )

    def multiply(self, x, y):
        return bilinear_apply(self.mu, x, y)

    def coproduct(self, v):
        return self.coalgebra_part().coproduct(v)

    def same_tensors(self, other: "BiHomBialgebra") -> bool:
        return (
            self.algebra_part().same_tensors(other.algebra_part())
            and self.coalgebra_part().same_tensors(other.coalgebra_part())
        )


@dataclass
class ModuleAlgebraAction:
    """A left action H (x) A -> A; the module maps are A's own alpha, beta."""

    action: Tensor3  # action[h][a] = coordinates of e_h . e_a

    def as_left_module(self, a: BiHomAlgebra) -> LeftModule:
        return LeftModule(
            dim=a.dim, action=self.action, alphaM=a.alpha, betaM=a.beta
        )


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------


def check_bihom_bialgebra(H: BiHomBialgebra) -> CheckReport:
    """Both substructures, the compatibility clause, and the eight
    map-commutation identities, each as a separate report entry."""
    report = CheckReport()
    report.merge(check_bihom_algebra(H.algebra_part()), prefix="algebra:")
    report.merge(check_bihom_coalgebra(H.coalgebra_part()), prefix="coalgebra:")
    d = H.dim

    # Delta(h h') = h1 h'1 (x) h2 h'2 over all basis pairs
    ok = True
    for i in range(d):
        for j in range(d):
            prod = H.mu.column(i, j)
            lhs = H.coproduct(prod)
            rhs = zero_vec(H.field, d * d)
            for (a, b, c1) in _pairs(H.delta.t[i], d):
                for (c, e, c2) in _pairs(H.delta.t[j], d):
                    cc = c1 * c2
                    first = H.mu.column(a, c)
                    second = H.mu.column(b, e)
                    for p in range(d):
                        if first[p]:
                            cp = cc * first[p]
                            for r in range(d):
                                if second[r]:
                                    rhs[p * d + r] = rhs[p * d + r] + cp * second[r]
            if not vec_eq(lhs, rhs):
                report.add("delta_multiplicative", False, ((i, j), lhs, rhs))
                ok = False
                break
        if not ok:
            break
    if ok:
        report.add("delta_multiplicative", True)

    for name, m1, m2 in (
        ("alpha_psi_commute", H.alpha, H.psi),
        ("alpha_omega_commute", H.alpha, H.omega),
        ("beta_psi_commute", H.beta, H.psi),
        ("beta_omega_commute", H.beta, H.omega),
    ):
        w = mat_eq_witness(mat_mul(m1, m2), mat_mul(m2, m1))
        report.add(name, w is None, w)

    # alpha, beta comultiplicative; psi, omega multiplicative
    from .coalgebra import _check_comultiplicative

    _check_comultiplicative(report, "alpha_comultiplicative", H.coalgebra_part(), H.alpha)
    _check_comultiplicative(report, "beta_comultiplicative", H.coalgebra_part(), H.beta)
    from .algebra_core import _check_map_multiplicative

    _check_map_multiplicative(report, "psi_multiplicative", H.mu, H.psi)
    _check_map_multiplicative(report, "omega_multiplicative", H.mu, H.omega)

    if H.unit is not None:
        one = H.unit
        report.add_eq(
            "coproduct_of_unit", ("1",), H.coproduct(one), vec_tensor(one, one, H.field)
        )
        report.add_eq("psi_fixes_unit", ("1",), H.psi.apply(one), list(one))
        report.add_eq("omega_fixes_unit", ("1",), H.omega.apply(one), list(one))
        if H.counit is not None:
            eps_of_one = sum(
                (H.counit[i] * one[i] for i in range(d) if one[i]), H.field.zero()
            )
            report.add_eq("counit_of_unit", ("1",), eps_of_one, H.field.one())
    if H.counit is not None:
        eps = H.counit
        for name, m in (("counit_alpha", H.alpha), ("counit_beta", H.beta)):
            comp = [
                sum((eps[j] * m.e[j][i] for j in range(d) if m.e[j][i]), H.field.zero())
                for i in range(d)
            ]
            report.add_eq(name, ("eps",), comp, list(eps))
        ok = True
        for i in range(d):
            for j in range(d):
                prod = H.mu.column(i, j)
                lhs = sum(
                    (eps[k] * prod[k] for k in range(d) if prod[k]), H.field.zero()
                )
                rhs = eps[i] * eps[j]
                if lhs != rhs:
                    report.add("counit_multiplicative", False, ((i, j), lhs, rhs))
                    ok = False
                    break
            if not ok:
                break
        if ok:
            report.add("counit_multiplicative", True)
    return report


# ---------------------------------------------------------------------------
# twisting
# ---------------------------------------------------------------------------


def _require_bialgebra_map(H: BiHomBialgebra, m: Matrix, name):
    from .algebra_core import _check_map_multiplicative
    from .coalgebra import _check_comultiplicative

    probe = CheckReport()
    _check_map_multiplicative(probe, "m", H.mu, m)
    _check_comultiplicative(probe, "c", H.coalgebra_part(), m)
    if not probe.ok:
        raise NotBialgebraMap(
            f"{name} is not a bialgebra map", witness=probe.failures()[0].witness
        )


def yau_twist_bialgebra(
    H: BiHomBialgebra, alpha2: Matrix, beta2: Matrix, psi2: Matrix, omega2: Matrix
) -> BiHomBialgebra:
    """(H, mu o (a2 (x) b2), (w2 (x) p2) o Delta, composed maps).

    The four twisting maps must be bialgebra endomorphisms and all eight
    maps in sight must pairwise commute; verified, not trusted.  Unit and
    counit are carried whenever the twisting maps preserve them.
    """
    for name, m in (
        ("alpha2", alpha2),
        ("beta2", beta2),
        ("psi2", psi2),
        ("omega2", omega2),
    ):
        _require_bialgebra_map(H, m, name)
    _require_pairwise_commuting(
        [
            ("alpha", H.alpha),
            ("beta", H.beta),
            ("psi", H.psi),
            ("omega", H.omega),
            ("alpha2", alpha2),
            ("beta2", beta2),
            ("psi2", psi2),
            ("omega2", omega2),
        ]
    )
    from .algebra_core import yau_twist
    from .coalgebra import yau_twist_coalgebra

    alg = yau_twist(H.algebra_part(), alpha2, beta2)
    coalg = yau_twist_coalgebra(H.coalgebra_part(), psi2, omega2)
    return BiHomBialgebra(
        field=H.field,
        dim=H.dim,
        mu=alg.mu,
        delta=coalg.delta,
        alpha=alg.alpha,
        beta=alg.beta,
        psi=coalg.psi,
        omega=coalg.omega,
        unit=alg.unit,
        counit=coalg.counit,
        labels=list(H.labels),
    )


# ---------------------------------------------------------------------------
# primitive elements
# ---------------------------------------------------------------------------


def _primitive_defect_matrix(H: BiHomBialgebra) -> Matrix:
    """Matrix of x -> Delta(x) - 1 (x) x - x (x) 1 (columns on basis)."""
    if H.unit is None:
        raise MissingUnit("primitive elements need a unit")
    d = H.dim
    one = H.unit
    m = Matrix.zero(H.field, d * d, d)
    for j in range(d):
        col = H.coproduct(unit_vec(H.field, d, j))
        ej = unit_vec(H.field, d, j)
        col = vec_sub(col, vec_tensor(one, ej, H.field))
        col = vec_sub(col, vec_tensor(ej, one, H.field))
        for i in range(d * d):
            if col[i]:
                m.e[i][j] = col[i]
    return m


def find_primitives(H: BiHomBialgebra):
    """Kernel basis of x -> Delta(x) - 1 (x) x - x (x) 1."""
    return kernel(_primitive_defect_matrix(H))


def is_primitive(H: BiHomBialgebra, x) -> bool:
    m = _primitive_defect_matrix(H)
    return not any(m.apply(x))


def primitive_bracket(H: BiHomBialgebra, x, y):
    """[x, y] = x y - (alpha^-1 beta)(y) (alpha beta^-1)(x) on primitives.

    Verifies the inputs are primitive, that the output is primitive again,
    that psi = omega on both inputs, and that alpha^p beta^q of each input
    stays primitive for p, q in {-1, 0, 1}.
    """
    defect = _primitive_defect_matrix(H)
    for name, v in (("x", x), ("y", y)):
        if any(defect.apply(v)):
            raise NotPrimitive(f"{name} is not primitive")
    try:
        ainv = mat_inverse(H.alpha)
        binv = mat_inverse(H.beta)
    except Singular:
        raise Singular("primitive bracket needs bijective alpha and beta")
    p = mat_mul(ainv, H.beta)
    q = mat_mul(H.alpha, binv)
    bracket = vec_sub(
        H.multiply(x, y), H.multiply(p.apply(y), q.apply(x))
    )
    if any(defect.apply(bracket)):
        raise AssertionError("bracket of primitives failed to be primitive")
    powers_a = MatrixPowers(H.alpha)
    powers_b = MatrixPowers(H.beta)
    for v in (x, y):
        if not vec_eq(H.psi.apply(v), H.omega.apply(v)):
            raise AssertionError("psi and omega disagree on a primitive element")
        for pe in (-1, 0, 1):
            for qe in (-1, 0, 1):
                w = powers_a(pe).apply(powers_b(qe).apply(v))
                if any(defect.apply(w)):
                    raise AssertionError(
                        f"alpha^{pe} beta^{qe} did not preserve primitivity"
                    )
    return bracket


# ---------------------------------------------------------------------------
# module BiHom-algebras
# ---------------------------------------------------------------------------


def check_module_bihom_algebra(
    H: BiHomBialgebra, A: BiHomAlgebra, act: ModuleAlgebraAction
) -> CheckReport:
    """Module axioms plus the coproduct compatibility.

    The compatibility reads, over all basis tuples (h, a, a'):
    h.(a a') = [alpha^-1(omega^-1(h1)) . a] [beta^-1(psi^-1(h2)) . a'],
    which needs all four structure maps of H bijective.
    """
    try:
        ainv = mat_inverse(H.alpha)
        binv = mat_inverse(H.beta)
        pinv = mat_inverse(H.psi)
        oinv = mat_inverse(H.omega)
    except Singular as exc:
        raise Singular(f"module compatibility needs bijective maps: {exc}")
    report = CheckReport()
    report.merge(
        check_left_module(H.algebra_part(), act.as_left_module(A)), prefix="module:"
    )
    d, da = H.dim, A.dim
    action = act.action
    first_map = mat_mul(ainv, oinv)  # alpha^-1 o omega^-1
    second_map = mat_mul(binv, pinv)  # beta^-1 o psi^-1
    ok = True
    for h in range(d):
        # precompute the coproduct legs of e_h, pushed through the inverses
        split = [
            (first_map.column(u), second_map.column(v), c)
            for (u, v, c) in _pairs(H.delta.t[h], d)
        ]
        for a in range(da):
            for b in range(da):
                prod = A.mu.column(a, b)
                lhs = bilinear_apply(action, unit_vec(H.field, d, h), prod)
                rhs = zero_vec(H.field, da)
                ea = unit_vec(H.field, da, a)
                eb = unit_vec(H.field, da, b)
                for (leg1, leg2, c) in split:
                    t1 = bilinear_apply(action, leg1, ea)
                    t2 = bilinear_apply(action, leg2, eb)
                    term = bilinear_apply(A.mu, t1, t2)
                    for k in range(da):
                        if term[k]:
                            rhs[k] = rhs[k] + c * term[k]
                if not vec_eq(lhs, rhs):
                    report.add("module_algebra_compat", False, ((h, a, b), lhs, rhs))
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        report.add("module_algebra_compat", True)
    return report


def twist_left_module(
    a_classical: BiHomAlgebra,
    mod: LeftModule,
    alpha2: Matrix,
    beta2: Matrix,
) -> tuple:
    """Twist a left module along a Yau twist of its algebra.

    Given a classical module over a classical algebra and candidate module
    maps stored in mod, with the equivariance hypotheses
    alphaM(a.m) = alpha2(a).alphaM(m) and betaM(a.m) = beta2(a).betaM(m),
    returns (twisted algebra, twisted module) with action
    a |> m = alpha2(a).betaM(m).
    """
    ident = Matrix.identity(a_classical.field, mod.dim)
    plain = LeftModule(dim=mod.dim, action=mod.action, alphaM=ident, betaM=ident)
    base = check_left_module(a_classical, plain)
    if not base.ok:
        raise HypothesisFailure(
            "input is not a classical left module",
            witness=base.failures()[0].witness,
        )
    w = mat_eq_witness(
        mat_mul(mod.alphaM, mod.betaM), mat_mul(mod.betaM, mod.alphaM)
    )
    if w is not None:
        raise HypothesisFailure("alphaM and betaM do not commute", witness=w)
    act = mod.action
    for name, m_alg, m_mod in (
        ("alphaM", alpha2, mod.alphaM),
        ("betaM", beta2, mod.betaM),
    ):
        for i in range(a_classical.dim):
            for j in range(mod.dim):
                lhs = m_mod.apply(act.column(i, j))
                rhs = bilinear_apply(act, m_alg.column(i), m_mod.column(j))
                if not vec_eq(lhs, rhs):
                    raise HypothesisFailure(
                        f"{name} equivariance fails", witness=((i, j), lhs, rhs)
                    )
    from .algebra_core import yau_twist

    a2 = yau_twist(a_classical, alpha2, beta2)
    new_action = Tensor3.from_function(
        act.field,
        a_classical.dim,
        mod.dim,
        mod.dim,
        lambda i, j: bilinear_apply(act, alpha2.column(i), mod.betaM.column(j)),
    )
    return a2, LeftModule(
        dim=mod.dim, action=new_action, alphaM=mod.alphaM.copy(), betaM=mod.betaM.copy()
    )


def twist_module_algebra(
    H: BiHomBialgebra,
    A: BiHomAlgebra,
    act: ModuleAlgebraAction,
    alphaH: Matrix,
    betaH: Matrix,
    psiH: Matrix,
    omegaH: Matrix,
    alphaA: Matrix,
    betaA: Matrix,
) -> tuple:
    """Twist a classical module algebra into a module BiHom-algebra.

    H and A are classical (identity structure maps); the stated hypotheses
    (classical module algebra, bialgebra endomorphisms, commutation and
    equivariance) are verified; the new action is h |> a = alphaH(h).betaA(a).
    Returns (twisted H, twisted A, twisted action).
    """
    _verify_classical_module_algebra(H, A, act)
    for name, m in (
        ("alphaH", alphaH),
        ("betaH", betaH),
        ("psiH", psiH),
        ("omegaH", omegaH),
    ):
        _require_bialgebra_map(H, m, name)
    _require_pairwise_commuting(
        [("alphaH", alphaH), ("betaH", betaH), ("psiH", psiH), ("omegaH", omegaH)]
    )
    from .algebra_core import _require_multiplicative

    _require_multiplicative(A.mu, alphaA, "alphaA")
    _require_multiplicative(A.mu, betaA, "betaA")
    _require_pairwise_commuting([("alphaA", alphaA), ("betaA", betaA)])
    action = act.action
    for name, mh, ma in (("alpha", alphaH, alphaA), ("beta", betaH, betaA)):
        for i in range(H.dim):
            for j in range(A.dim):
                lhs = ma.apply(action.column(i, j))
                rhs = bilinear_apply(action, mh.column(i), ma.column(j))
                if not vec_eq(lhs, rhs):
                    raise HypothesisFailure(
                        f"{name} equivariance fails", witness=((i, j), lhs, rhs)
                    )
    from .algebra_core import yau_twist

    H2 = yau_twist_bialgebra(H, alphaH, betaH, psiH, omegaH)
    A2 = yau_twist(A, alphaA, betaA)
    new_action = Tensor3.from_function(
        action.field,
        H.dim,
        A.dim,
        A.dim,
        lambda i, j: bilinear_apply(action, alphaH.column(i), betaA.column(j)),
    )
    return H2, A2, ModuleAlgebraAction(action=new_action)


def _verify_classical_module_algebra(H, A, act):
    """Classical hypotheses: unital module, associativity of the action,
    and h.(a a') = (h1.a)(h2.a')."""
    mod = act.as_left_module(A)
    base = check_left_module(H.algebra_part(), mod)
    if not base.ok:
        raise HypothesisFailure(
            "not a classical left module", witness=base.failures()[0].witness
        )
    d, da = H.dim, A.dim
    action = act.action
    for h in range(d):
        for a in range(da):
            for b in range(da):
                lhs = bilinear_apply(
                    action, unit_vec(H.field, d, h), A.mu.column(a, b)
                )
                rhs = zero_vec(H.field, da)
                ea = unit_vec(H.field, da, a)
                eb = unit_vec(H.field, da, b)
                for (u, v, c) in _pairs(H.delta.t[h], d):
                    t1 = bilinear_apply(action, unit_vec(H.field, d, u), ea)
                    t2 = bilinear_apply(action, unit_vec(H.field, d, v), eb)
                    term = bilinear_apply(A.mu, t1, t2)
                    for k in range(da):
                        if term[k]:
                            rhs[k] = rhs[k] + c * term[k]
                if not vec_eq(lhs, rhs):
                    raise HypothesisFailure(
                        "not a classical module algebra",
                        witness=((h, a, b), lhs, rhs),
                    )


# ---------------------------------------------------------------------------
# monoidal BiHom-bialgebras and antipodes
# ---------------------------------------------------------------------------


def is_monoidal(H: BiHomBialgebra) -> bool:
    """omega = alpha^-1 and psi = beta^-1, by exact matrix equality."""
    ainv = mat_inverse(H.alpha)
    binv = mat_inverse(H.beta)
    return (
        mat_eq_witness(H.omega, ainv) is None
        and mat_eq_witness(H.psi, binv) is None
    )


def solve_antipode_monoidal(H: BiHomBialgebra):
    """Solve S(h1) h2 = eps(h) 1 = h1 S(h2) with S commuting with alpha, beta.

    One stacked linear system over the d^2 unknowns of S.  Returns the
    unique solution as a Matrix, None when the system is inconsistent, and
    raises NonUnique if underdetermined (which cannot happen for a valid
    monoidal BiHom-bialgebra, by convolution-inverse uniqueness).
    """
    if H.unit is None or H.counit is None:
        raise MissingUnit("antipode needs a unit and a counit")
    if not is_monoidal(H):
        raise HypothesisFailure("antipode solving requires a monoidal bialgebra")
    field = H.field
    d = H.dim
    n_unknowns = d * d  # s[i][j] = coefficient of e_i in S(e_j)
    rows = []
    rhs = []

    def s_index(i, j):
        return i * d + j

    # sum_{u,v} Delta_h^{uv} S(e_u) e_v = eps_h 1   (rows per h, output k)
    for h in range(d):
        coeff = [[field.zero()] * n_unknowns for _ in range(d)]
        for (u, v, c) in _pairs(H.delta.t[h], d):
            for i in range(d):
                prod = H.mu.column(i, v)
                for k in range(d):
                    if prod[k]:
                        coeff[k][s_index(i, u)] = coeff[k][s_index(i, u)] + c * prod[k]
        for k in range(d):
            rows.append(coeff[k])
            rhs.append(H.counit[h] * H.unit[k])
    # sum_{u,v} Delta_h^{uv} e_u S(e_v) = eps_h 1
    for h in range(d):
        coeff = [[field.zero()] * n_unknowns for _ in range(d)]
        for (u, v, c) in _pairs(H.delta.t[h], d):
            for j in range(d):
                prod = H.mu.column(u, j)
                for k in range(d):
                    if prod[k]:
                        coeff[k][s_index(j, v)] = coeff[k][s_index(j, v)] + c * prod[k]
        for k in range(d):
            rows.append(coeff[k])
            rhs.append(H.counit[h] * H.unit[k])
    # alpha S - S alpha = 0 and beta S - S beta = 0
    for m in (H.alpha, H.beta):
        for i in range(d):
            for j in range(d):
                row = [field.zero()] * n_unknowns
                for k in range(d):
                    if m.e[i][k]:
                        row[s_index(k, j)] = row[s_index(k, j)] + m.e[i][k]
                    if m.e[k][j]:
                        row[s_index(i, k)] = row[s_index(i, k)] - m.e[k][j]
                rows.append(row)
                rhs.append(field.zero())
    res = solve_affine(Matrix(field, rows), rhs)
    if res is None:
        return None
    x, null = res
    if null:
        raise NonUnique(
            f"antipode system underdetermined (solution space dim {len(null)})"
        )
    s = Matrix.zero(field, d, d)
    for i in range(d):
        for j in range(d):
            s.e[i][j] = x[s_index(i, j)]
    return s


def check_antipode_general(H: BiHomBialgebra, S: Matrix) -> CheckReport:
    """The Yau-twist-invariant antipode axioms for a supplied S:

    beta psi(S(h1)) alpha omega(h2) = eps(h) 1 = beta psi(h1) alpha omega(S(h2))
    and S commutes with all four structure maps.
    """
    if H.unit is None or H.counit is None:
        raise MissingUnit("the antipode axioms need a unit and a counit")
    if (S.rows, S.cols) != (H.dim, H.dim):
        raise ShapeMismatch("antipode matrix shape")
    report = CheckReport()
    for name, m in (
        ("S_alpha_commute", H.alpha),
        ("S_beta_commute", H.beta),
        ("S_psi_commute", H.psi),
        ("S_omega_commute", H.omega),
    ):
        w = mat_eq_witness(mat_mul(m, S), mat_mul(S, m))
        report.add(name, w is None, w)
    d = H.dim
    bp = mat_mul(H.beta, H.psi)
    ao = mat_mul(H.alpha, H.omega)
    bpS = mat_mul(bp, S)
    aoS = mat_mul(ao, S)
    left_ok = right_ok = True
    for h in range(d):
        target = [H.counit[h] * H.unit[k] for k in range(d)]
        lhs = zero_vec(H.field, d)
        rhs = zero_vec(H.field, d)
        for (u, v, c) in _pairs(H.delta.t[h], d):
            t = bilinear_apply(H.mu, bpS.column(u), ao.column(v))
            for k in range(d):
                if t[k]:
                    lhs[k] = lhs[k] + c * t[k]
            t = bilinear_apply(H.mu, bp.column(u), aoS.column(v))
            for k in range(d):
                if t[k]:
                    rhs[k] = rhs[k] + c * t[k]
        if left_ok and not vec_eq(lhs, target):
            report.add("antipode_left", False, ((h,), lhs, target))
            left_ok = False
        if right_ok and not vec_eq(rhs, target):
            report.add("antipode_right", False, ((h,), rhs, target))
            right_ok = False
    if left_ok:
        report.add("antipode_left", True)
    if right_ok:
        report.add("antipode_right", True)
    return report


def hopf_to_monoidal(
    H: BiHomBialgebra, S: Matrix, alpha: Matrix, beta: Matrix
) -> tuple:
    """From a classical Hopf algebra to a monoidal BiHom-Hopf structure:
    (H, mu o (alpha (x) beta), (alpha^-1 (x) beta^-1) o Delta, alpha, beta).

    alpha, beta must be unital counital commuting bialgebra automorphisms;
    they then automatically commute with S.  Returns (twisted H, S).
    """
    if H.unit is None or H.counit is None:
        raise MissingUnit("hopf_to_monoidal needs a unital counital bialgebra")
    for name, m in (("alpha", alpha), ("beta", beta)):
        try:
            mat_inverse(m)
        except Singular:
            raise _not_automorphism(name, "is singular")
        try:
            _require_bialgebra_map(H, m, name)
        except NotBialgebraMap as exc:
            raise _not_automorphism(name, exc.witness)
        if not vec_eq(m.apply(H.unit), list(H.unit)):
            raise _not_automorphism(name, "does not fix the unit")
        comp = [
            sum(
                (H.counit[j] * m.e[j][i] for j in range(H.dim) if m.e[j][i]),
                H.field.zero(),
            )
            for i in range(H.dim)
        ]
        if not vec_eq(comp, list(H.counit)):
            raise _not_automorphism(name, "does not preserve the counit")
    _require_pairwise_commuting([("alpha", alpha), ("beta", beta)])
    ainv = mat_inverse(alpha)
    binv = mat_inverse(beta)
    twisted = yau_twist_bialgebra(H, alpha, beta, binv, ainv)
    return twisted, S


def _not_automorphism(name, witness=None):
    from .errors import NotAutomorphism

    return NotAutomorphism(f"{name} is not a Hopf-algebra automorphism", witness)


def check_antipode_properties(H: BiHomBialgebra, S: Matrix) -> CheckReport:
    """The three derived antipode properties for a monoidal BiHom-Hopf algebra:

    (i)   S(1) = 1 and eps o S = eps;
    (ii)  S(beta(a) alpha(b)) = S(beta(b)) S(alpha(a)) over basis pairs;
    (iii) alpha(S(h)_1) (x) beta(S(h)_2) = beta(S(h_2)) (x) alpha(S(h_1)).
    """
    report = CheckReport()
    report.merge(_monoidal_antipode_axiom(H, S), prefix="axiom:")
    d = H.dim
    report.add_eq("S_fixes_unit", ("1",), S.apply(H.unit), list(H.unit))
    comp = [
        sum((H.counit[j] * S.e[j][i] for j in range(d) if S.e[j][i]), H.field.zero())
        for i in range(d)
    ]
    report.add_eq("eps_after_S", ("eps",), comp, list(H.counit))

    ok = True
    for a in range(d):
        ba = H.beta.column(a)
        Sa = S.apply(H.alpha.column(a))
        for b in range(d):
            lhs = S.apply(H.multiply(ba, H.alpha.column(b)))
            rhs = H.multiply(S.apply(H.beta.column(b)), Sa)
            if not vec_eq(lhs, rhs):
                report.add("antihomomorphism", False, ((a, b), lhs, rhs))
                ok = False
                break
        if not ok:
            break
    if ok:
        report.add("antihomomorphism", True)

    ok = True
    for h in range(d):
        lhs = zero_vec(H.field, d * d)
        sh = S.column(h)
        cop = H.coproduct(sh)
        for p in range(d):
            ap = H.alpha.column(p)
            for r in range(d):
                c = cop[p * d + r]
                if not c:
                    continue
                br = H.beta.column(r)
                for i in range(d):
                    if ap[i]:
                        ci = c * ap[i]
                        for j in range(d):
                            if br[j]:
                                lhs[i * d + j] = lhs[i * d + j] + ci * br[j]
        rhs = zero_vec(H.field, d * d)
        for (u, v, c) in _pairs(H.delta.t[h], d):
            bsv = H.beta.apply(S.column(v))
            asu = H.alpha.apply(S.column(u))
            for i in range(d):
                if bsv[i]:
                    ci = c * bsv[i]
                    for j in range(d):
                        if asu[j]:
                            rhs[i * d + j] = rhs[i * d + j] + ci * asu[j]
        if not vec_eq(lhs, rhs):
            report.add("coproduct_flip", False, ((h,), lhs, rhs))
            ok = False
            break
    if ok:
        report.add("coproduct_flip", True)
    return report


def _monoidal_antipode_axiom(H: BiHomBialgebra, S: Matrix) -> CheckReport:
    """S(h1) h2 = eps(h) 1 = h1 S(h2) plus commutation with alpha and beta."""
    report = CheckReport()
    for name, m in (("S_alpha_commute", H.alpha), ("S_beta_commute", H.beta)):
        w = mat_eq_witness(mat_mul(m, S), mat_mul(S, m))
        report.add(name, w is None, w)
    d = H.dim
    left_ok = right_ok = True
    for h in range(d):
        target = [H.counit[h] * H.unit[k] for k in range(d)]
        lhs = zero_vec(H.field, d)
        rhs = zero_vec(H.field, d)
        for (u, v, c) in _pairs(H.delta.t[h], d):
            t = H.multiply(S.column(u), unit_vec(H.field, d, v))
            for k in range(d):
                if t[k]:
                    lhs[k] = lhs[k] + c * t[k]
            t = H.multiply(unit_vec(H.field, d, u), S.column(v))
            for k in range(d):
                if t[k]:
                    rhs[k] = rhs[k] + c * t[k]
        if left_ok and not vec_eq(lhs, target):
            report.add("antipode_left", False, ((h,), lhs, target))
            left_ok = False
        if right_ok and not vec_eq(rhs, target):
            report.add("antipode_right", False, ((h,), rhs, target))
            right_ok = False
    if left_ok:
        report.add("antipode_left", True)
    if right_ok:
        report.add("antipode_right", True)
    return report
