"""BiHom-pseudotwistors, BiHom-twisting maps, twisted tensor products, and
lifting of classical twisting maps to the twisted setting.

A pseudotwistor is stored as explicit matrices on the tensor-power spaces:
T on D (x) D (d^2 x d^2) and its two companions on D (x) D (x) D (d^3 x d^3),
so every clause of the main theorem becomes one exact matrix identity.
Twisting maps R: B (x) A -> A (x) B are (dA*dB) x (dB*dA) matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra_core import (
    BiHomAlgebra,
    _require_multiplicative,
    _require_pairwise_commuting,
    tensor_product,
)
from .errors import (
    HypothesisFailure,
    PseudotwistorInvalid,
    ShapeMismatch,
    Singular,
    TwistingMapInvalid,
)
from .linalg import (
    Matrix,
    kron,
    mat_eq_witness,
    mat_inverse,
    mat_mul,
    matrix_as_tensor,
    tensor_as_matrix,
    unit_vec,
    vec_eq,
    vec_tensor,
    zero_vec,
)
from .report import CheckReport


@dataclass
class Pseudotwistor:
    T: Matrix  # on D (x) D
    T1tilde: Matrix  # on D (x) D (x) D
    T2tilde: Matrix  # on D (x) D (x) D
    alpha2: Matrix  # on D
    beta2: Matrix  # on D

    def __post_init__(self):
        d = self.alpha2.rows
        if (self.alpha2.cols, self.beta2.rows, self.beta2.cols) != (d, d, d):
            raise ShapeMismatch("pseudotwistor auxiliary map shape")
        if (self.T.rows, self.T.cols) != (d * d, d * d):
            raise ShapeMismatch("T must act on the tensor square")
        for m in (self.T1tilde, self.T2tilde):
            if (m.rows, m.cols) != (d**3, d**3):
                raise ShapeMismatch("companions must act on the tensor cube")


@dataclass
class TwistingMap:
    """R: B (x) A -> A (x) B between two BiHom-associative algebras."""

    R: Matrix
    dimA: int
    dimB: int

    def __post_init__(self):
        if (self.R.rows, self.R.cols) != (
            self.dimA * self.dimB,
            self.dimB * self.dimA,
        ):
            raise ShapeMismatch("twisting map must send B (x) A to A (x) B")

    def apply(self, b_vec, a_vec):
        """R(b (x) a) as a flattened vector on A (x) B."""
        return self.R.apply(vec_tensor(b_vec, a_vec, self.R.field))

    def pairs(self, b_idx, a_idx):
        """Nonzero ((a', b'), coeff) entries of R(e_b (x) e_a)."""
        col = self.R.column(b_idx * self.dimA + a_idx)
        out = []
        for flat, c in enumerate(col):
            if c:
                out.append((divmod(flat, self.dimB), c))
        return out


# ---------------------------------------------------------------------------
# pseudotwistors
# ---------------------------------------------------------------------------


def check_pseudotwistor(D: BiHomAlgebra, P: Pseudotwistor) -> CheckReport:
    """All seven defining identities plus the hypothesis clauses, each as
    an exact matrix identity on the full tensor space."""
    report = CheckReport()
    if P.alpha2.rows != D.dim:
        raise ShapeMismatch("pseudotwistor dimension != algebra dimension")
    probe = CheckReport()
    from .algebra_core import _check_map_multiplicative

    _check_map_multiplicative(probe, "alpha2_multiplicative", D.mu, P.alpha2)
    _check_map_multiplicative(probe, "beta2_multiplicative", D.mu, P.beta2)
    report.merge(probe)
    names = [
        ("alpha", D.alpha),
        ("beta", D.beta),
        ("alpha2", P.alpha2),
        ("beta2", P.beta2),
    ]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            (n1, m1), (n2, m2) = names[i], names[j]
            w = mat_eq_witness(mat_mul(m1, m2), mat_mul(m2, m1))
            report.add(f"{n1}_{n2}_commute", w is None, w)

    ident = Matrix.identity(D.field, D.dim)
    mu_mat = tensor_as_matrix(D.mu)  # d x d^2

    def pair(name, lhs, rhs):
        w = mat_eq_witness(lhs, rhs)
        report.add(name, w is None, w)

    pair(
        "T_alpha2_compat",
        mat_mul(kron(P.alpha2, P.alpha2), P.T),
        mat_mul(P.T, kron(P.alpha2, P.alpha2)),
    )
    pair(
        "T_beta2_compat",
        mat_mul(kron(P.beta2, P.beta2), P.T),
        mat_mul(P.T, kron(P.beta2, P.beta2)),
    )
    pair(
        "T_alpha_compat",
        mat_mul(kron(D.alpha, D.alpha), P.T),
        mat_mul(P.T, kron(D.alpha, D.alpha)),
    )
    pair(
        "T_beta_compat",
        mat_mul(kron(D.beta, D.beta), P.T),
        mat_mul(P.T, kron(D.beta, D.beta)),
    )
    alpha_mu = kron(D.alpha, mu_mat)  # d^3 -> d^2
    mu_beta = kron(mu_mat, D.beta)
    pair(
        "T_left_product",
        mat_mul(P.T, alpha_mu),
        mat_mul(alpha_mu, mat_mul(P.T1tilde, kron(P.T, ident))),
    )
    pair(
        "T_right_product",
        mat_mul(P.T, mu_beta),
        mat_mul(mu_beta, mat_mul(P.T2tilde, kron(ident, P.T))),
    )
    pair(
        "companion_exchange",
        mat_mul(P.T1tilde, mat_mul(kron(P.T, ident), kron(P.alpha2, P.T))),
        mat_mul(P.T2tilde, mat_mul(kron(ident, P.T), kron(P.T, P.beta2))),
    )
    return report


def canonical_pseudotwistor(D: BiHomAlgebra, alpha2: Matrix, beta2: Matrix) -> Pseudotwistor:
    """T = alpha2 (x) beta2 with companions id (x) id (x) beta2 and
    alpha2 (x) id (x) id; realizes the Yau twist as a pseudotwistor."""
    _require_multiplicative(D.mu, alpha2, "alpha2")
    _require_multiplicative(D.mu, beta2, "beta2")
    try:
        _require_pairwise_commuting(
            [
                ("alpha", D.alpha),
                ("beta", D.beta),
                ("alpha2", alpha2),
                ("beta2", beta2),
            ]
        )
    except Exception as exc:
        raise HypothesisFailure(f"twist hypotheses fail: {exc}")
    ident = Matrix.identity(D.field, D.dim)
    ident2 = Matrix.identity(D.field, D.dim * D.dim)
    return Pseudotwistor(
        T=kron(alpha2, beta2),
        T1tilde=kron(ident2, beta2),
        T2tilde=kron(alpha2, ident2),
        alpha2=alpha2,
        beta2=beta2,
    )


def apply_pseudotwistor(D: BiHomAlgebra, P: Pseudotwistor) -> BiHomAlgebra:
    """(D, mu o T, alpha~ o alpha2, beta~ o beta2); checks P first."""
    report = check_pseudotwistor(D, P)
    if not report.ok:
        raise PseudotwistorInvalid(
            f"pseudotwistor fails {report.failures()[0].axiom}", report=report
        )
    mu_mat = mat_mul(tensor_as_matrix(D.mu), P.T)
    mu2 = matrix_as_tensor(D.field, mu_mat, D.dim, D.dim)
    out = BiHomAlgebra(
        field=D.field,
        dim=D.dim,
        mu=mu2,
        alpha=mat_mul(D.alpha, P.alpha2),
        beta=mat_mul(D.beta, P.beta2),
        unit=None,
        labels=list(D.labels),
    )
    if D.unit is not None:
        out.unit = _validated_unit(out, D.unit)
    return out


def _validated_unit(a: BiHomAlgebra, candidate):
    """Keep the unit only if it actually satisfies the unit axioms."""
    if candidate is None:
        return None
    if not vec_eq(a.alpha.apply(candidate), list(candidate)):
        return None
    if not vec_eq(a.beta.apply(candidate), list(candidate)):
        return None
    for i in range(a.dim):
        ei = unit_vec(a.field, a.dim, i)
        if not vec_eq(a.multiply(ei, candidate), a.alpha.column(i)):
            return None
        if not vec_eq(a.multiply(candidate, ei), a.beta.column(i)):
            return None
    return list(candidate)


# ---------------------------------------------------------------------------
# twisting maps
# ---------------------------------------------------------------------------


def check_twisting_map(A: BiHomAlgebra, B: BiHomAlgebra, tw: TwistingMap) -> CheckReport:
    """The four matrix identities of a BiHom-twisting map, plus per-basis
    Sweedler-form evaluations that must agree with the matrix form."""
    if tw.dimA != A.dim or tw.dimB != B.dim:
        raise ShapeMismatch("twisting map dimensions")
    try:
        aAi = mat_inverse(A.alpha)
        bAi = mat_inverse(A.beta)
        aBi = mat_inverse(B.alpha)
        bBi = mat_inverse(B.beta)
    except Singular as exc:
        raise Singular(f"twisting maps need bijective structure maps: {exc}")
    report = CheckReport()
    field = A.field
    R = tw.R
    da, db = A.dim, B.dim
    idA = Matrix.identity(field, da)
    idB = Matrix.identity(field, db)
    muA = tensor_as_matrix(A.mu)
    muB = tensor_as_matrix(B.mu)

    def pair(name, lhs, rhs):
        w = mat_eq_witness(lhs, rhs)
        report.add(name, w is None, w)

    pair(
        "R_alpha_compat",
        mat_mul(kron(A.alpha, B.alpha), R),
        mat_mul(R, kron(B.alpha, A.alpha)),
    )
    pair(
        "R_beta_compat",
        mat_mul(kron(A.beta, B.beta), R),
        mat_mul(R, kron(B.beta, A.beta)),
    )
    # R o (alpha_B (x) mu_A) =
    #   (mu_A (x) beta_B) o (id_A (x) R) o (id_A (x) alpha_B beta_B^-1 (x) id_A) o (R (x) id_A)
    ab_binv = mat_mul(B.alpha, bBi)
    lhs1 = mat_mul(R, kron(B.alpha, muA))
    rhs1 = mat_mul(
        kron(muA, B.beta),
        mat_mul(
            kron(idA, R),
            mat_mul(kron(idA, kron(ab_binv, idA)), kron(R, idA)),
        ),
    )
    pair("R_left_product", lhs1, rhs1)
    # R o (mu_B (x) beta_A) =
    #   (alpha_A (x) mu_B) o (R (x) id_B) o (id_B (x) alpha_A^-1 beta_A (x) id_B) o (id_B (x) R)
    ainv_bA = mat_mul(aAi, A.beta)
    lhs2 = mat_mul(R, kron(muB, A.beta))
    rhs2 = mat_mul(
        kron(A.alpha, muB),
        mat_mul(
            kron(R, idB),
            mat_mul(kron(idB, kron(ainv_bA, idB)), kron(idB, R)),
        ),
    )
    pair("R_right_product", lhs2, rhs2)

    # Sweedler-form spot checks on all basis pairs must agree with the
    # matrix-form columns computed above.
    ok = True
    for b in range(db):
        for a in range(da):
            for a2 in range(da):
                src = (b * da + a) * da + a2
                expect = [rhs1.e[i][src] for i in range(rhs1.rows)]
                got = zero_vec(field, da * db)
                for ((ar, br), c) in tw.pairs(b, a):
                    wvec = ab_binv.column(br)
                    for b1, cb in enumerate(wvec):
                        if not cb:
                            continue
                        for ((ar2, br2), c2) in tw.pairs(b1, a2):
                            prod = A.mu.column(ar, ar2)
                            bb = B.beta.column(br2)
                            cc = c * cb * c2
                            for i in range(da):
                                if prod[i]:
                                    ci = cc * prod[i]
                                    for j in range(db):
                                        if bb[j]:
                                            got[i * db + j] = (
                                                got[i * db + j] + ci * bb[j]
                                            )
                if not vec_eq(got, expect):
                    report.add("sweedler_left_agrees", False, ((b, a, a2), got, expect))
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        report.add("sweedler_left_agrees", True)

    ok = True
    for b in range(db):
        for b2 in range(db):
            for a in range(da):
                src = (b * db + b2) * da + a
                expect = [rhs2.e[i][src] for i in range(rhs2.rows)]
                got = zero_vec(field, da * db)
                for ((ar, br), c) in tw.pairs(b2, a):
                    wvec = ainv_bA.column(ar)
                    for a1, ca in enumerate(wvec):
                        if not ca:
                            continue
                        for ((ar2, br2), c2) in tw.pairs(b, a1):
                            aa = A.alpha.column(ar2)
                            prod = B.mu.column(br2, br)
                            cc = c * ca * c2
                            for i in range(da):
                                if aa[i]:
                                    ci = cc * aa[i]
                                    for j in range(db):
                                        if prod[j]:
                                            got[i * db + j] = (
                                                got[i * db + j] + ci * prod[j]
                                            )
                if not vec_eq(got, expect):
                    report.add(
                        "sweedler_right_agrees", False, ((b, b2, a), got, expect)
                    )
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        report.add("sweedler_right_agrees", True)
    return report


def flip_map(A: BiHomAlgebra, B: BiHomAlgebra) -> TwistingMap:
    """R(b (x) a) = a (x) b."""
    field = A.field
    da, db = A.dim, B.dim
    R = Matrix.zero(field, da * db, db * da)
    one = field.one()
    for b in range(db):
        for a in range(da):
            R.e[a * db + b][b * da + a] = one
    return TwistingMap(R=R, dimA=da, dimB=db)


def _swap_matrix(field, da, db):
    """The flip A (x) B -> B (x) A on flattened coordinates."""
    m = Matrix.zero(field, db * da, da * db)
    one = field.one()
    for a in range(da):
        for b in range(db):
            m.e[b * da + a][a * db + b] = one
    return m


def helper_identity_witness(A: BiHomAlgebra, B: BiHomAlgebra, tw: TwistingMap):
    """The auxiliary exchange identity every accepted R satisfies:

    (aB^-1 bB)([aB bB^-1(b)]_R) (x) a_R = b_R (x) (aA bA^-1)([aA^-1 bA(a)]_R)

    checked as one matrix identity B (x) A -> B (x) A; None when it holds,
    otherwise the first differing entry.
    """
    field = A.field
    da, db = A.dim, B.dim
    idA = Matrix.identity(field, da)
    idB = Matrix.identity(field, db)
    swap = _swap_matrix(field, da, db)  # A (x) B -> B (x) A
    ab_binv = mat_mul(B.alpha, mat_inverse(B.beta))
    abinv_b = mat_mul(mat_inverse(B.alpha), B.beta)
    aA_bAinv = mat_mul(A.alpha, mat_inverse(A.beta))
    aAinv_bA = mat_mul(mat_inverse(A.alpha), A.beta)
    lhs = mat_mul(
        kron(abinv_b, idA),
        mat_mul(swap, mat_mul(tw.R, kron(ab_binv, idA))),
    )
    rhs = mat_mul(
        kron(idB, aA_bAinv),
        mat_mul(swap, mat_mul(tw.R, kron(idB, aAinv_bA))),
    )
    return mat_eq_witness(lhs, rhs)


def _ttp_square_map(A: BiHomAlgebra, B: BiHomAlgebra, tw: TwistingMap) -> Matrix:
    """T((a (x) b) (x) (a' (x) b')) = (a (x) b_R) (x) (a'_R (x) b')."""
    field = A.field
    da, db = A.dim, B.dim
    d = da * db
    T = Matrix.zero(field, d * d, d * d)
    for i in range(da):
        for j in range(db):
            for k in range(da):
                for l in range(db):
                    src = (i * db + j) * d + (k * db + l)
                    for ((kr, jr), c) in tw.pairs(j, k):
                        T.e[(i * db + jr) * d + (kr * db + l)][src] = c
    return T


def ttp_pseudotwistor(A: BiHomAlgebra, B: BiHomAlgebra, tw: TwistingMap) -> Pseudotwistor:
    """The pseudotwistor on the tensor-product algebra realizing A (x)_R B.

    The companions conjugate T applied to the outer slots by
    alpha_B beta_B^-1 on the first B leg (first companion) and by
    alpha_A^-1 beta_A on the third A leg (second companion).  Dense
    matrices on the cube of A (x) B: keep the factors small.
    """
    field = A.field
    da, db = A.dim, B.dim
    d = da * db
    T = _ttp_square_map(A, B, tw)
    t13 = Matrix.zero(field, d**3, d**3)
    for i in range(da):
        for j in range(db):
            left = i * db + j
            for mid in range(d):
                for m in range(da):
                    for n in range(db):
                        src = (left * d + mid) * d + (m * db + n)
                        for ((mr, jr), c) in tw.pairs(j, m):
                            dst = ((i * db + jr) * d + mid) * d + (mr * db + n)
                            t13.e[dst][src] = c
    idA = Matrix.identity(field, da)
    idB = Matrix.identity(field, db)
    id_dd = Matrix.identity(field, d * d)
    conj_b = kron(idA, mat_mul(mat_inverse(B.alpha), B.beta))
    conj_b_inv = kron(idA, mat_mul(B.alpha, mat_inverse(B.beta)))
    t1 = mat_mul(kron(conj_b, id_dd), mat_mul(t13, kron(conj_b_inv, id_dd)))
    conj_a = kron(mat_mul(A.alpha, mat_inverse(A.beta)), idB)
    conj_a_inv = kron(mat_mul(mat_inverse(A.alpha), A.beta), idB)
    t2 = mat_mul(kron(id_dd, conj_a), mat_mul(t13, kron(id_dd, conj_a_inv)))
    ident = Matrix.identity(field, d)
    return Pseudotwistor(
        T=T, T1tilde=t1, T2tilde=t2, alpha2=ident, beta2=ident.copy()
    )


def twisted_tensor_product(A: BiHomAlgebra, B: BiHomAlgebra, tw: TwistingMap) -> BiHomAlgebra:
    """A (x)_R B: product (a (x) b)(a' (x) b') = a a'_R (x) b_R b'.

    Built through the induced pseudotwistor T on (A (x) B)^(x)2, so the
    product is mu_{A (x) B} o T; ttp_pseudotwistor supplies the companions
    when the full pseudotwistor equations are wanted.  The twisting map is
    checked first.
    """
    report = check_twisting_map(A, B, tw)
    if not report.ok:
        raise TwistingMapInvalid(
            f"twisting map fails {report.failures()[0].axiom}", report=report
        )
    plain = tensor_product(A, B)
    field = A.field
    d = A.dim * B.dim
    T = _ttp_square_map(A, B, tw)
    mu_mat = mat_mul(tensor_as_matrix(plain.mu), T)
    mu2 = matrix_as_tensor(field, mu_mat, d, d)
    out = BiHomAlgebra(
        field=field,
        dim=d,
        mu=mu2,
        alpha=plain.alpha,
        beta=plain.beta,
        unit=None,
        labels=list(plain.labels),
    )
    if plain.unit is not None:
        out.unit = _validated_unit(out, plain.unit)
    return out


def lift_twisting_map(
    A: BiHomAlgebra,
    B: BiHomAlgebra,
    P: TwistingMap,
    alphaA: Matrix,
    betaA: Matrix,
    alphaB: Matrix,
    betaB: Matrix,
) -> TwistingMap:
    """Lift a classical twisting map P along Yau twists of both factors:

    U(b (x) a) = betaA^-1(betaA(a)_P) (x) alphaB^-1(alphaB(b)_P).

    A and B are classical algebras (identity structure maps); the classical
    twisting-map equations for P, the commutation conditions, and the
    automorphism hypotheses are verified.
    """
    field = A.field
    da, db = A.dim, B.dim
    for name, m, alg in (
        ("alphaA", alphaA, A),
        ("betaA", betaA, A),
        ("alphaB", alphaB, B),
        ("betaB", betaB, B),
    ):
        _require_multiplicative(alg.mu, m, name)
        try:
            mat_inverse(m)
        except Singular:
            raise HypothesisFailure(f"{name} must be an isomorphism")
    _require_pairwise_commuting([("alphaA", alphaA), ("betaA", betaA)])
    _require_pairwise_commuting([("alphaB", alphaB), ("betaB", betaB)])

    idA = Matrix.identity(field, da)
    idB = Matrix.identity(field, db)
    muA = tensor_as_matrix(A.mu)
    muB = tensor_as_matrix(B.mu)
    R = P.R
    lhs = mat_mul(R, kron(idB, muA))
    rhs = mat_mul(kron(muA, idB), mat_mul(kron(idA, R), kron(R, idA)))
    w = mat_eq_witness(lhs, rhs)
    if w is not None:
        raise HypothesisFailure("P fails the classical left twisting equation", w)
    lhs = mat_mul(R, kron(muB, idA))
    rhs = mat_mul(kron(idA, muB), mat_mul(kron(R, idB), kron(idB, R)))
    w = mat_eq_witness(lhs, rhs)
    if w is not None:
        raise HypothesisFailure("P fails the classical right twisting equation", w)
    w = mat_eq_witness(
        mat_mul(kron(alphaA, alphaB), R), mat_mul(R, kron(alphaB, alphaA))
    )
    if w is not None:
        raise HypothesisFailure("P does not intertwine the alphas", w)
    w = mat_eq_witness(
        mat_mul(kron(betaA, betaB), R), mat_mul(R, kron(betaB, betaA))
    )
    if w is not None:
        raise HypothesisFailure("P does not intertwine the betas", w)

    U = mat_mul(
        kron(mat_inverse(betaA), mat_inverse(alphaB)),
        mat_mul(R, kron(alphaB, betaA)),
    )
    return TwistingMap(R=U, dimA=da, dimB=db)
