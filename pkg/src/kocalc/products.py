"""Tensor products of even real spectral triples, two real-structure choices.

Both modes share

    D     = D1 (x) I + Omega1 (x) D2,
    Omega = Omega1 (x) Omega2,

and differ in the real structure:

    natural   J = J1 (x) J2            (linear part K1 (x) K2),
    modified  J = J1 (x) J2 Omega2     (linear part K1 (x) K2 conj(Omega2)).

Requiring a single uniform sign for J against both terms of D forces a
consistency constraint between the component signs; when it fails there
is no uniform sign at all, which the matrix level exhibits on a concrete
vector whenever both component Dirac operators are nonzero.

Composition rules (the middle line is the constraint):

    natural             modified
    eps   = eps1*eps2   eps   = eps1*eps2*eps2''
    eps'  = eps1'  and  eps1' = eps1''*eps2'      /  eps1' = -eps1''*eps2'
    eps'' = eps1''*eps2''
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    IncompleteSigns,
    IndefiniteSign,
    InvalidComponent,
    NoChirality,
)
from .linalg import Antiunitary, ExactMatrix
from .triples import (
    EPSILON_TABLE,
    FiniteSpectralTriple,
    SignTriple,
    extract_signs,
    ko_from_signs,
    validate_triple,
)


class ProductMode(enum.Enum):
    NATURAL = "natural"
    MODIFIED = "modified"


@dataclass(frozen=True)
class Incompatible:
    """Returned by predicted_signs when the consistency constraint fails."""

    violated_relation: str


def product_triple(
    t1: FiniteSpectralTriple, t2: FiniteSpectralTriple, mode: ProductMode
) -> FiniteSpectralTriple:
    """Build the tensor-product triple; both factors must be valid and even."""
    if t1.chirality is None:
        raise NoChirality("first factor needs a chirality operator")
    if t2.chirality is None:
        raise NoChirality("second factor needs a chirality operator")
    for which, t in (("first", t1), ("second", t2)):
        report = validate_triple(t)
        if not report.passed:
            names = ", ".join(c.name for c in report.failures)
            raise InvalidComponent(f"{which} factor fails validation: {names}")

    eye1 = ExactMatrix.identity(t1.dim)
    eye2 = ExactMatrix.identity(t2.dim)
    dirac = t1.dirac.kron(eye2) + t1.chirality.kron(t2.dirac)
    omega = t1.chirality.kron(t2.chirality)
    if mode is ProductMode.NATURAL:
        k2 = t2.real_structure.k
    elif mode is ProductMode.MODIFIED:
        k2 = t2.real_structure.precompose_linear(t2.chirality).k
    else:
        raise ValueError(f"unknown mode {mode!r}")
    k = t1.real_structure.k.kron(k2)
    gens = tuple(a.kron(eye2) for a in t1.algebra_gens) + tuple(
        eye1.kron(b) for b in t2.algebra_gens
    )
    return FiniteSpectralTriple(
        dim=t1.dim * t2.dim,
        algebra_gens=gens,
        dirac=dirac,
        chirality=omega,
        real_structure=Antiunitary(k),
    )


def predicted_signs(
    s1: SignTriple, s2: SignTriple, mode: ProductMode
) -> SignTriple | Incompatible:
    """Compose two sign triples, or report the violated constraint.

    The first factor must be even (eps1'' present) and both eps' must be
    known; the modified mode additionally needs eps2'' because the
    second factor's chirality enters the real structure itself.  A
    missing eps2'' in the natural mode simply leaves the product without
    a chirality sign.
    """
    if s1.eps_dprime is None:
        raise IncompleteSigns("composition needs eps'' of the first factor")
    if s1.eps_prime is None or s2.eps_prime is None:
        raise IncompleteSigns("composition needs eps' of both factors")

    if mode is ProductMode.NATURAL:
        required = s1.eps_dprime * s2.eps_prime
        if s1.eps_prime != required:
            return Incompatible(
                "natural-mode constraint eps1' = eps1''*eps2' fails: "
                f"{s1.eps_prime:+d} != {s1.eps_dprime:+d}*{s2.eps_prime:+d}"
            )
        eps = s1.eps * s2.eps
        eps_dprime = None if s2.eps_dprime is None else s1.eps_dprime * s2.eps_dprime
        return SignTriple(eps, s1.eps_prime, eps_dprime)

    if mode is ProductMode.MODIFIED:
        if s2.eps_dprime is None:
            raise IncompleteSigns(
                "modified composition needs eps'' of the second factor"
            )
        required = -s1.eps_dprime * s2.eps_prime
        if s1.eps_prime != required:
            return Incompatible(
                "modified-mode constraint eps1' = -eps1''*eps2' fails: "
                f"{s1.eps_prime:+d} != -({s1.eps_dprime:+d})*{s2.eps_prime:+d}"
            )
        eps = s1.eps * s2.eps * s2.eps_dprime
        eps_dprime = s1.eps_dprime * s2.eps_dprime
        return SignTriple(eps, s1.eps_prime, eps_dprime)

    raise ValueError(f"unknown mode {mode!r}")


# --- matrix-level verification -----------------------------------------------------

def _fill_eps_prime_from_table(s: SignTriple) -> tuple[SignTriple, bool]:
    """Substitute the table's eps' for an even factor whose D = 0."""
    if s.eps_prime is not None:
        return s, False
    sigma = ko_from_signs(s, "even")
    return SignTriple(s.eps, EPSILON_TABLE[sigma].eps_prime, s.eps_dprime), True


def _indefinite_witness(t: FiniteSpectralTriple) -> str:
    """A concrete vector on which J D differs from both +D J and -D J."""
    k, d = t.real_structure.k, t.dirac
    plus = k @ d.conj() - d @ k    # zero iff J and D commute
    minus = k @ d.conj() + d @ k   # zero iff they anticommute
    n = t.dim

    def col_nonzero(m: ExactMatrix, j: int) -> bool:
        return any(m.entry(i, j) for i in range(n))

    for j in range(n):
        if col_nonzero(plus, j) and col_nonzero(minus, j):
            return f"basis vector e{j}: (JD - DJ)e{j} != 0 and (JD + DJ)e{j} != 0"
    j_plus = next(j for j in range(n) if col_nonzero(plus, j))
    j_minus = next(j for j in range(n) if col_nonzero(minus, j))
    # The two column supports are disjoint here, so the sum cannot cancel.
    return (
        f"vector e{j_plus} + e{j_minus}: (JD - DJ)v != 0 and (JD + DJ)v != 0"
    )


@dataclass(frozen=True)
class ProductVerification:
    """Side-by-side record of the sign calculus and the matrix computation."""

    mode: ProductMode
    sigma1: int
    sigma2: int
    component_signs: tuple[SignTriple, SignTriple]
    prediction: SignTriple | Incompatible
    predicted_sigma: int | None
    matrix_signs: SignTriple | None
    indefinite_witness: str | None
    matrix_ko: int | None
    eps_prime_evidence: str
    status: str  # confirmed-compatible | confirmed-incompatible | not-falsifiable | disagreement
    agreement: bool
    product_dim: int
    notes: tuple[str, ...] = field(default=())


def verify_product(
    t1: FiniteSpectralTriple, t2: FiniteSpectralTriple, mode: ProductMode
) -> ProductVerification:
    """Predict the product signs from the components, then measure them.

    When the prediction is Incompatible and both component Dirac
    operators are nonzero, the built product must exhibit the failure
    (J with no uniform sign against D) on a concrete vector.  If a
    component Dirac vanishes, the conflicting term of D is absent and
    the incompatibility is not falsifiable at matrix level; the report
    says so and records which component supplied the eps' evidence.
    """
    s1 = extract_signs(t1)
    s2 = extract_signs(t2)
    sigma1 = ko_from_signs(s1, "even")
    sigma2 = ko_from_signs(s2, "even")

    notes: list[str] = []
    s1f, filled1 = _fill_eps_prime_from_table(s1)
    s2f, filled2 = _fill_eps_prime_from_table(s2)
    if filled1:
        notes.append(f"component 1 eps' taken from the table row sigma={sigma1} (its D = 0)")
    if filled2:
        notes.append(f"component 2 eps' taken from the table row sigma={sigma2} (its D = 0)")

    d1_nonzero = not t1.dirac.is_zero()
    d2_nonzero = not t2.dirac.is_zero()
    if d1_nonzero and d2_nonzero:
        evidence = "components 1 and 2"
    elif d1_nonzero:
        evidence = "component 1 only (component 2 has D = 0)"
    elif d2_nonzero:
        evidence = "component 2 only (component 1 has D = 0)"
    else:
        evidence = "none (both component Dirac operators are 0)"

    prediction = predicted_signs(s1f, s2f, mode)
    product = product_triple(t1, t2, mode)
    predicted_sigma = None if isinstance(prediction, Incompatible) else (sigma1 + sigma2) % 8

    matrix_signs: SignTriple | None
    witness: str | None = None
    try:
        matrix_signs = extract_signs(product)
    except IndefiniteSign:
        matrix_signs = None
        witness = _indefinite_witness(product)

    matrix_ko = None
    if matrix_signs is not None:
        try:
            matrix_ko = ko_from_signs(matrix_signs, "even")
        except Exception:  # NoTableMatch: recorded as None
            notes.append(f"matrix signs {matrix_signs} match no table row")

    if isinstance(prediction, SignTriple):
        ok = (
            matrix_signs is not None
            and matrix_signs.eps == prediction.eps
            and matrix_signs.eps_dprime == prediction.eps_dprime
            and (matrix_signs.eps_prime is None
                 or matrix_signs.eps_prime == prediction.eps_prime)
            and matrix_ko == predicted_sigma
        )
        if matrix_signs is not None and matrix_signs.eps_prime is None:
            notes.append("product D = 0: eps' not measurable, compared on (eps, eps'') only")
        status = "confirmed-compatible" if ok else "disagreement"
        agreement = ok
    else:
        if matrix_signs is None:
            status = "confirmed-incompatible"
            agreement = True
        elif not (d1_nonzero and d2_nonzero):
            status = "not-falsifiable"
            agreement = True
            notes.append(
                "calculus says incompatible, but a vanishing component Dirac removes "
                f"the conflicting term of D; matrix signs {matrix_signs} reflect "
                "the surviving term only and mod-8 additivity does not apply"
            )
        else:
            status = "disagreement"
            agreement = False

    return ProductVerification(
        mode=mode,
        sigma1=sigma1,
        sigma2=sigma2,
        component_signs=(s1, s2),
        prediction=prediction,
        predicted_sigma=predicted_sigma,
        matrix_signs=matrix_signs,
        indefinite_witness=witness,
        matrix_ko=matrix_ko,
        eps_prime_evidence=evidence,
        status=status,
        agreement=agreement,
        product_dim=product.dim,
        notes=tuple(notes),
    )
