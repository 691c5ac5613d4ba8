"""Finite real spectral triples and the mod-8 sign table.

A triple bundles a hermitian Dirac operator D, an optional chirality
Omega (hermitian, squares to I, anticommutes with D), an antiunitary
real structure J, and an optional set of algebra generators.  Three
signs classify J:

    J o J         = eps * identity,
    J D           = eps'  D J   (only measurable when D != 0),
    J Omega       = eps'' Omega J  (only when a chirality exists).

The sign table below maps (eps, eps', eps'') to the mod-8 class sigma;
even classes are looked up on (eps, eps''), odd classes on (eps, eps').
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .clifford import build_gammas, chirality, find_real_structure, signature
from .errors import (
    IncompleteSigns,
    IndefiniteSign,
    NoChirality,
    NoHermitianGenerator,
    NoTableMatch,
    NotSignInvolutive,
    RestrictionUndefined,
)
from .linalg import (
    Antiunitary,
    ExactMatrix,
    as_sign_times_identity,
    real_fixed_dim,
    real_fixed_dim_constrained,
)


def _sign_str(s: int | None) -> str:
    if s is None:
        return "."
    return "+1" if s > 0 else "-1"


@dataclass(frozen=True)
class SignTriple:
    """The classifying signs (eps, eps', eps''); absent components are None."""

    eps: int
    eps_prime: int | None = None
    eps_dprime: int | None = None

    def __post_init__(self) -> None:
        for name in ("eps", "eps_prime", "eps_dprime"):
            v = getattr(self, name)
            if v is not None and v not in (1, -1):
                raise ValueError(f"{name} must be +1, -1 or None, got {v!r}")
        if self.eps is None:  # pragma: no cover - eps has no None default
            raise ValueError("eps is required")

    def __str__(self) -> str:
        return f"({_sign_str(self.eps)}, {_sign_str(self.eps_prime)}, {_sign_str(self.eps_dprime)})"


#: sigma -> (eps, eps', eps''); odd rows have no eps''.
EPSILON_TABLE: dict[int, SignTriple] = {
    0: SignTriple(+1, +1, +1),
    1: SignTriple(+1, +1, None),
    2: SignTriple(+1, +1, -1),
    3: SignTriple(-1, -1, None),
    4: SignTriple(-1, +1, +1),
    5: SignTriple(-1, +1, None),
    6: SignTriple(-1, +1, -1),
    7: SignTriple(+1, -1, None),
}

_EVEN_LOOKUP = {(+1, +1): 0, (+1, -1): 2, (-1, +1): 4, (-1, -1): 6}
_ODD_LOOKUP = {(+1, +1): 1, (-1, -1): 3, (-1, +1): 5, (+1, -1): 7}


@dataclass(frozen=True)
class FiniteSpectralTriple:
    """A finite-dimensional real spectral triple on C^dim."""

    dim: int
    algebra_gens: tuple[ExactMatrix, ...]
    dirac: ExactMatrix
    chirality: ExactMatrix | None
    real_structure: Antiunitary


DiracMode = Literal["zero", "gamma1"]


@lru_cache(maxsize=None)
def canonical_triple(p: int, q: int, dirac_mode: DiracMode = "zero") -> FiniteSpectralTriple:
    """The reference triple on the Cl(p,q) gamma representation.

    The Dirac operator is either 0 or the first generator; the latter is
    hermitian only when p >= 1, so ``gamma1`` with p = 0 is rejected.
    The algebra-generator list is left empty: chirality anticommutes
    with every gamma, so the gammas themselves can never serve as
    algebra elements, and none of the sign calculus needs an algebra
    action.
    """
    rep = build_gammas(p, q)
    if dirac_mode == "gamma1":
        if p < 1:
            raise NoHermitianGenerator(
                f"Cl({p},{q}) has no hermitian generator; use dirac_mode='zero'"
            )
        dirac = rep.gammas[0]
    elif dirac_mode == "zero":
        dirac = ExactMatrix.zeros(rep.dim, rep.dim)
    else:
        raise ValueError(f"unknown dirac_mode {dirac_mode!r}")
    return FiniteSpectralTriple(
        dim=rep.dim,
        algebra_gens=(),
        dirac=dirac,
        chirality=chirality(rep),
        real_structure=find_real_structure(rep),
    )


# --- validation ----------------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            suffix = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"{mark}  {c.name}{suffix}")
        return "\n".join(lines)


def _relation_sign(k: ExactMatrix, op: ExactMatrix) -> int | None:
    """Sign s with K conj(op) = s * op K, or None if neither sign holds."""
    lhs = k @ op.conj()
    rhs = op @ k
    if lhs == rhs:
        return 1
    if lhs == -rhs:
        return -1
    return None


def _first_mismatch(a: ExactMatrix, b: ExactMatrix) -> str:
    for i in range(a.rows):
        for j in range(a.cols):
            if a.entry(i, j) != b.entry(i, j):
                return f"entry ({i},{j}): {a.entry(i, j)} != {b.entry(i, j)}"
    return "no mismatch"


def validate_triple(t: FiniteSpectralTriple) -> ValidationReport:
    """Check every defining axiom; pure, returns a per-axiom report."""
    checks: list[AxiomCheck] = []

    def add(name: str, passed: bool, witness: str | None = None) -> None:
        checks.append(AxiomCheck(name, passed, None if passed else witness))

    d, om, k = t.dirac, t.chirality, t.real_structure.k

    shape_ok = d.is_square and d.rows == t.dim and k.rows == t.dim
    if om is not None:
        shape_ok = shape_ok and om.is_square and om.rows == t.dim
    add("operator_shapes", shape_ok, "operator dimensions disagree with dim")
    if not shape_ok:
        return ValidationReport(tuple(checks))

    add("dirac_hermitian", d.is_hermitian(), _first_mismatch(d, d.dagger()))

    if om is not None:
        add("chirality_hermitian", om.is_hermitian(), _first_mismatch(om, om.dagger()))
        add("chirality_involution", (om @ om).is_identity(),
            _first_mismatch(om @ om, ExactMatrix.identity(t.dim)))
        if d.is_zero():
            add("dirac_anticommutes_chirality", True, None)
        else:
            anti = d @ om + om @ d
            add("dirac_anticommutes_chirality", anti.is_zero(),
                _first_mismatch(anti, ExactMatrix.zeros(t.dim, t.dim)))
        for idx, a in enumerate(t.algebra_gens):
            comm = om @ a - a @ om
            add(f"chirality_commutes_gen_{idx}", comm.is_zero(),
                f"[Omega, gen {idx}] != 0: " + _first_mismatch(comm, ExactMatrix.zeros(t.dim, t.dim)))

    add("real_structure_unitary", k.is_unitary(), "K^dagger K != I")

    sq_sign = as_sign_times_identity(t.real_structure.squared())
    add("real_structure_sign_involutive", sq_sign is not None,
        "K conj(K) is not +-identity")

    if d.is_zero():
        add("real_structure_vs_dirac", True, None)
    else:
        add("real_structure_vs_dirac", _relation_sign(k, d) is not None,
            "J neither commutes nor anticommutes uniformly with D")
    if om is not None:
        add("real_structure_vs_chirality", _relation_sign(k, om) is not None,
            "J neither commutes nor anticommutes uniformly with Omega")

    kd = k.dagger()
    for i, a in enumerate(t.algebra_gens):
        for j, b in enumerate(t.algebra_gens):
            conj_b = k @ b.transpose() @ kd  # J b^dagger J^{-1} as a linear operator
            comm = a @ conj_b - conj_b @ a
            add(f"order_zero_{i}_{j}", comm.is_zero(),
                f"[gen {i}, J gen{j}^dagger J^-1] != 0")

    return ValidationReport(tuple(checks))


# --- sign extraction and table lookup -------------------------------------------

def extract_signs(t: FiniteSpectralTriple) -> SignTriple:
    """Measure (eps, eps', eps'') directly from the operators.

    eps' is absent when D = 0 and eps'' when there is no chirality;
    nothing is ever assumed from the table here.
    """
    k = t.real_structure.k
    eps = as_sign_times_identity(t.real_structure.squared())
    if eps is None:
        raise NotSignInvolutive("J squared is not +-identity")
    if t.dirac.is_zero():
        eps_prime = None
    else:
        eps_prime = _relation_sign(k, t.dirac)
        if eps_prime is None:
            raise IndefiniteSign("J has no uniform commutation sign with D")
    if t.chirality is None:
        eps_dprime = None
    else:
        eps_dprime = _relation_sign(k, t.chirality)
        if eps_dprime is None:
            raise IndefiniteSign("J has no uniform commutation sign with Omega")
    return SignTriple(eps, eps_prime, eps_dprime)


def ko_from_signs(signs: SignTriple, parity: Literal["even", "odd"]) -> int:
    """Invert the sign table.

    Even classes are determined by (eps, eps''); eps' is redundant there
    and, when present, must be +1 (every even row has eps' = +1).  Odd
    classes are determined by (eps, eps').
    """
    if parity == "even":
        if signs.eps_dprime is None:
            raise IncompleteSigns("even lookup needs eps''")
        if signs.eps_prime is not None and signs.eps_prime != +1:
            raise NoTableMatch(
                f"even rows all carry eps' = +1; got {signs}"
            )
        return _EVEN_LOOKUP[(signs.eps, signs.eps_dprime)]
    if parity == "odd":
        if signs.eps_prime is None:
            raise IncompleteSigns("odd lookup needs eps'")
        return _ODD_LOOKUP[(signs.eps, signs.eps_prime)]
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


# --- twisting and restriction -----------------------------------------------------

def twist_real_structure(t: FiniteSpectralTriple) -> FiniteSpectralTriple:
    """Replace J by J o Omega (linear part K conj(Omega)).

    The signs transform as (eps, eps', eps'') -> (eps*eps'', -eps', eps''),
    so a twisted even triple with D != 0 leaves the sign table; twisting
    twice restores J exactly since Omega^2 = I.
    """
    if t.chirality is None:
        raise NoChirality("twisting needs a chirality operator")
    return FiniteSpectralTriple(
        dim=t.dim,
        algebra_gens=t.algebra_gens,
        dirac=t.dirac,
        chirality=t.chirality,
        real_structure=t.real_structure.precompose_linear(t.chirality),
    )


def restrict_majorana_weyl(t: FiniteSpectralTriple) -> tuple[int, int]:
    """Real dimensions of {J v = v} and of {J v = v, Omega v = v}.

    Defined only when eps = +1 (so J has fixed vectors) and eps'' = +1
    (so J preserves the chirality eigenspaces).
    """
    signs = extract_signs(t)
    if signs.eps != +1 or signs.eps_dprime != +1:
        raise RestrictionUndefined(
            f"needs eps = +1 and eps'' = +1, got {signs}"
        )
    assert t.chirality is not None  # eps_dprime != None implies a chirality
    full = real_fixed_dim(t.real_structure)
    chiral = real_fixed_dim_constrained(t.real_structure, (t.chirality,))
    return full, chiral
