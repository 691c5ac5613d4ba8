"""Gamma-matrix representations of the real Clifford algebras Cl(p,q).

Conventions, fixed once and used everywhere:

* metric: eta = diag(+1 x p, -1 x q), generators satisfy
  G_a G_b + G_b G_a = 2 eta_ab * I (so spacelike generators square to +I);
* hermiticity: G_a^dagger = eta_aa G_a;
* mod-8 signature: sigma = (p - q) mod 8.

The construction is deterministic.  The Euclidean base case n = 2 is
G_1 = sigma_x, G_2 = sigma_z; the recursion n -> n + 2 tensors every
existing generator with sigma_x and appends I (x) sigma_z and
I (x) sigma_y.  The last q generators are then multiplied by i, which
flips their squares to -I and makes them anti-hermitian.  Matrices have
dimension 2^(n/2) and every entry lies in {0, +-1, +-i}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import OddDimensionUnsupported, RealStructureNotFound
from .linalg import Antiunitary, ExactMatrix, GR_I, GaussianRational

SIGMA_X = ExactMatrix.from_rows([[0, 1], [1, 0]])
SIGMA_Y = ExactMatrix.from_rows([
    [GaussianRational(), GaussianRational(Fraction(0), Fraction(-1))],
    [GaussianRational(Fraction(0), Fraction(1)), GaussianRational()],
])
SIGMA_Z = ExactMatrix.from_rows([[1, 0], [0, -1]])


def signature(p: int, q: int) -> int:
    """The mod-8 signature (p - q) mod 8."""
    return (p - q) % 8


@dataclass(frozen=True)
class CliffordRep:
    """A concrete gamma-matrix representation of Cl(p,q)."""

    p: int
    q: int
    gammas: tuple[ExactMatrix, ...]
    metric: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return self.gammas[0].rows


def _euclidean_gammas(n: int) -> list[ExactMatrix]:
    if n == 2:
        return [SIGMA_X, SIGMA_Z]
    prev = _euclidean_gammas(n - 2)
    eye = ExactMatrix.identity(prev[0].rows)
    out = [g.kron(SIGMA_X) for g in prev]
    out.append(eye.kron(SIGMA_Z))
    out.append(eye.kron(SIGMA_Y))
    return out


@lru_cache(maxsize=None)
def build_gammas(p: int, q: int) -> CliffordRep:
    """Construct the canonical generators of Cl(p,q) for even p + q >= 2."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    n = p + q
    if n % 2 != 0:
        raise OddDimensionUnsupported(f"p + q must be even, got {n}")
    if n < 2:
        raise ValueError("need at least two generators")
    gammas = _euclidean_gammas(n)
    for a in range(p, n):
        gammas[a] = gammas[a].scaled(GR_I)
    metric = (1,) * p + (-1,) * q
    return CliffordRep(p, q, tuple(gammas), metric)


def volume_element(rep: CliffordRep) -> ExactMatrix:
    """The ordered product G_1 G_2 ... G_n; unitary, squares to +-I."""
    theta = rep.gammas[0]
    for g in rep.gammas[1:]:
        theta = theta @ g
    return theta


def theta_square_sign(p: int, q: int) -> int:
    """Sign s with (G_1 ... G_n)^2 = s * I.

    Reordering the doubled product costs (-1)^(n(n-1)/2) and each
    generator square contributes eta_aa; for even n this equals
    (-1)^((p-q)/2).
    """
    n = p + q
    return -1 if (n * (n - 1) // 2 + q) % 2 else 1


def chirality(rep: CliffordRep) -> ExactMatrix:
    """The hermitian involution that anticommutes with every generator.

    Theta itself works when sigma mod 8 is 0 or 4 (Theta^2 = +I there);
    for sigma mod 8 in {2, 6} it is i*Theta.
    """
    sigma = signature(rep.p, rep.q)
    theta = volume_element(rep)
    if sigma % 4 == 0:
        return theta
    return theta.scaled(GR_I)


def _lex_subset_products(rep: CliffordRep) -> Iterator[tuple[tuple[int, ...], ExactMatrix]]:
    """All ordered generator products G_S, subsets in lexicographic order.

    Subsets of {1..n} are visited as increasing tuples sorted
    lexicographically: (), (1,), (1,2), ..., (1,n), (2,), ...  Each
    product extends its prefix by one right-multiplication.
    """
    n = rep.n

    def rec(prefix: tuple[int, ...], mat: ExactMatrix, start: int):
        yield prefix, mat
        for j in range(start, n + 1):
            yield from rec(prefix + (j,), mat @ rep.gammas[j - 1], j + 1)

    yield from rec((), ExactMatrix.identity(rep.dim), 1)


@lru_cache(maxsize=None)
def find_real_structure(rep: CliffordRep) -> Antiunitary:
    """The first monomial antiunitary commuting with the whole real algebra.

    Candidates are c * G_S for S a subset of {1..n} and c in {1, i},
    scanned in lexicographic subset order with c = 1 tried first.  The
    antiunitary J: v -> K conj(v) commutes with every real-linear
    combination of generator products exactly when
    K conj(G_a) = G_a K for all a.  (The scalar c drops out of that
    condition, so the c = i branch is kept only to honour the declared
    search space.)
    """
    for _subset, base in _lex_subset_products(rep):
        for c in (None, GR_I):
            k = base if c is None else base.scaled(c)
            if all((k @ g.conj()) == (g @ k) for g in rep.gammas):
                return Antiunitary(k)
    raise RealStructureNotFound(f"no monomial real structure for Cl({rep.p},{rep.q})")


# --- classification -------------------------------------------------------------

_BASE_BY_SIGMA = {
    0: "R", 1: "R+R", 2: "R", 3: "C",
    4: "H", 5: "H+H", 6: "H", 7: "C",
}
_BASE_REAL_DIM = {"R": 1, "C": 2, "H": 4}

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass(frozen=True)
class AlgebraClass:
    """Cl(p,q) as a matrix algebra over R, C or H (or two such summands)."""

    base: str            # "R", "C", "H", "R+R" or "H+H"
    matrix_size: int     # k in M_k(base summand)
    unitary_group_label: str
    connected_note: str | None = None

    @property
    def summands(self) -> int:
        return 2 if "+" in self.base else 1

    def algebra_name(self) -> str:
        stem = self.base.split("+")[0]
        if self.matrix_size == 1:
            one = stem
        else:
            one = f"M{str(self.matrix_size).translate(_SUBSCRIPTS)}({stem})"
        return f"{one} ⊕ {one}" if self.summands == 2 else one


def _unitary_label(stem: str, k: int) -> str:
    if stem == "R":
        return f"O({k})"
    if stem == "C":
        return f"U({k})"
    return f"Sp({k})"


def classify_algebra(p: int, q: int) -> AlgebraClass:
    """Table-driven classification of Cl(p,q) from sigma and the real dimension.

    The base division algebra depends only on sigma mod 8; the matrix
    size k is then pinned by dim_R Cl(p,q) = 2^(p+q) = (summands) * k^2 *
    dim_R(base).
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    sigma = signature(p, q)
    base = _BASE_BY_SIGMA[sigma]
    stem = base.split("+")[0]
    summands = 2 if "+" in base else 1
    total = 2 ** (p + q)
    k_sq, rem = divmod(total, _BASE_REAL_DIM[stem] * summands)
    if rem:
        raise ValueError(f"real dimension {total} is not divisible as required")
    k = math.isqrt(k_sq)
    if k * k != k_sq:
        raise ValueError(f"matrix size squared {k_sq} is not a perfect square")
    label = _unitary_label(stem, k)
    if summands == 2:
        label = f"{label} × {label}"
    if stem == "H" and k == 1:
        label = f"{label} ≅ SU(2) × SU(2)" if summands == 2 else f"{label} ≅ SU(2)"
    note = "SO(2) ≅ U(1)" if stem == "R" and k == 2 and summands == 1 else None
    return AlgebraClass(base=base, matrix_size=k, unitary_group_label=label, connected_note=note)
