"""Exact dense linear algebra over the Gaussian rationals.

Entries are complex numbers with rational real and imaginary parts,
held in canonical lowest terms by ``fractions.Fraction``.  Equality is
structural, every value is immutable, and nothing in this module (or
anywhere else in the package) ever touches a float.

The sizes involved are tiny (matrices up to 256 x 256), so the matrix
product is a plain triple loop with zero-skipping; the representations
built on top of this module are extremely sparse, which makes the skip
worthwhile.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, NotInvolutive

Rationalish = Union[int, Fraction]
Scalarish = Union["GaussianRational", int, Fraction]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_fraction(x: Rationalish) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """A complex number a + b*i with a, b exact rationals."""

    re: Fraction = _F0
    im: Fraction = _F0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        # Purely real values hash like their Fraction so that cross-type
        # equality with int/Fraction keeps dict semantics sound.
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @staticmethod
    def coerce(x: Scalarish) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_as_fraction(x))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalarish) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if self.im == 1:
            unit = "i"
        elif self.im == -1:
            unit = "-i"
        else:
            unit = f"{self.im}i"
        if not self.re:
            return unit
        joiner = "+" if self.im > 0 else ""
        return f"{self.re}{joiner}{unit}"


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(_F1)
GR_MINUS_ONE = GaussianRational(Fraction(-1))
GR_I = GaussianRational(_F0, _F1)


@dataclass(frozen=True)
class ExactMatrix:
    """An immutable rows x cols matrix of Gaussian rationals, row-major."""

    rows: int
    cols: int
    entries: tuple[GaussianRational, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(f"matrix shape must be positive, got {self.rows}x{self.cols}")
        ents = tuple(GaussianRational.coerce(e) for e in self.entries)
        if len(ents) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(ents)}"
            )
        object.__setattr__(self, "entries", ents)

    # --- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalarish]]) -> "ExactMatrix":
        r = len(rows)
        if r == 0:
            raise DimensionMismatch("matrix needs at least one row")
        c = len(rows[0])
        flat: list[GaussianRational] = []
        for row in rows:
            if len(row) != c:
                raise DimensionMismatch("ragged rows")
            flat.extend(GaussianRational.coerce(x) for x in row)
        return cls(r, c, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(GR_ONE if i == j else GR_ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (GR_ZERO,) * (rows * cols))

    @classmethod
    def basis_column(cls, n: int, j: int) -> "ExactMatrix":
        """The j-th standard basis vector (0-indexed) as an n x 1 column."""
        return cls(n, 1, tuple(GR_ONE if i == j else GR_ZERO for i in range(n)))

    # --- access ---------------------------------------------------------

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    # --- arithmetic -------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other, "add")
        return ExactMatrix(self.rows, self.cols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other, "subtract")
        return ExactMatrix(self.rows, self.cols,
                           tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scaled(self, s: Scalarish) -> "ExactMatrix":
        c = GaussianRational.coerce(s)
        return ExactMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __mul__(self, s: Scalarish) -> "ExactMatrix":
        return self.scaled(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out: list[GaussianRational] = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc_re = _F0
                acc_im = _F0
                for t in range(k):
                    x = arow[t]
                    if not (x.re or x.im):
                        continue
                    y = b[t * m + j]
                    if not (y.re or y.im):
                        continue
                    acc_re += x.re * y.re - x.im * y.im
                    acc_im += x.re * y.im + x.im * y.re
                out.append(GaussianRational(acc_re, acc_im))
        return ExactMatrix(n, m, tuple(out))

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, blocks ordered row-major by this matrix."""
        rr, cc = other.rows, other.cols
        rows_out, cols_out = self.rows * rr, self.cols * cc
        out = [GR_ZERO] * (rows_out * cols_out)
        for i in range(self.rows):
            for j in range(self.cols):
                x = self.entry(i, j)
                if not x:
                    continue
                for s in range(rr):
                    base = (i * rr + s) * cols_out + j * cc
                    orow = other.row(s)
                    for t in range(cc):
                        y = orow[t]
                        if y:
                            out[base + t] = x * y
        return ExactMatrix(rows_out, cols_out, tuple(out))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)))

    def conj(self) -> "ExactMatrix":
        """Entrywise complex conjugate."""
        return ExactMatrix(self.rows, self.cols, tuple(a.conjugate() for a in self.entries))

    def dagger(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return self.transpose().conj()

    # --- predicates ---------------------------------------------------------

    def is_identity(self) -> bool:
        return self.is_square and self == ExactMatrix.identity(self.rows)

    def is_hermitian(self) -> bool:
        return self.is_square and self == self.dagger()

    def is_unitary(self) -> bool:
        return self.is_square and (self.dagger() @ self).is_identity()

    def _same_shape(self, other: "ExactMatrix", what: str) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"cannot {what} {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )

    def __str__(self) -> str:
        cells = [[str(self.entry(i, j)) for j in range(self.cols)] for i in range(self.rows)]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for i in range(self.rows):
            body = "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.cols))
            lines.append(f"[ {body} ]")
        return "\n".join(lines)


# --- operation-style aliases ---------------------------------------------------

def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b


def mat_kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a.kron(b)


def mat_dagger(a: ExactMatrix) -> ExactMatrix:
    return a.dagger()


def mat_conj(a: ExactMatrix) -> ExactMatrix:
    return a.conj()


def as_sign_times_identity(m: ExactMatrix) -> int | None:
    """Return +1 or -1 when m is that sign times the identity, else None."""
    if not m.is_square:
        return None
    if m.is_identity():
        return 1
    if (-m).is_identity():
        return -1
    return None


# --- rank over the Gaussian rationals ----------------------------------------

def rank(m: ExactMatrix) -> int:
    """Rank by exact Gaussian elimination.

    Pivots are chosen deterministically: columns left to right, and within
    a column the first row (top to bottom) with a nonzero entry.
    """
    grid = [list(m.row(i)) for i in range(m.rows)]
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if grid[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        pivot = grid[r][c]
        for i in range(r + 1, m.rows):
            if grid[i][c]:
                factor = grid[i][c] / pivot
                row_i = grid[i]
                row_r = grid[r]
                for j in range(c, m.cols):
                    row_i[j] = row_i[j] - factor * row_r[j]
        r += 1
        if r == m.rows:
            break
    return r


def kernel_dim(m: ExactMatrix) -> int:
    return m.cols - rank(m)


# --- antiunitary operators ---------------------------------------------------

@dataclass(frozen=True)
class Antiunitary:
    """An antiunitary operator v -> k @ conj(v) with unitary linear part k.

    Composition of two antiunitaries is linear: the linear part of
    j1 o j2 is k1 @ conj(k2).  In particular ``squared`` returns the
    linear operator j o j.
    """

    k: ExactMatrix

    def __post_init__(self) -> None:
        if not self.k.is_square:
            raise DimensionMismatch("antiunitary linear part must be square")
        if not self.k.is_unitary():
            raise ValueError("antiunitary linear part must be unitary")

    @property
    def dim(self) -> int:
        return self.k.rows

    def apply(self, v: ExactMatrix) -> ExactMatrix:
        return self.k @ v.conj()

    def squared(self) -> ExactMatrix:
        return self.k @ self.k.conj()

    def compose(self, other: "Antiunitary") -> ExactMatrix:
        return self.k @ other.k.conj()

    def precompose_linear(self, u: ExactMatrix) -> "Antiunitary":
        """The antiunitary j o u for a unitary u (apply u first)."""
        return Antiunitary(self.k @ u.conj())


def _re_im(m: ExactMatrix) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    re = [[m.entry(i, j).re for j in range(m.cols)] for i in range(m.rows)]
    im = [[m.entry(i, j).im for j in range(m.cols)] for i in range(m.rows)]
    return re, im


def _fixed_point_system(j: Antiunitary, fixed_ops: Sequence[ExactMatrix]) -> ExactMatrix:
    """Real-linear system whose kernel is {v : j(v) = v and M v = v for each M}.

    Writing v = x + i y and k = A + i B, the fixed-point equation
    k @ conj(v) = v splits into (A - I) x + B y = 0 and B x - (A + I) y = 0.
    Each additional linear constraint M = P + i Q contributes
    (P - I) x - Q y = 0 and Q x + (P - I) y = 0.  All blocks are real, so
    the kernel dimension over the rationals is the real dimension sought.
    """
    n = j.dim
    a, b = _re_im(j.k)
    rows: list[list[Fraction]] = []
    for i in range(n):
        rows.append([a[i][t] - (_F1 if t == i else _F0) for t in range(n)] + b[i])
    for i in range(n):
        rows.append(b[i] + [-(a[i][t] + (_F1 if t == i else _F0)) for t in range(n)])
    for m_op in fixed_ops:
        if m_op.rows != n or m_op.cols != n:
            raise DimensionMismatch("constraint operator shape does not match the antiunitary")
        p, q = _re_im(m_op)
        for i in range(n):
            rows.append([p[i][t] - (_F1 if t == i else _F0) for t in range(n)]
                        + [-q[i][t] for t in range(n)])
        for i in range(n):
            rows.append(q[i] + [p[i][t] - (_F1 if t == i else _F0) for t in range(n)])
    return ExactMatrix.from_rows(rows)


def real_fixed_dim(j: Antiunitary) -> int:
    """Real dimension of the fixed subspace {v : j(v) = v}.

    Requires j o j = +identity; a j with j o j = -identity has no fixed
    vectors besides 0 and is rejected as NotInvolutive.
    """
    if not j.squared().is_identity():
        raise NotInvolutive("antiunitary does not square to +identity")
    return kernel_dim(_fixed_point_system(j, ()))


def real_fixed_dim_constrained(j: Antiunitary, fixed_ops: Iterable[ExactMatrix]) -> int:
    """Real dimension of {v : j(v) = v and M v = v for every M in fixed_ops}."""
    if not j.squared().is_identity():
        raise NotInvolutive("antiunitary does not square to +identity")
    return kernel_dim(_fixed_point_system(j, tuple(fixed_ops)))
