"""Exact dense linear algebra over Q and prime fields.

Scalars are ``Fraction`` over the rationals and ``int`` in ``[0, p)`` over
F_p.  Pivoting is always "first nonzero entry in column order", so echelon
forms and kernel bases are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """``"q"`` for Q, ``"fp:P"`` for F_P."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(None)
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"

    # scalar arithmetic ------------------------------------------------
    def coerce(self, value) -> Fraction | int:
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"{value} has no image in F{self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def normalize(self, value):
        """Cheap coercion for values that are usually already canonical."""
        if self.p is None:
            return value if type(value) is Fraction else Fraction(value)
        return value if type(value) is int and 0 <= value < self.p else self.coerce(value)

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))


QQ = FieldSpec(None)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple = field(repr=False)
    field: FieldSpec = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], f: FieldSpec = QQ, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(f.coerce(v) for r in rows for v in r)
        return cls(len(rows), ncols, flat, f)

    @classmethod
    def zeros(cls, rows: int, cols: int, f: FieldSpec = QQ) -> "Matrix":
        return cls(rows, cols, (f.zero(),) * (rows * cols), f)

    @classmethod
    def identity(cls, n: int, f: FieldSpec = QQ) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], f)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
                                self.field, cols=self.rows)

    def apply(self, v: Sequence) -> list:
        f = self.field
        out = []
        for i in range(self.rows):
            acc = f.zero()
            for j in range(self.cols):
                a = self.entries[i * self.cols + j]
                if a and v[j]:
                    acc = f.add(acc, f.mul(a, v[j]))
            out.append(acc)
        return out


def row_echelon(rows: Iterable[Sequence], ncols: int, f: FieldSpec = QQ) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a list of rows.

    Returns the nonzero reduced rows and their pivot columns.  Input rows are
    coerced into ``f`` and are not modified.
    """
    work = [[f.coerce(v) for v in r] for r in rows]
    pivots: list[int] = []
    reduced: list[list] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = f.inv(work[r][c])
        prow = [f.mul(inv, v) if v else v for v in work[r]]
        work[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                fac = work[i][c]
                row_i = work[i]
                for j in nz:
                    row_i[j] = f.sub(row_i[j], f.mul(fac, prow[j]))
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    reduced = work[:r]
    return reduced, pivots


def rank(m: Matrix, f: FieldSpec | None = None) -> int:
    f = f or m.field
    _, piv = row_echelon(m.to_rows(), m.cols, f)
    return len(piv)


def nullspace_basis(m: Matrix, f: FieldSpec | None = None) -> list[list]:
    """Basis of the right kernel, one vector per non-pivot column."""
    f = f or m.field
    red, piv = row_echelon(m.to_rows(), m.cols, f)
    pivset = set(piv)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [f.zero()] * m.cols
        v[free] = f.one()
        for row, pc in zip(red, piv):
            if row[free]:
                v[pc] = f.neg(row[free])
        basis.append(v)
    for v in basis:
        assert not any(m.apply(v)), "kernel vector does not annihilate"
    return basis


def solve(m: Matrix, b: Sequence, f: FieldSpec | None = None) -> list | None:
    """A solution of ``m x = b`` with free variables set to zero, or None."""
    f = f or m.field
    aug = [m.row(i) + [b[i]] for i in range(m.rows)]
    red, piv = row_echelon(aug, m.cols + 1, f)
    if piv and piv[-1] == m.cols:
        return None
    x = [f.zero()] * m.cols
    for row, pc in zip(red, piv):
        x[pc] = row[m.cols]
    return x


def reduce_against(vec: Sequence, echelon: Sequence[Sequence], pivots: Sequence[int], f: FieldSpec = QQ) -> list:
    """Eliminate the pivot columns of a reduced echelon basis from ``vec``."""
    out = list(vec)
    for row, pc in zip(echelon, pivots):
        c = out[pc]
        if c:
            out = [f.sub(a, f.mul(c, b)) if b else a for a, b in zip(out, row)]
    return out


def complement_basis(candidates: Sequence[Sequence], subspace: Sequence[Sequence], ncols: int,
                     f: FieldSpec = QQ) -> list[list]:
    """Vectors spanning span(candidates) modulo span(subspace).

    Each candidate is reduced against the echelon form of ``subspace``; the
    reduced vectors are then put in echelon form themselves, which makes the
    chosen representatives canonical.
    """
    sub_red, sub_piv = row_echelon(subspace, ncols, f)
    reduced = [reduce_against(c, sub_red, sub_piv, f) for c in candidates]
    reduced = [r for r in reduced if any(r)]
    red, _ = row_echelon(reduced, ncols, f)
    return red
