"""Exact linear algebra over Z, Q and prime fields.

Everything here works on Python integers, so entries never overflow.  The
module provides a small dense integer matrix type, Smith normal form, ranks
over the supported rings, and the invariants of a homology quotient
``ker(boundary_in) / im(boundary_out)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class ContractError(RuntimeError):
    """A caller broke a precondition that well-formed input always satisfies."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: ``"Z"``, ``"Q"`` or ``"F"`` together with a prime ``p``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind in ("Z", "Q"):
            if self.p is not None:
                raise ValueError(f"ring {self.kind} takes no characteristic")
        elif self.kind == "F":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"prime field needs a prime characteristic, got {self.p!r}")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse ``z``, ``q`` or ``fp:<p>`` (case-insensitive)."""
        t = text.strip().lower()
        if t == "z":
            return INTEGERS
        if t == "q":
            return RATIONALS
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad prime in ring {text!r}") from None
            return cls("F", p)
        raise ValueError(f"unknown ring {text!r}; expected z, q or fp:<p>")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def token(self) -> str:
        return f"fp:{self.p}" if self.kind == "F" else self.kind.lower()

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind


INTEGERS = RingSpec("Z")
RATIONALS = RingSpec("Q")


def prime_field(p: int) -> RingSpec:
    return RingSpec("F", p)


class IntMatrix:
    """Dense, immutable matrix of Python integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Sequence[int]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        data = tuple(tuple(int(x) for x in row) for row in data)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"entries do not match a {rows}x{cols} shape")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(size, size, [[int(i == j) for j in range(size)] for i in range(size)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    def transpose(self) -> IntMatrix:
        if not self.rows:
            return IntMatrix(self.cols, 0, [[] for _ in range(self.cols)])
        return IntMatrix(self.cols, self.rows, zip(*self._data))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = list(zip(*other._data)) if other.rows else [()] * other.cols
        data = [[sum(a * b for a, b in zip(row, col)) for col in cols_b] for row in self._data]
        return IntMatrix(self.rows, other.cols, data)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, [[-x for x in row] for row in self._data])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._data)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix({self.rows}, {self.cols}, {self.tolist()!r})"


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def _min_abs_position(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    best_val = 0
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            v = abs(row[j])
            if v and (best is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def _smith_diagonal(a: list[list[int]]) -> list[int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diagonal = []
    for t in range(min(rows, cols)):
        while True:
            pos = _min_abs_position(a, t)
            if pos is None:
                return diagonal
            i, j = pos
            a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
            pivot = a[t][t]
            clean = True
            top = a[t]
            for i in range(t + 1, rows):
                x = a[i][t]
                if x:
                    q = x // pivot
                    row = a[i]
                    for k in range(t, cols):
                        row[k] -= q * top[k]
                    if row[t]:
                        clean = False
            for j in range(t + 1, cols):
                x = top[j]
                if x:
                    q = x // pivot
                    for row in a[t:]:
                        row[j] -= q * row[t]
                    if top[j]:
                        clean = False
            if not clean:
                continue
            # Divisibility fix-up: fold an offending row into the pivot row.
            bad = next(
                (i for i in range(t + 1, rows) if any(a[i][k] % pivot for k in range(t + 1, cols))),
                None,
            )
            if bad is None:
                diagonal.append(abs(pivot))
                break
            for k in range(t, cols):
                top[k] += a[bad][k]
    return diagonal


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Invariant factors d1 | d2 | ... | dr of ``m`` (zeros omitted).

    Elimination always pivots on a nonzero entry of minimal absolute value,
    ties broken by row-major position, so the computation is deterministic.
    """
    return SmithForm(tuple(_smith_diagonal(m.tolist())))


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    a = [[x % p for x in row] for row in rows]
    ncols = len(a[0]) if a else 0
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        top = a[rank] = [x * inv % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], top)]
        rank += 1
    return rank


def _rank_rational(rows: list[list[int]]) -> int:
    # Fraction-free elimination; rows are divided by their content to limit growth.
    from math import gcd

    a = [list(row) for row in rows]
    ncols = len(a[0]) if a else 0
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        top = a[rank]
        for i in range(rank + 1, len(a)):
            f = a[i][c]
            if f:
                row = [top[c] * x - f * y for x, y in zip(a[i], top)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                a[i] = [x // g for x in row] if g > 1 else row
        rank += 1
    return rank


def rank_over(m: IntMatrix, ring: RingSpec) -> int:
    """Rank of ``m`` with entries read in ``ring`` (rational rank for Z and Q)."""
    if ring.kind == "F":
        return _rank_mod_p(m.tolist(), ring.p)
    return _rank_rational(m.tolist())


@dataclass(frozen=True)
class GroupInvariants:
    """Isomorphism type ``R^free_rank (+) Z/t1 (+) Z/t2 ...`` over ``ring``."""

    ring: RingSpec
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.ring.is_field and self.torsion:
            raise ValueError("vector spaces carry no torsion")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            base = str(self.ring)
            parts.append(base if self.free_rank == 1 else f"{base}^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " (+) ".join(parts) if parts else "0"


def kernel_coordinates(boundary_in: IntMatrix, boundary_out: IntMatrix) -> tuple[int, IntMatrix]:
    """Express ``im(boundary_out)`` in a Z-basis of ``ker(boundary_in)``.

    ``boundary_in`` is column-reduced by unimodular operations ``V``; the
    trailing zero columns of ``boundary_in @ V`` are a basis of the kernel.
    The inverse operations are applied to the rows of ``boundary_out``, so the
    returned matrix holds the kernel coordinates of each image generator.

    Returns ``(kernel_rank, coordinates)``.
    """
    a = boundary_in.tolist()
    b = boundary_out.tolist()
    m = boundary_in.cols
    pivot = 0
    for r in range(len(a)):
        row_r = a[r]
        while pivot < m:
            nz = [j for j in range(pivot, m) if row_r[j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: (abs(row_r[j]), j))
            if len(nz) == 1:
                if j0 != pivot:
                    for row in a:
                        row[pivot], row[j0] = row[j0], row[pivot]
                    b[pivot], b[j0] = b[j0], b[pivot]
                pivot += 1
                break
            for j in nz:
                if j == j0:
                    continue
                q = row_r[j] // row_r[j0]
                for row in a:
                    row[j] -= q * row[j0]
                src = b[j]
                b[j0] = [x + q * y for x, y in zip(b[j0], src)]
    if any(any(row) for row in b[:pivot]):
        raise ContractError("image is not contained in the kernel")
    return m - pivot, IntMatrix(m - pivot, boundary_out.cols, b[pivot:])


def quotient_invariants(boundary_in: IntMatrix, boundary_out: IntMatrix, ring: RingSpec) -> GroupInvariants:
    """Invariants of ``ker(boundary_in) / im(boundary_out)`` over ``ring``.

    ``boundary_in`` maps the middle module out (shape ``a x m``) and
    ``boundary_out`` maps into it (shape ``m x b``); their composite must vanish.
    """
    if boundary_in.cols != boundary_out.rows:
        raise ContractError(
            f"operators do not share a middle module: {boundary_in.shape} vs {boundary_out.shape}"
        )
    if not (boundary_in @ boundary_out).is_zero():
        raise ContractError("chain condition violated: composite boundary is nonzero")
    m = boundary_in.cols
    if ring.is_field:
        free = m - rank_over(boundary_in, ring) - rank_over(boundary_out, ring)
        return GroupInvariants(ring, free)
    k, coords = kernel_coordinates(boundary_in, boundary_out)
    snf = smith_normal_form(coords)
    return GroupInvariants(ring, k - snf.rank, tuple(d for d in snf.diagonal if d > 1))
