"""Exact integer matrix algebra for the alternating-involution generators.

The generator ``K(j)`` is the identity matrix with row ``j`` replaced by the
alternating row ``r(j) = ((-1)^j, (-1)^(j+1), ..., (-1)^(j+n-1))``.  All
arithmetic here is exact; entries are checked against the signed 64-bit range
and equality is entry-wise, with no tolerances anywhere.

Indices on the public surface are 1-based (matching the usual notation for
the generators); storage is 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

INT64_MAX = 2**63 - 1


class UnitEntryError(ArithmeticError):
    """A product of generators produced an entry outside {-1, 0, 1}."""


def sign_pow(exponent: int) -> int:
    """(-1)**exponent without floating point."""
    return -1 if exponent & 1 else 1


def _check_dim(n: int) -> None:
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")


def _check_index(n: int, j: int) -> None:
    _check_dim(n)
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")


def alternating_row(n: int, j: int) -> tuple[int, ...]:
    """The +/-1 row of length ``n`` starting with (-1)^j at column 1."""
    _check_index(n, j)
    return tuple(sign_pow(j + k) for k in range(n))


@dataclass(frozen=True)
class SmallIntMatrix:
    """Dense n x n integer matrix, row-major, immutable and hashable."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if len(self.entries) != self.n * self.n:
            raise ValueError(
                f"expected {self.n * self.n} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SmallIntMatrix":
        n = len(rows)
        flat: list[int] = []
        for row in rows:
            if len(row) != n:
                raise ValueError("rows must form a square matrix")
            flat.extend(int(v) for v in row)
        return cls(n, tuple(flat))

    def entry(self, row: int, col: int) -> int:
        """1-based entry access."""
        _check_index(self.n, row)
        _check_index(self.n, col)
        return self.entries[(row - 1) * self.n + (col - 1)]

    def row(self, row: int) -> tuple[int, ...]:
        _check_index(self.n, row)
        start = (row - 1) * self.n
        return self.entries[start : start + self.n]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.row(i) for i in range(1, self.n + 1))

    def max_abs(self) -> int:
        return max(abs(v) for v in self.entries)

    def is_identity(self) -> bool:
        return self == identity_matrix(self.n)

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v:3d}" for v in row) for row in self.rows())


def identity_matrix(n: int) -> SmallIntMatrix:
    _check_dim(n)
    return SmallIntMatrix(
        n, tuple(1 if i == j else 0 for i in range(n) for j in range(n))
    )


def zero_matrix(n: int) -> SmallIntMatrix:
    _check_dim(n)
    return SmallIntMatrix(n, (0,) * (n * n))


def basis_outer(n: int, j: int, ell: int) -> SmallIntMatrix:
    """Rank-one matrix e_j e_ell^T: a single 1 at position (j, ell)."""
    _check_index(n, j)
    _check_index(n, ell)
    entries = [0] * (n * n)
    entries[(j - 1) * n + (ell - 1)] = 1
    return SmallIntMatrix(n, tuple(entries))


def pivot_outer(n: int, j: int) -> SmallIntMatrix:
    """Rank-one matrix e_j r_j: the zero matrix with row j set to r_j."""
    entries = [0] * (n * n)
    entries[(j - 1) * n : j * n] = alternating_row(n, j)
    return SmallIntMatrix(n, tuple(entries))


def make_k(n: int, j: int) -> SmallIntMatrix:
    """Generator K(j): identity with row j replaced by the alternating row."""
    _check_index(n, j)
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[j - 1] = list(alternating_row(n, j))
    return SmallIntMatrix.from_rows(rows)


def mat_mul(a: SmallIntMatrix, b: SmallIntMatrix) -> SmallIntMatrix:
    """Exact product; raises OverflowError past the signed 64-bit range."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    n = a.n
    ae, be = a.entries, b.entries
    out: list[int] = []
    for i in range(n):
        arow = ae[i * n : (i + 1) * n]
        for j in range(n):
            v = sum(arow[k] * be[k * n + j] for k in range(n))
            if abs(v) > INT64_MAX:
                raise OverflowError("matrix product exceeds 64-bit range")
            out.append(v)
    return SmallIntMatrix(n, tuple(out))


def mat_add(a: SmallIntMatrix, b: SmallIntMatrix) -> SmallIntMatrix:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    return SmallIntMatrix(a.n, tuple(x + y for x, y in zip(a.entries, b.entries)))


def mat_scale(a: SmallIntMatrix, c: int) -> SmallIntMatrix:
    return SmallIntMatrix(a.n, tuple(c * x for x in a.entries))


def mat_pow(a: SmallIntMatrix, k: int) -> SmallIntMatrix:
    if k < 0:
        raise ValueError("negative powers are not supported")
    acc = identity_matrix(a.n)
    for _ in range(k):
        acc = mat_mul(acc, a)
    return acc


def matrix_order(m: SmallIntMatrix, limit: int = 10_000) -> int:
    """Smallest k >= 1 with m^k = Id; ValueError if none up to ``limit``."""
    acc = m
    for k in range(1, limit + 1):
        if acc.is_identity():
            return k
        acc = mat_mul(acc, m)
    raise ValueError(f"no multiplicative order found up to {limit}")


def assert_unit_entries(m: SmallIntMatrix) -> SmallIntMatrix:
    """Enforce the group invariant that entries stay in {-1, 0, 1}."""
    if m.max_abs() > 1:
        raise UnitEntryError("group element has an entry outside {-1, 0, 1}")
    return m


def k_word_product(n: int, js: Sequence[int]) -> SmallIntMatrix:
    """Brute-force product K(j1) K(j2) ... by repeated multiplication.

    This is the oracle against which every closed-form product is checked.
    The unit-entry invariant is asserted after each step.
    """
    acc = identity_matrix(n)
    for j in js:
        acc = assert_unit_entries(mat_mul(acc, make_k(n, j)))
    return acc


def product_closed_form(n: int, js: Sequence[int]) -> SmallIntMatrix:
    """Product of distinct generators built directly, with no multiplication.

    For a tuple (j1, ..., js) of distinct indices: zero out the diagonal at
    every listed index, put (-1)^(j+l) at position (j, l) for each adjacent
    pair (j, l), and replace row js with the alternating row r(js).
    """
    _check_dim(n)
    js = tuple(int(j) for j in js)
    if not 1 <= len(js) <= n:
        raise ValueError(f"tuple length must be in 1..{n}, got {len(js)}")
    for j in js:
        _check_index(n, j)
    if len(set(js)) != len(js):
        raise ValueError("indices must be distinct")

    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    for j in js:
        rows[j - 1][j - 1] = 0
    for j, ell in zip(js, js[1:]):
        rows[j - 1][ell - 1] += sign_pow(j + ell)
    last = js[-1]
    alt = alternating_row(n, last)
    rows[last - 1] = [v + w for v, w in zip(rows[last - 1], alt)]
    return assert_unit_entries(SmallIntMatrix.from_rows(rows))


def full_cycle_matrix(
    n: int, direction: Literal["up", "down"] = "down"
) -> SmallIntMatrix:
    """K(n)...K(1) for ``down`` or K(1)...K(n) for ``up``.

    Either product has multiplicative order exactly n + 1.
    """
    _check_dim(n)
    if direction == "down":
        js: Iterable[int] = range(n, 0, -1)
    elif direction == "up":
        js = range(1, n + 1)
    else:
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    return product_closed_form(n, tuple(js))


def shift_power(n: int, k: int) -> SmallIntMatrix:
    """k-th power of the sub-diagonal shift: ones on the k-th sub-diagonal.

    k = 0 gives the identity and k = n the zero matrix.
    """
    _check_dim(n)
    if not 0 <= k <= n:
        raise ValueError(f"shift power must be in 0..{n}, got {k}")
    entries = [0] * (n * n)
    for ell in range(k + 1, n + 1):
        entries[(ell - 1) * n + (ell - k - 1)] = 1
    return SmallIntMatrix(n, tuple(entries))
