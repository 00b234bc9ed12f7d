"""Symbolic form of group elements as signed-permutation-like matrices.

Every element of the group generated by the alternating involutions is a
matrix with exactly one entry (-1)^(j+k) per row at column sigma(j), except
that when the flag ``eps`` is set, the pivot row ``h`` carries the full
alternating row instead.  An element is therefore named by the triple
(sigma, h, eps), and multiplication/inversion close over that format, so the
group can be handled without any matrix arithmetic.  The matrix product is
the oracle that pins the composition convention: in a product a*b the
permutation of ``a`` acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from aughts.intmat import SmallIntMatrix, alternating_row, sign_pow


class NotGroupElementError(ValueError):
    """The matrix is not of either recognized signed-permutation shape."""


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; ``images[j-1]`` is the image of j."""

    images: tuple[int, ...]

    @classmethod
    def of(cls, images) -> "Permutation":
        imgs = tuple(int(v) for v in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        return cls(imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, j: int) -> int:
        return self.images[j - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite j -> other(self(j)): self acts first."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for j, v in enumerate(self.images, start=1):
            inv[v - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, start=1))

    def order(self) -> int:
        """Multiplicative order via cycle lengths."""
        from math import lcm

        seen = [False] * self.degree
        result = 1
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            length = 0
            j = start
            while not seen[j - 1]:
                seen[j - 1] = True
                j = self.images[j - 1]
                length += 1
            result = lcm(result, length)
        return result


@dataclass(frozen=True)
class SignedPermElement:
    """Group element named by (sigma, h, eps); eps=0 elements carry h=1.

    The pivot plays no role when ``eps`` is 0, so it is normalized to 1
    there; structural equality then coincides with group equality and the
    triples can be used as set/dict keys.
    """

    sigma: Permutation
    h: int
    eps: int

    @classmethod
    def of(cls, sigma: Permutation, h: int, eps: int) -> "SignedPermElement":
        if eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {eps}")
        if not 1 <= h <= sigma.degree:
            raise ValueError(f"pivot {h} out of range 1..{sigma.degree}")
        if eps == 0:
            h = 1
        return cls(sigma, h, eps)

    @property
    def degree(self) -> int:
        return self.sigma.degree

    def __str__(self) -> str:
        return format_element(self)


def identity_element(n: int) -> SignedPermElement:
    return SignedPermElement.of(Permutation.identity(n), 1, 0)


def generator(n: int, j: int) -> SignedPermElement:
    """The alternating involution K(j) in symbolic form."""
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    return SignedPermElement.of(Permutation.identity(n), j, 1)


def msih_mul(a: SignedPermElement, b: SignedPermElement) -> SignedPermElement:
    """Product a*b in the symbolic format.

    Four cases by the flag pair.  With sigma = a.sigma, tau = b.sigma, the
    composite permutation is j -> tau(sigma(j)); when both flags are set and
    the pivots collide (sigma^-1(b.h) == a.h) the flags cancel, otherwise
    the composite permutation is additionally patched at the two pivots.
    """
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    sigma, tau = a.sigma, b.sigma
    ts = sigma.then(tau)
    if a.eps == 0 and b.eps == 0:
        return SignedPermElement.of(ts, 1, 0)
    if a.eps == 1 and b.eps == 0:
        return SignedPermElement.of(ts, a.h, 1)
    sv = sigma.inverse().apply(b.h)
    if a.eps == 0:
        return SignedPermElement.of(ts, sv, 1)
    u = a.h
    if sv == u:
        return SignedPermElement.of(ts, 1, 0)
    images = list(ts.images)
    images[u - 1], images[sv - 1] = images[sv - 1], images[u - 1]
    return SignedPermElement.of(Permutation(tuple(images)), sv, 1)


def msih_inverse(a: SignedPermElement) -> SignedPermElement:
    inv = a.sigma.inverse()
    if a.eps == 0:
        return SignedPermElement.of(inv, 1, 0)
    return SignedPermElement.of(inv, a.sigma.apply(a.h), 1)


def element_order(a: SignedPermElement) -> int:
    acc = a
    ident = identity_element(a.degree)
    for k in range(1, 10_000):
        if acc == ident:
            return k
        acc = msih_mul(acc, a)
    raise ValueError("element order not found (not a finite-order element?)")


def to_matrix(e: SignedPermElement, n: int | None = None) -> SmallIntMatrix:
    """Matrix form: entry (j, sigma(j)) = (-1)^(j+sigma(j)), except that the
    pivot row is the alternating row when the flag is set."""
    if n is None:
        n = e.degree
    if n != e.degree:
        raise ValueError(f"degree mismatch: element has {e.degree}, asked {n}")
    entries = [0] * (n * n)
    for j in range(1, n + 1):
        if e.eps == 1 and j == e.h:
            entries[(j - 1) * n : j * n] = alternating_row(n, j)
        else:
            k = e.sigma.apply(j)
            entries[(j - 1) * n + (k - 1)] = sign_pow(j + k)
    return SmallIntMatrix(n, tuple(entries))


def matrix_to_msih(m: SmallIntMatrix) -> SignedPermElement:
    """Decode a matrix back to its unique normalized (sigma, h, eps) triple.

    Raises NotGroupElementError when the matrix is of neither shape.
    """
    n = m.n
    if m.max_abs() > 1:
        raise NotGroupElementError("entries outside {-1, 0, 1}")

    def _nonzero_cols(row: tuple[int, ...]) -> list[int]:
        return [k + 1 for k, v in enumerate(row) if v != 0]

    rows = m.rows()
    full_rows = [j for j in range(1, n + 1) if len(_nonzero_cols(rows[j - 1])) > 1]

    if not full_rows:
        images = []
        for j in range(1, n + 1):
            cols = _nonzero_cols(rows[j - 1])
            if len(cols) != 1:
                raise NotGroupElementError(f"row {j} has no nonzero entry")
            (k,) = cols
            if rows[j - 1][k - 1] == sign_pow(j + k):
                images.append(k)
            elif n == 1 and rows[0] == alternating_row(1, 1):
                return SignedPermElement.of(Permutation.identity(1), 1, 1)
            else:
                raise NotGroupElementError(f"wrong sign at ({j}, {k})")
        if sorted(images) != list(range(1, n + 1)):
            raise NotGroupElementError("columns do not form a permutation")
        return SignedPermElement.of(Permutation.of(images), 1, 0)

    if len(full_rows) != 1:
        raise NotGroupElementError("more than one full row")
    h = full_rows[0]
    if rows[h - 1] != alternating_row(n, h):
        raise NotGroupElementError(f"row {h} is not the alternating row")
    images = [0] * n
    for j in range(1, n + 1):
        if j == h:
            continue
        cols = _nonzero_cols(rows[j - 1])
        if len(cols) != 1:
            raise NotGroupElementError(f"row {j} has no single nonzero entry")
        (k,) = cols
        if rows[j - 1][k - 1] != sign_pow(j + k):
            raise NotGroupElementError(f"wrong sign at ({j}, {k})")
        images[j - 1] = k
    missing = set(range(1, n + 1)) - set(images)
    if len(missing) != 1:
        raise NotGroupElementError("columns do not complete to a permutation")
    images[h - 1] = missing.pop()
    return SignedPermElement.of(Permutation.of(images), h, 1)


_ELEMENT_RE = re.compile(
    r"M\((?:sigma|σ)=\[(?P<imgs>[0-9,\s]*)\];h=(?P<h>\d+);eps=(?P<eps>[01])\)"
)


def format_element(e: SignedPermElement) -> str:
    imgs = ",".join(str(v) for v in e.sigma.images)
    return f"M(sigma=[{imgs}];h={e.h};eps={e.eps})"


def parse_element(text: str) -> SignedPermElement:
    match = _ELEMENT_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"cannot parse element text: {text!r}")
    images = [int(v) for v in match.group("imgs").split(",") if v.strip()]
    return SignedPermElement.of(
        Permutation.of(images), int(match.group("h")), int(match.group("eps"))
    )
