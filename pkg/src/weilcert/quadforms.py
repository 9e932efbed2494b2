"""Binary quadratic form arithmetic.

Reduced-form enumeration and class numbers h(D) for negative discriminants,
plus the representation solver that decides whether a prime p can be
written as x^2 + n*y^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import integer_sqrt, is_perfect_square
from .errors import ResourceLimitError

DEFAULT_RESIDUE_SCAN_BOUND = 10_000_000


@dataclass(frozen=True)
class QuadForm:
    """The form a*X^2 + b*X*Y + c*Y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_positive_definite(self) -> bool:
        return self.discriminant < 0 and self.a > 0

    @property
    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1


@dataclass(frozen=True)
class Representation:
    """A witness p = x^2 + n*y^2."""

    n: int
    p: int
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x + self.n * self.y * self.y != self.p:
            raise ValueError(f"{self.x}^2 + {self.n}*{self.y}^2 != {self.p}")
        if self.y < 1 or self.x < 0:
            raise ValueError("representation requires x >= 0 and y >= 1")


def is_reduced(f: QuadForm) -> bool:
    """Gauss-reduced: |b| <= a <= c, with b >= 0 on either boundary."""
    if not f.is_positive_definite:
        raise ValueError(f"{f} is not positive definite")
    if not abs(f.b) <= f.a <= f.c:
        return False
    if (abs(f.b) == f.a or f.a == f.c) and f.b < 0:
        return False
    return True


def _check_discriminant(d: int) -> None:
    if d >= 0:
        raise ValueError(f"discriminant must be negative, got {d}")
    if d % 4 not in (0, 1):
        raise ValueError(f"discriminant must be 0 or 1 mod 4, got {d}")


def reduced_forms(d: int, primitive_only: bool = True) -> list[QuadForm]:
    """All reduced positive definite forms of discriminant d < 0.

    One form per equivalence class: a runs up to sqrt(|d|/3) and b over
    (-a, a] with the matching parity, which hits each reduced form once.
    """
    _check_discriminant(d)
    forms = []
    for a in range(1, integer_sqrt(abs(d) // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            f = QuadForm(a, b, c)
            if primitive_only and not f.is_primitive:
                continue
            forms.append(f)
    return forms


def class_number(d: int) -> int:
    """h(d): number of classes of primitive positive definite forms."""
    return len(reduced_forms(d, primitive_only=True))


def represent_x2_ny2(p: int, n: int) -> Representation | None:
    """Smallest-y representation p = x^2 + n*y^2 with y >= 1, if any.

    Scans y ascending while n*y^2 < p and reports the first hit, so the
    output is deterministic. Returns None when no representation exists.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    y = 1
    while n * y * y < p:
        x2 = p - n * y * y
        if is_perfect_square(x2):
            return Representation(n=n, p=p, x=integer_sqrt(x2), y=y)
        y += 1
    return None


def properly_representable(
    m: int, d: int, scan_bound: int = DEFAULT_RESIDUE_SCAN_BOUND
) -> bool:
    """Whether some primitive form of discriminant d properly represents m.

    Equivalent to d being a square mod 4m; decided by scanning residues
    t in [0, 2m] (t and 4m-t square to the same class).
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if d % 4 not in (0, 1):
        raise ValueError(f"discriminant must be 0 or 1 mod 4, got {d}")
    if 4 * m > scan_bound:
        raise ResourceLimitError(f"modulus 4*{m} exceeds scan bound {scan_bound}")
    mod = 4 * m
    return any((t * t - d) % mod == 0 for t in range(2 * m + 1))
