"""Weil quadruples and endomorphism-algebra certificates.

For a Sophie Germain prime g (g and 2g+1 both prime), a prime p with

    (P1)  p = x^2 + (2g+1)*y^2, p != 2g+1
    (P2)  p != 1 (mod 2g+1)

yields the quadruple (g, p, a, s) = (g, p, 2x, 2y) solving
a^2 - 4p = -(2g+1)*s^2, and from it the quadratic t^2 + a*p^((g-1)/2)*t + p^g
whose roots have modulus p^(g/2). `certify` checks the full chain of exact
identities that pin down the associated division algebra: CM discriminant
-(2g+1), splitting order g, Brauer local invariants ((g-1)/2)/g and
((g+1)/2)/g (closed form against an independent p-adic oracle), degree g,
dimension g, and automorphism order 4g+2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    hensel_sqrt,
    is_perfect_square,
    is_prime,
    legendre_symbol,
    multiplicative_order,
    padic_valuation,
    sieve_primes,
    squarefree_kernel,
)
from .errors import CertificateError, SearchExhausted
from .quadforms import Representation, represent_x2_ny2

DEFAULT_GENERAL_S_BOUND = 1_000_000


def is_sophie_germain(g: int) -> bool:
    """True iff g and 2g+1 are both prime."""
    return is_prime(g) and is_prime(2 * g + 1)


def sophie_germain_list(max_g: int) -> list[int]:
    """All Sophie Germain primes <= max_g, ascending."""
    if max_g < 2:
        return []
    sieve = sieve_primes(2 * max_g + 1)
    return [int(g) for g in sieve.primes if g <= max_g and (2 * g + 1) in sieve]


@dataclass(frozen=True)
class DimensionParam:
    """A validated Sophie Germain dimension g >= 3."""

    g: int

    def __post_init__(self):
        if self.g < 3:
            raise ValueError(f"dimension must be >= 3, got {self.g}")
        if not is_sophie_germain(self.g):
            raise ValueError(f"{self.g} is not a Sophie Germain prime")

    @property
    def n(self) -> int:
        """The companion prime 2g+1."""
        return 2 * self.g + 1

    @property
    def half_exponent(self) -> int:
        """(g-1)/2, the power of p in the linear Weil coefficient."""
        return (self.g - 1) // 2

    @property
    def aut_order(self) -> int:
        return 4 * self.g + 2

    @property
    def below_main_range(self) -> bool:
        """g = 3 is admitted but sits below the usual g >= 5 range."""
        return self.g == 3


@dataclass(frozen=True)
class WeilQuadruple:
    """(g, p, a, s) with a^2 - 4p = -(2g+1)*s^2 and gcd(a, p) = 1."""

    g: DimensionParam
    p: int
    a: int
    s: int
    p2_certified: bool = True

    def __post_init__(self):
        n = self.g.n
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.p == n:
            raise ValueError(f"p must differ from 2g+1 = {n}")
        if self.a <= 0 or self.a % 2 or self.s <= 0 or self.s % 2:
            raise ValueError("a and s must be positive even integers")
        if self.a * self.a - 4 * self.p != -n * self.s * self.s:
            raise ValueError(
                f"a^2 - 4p = {self.a**2 - 4 * self.p} != -{n}*{self.s}^2"
            )
        if math.gcd(self.a, self.p) != 1:
            raise ValueError(f"gcd(a, p) = gcd({self.a}, {self.p}) != 1")
        if self.p2_certified and self.p % n == 1:
            raise ValueError(f"p = {self.p} is 1 mod {n}")


@dataclass(frozen=True)
class WeilPolynomial:
    """Monic quadratic t^2 + b*t + c over Z, with claimed base size q."""

    b: int
    c: int
    q: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.c


def check_p1(g: DimensionParam, p: int) -> Representation | None:
    """The (P1) witness p = x^2 + (2g+1)*y^2, with p = 2g+1 excluded."""
    if p == g.n:
        return None
    return represent_x2_ny2(p, g.n)


def check_p2(g: DimensionParam, p: int) -> bool:
    """(P2): p is not 1 mod 2g+1."""
    return p % g.n != 1


def membership_Pg(g: DimensionParam, p: int) -> bool:
    """Whether prime p satisfies both (P1) and (P2)."""
    return check_p2(g, p) and check_p1(g, p) is not None


def build_quadruple(g: DimensionParam, p: int) -> WeilQuadruple | None:
    """Quadruple (g, p, 2x, 2y) from the smallest-y (P1) witness.

    None when p fails (P1) or (P2).
    """
    if not check_p2(g, p):
        return None
    rep = check_p1(g, p)
    if rep is None:
        return None
    return WeilQuadruple(g=g, p=p, a=2 * rep.x, s=2 * rep.y)


def find_smallest(g: DimensionParam, p_max: int) -> WeilQuadruple | None:
    """Quadruple for the least prime p <= p_max passing (P1) and (P2)."""
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    for p in sieve_primes(max(p_max, 2)):
        if p > p_max:
            break
        w = build_quadruple(g, p)
        if w is not None:
            return w
    return None


def scan_quadruples(g: DimensionParam, p_max: int) -> list[WeilQuadruple]:
    """All quadruples with p <= p_max, ascending p, first-hit (a, s)."""
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    out = []
    for p in sieve_primes(max(p_max, 2)):
        if p > p_max:
            break
        w = build_quadruple(g, p)
        if w is not None:
            out.append(w)
    return out


def weil_polynomial(w: WeilQuadruple) -> WeilPolynomial:
    """t^2 + a*p^((g-1)/2)*t + p^g for the quadruple."""
    g = w.g.g
    return WeilPolynomial(b=w.a * w.p ** ((g - 1) // 2), c=w.p**g, q=w.p**g)


def verify_weil_number(poly: WeilPolynomial) -> bool:
    """Both roots have squared modulus q.

    For b^2 < 4c the roots are complex conjugates with |root|^2 = c; the
    boundary b^2 = 4c gives the real double root -b/2 with (b/2)^2 = c.
    """
    return poly.c == poly.q and poly.b * poly.b <= 4 * poly.c


def cm_field_discriminant(poly: WeilPolynomial) -> int:
    """Squarefree kernel of b^2 - 4c, identifying the imaginary quadratic
    field generated by a root."""
    disc = poly.discriminant
    if disc >= 0:
        raise ValueError(f"discriminant {disc} is not negative")
    return squarefree_kernel(disc)


def splitting_order(g: DimensionParam, p: int) -> int:
    """Multiplicative order of p mod 2g+1.

    Value g certifies that p has exactly two primes above it, each with
    residue degree g, in the cyclotomic field of the (4g+2)nd roots of
    unity.
    """
    if p % g.n == 0:
        raise ValueError(f"p = {p} is not coprime to 2g+1 = {g.n}")
    return multiplicative_order(p, g.n)


def local_invariants(w: WeilQuadruple) -> tuple[Fraction, Fraction]:
    """The two nonzero Brauer invariants, ascending: ((g-1)/2)/g, ((g+1)/2)/g.

    At each of the two places above p the invariant is val(root)/val(q);
    the root valuations pair to {(g-1)/2, (g+1)/2} because the roots
    multiply to p^g while their sum a*p^((g-1)/2) has valuation (g-1)/2
    exactly (gcd(a, p) = 1).
    """
    if w.a % w.p == 0:
        raise ValueError(f"p = {w.p} divides a = {w.a}")
    g = w.g.g
    return Fraction((g - 1) // 2, g), Fraction((g + 1) // 2, g)


def valuations_oracle(w: WeilQuadruple) -> tuple[int, int]:
    """Root valuations ((+t)-place first) computed by explicit p-adic lifting.

    Lifts t with t^2 = -(2g+1) mod p^(g+1), embeds the two roots
    p^((g-1)/2) * (-a +- s*t)/2 as residues mod p^(g+1), and reads off
    their valuations. Independent of the closed form in local_invariants.
    """
    g, p, n = w.g.g, w.p, w.g.n
    if legendre_symbol(-n, p) != 1:
        raise ValueError(f"-(2g+1) = {-n} is not a square mod {p}")
    k = g + 1
    mod = p**k
    t = hensel_sqrt(-n, p, k)
    inv2 = pow(2, -1, mod)
    scale = pow(p, (g - 1) // 2, mod)
    vals = []
    for sign in (1, -1):
        root = scale * ((-w.a + sign * w.s * t) * inv2 % mod) % mod
        # valuations are at most (g+1)/2 < k, so the residue is nonzero
        vals.append(padic_valuation(root, p))
    return vals[0], vals[1]


def endomorphism_degree(invariants: tuple[Fraction, ...]) -> int:
    """Least common denominator of the local invariants.

    Invariants at every place away from p are 0 and contribute 1.
    """
    return math.lcm(*(inv.denominator for inv in invariants))


@dataclass(frozen=True)
class PlaceInvariant:
    """A Brauer local invariant tagged by its place above p.

    The place label records which canonical Hensel root image the place
    corresponds to: "+t" or "-t".
    """

    place: str
    value: Fraction


@dataclass(frozen=True)
class EndAlgebraCertificate:
    """All exact identities certified for one (g, p) pair."""

    cm_discriminant: int
    splitting_order: int
    invariants: tuple[PlaceInvariant, PlaceInvariant]  # ascending by value
    degree_d: int
    center_degree_e: int
    dimension: int
    aut_order: int


#: Ordered identity names checked by `certify`.
CHECK_NAMES = (
    "p2-congruence",
    "p1-representation",
    "quadruple-equation",
    "weil-modulus",
    "cm-discriminant",
    "splitting-order",
    "invariant-formula-vs-oracle",
    "invariant-sum-integral",
    "degree-identity",
    "dimension",
    "automorphism-order",
)


@dataclass
class CertificateRun:
    """Outcome of a certification attempt: per-identity results plus the
    assembled artifacts when everything passed."""

    g: DimensionParam
    p: int
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    quadruple: WeilQuadruple | None = None
    polynomial: WeilPolynomial | None = None
    oracle_valuations: tuple[int, int] | None = None
    certificate: EndAlgebraCertificate | None = None

    @property
    def passed(self) -> bool:
        return self.certificate is not None

    def failure(self) -> tuple[str, str] | None:
        for name, ok, detail in self.checks:
            if not ok:
                return name, detail
        return None


def run_certificate_checks(g: DimensionParam, p: int) -> CertificateRun:
    """Run every certificate identity for (g, p), stopping at the first
    failure (later identities depend on earlier artifacts)."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    run = CertificateRun(g=g, p=p)
    gg, n = g.g, g.n

    def check(name: str, ok: bool, detail: str) -> bool:
        run.checks.append((name, ok, detail))
        return ok

    if not check("p2-congruence", check_p2(g, p), f"p mod {n} = {p % n}"):
        return run
    rep = check_p1(g, p)
    if not check(
        "p1-representation",
        rep is not None,
        f"no p = x^2 + {n}*y^2 with p != {n}"
        if rep is None
        else f"p = {rep.x}^2 + {n}*{rep.y}^2",
    ):
        return run

    w = WeilQuadruple(g=g, p=p, a=2 * rep.x, s=2 * rep.y)
    run.quadruple = w
    if not check(
        "quadruple-equation",
        w.a**2 - 4 * p == -n * w.s**2 and math.gcd(w.a, p) == 1,
        f"{w.a}^2 - 4*{p} = -{n}*{w.s}^2, gcd({w.a}, {p}) = 1",
    ):
        return run

    poly = weil_polynomial(w)
    run.polynomial = poly
    if not check(
        "weil-modulus",
        verify_weil_number(poly) and poly.b * poly.b < 4 * poly.c,
        "b^2 < 4c and c = q = p^g",
    ):
        return run

    disc = cm_field_discriminant(poly)
    if not check("cm-discriminant", disc == -n, f"kernel(b^2 - 4c) = {disc}"):
        return run

    order = splitting_order(g, p)
    if not check("splitting-order", order == gg, f"ord(p mod {n}) = {order}"):
        return run

    invs = local_invariants(w)
    vals = valuations_oracle(w)
    run.oracle_valuations = vals
    formula_ok = (
        sorted(vals) == [(gg - 1) // 2, (gg + 1) // 2]
        and tuple(sorted(Fraction(v, gg) for v in vals)) == invs
    )
    if not check(
        "invariant-formula-vs-oracle",
        formula_ok,
        f"closed form {invs[0]}, {invs[1]} vs oracle valuations {vals}",
    ):
        return run
    if not check(
        "invariant-sum-integral",
        (invs[0] + invs[1]).denominator == 1,
        f"{invs[0]} + {invs[1]} = {invs[0] + invs[1]}",
    ):
        return run

    d = endomorphism_degree(invs)
    e = 2  # the center is imaginary quadratic
    if not check("degree-identity", d == gg and d * e == 2 * gg, f"d = {d}, e = {e}"):
        return run
    dimension = d * e // 2
    if not check("dimension", dimension == gg, f"d*e/2 = {dimension}"):
        return run
    aut = g.aut_order
    if not check("automorphism-order", aut == 4 * gg + 2, f"4g+2 = {aut}"):
        return run

    # place with the lower valuation gets the smaller invariant
    low_sign = "+t" if vals[0] < vals[1] else "-t"
    high_sign = "-t" if low_sign == "+t" else "+t"
    run.certificate = EndAlgebraCertificate(
        cm_discriminant=disc,
        splitting_order=order,
        invariants=(
            PlaceInvariant(low_sign, invs[0]),
            PlaceInvariant(high_sign, invs[1]),
        ),
        degree_d=d,
        center_degree_e=e,
        dimension=dimension,
        aut_order=aut,
    )
    return run


def certify(g: DimensionParam, p: int) -> EndAlgebraCertificate:
    """Full certificate for (g, p); raises CertificateError naming the
    first identity that fails."""
    run = run_certificate_checks(g, p)
    if run.certificate is None:
        name, detail = run.failure()
        raise CertificateError(name, detail)
    return run.certificate


def solve_general_p1m(
    g: DimensionParam,
    p: int,
    m: int,
    s_bound: int = DEFAULT_GENERAL_S_BOUND,
) -> tuple[int, int] | None:
    """Smallest-s solution of a^2 - 4*p^(g-2m) = -(2g+1)*s^2, gcd(a, p) = 1.

    Scans s = 1, 2, 3, ... (both parities). Returns None once
    (2g+1)*s^2 exceeds 4*p^(g-2m) with no hit; raises SearchExhausted if
    s_bound cuts the scan short, which is a different outcome.
    """
    if not 1 <= m <= (g.g - 1) // 2:
        raise ValueError(f"m must lie in [1, {(g.g - 1) // 2}], got {m}")
    rhs = 4 * p ** (g.g - 2 * m)
    n = g.n
    s = 1
    while n * s * s <= rhs:
        if s > s_bound:
            raise SearchExhausted(
                f"no solution with s <= {s_bound}; scan incomplete"
            )
        a2 = rhs - n * s * s
        if is_perfect_square(a2):
            a = math.isqrt(a2)
            if a > 0 and math.gcd(a, p) == 1:
                return a, s
        s += 1
    return None
