"""Belyi maps: closed-form families and exact ramification verification.

A Belyi map is a rational function ramified only over 0, 1, and infinity.
Ramification profiles are computed from squarefree decompositions of the
fiber polynomials, never from numeric root-finding, so verification is
exact.  The single-cycle families here have exactly one ramification point
over each branch value; the power and Chebyshev maps sit at the boundary of
that class (two, respectively degenerate, critical values).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import Poly, RatFunc, format_rational, parse_rational, squarefree_decomposition
from .gensys import CombinatorialType

FAMILY_TAGS = (
    "power",
    "chebyshev",
    "single-cycle-poly",
    "symmetric-single-cycle",
    "custom",
)


class ParameterOutOfRangeError(ValueError):
    """Family parameters (d, k) outside the constructible domain."""


class VerificationError(RuntimeError):
    """A constructed map failed its own ramification check."""


class CoefficientFormMismatchError(VerificationError):
    """The two closed forms for the symmetric coefficients disagreed."""


@dataclass(frozen=True)
class RamificationProfile:
    """Multisets of ramification indices over 0, 1, and infinity.

    Each fiber multiset sums to the degree; indices are stored descending.
    The total ramification sum(e - 1) over the three fibers is at most
    2d - 2, with equality exactly when the map is Belyi (no critical
    values outside {0, 1, infinity}).
    """

    degree: int
    over0: tuple[int, ...]
    over1: tuple[int, ...]
    over_inf: tuple[int, ...]

    @property
    def fibers(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.over0, self.over1, self.over_inf)

    @property
    def total_ramification(self) -> int:
        return sum(e - 1 for fib in self.fibers for e in fib)

    @property
    def is_belyi(self) -> bool:
        return self.total_ramification == 2 * self.degree - 2

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "over0": list(self.over0),
            "over1": list(self.over1),
            "overInf": list(self.over_inf),
            "isBelyi": self.is_belyi,
        }


def _fiber_indices(g: Poly, d: int) -> tuple[int, ...]:
    """Ramification indices of one fiber: multiplicities of the roots of g,
    plus the point at infinity with index d - deg g when the degree drops."""
    out: list[int] = []
    if g.degree > 0:
        for factor, mult in squarefree_decomposition(g):
            out.extend([mult] * factor.degree)
    drop = d - max(g.degree, 0)
    if drop > 0:
        out.append(drop)
    return tuple(sorted(out, reverse=True))


def ramification_profile(f: "RatFunc | BelyiMap") -> RamificationProfile:
    """Exact ramification profile of a nonconstant rational map over {0, 1, inf}."""
    if isinstance(f, BelyiMap):
        f = f.f
    if f.is_constant:
        raise ValueError("constant map has no ramification profile")
    d = f.degree
    over0 = _fiber_indices(f.num, d)
    over1 = _fiber_indices(f.num - f.den, d)
    inf: list[int] = []
    if f.den.degree > 0:
        for factor, mult in squarefree_decomposition(f.den):
            inf.extend([mult] * factor.degree)
    if f.num.degree > f.den.degree:
        inf.append(f.num.degree - f.den.degree)
    over_inf = tuple(sorted(inf, reverse=True))
    prof = RamificationProfile(d, over0, over1, over_inf)
    assert all(sum(fib) == d for fib in prof.fibers)
    return prof


@dataclass(frozen=True)
class MapParams:
    """Closed-form family data: the inner coefficients a and, for the
    polynomial family, the normalizing constant c."""

    c: Fraction | None
    a: tuple[Fraction, ...]

    def to_json(self) -> dict:
        out: dict = {"a": [format_rational(x) for x in self.a]}
        if self.c is not None:
            out["c"] = format_rational(self.c)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MapParams":
        c = parse_rational(data["c"]) if "c" in data else None
        return cls(c, tuple(parse_rational(s) for s in data["a"]))


class BelyiMap:
    """A rational map tagged with its family and claimed combinatorial type.

    The profile is computed lazily and cached; family constructors verify
    their claimed type eagerly and refuse to return a map that fails.
    """

    __slots__ = ("f", "family", "k", "claimed_type", "params", "_profile")

    def __init__(
        self,
        f: RatFunc,
        family: str = "custom",
        k: int | None = None,
        claimed_type: CombinatorialType | None = None,
        params: MapParams | None = None,
    ):
        if family not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {family!r}")
        self.f = f
        self.family = family
        self.k = k
        self.claimed_type = claimed_type
        self.params = params
        self._profile: RamificationProfile | None = None

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def profile(self) -> RamificationProfile:
        if self._profile is None:
            self._profile = ramification_profile(self.f)
        return self._profile

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BelyiMap)
            and self.f == other.f
            and self.family == other.family
            and self.k == other.k
            and self.claimed_type == other.claimed_type
            and self.params == other.params
        )

    def __hash__(self) -> int:
        return hash((self.f, self.family, self.k, self.claimed_type, self.params))

    def __repr__(self) -> str:
        return f"BelyiMap({self.family}, d={self.degree}, f={self.f})"

    def factored_form(self) -> str | None:
        """Human-readable closed form for the two single-cycle families."""
        if self.params is None or self.k is None or self.claimed_type is None:
            return None
        d, k, a = self.claimed_type.d, self.k, self.params.a
        if self.family == "single-cycle-poly":
            c = self.params.c
            inner = Poly([c * a[k - p] for p in range(k + 1)])
            return f"x^{d - k} * ({inner})"
        if self.family == "symmetric-single-cycle":
            den = Poly([(-1) ** i * a[i] for i in range(k + 1)])
            num = den.reverse()
            return f"x^{d - k} * ({num}) / ({den})"
        return None

    def to_json(self) -> dict:
        out: dict = {"family": self.family, "d": self.degree, "k": self.k}
        if self.params is not None:
            out["params"] = self.params.to_json()
        out["f"] = self.f.to_json()
        out["type"] = None if self.claimed_type is None else self.claimed_type.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BelyiMap":
        f = RatFunc.from_json(data["f"])
        family = data.get("family", "custom")
        k = data.get("k")
        d = data.get("d")
        if d is not None and int(d) != f.degree:
            raise ValueError(f"stated degree {d} != map degree {f.degree}")
        ct = data.get("type")
        params = data.get("params")
        return cls(
            f,
            family,
            None if k is None else int(k),
            None if ct is None else CombinatorialType.from_json(ct),
            None if params is None else MapParams.from_json(params),
        )


def verify_single_cycle(
    m: "BelyiMap | RatFunc",
    claimed: "CombinatorialType | tuple[int, int, int]",
) -> tuple[bool, str]:
    """Check that a map is Belyi with exactly one ramification point per
    fiber, of the claimed indices (e0, e1, eInf).

    Returns (ok, diagnostic); the diagnostic names the first failing
    condition, e.g. "e_inf mismatch: expected 4, found 5".
    """
    prof = m.profile if isinstance(m, BelyiMap) else ramification_profile(m)
    e0, e1, e_inf = claimed.indices if isinstance(claimed, CombinatorialType) else claimed
    if not prof.is_belyi:
        return False, (
            f"not Belyi: total ramification {prof.total_ramification}"
            f" < {2 * prof.degree - 2}"
        )
    for name, fiber, expected in (
        ("e0", prof.over0, e0),
        ("e1", prof.over1, e1),
        ("e_inf", prof.over_inf, e_inf),
    ):
        ramified = [e for e in fiber if e >= 2]
        if len(ramified) != 1:
            return False, (
                f"fiber for {name} has {len(ramified)} ramification points,"
                " need exactly 1"
            )
        if ramified[0] != expected:
            return False, f"{name} mismatch: expected {expected}, found {ramified[0]}"
    return True, f"single-cycle of type ({e0}, {e1}, {e_inf})"


# ---- families ---------------------------------------------------------------


def power_map(d: int) -> BelyiMap:
    """x^d: totally ramified over 0 and infinity, unramified over 1."""
    if d < 1:
        raise ParameterOutOfRangeError("power map needs d >= 1")
    return BelyiMap(RatFunc(Poly.monomial(d)), family="power")


def chebyshev_polynomial(n: int) -> Poly:
    """Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
    T_{n+1} = 2x T_n - T_{n-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t0, t1 = Poly.one(), Poly.x()
    if n == 0:
        return t0
    two_x = Poly((0, 2))
    for _ in range(n - 1):
        t0, t1 = t1, two_x * t1 - t0
    return t1


def chebyshev_map(d: int) -> BelyiMap:
    """(T_d + 1)/2, normalized so the branch values are within {0, 1, inf}."""
    if d < 3:
        raise ParameterOutOfRangeError("chebyshev map needs d >= 3")
    f = RatFunc((chebyshev_polynomial(d) + Poly.one()) * Fraction(1, 2))
    m = BelyiMap(f, family="chebyshev")
    if not m.profile.is_belyi:
        raise VerificationError("chebyshev map failed the Belyi check")
    return m


def single_cycle_polynomial(d: int, k: int) -> BelyiMap:
    """The polynomial family c x^(d-k) (a0 x^k + ... + a_{k-1} x + a_k) with

        a_i = (-1)^(k-i) / (d - i) * binom(k, i),
        c   = (1/k!) * prod_{j=0..k} (d - j),

    of combinatorial type (d-k, k+1, d): the derivative is a constant times
    x^(d-k-1) (x-1)^k, so 0 and 1 are the only finite critical points.
    """
    if d < 3 or not 1 <= k < d - 1:
        raise ParameterOutOfRangeError(
            f"(d, k) = ({d}, {k}) outside d >= 3, 1 <= k <= d - 2"
        )
    a = tuple(
        Fraction((-1) ** (k - i) * math.comb(k, i), d - i) for i in range(k + 1)
    )
    c = Fraction(math.prod(range(d - k, d + 1)), math.factorial(k))
    inner = Poly([a[k - p] for p in range(k + 1)])
    m = BelyiMap(
        RatFunc(Poly.monomial(d - k, c) * inner),
        family="single-cycle-poly",
        k=k,
        claimed_type=CombinatorialType(d, d - k, k + 1, d),
        params=MapParams(c, a),
    )
    ok, diag = verify_single_cycle(m, m.claimed_type)
    if not ok:
        raise VerificationError(f"single_cycle_polynomial({d}, {k}): {diag}")
    return m


def _symmetric_coeff_product(d: int, k: int, i: int) -> int:
    tail = math.prod(d - j for j in range(k + i + 1, 2 * k + 1))
    head = math.prod(d - j for j in range(0, i))
    return math.comb(k, i) * tail * head


def _symmetric_coeff_binomial(d: int, k: int, i: int) -> int:
    return math.factorial(k) * math.comb(d, i) * math.comb(d - k - i - 1, k - i)


def symmetric_single_cycle(d: int, k: int) -> BelyiMap:
    """The self-reciprocal family x^(d-k) N(x) / D(x) of type
    (d-k, 2k+1, d-k), where D has ascending coefficients (-1)^i a_i and N is
    the coefficient reversal of D, so that f(1/x) f(x) = 1.

    Both closed forms of the coefficients are computed and must agree:

        a_i = binom(k, i) * prod_{k+i+1 <= j <= 2k} (d-j) * prod_{0 <= j <= i-1} (d-j)
            = k! * binom(d, i) * binom(d-k-i-1, k-i)

    The type constraint e1 = 2k + 1 <= d bounds k at (d - 1) / 2; beyond
    that the leading coefficients vanish and the formula degenerates.
    """
    if d < 3 or not 1 <= k or 2 * k + 1 > d:
        raise ParameterOutOfRangeError(
            f"(d, k) = ({d}, {k}) outside d >= 3, 1 <= k <= (d - 1) / 2"
        )
    a_product = tuple(_symmetric_coeff_product(d, k, i) for i in range(k + 1))
    a_binomial = tuple(_symmetric_coeff_binomial(d, k, i) for i in range(k + 1))
    if a_product != a_binomial:
        raise CoefficientFormMismatchError(
            f"symmetric coefficient forms disagree for (d, k) = ({d}, {k}):"
            f" {a_product} vs {a_binomial}"
        )
    a = tuple(Fraction(x) for x in a_product)
    den = Poly([(-1) ** i * a[i] for i in range(k + 1)])
    num = Poly.monomial(d - k) * den.reverse()
    m = BelyiMap(
        RatFunc(num, den),
        family="symmetric-single-cycle",
        k=k,
        claimed_type=CombinatorialType(d, d - k, 2 * k + 1, d - k),
        params=MapParams(None, a),
    )
    ok, diag = verify_single_cycle(m, m.claimed_type)
    if not ok:
        raise VerificationError(f"symmetric_single_cycle({d}, {k}): {diag}")
    return m
