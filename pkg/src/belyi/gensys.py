"""Generating systems: transitive permutation triples with product one.

A generating system (sigma0, sigma1, sigmaInf) encodes the monodromy of a
Belyi map around 0, 1, and infinity.  sigmaInf is always derived so that
sigma0 * sigma1 * sigmaInf is the identity under the left-to-right
composition convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import DegreeMismatchError, Permutation, is_transitive


class NotTransitiveError(ValueError):
    """The permutations do not generate a transitive group."""


class InvalidTypeError(ValueError):
    """Ramification indices violating the degree-d constraints."""


@dataclass(frozen=True)
class CombinatorialType:
    """Type (d; e0, e1, eInf) of a genus-zero single-cycle Belyi map.

    The indices satisfy 2 <= e <= d and e0 + e1 + eInf = 2d + 1, which is
    the Riemann-Hurwitz count for genus zero with one ramification point
    per branch fiber.
    """

    d: int
    e0: int
    e1: int
    e_inf: int

    def __post_init__(self):
        if self.d < 3:
            raise InvalidTypeError(f"degree must be at least 3, got {self.d}")
        for name, e in zip(("e0", "e1", "eInf"), self.indices):
            if not 2 <= e <= self.d:
                raise InvalidTypeError(
                    f"{name} = {e} outside the valid range [2, {self.d}]"
                )
        if sum(self.indices) != 2 * self.d + 1:
            raise InvalidTypeError(
                f"indices {self.indices} sum to {sum(self.indices)},"
                f" need 2d + 1 = {2 * self.d + 1}"
            )

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.e0, self.e1, self.e_inf)

    @classmethod
    def from_indices(cls, e0: int, e1: int, e_inf: int) -> "CombinatorialType":
        """Infer the degree from the index sum e0 + e1 + eInf = 2d + 1."""
        total = e0 + e1 + e_inf
        if total % 2 == 0:
            raise InvalidTypeError(
                f"indices ({e0}, {e1}, {e_inf}) sum to {total},"
                " which is even: no integer degree fits"
            )
        return cls((total - 1) // 2, e0, e1, e_inf)

    def to_json(self) -> dict:
        return {"d": self.d, "e0": self.e0, "e1": self.e1, "eInf": self.e_inf}

    @classmethod
    def from_json(cls, data: dict) -> "CombinatorialType":
        return cls(int(data["d"]), int(data["e0"]), int(data["e1"]), int(data["eInf"]))

    def __str__(self) -> str:
        return f"({self.e0}, {self.e1}, {self.e_inf})"


def valid_types(d: int) -> list[CombinatorialType]:
    """All combinatorial types of degree d, sorted by (e0, e1)."""
    out = []
    for e0 in range(2, d + 1):
        for e1 in range(2, d + 1):
            e_inf = 2 * d + 1 - e0 - e1
            if 2 <= e_inf <= d:
                out.append(CombinatorialType(d, e0, e1, e_inf))
    return out


@dataclass(frozen=True)
class GeneratingSystem:
    """Validated transitive triple with sigma0 * sigma1 * sigmaInf = id."""

    sigma0: Permutation
    sigma1: Permutation
    sigma_inf: Permutation

    def __post_init__(self):
        d = self.sigma0.degree
        if self.sigma1.degree != d or self.sigma_inf.degree != d:
            raise DegreeMismatchError("triple degrees differ")
        if not (self.sigma0 * self.sigma1 * self.sigma_inf).is_identity:
            raise ValueError("sigma0 * sigma1 * sigmaInf is not the identity")
        if not is_transitive([self.sigma0, self.sigma1]):
            raise NotTransitiveError(
                "sigma0 and sigma1 do not generate a transitive group"
            )

    @property
    def degree(self) -> int:
        return self.sigma0.degree

    @property
    def triple(self) -> tuple[Permutation, Permutation, Permutation]:
        return (self.sigma0, self.sigma1, self.sigma_inf)

    def genus(self) -> int:
        """Genus from the cycle-count Euler formula 2 - 2g = c0 + c1 + cInf - d."""
        euler = sum(s.num_cycles() for s in self.triple) - self.degree
        if euler % 2:
            raise RuntimeError("odd Euler characteristic for a permutation triple")
        g = (2 - euler) // 2
        if g < 0:
            raise RuntimeError("negative genus")
        return g

    def single_cycle_type(self) -> CombinatorialType | None:
        """The type (d; e0, e1, eInf) when each sigma has exactly one
        nontrivial cycle and the triple has genus zero; None otherwise."""
        lens = []
        for s in self.triple:
            nt = s.nontrivial_cycles()
            if len(nt) != 1:
                return None
            lens.append(len(nt[0]))
        if sum(lens) != 2 * self.degree + 1:
            return None  # single-cycle but positive genus
        return CombinatorialType(self.degree, *lens)

    def to_json(self) -> dict:
        return {
            "d": self.degree,
            "sigma0": self.sigma0.to_json(),
            "sigma1": self.sigma1.to_json(),
            "sigmaInf": self.sigma_inf.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GeneratingSystem":
        d = int(data["d"])
        return cls(
            Permutation.from_json(data["sigma0"], d),
            Permutation.from_json(data["sigma1"], d),
            Permutation.from_json(data["sigmaInf"], d),
        )


def make_gensys(sigma0: Permutation, sigma1: Permutation) -> GeneratingSystem:
    """Complete (sigma0, sigma1) with the derived sigmaInf = (sigma0*sigma1)^-1."""
    if sigma0.degree != sigma1.degree:
        raise DegreeMismatchError(
            f"degrees differ: {sigma0.degree} vs {sigma1.degree}"
        )
    return GeneratingSystem(sigma0, sigma1, (sigma0 * sigma1).inverse())


def power_gensys(d: int) -> GeneratingSystem:
    """The cyclic triple of x^d: a d-cycle, the identity, and the inverse d-cycle."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    full = Permutation.from_cycles(d, [range(1, d + 1)])
    return make_gensys(full, Permutation.identity(d))


def chebyshev_gensys(d: int) -> GeneratingSystem:
    """The path triple: adjacent transpositions interleaved on 1..d.

    sigma0 pairs (2 3)(4 5)..., sigma1 pairs (1 2)(3 4)...; the chains stop
    where parity forces them to, which is exactly the assignment that makes
    sigmaInf a full d-cycle (asserted).
    """
    if d < 3:
        raise ValueError("degree must be at least 3")
    s0 = Permutation.from_cycles(d, [(i, i + 1) for i in range(2, d, 2)])
    s1 = Permutation.from_cycles(d, [(i, i + 1) for i in range(1, d, 2)])
    gs = make_gensys(s0, s1)
    nt = gs.sigma_inf.nontrivial_cycles()
    if len(nt) != 1 or len(nt[0]) != d:
        raise RuntimeError(f"sigmaInf is not a {d}-cycle for the path triple")
    return gs


def canonical_single_cycle(ct: CombinatorialType) -> GeneratingSystem:
    """The standard representative triple of a combinatorial type.

    sigma0 is the descending cycle (d, d-1, ..., d-e0+1) on the top e0
    points and sigma1 the ascending cycle (1, 2, ..., e1) on the bottom e1
    points.  The supports overlap in e0 + e1 - d >= 1 points, so the pair is
    transitive, and the relative orientation makes sigma0 * sigma1 a single
    eInf-cycle, giving genus zero.  (With both cycles ascending the product
    is a full d-cycle instead, which has the wrong genus whenever
    eInf < d.)
    """
    d, e0, e1 = ct.d, ct.e0, ct.e1
    s0 = Permutation.from_cycles(d, [range(d, d - e0, -1)])
    s1 = Permutation.from_cycles(d, [range(1, e1 + 1)])
    gs = make_gensys(s0, s1)
    if gs.single_cycle_type() != ct:
        raise RuntimeError(f"canonical triple failed to realize type {ct}")
    return gs


def equivalent(a: GeneratingSystem, b: GeneratingSystem) -> bool:
    """Simultaneous-conjugation equivalence of two generating systems.

    Searches for t with t(sigma_i^a(x)) = sigma_i^b(t(x)) for i in {0, 1};
    sigmaInf then matches automatically.  Transitivity pins t completely
    once t(1) is chosen, so the search tries the d seeds and propagates.
    """
    if a.degree != b.degree:
        raise DegreeMismatchError(
            f"degrees differ: {a.degree} vs {b.degree}"
        )
    for sa, sb in zip(a.triple, b.triple):
        if sa.cycle_type() != sb.cycle_type():
            return False
    d = a.degree
    pairs = ((a.sigma0, b.sigma0), (a.sigma1, b.sigma1))
    for seed in range(1, d + 1):
        t = {1: seed}
        stack = [1]
        ok = True
        while stack and ok:
            x = stack.pop()
            for ga, gb in pairs:
                nx, ny = ga(x), gb(t[x])
                if nx in t:
                    if t[nx] != ny:
                        ok = False
                        break
                else:
                    t[nx] = ny
                    stack.append(nx)
        if ok and len(t) == d and len(set(t.values())) == d:
            return True
    return False
