"""Triptych records: type + map + generating system + dessin, kept in sync.

A record bundles the three representations of one single-cycle class with
its invariants, validating that they agree before anything is written.  The
catalog writer enumerates every combinatorial type up to a degree bound and
attaches closed-form maps where one of the two families covers the type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterator

from .dessin import Dessin, DessinShape, dessin_from_gensys, gensys_from_dessin
from .families import (
    BelyiMap,
    VerificationError,
    chebyshev_map,
    power_map,
    single_cycle_polynomial,
    symmetric_single_cycle,
    verify_single_cycle,
)
from .gensys import (
    CombinatorialType,
    GeneratingSystem,
    canonical_single_cycle,
    chebyshev_gensys,
    equivalent,
    power_gensys,
    valid_types,
)

CLI_FAMILIES = {
    "poly": "single-cycle-poly",
    "symmetric": "symmetric-single-cycle",
    "power": "power",
    "chebyshev": "chebyshev",
}


def family_map_for_type(ct: CombinatorialType) -> BelyiMap | None:
    """A closed-form map realizing the type, when a family covers it.

    The polynomial family covers eInf = d (then k = d - e0) and the
    symmetric family covers e0 = eInf (then e1 = 2k + 1 is automatically
    odd).  Other types get no map here.
    """
    if ct.e_inf == ct.d:
        return single_cycle_polynomial(ct.d, ct.d - ct.e0)
    if ct.e0 == ct.e_inf:
        return symmetric_single_cycle(ct.d, ct.d - ct.e0)
    return None


@dataclass
class TriptychRecord:
    """One catalog entry; invariants are derived at construction."""

    gensys: GeneratingSystem
    dessin: Dessin
    ctype: CombinatorialType | None = None
    bmap: BelyiMap | None = None
    genus: int = field(init=False)
    diameter: int = field(init=False)
    shape: DessinShape | None = field(init=False)
    is_belyi: bool | None = field(init=False)

    def __post_init__(self):
        self.genus = self.gensys.genus()
        self.diameter = self.dessin.diameter_vertices()
        self.shape = self.dessin.shape()
        self.is_belyi = None if self.bmap is None else self.bmap.profile.is_belyi

    @classmethod
    def for_type(cls, ct: CombinatorialType) -> "TriptychRecord":
        gs = canonical_single_cycle(ct)
        return cls(gs, dessin_from_gensys(gs), ct, family_map_for_type(ct))

    @classmethod
    def for_family(cls, family: str, d: int, k: int | None = None) -> "TriptychRecord":
        """Record for one named family member (CLI names: poly, symmetric,
        power, chebyshev)."""
        if family == "poly":
            m = single_cycle_polynomial(d, k if k is not None else 1)
            gs = canonical_single_cycle(m.claimed_type)
            return cls(gs, dessin_from_gensys(gs), m.claimed_type, m)
        if family == "symmetric":
            m = symmetric_single_cycle(d, k if k is not None else 1)
            gs = canonical_single_cycle(m.claimed_type)
            return cls(gs, dessin_from_gensys(gs), m.claimed_type, m)
        if family == "power":
            gs = power_gensys(d)
            return cls(gs, dessin_from_gensys(gs), None, power_map(d))
        if family == "chebyshev":
            gs = chebyshev_gensys(d)
            return cls(gs, dessin_from_gensys(gs), None, chebyshev_map(d))
        raise ValueError(f"unknown family {family!r}")

    def validate(self) -> None:
        """Re-derive every representation and cross-check; raises on drift."""
        if gensys_from_dessin(self.dessin) != self.gensys:
            raise VerificationError("dessin does not round-trip to its gensys")
        if self.genus != self.gensys.genus():
            raise VerificationError("stored genus is stale")
        if self.diameter != self.dessin.diameter_vertices():
            raise VerificationError("stored diameter is stale")
        if self.ctype is not None:
            ct = self.ctype
            if self.gensys.single_cycle_type() != ct:
                raise VerificationError("gensys does not realize the stored type")
            if self.genus != 0:
                raise VerificationError("single-cycle record with nonzero genus")
            if self.shape is None:
                raise VerificationError("single-cycle record is not two-hub")
            expected = (ct.d - ct.e1, ct.d - ct.e0, ct.e0 + ct.e1 - ct.d)
            got = (
                self.shape.white_leaves,
                self.shape.black_leaves,
                self.shape.parallel_edges,
            )
            if got != expected:
                raise VerificationError(
                    f"shape counts {got} differ from type counts {expected}"
                )
            if self.diameter > 4:
                raise VerificationError("single-cycle dessin with diameter > 4")
            if self.bmap is not None:
                ok, diag = verify_single_cycle(self.bmap, ct)
                if not ok:
                    raise VerificationError(f"map fails its type: {diag}")
        elif self.bmap is not None:
            prof = self.bmap.profile
            d = self.bmap.degree
            if self.bmap.family == "power":
                if prof.fibers != ((d,), tuple([1] * d), (d,)):
                    raise VerificationError("power map has the wrong profile")
                if not self.dessin.is_star():
                    raise VerificationError("power dessin is not a star")
            if self.bmap.family == "chebyshev":
                types = sorted(
                    (tuple(sorted(f, reverse=True)) for f in prof.fibers[:2])
                )
                sigmas = sorted(
                    (
                        self.gensys.sigma0.cycle_type(),
                        self.gensys.sigma1.cycle_type(),
                    )
                )
                if types != sigmas or prof.over_inf != (d,):
                    raise VerificationError(
                        "chebyshev profile does not match its triple"
                    )
                if not self.dessin.is_path():
                    raise VerificationError("chebyshev dessin is not a path")

    def to_json(self) -> dict:
        return {
            "type": None if self.ctype is None else self.ctype.to_json(),
            "map": None if self.bmap is None else self.bmap.to_json(),
            "gensys": self.gensys.to_json(),
            "dessin": self.dessin.to_json(),
            "invariants": {
                "genus": self.genus,
                "diameter": self.diameter,
                "shape": None if self.shape is None else self.shape.to_json(),
                "isBelyi": self.is_belyi,
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "TriptychRecord":
        rec = cls(
            GeneratingSystem.from_json(data["gensys"]),
            Dessin.from_json(data["dessin"]),
            None if data.get("type") is None else CombinatorialType.from_json(data["type"]),
            None if data.get("map") is None else BelyiMap.from_json(data["map"]),
        )
        inv = data.get("invariants", {})
        stored = (inv.get("genus"), inv.get("diameter"))
        if stored != (rec.genus, rec.diameter):
            raise ValueError(
                f"stored invariants {stored} disagree with recomputed"
                f" ({rec.genus}, {rec.diameter})"
            )
        return rec


def iter_catalog(dmax: int) -> Iterator[TriptychRecord]:
    """Validated records for every type with 3 <= d <= dmax, sorted by
    (d, e0, e1)."""
    for d in range(3, dmax + 1):
        for ct in valid_types(d):
            rec = TriptychRecord.for_type(ct)
            rec.validate()
            yield rec


def write_catalog(dmax: int, out: IO[str], dedup: bool = False) -> dict[int, int]:
    """Write the catalog as JSON Lines; returns per-degree record counts.

    With dedup, records equivalent to an already-written record of the same
    degree are dropped (distinct types are never conjugate, so at the
    canonical representatives this drops nothing).
    """
    counts: dict[int, int] = {}
    kept: dict[int, list[GeneratingSystem]] = {}
    for rec in iter_catalog(dmax):
        d = rec.gensys.degree
        if dedup:
            if any(equivalent(rec.gensys, other) for other in kept.setdefault(d, [])):
                continue
            kept[d].append(rec.gensys)
        out.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
        counts[d] = counts.get(d, 0) + 1
    return counts
