"""Sheaf cohomology of line bundles on an unnodal Enriques surface.

For a divisor class D with D.D = 2d the Riemann-Roch theorem reads
chi(D) = d + 1, and on an unnodal surface Kawamata-Viehweg style vanishing
pins down every cohomology group:

  * h1(D) = h1(D + K) = 0 unless D.D <= -4 or D is numerically a multiple
    l*E of an isotropic class with l >= 2 (or <= -2 on the dual side);
  * for D.D <= -2 neither D nor D + K is effective and
    h1 = -D.D/2 - 1 carries all of chi;
  * for D = l*E0 + eps*K on the effective side, the two torsion lifts of
    the half-fiber multiples have h0 = floor(l/2) + 1 (eps = 0) and
    ceil(l/2) (eps = 1): sections accumulate through the elliptic pencil
    |2E0| one lift at a time;
  * everything anti-effective is handled through Serre duality
    h^i(D) = h^{2-i}(K - D).

The decision procedure below is total: every integral class gets an exact
triple.  k3_coh gives the cohomology of the pullback to the K3 cover,
which is the componentwise sum over the two torsion lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .lattice import DELTA, divisibility, inner
from .surface import CANONICAL, PicClass


@dataclass(frozen=True)
class CohTriple:
    h0: int
    h1: int
    h2: int
    exact: bool = True

    def __iter__(self):
        yield self.h0
        yield self.h1
        yield self.h2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def chi(d: PicClass) -> int:
    """Euler characteristic D.D/2 + 1 (Riemann-Roch, K numerically trivial)."""
    return d.square // 2 + 1


@lru_cache(maxsize=None)
def coh(d: PicClass) -> CohTriple:
    """Exact (h0, h1, h2) of the line bundle O(D)."""
    sq = inner(d.num, d.num)
    if not d.num:
        if d.eps == 0:
            return CohTriple(1, 0, 0)
        return CohTriple(0, 0, 1)  # h2(K) = h0(O) by duality
    if sq <= -2:
        return CohTriple(0, -sq // 2 - 1, 0)
    side = inner(d.num, DELTA)
    # sq >= 0 and d != 0 forces side != 0: the orthogonal complement of the
    # gauge class is negative definite
    if side < 0:
        dual = coh(CANONICAL - d)
        return CohTriple(dual.h2, dual.h1, dual.h0)
    if sq == 0:
        l = divisibility(d.num)
        h0 = l // 2 + 1 if d.eps == 0 else (l + 1) // 2
        return CohTriple(h0, h0 - 1, 0)
    return CohTriple(sq // 2 + 1, 0, 0)


def k3_coh(d: PicClass) -> CohTriple:
    """Cohomology of the pullback of O(D) to the universal K3 cover.

    The pushforward of the structure sheaf splits off both torsion lifts,
    so each h^i is coh(d).h^i + coh(d + K).h^i.  Independent of d.eps.
    """
    a = coh(d)
    b = coh(d + CANONICAL)
    return CohTriple(a.h0 + b.h0, a.h1 + b.h1, a.h2 + b.h2, a.exact and b.exact)


Cover = Literal["k3", "enriques"]


def _coh_on(cover: Cover):
    if cover == "k3":
        return k3_coh
    if cover == "enriques":
        return coh
    raise ValueError(f"unknown cover {cover!r}")


@dataclass(frozen=True)
class MultBound:
    """Upper bound for the corank of a multiplication map of sections."""

    upper: int
    exact: bool


def mult_corank_bound(f: PicClass, g: PicClass, cover: Cover = "k3") -> MultBound:
    """Corank bound for mu: H0(F) x H0(G) -> H0(F + G), G a pencil.

    For a base-point-free pencil G the corank of the multiplication map is
    at most h1(F - G), with equality when h1(F) = 0.  The caller vouches
    for base-point-freeness (automatic for the pencils we use: |2E| on the
    surface, elliptic pencils upstairs); h0(G) = 2 is checked here.
    """
    cohfn = _coh_on(cover)
    if cohfn(g).h0 != 2:
        raise ValueError("G must be a pencil class (h0 = 2) on the chosen cover")
    return MultBound(upper=cohfn(f - g).h1, exact=cohfn(f).h1 == 0)


@dataclass(frozen=True)
class MultCert:
    """Outcome of a chained surjectivity certification.

    checks lists the classes whose h1 was required to vanish, in order,
    with the computed value; failing_index is the 1-based position of the
    first nonzero one (None on success).
    """

    ok: bool
    cover: Cover
    checks: tuple[tuple[PicClass, int], ...]
    failing_index: int | None = None


def certify_mult_surjective(
    f: PicClass, parts: tuple[PicClass, ...] | list[PicClass], cover: Cover = "k3"
) -> MultCert:
    """Certify surjectivity of mu: H0(F) x H0(G) -> H0(F + G), G = sum(parts).

    Splitting G into pencil summands G_1, ..., G_n reduces surjectivity to
    the vanishing h1(F + G_1 + ... + G_{i-1} - G_i) = 0 for every i; each
    step is one pencil multiplication.  Every part must be a pencil class
    on the chosen cover.
    """
    cohfn = _coh_on(cover)
    parts = tuple(parts)
    # an empty product leaves mu the identity, trivially surjective
    for p in parts:
        if cohfn(p).h0 != 2:
            raise ValueError(f"part {p} is not a pencil class on cover {cover!r}")
    checks: list[tuple[PicClass, int]] = []
    accum = f
    for i, p in enumerate(parts, start=1):
        probe = accum - p
        h1 = cohfn(probe).h1
        checks.append((probe, h1))
        if h1 != 0:
            return MultCert(False, cover, tuple(checks), failing_index=i)
        accum = accum + p
    return MultCert(True, cover, tuple(checks))
