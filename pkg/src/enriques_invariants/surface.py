"""Divisor classes on an unnodal Enriques surface.

Pic splits as Num x Z/2: a class is a numerical class plus a torsion bit
recording whether the canonical class K (numerically trivial, 2K = 0) has
been added.  On an unnodal surface, one with no smooth rational curves,
effectivity and nefness are decided by lattice data alone:

  * the zero class is effective, K is not;
  * a class of negative square is never effective;
  * a nonzero class of square >= 0 is effective iff it pairs positively
    with the positive cone (we gauge against D, D.D = 10), regardless of
    the torsion bit;
  * every effective class is nef.

The phi invariant of a big nef class H is min E.H over primitive isotropic
effective E; it satisfies phi(H)^2 <= H.H, so the minimum is realized at
pairing value at most isqrt(H.H).  The search for all isotropic classes
with bounded pairing is an exact ellipsoid enumeration in the rank-9
negative-definite orthogonal complement of H, done over Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import DELTA, GRAM, RANK, NumClass, divisibility, inner


@dataclass(frozen=True)
class PicClass:
    """A Picard class: numerical part plus torsion bit eps in {0, 1}."""

    num: NumClass
    eps: int = 0

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")

    def __add__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.num + other.num, self.eps ^ other.eps)

    def __sub__(self, other: "PicClass") -> "PicClass":
        # -K = K in Pic, so the torsion bits just xor
        return PicClass(self.num - other.num, self.eps ^ other.eps)

    def __neg__(self) -> "PicClass":
        return PicClass(-self.num, self.eps)

    def __mul__(self, k: int) -> "PicClass":
        if not isinstance(k, int):
            return NotImplemented
        return PicClass(k * self.num, (k * self.eps) % 2)

    __rmul__ = __mul__

    @property
    def square(self) -> int:
        return inner(self.num, self.num)

    def __str__(self) -> str:
        return "pic[" + ",".join(str(c) for c in self.num.coords) + f";{self.eps}]"


CANONICAL = PicClass(NumClass.zero(), 1)


def genus(h: PicClass) -> int:
    """Sectional genus H.H/2 + 1 of a polarization (requires H.H >= 2)."""
    sq = h.square
    if sq < 2:
        raise ValueError(f"genus needs square >= 2, got {sq}")
    return sq // 2 + 1


def is_effective(d: PicClass) -> bool:
    if not d.num:
        return d.eps == 0
    if inner(d.num, d.num) < 0:
        return False
    return inner(d.num, DELTA) > 0


def is_nef(d: PicClass) -> bool:
    """On an unnodal surface the nef cone and effective cone coincide."""
    return is_effective(d)


def half_fiber_form(d: PicClass) -> tuple[int, NumClass, int] | None:
    """Recognize d as l*E0 + eps*K with E0 primitive isotropic effective.

    Returns (l, E0, eps) for l >= 1, or None when d is not numerically a
    positive multiple of an effective isotropic class.  E0 and E0 + K are
    the two half-fibers of the elliptic pencil |2E0|.
    """
    if not d.num or inner(d.num, d.num) != 0:
        return None
    l = divisibility(d.num)
    e0 = NumClass(tuple(c // l for c in d.num.coords))
    if inner(e0, DELTA) < 0:
        return None
    return l, e0, d.eps


@dataclass(frozen=True)
class PhiResult:
    value: int
    witness: PicClass


# ---------------------------------------------------------------------------
# exact enumeration of isotropic classes with bounded pairing


def _solve_linear_form(w: tuple[int, ...]) -> tuple[int, list[int], list[list[int]]]:
    """Integer solution theory for the form w.x.

    Returns (g, x0, kernel) with g = gcd(w), w.x0 = g, and kernel a basis
    of the rank-(RANK-1) sublattice {x : w.x = 0}.  Built by folding xgcd
    over the coordinates; each fold keeps w.sol = running gcd.
    """
    sol = [0] * RANK
    kernel: list[list[int]] = []
    g = 0
    for i in range(RANK):
        wi = w[i]
        ei = [0] * RANK
        ei[i] = 1
        if g == 0:
            if wi == 0:
                kernel.append(ei)
            else:
                if wi < 0:
                    ei[i] = -1
                    wi = -wi
                g, sol = wi, ei
            continue
        if wi == 0:
            kernel.append(ei)
            continue
        gg, u, v = _xgcd(g, wi)
        # u*g + v*wi = gg, so u*sol + v*ei solves w.x = gg
        new_sol = [u * a + v * b for a, b in zip(sol, ei)]
        # (wi/gg)*sol - (g/gg)*ei pairs to zero with w
        kernel.append([(wi // gg) * a - (g // gg) * b for a, b in zip(sol, ei)])
        g, sol = gg, new_sol
    if g == 0:
        raise ValueError("zero form")
    return g, sol, kernel


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _gram_times(v: list[int] | tuple[int, ...]) -> list[int]:
    return [sum(GRAM[i][j] * v[j] for j in range(RANK)) for i in range(RANK)]


class _SliceEnumerator:
    """Enumerates isotropic classes on affine slices {x : H.x = k}.

    The complement basis B of H (under the pairing) carries a negative
    definite form A = B^T G B; on the slice x0 + B t the isotropy condition
    becomes a positive definite ellipsoid equation in t, solved by exact
    Fincke-Pohst recursion with a Fraction Cholesky of -A.
    """

    def __init__(self, h: NumClass):
        w = tuple(_gram_times(list(h.coords)))
        self.g, self.x0g, basis = _solve_linear_form(w)
        self.basis = basis
        n = RANK - 1
        gb = [_gram_times(b) for b in basis]
        self.neg_a = [
            [-sum(basis[i][r] * gb[j][r] for r in range(RANK)) for j in range(n)]
            for i in range(n)
        ]
        self._cholesky()

    def _cholesky(self) -> None:
        # N = -A positive definite; factor q(s) = sum_i d[i]*(s_i + sum_{j>i} u[i][j] s_j)^2
        n = len(self.neg_a)
        m = [[Fraction(x) for x in row] for row in self.neg_a]
        d = [Fraction(0)] * n
        u = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            d[i] = m[i][i]
            if d[i] <= 0:
                raise ArithmeticError("complement form is not negative definite")
            for j in range(i + 1, n):
                u[i][j] = m[i][j] / d[i]
            for r in range(i + 1, n):
                for c in range(r, n):
                    m[r][c] -= d[i] * u[i][r] * u[i][c]
                    m[c][r] = m[r][c]
        self.d = d
        self.u = u

    def solutions(self, k: int) -> list[NumClass]:
        """All x with H.x = k and x.x = 0 (no further filtering)."""
        if k % self.g:
            return []
        q = k // self.g
        x0 = [q * c for c in self.x0g]
        gx0 = _gram_times(x0)
        n = RANK - 1
        c_vec = [sum(b[r] * gx0[r] for r in range(RANK)) for b in self.basis]
        e0 = sum(x0[r] * gx0[r] for r in range(RANK))
        # solve t^T A t + 2 c.t + e0 = 0, i.e. (t-m)^T N (t-m) = e0 + m^T N m
        m = self._solve_pos_def([Fraction(c) for c in c_vec])
        radius = Fraction(e0) + sum(
            Fraction(c_vec[i]) * m[i] for i in range(n)
        )
        if radius < 0:
            return []
        out: list[NumClass] = []
        t = [0] * n
        self._recurse(n - 1, radius, m, t, out, x0)
        return out

    def _solve_pos_def(self, c: list[Fraction]) -> list[Fraction]:
        # N m = c via the Cholesky factors (forward then diagonal then back)
        n = len(c)
        d, u = self.d, self.u
        y = list(c)
        for i in range(n):
            for j in range(i + 1, n):
                y[j] -= u[i][j] * y[i]
        for i in range(n):
            y[i] /= d[i]
        for i in range(n - 1, -1, -1):
            for j in range(i + 1, n):
                y[i] -= u[i][j] * y[j]
        return y

    def _recurse(
        self,
        i: int,
        rem: Fraction,
        m: list[Fraction],
        t: list[int],
        out: list[NumClass],
        x0: list[int],
    ) -> None:
        if i < 0:
            if rem == 0:
                coords = list(x0)
                for j, tj in enumerate(t):
                    if tj:
                        b = self.basis[j]
                        for r in range(RANK):
                            coords[r] += tj * b[r]
                out.append(NumClass(tuple(coords)))
            return
        center = m[i] - sum(self.u[i][j] * (t[j] - m[j]) for j in range(i + 1, len(t)))
        bound = rem / self.d[i]
        # conservative integer window around center: sqrt(bound) < (isqrt(p*q)+1)/q
        p, q = bound.numerator, bound.denominator
        r_up = Fraction(math.isqrt(p * q) + 1, q)
        lo = math.ceil(center - r_up)
        hi = math.floor(center + r_up)
        for ti in range(lo, hi + 1):
            t[i] = ti
            step = self.d[i] * (ti - center) ** 2
            if step <= rem:
                self._recurse(i - 1, rem - step, m, t, out, x0)
        t[i] = 0


def enumerate_isotropic(h: PicClass, kmax: int) -> list[NumClass]:
    """All primitive isotropic nu with nu.D > 0 and 0 < nu.H <= kmax.

    Sorted by (nu.H, coordinates).  Slices with no integral point are
    silently empty; that happens whenever gcd of the pairing form does not
    divide k.
    """
    if h.square <= 0:
        raise ValueError("need a class of positive square")
    if not is_effective(h):
        raise ValueError("need an effective class")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    enum = _SliceEnumerator(h.num)
    found: list[NumClass] = []
    for k in range(1, kmax + 1):
        layer = [
            x
            for x in enum.solutions(k)
            if inner(x, DELTA) > 0 and divisibility(x) == 1
        ]
        layer.sort(key=lambda x: x.coords)
        found.extend(layer)
    return found


def phi(h: PicClass) -> PhiResult:
    """min E.H over primitive isotropic effective E, with a witness.

    Requires H effective of positive square.  phi(H)^2 <= H.H guarantees
    a witness with E.H <= isqrt(H.H); ties go to the lexicographically
    smallest coordinate vector.  The witness is returned with torsion bit
    0 (both torsion lifts of a half-fiber class are effective).
    """
    sq = h.square
    if sq <= 0 or not is_effective(h):
        raise ValueError("phi needs an effective class of positive square")
    kmax = math.isqrt(sq)
    candidates = enumerate_isotropic(h, kmax)
    if not candidates:
        raise ArithmeticError("no isotropic class found below isqrt(H.H)")
    best = min(inner(x, h.num) for x in candidates)
    witness = min(
        (x for x in candidates if inner(x, h.num) == best), key=lambda x: x.coords
    )
    return PhiResult(best, PicClass(witness, 0))
