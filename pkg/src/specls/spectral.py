"""Certified spectral-radius enclosures and rigorous lambda comparisons.

The enclosure engine runs power iteration with the +I shift (so bipartite
components converge) from the all-ones vector and reads off two-sided
Collatz-Wielandt bounds each step: for any positive x and the nonnegative
symmetric matrix M = A + I,

    min_v (Mx)_v / x_v  <=  lambda(A) + 1  <=  max_v (Mx)_v / x_v.

Directed rounding is unavailable here, so each bound is widened outward by
an n*ulp-scale slack (recorded on the certificate) before use; the running
enclosure is the intersection of all widened bounds seen. Equality cases
that no floating interval can resolve (regular graphs, complete bipartite
graphs) are handled by exact side channels in the comparison helpers.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, bits, components, is_bipartite
from .verdicts import TheoremVerdict

_EPS = sys.float_info.epsilon
_NUMPY_MIN_SIZE = 48
_DEFAULT_MAX_ITER = 200_000


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    TIE = "tie"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class SpectralCertificate:
    lambda_lo: float
    lambda_hi: float
    perron: tuple[float, ...]
    residual: float
    converged: bool
    iterations: int
    tol: float
    slack: float

    @property
    def width(self) -> float:
        return self.lambda_hi - self.lambda_lo

    def to_jsonable(self) -> dict:
        return {
            "lambda_lo": self.lambda_lo,
            "lambda_hi": self.lambda_hi,
            "residual": self.residual,
            "converged": self.converged,
        }


def rayleigh_lower_bound(g: Graph) -> Fraction:
    """2m/n, exactly; a certified lower bound on the spectral radius."""
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    return Fraction(2 * g.m, g.n)


def _iterate_component(
    rows: Sequence[int],
    verts: list[int],
    tol: float,
    max_iter: int,
    start: Optional[Sequence[float]],
) -> tuple[float, float, list[float], bool, int, float]:
    """CW enclosure of lambda for one connected component.

    Returns (lo, hi, vector, converged, iterations, slack) with the vector
    indexed like `verts` and scaled to max entry 1.
    """
    k = len(verts)
    if k == 1:
        return 0.0, 0.0, [1.0], True, 0, 0.0
    pos = {v: i for i, v in enumerate(verts)}
    local = []
    for v in verts:
        local.append([pos[w] for w in bits(rows[v]) if w in pos])
    x = [1.0] * k if start is None else [float(start[v]) for v in verts]
    if min(x) <= 0:
        raise ValueError("start vector must be positive")
    mx = max(x)
    x = [xi / mx for xi in x]
    lo_best, hi_best = 0.0, float(k)
    slack_used = 0.0
    use_numpy = k >= _NUMPY_MIN_SIZE
    if use_numpy:
        A = np.zeros((k, k))
        for i, nbrs in enumerate(local):
            A[i, nbrs] = 1.0
        xv = np.array(x)
    it = 0
    converged = False
    shift = 1.0
    snapshot = float("inf")
    while it < max_iter:
        it += 1
        if use_numpy:
            yv = A @ xv + shift * xv
            ratios = yv / xv
            lo_t = float(ratios.min())
            hi_t = float(ratios.max())
        else:
            y = [sum(x[j] for j in local[i]) + shift * x[i] for i in range(k)]
            lo_t = min(y[i] / x[i] for i in range(k))
            hi_t = max(y[i] / x[i] for i in range(k))
        slack = 8.0 * k * _EPS * hi_t
        slack_used = max(slack_used, slack)
        lo_best = max(lo_best, lo_t - shift - slack)
        hi_best = min(hi_best, hi_t - shift + slack)
        if use_numpy:
            mx = float(yv.max())
            if mx <= 0.0 or not np.isfinite(mx):
                break
            xv = yv / mx
        else:
            mx = max(y)
            if mx <= 0.0:
                break
            x = [yi / mx for yi in y]
        width = hi_best - lo_best
        if width <= tol:
            converged = True
            break
        if it % 32 == 0:
            # stalled at the rounding-slack floor (or hopelessly slow):
            # give up instead of burning the whole budget
            if width >= 0.999 * snapshot:
                break
            snapshot = width
        if it % 12 == 0 and lo_best > 1.0:
            # re-center the spectrum: near-bipartite graphs have an eigenvalue
            # close to -lambda, and the shift A + lambda*I suppresses it
            shift = float(round(lo_best))
    vec = list(xv) if use_numpy else x
    return lo_best, hi_best, vec, converged, it, slack_used


def perron_enclosure(
    g: Graph,
    tol: float = 1e-9,
    max_iter: int = _DEFAULT_MAX_ITER,
    start: Optional[Sequence[float]] = None,
) -> SpectralCertificate:
    """Certified two-sided enclosure of lambda(G) plus an approximate
    Perron vector scaled to max entry 1 (supported on an extremal
    component when G is disconnected)."""
    if g.n == 0:
        raise ValueError("spectral radius undefined on zero vertices")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.m == 0:
        perron = (1.0,) * g.n
        return SpectralCertificate(0.0, 0.0, perron, 0.0, True, 0, tol, 0.0)
    comps = components(g)
    results = []
    for comp in comps:
        verts = list(bits(comp))
        results.append((verts, _iterate_component(g.rows, verts, tol, max_iter, start)))
    lo = max(r[1][0] for r in results)
    hi = max(r[1][1] for r in results)
    best = max(results, key=lambda r: r[1][1])
    verts, (_, _, vec, _, _, slack) = best
    iterations = sum(r[1][4] for r in results)
    slack = max(r[1][5] for r in results)
    full = [0.0] * g.n
    vmax = max(vec)
    for v, xv in zip(verts, vec):
        full[v] = xv / vmax
    converged = all(r[1][3] for r in results) and (hi - lo) <= tol
    residual = _residual(g, full)
    return SpectralCertificate(
        lo, hi, tuple(full), residual, converged, iterations, tol, slack
    )


def _residual(g: Graph, x: list[float]) -> float:
    ax = [sum(x[w] for w in bits(g.rows[v])) for v in range(g.n)]
    xx = sum(v * v for v in x)
    if xx == 0:
        return 0.0
    rho = sum(a * v for a, v in zip(ax, x)) / xx
    return max(abs(a - rho * v) for a, v in zip(ax, x))


# ---------------------------------------------------------------------------
# Exact side channels (resolve equality cases no float interval can).
# ---------------------------------------------------------------------------


def exact_lambda(g: Graph) -> Optional[Fraction]:
    """Exact spectral radius when available: d for d-regular graphs."""
    if g.n == 0:
        return None
    degs = g.degrees()
    if min(degs) == max(degs):
        return Fraction(degs[0])
    return None


def exact_lambda_sq(g: Graph) -> Optional[Fraction]:
    """Exact value of lambda^2 when available: a*b for K_{a,b} (plus the
    m=0 case); complete bipartite graphs have lambda = sqrt(m)."""
    if g.n == 0:
        return None
    if g.m == 0:
        return Fraction(0)
    w = is_bipartite(g)
    if w is None:
        return None
    a, b = w.S.bit_count(), w.T.bit_count()
    if g.m == a * b and len(components(g)) == 1:
        return Fraction(a * b)
    return None


def sqrt_interval(s: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational enclosure of sqrt(s) of width <= tol, s >= 0."""
    if s < 0:
        raise ValueError("needs s >= 0")
    if s == 0:
        return Fraction(0), Fraction(0)
    p, q = s.numerator, s.denominator
    shift = 0
    denom = q
    while Fraction(1, denom) > tol:
        shift += 2
        denom = q << (shift // 2)
    r = math.isqrt(p * q << shift)
    lo = Fraction(r, denom)
    hi = Fraction(r + 1, denom)
    return lo, hi


_TIGHTEN_TOLS = (1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12)


def _tols_down_to(tol_floor: float) -> list[float]:
    tols = [t for t in _TIGHTEN_TOLS if t >= tol_floor]
    if not tols or tols[-1] > tol_floor:
        tols.append(tol_floor)
    return tols


def _lambda_interval(g: Graph, tol: float) -> Optional[tuple[Fraction, Fraction]]:
    """Enclosure of lambda(G) as exact rationals; width 0 when lambda is
    known exactly (regular), near-0 for complete bipartite graphs."""
    e = exact_lambda(g)
    if e is not None:
        return e, e
    s = exact_lambda_sq(g)
    if s is not None:
        return sqrt_interval(s, Fraction(tol) / 4)
    c = perron_enclosure(g, tol)
    if not c.converged:
        return None
    return Fraction(c.lambda_lo), Fraction(c.lambda_hi)


def compare_lambda(g: Graph, h: Graph, tol_floor: float = 1e-12) -> Ordering:
    """Certified ordering of lambda(G) vs lambda(H).

    Tightens both enclosures geometrically until the intervals are disjoint
    or both widths drop below tol_floor; Tie refuses to certify and never
    claims equality. Exact values (regular / complete bipartite graphs)
    enter as zero-width intervals, so true equalities of that shape still
    compare as Tie rather than thrashing the iteration.
    """
    if tol_floor <= 0:
        raise ValueError("tol_floor must be positive")
    if g.n == h.n and g.rows == h.rows:
        return Ordering.TIE
    for tol in _tols_down_to(tol_floor):
        ig = _lambda_interval(g, tol)
        ih = _lambda_interval(h, tol)
        if ig is None or ih is None:
            return Ordering.INDETERMINATE
        if ig[1] < ih[0]:
            return Ordering.LESS
        if ig[0] > ih[1]:
            return Ordering.GREATER
    return Ordering.TIE


def certify_lambda_ge_frac(g: Graph, c: Fraction, tol_floor: float = 1e-12) -> Optional[bool]:
    """True: lambda >= c certified. False: lambda < c certified. None: undecided."""
    e = exact_lambda(g)
    if e is not None:
        return e >= c
    s = exact_lambda_sq(g)
    if s is not None and c >= 0:
        return s >= c * c
    if rayleigh_lower_bound(g) >= c:
        return True
    for tol in _tols_down_to(tol_floor):
        iv = _lambda_interval(g, tol)
        if iv is None:
            return None
        lo, hi = iv
        if lo >= c:
            return True
        if hi < c:
            return False
    return None


def certify_lambda_le_frac(g: Graph, c: Fraction, tol_floor: float = 1e-12) -> Optional[bool]:
    e = exact_lambda(g)
    if e is not None:
        return e <= c
    s = exact_lambda_sq(g)
    if s is not None and c >= 0:
        return s <= c * c
    if rayleigh_lower_bound(g) > c:
        return False
    for tol in _tols_down_to(tol_floor):
        iv = _lambda_interval(g, tol)
        if iv is None:
            return None
        lo, hi = iv
        if hi <= c:
            return True
        if lo > c:
            return False
    return None


def certify_lambda_ge_sqrt(g: Graph, k: int, tol_floor: float = 1e-12) -> Optional[bool]:
    """Certified comparison of lambda(G) against sqrt(k) for integer k >= 0."""
    s = exact_lambda_sq(g)
    if s is not None:
        return s >= k
    e = exact_lambda(g)
    if e is not None:
        return e >= 0 and e * e >= k
    r = rayleigh_lower_bound(g)
    if r * r >= k:
        return True
    for tol in _tols_down_to(tol_floor):
        iv = _lambda_interval(g, tol)
        if iv is None:
            return None
        lo, hi = iv
        if lo >= 0 and lo * lo >= k:
            return True
        if hi * hi < k:
            return False
    return None


def certify_lambda_le_sqrt(g: Graph, k: int, tol_floor: float = 1e-12) -> Optional[bool]:
    s = exact_lambda_sq(g)
    if s is not None:
        return s <= k
    e = exact_lambda(g)
    if e is not None:
        return e * e <= k
    if rayleigh_lower_bound(g) ** 2 > k:
        return False
    for tol in _tols_down_to(tol_floor):
        iv = _lambda_interval(g, tol)
        if iv is None:
            return None
        lo, hi = iv
        if hi * hi <= k:
            return True
        if lo > 0 and lo * lo > k:
            return False
    return None


# ---------------------------------------------------------------------------
# Neighborhood rotation (the strict lambda-increasing edge move).
# ---------------------------------------------------------------------------


def rotation_increases_lambda(g: Graph, u: int, v: int, W: int) -> TheoremVerdict:
    """Rotate the edges {v,w} for w in W onto u and certify the strict
    lambda increase, provided the Perron weights satisfy x_u >= x_v."""
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError("u, v must be distinct vertices")
    allowed = g.rows[v] & ~g.rows[u] & ~(1 << u) & ~(1 << v)
    if W & ~allowed:
        raise ValueError("W must lie in N(v) \\ N(u), excluding u and v")
    params = {"u": u, "v": v, "W": W}
    if len(components(g)) != 1:
        return TheoremVerdict(
            "ROTATION", False, None, {}, None, "graph is disconnected", params
        )
    if W == 0:
        return TheoremVerdict(
            "ROTATION",
            False,
            False,
            {"note": "empty rotation leaves the graph unchanged"},
            {"degenerate": True},
            None,
            params,
        )
    cert = perron_enclosure(g, 1e-10)
    margin = cert.perron[u] - cert.perron[v]
    slack = 4.0 * cert.residual + cert.width
    hyp = bool(margin >= -slack)
    rows = list(g.rows)
    for w in bits(W):
        rows[v] &= ~(1 << w)
        rows[w] &= ~(1 << v)
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    g2 = Graph(g.n, tuple(rows), g.m)
    order = compare_lambda(g2, g)
    concl: Optional[bool]
    if order is Ordering.GREATER:
        concl = True
    elif order is Ordering.LESS:
        concl = False
    else:
        concl = None
    return TheoremVerdict(
        "ROTATION",
        hyp,
        concl,
        {"perron_margin": margin, "perron_slack": slack},
        None,
        None if concl is not None else f"comparison returned {order.value}",
        params,
    )
