"""Deterministic builders for the named extremal graph families.

Every builder returns the graph together with closed-form predicted
statistics so callers can cross-check measured edge and triangle counts
against the formulas. Layout conventions are canonical: the larger part of
a bipartite Turan graph occupies the lowest vertex labels, and embedded
subgraphs sit on the lowest-indexed vertices of their part, so graph6
output is reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, build_graph
from .roots import FamilyPolynomial
from .triangles import triangle_count


@dataclass(frozen=True)
class PredictedStats:
    m_expected: int
    t_expected: int
    lambda_poly: Optional[FamilyPolynomial] = None


@dataclass(frozen=True)
class Construction:
    graph: Graph
    predicted: PredictedStats
    spec: str  # canonical parameter string, e.g. "Y:n=10,q=2"


def _parts_turan(n: int, r: int) -> list[list[int]]:
    """Vertex classes of T_{n,r}, larger classes first, labels contiguous."""
    sizes = [(n + r - 1 - i) // r for i in range(r)]
    parts = []
    at = 0
    for s in sizes:
        parts.append(list(range(at, at + s)))
        at += s
    return parts


def turan(n: int, r: int) -> Construction:
    """Complete r-partite graph with part sizes as equal as possible."""
    if r < 1:
        raise ValueError("need r >= 1")
    parts = _parts_turan(n, min(r, n) if n else r)
    sizes = [len(p) for p in parts]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    g = build_graph(n, edges)
    e1 = sum(sizes)
    e2 = sum(a * b for i, a in enumerate(sizes) for b in sizes[i + 1 :])
    e3 = 0
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for k in range(j + 1, len(sizes)):
                e3 += sizes[i] * sizes[j] * sizes[k]
    assert e1 == n
    return Construction(g, PredictedStats(e2, e3), f"Turan:n={n},r={r}")


def _turan2_edges(n: int) -> tuple[list[tuple[int, int]], int]:
    """All cross edges of T_{n,2}; larger part is vertices 0..ceil(n/2)-1."""
    a = (n + 1) // 2
    return [(u, v) for u in range(a) for v in range(a, n)], a


def t_n2q(n: int, q: int) -> Construction:
    """T_{n,2} with a q-edge star on the lowest labels of the larger part."""
    edges, a = _turan2_edges(n)
    if q < 0 or q + 1 > a:
        raise ValueError(f"star with {q} edges does not fit in part of size {a}")
    edges.extend((0, i) for i in range(1, q + 1))
    g = build_graph(n, edges)
    poly = FamilyPolynomial("T_star4", n) if q == 4 and n >= 9 and n % 2 else None
    if q == 1:
        poly = FamilyPolynomial("Y_even" if n % 2 == 0 else "Y_odd", n)
    return Construction(
        g,
        PredictedStats(n * n // 4 + q, q * (n // 2), poly),
        f"T:n={n},q={q}",
    )


def y_n2q(n: int, q: int) -> Construction:
    """T_{n,2} with q disjoint edges on the lowest labels of the larger part."""
    edges, a = _turan2_edges(n)
    if q < 0 or 2 * q > a:
        raise ValueError(f"{q}-edge matching does not fit in part of size {a}")
    edges.extend((2 * i, 2 * i + 1) for i in range(q))
    g = build_graph(n, edges)
    poly = None
    if q == 1:
        poly = FamilyPolynomial("Y_even" if n % 2 == 0 else "Y_odd", n)
    return Construction(
        g,
        PredictedStats(n * n // 4 + q, q * (n // 2), poly),
        f"Y:n={n},q={q}",
    )


def kab_plus(a: int, b: int) -> Construction:
    """K_{a,b} plus one edge inside the a-side; has exactly b triangles."""
    if a < 2:
        raise ValueError("need a >= 2 to host the extra edge")
    n = a + b
    edges = [(u, v) for u in range(a) for v in range(a, n)]
    edges.append((0, 1))
    g = build_graph(n, edges)
    return Construction(g, PredictedStats(a * b + 1, b), f"Kab+:a={a},b={b}")


SIDE_LARGER = "larger"
SIDE_SMALLER = "smaller"


def embed_into_turan2(n: int, h: Graph, side: str = SIDE_LARGER) -> Construction:
    """T_{n,2} with H's edges copied onto the first |V(H)| vertices of the
    chosen part."""
    edges, a = _turan2_edges(n)
    part = list(range(a)) if side == SIDE_LARGER else list(range(a, n))
    if side not in (SIDE_LARGER, SIDE_SMALLER):
        raise ValueError(f"side must be {SIDE_LARGER!r} or {SIDE_SMALLER!r}")
    if h.n > len(part):
        raise ValueError(f"embedded graph on {h.n} vertices exceeds part size {len(part)}")
    edges.extend((part[u], part[v]) for u, v in h.edges())
    g = build_graph(n, edges)
    other = n - len(part)
    return Construction(
        g,
        PredictedStats(n * n // 4 + h.m, h.m * other + triangle_count(h)),
        f"Embed:n={n},side={side[0].upper()},mH={h.m},nH={h.n}",
    )


def _bc_parts(n: int, s: int, t: int, a: int) -> tuple[int, int, int]:
    if not 0 < t < s:
        raise ValueError("need 0 < t < s")
    if a < 0:
        raise ValueError("need a >= 0")
    alpha = s - t - a * a - (a if n % 2 else 0)
    if alpha < 0:
        raise ValueError(f"alpha = {alpha} < 0: size correction a={a} too large")
    size_a = (n + 1) // 2 + a
    size_b = n // 2 - a
    if size_b < 1:
        raise ValueError("small part is empty")
    return size_a, size_b, alpha


def balogh_clemen_g1(n: int, s: int, t: int, a: int) -> Construction:
    """Near-bipartite graph with one edge in the small part, s-1 disjoint
    edges in the big part, and alpha cross deletions at the small-part hub."""
    size_a, size_b, alpha = _bc_parts(n, s, t, a)
    if 2 * (s - 1) > size_a:
        raise ValueError(f"2(s-1)={2 * (s - 1)} picked vertices exceed |A|={size_a}")
    if size_b < 2:
        raise ValueError("small part must hold two vertices")
    if alpha > s - 1:
        raise ValueError(f"alpha={alpha} deletions but only {s - 1} matched x-vertices")
    # parts are A = 0..size_a-1, B = size_a..n-1 (A may exceed ceil(n/2))
    edges = [(u, v) for u in range(size_a) for v in range(size_a, n)]
    u1, u2 = size_a, size_a + 1
    edges.append((u1, u2))
    xs = [2 * i for i in range(s - 1)]
    ys = [2 * i + 1 for i in range(s - 1)]
    edges.extend(zip(xs, ys))
    removed = {(x, u1) for x in xs[:alpha]}
    edges = [e for e in edges if (e[0], e[1]) not in removed and (e[1], e[0]) not in removed]
    g = build_graph(n, edges)
    return Construction(
        g,
        PredictedStats(n * n // 4 + t, (s - 1) * size_b + size_a - 2 * alpha),
        f"G1:n={n},s={s},t={t},a={a}",
    )


def balogh_clemen_g2(n: int, s: int, t: int, a: int) -> Construction:
    """Near-bipartite graph with s disjoint edges in the big part and alpha
    cross deletions at one small-part vertex."""
    size_a, size_b, alpha = _bc_parts(n, s, t, a)
    if 2 * s > size_a:
        raise ValueError(f"2s={2 * s} picked vertices exceed |A|={size_a}")
    if alpha > s:
        raise ValueError(f"alpha={alpha} deletions but only {s} matched x-vertices")
    edges = [(u, v) for u in range(size_a) for v in range(size_a, n)]
    u = size_a
    xs = [2 * i for i in range(s)]
    ys = [2 * i + 1 for i in range(s)]
    edges.extend(zip(xs, ys))
    removed = {(x, u) for x in xs[:alpha]}
    edges = [e for e in edges if (e[0], e[1]) not in removed and (e[1], e[0]) not in removed]
    g = build_graph(n, edges)
    return Construction(
        g,
        PredictedStats(n * n // 4 + t, s * size_b - alpha),
        f"G2:n={n},s={s},t={t},a={a}",
    )


def l_nsalpha(n: int, s: int, alpha: float) -> Construction:
    """Complete (s+1)-partite graph with s parts of ideal size
    n(1+alpha)/(s+1) and one of size n(1-s*alpha)/(s+1).

    Real sizes are floored, then leftover vertices go one at a time to the
    parts with the largest fractional remainder (ties to the lower index).
    """
    if s < 2:
        raise ValueError("need s >= 2")
    if not 0 <= alpha < 1 / s:
        raise ValueError("need 0 <= alpha < 1/s")
    ideal = [n * (1 + alpha) / (s + 1)] * s + [n * (1 - s * alpha) / (s + 1)]
    sizes = [math.floor(x) for x in ideal]
    rem = n - sum(sizes)
    order = sorted(range(s + 1), key=lambda i: (-(ideal[i] - sizes[i]), i))
    for i in range(rem):
        sizes[order[i % (s + 1)]] += 1
    if any(sz <= 0 for sz in sizes):
        raise ValueError(f"part sizes {sizes} infeasible (one part empties)")
    parts = []
    at = 0
    for sz in sizes:
        parts.append(list(range(at, at + sz)))
        at += sz
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    g = build_graph(n, edges)
    e2 = sum(x * y for i, x in enumerate(sizes) for y in sizes[i + 1 :])
    e3 = 0
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for k in range(j + 1, len(sizes)):
                e3 += sizes[i] * sizes[j] * sizes[k]
    return Construction(g, PredictedStats(e2, e3), f"L:n={n},s={s},alpha={alpha!r}")


def book_join(k: int) -> Construction:
    """Two adjacent hubs joined to k independent page vertices."""
    if k < 0:
        raise ValueError("need k >= 0")
    n = k + 2
    edges = [(0, 1)]
    edges.extend((h, v) for h in (0, 1) for v in range(2, n))
    g = build_graph(n, edges)
    return Construction(g, PredictedStats(2 * k + 1, k), f"Book:k={k}")


# -- small embeddable graphs for the embedding-order experiments ------------


def small_star(q: int) -> Graph:
    return build_graph(q + 1, [(0, i) for i in range(1, q + 1)])


def small_clique(c: int) -> Graph:
    return build_graph(c, [(i, j) for i in range(c) for j in range(i + 1, c)])


def small_complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def small_cycle(q: int) -> Graph:
    if q < 3:
        raise ValueError("cycle needs >= 3 edges")
    return build_graph(q, [(i, (i + 1) % q) for i in range(q)])


def small_path(q: int) -> Graph:
    return build_graph(q + 1, [(i, i + 1) for i in range(q)])


def small_matching(q: int) -> Graph:
    return build_graph(2 * q, [(2 * i, 2 * i + 1) for i in range(q)])


def build_from_spec(spec: str) -> Construction:
    """Parse a canonical construction string like "Y:n=10,q=2"."""
    try:
        head, _, rest = spec.partition(":")
        kv = {}
        if rest:
            for item in rest.split(","):
                key, _, val = item.partition("=")
                kv[key] = float(val) if key == "alpha" else int(val)
    except Exception as exc:
        raise ValueError(f"malformed construction spec {spec!r}") from exc
    builders = {
        "Turan": lambda: turan(kv["n"], kv["r"]),
        "T": lambda: t_n2q(kv["n"], kv["q"]),
        "Y": lambda: y_n2q(kv["n"], kv["q"]),
        "Kab+": lambda: kab_plus(kv["a"], kv["b"]),
        "G1": lambda: balogh_clemen_g1(kv["n"], kv["s"], kv["t"], kv["a"]),
        "G2": lambda: balogh_clemen_g2(kv["n"], kv["s"], kv["t"], kv["a"]),
        "L": lambda: l_nsalpha(kv["n"], kv["s"], kv["alpha"]),
        "Book": lambda: book_join(kv["k"]),
    }
    if head not in builders:
        raise ValueError(f"unknown construction family {head!r}")
    return builders[head]()
