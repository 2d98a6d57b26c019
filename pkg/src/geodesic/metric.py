"""Finite metric spaces over exact rationals, and the structures they induce.

A metric space here is a labeled point set with a symmetric positive
rational distance matrix.  Everything downstream (betweenness, the
collinearity hypergraph, lines, line partitions) is an equality test on
distances, so all arithmetic is exact: no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .hypergraphs import Hypergraph3, PairEquivalence

Rational = Fraction


@dataclass(frozen=True)
class AxiomViolation:
    """One failed metric axiom, with the witnessing points."""

    kind: str  # "asymmetry" | "nonzero-diagonal" | "nonpositive" | "triangle"
    points: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        where = ",".join(self.points)
        return f"{self.kind}({where}){': ' + self.detail if self.detail else ''}"


class MetricValidationError(ValueError):
    """Raised when a distance chart fails the metric axioms."""

    def __init__(self, violations: list[AxiomViolation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class MetricSpace:
    """Labeled points with an exact symmetric distance matrix.

    Instances are immutable; build them through :func:`validate_metric`,
    which checks every axiom.  ``dist`` is indexed by point position.
    """

    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def index(self, label: str) -> int:
        return self.points.index(label)

    def d(self, p: str, q: str) -> Fraction:
        return self.dist[self.index(p)][self.index(q)]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, label: str) -> bool:
        return label in self.points


@dataclass(frozen=True)
class Betweenness:
    """The fact that ``v`` lies between ``u`` and ``w``: d(u,v)+d(v,w)=d(u,w).

    ``(u, v, w)`` and ``(w, v, u)`` state the same fact; instances are
    canonicalized so that ``u < w`` by label order.
    """

    u: str
    v: str
    w: str

    def __post_init__(self) -> None:
        if len({self.u, self.v, self.w}) != 3:
            raise ValueError(f"betweenness needs three distinct points, got {(self.u, self.v, self.w)}")
        if self.w < self.u:
            u, w = self.u, self.w
            object.__setattr__(self, "u", w)
            object.__setattr__(self, "w", u)

    @property
    def support(self) -> frozenset[str]:
        return frozenset((self.u, self.v, self.w))

    def __str__(self) -> str:
        return f"[{self.u} {self.v} {self.w}]"


def find_axiom_violations(points: Sequence[str], dist: Sequence[Sequence[Fraction]]) -> list[AxiomViolation]:
    """All metric-axiom failures of a structurally well-formed chart."""
    n = len(points)
    out: list[AxiomViolation] = []
    for i in range(n):
        if dist[i][i] != 0:
            out.append(AxiomViolation("nonzero-diagonal", (points[i],), f"d={dist[i][i]}"))
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                out.append(AxiomViolation("asymmetry", (points[i], points[j])))
            if dist[i][j] <= 0:
                out.append(AxiomViolation("nonpositive", (points[i], points[j]), f"d={dist[i][j]}"))
    for i, j, k in itertools.permutations(range(n), 3):
        if i < k:  # d(i,j)+d(j,k) >= d(i,k); symmetric in i,k
            if dist[i][j] + dist[j][k] < dist[i][k]:
                out.append(AxiomViolation("triangle", (points[i], points[j], points[k])))
    return out


def validate_metric(points: Sequence[str], dist: Sequence[Sequence[int | str | Fraction]]) -> MetricSpace:
    """Check a distance chart and return the validated MetricSpace.

    Structural problems (non-square matrix, duplicate labels) raise
    ``ValueError``; axiom failures raise :class:`MetricValidationError`
    carrying every violation found.
    """
    labels = tuple(str(p) for p in points)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate point labels")
    if not labels:
        raise ValueError("empty point set")
    if len(dist) != len(labels) or any(len(row) != len(labels) for row in dist):
        raise ValueError("distance matrix shape does not match point count")
    rows = tuple(tuple(Fraction(x) for x in row) for row in dist)
    violations = find_axiom_violations(labels, rows)
    if violations:
        raise MetricValidationError(violations)
    return MetricSpace(labels, rows)


def betweenness_triples(m: MetricSpace) -> frozenset[Betweenness]:
    """All betweenness facts of the space, canonicalized.

    For a fixed unordered triple at most one middle can hold: two
    simultaneous tight triangles would force a zero distance.
    """
    facts: list[Betweenness] = []
    n = len(m.points)
    d = m.dist
    for i, j in itertools.combinations(range(n), 2):
        for k in range(n):
            if k == i or k == j:
                continue
            # k between i and j
            if d[i][k] + d[k][j] == d[i][j]:
                facts.append(Betweenness(m.points[i], m.points[k], m.points[j]))
    return frozenset(facts)


def hypergraph_of(m: MetricSpace) -> Hypergraph3:
    """Collinearity hypergraph: unordered supports of all betweenness facts.

    Vertices are point positions in ``m.points``.
    """
    pos = {p: i for i, p in enumerate(m.points)}
    triples = set()
    for fact in betweenness_triples(m):
        triples.add(tuple(sorted(pos[p] for p in (fact.u, fact.v, fact.w))))
    return Hypergraph3(len(m.points), frozenset(triples))


def line(m: MetricSpace, p: str, q: str) -> frozenset[str]:
    """The line through p and q: both, plus every z collinear with them."""
    if p == q:
        raise ValueError("a line needs two distinct points")
    i, j = m.index(p), m.index(q)
    d = m.dist
    members = {p, q}
    for k, z in enumerate(m.points):
        if k in (i, j):
            continue
        if (
            d[i][k] + d[k][j] == d[i][j]
            or d[i][j] + d[j][k] == d[i][k]
            or d[k][i] + d[i][j] == d[k][j]
        ):
            members.add(z)
    return frozenset(members)


def line_partition(m: MetricSpace, subset: Sequence[str]) -> PairEquivalence:
    """Partition the pairs of ``subset`` by equality of their lines.

    Pair ``(i, j)`` in the result refers to ``(subset[i], subset[j])``;
    the caller's ordering of ``subset`` fixes the vertex numbering.
    """
    labels = list(subset)
    if len(set(labels)) != len(labels):
        raise ValueError("subset labels must be distinct")
    if len(labels) < 2:
        raise ValueError("need at least two points")
    by_line: dict[frozenset[str], list[tuple[int, int]]] = {}
    for a, b in itertools.combinations(range(len(labels)), 2):
        by_line.setdefault(line(m, labels[a], labels[b]), []).append((a, b))
    blocks = frozenset(frozenset(pairs) for pairs in by_line.values())
    return PairEquivalence(len(labels), blocks)


def induced_subspace(m: MetricSpace, subset: Iterable[str]) -> MetricSpace:
    """Restriction of the space to ``subset``, preserving point order."""
    wanted = set(subset)
    missing = wanted - set(m.points)
    if missing:
        raise ValueError(f"unknown points: {sorted(missing)}")
    keep = [i for i, p in enumerate(m.points) if p in wanted]
    if len(keep) < 2:
        raise ValueError("induced subspace needs at least two points")
    pts = tuple(m.points[i] for i in keep)
    rows = tuple(tuple(m.dist[i][j] for j in keep) for i in keep)
    return MetricSpace(pts, rows)


def recover_linear_order(m: MetricSpace, subset: Iterable[str]) -> Optional[list[str]]:
    """Find an ordering v0..vk of ``subset`` with every [v_a v_b v_c] tight.

    Requires every 3-subset of ``subset`` to be collinear in ``m``
    (raises ``ValueError`` otherwise).  Picks a diametral pair as the
    endpoints, sorts by distance from one of them, and verifies all
    triples.  Guaranteed to succeed for ``|subset| >= 5``; for smaller
    sets the collinear triples may be cyclic, in which case returns None.
    """
    labels = sorted(set(subset))
    facts = {(f.u, f.v, f.w) for f in betweenness_triples(m)}

    def tight(a: str, b: str, c: str) -> bool:
        x, z = (a, c) if a < c else (c, a)
        return (x, b, z) in facts

    for a, b, c in itertools.combinations(labels, 3):
        if not (tight(a, b, c) or tight(b, a, c) or tight(a, c, b)):
            raise ValueError(f"triple {{{a},{b},{c}}} of the subset is not collinear")

    if len(labels) <= 2:
        return labels

    # diametral pair
    best = max(
        itertools.combinations(labels, 2), key=lambda pq: (m.d(pq[0], pq[1]), pq)
    )
    start = best[0]
    order = sorted(labels, key=lambda p: (m.d(start, p), p))
    ok = all(
        tight(order[a], order[b], order[c])
        for a, b, c in itertools.combinations(range(len(order)), 3)
    )
    return order if ok else None


def menger_violations(facts: Iterable[Betweenness]) -> list[tuple[str, str, str, str]]:
    """Quadruples (a,b,c,d) with [abd] and [bcd] present but [abc] or [acd] absent.

    Pure set logic on a given fact set, so corrupted inputs can be
    checked directly; genuine metric spaces never produce violations.
    """
    present = {(f.u, f.v, f.w) for f in facts}

    def has(a: str, b: str, c: str) -> bool:
        x, z = (a, c) if a < c else (c, a)
        return (x, b, z) in present

    points = sorted({p for f in facts for p in (f.u, f.v, f.w)})
    bad: list[tuple[str, str, str, str]] = []
    for a, b, c, d in itertools.permutations(points, 4):
        if has(a, b, d) and has(b, c, d):
            if not has(a, b, c) or not has(a, c, d):
                bad.append((a, b, c, d))
    return bad


def check_menger(m: MetricSpace) -> list[tuple[str, str, str, str]]:
    """Menger-rule violations of the space's own betweenness facts.

    Always empty for a validated metric space; kept as a property oracle
    on the betweenness extractor.
    """
    return menger_violations(betweenness_triples(m))


def check_meq(m: MetricSpace, subset: Sequence[str], eq: PairEquivalence) -> bool:
    """Does the line partition of ``subset`` in ``m`` equal ``eq``?

    ``eq`` must be defined on ``len(subset)`` vertices, pair ``(i, j)``
    meaning ``(subset[i], subset[j])``.
    """
    if eq.n != len(subset):
        raise ValueError(f"equivalence is on {eq.n} vertices, subset has {len(subset)}")
    return line_partition(m, subset) == eq
