"""Middle assignments on hyperedges and their closure under the
four-point rule.

In every metric space, [abd] and [bcd] force [abc] and [acd].  Closing a
partial middle assignment under this rule either reaches a fixpoint or
hits one of two contradictions: a forced fact on a triple that is not a
hyperedge, or a second middle for an already oriented hyperedge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hypergraphs import Hypergraph3, Triple, sorted_triple

OrientationAssignment = dict[Triple, int]


@dataclass(frozen=True)
class ClosureConflict:
    """A forced fact that cannot stand, with the four points forcing it."""

    cause: str  # "non-hyperedge" | "middle-clash"
    quad: tuple[int, int, int, int]
    triple: Triple
    middle: int

    def __str__(self) -> str:
        return f"{self.cause}: middle {self.middle} of {self.triple} forced via {self.quad}"


def _menger_consequences(
    fact: tuple[Triple, int], other: tuple[Triple, int]
) -> list[tuple[Triple, int, tuple[int, int, int, int]]]:
    """Facts forced by one application of the rule to this pair.

    With premises [a b d] and [b c d] the conclusions are [a b c] and
    [a c d]; each returned entry carries its (a, b, c, d) witness.
    """
    t1, m1 = fact
    t2, m2 = other
    if t1 == t2:
        return []
    out = []
    e1 = [v for v in t1 if v != m1]
    e2 = [v for v in t2 if v != m2]
    # fact as [a b d], other as [b c d]: other's endpoints are {m1, d}
    for d in e1:
        if (m1 == e2[0] and d == e2[1]) or (m1 == e2[1] and d == e2[0]):
            a = e1[0] if e1[1] == d else e1[1]
            if a != m2:
                quad = (a, m1, m2, d)
                out.append((sorted_triple(a, m1, m2), m1, quad))
                out.append((sorted_triple(a, m2, d), m2, quad))
    # other as [a b d], fact as [b c d]: fact's endpoints are {m2, d}
    for d in e2:
        if (m2 == e1[0] and d == e1[1]) or (m2 == e1[1] and d == e1[0]):
            a = e2[0] if e2[1] == d else e2[1]
            if a != m1:
                quad = (a, m2, m1, d)
                out.append((sorted_triple(a, m2, m1), m2, quad))
                out.append((sorted_triple(a, m1, d), m1, quad))
    return out


class OrientationState:
    """Incremental middle assignment with closure and undo.

    The search engine pushes decisions through :meth:`assert_fact`, which
    propagates to the closure's fixpoint, and rolls back to checkpoints
    on backtracking.
    """

    def __init__(self, h: Hypergraph3):
        self.h = h
        self.middles: OrientationAssignment = {}
        self._facts: list[tuple[Triple, int]] = []

    def checkpoint(self) -> int:
        return len(self._facts)

    def rollback(self, mark: int) -> None:
        while len(self._facts) > mark:
            triple, _ = self._facts.pop()
            del self.middles[triple]

    def seed_unchecked(self, facts: list[tuple[Triple, int]]) -> None:
        """Record facts without propagation.

        Only for fact sets already closed under the rule and free of
        clashes, e.g. the linear orientation of a complete core, whose
        pairwise consequences are again order-median facts.
        """
        for triple, middle in facts:
            self.middles[triple] = middle
            self._facts.append((triple, middle))

    def assert_fact(self, triple: Triple, middle: int) -> Optional[ClosureConflict]:
        """Assert one fact and close; on conflict the state is unchanged
        relative to the caller's last checkpoint (caller rolls back)."""
        queue = [(triple, middle, (-1, -1, -1, -1))]
        qi = 0
        while qi < len(queue):
            t, m, quad = queue[qi]
            qi += 1
            existing = self.middles.get(t)
            if existing is not None:
                if existing == m:
                    continue
                return ClosureConflict("middle-clash", quad, t, m)
            if t not in self.h.triples:
                return ClosureConflict("non-hyperedge", quad, t, m)
            self.middles[t] = m
            self._facts.append((t, m))
            new = (t, m)
            for other in self._facts[:-1]:
                for ft, fm, fquad in _menger_consequences(new, other):
                    if self.middles.get(ft) != fm:
                        queue.append((ft, fm, fquad))
        return None


def orientation_closure(
    h: Hypergraph3, assignment: OrientationAssignment
) -> OrientationAssignment | ClosureConflict:
    """Least fixpoint of an assignment under the four-point rule.

    The input must assign middles only to hyperedges of ``h`` (ValueError
    otherwise); conflicts discovered while closing are returned, not
    raised, with the witnessing four points.
    """
    for t, m in assignment.items():
        t = sorted_triple(*t)
        if t not in h.triples:
            raise ValueError(f"assigned triple {t} is not a hyperedge")
        if m not in t:
            raise ValueError(f"middle {m} outside its triple {t}")
    state = OrientationState(h)
    for t in sorted(assignment):
        conflict = state.assert_fact(sorted_triple(*t), assignment[t])
        if conflict is not None:
            return conflict
    return dict(state.middles)
