"""Enumeration of weight sequences up to symmetry, class counts, and the
named families.

Level n sequences are generated from the base sequence (1) by mediant
insertions: prepend 1, append 1, or insert k_i + k_{i+1} at an adjacency.
Marked actions are identified up to reversal; circle actions are identified
by the coarser connected-sum relation described at :func:`u1_key`.  The class
count delta(n) is gated against its known small values, and the three named
families (semi-free-containing, involution-isotropy, maximal-step) are
materialized explicitly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .errors import InternalInvariantError, InvalidParameterError
from .invariants import reduction_trace, regularity, sequence_l_vector

#: Known class counts delta(0..5); the equivalence relation must reproduce
#: these exactly, and u1_classes fails loudly if it does not.
KNOWN_DELTA = (1, 1, 2, 3, 7, 15)

#: The maximal-step family with its l-vectors and step counts, for n = 2..7.
FIBONACCI_TABLE = {
    2: ((1, 2, 1), (1, 1, 1, 1), 2),
    3: ((1, 2, 3, 1), (1, 1, 1, 2, 1), 3),
    4: ((1, 2, 5, 3, 1), (1, 1, 3, 2, 2, 1), 5),
    5: ((1, 2, 5, 8, 3, 1), (1, 1, 3, 3, 5, 2, 1), 8),
    6: ((1, 2, 5, 13, 8, 3, 1), (1, 1, 3, 8, 5, 5, 2, 1), 13),
    7: ((1, 2, 5, 13, 21, 8, 3, 1), (1, 1, 3, 8, 8, 13, 5, 2, 1), 21),
}


def fibonacci(n: int) -> int:
    """f(1) = f(2) = 1, f(3) = 2, ..."""
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def reversal_canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographic minimum of a sequence and its reversal."""
    return min(seq, seq[::-1])


def insertions(seq: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All children of a level-(n-1) sequence at level n, as a multiset:
    prepend 1, append 1, and the mediant k_i + k_{i+1} at each adjacency."""
    children = [(1,) + seq, seq + (1,)]
    for i in range(len(seq) - 1):
        children.append(seq[: i + 1] + (seq[i] + seq[i + 1],) + seq[i + 1 :])
    return children


@lru_cache(maxsize=None)
def enumerate_marked(n: int) -> tuple[tuple[int, ...], ...]:
    """All level-n sequences reachable from (1), one representative per
    reversal class, sorted.  Level sets are memoized, so walking up through
    the levels costs each level once.

    Expansion is order-independent: partitioning the parents across workers
    and merging the deduplicated results is guaranteed to reproduce this
    exact tuple.
    """
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    if n == 0:
        return ((1,),)
    level: set[tuple[int, ...]] = set()
    # children of a reversal are reversals of children, so one orientation
    # per parent suffices
    for parent in enumerate_marked(n - 1):
        for child in insertions(parent):
            level.add(reversal_canonical(child))
    return tuple(sorted(level))


def u1_key(seq: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Connected-sum class key of a marked sequence.

    The maximal blocks of consecutive entries > 1 are the summands of the
    action glued along the fixed sphere; reordering the summands and flipping
    any one of them are equivariant operations, so the class key is the
    sorted multiset of blocks, each block canonicalized up to reversal.  The
    all-ones sequence has the empty key.  This relation reproduces the known
    counts delta(4) = 7 and delta(5) = 15 (the finer run-length word fails at
    n = 5), and it is gated on them at runtime.
    """
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    for entry in seq:
        if entry == 1:
            if current:
                blocks.append(tuple(current))
                current = []
        else:
            current.append(entry)
    if current:
        blocks.append(tuple(current))
    return tuple(sorted(min(b, b[::-1]) for b in blocks))


@dataclass(frozen=True)
class CatalogClass:
    """One equivalence class of circle actions at a fixed n.

    members holds every marked sequence of the class (closed under reversal);
    canonical is their lexicographic minimum.  m is class-invariant; l is the
    l-vector of the canonical member; slack is the maximum slack over members
    (slack depends on the marked action, not just the class) and None for the
    semi-free class.
    """

    canonical: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    u1_key: tuple[tuple[int, ...], ...]
    m: int
    l: tuple[int, ...]
    slack: int | None


def _build_class(reps: list[tuple[int, ...]]) -> CatalogClass:
    members = sorted({orient for rep in reps for orient in (rep, rep[::-1])})
    canonical = members[0]
    slacks = [
        reg.slack for reg in (regularity(member) for member in members) if not reg.semi_free
    ]
    return CatalogClass(
        canonical=canonical,
        members=tuple(members),
        u1_key=u1_key(canonical),
        m=reduction_trace(canonical).m,
        l=sequence_l_vector(canonical),
        slack=max(slacks) if slacks else None,
    )


def u1_classes(n: int) -> tuple[list[CatalogClass], int]:
    """Group the level-n sequences into circle-action classes; returns the
    classes (sorted by canonical member) and their count delta(n)."""
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for rep in enumerate_marked(n):
        groups.setdefault(u1_key(rep), []).append(rep)
    classes = sorted((_build_class(reps) for reps in groups.values()), key=lambda c: c.canonical)
    delta = len(classes)
    if n < len(KNOWN_DELTA) and delta != KNOWN_DELTA[n]:
        raise InternalInvariantError(
            f"equivalence relation produced delta({n}) = {delta}, expected {KNOWN_DELTA[n]}"
        )
    return classes, delta


@dataclass(frozen=True)
class FamilySequence:
    """A named-family member with its deformability annotation."""

    seq: tuple[int, ...]
    semi_free: bool
    slack: int | None
    deformable: bool


def _annotate(seq: tuple[int, ...]) -> FamilySequence:
    reg = regularity(seq)
    return FamilySequence(
        seq=seq, semi_free=reg.semi_free, slack=reg.slack, deformable=reg.deformable
    )


def family_lebrun(n: int) -> list[FamilySequence]:
    """The floor(n/2) + 2 inequivalent subgroup sequences of the torus action
    whose metrics are LeBrun's, for n >= 3: the all-ones sequence, the full
    staircase (1, 2, ..., n, 1), the short staircase (1, 2, ..., n-1, 1, 1)
    (the only one with positive slack, namely 1), and the two-sided
    staircases glued at a step k for ceil(n/2) <= k <= n - 2."""
    if n < 3:
        raise InvalidParameterError("the LeBrun family needs n >= 3")
    seqs: list[tuple[int, ...]] = [
        (1,) * (n + 1),
        tuple(range(1, n + 1)) + (1,),
        tuple(range(1, n)) + (1, 1),
    ]
    for k in range((n + 1) // 2, n - 1):
        seqs.append(tuple(range(1, k + 1)) + (1,) + tuple(range(n - k, 0, -1)))
    members = [_annotate(seq) for seq in seqs]
    if len(members) != n // 2 + 2:
        raise InternalInvariantError("LeBrun family size is not floor(n/2) + 2")
    return members


def family_involutive(n: int) -> list[FamilySequence]:
    """One representative per circle-action class with isotropy contained in
    {1, -1}: c blocks (2) padded with ones, 0 <= c <= floor(n/2).  The slack
    is n - 2c (undefined for the semi-free c = 0), and none of these has a
    real singularity: every l_i is 0 or 1."""
    if n < 1:
        raise InvalidParameterError("the involutive family needs n >= 1")
    members = []
    for c in range(n // 2 + 1):
        seq = (1,) + (2, 1) * c + (1,) * (n - 2 * c)
        annotated = _annotate(seq)
        if c and annotated.slack != n - 2 * c:
            raise InternalInvariantError("involutive slack is not n - 2c")
        if any(l > 1 for l in sequence_l_vector(seq)):
            raise InternalInvariantError("involutive sequence acquired a real singularity")
        members.append(annotated)
    return members


def family_fibonacci(n: int) -> tuple[int, ...]:
    """The maximal-step sequence at level n (n >= 2): grow from (1, 2, 1) by
    always inserting the mediant at the adjacency with the largest sum,
    canonicalizing up to reversal.  The step count is the Fibonacci number
    f(n + 1), the maximum over all level-n sequences."""
    if n < 2:
        raise InvalidParameterError("the maximal-step family needs n >= 2")
    seq = (1, 2, 1)
    for _ in range(n - 2):
        best: tuple[int, tuple[int, ...]] | None = None
        for i in range(len(seq) - 1):
            child = reversal_canonical(
                seq[: i + 1] + (seq[i] + seq[i + 1],) + seq[i + 1 :]
            )
            candidate = (-(seq[i] + seq[i + 1]), child)
            if best is None or candidate < best:
                best = candidate
        seq = best[1]
    if reduction_trace(seq).m != fibonacci(n + 1):
        raise InternalInvariantError("maximal-step sequence missed its Fibonacci step count")
    return seq


@dataclass(frozen=True)
class DeltaRow:
    n: int
    delta: int
    marked_classes: int
    ratio: Fraction | None


@dataclass(frozen=True)
class DeltaTable:
    rows: tuple[DeltaRow, ...]


def growth_report(n_max: int) -> DeltaTable:
    """delta(n), reversal-class counts and delta(n)/n^2 for n = 0..n_max.
    Nondecreasing delta is asserted (prepending 1 embeds classes injectively);
    the quadratic lower bound is reported, never asserted."""
    rows = []
    previous = 0
    for n in range(n_max + 1):
        _, delta = u1_classes(n)
        if delta < previous:
            raise InternalInvariantError(f"delta decreased between n = {n - 1} and n = {n}")
        previous = delta
        rows.append(
            DeltaRow(
                n=n,
                delta=delta,
                marked_classes=len(enumerate_marked(n)),
                ratio=Fraction(delta, n * n) if n else None,
            )
        )
    return DeltaTable(rows=tuple(rows))


# ---------------------------------------------------------------------------
# JSON cache for repeated CLI invocations


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Cache directory: explicit argument, then $MTF_CACHE_DIR, then
    ~/.cache/minitwistor."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get("MTF_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "minitwistor"


class CatalogCache:
    """Per-n JSON cache of the class catalog."""

    VERSION = 1

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = resolve_cache_dir(directory)

    def path(self, n: int) -> Path:
        return self.directory / f"catalog_n{n}.json"

    def load(self, n: int) -> tuple[list[CatalogClass], int] | None:
        path = self.path(n)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            return None
        if data.get("version") != self.VERSION or data.get("n") != n:
            return None
        classes = [
            CatalogClass(
                canonical=tuple(entry["canonical"]),
                members=tuple(tuple(mem) for mem in entry["members"]),
                u1_key=tuple(tuple(block) for block in entry["u1_key"]),
                m=entry["m"],
                l=tuple(entry["l"]),
                slack=entry["slack"],
            )
            for entry in data["classes"]
        ]
        if n < len(KNOWN_DELTA) and len(classes) != KNOWN_DELTA[n]:
            return None
        return classes, data["delta"]

    def store(self, n: int, classes: list[CatalogClass], delta: int) -> Path | None:
        path = self.path(n)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
        except OSError:
            return None
        payload = {
            "version": self.VERSION,
            "n": n,
            "delta": delta,
            "classes": [
                {
                    "canonical": list(cls.canonical),
                    "members": [list(mem) for mem in cls.members],
                    "u1_key": [list(block) for block in cls.u1_key],
                    "m": cls.m,
                    "l": list(cls.l),
                    "slack": cls.slack,
                }
                for cls in classes
            ],
        }
        try:
            path.write_text(json.dumps(payload, sort_keys=True) + "\n", encoding="utf-8")
        except OSError:
            return None
        return path


def u1_classes_cached(
    n: int, cache: CatalogCache | None = None
) -> tuple[list[CatalogClass], int]:
    """u1_classes with a read-through JSON cache."""
    if cache is None:
        return u1_classes(n)
    hit = cache.load(n)
    if hit is not None:
        return hit
    classes, delta = u1_classes(n)
    cache.store(n, classes, delta)
    return classes, delta
