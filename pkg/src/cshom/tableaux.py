"""Two-column tableau combinatorics: numberings, canonical forms, exchange
relations, and straightening into standard bases.

Everything works on explicit row tuples with plain integer entries; no group
algebra elements are materialized here.  The tabloid-level machinery in
groupalg.py provides the independent cross-check and the fallback route for
straighten when the rewrite stalls.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import NotInSpan, StraighteningStalled
from .graphs import Graph, connected_components
from .perms import sort_sign

__all__ = [
    "Partition",
    "Numbering",
    "NumberingVector",
    "numbering",
    "numbering_key",
    "canonicalize",
    "enumerate_syt",
    "enumerate_ssyt",
    "numbering_of_subgraph",
    "standardize",
    "pi_expand",
    "straighten",
]


@dataclass(frozen=True)
class Partition:
    """Integer partition, parts weakly decreasing and positive."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def is_two_column(self, k: int) -> bool:
        """True if this shape is (2^k, 1^(n-2k))."""
        return self.parts == (2,) * k + (1,) * (self.n - 2 * k)

    def two_column_rows(self) -> int | None:
        """k when the shape is (2^k, 1^(n-2k)), else None."""
        k = sum(1 for p in self.parts if p == 2)
        if self.parts == (2,) * k + (1,) * (len(self.parts) - k):
            return k
        return None

    @staticmethod
    def two_column(n: int, k: int) -> "Partition":
        if k < 1 or 2 * k > n:
            raise ValueError(f"no shape (2^{k}, 1^*) with n={n}")
        return Partition((2,) * k + (1,) * (n - 2 * k))


def numbering_key(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Comparison key realizing the total order on fillings of one shape.

    Keys compare row-major; within a row the comparison runs right to left,
    so the deciding cell is the rightmost differing column of the topmost
    differing row.
    """
    return tuple(tuple(reversed(row)) for row in rows)


@dataclass(frozen=True)
class Numbering:
    """Filling of a partition shape, stored as a tuple of row tuples.

    Construction only checks the shape (row lengths weakly decreasing);
    content checks are explicit via check_content so intermediate objects
    stay cheap.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(not row for row in rows):
            raise ValueError("rows must be non-empty")
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows!r}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def word(self) -> tuple[int, ...]:
        """Reading word: rows left to right, top row first."""
        return tuple(x for row in self.rows for x in row)

    def check_content(self) -> "Numbering":
        """Require entries to be exactly 1..n; returns self for chaining."""
        if sorted(self.word()) != list(range(1, self.n + 1)):
            raise ValueError(f"entries must be exactly 1..{self.n}: {self.rows!r}")
        return self

    def key(self) -> tuple[tuple[int, ...], ...]:
        return numbering_key(self.rows)

    def __lt__(self, other: "Numbering") -> bool:
        return self.key() < other.key()

    def is_standard(self) -> bool:
        rows = self.rows
        for row in rows:
            if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
                return False
        for r in range(1, len(rows)):
            upper, lower = rows[r - 1], rows[r]
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return True


def numbering(*rows: Sequence[int]) -> Numbering:
    """Shorthand: numbering((1, 2), (3, 4), (5,))."""
    return Numbering(tuple(tuple(r) for r in rows))


def canonicalize(nb: Numbering, frozen_rows: int = 0) -> tuple[int, Numbering]:
    """Signed canonical representative.

    Sorting inside a row is free.  Below the frozen prefix, rows of equal
    length are put in ascending order of content; permuting rows of length L
    multiplies the underlying element by the permutation sign raised to L,
    so only odd-length blocks can flip the sign.
    """
    if not 0 <= frozen_rows <= len(nb.rows):
        raise ValueError(f"frozen_rows out of range: {frozen_rows}")
    rows = [tuple(sorted(row)) for row in nb.rows]
    out = rows[:frozen_rows]
    sign = 1
    i = frozen_rows
    while i < len(rows):
        j = i
        while j < len(rows) and len(rows[j]) == len(rows[i]):
            j += 1
        block = rows[i:j]
        ordered = sorted(block)
        if ordered != block and len(block[0]) % 2 == 1:
            sign *= sort_sign(block)
        out.extend(ordered)
        i = j
    return sign, Numbering(tuple(out))


class NumberingVector:
    """Integer combination of numberings, keyed by canonical representatives."""

    __slots__ = ("terms",)

    def __init__(
        self,
        terms: Union[Mapping[Numbering, int], Iterable[tuple[Numbering, int]]] = (),
        frozen_rows: int = 0,
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Numbering, int] = {}
        for nb, c in items:
            if not c:
                continue
            sgn, canon = canonicalize(nb, frozen_rows)
            c = acc.get(canon, 0) + c * sgn
            if c:
                acc[canon] = c
            else:
                acc.pop(canon, None)
        self.terms = acc

    def items(self) -> list[tuple[Numbering, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].key())

    def __getitem__(self, nb: Numbering) -> int:
        return self.terms.get(nb, 0)

    def __iter__(self) -> Iterator[tuple[Numbering, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NumberingVector):
            return self.terms == other.terms
        if isinstance(other, Mapping):
            return self.terms == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        body = " ".join(f"{c:+d}*{nb.rows}" for nb, c in self.items())
        return f"NumberingVector({body or '0'})"


@functools.cache
def enumerate_syt(shape: Partition) -> tuple[Numbering, ...]:
    """All standard numberings of the shape, ascending in the total order."""
    lengths = shape.parts
    fills = [0] * len(lengths)
    rows: list[list[int]] = [[] for _ in lengths]
    out: list[Numbering] = []

    def place(v: int) -> None:
        if v > shape.n:
            out.append(Numbering(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(lengths)):
            c = fills[r]
            if c >= lengths[r]:
                continue
            # the cell above must already be filled
            if r > 0 and fills[r - 1] <= c:
                continue
            rows[r].append(v)
            fills[r] += 1
            place(v + 1)
            rows[r].pop()
            fills[r] -= 1

    place(1)
    out.sort(key=Numbering.key)
    return tuple(out)


@functools.cache
def enumerate_ssyt(
    shape: Partition, weight: Partition
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Semistandard fillings of the shape with the given content, ascending.

    Content: value v appears weight[v-1] times.  Rows weakly increase,
    columns strictly increase.  Returned as raw row tuples since entries
    repeat.
    """
    if weight.n != shape.n:
        raise ValueError(f"weight size {weight.n} != shape size {shape.n}")
    lengths = shape.parts
    remaining = list(weight.parts)
    rows: list[list[int]] = [[] for _ in lengths]
    out: list[tuple[tuple[int, ...], ...]] = []

    def place(r: int, c: int) -> None:
        if r == len(lengths):
            out.append(tuple(tuple(row) for row in rows))
            return
        nr, nc = (r, c + 1) if c + 1 < lengths[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, len(remaining) + 1):
            if not remaining[v - 1]:
                continue
            remaining[v - 1] -= 1
            rows[r].append(v)
            place(nr, nc)
            rows[r].pop()
            remaining[v - 1] += 1

    place(0, 0)
    out.sort(key=numbering_key)
    return tuple(out)


def numbering_of_subgraph(g: Graph, edges: Iterable[tuple[int, int]]) -> Numbering:
    """Row numbering attached to a spanning subgraph of g.

    Rows are the connected components of (V(g), edges), each sorted
    ascending; rows are ordered by decreasing size, ties broken by
    increasing minimum.
    """
    comps = connected_components(g.n, tuple(edges))
    rows = sorted((tuple(c) for c in comps), key=lambda row: (-len(row), row[0]))
    return Numbering(tuple(rows))


def standardize(filling: Sequence[Sequence[int]], target: Numbering) -> Numbering:
    """Relabel a semistandard filling into target's entries.

    Value v of the filling must occur exactly len(target.rows[v-1]) times;
    the stable sort of the filling's reading word then assigns target's
    reading word positionwise, sending equal values to one target row in
    increasing order.
    """
    rows = tuple(tuple(int(x) for x in row) for row in filling)
    wy = [x for row in rows for x in row]
    wt = target.word()
    if len(wy) != len(wt):
        raise ValueError(f"filling has {len(wy)} cells, target has {len(wt)}")
    counts = Counter(wy)
    if sorted(counts) != list(range(1, len(target.rows) + 1)):
        raise ValueError(f"filling values must be 1..{len(target.rows)}")
    for v, row in enumerate(target.rows, start=1):
        if counts[v] != len(row):
            raise ValueError(
                f"value {v} occurs {counts[v]} times, target row has {len(row)} cells"
            )
    order = sorted(range(len(wy)), key=lambda k: (wy[k], k))
    ranks = [0] * len(wy)
    for rank, k in enumerate(order):
        ranks[k] = rank
    word = [wt[ranks[k]] for k in range(len(wy))]
    out = []
    pos = 0
    for row in rows:
        out.append(tuple(word[pos : pos + len(row)]))
        pos += len(row)
    return Numbering(tuple(out))


def pi_expand(s: Numbering, i: int, j: int) -> NumberingVector:
    """Exchange relation at rows i, i+1 (1-indexed): the element of s equals
    (-1)^j times the sum over exchanges of the first j entries of row i+1
    with j-subsets of row i, each subset keeping its internal order.

    Returns that expansion with canonicalized terms.
    """
    rows = s.rows
    if not 1 <= i < len(rows):
        raise ValueError(f"row index {i} out of range for {len(rows)} rows")
    upper, lower = rows[i - 1], rows[i]
    if not 1 <= j <= min(len(upper), len(lower)):
        raise ValueError(f"exchange width {j} out of range")
    moved = lower[:j]
    rest = lower[j:]
    sign = -1 if j % 2 else 1
    pairs = []
    for pos in itertools.combinations(range(len(upper)), j):
        new_upper = list(upper)
        for t, p in enumerate(pos):
            new_upper[p] = moved[t]
        new_lower = tuple(upper[p] for p in pos) + rest
        nb = Numbering(rows[: i - 1] + (tuple(new_upper), new_lower) + rows[i + 1 :])
        pairs.append((nb, sign))
    return NumberingVector(pairs)


def _violation(
    rows: tuple[tuple[int, ...], ...], frozen_rows: int
) -> tuple[int, int] | None:
    """Topmost non-frozen adjacent row pair breaking column increase, with
    the rightmost offending column.  Expects within-row sorted rows."""
    for r in range(frozen_rows + 1, len(rows)):
        upper, lower = rows[r - 1], rows[r]
        found = -1
        for c in range(len(lower)):
            if upper[c] > lower[c]:
                found = c
        if found >= 0:
            return r, found
    return None


TermsLike = Union[Numbering, NumberingVector, Iterable[tuple[Numbering, int]]]


def straighten(
    v: TermsLike,
    basis: Sequence[Numbering],
    frozen_rows: int = 0,
    *,
    step_limit: int = 1_000_000,
) -> list[int]:
    """Integer coefficients of v over basis, by exchange-relation rewriting.

    Rows above frozen_rows are never touched; each rewrite step takes the
    topmost violating row pair below the frozen prefix, the rightmost
    violating column, and trades that single entry against every entry of
    the row above (one sign flip per term).  This measure strictly
    decreases, so on two-column shapes the loop always reaches fillings
    with no violations; those must be basis members.

    If the step budget is exhausted, or a violation-free term is not in the
    basis, the tabloid oracle decides instead (n <= 7 only); past that
    StraighteningStalled is raised.  NotInSpan propagates from the oracle
    when v is provably outside the basis span.
    """
    index: dict[Numbering, int] = {}
    for pos, b in enumerate(basis):
        if b in index:
            raise ValueError(f"duplicate basis entry: {b.rows!r}")
        index[b] = pos

    if isinstance(v, Numbering):
        pairs = [(v, 1)]
    elif isinstance(v, NumberingVector):
        pairs = v.items()
    else:
        pairs = list(v)

    out = [0] * len(basis)
    work: list[tuple[int, Numbering]] = []
    for nb, c in pairs:
        if not c:
            continue
        sgn, canon = canonicalize(nb, frozen_rows)
        work.append((c * sgn, canon))

    stalled = False
    steps = 0
    while work:
        steps += 1
        if steps > step_limit:
            stalled = True
            break
        c, s = work.pop()
        hit = _violation(s.rows, frozen_rows)
        if hit is None:
            pos = index.get(s)
            if pos is None:
                stalled = True
                break
            out[pos] += c
            continue
        r, col = hit
        x = s.rows[r][col]
        low_rest = s.rows[r][:col] + s.rows[r][col + 1 :]
        for t, y in enumerate(s.rows[r - 1]):
            up = s.rows[r - 1][:t] + (x,) + s.rows[r - 1][t + 1 :]
            nb = Numbering(s.rows[: r - 1] + (up, (y,) + low_rest) + s.rows[r + 1 :])
            sgn, canon = canonicalize(nb, frozen_rows)
            work.append((-c * sgn, canon))

    if not stalled:
        return out

    n = max((nb.n for nb, _ in pairs), default=0)
    if n > 7:
        raise StraighteningStalled(
            f"rewrite did not settle within {step_limit} steps and the "
            f"oracle bound (n <= 7) excludes n={n}"
        )
    from . import groupalg  # deferred: groupalg imports this module

    return groupalg.expand_numberings(pairs, basis)
