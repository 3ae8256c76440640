"""Restricted chain complexes of a graph at a two-column shape.

For shape (2^k, 1^(n-2k)) the three chain groups are spanned by: standard
numberings (degree 0); one block of standardized fillings per edge (degree
1, K copies each); one block per non-consecutive edge pair (degree 2).
Differential columns are computed by straightening the block generators
into the target bases, with the sign convention: removing the
lexicographically smaller edge of a pair keeps the larger one and carries
+1, removing the larger carries -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ComplexNotExact
from .graphs import Graph, edge_pairs_by_type
from .intlinalg import mat_mul
from .tableaux import (
    Numbering,
    Partition,
    enumerate_ssyt,
    enumerate_syt,
    numbering_of_subgraph,
    standardize,
    straighten,
)

__all__ = ["RestrictedComplex", "build_restricted_complex"]


@dataclass(frozen=True)
class RestrictedComplex:
    """Chain data of one graph at one two-column shape.

    basis1 rows are (edge_index, copy, filling) and basis2 rows are
    ((i, j), copy, filling); indices are 1-based to match the generator
    names X_i^j and W_{i,j}^l used in reports and certificates.  Matrices
    are row tuples of ints; d1 is |basis0| x |basis1|, d2 is
    |basis1| x |basis2|.
    """

    graph: Graph
    shape: Partition
    basis0: tuple[Numbering, ...]
    basis1: tuple[tuple[int, int, Numbering], ...]
    basis2: tuple[tuple[tuple[int, int], int, Numbering], ...]
    d1: tuple[tuple[int, ...], ...]
    d2: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.shape.two_column_rows()

    @property
    def copies1(self) -> int:
        """Specht multiplicity K of each edge block."""
        return len(self.basis1) // self.graph.m if self.graph.m else 0

    @cached_property
    def column_of_filling(self) -> dict[Numbering, int]:
        """Degree-1 column lookup; fillings are globally distinct since the
        top row pins the edge."""
        return {item[2]: col for col, item in enumerate(self.basis1)}

    @cached_property
    def column_of_edge_copy(self) -> dict[tuple[int, int], int]:
        return {(i, j): col for col, (i, j, _) in enumerate(self.basis1)}

    @cached_property
    def column_of_pair_copy(self) -> dict[tuple[int, int, int], int]:
        return {
            (i, j, l): col for col, ((i, j), l, _) in enumerate(self.basis2)
        }

    def dims(self) -> tuple[int, int, int]:
        return len(self.basis2), len(self.basis1), len(self.basis0)


def _standard_below(nb: Numbering, frozen_rows: int) -> bool:
    rows = nb.rows
    for r in range(frozen_rows, len(rows)):
        if any(rows[r][c] >= rows[r][c + 1] for c in range(len(rows[r]) - 1)):
            return False
        if r > frozen_rows:
            if any(rows[r - 1][c] >= rows[r][c] for c in range(len(rows[r]))):
                return False
    return True


def build_restricted_complex(g: Graph, shape: Partition) -> RestrictedComplex:
    """Assemble bases and differentials; the composite d1 d2 is asserted zero.

    Requires a canonical (sorted, loop-free) graph and a two-column shape
    with k >= 1 length-2 rows summing to n.  With k = 1 the degree-2 group
    is empty by definition, so d2 has no columns.
    """
    g.assert_canonical()
    if shape.n != g.n:
        raise ValueError(f"shape size {shape.n} != graph order {g.n}")
    k = shape.two_column_rows()
    if k is None or k < 1:
        raise ValueError(f"shape {shape.parts!r} is not (2^k, 1^*) with k >= 1")

    basis0 = enumerate_syt(shape)
    n = g.n

    mu = Partition((2,) + (1,) * (n - 2))
    patterns = enumerate_ssyt(shape, mu)
    kcopies = len(patterns)
    basis1: list[tuple[int, int, Numbering]] = []
    blocks1: list[list[Numbering]] = []
    for i, e in enumerate(g.edges, start=1):
        t_e = numbering_of_subgraph(g, (e,))
        block = [standardize(z, t_e) for z in patterns]
        for x in block:
            if x.rows[0] != e:
                raise AssertionError(f"filling {x.rows!r} does not start with {e!r}")
            if not _standard_below(x, 1):
                raise AssertionError(f"filling {x.rows!r} is not standard below the edge")
        if [x.rows for x in sorted(block, key=Numbering.key)] != [x.rows for x in block]:
            raise AssertionError("edge block must be listed in ascending order")
        blocks1.append(block)
        basis1.extend((i, j, x) for j, x in enumerate(block, start=1))

    d1_cols = [straighten(x, basis0) for _, _, x in basis1]
    d1 = tuple(
        tuple(d1_cols[c][r] for c in range(len(basis1)))
        for r in range(len(basis0))
    )

    basis2: list[tuple[tuple[int, int], int, Numbering]] = []
    d2_cols: list[list[int]] = []
    if k >= 2:
        noncons, _ = edge_pairs_by_type(g)
        nu = Partition((2, 2) + (1,) * (n - 4))
        w_patterns = enumerate_ssyt(shape, nu)
        for i0, j0 in noncons:
            ei, ej = g.edges[i0], g.edges[j0]
            t_f = numbering_of_subgraph(g, (ei, ej))
            for l, pat in enumerate(w_patterns, start=1):
                w = standardize(pat, t_f)
                if w.rows[0] != ei or w.rows[1] != ej:
                    raise AssertionError(
                        f"pair filling {w.rows!r} does not start with {ei!r}, {ej!r}"
                    )
                basis2.append(((i0 + 1, j0 + 1), l, w))
                col = [0] * len(basis1)
                kept_j = Numbering((w.rows[1], w.rows[0]) + w.rows[2:])
                for s, v in enumerate(straighten(kept_j, blocks1[j0], frozen_rows=1)):
                    col[j0 * kcopies + s] = v
                for s, v in enumerate(straighten(w, blocks1[i0], frozen_rows=1)):
                    col[i0 * kcopies + s] = -v
                d2_cols.append(col)

    d2 = tuple(
        tuple(d2_cols[c][r] for c in range(len(d2_cols)))
        for r in range(len(basis1))
    )

    if d2_cols:
        prod = mat_mul([list(r) for r in d1], [list(r) for r in d2])
        if any(x for row in prod for x in row):
            raise ComplexNotExact(
                f"d1 d2 != 0 for graph {g.edges!r} at shape {shape.parts!r}"
            )

    return RestrictedComplex(
        graph=g,
        shape=shape,
        basis0=basis0,
        basis1=tuple(basis1),
        basis2=tuple(basis2),
        d1=d1,
        d2=d2,
    )
