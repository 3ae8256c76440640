"""Exact integer linear algebra: Smith normal form with transforms, integer
kernels and solves, homology of a two-step integer complex, and torsion
certificate checking.

Matrices cross the API as lists of rows of Python ints, so results are exact
no matter the size.  Internally elimination runs on numpy int64 for speed
with a magnitude guard; when entries approach the guard the computation
restarts on an object-dtype array (Python ints, still vectorized, still
exact).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ComplexNotExact

__all__ = [
    "smith_normal_form",
    "kernel_basis",
    "solve_integer",
    "SnfSolver",
    "homology_group",
    "HomologyResult",
    "TorsionCertificate",
    "CertificateVerdict",
    "check_certificate",
    "mat_mul",
    "mat_vec",
    "determinant",
]

Matrix = list[list[int]]

# int64 elimination restarts in exact mode once any entry reaches this
_GUARD = 1 << 28


class _Overflow(Exception):
    pass


def _dims(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    r = len(m)
    c = len(m[0]) if r else 0
    if any(len(row) != c for row in m):
        raise ValueError("ragged matrix")
    return r, c


def _eye(n: int, exact: bool) -> np.ndarray:
    if exact:
        out = np.zeros((n, n), dtype=object)
        for i in range(n):
            out[i, i] = 1
        return out
    return np.eye(n, dtype=np.int64)


def _exceeds(a: np.ndarray) -> bool:
    return bool(a.size) and int(np.abs(a).max()) >= _GUARD


def _snf_arrays(
    A: np.ndarray, guarded: bool
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rows, cols = A.shape
    exact = not guarded
    U = _eye(rows, exact)
    V = _eye(cols, exact)
    k = 0
    while k < min(rows, cols):
        sub = A[k:, k:]
        nzr, nzc = np.nonzero(sub)
        if len(nzr) == 0:
            break
        t = int(np.argmin(np.abs(sub[nzr, nzc])))
        i, j = int(nzr[t]) + k, int(nzc[t]) + k
        if i != k:
            A[[k, i], :] = A[[i, k], :]
            U[[k, i], :] = U[[i, k], :]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            V[:, [k, j]] = V[:, [j, k]]
        while True:
            if guarded and (_exceeds(A) or _exceeds(U) or _exceeds(V)):
                raise _Overflow
            if A[k, k] < 0:
                A[k, :] = -A[k, :]
                U[k, :] = -U[k, :]
            p = A[k, k]
            col = A[:, k].copy()
            col[k] = 0
            if np.any(col):
                q = col // p
                A -= np.outer(q, A[k, :])
                U -= np.outer(q, U[k, :])
                rem = A[:, k].copy()
                rem[k] = 0
                nz = np.nonzero(rem)[0]
                if len(nz):
                    # remainder smaller than the pivot: promote it
                    i = int(nz[np.argmin(np.abs(rem[nz]))])
                    A[[k, i], :] = A[[i, k], :]
                    U[[k, i], :] = U[[i, k], :]
                continue
            rowv = A[k, :].copy()
            rowv[k] = 0
            if np.any(rowv):
                q = rowv // p
                A -= np.outer(A[:, k], q)
                V -= np.outer(V[:, k], q)
                rem = A[k, :].copy()
                rem[k] = 0
                nz = np.nonzero(rem)[0]
                if len(nz):
                    j = int(nz[np.argmin(np.abs(rem[nz]))])
                    A[:, [k, j]] = A[:, [j, k]]
                    V[:, [k, j]] = V[:, [j, k]]
                continue
            if p != 1 and k + 1 < min(rows, cols):
                tail = A[k + 1 :, k + 1 :]
                bad_r, bad_c = np.nonzero(tail % p)
                if len(bad_r):
                    i = int(bad_r[0]) + k + 1
                    A[k, :] += A[i, :]
                    U[k, :] += U[i, :]
                    continue
            break
        k += 1
    return A, U, V


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: returns (S, U, V) with U m V = S.

    U and V are unimodular; S is diagonal with nonnegative entries, each
    dividing the next.
    """
    r, c = _dims(m)
    try:
        A = np.array(m, dtype=np.int64).reshape(r, c)
        if _exceeds(A):
            raise _Overflow
        S, U, V = _snf_arrays(A, guarded=True)
    except (_Overflow, OverflowError):
        A = np.empty((r, c), dtype=object)
        for i in range(r):
            for j in range(c):
                A[i, j] = int(m[i][j])
        S, U, V = _snf_arrays(A, guarded=False)
    return S.tolist(), U.tolist(), V.tolist()


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    r, c = _dims(m)
    if r != c:
        raise ValueError("determinant needs a square matrix")
    if r == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(r - 1):
        if a[k][k] == 0:
            for i in range(k + 1, r):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[r - 1][r - 1]


class SnfSolver:
    """Reusable integer solver for m x = b built on one SNF computation."""

    def __init__(self, m: Matrix) -> None:
        self.rows, self.cols = _dims(m)
        self.S, self.U, self.V = smith_normal_form(m)
        self.diag = [self.S[i][i] for i in range(min(self.rows, self.cols))]
        self.rank = sum(1 for d in self.diag if d)

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        """One integer solution of m x = b, or None when none exists."""
        return self.solve_batch([list(b)])[0]

    def solve_batch(self, bs: Sequence[Sequence[int]]) -> list[Optional[list[int]]]:
        """Solve m x = b for many right-hand sides off one SNF."""
        if not bs:
            return []
        for b in bs:
            if len(b) != self.rows:
                raise ValueError(f"rhs length {len(b)} != {self.rows} rows")
        bmat = [[b[i] for b in bs] for i in range(self.rows)]
        ub = mat_mul(self.U, bmat)
        ys: list[Optional[list[int]]] = []
        for t in range(len(bs)):
            y = [0] * self.cols
            good = True
            for i in range(self.rows):
                d = self.diag[i] if i < len(self.diag) else 0
                v = ub[i][t]
                if d:
                    if v % d:
                        good = False
                        break
                    y[i] = v // d
                elif v:
                    good = False
                    break
            ys.append(y if good else None)
        good_idx = [t for t, y in enumerate(ys) if y is not None]
        out: list[Optional[list[int]]] = [None] * len(bs)
        if good_idx and self.cols:
            ymat = [[ys[t][i] for t in good_idx] for i in range(self.cols)]
            xmat = mat_mul(self.V, ymat)
            for pos, t in enumerate(good_idx):
                out[t] = [xmat[i][pos] for i in range(self.cols)]
        elif good_idx:
            for t in good_idx:
                out[t] = []
        return out

    def in_image(self, b: Sequence[int]) -> bool:
        return self.solve(b) is not None


def solve_integer(m: Matrix, b: Sequence[int]) -> Optional[list[int]]:
    """Integer solution of m x = b, or None iff b is outside the column span."""
    return SnfSolver(m).solve(b)


def kernel_basis(m: Matrix) -> list[list[int]]:
    """Basis of the integer kernel lattice of m, as a list of columns.

    The returned columns generate the full kernel lattice (the unimodular V
    of the SNF makes the sublattice saturated).  Each column's first nonzero
    entry is positive for deterministic output.
    """
    r, c = _dims(m)
    S, U, V = smith_normal_form(m)
    rank = sum(1 for i in range(min(r, c)) if S[i][i])
    out = []
    for j in range(rank, c):
        col = [V[i][j] for i in range(c)]
        lead = next((x for x in col if x), 0)
        if lead < 0:
            col = [-x for x in col]
        out.append(col)
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product with plain-int results."""
    ra, ca = _dims(a)
    rb, cb = _dims(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    if cb == 0:
        return [[] for _ in range(ra)]
    if ca == 0:
        return [[0] * cb for _ in range(ra)]
    ma = max((abs(x) for row in a for x in row), default=0)
    mb = max((abs(x) for row in b for x in row), default=0)
    if ma and mb and ma * mb * ca < (1 << 62):
        return (np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)).tolist()
    aa = np.empty((ra, ca), dtype=object)
    for i in range(ra):
        aa[i, :] = a[i]
    bb = np.empty((rb, cb), dtype=object)
    for i in range(rb):
        bb[i, :] = b[i]
    return (aa @ bb).tolist()


def mat_vec(m: Matrix, v: Sequence[int]) -> list[int]:
    r, c = _dims(m)
    if len(v) != c:
        raise ValueError(f"vector length {len(v)} != {c} columns")
    return [sum(row[j] * v[j] for j in range(c)) for row in m]


@dataclass(frozen=True)
class HomologyResult:
    """Betti number plus the invariant factors greater than one."""

    betti: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fac = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fac)
        if self.betti < 0:
            raise ValueError("negative betti number")
        if any(f <= 1 for f in fac):
            raise ValueError(f"factors must exceed 1: {fac!r}")
        if any(fac[i + 1] % fac[i] for i in range(len(fac) - 1)):
            raise ValueError(f"factors must form a divisibility chain: {fac!r}")

    @property
    def has_torsion(self) -> bool:
        return bool(self.invariant_factors)

    @property
    def has_z2(self) -> bool:
        return any(f % 2 == 0 for f in self.invariant_factors)


def homology_group(d1: Matrix, d2: Matrix) -> HomologyResult:
    """Middle homology of the integer complex  C2 --d2--> C1 --d1--> C0.

    Route: kernel lattice of d1, coordinates of every d2 column in that
    lattice (always integral since the lattice is saturated), then the SNF
    of the coordinate matrix.  betti = ker dim - rank; invariant factors are
    the diagonal entries above 1.

    Raises ComplexNotExact when d1 d2 != 0.
    """
    r1, c1 = _dims(d1)
    r2, c2 = _dims(d2)
    if c1 != r2:
        raise ValueError(f"shape mismatch: d1 is {r1}x{c1}, d2 is {r2}x{c2}")
    if c1 and c2:
        prod = mat_mul(d1, d2)
        if any(x for row in prod for x in row):
            raise ComplexNotExact("d1 composed with d2 is nonzero")
    kernel = kernel_basis(d1)
    kdim = len(kernel)
    if kdim == 0 or c2 == 0:
        return HomologyResult(betti=kdim, invariant_factors=())
    kmat = [[kernel[j][i] for j in range(kdim)] for i in range(c1)]
    solver = SnfSolver(kmat)
    columns = [[d2[i][j] for i in range(r2)] for j in range(c2)]
    coords = solver.solve_batch(columns)
    if any(y is None for y in coords):
        raise ComplexNotExact("a d2 column escapes the kernel lattice of d1")
    bmat = [[coords[j][i] for j in range(c2)] for i in range(kdim)]
    S, _, _ = smith_normal_form(bmat)
    diag = [S[i][i] for i in range(min(kdim, c2))]
    rank = sum(1 for d in diag if d)
    return HomologyResult(
        betti=kdim - rank,
        invariant_factors=tuple(d for d in diag if d > 1),
    )


@dataclass
class TorsionCertificate:
    """Witness data for a p-torsion class in bidegree (1, 0).

    h is a cycle in C1 coordinates (ordered as the complex's basis1) that is
    not a boundary, while witness_x in C2 coordinates satisfies
    d2 witness_x = p * h, so h has order exactly p in homology.

    The optional fields carry provenance when the certificate was produced
    by lifting: the construction trace, the subgraph witness it grew from,
    and the internal-to-input vertex relabeling.
    """

    graph: object
    shape: object
    h: tuple[int, ...]
    witness_x: tuple[int, ...]
    prime: int = 2
    trace: object = None
    witness: object = None
    vertex_map: dict = field(default=None, repr=False)

    def __post_init__(self) -> None:
        self.h = tuple(int(x) for x in self.h)
        self.witness_x = tuple(int(x) for x in self.witness_x)
        if self.prime < 2:
            raise ValueError("prime must be at least 2")


@dataclass(frozen=True)
class CertificateVerdict:
    """The three independent checks a torsion certificate must pass."""

    cycle: bool
    doubled: bool
    not_in_image: bool

    @property
    def valid(self) -> bool:
        return self.cycle and self.doubled and self.not_in_image


def check_certificate(cert: TorsionCertificate, complex) -> CertificateVerdict:
    """Verify a certificate against a freshly built complex.

    cycle:        d1 h = 0
    doubled:      d2 witness_x = prime * h
    not_in_image: h is not an integer combination of d2 columns

    Raises ValueError when the certificate does not even bind to the complex
    (different graph or shape, wrong vector lengths).
    """
    if cert.graph != complex.graph:
        raise ValueError("certificate graph differs from complex graph")
    if cert.shape != complex.shape:
        raise ValueError("certificate shape differs from complex shape")
    r1, c1 = _dims(complex.d1)
    r2, c2 = _dims(complex.d2)
    if len(cert.h) != c1 or len(cert.witness_x) != c2:
        raise ValueError(
            f"certificate vectors have lengths {len(cert.h)}/{len(cert.witness_x)}, "
            f"complex needs {c1}/{c2}"
        )
    h = list(cert.h)
    cycle = not any(mat_vec(complex.d1, h))
    dx = mat_vec(complex.d2, list(cert.witness_x))
    doubled = dx == [cert.prime * v for v in h]
    not_in_image = solve_integer(complex.d2, h) is None
    return CertificateVerdict(cycle=cycle, doubled=doubled, not_in_image=not_in_image)
