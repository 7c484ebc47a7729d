"""Eigenvalues, spectral decompositions and exact characteristic polynomials.

Complex Hermitian matrices are diagonalised through the real symmetric
embedding ``[[Re M, -Im M], [Im M, Re M]]`` with cyclic Jacobi rotations.
Every eigenvalue of M appears twice in the embedding; the doubled spectrum
is collapsed by pairing neighbours after sorting.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .config import Tolerances
from .eisenstein import EisensteinRational
from .matrices import EisensteinMatrix, HermitianMatrixExact
from .report import BOUND, TheoremReport

MatrixLike = Union[np.ndarray, EisensteinMatrix]

HERMITIAN_TOL = 1e-10
UNIT_TOL = 1e-10


class SpectralError(ValueError):
    """Input is not a Hermitian matrix or not a unit vector."""


class ConvergenceError(ArithmeticError):
    """Jacobi sweeps hit the cap before the off-diagonal mass vanished."""


class PairingWarning(RuntimeWarning):
    """The doubled spectrum of the real embedding did not pair up cleanly."""


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tol: float

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]

    @property
    def spread(self) -> float:
        return self.values[0] - self.values[-1]

    @property
    def radius(self) -> float:
        return max((abs(v) for v in self.values), default=0.0)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


@dataclass(frozen=True)
class SpectralDecomposition:
    values: np.ndarray  # descending
    vectors: np.ndarray  # column i is the unit eigenvector for values[i]

    def projector(self, i: int) -> np.ndarray:
        x = self.vectors[:, i]
        return np.outer(x, x.conj())

    def projectors(self) -> list[np.ndarray]:
        return [self.projector(i) for i in range(len(self.values))]

    def reconstruct(self) -> np.ndarray:
        v = self.vectors
        return (v * self.values) @ v.conj().T

    def projector_sum(self) -> np.ndarray:
        return self.vectors @ self.vectors.conj().T


def as_complex(M: MatrixLike) -> np.ndarray:
    if isinstance(M, EisensteinMatrix):
        return M.to_complex()
    arr = np.asarray(M)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {arr.shape}")
    return arr.astype(complex)


def _check_hermitian(m: np.ndarray) -> None:
    if m.size and np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise SpectralError("matrix is not Hermitian")


def real_embedding(m: np.ndarray) -> np.ndarray:
    re, im = m.real, m.imag
    return np.block([[re, -im], [im, re]])


def jacobi_eigh(
    a: np.ndarray, tol: float = 1e-10, max_sweeps: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi on a real symmetric matrix.

    Returns unsorted eigenvalues and the orthogonal matrix whose columns are
    the eigenvectors. Stops once the off-diagonal Frobenius norm is below tol.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < tol:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise ConvergenceError(f"no convergence after {max_sweeps} sweeps (n={n})")


def _doubled(M: MatrixLike, tol: float, max_sweeps: int):
    m = as_complex(M)
    _check_hermitian(m)
    w, vecs = jacobi_eigh(real_embedding(m), tol=tol, max_sweeps=max_sweeps)
    order = np.argsort(-w, kind="stable")
    return m, w[order], vecs[:, order]


def _collapse(w: np.ndarray, pair_gap: float) -> np.ndarray:
    pairs = w.reshape(-1, 2)
    gaps = np.abs(pairs[:, 0] - pairs[:, 1])
    if gaps.size and gaps.max() > pair_gap:
        warnings.warn(
            f"doubled spectrum pairs differ by up to {gaps.max():.2e}", PairingWarning, stacklevel=3
        )
    return pairs.mean(axis=1)


def eigenvalues(M: MatrixLike, tol: float | None = None, tolerances: Tolerances | None = None) -> Spectrum:
    """All eigenvalues of a Hermitian matrix with multiplicity, descending."""
    tols = tolerances or Tolerances()
    tol = tols.jacobi if tol is None else tol
    if tol <= 0:
        raise SpectralError("tolerance must be positive")
    _, w, _ = _doubled(M, tol, tols.max_sweeps)
    vals = _collapse(w, tols.pair_gap)
    return Spectrum(tuple(float(x) for x in vals), tol)


def spectral_decomposition(
    M: MatrixLike, tol: float | None = None, tolerances: Tolerances | None = None
) -> SpectralDecomposition:
    """Orthonormal eigenbasis of a Hermitian matrix.

    Within each cluster of (numerically) equal eigenvalues the complex vectors
    ``u + i v`` read off the embedding span the eigenspace twice over; an SVD
    of the cluster picks an orthonormal basis of the right dimension.
    """
    tols = tolerances or Tolerances()
    tol = tols.jacobi if tol is None else tol
    m, w, vecs = _doubled(M, tol, tols.max_sweeps)
    n = m.shape[0]
    vals = _collapse(w, tols.pair_gap)
    cplx = vecs[:n, :] + 1j * vecs[n:, :]
    cluster_tol = max(tols.pair_gap, 1e-8 * max(1.0, float(np.max(np.abs(vals), initial=0.0))))
    out = np.zeros((n, n), dtype=complex)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and vals[stop - 1] - vals[stop] < cluster_tol:
            stop += 1
        block = cplx[:, 2 * start : 2 * stop]
        u, _, _ = np.linalg.svd(block, full_matrices=False)
        out[:, start:stop] = u[:, : stop - start]
        start = stop
    return SpectralDecomposition(np.asarray(vals, dtype=float), out)


# ---------------------------------------------------------------------------
# exact characteristic polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def shift(self, c: int) -> IntPolynomial:
        """``p(x + c)``."""
        out = IntPolynomial((0,))
        lin = IntPolynomial((c, 1))
        for coef in reversed(self.coeffs):
            out = out * lin + IntPolynomial((coef,))
        return out

    def __str__(self) -> str:
        return format_poly(self.coeffs, "x")


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == 1 else f"{mag}{pw}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def char_poly_exact(M: EisensteinMatrix) -> IntPolynomial:
    """``det(x I - M)`` by Faddeev-LeVerrier.

    Each coefficient is a trace divided by k in the rational extension of Z[w];
    for a Hermitian input every one must come out a rational integer, which
    also keeps every intermediate matrix integral.
    """
    n, cols = M.shape
    if n != cols:
        raise SpectralError("characteristic polynomial needs a square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = EisensteinMatrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = mk + EisensteinMatrix.identity(n, coeffs[n - k + 1])
        am = M @ mk
        c = EisensteinRational(-am.trace(), k)
        if not c.is_integral() or not c.numerator.is_real():
            raise AssertionError(f"coefficient of x^{n - k} is {c}, not a rational integer")
        coeffs[n - k] = c.to_int()
        mk = am
    return IntPolynomial(tuple(coeffs))


def determinant_exact(M: EisensteinMatrix) -> int:
    n = M.shape[0]
    return (-1) ** n * char_poly_exact(M).coeffs[0]


def is_singular_exact(M: HermitianMatrixExact) -> bool:
    return char_poly_exact(M).coeffs[0] == 0


# ---------------------------------------------------------------------------
# real roots of integer polynomials (independent oracle for the eigensolver)


def _fpoly(coeffs: Sequence) -> list[Fraction]:
    c = [Fraction(x) for x in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _feval(c: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _fderiv(c: Sequence[Fraction]) -> list[Fraction]:
    return _fpoly([i * c[i] for i in range(1, len(c))] or [0])


def _fdivmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    if len(num) < len(den):
        return [Fraction(0)], _fpoly(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        f = num[-1] / den[-1]
        q[shift] = f
        for i, d in enumerate(den):
            num[i + shift] -= f * d
        num.pop()
        while len(num) > 1 and num[-1] == 0:
            num.pop()
    return _fpoly(q), _fpoly(num)


def _fmonic(c: list[Fraction]) -> list[Fraction]:
    return [x / c[-1] for x in c]


def _fgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while any(b):
        _, r = _fdivmod(a, b)
        a, b = b, r
    return _fmonic(a)


def _squarefree_factors(c: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: ``c = prod f_i**i`` with each f_i squarefree."""
    out = []
    dc = _fderiv(c)
    g = _fgcd(c, dc)
    b, _ = _fdivmod(c, g)
    d, _ = _fdivmod(dc, g)
    d = [x - y for x, y in zip(*_pad(d, _fderiv(b)))]
    i = 1
    while len(b) > 1:
        a = _fgcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b, _ = _fdivmod(b, a)
        d, _ = _fdivmod(d, a)
        d = [x - y for x, y in zip(*_pad(d, _fderiv(b)))]
        d = _fpoly(d)
        i += 1
    return out


def _pad(a: list, b: list) -> tuple[list, list]:
    n = max(len(a), len(b))
    return a + [Fraction(0)] * (n - len(a)), b + [Fraction(0)] * (n - len(b))


def _simple_real_roots(c: list[Fraction], iterations: int) -> list[Fraction]:
    """Roots of a squarefree polynomial with only real roots, ascending.

    Rolle: the critical points interlace the roots, so each gap between
    consecutive critical points (and the Cauchy bound) holds exactly one root.
    """
    deg = len(c) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [-c[0] / c[1]]
    bound = 1 + max(abs(x / c[-1]) for x in c[:-1])
    crit = _simple_real_roots(_fderiv(c), iterations)
    if len(crit) != deg - 1:
        raise ValueError("polynomial has non-real roots")
    edges = [-bound] + crit + [bound]
    roots = []
    for lo, hi in zip(edges, edges[1:]):
        flo, fhi = _feval(c, lo), _feval(c, hi)
        if flo == 0:
            roots.append(lo)
            continue
        if fhi == 0:
            if hi == edges[-1]:
                roots.append(hi)
            continue
        if (flo > 0) == (fhi > 0):
            raise ValueError("polynomial has non-real roots")
        for _ in range(iterations):
            mid = (lo + hi) / 2
            fm = _feval(c, mid)
            if fm == 0:
                lo = hi = mid
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append((lo + hi) / 2)
    return roots


def real_roots(p: IntPolynomial | Sequence[int], iterations: int = 64) -> list[float]:
    """All roots of a real-rooted integer polynomial with multiplicity, descending.

    Exact rational arithmetic throughout: squarefree decomposition, then
    bisection on sign changes. Raises ValueError if a root is not real.
    """
    coeffs = p.coeffs if isinstance(p, IntPolynomial) else tuple(p)
    c = _fpoly(coeffs)
    if len(c) <= 1:
        return []
    out: list[float] = []
    for factor, mult in _squarefree_factors(c):
        for r in _simple_real_roots(factor, iterations):
            out.extend([float(r)] * mult)
    if len(out) != len(c) - 1:
        raise ValueError("polynomial has non-real roots")
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------


def unit_vector_inequalities(x: Sequence[complex] | np.ndarray, tol: float = 1e-12) -> TheoremReport:
    """For a unit vector: ``sum_ij conj(x_i) x_j >= 0`` and, for every j,
    ``sum_{i != j} |x_i|^2 |x_j|^2 <= 1/4``."""
    x = np.asarray(x, dtype=complex)
    norm2 = float(np.vdot(x, x).real)
    if abs(norm2 - 1.0) > UNIT_TOL:
        raise SpectralError(f"not a unit vector (|x|^2 = {norm2})")
    total = complex(np.sum(x.conj()) * np.sum(x))
    mod2 = np.abs(x) ** 2
    per_j = mod2 * (np.sum(mod2) - mod2)
    worst = float(per_j.max(initial=0.0))
    ok_sum = total.real >= -tol and abs(total.imag) <= tol
    ok_prod = worst <= 0.25 + tol
    return TheoremReport(
        "unit_vector_inequalities",
        BOUND,
        True,
        bool(ok_sum and ok_prod),
        lhs=(total.real, worst),
        rhs=(0.0, 0.25),
        slack=min(total.real, 0.25 - worst),
    )
