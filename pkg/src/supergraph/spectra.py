"""Spectra and characteristic polynomials of super graphs.

Three independent routes are provided: a cyclic Jacobi eigensolver for dense
symmetric matrices, exact integer characteristic polynomials of explicit
matrices, and the quotient-matrix factorization that carries the spectrum of a
join of cliques on a small matrix. Closed forms for star joins of cliques are
implemented exactly, with irrational eigenvalues kept as surds.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ArityMismatch,
    InvalidParameter,
    NoConvergence,
    NoSignChange,
    NotSymmetric,
    SizeMismatch,
)
from .graphs import SimpleGraph, compressed_graph, connected_components, is_connected
from .partitions import Partition
from .polynomials import PolynomialZ, char_poly_integer

_MAX_SWEEPS = 100
_CONVERGENCE_FACTOR = 1e-12
_GROUPING_FACTOR = 1e-8
_ROOT_TOL = 1e-10


@dataclass(frozen=True)
class Surd:
    """Exact value (r + sign*sqrt(d)) / 2 with integer r and nonsquare d > 0."""

    r: int
    d: int
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise InvalidParameter("surd sign must be +1 or -1")
        if self.d <= 0:
            raise InvalidParameter("surd radicand must be positive")
        if math.isqrt(self.d) ** 2 == self.d:
            raise InvalidParameter("perfect-square radicand: use surd_value()")

    def __float__(self) -> float:
        return (self.r + self.sign * math.sqrt(self.d)) / 2.0

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.r}{op}sqrt({self.d}))/2"


def surd_value(r: int, d: int, sign: int):
    """Normalizing constructor: returns an int/Fraction when d is a perfect square."""
    if d < 0:
        raise InvalidParameter("surd radicand must be nonnegative")
    root = math.isqrt(d)
    if root * root == d:
        num = r + sign * root
        return num // 2 if num % 2 == 0 else Fraction(num, 2)
    return Surd(int(r), int(d), int(sign))


def _values_equal(a, b) -> bool:
    if isinstance(a, Surd) or isinstance(b, Surd):
        if isinstance(a, Surd) and isinstance(b, Surd):
            return a == b
        return False  # a surd is irrational, never equal to a rational/float
    if isinstance(a, float) or isinstance(b, float):
        return float(a) == float(b)
    return a == b  # int/Fraction compare exactly


class Spectrum:
    """Multiset of eigenvalues as (value, multiplicity) pairs, sorted ascending.

    Values may be ints, Fractions, Surds or floats; equal values are merged on
    construction.
    """

    __slots__ = ("_pairs",)

    def __init__(self, pairs):
        merged = []
        for value, mult in sorted(pairs, key=lambda p: float(p[0])):
            mult = int(mult)
            if mult < 0:
                raise InvalidParameter("multiplicities must be nonnegative")
            if mult == 0:
                continue
            if merged and _values_equal(merged[-1][0], value):
                merged[-1][1] += mult
            else:
                merged.append([value, mult])
        self._pairs = tuple((v, m) for v, m in merged)

    @property
    def pairs(self) -> tuple:
        return self._pairs

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self._pairs)

    def values(self) -> tuple:
        return tuple(v for v, _ in self._pairs)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self._pairs)

    def expand(self) -> list[float]:
        """Sorted eigenvalues as floats, repeated by multiplicity."""
        out = []
        for v, m in self._pairs:
            out.extend([float(v)] * m)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        if len(self._pairs) != len(other._pairs):
            return False
        return all(
            m1 == m2 and _values_equal(v1, v2)
            for (v1, m1), (v2, m2) in zip(self._pairs, other._pairs)
        )

    def __hash__(self) -> int:
        return hash(tuple((float(v), m) for v, m in self._pairs))

    def __str__(self) -> str:
        def fmt(v):
            if isinstance(v, float):
                return f"{v:.6g}"
            return str(v)

        return ", ".join(
            fmt(v) if m == 1 else f"{fmt(v)}(x{m})" for v, m in self._pairs
        )

    def __repr__(self) -> str:
        return f"Spectrum({list(self._pairs)!r})"

    def to_json_dict(self) -> dict:
        eigs = []
        for v, m in self._pairs:
            if isinstance(v, Surd):
                encoded = {"r": v.r, "d": v.d, "sign": v.sign}
            elif isinstance(v, int):
                encoded = v
            else:
                encoded = float(v)
            eigs.append({"value": encoded, "multiplicity": m})
        return {"eigenvalues": eigs}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Spectrum":
        pairs = []
        for entry in data["eigenvalues"]:
            raw = entry["value"]
            if isinstance(raw, dict):
                value = surd_value(raw["r"], raw["d"], raw["sign"])
            elif isinstance(raw, float) and raw.is_integer():
                value = raw
            else:
                value = raw
            pairs.append((value, entry["multiplicity"]))
        return cls(pairs)

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        return cls.from_json_dict(json.loads(text))


def jacobi_eigenvalues(matrix, max_sweeps: int = _MAX_SWEEPS) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below 1e-12 times the
    Frobenius norm of the input; eigenvalues are then grouped into
    multiplicities with tolerance 1e-8 * max(1, ||M||_F).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise InvalidParameter("matrix must be square and nonempty")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if float(np.abs(a - a.T).max()) > 1e-12 * max(1.0, norm):
        raise NotSymmetric("matrix is not symmetric within 1e-12 relative tolerance")
    a = (a + a.T) / 2.0
    target = _CONVERGENCE_FACTOR * norm

    def off_norm():
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    converged = off_norm() <= target
    for _ in range(max_sweeps):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e10:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
        converged = off_norm() <= target
    if not converged:
        residual = off_norm()
        raise NoConvergence(
            f"Jacobi sweeps did not converge: off-norm {residual:.3e} > {target:.3e}",
            residual=residual,
        )

    eigs = np.sort(np.diagonal(a))
    tol = _GROUPING_FACTOR * max(1.0, norm)
    pairs = []
    start = 0
    for i in range(1, n + 1):
        if i == n or eigs[i] - eigs[i - 1] > tol:
            group = eigs[start:i]
            pairs.append((float(group.mean()), len(group)))
            start = i
    return Spectrum(pairs)


@dataclass(frozen=True)
class QuotientMatrix:
    """The small matrix carrying the non-clique part of a join's spectrum.

    ``symmetric`` has sqrt(n_i n_j) * rho_ij off the diagonal and
    n_i - 1 - t * (n_i - 1 + N_i) on it; ``companion`` is the integer matrix
    with n_j * rho_ij off-diagonal and the same diagonal, similar to
    ``symmetric`` by the diag(sqrt(n_i)) scaling, hence with the same
    characteristic polynomial.
    """

    symmetric: np.ndarray
    companion: tuple[tuple[int, ...], ...]
    t: int
    sizes: tuple[int, ...]
    neighbor_sums: tuple[int, ...]
    rho: tuple[tuple[int, ...], ...]

    def char_poly(self) -> PolynomialZ:
        return char_poly_integer(self.companion)


def quotient_matrix(template: SimpleGraph, sizes, t: int) -> QuotientMatrix:
    """Quotient matrix of the join of cliques of the given sizes over a template."""
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) != template.n:
        raise ArityMismatch(
            f"template has {template.n} vertices but {len(sizes)} sizes were given"
        )
    if any(s < 1 for s in sizes):
        raise InvalidParameter("all block sizes must be >= 1")
    if t not in (0, 1):
        raise InvalidParameter("parameter t must be 0 or 1")
    k = len(sizes)
    rho = template.adjacency.astype(np.int64)
    neighbor_sums = tuple(int((rho[i] * np.asarray(sizes)).sum()) for i in range(k))
    sym = np.zeros((k, k), dtype=float)
    comp = [[0] * k for _ in range(k)]
    for i in range(k):
        r_i = sizes[i] - 1
        diag = r_i - t * (r_i + neighbor_sums[i])
        sym[i, i] = float(diag)
        comp[i][i] = diag
        for j in range(k):
            if i != j and rho[i][j]:
                sym[i, j] = math.sqrt(sizes[i] * sizes[j])
                comp[i][j] = sizes[j]
    sym.setflags(write=False)
    return QuotientMatrix(
        symmetric=sym,
        companion=tuple(tuple(row) for row in comp),
        t=t,
        sizes=sizes,
        neighbor_sums=neighbor_sums,
        rho=tuple(tuple(int(v) for v in row) for row in rho),
    )


def _component_data(graph: SimpleGraph, partition: Partition):
    """Compressed graph, block sizes, and its connected components."""
    template = compressed_graph(graph, partition)
    sizes = partition.sizes
    return template, sizes, connected_components(template)


def super_adjacency_charpoly(graph: SimpleGraph, partition: Partition) -> PolynomialZ:
    """Exact characteristic polynomial of the adjacency matrix of the super graph.

    Computed as char(N(0)) * (x+1)^(n-k) on each connected component of the
    compressed graph; components multiply because their super graphs are
    disjoint. A connected graph with at most two blocks yields a complete
    super graph and is handled directly.
    """
    template, sizes, comps = _component_data(graph, partition)
    n = graph.n
    k = len(sizes)
    if k <= 2 and len(comps) == 1 and is_connected(graph):
        return PolynomialZ((-(n - 1), 1)) * PolynomialZ((1, 1)) ** (n - 1)
    x_plus_1 = PolynomialZ((1, 1))
    result = PolynomialZ.one()
    for comp in comps:
        sub = template.induced_subgraph(comp)
        sub_sizes = [sizes[i] for i in comp]
        qm = quotient_matrix(sub, sub_sizes, 0)
        result = result * qm.char_poly() * x_plus_1 ** (sum(sub_sizes) - len(comp))
    return result


def super_laplacian_charpoly(graph: SimpleGraph, partition: Partition) -> PolynomialZ:
    """Exact characteristic polynomial of the Laplacian of the super graph:
    char(-N(1)) * prod_i (x - N_i - n_i)^(n_i - 1) per compressed component."""
    template, sizes, comps = _component_data(graph, partition)
    n = graph.n
    k = len(sizes)
    if k <= 2 and len(comps) == 1 and is_connected(graph):
        return PolynomialZ.x() * PolynomialZ((-n, 1)) ** (n - 1)
    result = PolynomialZ.one()
    for comp in comps:
        sub = template.induced_subgraph(comp)
        sub_sizes = [sizes[i] for i in comp]
        qm = quotient_matrix(sub, sub_sizes, 1)
        neg = tuple(tuple(-v for v in row) for row in qm.companion)
        result = result * char_poly_integer(neg)
        for n_i, big_n in zip(qm.sizes, qm.neighbor_sums):
            result = result * PolynomialZ((-(big_n + n_i), 1)) ** (n_i - 1)
    return result


def quotient_spectrum(graph: SimpleGraph, partition: Partition, matrix: str) -> Spectrum:
    """Numeric spectrum of the super graph via the quotient route.

    The small quotient matrices are solved with the Jacobi eigensolver and the
    clique eigenvalues (-1, or N_i + n_i for the Laplacian) contribute the rest
    exactly; independent of any catalogued closed form.
    """
    if matrix not in ("adjacency", "laplacian"):
        raise InvalidParameter("matrix must be 'adjacency' or 'laplacian'")
    template, sizes, comps = _component_data(graph, partition)
    pairs: list[tuple[float, int]] = []
    t = 0 if matrix == "adjacency" else 1
    for comp in comps:
        sub = template.induced_subgraph(comp)
        sub_sizes = [sizes[i] for i in comp]
        qm = quotient_matrix(sub, sub_sizes, t)
        sym = qm.symmetric if t == 0 else -qm.symmetric
        pairs.extend(jacobi_eigenvalues(sym).pairs)
        if t == 0:
            extra = sum(sub_sizes) - len(comp)
            if extra:
                pairs.append((-1.0, extra))
        else:
            for n_i, big_n in zip(qm.sizes, qm.neighbor_sums):
                if n_i > 1:
                    pairs.append((float(big_n + n_i), n_i - 1))
    return Spectrum(pairs)


def star_join_adjacency_charpoly(sizes) -> PolynomialZ:
    """Exact adjacency characteristic polynomial of a star join of cliques.

    sizes[0] is the center block; the result is (x+1)^(n-k) times the product
    over blocks of (x - n_i + 1) minus the star's cross terms, expanded exactly.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise InvalidParameter("star join needs at least two blocks")
    if any(s < 1 for s in sizes):
        raise InvalidParameter("all block sizes must be >= 1")
    k = len(sizes)
    n = sum(sizes)
    factors = [PolynomialZ((-(s - 1), 1)) for s in sizes]
    bracket = PolynomialZ.one()
    for f in factors:
        bracket = bracket * f
    for ell in range(1, k):
        term = PolynomialZ((sizes[0] * sizes[ell],))
        for i in range(1, k):
            if i != ell:
                term = term * factors[i]
        bracket = bracket - term
    return bracket * PolynomialZ((1, 1)) ** (n - k)


def uniform_star_join_adjacency_spectrum(l: int, m: int, k: int) -> Spectrum:
    """Exact adjacency spectrum of a star join with center clique size l and
    k-1 outer cliques of size m; the two non-integer eigenvalues are surds."""
    if l < 1 or m < 1:
        raise InvalidParameter("clique sizes must be >= 1")
    if k < 2:
        raise InvalidParameter("star join needs at least two blocks")
    d = m * m + l * l + (4 * k - 6) * m * l
    r = m + l - 2
    pairs = [
        (surd_value(r, d, -1), 1),
        (-1, m * (k - 1) + l - k),
        (m - 1, k - 2),
        (surd_value(r, d, 1), 1),
    ]
    return Spectrum(pairs)


def star_join_laplacian_spectrum(sizes) -> Spectrum:
    """Exact integer Laplacian spectrum of a star join of cliques:
    0, n, the center size (k-2 times), and N_i + n_i with multiplicity n_i - 1."""
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise InvalidParameter("star join needs at least two blocks")
    if any(s < 1 for s in sizes):
        raise InvalidParameter("all block sizes must be >= 1")
    k = len(sizes)
    n = sum(sizes)
    n1 = sizes[0]
    pairs = [(0, 1), (n, 1), (n1, k - 2), (n, n1 - 1)]
    pairs.extend((n1 + s, s - 1) for s in sizes[1:])
    return Spectrum(pairs)


def real_root_isolate(poly: PolynomialZ, brackets) -> list[float]:
    """One real root per integer bracket by bisection to width 1e-10.

    Each bracket must exhibit a strict sign change at its endpoints, checked
    with exact integer evaluation.
    """
    roots = []
    for lo, hi in brackets:
        lo, hi = int(lo), int(hi)
        if lo >= hi:
            raise InvalidParameter(f"empty bracket ({lo}, {hi})")
        flo, fhi = poly(lo), poly(hi)
        if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
            raise NoSignChange(
                f"no sign change on ({lo}, {hi}): p({lo})={flo}, p({hi})={fhi}",
                interval=(lo, hi),
            )
        neg, pos = (float(lo), float(hi)) if flo < 0 else (float(hi), float(lo))
        for _ in range(200):
            if abs(pos - neg) <= _ROOT_TOL:
                break
            mid = (neg + pos) / 2.0
            if poly(mid) < 0:
                neg = mid
            else:
                pos = mid
        roots.append((neg + pos) / 2.0)
    return roots


def multiset_match(s1: Spectrum, s2: Spectrum, tol: float) -> bool:
    """True when the expanded eigenvalue lists pair up within tol."""
    if s1.total_multiplicity != s2.total_multiplicity:
        raise SizeMismatch(
            f"total multiplicities differ: {s1.total_multiplicity} vs {s2.total_multiplicity}"
        )
    return all(abs(a - b) <= tol for a, b in zip(s1.expand(), s2.expand()))


def grouped_match(expected: Spectrum, actual: Spectrum, tol: float) -> bool:
    """True when the grouped (value, multiplicity) pairs agree: equal group
    counts, identical multiplicities, values within tol."""
    if len(expected.pairs) != len(actual.pairs):
        return False
    return all(
        m1 == m2 and abs(float(v1) - float(v2)) <= tol
        for (v1, m1), (v2, m2) in zip(expected.pairs, actual.pairs)
    )


def interlacing_check(eigs_full, eigs_sub, slack: float = 1e-9) -> bool:
    """Check lambda_k <= beta_k <= lambda_(k+n-m) within slack for sorted
    eigenvalue lists of a symmetric matrix and a principal submatrix."""
    full = sorted(float(v) for v in eigs_full)
    sub = sorted(float(v) for v in eigs_sub)
    n, m = len(full), len(sub)
    if m > n:
        raise InvalidParameter("submatrix has more eigenvalues than the full matrix")
    return all(
        full[i] - slack <= sub[i] <= full[i + n - m] + slack for i in range(m)
    )


def spectrum_from_integer_charpoly(poly: PolynomialZ, bound: int | None = None) -> Spectrum | None:
    """Factor a monic characteristic polynomial into integer roots if possible.

    Candidate roots are scanned in [-bound, bound]; the default of twice the
    degree covers adjacency (|eig| <= n-1) and Laplacian (eig <= 2(n-1))
    matrices of simple graphs. Returns None when the polynomial does not split
    into integer roots within the bound.
    """
    if not poly.is_monic():
        return None
    if bound is None:
        bound = 2 * max(poly.degree, 0)
    pairs = []
    p = poly
    for root in range(-bound, bound + 1):
        while p.degree > 0:
            q, rem = p.deflate(root)
            if rem != 0:
                break
            pairs.append((root, 1))
            p = q
    if p.degree > 0:
        return None
    return Spectrum(pairs)
