"""Conic matrices and the analysis tools the solvers lean on.

A conic is stored by the six independent entries of its symmetric matrix.
Everything here is scale-invariant; reported conics are normalized to a unit
six-vector with a deterministic sign.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels as _k
from .errors import (
    ComplexLinePair,
    DegenerateCase,
    GeneralPositionError,
    InconsistentPencil,
    RankOne,
)
from .projective import HomogeneousPoint, ProjectiveLine, Vec3
from .tolerances import DEFAULT, Tolerances


class ConicClass(enum.Enum):
    REAL_ELLIPSE = "real_ellipse"
    IMAGINARY_ELLIPSE = "imaginary_ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    LINE_PAIR = "line_pair"
    DOUBLE_LINE = "double_line"
    POINT = "point"

    @property
    def is_degenerate(self) -> bool:
        return self in (ConicClass.LINE_PAIR, ConicClass.DOUBLE_LINE, ConicClass.POINT)


def _as_vec3(p) -> Vec3:
    if hasattr(p, "vec"):
        return p.vec()
    return (float(p[0]), float(p[1]), float(p[2]))


@dataclass(frozen=True)
class ConicMatrix:
    """Symmetric conic matrix.

    Fields are the upper-triangle entries (a, b, c, d, e, f) of

        [[a, b, d],
         [b, c, e],
         [d, e, f]]

    so the point equation reads a x^2 + 2b xy + c y^2 + 2d xw + 2e yw + f w^2.
    Conics are projective: any nonzero scalar multiple is the same conic.
    """

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    @classmethod
    def from_sym6(cls, m: Sequence[float]) -> "ConicMatrix":
        """Build from the kernel layout (m11, m12, m22, m13, m23, m33)."""
        return cls(m[0], m[1], m[2], m[3], m[4], m[5])

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[float]]) -> "ConicMatrix":
        return cls(rows[0][0], rows[0][1], rows[1][1], rows[0][2], rows[1][2], rows[2][2])

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[float]) -> "ConicMatrix":
        """From polynomial coefficients (A, B, C, D, E, F) of
        A x^2 + B xy + C y^2 + D xw + E yw + F w^2."""
        A, B, C, D, E, F = coeffs
        return cls(A, B / 2.0, C, D / 2.0, E / 2.0, F)

    def sym6(self) -> tuple[float, float, float, float, float, float]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def six_vector(self) -> tuple[float, float, float, float, float, float]:
        return self.sym6()

    def matrix(self) -> tuple[Vec3, Vec3, Vec3]:
        return (
            (self.a, self.b, self.d),
            (self.b, self.c, self.e),
            (self.d, self.e, self.f),
        )

    def frobenius(self) -> float:
        a, b, c, d, e, f = self.sym6()
        return math.sqrt(a * a + c * c + f * f + 2.0 * (b * b + d * d + e * e))

    def det(self) -> float:
        return _k.sym_det(self.sym6())

    def adjugate(self) -> "ConicMatrix":
        return ConicMatrix.from_sym6(_k.sym_adjugate(self.sym6()))

    def point_value(self, p) -> float:
        return _k.sym_eval(self.sym6(), _as_vec3(p))

    def line_value(self, l) -> float:
        """Tangency form l^T adj(C) l; zero when l is tangent."""
        return _k.sym_eval(_k.sym_adjugate(self.sym6()), _as_vec3(l))

    def scaled(self, k: float) -> "ConicMatrix":
        return ConicMatrix(*(k * v for v in self.sym6()))

    def normalized(self) -> "ConicMatrix":
        """Unit six-vector scale with the first largest-magnitude entry positive."""
        v = self.sym6()
        n = math.sqrt(sum(x * x for x in v))
        if n == 0.0:
            raise ValueError("zero conic matrix cannot be normalized")
        top = max(abs(x) for x in v)
        lead = next(x for x in v if abs(x) == top)
        sign = 1.0 if lead > 0.0 else -1.0
        return self.scaled(sign / n)


def adjugate(c: ConicMatrix) -> ConicMatrix:
    return c.adjugate()


def _eigvalsh3(c: ConicMatrix) -> np.ndarray:
    return np.linalg.eigvalsh(np.array(c.matrix(), dtype=float))


def rank(c: ConicMatrix, tol: Tolerances = DEFAULT) -> int:
    """Numeric rank: eigenvalues below rank_zero times the spectral radius are zero."""
    w = np.abs(_eigvalsh3(c))
    top = float(w.max())
    if top == 0.0:
        return 0
    return int((w > tol.rank_zero * top).sum())


def classify(c: ConicMatrix, tol: Tolerances = DEFAULT) -> ConicClass:
    """Affine class of a conic.

    Degenerate cases are split by rank and by the signs of the nonzero
    eigenvalues; non-degenerate ones by the leading 2x2 minor.
    """
    w = _eigvalsh3(c)
    top = float(np.abs(w).max())
    if top == 0.0:
        raise ValueError("zero conic matrix has no class")
    nonzero = [float(x) for x in w if abs(x) > tol.rank_zero * top]
    r = len(nonzero)
    if r <= 1:
        return ConicClass.DOUBLE_LINE
    if r == 2:
        return ConicClass.LINE_PAIR if nonzero[0] * nonzero[1] < 0.0 else ConicClass.POINT

    # full rank: ellipse / parabola / hyperbola via the leading block
    a, b, cc = c.a, c.b, c.c
    mean = 0.5 * (a + cc)
    rad = math.hypot(0.5 * (a - cc), b)
    big = max(abs(mean) + rad, 1e-300)
    minor = a * cc - b * b
    if abs(minor) <= tol.rank_zero * big * big:
        return ConicClass.PARABOLA
    if minor < 0.0:
        return ConicClass.HYPERBOLA
    return ConicClass.REAL_ELLIPSE if c.det() * (a + cc) < 0.0 else ConicClass.IMAGINARY_ELLIPSE


def point_residual(c: ConicMatrix, p) -> float:
    """Normalized incidence residual |x^T C x| / (||C||_F ||x||^2)."""
    v = _as_vec3(p)
    n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    return abs(c.point_value(v)) / (c.frobenius() * n2)


def tangency_residual(c: ConicMatrix, l) -> float:
    """Normalized tangency residual |l^T adj(C) l| / (||adj(C)||_F ||l||^2)."""
    v = _as_vec3(l)
    adj = c.adjugate()
    n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    return abs(_k.sym_eval(adj.sym6(), v)) / (adj.frobenius() * n2)


class PencilEigenvalues(NamedTuple):
    lam1: float
    lam2: float
    lam3: float

    def sorted(self) -> tuple[float, float, float]:
        return tuple(sorted(self))  # type: ignore[return-value]


def pencil_eigenvalues(
    points: Sequence[HomogeneousPoint],
    l1: ProjectiveLine,
    l2: ProjectiveLine,
    tol: Tolerances = DEFAULT,
) -> PencilEigenvalues:
    """Eigenvalues of the conic pencil behind a generic 3-point/2-line problem.

    The three values are ratios of incidence products; they are the
    generalized eigenvalues of the two tangency forms in pencil coordinates.
    Two of them coincide exactly when the line intersection point sits on a
    side of the point triangle, which breaks the generic 4-solution case, so
    a near-tie raises DegenerateCase instead of returning garbage.
    """
    incs = []
    for idx, pt in enumerate(points):
        v = pt.vec()
        for l in (l1, l2):
            val = _k.dot3(v, l.vec())
            if abs(val) <= tol.incidence * _k.norm3(v) * _k.norm3(l.vec()):
                raise GeneralPositionError(
                    f"point {idx} lies on an input line; the generic pencil "
                    "construction does not apply",
                    (idx,),
                )
        incs.append((_k.dot3(v, l1.vec()), _k.dot3(v, l2.vec())))
    (a1, a2), (b1, b2), (c1, c2) = incs
    lams = PencilEigenvalues(
        (a2 * b2) / (a1 * b1),
        (a2 * c2) / (a1 * c1),
        (b2 * c2) / (b1 * c1),
    )
    pairs = ((lams.lam1, lams.lam2), (lams.lam1, lams.lam3), (lams.lam2, lams.lam3))
    for u, v in pairs:
        if abs(u - v) <= tol.eigenvalue_tie * max(abs(u), abs(v)):
            raise DegenerateCase(
                "two pencil eigenvalues coincide; the line intersection point "
                "lies on a side of the point triangle"
            )
    return lams


def _sym6_combo(k1: float, m1: Sequence[float], k2: float, m2: Sequence[float]):
    return tuple(k1 * a + k2 * b for a, b in zip(m1, m2))


def split_line_pair(
    c: ConicMatrix, tol: Tolerances = DEFAULT
) -> tuple[ProjectiveLine, ProjectiveLine]:
    """Split a rank-2 conic into its two real lines.

    The singular point is read off the adjugate (which is a rank-1 outer
    product of that point with itself); completing it to a basis removes one
    coordinate and leaves a binary quadratic that factors directly.

    Raises ComplexLinePair when the two lines are complex conjugates, RankOne
    for a double line, and ValueError if the matrix is not degenerate.
    """
    # symmetric equilibration: pencil members can span many orders of
    # magnitude across coordinates, which would hide a genuine small
    # eigenvalue under the rank gate and misread the pair as a double line
    raw = c.matrix()
    scales = []
    for row in raw:
        top = max(abs(row[0]), abs(row[1]), abs(row[2]))
        scales.append(1.0 / math.sqrt(top) if top > 0.0 else 1.0)
    c = ConicMatrix.from_matrix(
        tuple(
            tuple(raw[r][s] * scales[r] * scales[s] for s in range(3))
            for r in range(3)
        )
    )
    w = _eigvalsh3(c)
    top = float(np.abs(w).max())
    if top == 0.0:
        raise RankOne("zero matrix")
    nonzero = [float(x) for x in w if abs(x) > tol.rank_zero * top]
    if len(nonzero) == 3:
        raise ValueError("conic is not degenerate; it does not split into lines")
    if len(nonzero) <= 1:
        raise RankOne("conic is a double line (rank 1)")
    if nonzero[0] * nonzero[1] > 0.0:
        raise ComplexLinePair("degenerate conic has no real line split")

    adj = c.adjugate().matrix()
    cols = [(adj[0][j], adj[1][j], adj[2][j]) for j in range(3)]
    norms = [_k.norm3(col) for col in cols]
    q = cols[norms.index(max(norms))]
    k = max(range(3), key=lambda i: abs(q[i]))
    i, j = [idx for idx in range(3) if idx != k]
    m = c.matrix()
    alpha, gamma, beta = m[i][i], m[i][j], m[j][j]
    disc = gamma * gamma - alpha * beta
    if disc < 0.0:
        disc = 0.0
    rt = math.sqrt(disc)
    scale = max(abs(alpha), abs(beta), abs(gamma), 1e-300)
    if abs(alpha) >= abs(beta) and abs(alpha) > tol.rank_zero * scale:
        pairs2 = ((alpha, gamma - rt), (alpha, gamma + rt))
    elif abs(beta) > tol.rank_zero * scale:
        pairs2 = ((gamma - rt, beta), (gamma + rt, beta))
    else:
        pairs2 = ((1.0, 0.0), (0.0, 2.0 * gamma))
    lines = []
    for cu, cv in pairs2:
        l = [0.0, 0.0, 0.0]
        l[i], l[j] = cu, cv
        l[k] = -(q[i] * cu + q[j] * cv) / q[k]
        # undo the equilibration: balanced lines are S * l_original
        lines.append(ProjectiveLine(l[0] / scales[0], l[1] / scales[1], l[2] / scales[2]))
    return lines[0], lines[1]


class PencilIntersection(NamedTuple):
    real_points: tuple[tuple[float, float], ...]
    complex_count: int


def _line_points(l: Vec3) -> tuple[Vec3, Vec3]:
    basis = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    cands = sorted(basis, key=lambda e: abs(_k.dot3(l, e)))
    p0 = _k.cross(l, cands[0])
    p1 = _k.cross(l, cands[1])
    return p0, p1


def _intersect_line_conic(l: Vec3, m6, tol: Tolerances):
    """Intersections of one line with a conic: (real pts, complex count)."""
    p0, p1 = _line_points(l)
    q2 = _k.sym_eval(m6, p1)
    q0 = _k.sym_eval(m6, p0)
    m11, m12, m22, m13, m23, m33 = m6
    q1 = 2.0 * (
        m11 * p0[0] * p1[0]
        + m22 * p0[1] * p1[1]
        + m33 * p0[2] * p1[2]
        + m12 * (p0[0] * p1[1] + p0[1] * p1[0])
        + m13 * (p0[0] * p1[2] + p0[2] * p1[0])
        + m23 * (p0[1] * p1[2] + p0[2] * p1[1])
    )
    scale = max(abs(q2), abs(q1), abs(q0), 1e-300)
    pts: list[Vec3] = []
    if abs(q2) <= 1e-14 * scale:
        # p1 itself is (numerically) on the conic
        pts.append(p1)
        if abs(q1) > 1e-14 * scale:
            th = -q0 / q1
            pts.append(tuple(a + th * b for a, b in zip(p0, p1)))
        return pts, 0
    disc = q1 * q1 - 4.0 * q2 * q0
    # the zero band must be relative to the two cancelling terms, not to the
    # raw coefficients: an unbalanced quadratic (|q0| >> |q1|) would otherwise
    # swallow a decisively negative discriminant
    band = tol.discriminant * max(q1 * q1, abs(4.0 * q2 * q0))
    if disc < -band:
        return [], 2
    if disc <= band:
        th = -q1 / (2.0 * q2)
        pts.append(tuple(a + th * b for a, b in zip(p0, p1)))
        return pts, 0
    r = math.sqrt(disc)
    qq = -(q1 + math.copysign(r, q1)) / 2.0
    for th in (qq / q2, q0 / qq):
        pts.append(tuple(a + th * b for a, b in zip(p0, p1)))
    return pts, 0


def intersect_conic_pencil(
    c1: ConicMatrix,
    c2: ConicMatrix,
    lams: PencilEigenvalues,
    tol: Tolerances = DEFAULT,
) -> PencilIntersection:
    """Common points of two conics via the degenerate pencil members.

    Each eigenvalue gives a line pair lam*c1 - c2; two real pairs are crossed
    to produce the four intersections and any further real pair serves as a
    consistency check. With a single real pair its lines are cut against c1
    directly, which also yields the complex count.
    """
    m1, m2 = c1.sym6(), c2.sym6()
    pairs = []
    for lam in lams:
        member = ConicMatrix.from_sym6(_sym6_combo(lam, m1, -1.0, m2))
        try:
            pairs.append(split_line_pair(member, tol))
        except ComplexLinePair:
            pairs.append(None)
    real_pairs = [p for p in pairs if p is not None]
    if not real_pairs:
        raise InconsistentPencil(
            "no pencil member splits into real lines; eigenvalue signs are inconsistent"
        )

    raw_pts: list[Vec3] = []
    complex_count = 0
    if len(real_pairs) >= 2:
        (a1, a2), (b1, b2) = real_pairs[0], real_pairs[1]
        for la in (a1, a2):
            for lb in (b1, b2):
                raw_pts.append(_k.cross(la.vec(), lb.vec()))
        checker = real_pairs[2] if len(real_pairs) > 2 else None
        if checker is not None:
            for pt in raw_pts:
                v1 = _k.dot3(checker[0].vec(), pt)
                v2 = _k.dot3(checker[1].vec(), pt)
                n = _k.norm3(pt)
                ok1 = abs(v1) <= math.sqrt(tol.residual) * _k.norm3(checker[0].vec()) * n
                ok2 = abs(v2) <= math.sqrt(tol.residual) * _k.norm3(checker[1].vec()) * n
                if not (ok1 or ok2):
                    raise InconsistentPencil(
                        "third line pair does not pass through a computed intersection"
                    )
    else:
        la, lb = real_pairs[0]
        for l in (la, lb):
            pts, cc = _intersect_line_conic(l.vec(), m1, tol)
            raw_pts.extend(pts)
            complex_count += cc

    out: list[tuple[float, float]] = []
    for pt in raw_pts:
        n = _k.norm3(pt)
        if n == 0.0 or abs(pt[2]) < tol.infinity * n:
            raise DegenerateCase("pencil intersection escaped to infinity")
        st = (pt[0] / pt[2], pt[1] / pt[2])
        if not any(math.hypot(st[0] - o[0], st[1] - o[1]) <= 1e-9 * max(1.0, abs(st[0]), abs(st[1])) for o in out):
            out.append(st)
    return PencilIntersection(tuple(out), complex_count)
