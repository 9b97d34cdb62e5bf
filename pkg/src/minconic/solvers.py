"""Closed-form conic solvers for five-element point/line configurations.

Every solver reduces its input to a conic pencil over a complete quadrangle:
three or four of the quadrangle points are given, the remaining one moves
along a line with parameter t, and the pencil parameter s picks the member.
Tangency constraints then become low-degree polynomial equations in (s, t)
that are solved in closed form. Configurations with more lines than points
are handled through duality.

Solution counts are exact: `real_count + complex_count` equals the number of
non-degenerate solutions of the underlying polynomial system over the
complex numbers for the detected case.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import _kernels as _k
from .conics import (
    ConicMatrix,
    PencilEigenvalues,
    intersect_conic_pencil,
    pencil_eigenvalues,
    point_residual,
    tangency_residual,
)
from .errors import (
    CaseDegeneracy,
    DegenerateCase,
    GeneralPositionError,
    InconsistentPencil,
    UnsupportedCount,
)
from .projective import HomogeneousPoint, ProjectiveLine, Vec3
from .selfpolar import require_no_collinear_triple
from .tolerances import DEFAULT, Tolerances

KINDS = {
    (5, 0): "5p",
    (4, 1): "4p1l",
    (3, 2): "3p2l",
    (2, 3): "2p3l",
    (1, 4): "1p4l",
    (0, 5): "5l",
}


def _vec(p) -> Vec3:
    return p.vec() if hasattr(p, "vec") else (float(p[0]), float(p[1]), float(p[2]))


def _incident(x: Vec3, l: Vec3, tol: Tolerances) -> bool:
    return abs(_k.dot3(x, l)) <= tol.incidence * _k.norm3(x) * _k.norm3(l)


def _collinear(u: Vec3, v: Vec3, w: Vec3, tol: Tolerances) -> bool:
    return abs(_k.det3(u, v, w)) <= tol.collinearity * _k.norm3(u) * _k.norm3(v) * _k.norm3(w)


@dataclass(frozen=True)
class Configuration:
    """A bag of points and lines; exactly five in total for the solvers."""

    points: tuple[HomogeneousPoint, ...]
    lines: tuple[ProjectiveLine, ...] = ()

    @property
    def kind(self) -> str:
        key = (len(self.points), len(self.lines))
        if key not in KINDS:
            raise UnsupportedCount(
                f"{key[0]} points and {key[1]} lines do not form a five-element "
                "minimal configuration"
            )
        return KINDS[key]


@dataclass(frozen=True)
class CountPrediction:
    """Solution count predicted from sign predicates alone, without solving."""

    predicted_real: int
    predicted_complex: int
    rule: str
    predicate: Optional[float] = None

    @property
    def total(self) -> int:
        return self.predicted_real + self.predicted_complex


@dataclass(frozen=True)
class CaseContext:
    """How the moving quadrangle point was parameterized.

    `anchor` is the point the parameter multiplies and `offset` the added
    vector, so the moving point is t*anchor + offset. For most cases anchor
    is the off-line point and offset the line intersection; one special case
    walks the moving point along the second line instead.
    """

    p: Vec3
    q: Optional[Vec3]
    parameterization: str  # "t*x1+p" or "t*p+q"


@dataclass
class SolveDiagnostics:
    case_label: str
    backend: str = _k.BACKEND
    allocation: tuple[int, ...] = (0, 1, 2)
    lines_swapped: bool = False
    discriminant: Optional[float] = None
    eigenvalues: Optional[PencilEigenvalues] = None
    parameters: tuple[tuple[float, float], ...] = ()
    prediction: Optional[CountPrediction] = None
    context: Optional[CaseContext] = None
    triangle_deviation: Optional[float] = None
    double_root: bool = False
    max_incidence_residual: float = 0.0
    max_tangency_residual: float = 0.0


@dataclass(frozen=True)
class SolutionSet:
    """Non-degenerate real conics satisfying a minimal configuration."""

    real_conics: tuple[ConicMatrix, ...]
    complex_count: int
    case_label: str
    diagnostics: SolveDiagnostics

    @property
    def real_count(self) -> int:
        return len(self.real_conics)

    @property
    def total_count(self) -> int:
        return len(self.real_conics) + self.complex_count

    def __iter__(self):
        return iter(self.real_conics)

    def __len__(self) -> int:
        return len(self.real_conics)


def _fill_residuals(diag: SolveDiagnostics, conics, points, lines) -> None:
    pin = 0.0
    tan = 0.0
    for cm in conics:
        for pt in points:
            pin = max(pin, point_residual(cm, pt))
        for l in lines:
            tan = max(tan, tangency_residual(cm, l))
    diag.max_incidence_residual = pin
    diag.max_tangency_residual = tan


# ---------------------------------------------------------------------------
# five points


def solve_five_points(points: Sequence, tol: Tolerances = DEFAULT) -> ConicMatrix:
    """The unique conic through five points in general position.

    Returns the normalized conic matrix; use solve() for the SolutionSet
    wrapper with diagnostics.
    """
    vecs = [_vec(p) for p in points]
    if len(vecs) != 5:
        raise UnsupportedCount("exactly five points required")
    require_no_collinear_triple(vecs, tol)
    m6, _beta = _k.conic_from_five_points(*vecs)
    return ConicMatrix.from_sym6(m6).normalized()


def _five_point_solution_set(points: Sequence, tol: Tolerances) -> SolutionSet:
    conic = solve_five_points(points, tol)
    vecs = [_vec(p) for p in points]
    _, _, _, dev = _k.diag_triangle(*vecs[:4])
    diag = SolveDiagnostics(case_label="5p", triangle_deviation=dev)
    _fill_residuals(diag, (conic,), vecs, ())
    diag.prediction = CountPrediction(1, 0, "unique conic through five points")
    return SolutionSet((conic,), 0, "5p", diag)


# ---------------------------------------------------------------------------
# four points + one line


def _tangency_quadratic(xi: tuple[Vec3, Vec3, Vec3], l: Vec3) -> tuple[float, float, float]:
    """Coefficients (q2, q1, q0) of the pencil-parameter tangency quadratic.

    Roots are the pencil parameters of members tangent to l; only the three
    squared vertex incidences enter.
    """
    L1 = _k.dot3(xi[0], l) ** 2
    L2 = _k.dot3(xi[1], l) ** 2
    L3 = _k.dot3(xi[2], l) ** 2
    return (L3, -(L1 - L2 + L3), L1)


def _quadratic_roots(
    q2: float, q1: float, q0: float, tol: Tolerances
) -> tuple[list[float], int, float, bool]:
    """Stable real roots of q2 x^2 + q1 x + q0 = 0.

    Returns (roots, complex_count, discriminant, double). A discriminant
    inside the relative zero band counts as a double root (reported once); a
    vanishing leading coefficient drops to the linear equation.
    """
    scale = max(abs(q2), abs(q1), abs(q0))
    if scale == 0.0:
        raise DegenerateCase("tangency condition vanished identically")
    if abs(q2) <= 1e-14 * scale:
        if abs(q1) <= 1e-14 * scale:
            raise DegenerateCase("tangency condition is constant and nonzero")
        return ([-q0 / q1], 0, q1 * q1, False)
    disc = q1 * q1 - 4.0 * q2 * q0
    # relative to the cancelling terms, not the raw coefficient magnitudes
    band = tol.discriminant * max(q1 * q1, abs(4.0 * q2 * q0))
    if disc < -band:
        return ([], 2, disc, False)
    if disc <= band:
        return ([-q1 / (2.0 * q2)], 0, disc, True)
    r = math.sqrt(disc)
    qq = -(q1 + math.copysign(r, q1)) / 2.0
    roots = sorted((qq / q2, q0 / qq))
    return (roots, 0, disc, False)


def predict_count_4p1l(points: Sequence, line, tol: Tolerances = DEFAULT) -> CountPrediction:
    """Real-count prediction for four points and a line from sign tests only.

    The product of the four point-triple determinants and the four
    point-line incidences has the sign of the tangency discriminant: the
    parity of orientation flips times the parity of side flips decides
    between two and zero real solutions. A line through one of the seven
    special points (four quadrangle points, three diagonal-triangle
    vertices) forces a unique solution.
    """
    vecs = [_vec(p) for p in points]
    lv = _vec(line)
    dets = [
        _k.det3(vecs[0], vecs[1], vecs[2]),
        _k.det3(vecs[0], vecs[1], vecs[3]),
        _k.det3(vecs[0], vecs[2], vecs[3]),
        _k.det3(vecs[1], vecs[2], vecs[3]),
    ]
    incs = [_k.dot3(v, lv) for v in vecs]
    pred = 1.0
    for d in dets:
        pred *= d
    for s in incs:
        pred *= s
    if any(_incident(v, lv, tol) for v in vecs):
        return CountPrediction(1, 0, "unique: line through a quadrangle point", pred)
    xi1, xi2, xi3, _ = _k.diag_triangle(*vecs)
    if any(_incident(x, lv, tol) for x in (xi1, xi2, xi3)):
        return CountPrediction(
            1, 0, "unique: line through a diagonal-triangle vertex", pred
        )
    if pred > 0.0:
        return CountPrediction(2, 0, "orientation/side sign product positive", pred)
    return CountPrediction(0, 2, "orientation/side sign product negative", pred)


def solve_four_points_line(points: Sequence, line, tol: Tolerances = DEFAULT) -> SolutionSet:
    """Conics through four points tangent to a line.

    Generic position gives two solutions (real or a complex pair); a line
    through one of the points or through a vertex of the diagonal triangle
    gives exactly one. A line through two points or two triangle vertices
    admits no non-degenerate solution and is rejected as a general-position
    failure.
    """
    vecs = [_vec(p) for p in points]
    if len(vecs) != 4:
        raise UnsupportedCount("exactly four points required")
    lv = _vec(line)
    require_no_collinear_triple(vecs, tol)

    on_line = [i for i, v in enumerate(vecs) if _incident(v, lv, tol)]
    if len(on_line) >= 2:
        raise GeneralPositionError(
            f"line is a side of the quadrangle: it contains points "
            f"{on_line[0]} and {on_line[1]}",
            tuple(on_line[:2]),
        )

    xi1, xi2, xi3, dev = _k.diag_triangle(*vecs)
    xi = (xi1, xi2, xi3)
    on_vertex = [j for j, x in enumerate(xi) if _incident(x, lv, tol)]
    if len(on_vertex) >= 2:
        raise GeneralPositionError(
            "line is a side of the diagonal triangle (through two of its "
            "vertices); only degenerate pencil members touch it",
            tuple(on_vertex[:2]),
        )

    q2, q1, q0 = _tangency_quadratic(xi, lv)
    prediction = predict_count_4p1l(points, line, tol)
    double = False

    if on_line:
        # tangency is pinned at the incident point: the two roots coincide
        scale = max(abs(q2), abs(q1), abs(q0))
        roots = [-q0 / q1] if abs(q2) <= 1e-14 * scale else [-q1 / (2.0 * q2)]
        complex_count, disc, double = 0, 0.0, True
        label = "4p1l/point-on-line"
    elif on_vertex:
        # one root belongs to a degenerate pencil member; drop it
        all_roots, complex_count, disc, double = _quadratic_roots(q2, q1, q0, tol)
        gap = math.sqrt(tol.parameter)
        roots = [s for s in all_roots if abs(s) > gap and abs(s - 1.0) > gap]
        if len(roots) != 1:
            raise DegenerateCase(
                "line through a triangle vertex did not leave exactly one "
                "non-degenerate tangent member"
            )
        complex_count = 0
        label = "4p1l/diagonal-vertex"
    else:
        # the discriminant equals 16 times the determinant/incidence product
        # exactly, so the real-versus-complex decision is a pure sign product
        # with no cancellation and always matches the count prediction
        disc = 16.0 * prediction.predicate
        if disc > 0.0:
            r = math.sqrt(disc)
            qq = -(q1 + math.copysign(r, q1)) / 2.0
            roots, complex_count = sorted((qq / q2, q0 / qq)), 0
        elif disc < 0.0:
            roots, complex_count = [], 2
        else:
            roots, complex_count, double = [-q1 / (2.0 * q2)], 0, True
        label = "4p1l/generic"

    conics = []
    params = []
    for s in roots:
        if abs(s) <= tol.parameter or abs(s - 1.0) <= tol.parameter:
            raise DegenerateCase(f"tangent pencil member at s={s!r} is degenerate")
        conics.append(
            ConicMatrix.from_sym6(_k.conic_from_pencil(xi1, xi2, xi3, s)).normalized()
        )
        params.append((s, math.nan))

    diag = SolveDiagnostics(
        case_label=label,
        allocation=(0, 1, 2, 3),
        discriminant=disc,
        parameters=tuple(params),
        prediction=prediction,
        triangle_deviation=dev,
        double_root=double,
    )
    _fill_residuals(diag, conics, vecs, (lv,))
    return SolutionSet(tuple(conics), complex_count, label, diag)


# ---------------------------------------------------------------------------
# three points + two lines


@dataclass(frozen=True)
class CaseAllocation:
    """Relabeling that brings a 3-point/2-line input into case normal form.

    `order[k]` is the original index of the point used as point k+1 of the
    normal form; `swap_lines` swaps the two lines. The solved conics do not
    depend on the relabeling, only the intermediate formulas do.
    """

    case: int
    order: tuple[int, int, int]
    swap_lines: bool

    @property
    def label(self) -> str:
        return f"3p2l/Case{self.case}"


def classify_3p2l_case(
    points: Sequence, l1, l2, tol: Tolerances = DEFAULT
) -> CaseAllocation:
    """Detect which special-position case a 3-point/2-line input falls in.

    Cases, mutually exclusive under the general-position preconditions:

    1. two of the points lie on the two lines, one on each;
    2. two points are collinear with the line intersection point and the
       third point lies on one of the lines;
    3. two points are collinear with the line intersection point and the
       third point lies on neither line;
    4. exactly one point lies on exactly one line, no such collinearity;
    5. no incidence and no such collinearity (the generic case).

    Raises GeneralPositionError for collinear points, coincident lines, a
    point at the line intersection, or two points on one line.
    """
    vecs = [_vec(p) for p in points]
    if len(vecs) != 3:
        raise UnsupportedCount("exactly three points required")
    lv1, lv2 = _vec(l1), _vec(l2)
    p = _k.cross(lv1, lv2)
    if _k.norm3(p) <= tol.collinearity * _k.norm3(lv1) * _k.norm3(lv2):
        raise GeneralPositionError("the two lines coincide", (0, 1))
    if _collinear(vecs[0], vecs[1], vecs[2], tol):
        raise GeneralPositionError("the three points are collinear", (0, 1, 2))

    inc = [[_incident(v, lv1, tol), _incident(v, lv2, tol)] for v in vecs]
    for i, (on1, on2) in enumerate(inc):
        if on1 and on2:
            raise GeneralPositionError(
                f"point {i} coincides with the intersection of the lines", (i,)
            )
    for j in range(2):
        riders = [i for i in range(3) if inc[i][j]]
        if len(riders) >= 2:
            raise GeneralPositionError(
                f"points {riders[0]} and {riders[1]} lie on the same line; no "
                "conic through both can be tangent to it",
                tuple(riders[:2]),
            )

    incident_pts = [i for i in range(3) if inc[i][0] or inc[i][1]]
    coll_pairs = [
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if _collinear(vecs[i], vecs[j], p, tol)
    ]

    if len(incident_pts) == 2:
        i1 = next(i for i in range(3) if inc[i][0])
        i2 = next(i for i in range(3) if inc[i][1])
        rest = next(i for i in range(3) if i not in (i1, i2))
        return CaseAllocation(1, (rest, i1, i2), False)
    if len(incident_pts) == 1:
        rider = incident_pts[0]
        swap = not inc[rider][0]
        pair = [pr for pr in coll_pairs if rider not in pr]
        if pair:
            i, j = pair[0]
            return CaseAllocation(2, (i, j, rider), swap)
        others = tuple(k for k in range(3) if k != rider)
        return CaseAllocation(4, others + (rider,), swap)
    if coll_pairs:
        i, j = coll_pairs[0]
        rest = next(k for k in range(3) if k not in (i, j))
        return CaseAllocation(3, (rest, i, j), False)
    return CaseAllocation(5, (0, 1, 2), False)


def _scalars_3p2l(x1: Vec3, x2: Vec3, x3: Vec3, l1: Vec3, l2: Vec3):
    """The determinant and incidence scalars every 3-point/2-line formula uses."""
    p = _k.cross(l1, l2)
    A = _k.det3(p, x2, x3)
    B = _k.det3(x1, p, x3)
    C = _k.det3(x1, x2, p)
    D = _k.det3(x1, x2, x3)
    a = (_k.dot3(x1, l1), _k.dot3(x1, l2))
    b = (_k.dot3(x2, l1), _k.dot3(x2, l2))
    c = (_k.dot3(x3, l1), _k.dot3(x3, l2))
    return p, A, B, C, D, a, b, c


def _pencil_solution(
    x1: Vec3, x2: Vec3, x3: Vec3, x4: Vec3, s: float, tol: Tolerances
) -> tuple[ConicMatrix, float]:
    if abs(s) <= tol.parameter or abs(s - 1.0) <= tol.parameter:
        raise DegenerateCase(f"pencil member at s={s!r} is degenerate")
    xi1, xi2, xi3, dev = _k.diag_triangle(x1, x2, x3, x4)
    m6 = _k.conic_from_pencil(xi1, xi2, xi3, s)
    return ConicMatrix.from_sym6(m6).normalized(), dev


def _coord_matrix(A, B, C, D, ai, bi, ci):
    """Tangency constraint for one line as a quadratic form in (s, t, 1)."""
    c1 = A * A * ai * ai
    c2 = D * ai * (C * ci - B * bi)
    c3 = A * C * ai * ci
    c4 = D * D * ai * ai
    c5 = -C * D * ai * ci
    c6 = C * C * ci * ci
    return (c1, c2, c4, c3, c5, c6)  # sym6 layout (m11, m12, m22, m13, m23, m33)


def _allocated(points, l1, l2, alloc: CaseAllocation):
    vecs = [_vec(p) for p in points]
    x1, x2, x3 = (vecs[i] for i in alloc.order)
    lv1, lv2 = _vec(l1), _vec(l2)
    if alloc.swap_lines:
        lv1, lv2 = lv2, lv1
    return x1, x2, x3, lv1, lv2


def predict_count_3p2l(points: Sequence, l1, l2, tol: Tolerances = DEFAULT) -> CountPrediction:
    """Real-count prediction for three points and two lines from sign tests.

    Cases 1 and 2 always have one real conic. Case 3 has two real conics
    exactly when the free point and the on-neither-line point have matching
    side products; case 4 when the mixed determinant/incidence product is
    negative; case 5 has four real conics exactly when all three points see
    the two lines with the same side-product sign, and none otherwise.
    """
    alloc = classify_3p2l_case(points, l1, l2, tol)
    x1, x2, x3, lv1, lv2 = _allocated(points, l1, l2, alloc)
    _, A, B, C, D, a, b, c = _scalars_3p2l(x1, x2, x3, lv1, lv2)

    if alloc.case == 1:
        return CountPrediction(1, 0, "case 1: one point on each line")
    if alloc.case == 2:
        return CountPrediction(
            1, 0, "case 2: collinear pair with the crossing, third point incident"
        )
    if alloc.case == 3:
        pred = (a[0] * c[0]) * (a[1] * c[1])
        if pred > 0.0:
            return CountPrediction(2, 0, "case 3: side products agree in sign", pred)
        return CountPrediction(0, 2, "case 3: side products differ in sign", pred)
    if alloc.case == 4:
        pred = -A * B * a[1] * b[1]
        if pred > 0.0:
            return CountPrediction(
                2, 0, "case 4: determinant/incidence product negative", pred
            )
        return CountPrediction(
            0, 2, "case 4: determinant/incidence product positive", pred
        )
    sides = (a[0] * a[1], b[0] * b[1], c[0] * c[1])
    pred = sides[0] * sides[1] * sides[2]
    same = all(s > 0.0 for s in sides) or all(s < 0.0 for s in sides)
    if same:
        return CountPrediction(4, 0, "case 5: all side products share a sign", pred)
    return CountPrediction(0, 4, "case 5: side products have mixed signs", pred)


def solve_three_points_two_lines(
    points: Sequence, l1, l2, tol: Tolerances = DEFAULT
) -> SolutionSet:
    """Conics through three points tangent to two lines.

    The input is classified into one of five special-position cases; each
    case has its own closed form. Counts are one (cases 1 and 2), two or a
    complex pair (cases 3 and 4), and four or two complex pairs (case 5).
    """
    alloc = classify_3p2l_case(points, l1, l2, tol)
    x1, x2, x3, lv1, lv2 = _allocated(points, l1, l2, alloc)
    p, A, B, C, D, a, b, c = _scalars_3p2l(x1, x2, x3, lv1, lv2)
    prediction = predict_count_3p2l(points, l1, l2, tol)
    diag = SolveDiagnostics(
        case_label=alloc.label,
        allocation=alloc.order,
        lines_swapped=alloc.swap_lines,
        prediction=prediction,
        context=CaseContext(p, None, "t*x1+p"),
    )

    conics: list[ConicMatrix] = []
    params: list[tuple[float, float]] = []
    complex_count = 0

    if alloc.case == 1:
        # tangency is pinned at the two incident points
        s = 0.5
        t = -A / (2.0 * D)
        x4 = tuple(t * u + v for u, v in zip(x1, p))
        conic, dev = _pencil_solution(x1, x2, x3, x4, s, tol)
        conics.append(conic)
        params.append((s, t))
        diag.triangle_deviation = dev

    elif alloc.case == 2:
        q = _k.cross(p, lv2)
        diag.context = CaseContext(p, q, "t*p+q")
        denom = 2.0 * B * b[1]
        if denom == 0.0:
            raise CaseDegeneracy("collinear-pair case denominator vanished")
        t = (_k.det3(q, x2, x3) * a[1] - _k.det3(x1, q, x3) * b[1]) / denom
        s = 2.0
        x4 = tuple(t * u + v for u, v in zip(p, q))
        conic, dev = _pencil_solution(x1, x2, x3, x4, s, tol)
        conics.append(conic)
        params.append((s, t))
        diag.triangle_deviation = dev

    elif alloc.case == 3:
        # second and third points are collinear with the line crossing
        rhs = (C * C * c[0] * c[1]) / (D * D * a[0] * a[1])
        diag.discriminant = rhs
        if rhs <= 0.0:
            complex_count = 2
        else:
            for t in (math.sqrt(rhs), -math.sqrt(rhs)):
                x4 = tuple(t * u + v for u, v in zip(x1, p))
                xi1, xi2, xi3, dev = _k.diag_triangle(x1, x2, x3, x4)
                L1 = _k.dot3(xi1, lv1) ** 2
                L2 = _k.dot3(xi2, lv1) ** 2
                s = L1 / (L1 - L2)
                conic, _ = _pencil_solution(x1, x2, x3, x4, s, tol)
                conics.append(conic)
                params.append((s, t))
                diag.triangle_deviation = dev

    elif alloc.case == 4:
        # third point rides the first line; tangency to the second is quadratic
        # in t, and its discriminant reduces exactly to a sign product, so the
        # reality decision always matches the count prediction
        q2 = 4.0 * D * D * a[1]
        q1 = 4.0 * D * A * a[1]
        q0 = -A * C * c[1]
        disc = -16.0 * D * D * A * B * a[1] * b[1]
        diag.discriminant = disc
        if disc > 0.0:
            r = math.sqrt(disc)
            qq = -(q1 + math.copysign(r, q1)) / 2.0
            roots = [qq / q2, q0 / qq]
        elif disc < 0.0:
            roots, complex_count = [], 2
        else:
            roots = [-q1 / (2.0 * q2)]
            diag.double_root = True
        for t in roots:
            s = -(D / A) * t
            x4 = tuple(t * u + v for u, v in zip(x1, p))
            conic, dev = _pencil_solution(x1, x2, x3, x4, s, tol)
            conics.append(conic)
            params.append((s, t))
            diag.triangle_deviation = dev

    else:
        try:
            lams = pencil_eigenvalues(
                [HomogeneousPoint(*x1), HomogeneousPoint(*x2), HomogeneousPoint(*x3)],
                ProjectiveLine(*lv1),
                ProjectiveLine(*lv2),
                tol,
            )
        except DegenerateCase as exc:
            raise CaseDegeneracy(
                "generic-case pencil is degenerate: the line intersection "
                "point lies on a side of the point triangle"
            ) from exc
        diag.eigenvalues = lams
        m1 = ConicMatrix.from_sym6(_coord_matrix(A, B, C, D, a[0], b[0], c[0]))
        m2 = ConicMatrix.from_sym6(_coord_matrix(A, B, C, D, a[1], b[1], c[1]))
        inter = intersect_conic_pencil(m1, m2, lams, tol)
        complex_count = inter.complex_count
        if len(inter.real_points) + inter.complex_count != 4:
            raise InconsistentPencil(
                f"expected four pencil intersections, found "
                f"{len(inter.real_points)} real and {inter.complex_count} complex"
            )
        if len(inter.real_points) == 2:
            # the generic family only admits zero or four real solutions; a
            # two-two split can only come from numerical breakdown
            raise InconsistentPencil(
                "two real and two complex intersections contradict the "
                "all-or-nothing reality structure of the two-tangency pencil"
            )
        for s, t in sorted(inter.real_points):
            x4 = tuple(t * u + v for u, v in zip(x1, p))
            conic, dev = _pencil_solution(x1, x2, x3, x4, s, tol)
            conics.append(conic)
            params.append((s, t))
            diag.triangle_deviation = dev

    order = sorted(range(len(conics)), key=lambda i: params[i])
    diag.parameters = tuple(params[i] for i in order)
    vecs = [_vec(pt) for pt in points]
    _fill_residuals(diag, conics, vecs, (_vec(l1), _vec(l2)))
    return SolutionSet(
        tuple(conics[i] for i in order), complex_count, alloc.label, diag
    )


# ---------------------------------------------------------------------------
# dual configurations (more lines than points)


def _dualize(points: Sequence, lines: Sequence):
    dual_points = [HomogeneousPoint(*_vec(l)) for l in lines]
    dual_lines = [ProjectiveLine(*_vec(p)) for p in points]
    return dual_points, dual_lines


def solve_dual(points: Sequence, lines: Sequence, tol: Tolerances = DEFAULT) -> SolutionSet:
    """Solve a lines-heavy configuration through the dual problem.

    Lines become points and points become lines; the dual solutions are
    conics in the dual plane and their adjugates are the answers in the
    original plane. Counts and case structure carry over unchanged.
    """
    dual_points, dual_lines = _dualize(points, lines)
    n = len(dual_points)
    try:
        if n == 5:
            inner = _five_point_solution_set(dual_points, tol)
        elif n == 4:
            inner = solve_four_points_line(dual_points, dual_lines[0], tol)
        elif n == 3:
            inner = solve_three_points_two_lines(
                dual_points, dual_lines[0], dual_lines[1], tol
            )
        else:
            raise UnsupportedCount("dual configuration is not lines-heavy")
    except GeneralPositionError as exc:
        raise GeneralPositionError(
            f"dual configuration degenerate (lines and points exchanged): {exc}",
            exc.indices,
        ) from exc
    label = "dual:" + inner.case_label
    diag = inner.diagnostics
    diag.case_label = label
    conics = tuple(cm.adjugate().normalized() for cm in inner.real_conics)
    vecs = [_vec(p) for p in points]
    lvs = [_vec(l) for l in lines]
    _fill_residuals(diag, conics, vecs, lvs)
    return SolutionSet(conics, inner.complex_count, label, diag)


# ---------------------------------------------------------------------------
# entry points


def solve(points: Sequence, lines: Sequence = (), tol: Tolerances = DEFAULT) -> SolutionSet:
    """Solve any five-element point/line configuration.

    Dispatches on the point/line split; raises UnsupportedCount when the
    total is not five.
    """
    cfg_kind = KINDS.get((len(points), len(lines)))
    if cfg_kind is None:
        raise UnsupportedCount(
            f"{len(points)} points and {len(lines)} lines do not form a "
            "five-element minimal configuration"
        )
    if cfg_kind == "5p":
        return _five_point_solution_set(points, tol)
    if cfg_kind == "4p1l":
        return solve_four_points_line(points, lines[0], tol)
    if cfg_kind == "3p2l":
        return solve_three_points_two_lines(points, lines[0], lines[1], tol)
    return solve_dual(points, lines, tol)


def predict(points: Sequence, lines: Sequence = (), tol: Tolerances = DEFAULT) -> CountPrediction:
    """Predict real/complex solution counts without solving."""
    cfg_kind = KINDS.get((len(points), len(lines)))
    if cfg_kind is None:
        raise UnsupportedCount(
            f"{len(points)} points and {len(lines)} lines do not form a "
            "five-element minimal configuration"
        )
    if cfg_kind == "5p":
        return CountPrediction(1, 0, "unique conic through five points")
    if cfg_kind == "4p1l":
        return predict_count_4p1l(points, lines[0], tol)
    if cfg_kind == "3p2l":
        return predict_count_3p2l(points, lines[0], lines[1], tol)
    dual_points, dual_lines = _dualize(points, lines)
    if len(dual_points) == 5:
        inner = CountPrediction(1, 0, "unique conic through five points")
    elif len(dual_points) == 4:
        inner = predict_count_4p1l(dual_points, dual_lines[0], tol)
    else:
        inner = predict_count_3p2l(dual_points, dual_lines[0], dual_lines[1], tol)
    return CountPrediction(
        inner.predicted_real, inner.predicted_complex, "dual: " + inner.rule, inner.predicate
    )
