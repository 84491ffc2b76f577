"""Deterministic sampling, verification suites and JSONL records.

Every sample draws from its own Philox stream keyed by ``(seed, index)``, so a
suite gives the same numbers whether it runs in one process or many.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import actions as act
from . import rotations as rot
from .actions import Space
from .characters import (
    A1,
    B1,
    PastingAngles,
    f2_fingerprint,
    f2_rep,
    fingerprint,
    pants_rep,
    relation_residual,
    rep_from_generators,
    stiefel_whitney,
    surface_rep_c0,
    surface_rep_c1,
)
from .multiply import (
    IdentityWithFreeVertex,
    rotations_from_triangle,
    third_angle,
    third_rotation,
    triangle_vertex,
)
from .rotations import FOUR_PI, TWO_PI, GroupFlavor, InvalidInputError, Rotation3, Spin
from .triangles import (
    PI,
    AngleTriple,
    SixTuple,
    classify_region,
    in_octahedron,
    in_tetrahedron,
    kappa,
    lengths_from_angles,
    measure_angles,
    measure_lengths,
    triangle_from_angles,
    vertex_angle,
)

INTERIOR_MARGIN = 1e-6
ROUNDTRIP_MARGIN = 1e-3
FACE_MARGIN = 1e-3
DISTINCT_GAP = 1e-6
COLLAPSE_TOL = 1e-10
GENERIC_FRACTION = 0.99
FLAVORS = (GroupFlavor.SO3, GroupFlavor.SU2)


# ----------------------------------------------------------------------------
# random streams and sampling
# ----------------------------------------------------------------------------

def sample_rng(seed: int, index: int) -> np.random.Generator:
    if seed < 0 or index < 0:
        raise InvalidInputError("seed and index must be non-negative")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def sample_angles(rng, space=Space.TETRA_C0, margin: float = 0.0) -> AngleTriple:
    """Uniform point of ``G`` or ``O`` by rejection from ``[0, pi]^3``."""
    space = Space.parse(space)
    inside = in_tetrahedron if space is Space.TETRA_C0 else in_octahedron
    while True:
        t = rng.uniform(0.0, PI, 3)
        if inside(t, margin):
            return AngleTriple(*(float(x) for x in t))


def sample_pasting(rng, flavor) -> PastingAngles:
    flavor = GroupFlavor.parse(flavor)
    return PastingAngles(tuple(float(x) for x in rng.uniform(0.0, flavor.modulus, 3)),
                         flavor.modulus)


def sample_f2(rng, flavor):
    m = GroupFlavor.parse(flavor).modulus
    return (float(rng.uniform(0.0, PI)), float(rng.uniform(0.0, m)), float(rng.uniform(0.0, m)))


# corners of the faces of G, listed by the vertex of G that each face misses
_G_CORNERS = {"I": (PI, PI, PI), "II": (PI, 0.0, 0.0), "III": (0.0, PI, 0.0), "IV": (0.0, 0.0, PI)}
_FACE_CORNERS = {
    "a": ("II", "III", "IV"), "b": ("I", "II", "IV"),
    "c": ("I", "III", "IV"), "d": ("I", "II", "III"),
}


def _g_face_point(rng, face):
    w = rng.dirichlet((1.0, 1.0, 1.0))
    pts = np.array([_G_CORNERS[k] for k in _FACE_CORNERS[face]])
    return AngleTriple(*(min(max(float(x), 0.0), PI) for x in w @ pts))


def _g_slack(t):
    a, b, c = t
    return (a + b + c - PI, b - a - c + PI, a - b - c + PI, c - a - b + PI)


def sample_face_point(rng, face: str, space=Space.TETRA_C0) -> AngleTriple:
    """Uniform point of an open face, at least ``FACE_MARGIN`` from its edges.

    Faces ``a..d`` lie on the faces of ``G``; in the octahedron ``a'..d'`` are
    their images under ``kappa``.
    """
    space = Space.parse(space)
    key = act._face_key(face)
    primed = key.endswith("prime")
    letter = key[0]
    if letter not in _FACE_CORNERS or (primed and space is not Space.OCTA_C1):
        raise InvalidInputError(f"unknown face {face!r} for {space.value}")
    idx = "abcd".index(letter)
    while True:
        t = _g_face_point(rng, letter)
        others = [s for i, s in enumerate(_g_slack(t)) if i != idx]
        if min(others) < FACE_MARGIN:
            continue
        if space is Space.TETRA_C0:
            return t
        if primed:
            t = kappa(t)
            if min(_g_slack(t)) >= FACE_MARGIN:
                return t
        elif min(_g_slack(kappa(t))) >= FACE_MARGIN:
            return t


def random_rotation(rng) -> np.ndarray:
    return rot.rot3_from_axis_angle(rot.random_unit_vector(rng), rng.uniform(0.0, TWO_PI)).matrix


def build(space, base, pasting, flavor):
    space = Space.parse(space)
    if space is Space.TETRA_C0:
        return surface_rep_c0(base, pasting, flavor)
    return surface_rep_c1(base, pasting, flavor)


def _fp(space, base, pasting, flavor, fp_flavor=None):
    return fingerprint(build(space, base, pasting, flavor), fp_flavor)


def _circ(a, b, m):
    d = abs(a - b) % m
    return min(d, m - d)


# ----------------------------------------------------------------------------
# suite plumbing
# ----------------------------------------------------------------------------

@dataclass
class Outcome:
    residual: float
    ok: bool = True
    soft: dict = field(default_factory=dict)
    tally: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite: str
    samples: int
    seed: int
    tol: float
    max_residual: float = 0.0
    failures: list = field(default_factory=list)
    soft: dict = field(default_factory=dict)
    tallies: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"suite": self.suite, "samples": self.samples, "seed": self.seed,
                "tol": self.tol, "pass": self.passed, "max_residual": self.max_residual,
                "failures": self.failures, "soft": self.soft, "tallies": self.tallies}


@dataclass(frozen=True)
class Suite:
    name: str
    run: object
    directed: object = None
    soft_fraction: float = GENERIC_FRACTION


def _absorb(report, key, out: Outcome, counts, soft_counts):
    report.max_residual = max(report.max_residual, float(out.residual))
    if not out.ok or not math.isfinite(out.residual):
        report.failures.append({"sample": key, "residual": float(out.residual), **out.info})
    for k, v in out.soft.items():
        soft_counts[k][0] += bool(v)
        soft_counts[k][1] += 1
    for k, v in out.tally.items():
        counts.setdefault(k, Counter())[str(v)] += 1


def _run_range(name, seed, tol, start, stop):
    fn = SUITES[name].run
    out = []
    for i in range(start, stop):
        try:
            out.append((i, fn(sample_rng(seed, i), tol)))
        except (ArithmeticError, ValueError) as exc:
            out.append((i, Outcome(math.inf, False, info={"error": str(exc)})))
    return out


def run_suite(name: str, n: int, seed: int = 0, tol: float = 1e-9, workers: int = 1) -> SuiteReport:
    """Run ``n`` random samples (plus fixed directed cases when ``n > 0``)."""
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}")
    if n < 0:
        raise InvalidInputError("sample count must be non-negative")
    suite = SUITES[name]
    report = SuiteReport(name, n, seed, tol)
    counts, soft_counts = {}, {}
    if n == 0:
        return report
    if suite.directed is not None:
        for j, out in enumerate(suite.directed(tol)):
            for k in out.soft:
                soft_counts.setdefault(k, [0, 0])
            _absorb(report, f"directed-{j}", out, counts, soft_counts)
    if workers <= 1:
        results = _run_range(name, seed, tol, 0, n)
    else:
        step = max(1, -(-n // (4 * workers)))
        bounds = [(s, min(n, s + step)) for s in range(0, n, step)]
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_run_range, *zip(*[(name, seed, tol, a, b) for a, b in bounds]))
            results = [r for part in parts for r in part]
    for i, out in results:
        for k in out.soft:
            soft_counts.setdefault(k, [0, 0])
        _absorb(report, i, out, counts, soft_counts)
    for k, (good, total) in sorted(soft_counts.items()):
        frac = good / total if total else 1.0
        report.soft[k] = frac
        if frac < suite.soft_fraction:
            report.failures.append({"sample": "aggregate", "check": k, "fraction": frac,
                                    "required": suite.soft_fraction})
    report.tallies = {k: dict(sorted(v.items())) for k, v in sorted(counts.items())}
    return report


# ----------------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------------

def _cba(rng, tol):
    t = sample_angles(rng, Space.TETRA_C0, INTERIOR_MARGIN)
    tri = triangle_from_angles(t).moved(random_rotation(rng))
    r = 0.0
    for fl in FLAVORS:
        rt = rotations_from_triangle(tri, fl)
        r = max(r, rot.rotation_distance(rt.product(), rt.target()))
    return Outcome(r, r < tol)


def _roundtrip(rng, tol):
    t = sample_angles(rng, Space.TETRA_C0, ROUNDTRIP_MARGIN)
    tri = triangle_from_angles(t)
    ea = max(abs(a - b) for a, b in zip(measure_angles(tri.vertices), t))
    el = max(abs(a - b) for a, b in zip(measure_lengths(tri.vertices), lengths_from_angles(t)))
    r = max(ea, el)
    return Outcome(r, r < tol, info={"angle_error": ea, "length_error": el})


def _third_angle(rng, tol):
    t = sample_angles(rng, Space.TETRA_C0, INTERIOR_MARGIN)
    tri = triangle_from_angles(t)
    v0, v1, v2 = tri.vertices
    formula = third_angle(t[0], t[1], tri.lengths[2])
    w = triangle_vertex(v0, t[0], v1, t[1])
    built = vertex_angle(w, v0, v1)
    r = max(abs(formula - t[2]), abs(built - formula), float(np.linalg.norm(w - v2)))
    return Outcome(r, r < tol)


def _relation(space, sw_expected):
    def run(rng, tol):
        t = sample_angles(rng, space, INTERIOR_MARGIN)
        r, classes = 0.0, set()
        for fl in FLAVORS:
            rep = build(space, t, sample_pasting(rng, fl), fl)
            r = max(r, relation_residual(rep))
            classes.add(stiefel_whitney(rep))
        return Outcome(r, r < tol and classes == {sw_expected},
                       tally={"sw_class": ",".join(map(str, sorted(classes)))})
    return run


def _h_star(tol):
    rep = surface_rep_c1((PI / 2, PI / 2, PI / 2), (0.0, 0.0, 0.0), GroupFlavor.SO3)
    want = (A1, B1, np.eye(3), np.eye(3))
    exact = all(np.array_equal(g.matrix, m) for g, m in zip(rep.generators, want))
    r = max(float(np.max(np.abs(g.matrix - m))) for g, m in zip(rep.generators, want))
    return [Outcome(r, exact, info={"case": "h* at the center"})]


def _sw_class(rng, tol):
    classes = {}
    r = 0.0
    for space in (Space.TETRA_C0, Space.OCTA_C1):
        rep = build(space, sample_angles(rng, space, INTERIOR_MARGIN),
                    sample_pasting(rng, GroupFlavor.SO3), GroupFlavor.SO3)
        r = max(r, relation_residual(rep))
        classes[space.value] = stiefel_whitney(rep, tol)
    ok = classes == {"TetraC0": 0, "OctaC1": 1}
    return Outcome(r, ok, tally=classes)


def _klein_invariance(rng, tol):
    r = 0.0
    for space in (Space.TETRA_C0, Space.OCTA_C1):
        t = sample_angles(rng, space, INTERIOR_MARGIN)
        for fl in FLAVORS:
            pt = act.ParamPoint(t, sample_pasting(rng, fl), space)
            f = fingerprint(act.build_rep(pt), GroupFlavor.SO3)
            for w in "ABC":
                g = fingerprint(act.build_rep(act.klein_axial(w, pt)), GroupFlavor.SO3)
                r = max(r, f.distance(g))
    return Outcome(r, r < tol)


def _fiber_invariance(rng, tol):
    r = 0.0
    group_ok = True
    for space in (Space.TETRA_C0, Space.OCTA_C1):
        t = sample_angles(rng, space, INTERIOR_MARGIN)
        pt = act.ParamPoint(t, sample_pasting(rng, GroupFlavor.SU2), space)
        f = fingerprint(act.build_rep(pt), GroupFlavor.SO3)
        for w in "abc":
            g = fingerprint(act.build_rep(act.klein_fiber_point(w, pt)), GroupFlavor.SO3)
            r = max(r, f.distance(g))
        p = pt.pasting
        ab = act.klein_fiber("b", act.klein_fiber("a", p))
        c = act.klein_fiber("c", p)
        group_ok &= max(_circ(x, y, FOUR_PI) for x, y in zip(ab.phi, c.phi)) < 1e-12
    return Outcome(r, r < tol and group_ok)


def _min_gap(fps):
    return min(fps[i].distance(fps[j]) for i in range(len(fps)) for j in range(i))


def _su2_traces(rep):
    return [g.trace() for g in rep.holonomies]


def _covering(rng, tol):
    # pants: the four angle triples of an axial orbit lift one SO(3) character four ways
    t = sample_angles(rng, Space.TETRA_C0, INTERIOR_MARGIN)
    lifts, so3 = [], []
    for w in (None, "A", "B", "C"):
        tw = t if w is None else act.klein_axial_angles(w, t)
        p = pants_rep(tw, GroupFlavor.SU2)
        lifts.append(np.array(_su2_traces(p)))
        so3.append(np.array([rot.project(g).trace() for g in p.holonomies]))
    so3_pants = max(float(np.max(np.abs(s - so3[0]))) for s in so3)
    pants_gap = min(float(np.max(np.abs(lifts[i] - lifts[j])))
                    for i in range(4) for j in range(i))

    # surface: the double Klein orbit
    space = (Space.TETRA_C0, Space.OCTA_C1)[int(rng.integers(2))]
    pt = act.ParamPoint(sample_angles(rng, space, INTERIOR_MARGIN),
                        sample_pasting(rng, GroupFlavor.SU2), space)
    images = [act.apply_double_klein(g, pt) for g in act.DOUBLE_KLEIN]
    reps = [act.build_rep(q) for q in images]
    so3_fps = [fingerprint(x, GroupFlavor.SO3) for x in reps]
    su2_fps = [fingerprint(x, GroupFlavor.SU2) for x in reps]
    so3_surface = max(so3_fps[0].distance(f) for f in so3_fps)
    orbit_size = len(act.orbit_double_klein(pt))

    # fixed loci over the edge rectangles
    region = "ABC"[int(rng.integers(3))]
    inv = act.MID_TIE_INVOLUTION[region]
    theta = float(rng.uniform(0.05, PI - 0.05))
    fixed = act.mid_tie_fixed_point(region, theta, rng.uniform(0.0, FOUR_PI, 2))
    fixed_move = fingerprint(act.build_rep(fixed), GroupFlavor.SU2).distance(
        fingerprint(act.build_rep(act.klein_fiber_point(inv, fixed)), GroupFlavor.SU2))
    base = list(fixed.base)
    s = float(rng.uniform(0.05, PI - 0.05))
    j, k = {"A": (3, 4), "B": (4, 5), "C": (3, 5)}[region]
    base[j], base[k] = s, PI - s
    generic = act.ParamPoint(tuple(base), sample_pasting(rng, GroupFlavor.SU2), Space.TETRA_C0)
    generic_move = fingerprint(act.build_rep(generic), GroupFlavor.SU2).distance(
        fingerprint(act.build_rep(act.klein_fiber_point(inv, generic)), GroupFlavor.SU2))

    # axis of I_A with phi1, phi2 in {0, 2pi}
    axis = act.ParamPoint((float(rng.uniform(0.05, PI - 0.05)), PI / 2, PI / 2),
                          PastingAngles((float(rng.uniform(0.0, FOUR_PI)),
                                         TWO_PI * int(rng.integers(2)),
                                         TWO_PI * int(rng.integers(2))), FOUR_PI),
                          Space.TETRA_C0)
    axis_size = len(act.orbit_double_klein(axis))

    r = max(so3_pants, so3_surface, fixed_move)
    ok = r < tol and axis_size < 16
    return Outcome(r, ok,
                   soft={"pants-4-distinct": pants_gap > DISTINCT_GAP,
                         "orbit-16-points": orbit_size == 16,
                         "orbit-16-distinct": _min_gap(su2_fps) > DISTINCT_GAP,
                         "generic-moved": generic_move > DISTINCT_GAP},
                   tally={"fixed-locus-region": region, "axis-orbit-size": axis_size},
                   info={"space": space.value, "axis_orbit": axis_size})


def _f2(rng, tol):
    r = 0.0
    collapse = 0.0
    for fl in FLAVORS:
        m = fl.modulus
        x = sample_f2(rng, fl)
        f = f2_fingerprint(f2_rep(*x, fl))
        for w in ("T0", "T1", "T0T1"):
            y = act.f2_klein(w, x, m)
            r = max(r, f.distance(f2_fingerprint(f2_rep(*y, fl))))
            back = act.f2_klein(w, y, m)
            r = max(r, abs(back[0] - x[0]), *(_circ(a, b, m) for a, b in zip(back[1:], x[1:])))
        l2 = float(rng.uniform(0.0, PI))
        for a, b in (((x[0], 0.0, x[2]), (l2, 0.0, x[2])), ((x[0], x[1], 0.0), (l2, x[1], 0.0))):
            d = f2_fingerprint(f2_rep(*a, fl)).distance(f2_fingerprint(f2_rep(*b, fl)))
            collapse = max(collapse, d)
    ok = r < tol and collapse < min(tol, COLLAPSE_TOL)
    return Outcome(max(r, collapse), ok, info={"collapse": collapse})


_C0_FACES = tuple(act.FACE_DIRECTIONS_C0)
_C1_FACES = tuple(act.FACE_DIRECTIONS_C1)


def _circle_actions(rng, tol):
    r = 0.0
    for space, faces in ((Space.TETRA_C0, _C0_FACES), (Space.OCTA_C1, _C1_FACES)):
        for face in faces:
            t = sample_face_point(rng, face, space)
            for fl in FLAVORS:
                p = sample_pasting(rng, fl)
                q = act.face_circle_action(face, p, float(rng.uniform(0.0, fl.modulus)), space)
                r = max(r, _fp(space, t, p, fl).distance(_fp(space, t, q, fl)))
    # canonical representatives
    ok = True
    p = sample_pasting(rng, GroupFlavor.SU2)
    for face in ("interior",) + _C1_FACES:
        space = Space.OCTA_C1
        c = act.canonical_fiber_rep(face, p, space)
        ok &= act.canonical_fiber_rep(face, c, space) == c
        if face == "interior":
            moved = p.shifted((TWO_PI,) * 3)
        else:
            moved = act.face_circle_action(face, p, float(rng.uniform(0.0, FOUR_PI)), space)
        c2 = act.canonical_fiber_rep(face, moved, space)
        ok &= max(_circ(a, b, FOUR_PI) for a, b in zip(c.phi, c2.phi)) < 1e-12
    lattice = act.canonical_fiber_rep("interior", PastingAngles((TWO_PI,) * 3, FOUR_PI))
    ok &= lattice.phi == (0.0, 0.0, 0.0)
    return Outcome(r, r < tol and ok)


# multiplication rules: one directed input per branch, cycling with the index

_BRANCHES = ("both-trivial", "first-trivial", "second-trivial", "coincident", "antipodal", "generic")


def _trivial_angle(rng, fl):
    return TWO_PI * int(rng.integers(2)) if fl is GroupFlavor.SU2 else 0.0


def _branch_input(rng, branch, fl):
    v0 = rot.random_unit_vector(rng)
    v1 = rot.random_unit_vector(rng)
    a0, a1 = (float(x) for x in rng.uniform(0.0, fl.modulus, 2))
    if branch == "both-trivial":
        a0, a1 = _trivial_angle(rng, fl), _trivial_angle(rng, fl)
    elif branch == "first-trivial":
        a0 = _trivial_angle(rng, fl)
    elif branch == "second-trivial":
        a1 = _trivial_angle(rng, fl)
    elif branch == "coincident":
        v1 = v0.copy()
    elif branch == "antipodal":
        v1 = -v0
    return v0, a0, v1, a1


def _oracle_residual(v0, a0, v1, a1, fl):
    A = rot.from_axis_angle(v0, a0, fl)
    B = rot.from_axis_angle(v1, a1, fl)
    target = rot.identity(fl) if fl is GroupFlavor.SO3 else rot.minus_identity()
    direct = rot.product(target, A.inverse(), B.inverse())
    res = third_rotation(v0, a0, v1, a1, fl)
    r = rot.rotation_distance(res.element(fl), direct)
    if not isinstance(res, IdentityWithFreeVertex):
        r = max(r, rot.rotation_distance(rot.product(res.element(fl), B, A), target))
    return r, res.case


def _multrule(rng, tol):
    r = 0.0
    ok = True
    tally = {}
    branch = _BRANCHES[int(rng.integers(len(_BRANCHES)))]
    for fl in FLAVORS:
        rr, case = _oracle_residual(*_branch_input(rng, "generic", fl), fl)
        r = max(r, rr)
        rd, dcase = _oracle_residual(*_branch_input(rng, branch, fl), fl)
        r = max(r, rd)
        ok &= dcase == branch
        tally[f"directed-{fl.value}"] = dcase
        tally[f"random-{fl.value}"] = case
    return Outcome(r, r < tol and ok, tally=tally, info={"branch": branch})


def _multrule_directed(tol):
    out = []
    e1, e2 = np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
    cases = [
        ("both-trivial", e1, 0.0, e2, 0.0),
        ("first-trivial", e1, 0.0, e2, 1.0),
        ("second-trivial", e1, 1.0, e2, 0.0),
        ("coincident", e1, 1.0, e1, 2.0),
        ("antipodal", e1, 1.0, -e1, 0.5),
        ("generic", e1, PI / 2, e2, PI / 2),
    ]
    for fl in FLAVORS:
        for branch, v0, a0, v1, a1 in cases:
            r, case = _oracle_residual(v0, a0, v1, a1, fl)
            out.append(Outcome(r, r < tol and case == branch,
                               info={"branch": branch, "flavor": fl.value}))
        for branch, v0, a0, v1, a1 in cases[:3]:
            # the same branches with a factor equal to -1
            if fl is GroupFlavor.SU2:
                a0 = TWO_PI if a0 == 0.0 else a0
                r, case = _oracle_residual(v0, a0, v1, a1, fl)
                out.append(Outcome(r, r < tol and case == branch,
                                   info={"branch": branch, "flavor": "su2, -1 factor"}))
    return out


SUITES = {s.name: s for s in (
    Suite("cba", _cba),
    Suite("roundtrip", _roundtrip),
    Suite("relation-c0", _relation(Space.TETRA_C0, 0)),
    Suite("relation-c1", _relation(Space.OCTA_C1, 1), directed=_h_star),
    Suite("sw-class", _sw_class),
    Suite("klein-invariance", _klein_invariance),
    Suite("fiber-invariance", _fiber_invariance),
    Suite("covering-16", _covering),
    Suite("f2", _f2),
    Suite("circle-actions", _circle_actions),
    Suite("multrule-oracle", _multrule, directed=_multrule_directed),
    Suite("third-angle", _third_angle),
)}


# ----------------------------------------------------------------------------
# records
# ----------------------------------------------------------------------------

def _dump(obj) -> str:
    """JSON with every float written at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError(f"cannot serialize {x!r}")
        s = format(x, ".17g")
        return s if any(ch in s for ch in ".en") else s + ".0"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_dump(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(_dump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


dumps = _dump


@dataclass
class SampleRecord:
    space: str
    base: list
    pasting: list
    flavor: str
    region: str = None
    fingerprint: list = None
    sw_class: int = None
    residual: float = None
    generators: list = None

    def to_dict(self) -> dict:
        d = {"space": self.space, "base": list(self.base), "pasting": list(self.pasting),
             "flavor": self.flavor, "region": self.region, "fingerprint": self.fingerprint,
             "sw_class": self.sw_class, "residual": self.residual}
        if self.generators is not None:
            d["generators"] = self.generators
        return d

    def to_json(self) -> str:
        return _dump(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "SampleRecord":
        known = {k: d.get(k) for k in ("space", "base", "pasting", "flavor", "region",
                                       "fingerprint", "sw_class", "residual", "generators")}
        if known["space"] is None or known["base"] is None or known["flavor"] is None:
            raise InvalidInputError("record needs space, base and flavor")
        known["pasting"] = known["pasting"] or []
        return cls(**known)

    @classmethod
    def from_json(cls, line: str) -> "SampleRecord":
        return cls.from_dict(json.loads(line))


def _element_data(g):
    return list(g.q) if isinstance(g, Spin) else [float(x) for x in g.matrix.ravel()]


def element_from_data(data, flavor):
    flavor = GroupFlavor.parse(flavor)
    vals = [float(x) for x in data]
    if flavor is GroupFlavor.SU2:
        if len(vals) != 4:
            raise InvalidInputError("an SU(2) element has four entries")
        return Spin(tuple(vals))
    if len(vals) != 9:
        raise InvalidInputError("an SO(3) element has nine entries")
    return Rotation3(np.array(vals).reshape(3, 3))


SPACE_TAGS = {"G": Space.TETRA_C0, "O": Space.OCTA_C1, "F2": Space.F2}


def make_record(space, rng, flavor) -> SampleRecord:
    space = Space.parse(space)
    flavor = GroupFlavor.parse(flavor)
    if space is Space.F2:
        x = sample_f2(rng, flavor)
        pair = f2_rep(*x, flavor)
        return SampleRecord(space.value, list(x), [], flavor.value,
                            fingerprint=list(f2_fingerprint(pair).values),
                            generators=[_element_data(g) for g in pair])
    t = sample_angles(rng, space)
    p = sample_pasting(rng, flavor)
    rep = build(space, t, p, flavor)
    region = classify_region(SixTuple(*t, *rep.base_triangles[0].lengths)).name
    return SampleRecord(space.value, list(t), list(p.phi), flavor.value, region,
                        list(fingerprint(rep).values), stiefel_whitney(rep),
                        relation_residual(rep), [_element_data(g) for g in rep.generators])


def sample_records(space, n: int, seed: int, flavor):
    return [make_record(space, sample_rng(seed, i), flavor) for i in range(n)]


def record_in_space(rec: SampleRecord) -> bool:
    space = Space.parse(rec.space)
    if space is Space.F2:
        m = GroupFlavor.parse(rec.flavor).modulus
        l, a, b = rec.base
        return 0.0 <= l <= PI and 0.0 <= a < m and 0.0 <= b < m
    inside = in_tetrahedron if space is Space.TETRA_C0 else in_octahedron
    return inside(rec.base)


def classify_record(rec: SampleRecord, tol: float = 1e-6) -> int:
    """Stiefel-Whitney class of the SO(3) image of a record's representation."""
    space = Space.parse(rec.space)
    if space is Space.F2:
        raise InvalidInputError("free group records have no surface class")
    if rec.generators is not None:
        if len(rec.generators) != 4:
            raise InvalidInputError("a surface record has four generators")
        gens = [rot.to_so3(element_from_data(g, rec.flavor)) for g in rec.generators]
        rep = rep_from_generators(*gens)
    else:
        rep = build(space, rec.base, rec.pasting, rec.flavor).projected()
    r = relation_residual(rep)
    if not r < tol:
        raise InvalidInputError(f"relation residual {r:.3g} exceeds {tol:g}")
    return stiefel_whitney(rep)


def identity_record(flavor=GroupFlavor.SO3) -> SampleRecord:
    flavor = GroupFlavor.parse(flavor)
    one = _element_data(rot.identity(flavor))
    return SampleRecord(Space.TETRA_C0.value, [PI, PI, PI], [], flavor.value,
                        generators=[one] * 4)


# ----------------------------------------------------------------------------
# orbits
# ----------------------------------------------------------------------------

def _element_name(g):
    axial, fiber = g
    parts = [f"I_{axial}" if axial else "", f"i_{fiber}" if fiber else ""]
    return " ".join(p for p in parts if p) or "Id"


def orbit_report(angles, pasting, space) -> list:
    """One dict per orbit member followed by a summary dict."""
    space = Space.parse(space)
    if space is Space.F2:
        raise InvalidInputError("orbits are computed for G and O only")
    inside = in_tetrahedron if space is Space.TETRA_C0 else in_octahedron
    if len(angles) != 3 or not inside(angles, -1e-12):
        raise InvalidInputError(f"angles {tuple(angles)} outside {space.value}")
    pt = act.ParamPoint(tuple(angles), PastingAngles(tuple(pasting), FOUR_PI), space)
    rows, su2 = [], []
    for g in act.DOUBLE_KLEIN:
        q = act.apply_double_klein(g, pt)
        f = fingerprint(act.build_rep(q), GroupFlavor.SU2)
        su2.append(f)
        rows.append({"element": _element_name(g), "base": list(q.base),
                     "pasting": list(q.pasting.phi), "su2_fingerprint": list(f.values)})
    rep = act.build_rep(pt)
    so3 = fingerprint(rep, GroupFlavor.SO3)
    spread = max(so3.distance(fingerprint(act.build_rep(act.apply_double_klein(g, pt)),
                                          GroupFlavor.SO3)) for g in act.DOUBLE_KLEIN)
    distinct_fp = []
    for f in su2:
        if all(f.distance(h) > DISTINCT_GAP for h in distinct_fp):
            distinct_fp.append(f)
    rows.append({"summary": True, "space": space.value,
                 "distinct_count": len(act.orbit_double_klein(pt)),
                 "distinct_fingerprints": len(distinct_fp),
                 "so3_fingerprint": list(so3.values), "so3_spread": spread,
                 "sw_class": stiefel_whitney(rep)})
    return rows
