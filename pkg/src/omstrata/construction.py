"""Iterated planar configurations and the degeneration certificate.

Starting from a seven-point seed, each level appends three points:

1. ``d_n`` where line(omega, gamma) meets line(alpha, b_n),
2. ``b_{n+1}`` where line(omega, beta) meets line(a, d_n),
3. ``c_n`` where line(alpha, beta) meets line(a, b_{n+1}).

Marking ``c_i`` with the label ``delta`` at level i yields a family of
arrangements whose oriented matroids stay constant under positive
rescaling but collapse, in the limit where all non-persistent points drop
to the zero vector, onto one common eight-element oriented matroid.  The
certificate checks this collapse together with the exact pairwise-distinct
cross-ratios that tell the levels apart inside the shared limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    CoincidentPoints,
    DegeneratePoints,
    DegenerateStep,
    Identical,
    NotCollinear,
    Parallel,
    SeedRejected,
)
from .geometry import (
    PlanePoint,
    Vector3,
    collinear,
    cross_ratio,
    embed_affine,
    line_intersect,
    line_through,
    perspective_normalize,
)
from .labels import PERSISTENT, Label, indexed, label_key
from .om import LabeledArrangement, OrientedMatroid, om_equal, om_of, weak_map

SEED_LABELS = ("alpha", "beta", "gamma", "omega", "nu", "a", "b1")


@dataclass(frozen=True)
class Seed:
    """The seven starting points of the construction."""

    alpha: PlanePoint
    beta: PlanePoint
    gamma: PlanePoint
    omega: PlanePoint
    nu: PlanePoint
    a: PlanePoint
    b1: PlanePoint

    def points(self) -> dict[str, PlanePoint]:
        return {name: getattr(self, name) for name in SEED_LABELS}


@dataclass(frozen=True)
class SeedValidation:
    ok: bool
    violated: Optional[str]
    message: str

    def __bool__(self) -> bool:
        return self.ok


def default_seed() -> Seed:
    """The shipped candidate seed; ``validate_seed`` accepts it."""
    return Seed(
        alpha=PlanePoint(0, 0),
        beta=PlanePoint(6, 0),
        gamma=PlanePoint(4, 0),
        omega=PlanePoint(3, 5),
        nu=PlanePoint(-2, 1),
        a=PlanePoint(1, -2),
        b1=PlanePoint(Fraction(9, 2), Fraction(5, 2)),
    )


def _strictly_between(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> bool:
    """True iff q lies strictly inside the segment p-r (assumes collinear)."""
    if p.x != r.x:
        t = (q.x - p.x) / (r.x - p.x)
    else:
        t = (q.y - p.y) / (r.y - p.y)
    return 0 < t < 1


def validate_seed(seed: Seed) -> SeedValidation:
    """Check the genericity constraints the construction depends on.

    Diagnostics name the first violated constraint; a passing seed is still
    only a candidate until the certificate accepts it.
    """
    s = seed

    def fail(code: str, message: str) -> SeedValidation:
        return SeedValidation(False, code, message)

    if not collinear(s.alpha, s.gamma, s.beta):
        return fail("baseline", "alpha, gamma, beta must be collinear")
    if s.alpha == s.beta or s.alpha == s.gamma or s.beta == s.gamma:
        return fail("baseline", "alpha, gamma, beta must be three distinct points")
    if not _strictly_between(s.alpha, s.gamma, s.beta):
        return fail("baseline", "gamma must lie strictly between alpha and beta")
    if collinear(s.alpha, s.beta, s.omega):
        return fail("apex", "omega must not lie on line alpha-beta")
    if collinear(s.alpha, s.beta, s.a):
        return fail("anchor", "a must not lie on line alpha-beta")
    if s.a == s.omega:
        return fail("anchor", "a must differ from omega")
    if collinear(s.omega, s.beta, s.a):
        return fail("anchor", "a must not lie on line omega-beta")
    if collinear(s.omega, s.gamma, s.a):
        return fail("anchor", "a must not lie on line omega-gamma")
    if not collinear(s.omega, s.b1, s.beta) or not _strictly_between(s.omega, s.b1, s.beta):
        return fail("b1_segment", "b1 must lie strictly inside segment omega-beta")
    others = [("alpha", s.alpha), ("beta", s.beta), ("gamma", s.gamma),
              ("omega", s.omega), ("a", s.a), ("b1", s.b1)]
    for i in range(len(others)):
        for j in range(i + 1, len(others)):
            (n1, p1), (n2, p2) = others[i], others[j]
            if p1 != p2 and collinear(p1, p2, s.nu):
                return fail("nu_generic", f"nu lies on line {n1}-{n2}")
    return SeedValidation(True, None, "seed satisfies all constraints")


@dataclass(frozen=True)
class ConfigurationFamily:
    """Seed plus depth levels of appended points, all incidences exact."""

    seed: Seed
    depth: int
    points: tuple[tuple[Label, PlanePoint], ...]

    def point(self, label: Label) -> PlanePoint:
        for lab, pt in self.points:
            if lab == label:
                return pt
        raise KeyError(label)

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple(lab for lab, _ in self.points)

    def level(self, i: int) -> "ConfigurationFamily":
        """The sub-family of depth i (the first construction levels only)."""
        if not 0 <= i <= self.depth:
            raise IndexError(f"level {i} not in 0..{self.depth}")
        keep = set(_level_labels(i))
        return ConfigurationFamily(
            self.seed, i, tuple((l, p) for l, p in self.points if l in keep)
        )

    def arrangement(self) -> LabeledArrangement:
        """All points lifted to height 1, in global label order."""
        return LabeledArrangement(
            (lab, embed_affine(pt))
            for lab, pt in sorted(self.points, key=lambda e: label_key(e[0]))
        )


def _level_labels(depth: int) -> list[Label]:
    labels: list[Label] = list(SEED_LABELS)
    for n in range(1, depth + 1):
        labels.extend((indexed("d", n), indexed("b", n + 1), indexed("c", n)))
    return labels


def initial_family(seed: Seed) -> ConfigurationFamily:
    return ConfigurationFamily(
        seed, 0, tuple((name, pt) for name, pt in seed.points().items())
    )


def extend(family: ConfigurationFamily) -> ConfigurationFamily:
    """Append d_n, b_{n+1}, c_n for n = depth + 1; earlier points unchanged."""
    n = family.depth + 1
    s = family.seed
    b_n = family.point(indexed("b", n))

    def meet(step_lines: str, p1, p2, q1, q2) -> PlanePoint:
        try:
            return line_intersect(line_through(p1, p2), line_through(q1, q2))
        except (Parallel, Identical, CoincidentPoints) as exc:
            raise DegenerateStep(n, step_lines, str(exc)) from exc

    d_n = meet("omega-gamma / alpha-b_n", s.omega, s.gamma, s.alpha, b_n)
    b_next = meet("omega-beta / a-d_n", s.omega, s.beta, s.a, d_n)
    c_n = meet("alpha-beta / a-b_{n+1}", s.alpha, s.beta, s.a, b_next)
    added = (
        (indexed("d", n), d_n),
        (indexed("b", n + 1), b_next),
        (indexed("c", n), c_n),
    )
    return ConfigurationFamily(s, n, family.points + added)


def build(seed: Seed, depth: int) -> ConfigurationFamily:
    """Validate the seed and run ``depth`` extension steps."""
    check = validate_seed(seed)
    if not check:
        raise SeedRejected(check.violated or "seed", check.message)
    family = initial_family(seed)
    for _ in range(depth):
        family = extend(family)
    return family


def delta_arrangement(family: ConfigurationFamily, i: int) -> LabeledArrangement:
    """Level-i arrangement with the point c_i carrying the label ``delta``.

    Ground set in global label order; all points lifted to height 1.
    """
    if not 1 <= i <= family.depth:
        raise IndexError(f"i = {i} not in 1..{family.depth}")
    level = family.level(i)
    c_label = indexed("c", i)
    relabeled = [
        ("delta" if lab == c_label else lab, pt) for lab, pt in level.points
    ]
    return LabeledArrangement(
        (lab, embed_affine(pt))
        for lab, pt in sorted(relabeled, key=lambda e: label_key(e[0]))
    )


def scale_degeneration(arrangement: LabeledArrangement, n: int) -> LabeledArrangement:
    """Shrink every non-persistent element by 1/n; persistent points stay at
    height 1.  Positive rescaling never changes the oriented matroid."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    factor = Fraction(1, n)
    return LabeledArrangement(
        (lab, vec if lab in PERSISTENT else vec.scaled(factor))
        for lab, vec in arrangement.elements
    )


def limit_arrangement(arrangement: LabeledArrangement) -> LabeledArrangement:
    """The n -> infinity limit: non-persistent elements become the zero
    vector (loops); persistent elements keep their height-1 vectors."""
    zero = Vector3(0, 0, 0)
    return LabeledArrangement(
        (lab, vec if lab in PERSISTENT else zero) for lab, vec in arrangement.elements
    )


def cross_ratio_ledger(family: ConfigurationFamily) -> list[tuple[int, Fraction]]:
    """The exact cross-ratio of (alpha, c_i, gamma, beta) for every level i."""
    s = family.seed
    return [
        (i, cross_ratio(s.alpha, family.point(indexed("c", i)), s.gamma, s.beta))
        for i in range(1, family.depth + 1)
    ]


@dataclass(frozen=True)
class LevelRecord:
    """Per-level certificate evidence."""

    i: int
    cr: Fraction
    mi_fingerprint: str
    limit_fingerprint: str
    limit_cr: Fraction
    degeneration_ok: tuple[tuple[int, bool], ...]
    weak_map_ok: bool


@dataclass(frozen=True)
class CertificateChecks:
    c_distinct: bool
    cr_distinct: bool
    stratum_constancy: bool
    limits_equal: bool
    separation: bool
    weak_maps: bool

    def all_pass(self) -> bool:
        return all(
            (self.c_distinct, self.cr_distinct, self.stratum_constancy,
             self.limits_equal, self.separation, self.weak_maps)
        )


@dataclass(frozen=True)
class CertificateReport:
    """Exact witnesses and verdicts of one certificate run.

    Everything here is recomputable from the seed alone; two runs with the
    same inputs produce identical reports.
    """

    seed: Seed
    depth: int
    samples: tuple[int, ...]
    records: tuple[LevelRecord, ...]
    limit_fingerprint: str
    checks: CertificateChecks
    passed: bool


def certificate(
    seed: Seed, depth: int, samples: Sequence[int] = (1, 2, 4, 1024)
) -> CertificateReport:
    """Run every check of the degeneration certificate at exact precision.

    (a) the c_i are pairwise distinct; (b) their cross-ratios are pairwise
    distinct; (c) each delta-marked arrangement keeps its oriented matroid
    under the sampled rescalings; (d) the loop-free parts of all limit
    oriented matroids coincide (the shared limit); (e) the limit
    arrangements still differ by the cross-ratio invariant while realizing
    that one limit; (f) each level admits a weak map onto its limit.

    Raises SeedRejected when a quantity cannot even be computed (invalid
    seed, degenerate step, degenerate cross-ratio); otherwise returns a
    report whose ``passed`` flag aggregates (a)-(f).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    check = validate_seed(seed)
    if not check:
        raise SeedRejected(check.violated or "seed", check.message)
    try:
        family = build(seed, depth)
    except DegenerateStep as exc:
        raise SeedRejected("construction", str(exc)) from exc
    try:
        ledger = cross_ratio_ledger(family)
    except (NotCollinear, DegeneratePoints) as exc:
        raise SeedRejected("cross_ratio_ledger", f"{type(exc).__name__}: {exc}") from exc

    c_points = [family.point(indexed("c", i)) for i in range(1, depth + 1)]
    c_distinct = len(set(c_points)) == depth
    cr_values = [value for _, value in ledger]
    cr_distinct = len(set(cr_values)) == depth

    records: list[LevelRecord] = []
    shared_limits: list[OrientedMatroid] = []
    all_scaling_ok = True
    all_weak_ok = True
    separation_ok = True
    s = seed
    for i in range(1, depth + 1):
        marked = delta_arrangement(family, i)
        level_om = om_of(marked)
        degeneration = []
        for n in samples:
            same = om_equal(om_of(scale_degeneration(marked, n)), level_om)
            degeneration.append((n, same))
            all_scaling_ok &= same
        limit = limit_arrangement(marked)
        limit_om = om_of(limit)
        shared = limit_om.delete_loops()
        shared_limits.append(shared)
        weak_ok = weak_map(level_om, limit_om)
        all_weak_ok &= weak_ok
        try:
            limit_cr = cross_ratio(
                s.alpha,
                perspective_normalize(limit.vector("delta")),
                s.gamma,
                s.beta,
            )
        except (NotCollinear, DegeneratePoints) as exc:
            raise SeedRejected("separation", f"{type(exc).__name__}: {exc}") from exc
        separation_ok &= limit_cr == cr_values[i - 1]
        records.append(
            LevelRecord(
                i=i,
                cr=cr_values[i - 1],
                mi_fingerprint=level_om.fingerprint(),
                limit_fingerprint=shared.fingerprint(),
                limit_cr=limit_cr,
                degeneration_ok=tuple(degeneration),
                weak_map_ok=weak_ok,
            )
        )

    limits_equal = all(
        om_equal(shared_limits[0], other) for other in shared_limits[1:]
    )
    separation_ok &= cr_distinct and limits_equal

    checks = CertificateChecks(
        c_distinct=c_distinct,
        cr_distinct=cr_distinct,
        stratum_constancy=all_scaling_ok,
        limits_equal=limits_equal,
        separation=separation_ok,
        weak_maps=all_weak_ok,
    )
    return CertificateReport(
        seed=seed,
        depth=depth,
        samples=tuple(samples),
        records=tuple(records),
        limit_fingerprint=shared_limits[0].fingerprint(),
        checks=checks,
        passed=checks.all_pass(),
    )
