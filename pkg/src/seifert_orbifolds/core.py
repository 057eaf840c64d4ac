"""
Exact data model for closed 2-orbifolds and oriented Seifert fibered
3-orbifolds.

A fibered orbifold is recorded by its base 2-orbifold, one local invariant
a/b per cone point and per corner reflector (matched to the base labels by
the order b), the Euler class e, and one boundary bit xi per boundary
component of the underlying surface of the base.  All arithmetic is exact:
invariants are integer pairs, e and chi are `fractions.Fraction`.

For an oriented fibered orbifold these data satisfy

    e + sum_i a_i/b_i + (1/2) (sum_j a'_j/b'_j + sum_k xi_k) = 0  (mod 1)

where i runs over cone points, j over corner reflectors and k over boundary
components.  `validate` checks exactly this relation together with the
label/invariant matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

Rational = Fraction


class Surface(Enum):
    SPHERE = "S2"
    PROJECTIVE_PLANE = "RP2"
    DISK = "D2"


def _as_label_tuple(labels) -> tuple[int, ...]:
    out = []
    for n in labels:
        n = int(n)
        if n < 1:
            raise ValueError("singularity labels must be positive integers, got %r" % (n,))
        if n == 1:
            continue  # order-1 points are regular and never stored
        out.append(n)
    return tuple(sorted(out))


@dataclass(frozen=True)
class TwoOrbifold:
    """A closed 2-orbifold: underlying surface, cone labels, corner labels.

    Corner reflectors only occur on the disk; the projective plane carries
    at most cone points.  Labels equal to 1 are dropped at construction.
    """

    surface: Surface
    cone_labels: tuple[int, ...] = ()
    corner_labels: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cone_labels", _as_label_tuple(self.cone_labels))
        object.__setattr__(self, "corner_labels", _as_label_tuple(self.corner_labels))
        if self.corner_labels and self.surface is not Surface.DISK:
            raise ValueError("corner reflectors only occur on a disk base")
        if self.surface is Surface.PROJECTIVE_PLANE and self.corner_labels:
            raise ValueError("RP2 carries at most cone points")

    @property
    def boundary_components(self) -> int:
        return 1 if self.surface is Surface.DISK else 0

    def __str__(self) -> str:
        name = self.surface.value
        if not self.cone_labels and not self.corner_labels:
            return name
        cones = ",".join(str(n) for n in self.cone_labels)
        if self.surface is Surface.DISK:
            corners = ",".join(str(n) for n in self.corner_labels)
            return "%s(%s;%s)" % (name, cones, corners)
        return "%s(%s)" % (name, cones)


@dataclass(frozen=True)
class LocalInvariant:
    """The class a/b in Q/Z attached to an exceptional fiber of order b.

    Stored with the canonical representative 0 <= a < b.  The singularity
    index of the corresponding fiber is gcd(a, b).
    """

    a: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("invariant order must be >= 1")
        object.__setattr__(self, "a", int(self.a) % int(self.b))
        object.__setattr__(self, "b", int(self.b))

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.b)

    @property
    def index(self) -> int:
        """Singularity index of the fiber: gcd(a, b) (gcd(0, b) = b)."""
        return gcd(self.a, self.b)

    def negated(self) -> "LocalInvariant":
        return LocalInvariant(-self.a, self.b)

    def __str__(self) -> str:
        return "%d/%d" % (self.a, self.b)


def _as_invariants(pairs) -> tuple[LocalInvariant, ...]:
    out = []
    for p in pairs:
        inv = p if isinstance(p, LocalInvariant) else LocalInvariant(int(p[0]), int(p[1]))
        if inv.b == 1:
            continue  # invariant over a regular point; never stored
        out.append(inv)
    return tuple(out)


@dataclass(frozen=True)
class FiberedOrbifold:
    """An oriented Seifert fibered 3-orbifold given by its invariants."""

    base: TwoOrbifold
    cone_invariants: tuple[LocalInvariant, ...] = ()
    corner_invariants: tuple[LocalInvariant, ...] = ()
    euler: Fraction = Fraction(0)
    xi: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cone_invariants", _as_invariants(self.cone_invariants))
        object.__setattr__(self, "corner_invariants", _as_invariants(self.corner_invariants))
        object.__setattr__(self, "euler", Fraction(self.euler))
        xi = tuple(int(x) for x in self.xi)
        if any(x not in (0, 1) for x in xi):
            raise ValueError("xi entries must be bits")
        if len(xi) != self.base.boundary_components:
            raise ValueError(
                "xi must have one entry per boundary component (%d expected, %d given)"
                % (self.base.boundary_components, len(xi))
            )
        object.__setattr__(self, "xi", xi)

    @classmethod
    def from_data(cls, surface, cone_pairs=(), corner_pairs=(), euler=0, xi=None):
        """Build base and fibration together from raw (a, b) pairs.

        Base labels are the invariant orders.  When ``xi`` is None and the
        base has a boundary, the unique xi making the sum relation hold is
        chosen (ValueError if none exists).
        """
        cones = _as_invariants(cone_pairs)
        corners = _as_invariants(corner_pairs)
        base = TwoOrbifold(
            Surface(surface) if not isinstance(surface, Surface) else surface,
            tuple(i.b for i in cones),
            tuple(i.b for i in corners),
        )
        e = Fraction(euler)
        if base.boundary_components == 0:
            bits = ()
        elif xi is None:
            bits = (solve_xi(cones, corners, e),)
        else:
            bits = (int(xi),) if isinstance(xi, int) else tuple(int(x) for x in xi)
        return cls(base, cones, corners, e, bits)

    def __str__(self) -> str:
        cones = ",".join(str(i) for i in self.cone_invariants)
        corners = ",".join(str(i) for i in self.corner_invariants)
        e = format_rational(self.euler)
        if self.base.surface is Surface.DISK:
            bits = ",".join(str(x) for x in self.xi)
            return "(%s; %s; %s; %s; %s)" % (self.base, cones, corners, e, bits)
        return "(%s; %s; %s)" % (self.base, cones, e)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def solve_xi(cone_invariants, corner_invariants, euler) -> int:
    """The unique xi in {0, 1} closing the sum relation over one boundary.

    With a single boundary component the relation pins xi/2 mod 1, hence xi;
    raises ValueError when neither bit works.
    """
    s = Fraction(euler) + sum((i.value for i in _as_invariants(cone_invariants)), Fraction(0))
    s += sum((i.value for i in _as_invariants(corner_invariants)), Fraction(0)) / 2
    t = (-2 * s) % 2
    if t.denominator != 1:
        raise ValueError("no boundary bit makes the invariant relation hold")
    return int(t)


def euler_characteristic(base: TwoOrbifold) -> Fraction:
    """Orbifold Euler characteristic of a closed 2-orbifold.

    chi(X) minus (1 - 1/n) per cone point and half that per corner
    reflector, with chi(S2) = 2 and chi(RP2) = chi(D2) = 1.
    """
    chi = Fraction(2 if base.surface is Surface.SPHERE else 1)
    for n in base.cone_labels:
        chi -= 1 - Fraction(1, n)
    for m in base.corner_labels:
        chi -= Fraction(1, 2) * (1 - Fraction(1, m))
    return chi


def is_bad(base: TwoOrbifold) -> bool:
    """Whether a positively curved base is a bad 2-orbifold.

    The bad ones are the sphere with two distinct cone labels (teardrops
    included, reading a missing label as 1) and the disk with two distinct
    corner labels.  Rejects bases with chi <= 0.
    """
    if euler_characteristic(base) <= 0:
        raise ValueError("is_bad is only defined for chi > 0")
    if base.surface is Surface.SPHERE:
        labels = base.cone_labels
    elif base.surface is Surface.DISK and not base.cone_labels:
        labels = base.corner_labels
    else:
        return False
    if len(labels) > 2 or not labels:
        return False
    padded = (labels + (1, 1))[:2]
    return padded[0] != padded[1]


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    residue: Fraction | None = None
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def relation_sum(f: FiberedOrbifold) -> Fraction:
    """Left side of the invariant relation (an integer iff f is consistent)."""
    s = f.euler + sum((i.value for i in f.cone_invariants), Fraction(0))
    s += (sum((i.value for i in f.corner_invariants), Fraction(0)) + sum(f.xi)) / 2
    return s


def _balanced_mod1(q: Fraction) -> Fraction:
    return (q + Fraction(1, 2)) % 1 - Fraction(1, 2)


def validate(f: FiberedOrbifold) -> ValidationResult:
    """Check label/invariant matching and the sum relation mod 1."""
    problems = []
    if sorted(i.b for i in f.cone_invariants) != sorted(f.base.cone_labels):
        problems.append(
            "cone invariant orders %s do not match base cone labels %s"
            % (sorted(i.b for i in f.cone_invariants), list(f.base.cone_labels))
        )
    if sorted(i.b for i in f.corner_invariants) != sorted(f.base.corner_labels):
        problems.append(
            "corner invariant orders %s do not match base corner labels %s"
            % (sorted(i.b for i in f.corner_invariants), list(f.base.corner_labels))
        )
    residue = _balanced_mod1(relation_sum(f))
    if residue != 0:
        problems.append("invariant relation fails with residue %s" % format_rational(residue))
        return ValidationResult(False, residue, tuple(problems))
    if problems:
        return ValidationResult(False, None, tuple(problems))
    return ValidationResult(True, Fraction(0), ())


def check_valid(f: FiberedOrbifold) -> FiberedOrbifold:
    res = validate(f)
    if not res.ok:
        raise ValueError("invalid fibered orbifold %s: %s" % (f, "; ".join(res.problems)))
    return f


def normalize(f: FiberedOrbifold) -> FiberedOrbifold:
    """Canonical form: invariant lists sorted lexicographically by (b, a).

    Mod-1 reduction of the invariants and dropping of order-1 labels happen
    at construction, so normalizing is idempotent and leaves the relation
    residue unchanged.
    """
    return FiberedOrbifold(
        f.base,
        tuple(sorted(f.cone_invariants, key=lambda i: (i.b, i.a))),
        tuple(sorted(f.corner_invariants, key=lambda i: (i.b, i.a))),
        f.euler,
        f.xi,
    )


def reverse_orientation(f: FiberedOrbifold) -> FiberedOrbifold:
    """Mirror orbifold: negate all local invariants and the Euler class.

    On a disk base the boundary bit is re-solved from the relation (it is
    unchanged exactly when the number of nonzero corner invariants is even).
    The result is normalized, so the map is an involution.
    """
    cones = tuple(i.negated() for i in f.cone_invariants)
    corners = tuple(i.negated() for i in f.corner_invariants)
    e = -f.euler
    if f.base.boundary_components:
        xi = (solve_xi(cones, corners, e),)
    else:
        xi = ()
    return normalize(FiberedOrbifold(f.base, cones, corners, e, xi))


def is_spherical(f: FiberedOrbifold) -> bool:
    """Spherical geometry detection: chi(base) > 0 and e != 0."""
    return euler_characteristic(f.base) > 0 and f.euler != 0


def s3_fibration(u: int, v: int, sign: int = 1) -> FiberedOrbifold:
    """The Seifert fibration of S^3 with base S2(u, v), u, v >= 1 coprime.

    Local invariants are the classes of vbar/u and ubar/v where
    u*ubar + v*vbar = 1, and e = sign * (-1/(u*v)); sign=+1 is the Hopf
    side, sign=-1 its orientation reversal.  (u, v) = (1, 1) gives the Hopf
    fibration (S2; ; -1) itself.
    """
    u, v = int(u), int(v)
    if u < 1 or v < 1:
        raise ValueError("u and v must be positive")
    if gcd(u, v) != 1:
        raise ValueError("u and v must be coprime")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # One solution of u*ubar + v*vbar = 1; the classes mod 1 do not depend
    # on the choice.
    ubar = pow(u, -1, v) if v > 1 else 0
    vbar = (1 - u * ubar) // v
    f = FiberedOrbifold.from_data(
        Surface.SPHERE, [(vbar, u), (ubar, v)], (), Fraction(-1, u * v)
    )
    f = normalize(f)
    if sign == -1:
        f = reverse_orientation(f)
    return check_valid(f)
