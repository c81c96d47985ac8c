"""Rewrite rules from manifold descriptors to loop-space expressions.

Each decompose_* function validates its hypotheses and returns a space
expression built from spheres, loops, products, and wedges.  The rules
bottom out in decompose_general, which splits the loop space of a
Poincare duality complex with middle cells as loops on a product of two
spheres times loops on the wedge produced by the half-smash splitting.

Spec objects only carry validated data; the decomposition itself always
happens in the decompose_* functions, so the same objects serve the CLI,
the service, and direct library use.
"""

from dataclasses import dataclass

from .errors import (
    ExcludedCaseError,
    HypothesisError,
    OutOfScopeError,
    UsageError,
    ValidationError,
)
from .expr import SphereWedge, canonicalize, loop, product, sphere
from .normalize import half_smash_split, normal_form
from .ss_oracle import IntersectionForm

DEFAULT_CAP = 30


def _require_int(value, what, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("%s must be an integer" % what)
    if minimum is not None and value < minimum:
        raise ValidationError("%s must be >= %d, got %d" % (what, minimum, value))
    return value


def _check_cap(cap):
    if isinstance(cap, bool) or not isinstance(cap, int) or cap < 2:
        raise UsageError("cap must be an integer >= 2")
    return cap


def _coerce_wedge(value, what):
    if value is None:
        return SphereWedge.empty()
    if isinstance(value, SphereWedge):
        return value
    if isinstance(value, dict):
        return SphereWedge.from_dict(value)
    raise ValidationError("%s must be a sphere wedge or a dimension map" % what)


def _check_middle_dims(w, m, n, what):
    for dim, _ in w.items:
        if dim < m or dim > n - m:
            raise ValidationError(
                "%s dimension %d lies outside [%d, %d]" % (what, dim, m, n - m)
            )


@dataclass(frozen=True)
class PDSpec:
    """Poincare duality complex with one bottom cell in dimension m, one
    cell in dimension n - m, a wedge of middle spheres between them, and
    a top cell in dimension n."""

    m: int
    n: int
    middle: SphereWedge = SphereWedge.empty()

    def __post_init__(self):
        _require_int(self.m, "m")
        _require_int(self.n, "n")
        object.__setattr__(self, "middle", _coerce_wedge(self.middle, "middle"))
        if not 1 < self.m <= self.n - self.m:
            raise ValidationError(
                "need 1 < m <= n - m, got m=%d n=%d" % (self.m, self.n)
            )
        _check_middle_dims(self.middle, self.m, self.n, "middle sphere")


@dataclass(frozen=True)
class FourManifoldSpec:
    """Closed simply connected four-manifold, given by the rank of its
    middle cohomology and optionally the intersection pairing.

    The pairing is carried for the spectral-sequence oracle only; the
    decomposition is a function of the rank alone.
    """

    rank: int
    form: IntersectionForm = None

    def __post_init__(self):
        _require_int(self.rank, "rank", 0)
        if self.form is not None:
            if not isinstance(self.form, IntersectionForm):
                raise ValidationError("form must be an IntersectionForm")
            if self.form.rank != self.rank:
                raise ValidationError(
                    "form rank %d does not match rank %d"
                    % (self.form.rank, self.rank)
                )


@dataclass(frozen=True)
class WallSpec:
    """Highly connected even-dimensional manifold: (n-1)-connected, of
    dimension 2n, with middle Betti number rank."""

    n: int
    rank: int

    def __post_init__(self):
        _require_int(self.n, "n")
        _require_int(self.rank, "rank")
        if self.n in (2, 4, 8):
            raise ExcludedCaseError("excluded case n in {2, 4, 8}")
        if self.n < 2:
            raise ValidationError("n must be >= 2, got %d" % self.n)
        if self.rank < 2:
            raise OutOfScopeError(
                "middle rank %d is outside the covered range (need >= 2)"
                % self.rank
            )


@dataclass(frozen=True)
class ConnSumSpec:
    """Connected sum of an n-manifold with a product of two spheres; the
    punctured_skeleton wedge is the homotopy type of the first summand
    with a point removed."""

    m: int
    n: int
    punctured_skeleton: SphereWedge = SphereWedge.empty()

    def __post_init__(self):
        _require_int(self.m, "m")
        _require_int(self.n, "n")
        object.__setattr__(
            self,
            "punctured_skeleton",
            _coerce_wedge(self.punctured_skeleton, "punctured_skeleton"),
        )
        if not 1 < self.m <= self.n - self.m:
            raise ValidationError(
                "need 1 < m <= n - m, got m=%d n=%d" % (self.m, self.n)
            )
        _check_middle_dims(
            self.punctured_skeleton, self.m, self.n, "skeleton sphere"
        )


def _check_group_spheres(group_spheres):
    out = tuple(group_spheres)
    if not out:
        raise ValidationError("group_spheres must be nonempty")
    for d in out:
        if isinstance(d, bool) or not isinstance(d, int) or d < 3 or d % 2 == 0:
            raise ValidationError(
                "group spheres must be odd integers >= 3, got %r" % (d,)
            )
    return out


@dataclass(frozen=True)
class BundleSpec:
    """Principal bundle over a four-manifold whose structure group has
    the rational homotopy of a product of odd spheres."""

    base: FourManifoldSpec
    group_spheres: tuple

    def __post_init__(self):
        if not isinstance(self.base, FourManifoldSpec):
            raise ValidationError("bundle base must be a four-manifold spec")
        object.__setattr__(
            self, "group_spheres", _check_group_spheres(self.group_spheres)
        )


@dataclass(frozen=True)
class ConfigSpec:
    """Configuration space of distinct points on a connected sum."""

    base: ConnSumSpec
    points: int

    def __post_init__(self):
        if not isinstance(self.base, ConnSumSpec):
            raise ValidationError("config base must be a connected-sum spec")
        _require_int(self.points, "points", 1)


# ---------------------------------------------------------------------------
# decomposition rules


def decompose_general(p, cap=DEFAULT_CAP):
    """Loop-space decomposition of a Poincare duality complex.

    With no middle cells the complex is a product of two spheres up to
    loop-space equivalence.  Otherwise the loop space splits as loops on
    that product times loops on the half-smash wedge; the wedge is
    computed one degree above the cap so that its own loop space is exact
    through the cap.
    """
    _check_cap(cap)
    two_spheres = loop(product(sphere(p.m), sphere(p.n - p.m)))
    if p.middle.is_point():
        return canonicalize(two_spheres)
    q_factors = normal_form(two_spheres, cap + 1)
    w = half_smash_split(q_factors, p.middle, cap + 1)
    return canonicalize(product(two_spheres, loop(w.as_expr())))


def decompose_wall(w, cap=DEFAULT_CAP):
    """Decomposition of an (n-1)-connected 2n-manifold with middle rank
    at least two: the general rule with rank - 2 middle n-spheres."""
    middle = SphereWedge.from_dict({w.n: w.rank - 2})
    return decompose_general(PDSpec(w.n, 2 * w.n, middle), cap)


def decompose_conn_sum(c, cap=DEFAULT_CAP):
    """Decomposition of a connected sum with a product of two spheres:
    only the punctured skeleton of the other summand enters."""
    return decompose_general(PDSpec(c.m, c.n, c.punctured_skeleton), cap)


def decompose_four_manifold(f, cap=DEFAULT_CAP):
    """Loop-space decomposition of a simply connected four-manifold.

    Rank zero gives loops on the four-sphere and rank one a circle times
    loops on the five-sphere.  From rank two on, a circle splits off and
    the rest is the general decomposition of a five-dimensional complex
    with rank - 2 middle cells in each of dimensions two and three.  The
    intersection form never enters; the result depends on the rank alone.
    """
    k = f.rank
    if k == 0:
        return loop(sphere(4))
    if k == 1:
        return product(sphere(1), loop(sphere(5)))
    middle = SphereWedge.from_dict({2: k - 2, 3: k - 2})
    inner = decompose_general(PDSpec(2, 5, middle), cap)
    return canonicalize(product(sphere(1), inner))


def decompose_bundle(base, group_spheres, cap=DEFAULT_CAP):
    """Decomposition of the total space of a principal bundle over a
    four-manifold of rank at least two: the base decomposition times
    loops on each odd sphere modelling the structure group."""
    if not isinstance(base, FourManifoldSpec):
        raise ValidationError("bundle base must be a four-manifold spec")
    if base.rank < 2:
        raise HypothesisError(
            "bundle decomposition needs middle rank >= 2, got %d" % base.rank
        )
    spheres = _check_group_spheres(group_spheres)
    parts = [decompose_four_manifold(base, cap)]
    parts.extend(loop(sphere(d)) for d in spheres)
    return canonicalize(product(*parts))


def decompose_config(c, points, cap=DEFAULT_CAP):
    """Decomposition of the ordered configuration space of points on an
    odd-dimensional connected sum.

    Returns points + 1 factors: the loop space of the manifold itself,
    then for each added point loops on a wedge that grows by one sphere
    of dimension n - 1 per point already placed.
    """
    if not isinstance(c, ConnSumSpec):
        raise ValidationError("config base must be a connected-sum spec")
    _require_int(points, "points", 1)
    if c.n % 2 == 0:
        raise HypothesisError(
            "configuration decomposition needs odd n, got %d" % c.n
        )
    out = [decompose_conn_sum(c, cap)]
    full = _full_skeleton(c)
    for i in range(1, points + 1):
        w = full.union(SphereWedge.from_dict({c.n - 1: i - 1}))
        out.append(canonicalize(loop(w.as_expr())))
    return out


def _full_skeleton(c):
    extra = {c.m: 1}
    extra[c.n - c.m] = extra.get(c.n - c.m, 0) + 1
    return c.punctured_skeleton.union(SphereWedge.from_dict(extra))


def loop_equivalent(a, b):
    """Decide whether two manifold specs have equivalent loop spaces.

    Comparable pairs are two four-manifolds, two highly connected
    manifolds of equal dimension, and two connected sums of equal
    dimension; the answer depends only on middle rank for the first two
    and on the below-top Betti data for connected sums.  Anything else
    raises UsageError, since the classification is stated within each
    class.
    """
    if isinstance(a, FourManifoldSpec) and isinstance(b, FourManifoldSpec):
        return a.rank == b.rank
    if isinstance(a, WallSpec) and isinstance(b, WallSpec):
        if a.n != b.n:
            raise UsageError(
                "manifolds of dimensions %d and %d are not comparable"
                % (2 * a.n, 2 * b.n)
            )
        return a.rank == b.rank
    if isinstance(a, ConnSumSpec) and isinstance(b, ConnSumSpec):
        if a.n != b.n:
            raise UsageError(
                "connected sums of dimensions %d and %d are not comparable"
                % (a.n, b.n)
            )
        return _full_skeleton(a) == _full_skeleton(b)
    raise UsageError(
        "specs of kinds %s and %s are not comparable"
        % (type(a).__name__, type(b).__name__)
    )


# ---------------------------------------------------------------------------
# JSON wire format


def _get_field(obj, key):
    if key not in obj:
        raise ValidationError("missing field %r in manifold spec" % key)
    return obj[key]


def _get_int(obj, key):
    value = _get_field(obj, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("field %r must be an integer" % key)
    return value


def _get_wedge(obj, key):
    value = obj.get(key)
    if value is None:
        return SphereWedge.empty()
    if not isinstance(value, dict):
        raise ValidationError("field %r must be a dimension map" % key)
    try:
        return SphereWedge.from_dict(value)
    except (TypeError, ValueError):
        raise ValidationError("field %r must map dimensions to counts" % key)


def parse_manifold_spec(obj):
    """Build a manifold spec from its JSON object form.

    The object kind is selected by the "type" field: four_manifold (rank
    k, optional intersection_form), wall (n, k), pd_complex (m, n, J),
    connected_sum (m, n, punctured_skeleton), bundle (base,
    group_spheres), config_space (base, points).
    """
    if not isinstance(obj, dict):
        raise ValidationError("manifold spec must be a JSON object")
    kind = obj.get("type")
    if kind == "four_manifold":
        form = obj.get("intersection_form")
        if form is not None:
            if not isinstance(form, (list, tuple)):
                raise ValidationError("intersection_form must be a matrix")
            form = IntersectionForm(form)
        return FourManifoldSpec(_get_int(obj, "k"), form)
    if kind == "wall":
        return WallSpec(_get_int(obj, "n"), _get_int(obj, "k"))
    if kind == "pd_complex":
        return PDSpec(_get_int(obj, "m"), _get_int(obj, "n"), _get_wedge(obj, "J"))
    if kind == "connected_sum":
        return ConnSumSpec(
            _get_int(obj, "m"),
            _get_int(obj, "n"),
            _get_wedge(obj, "punctured_skeleton"),
        )
    if kind == "bundle":
        base = parse_manifold_spec(_get_field(obj, "base"))
        if not isinstance(base, FourManifoldSpec):
            raise ValidationError("bundle base must be a four_manifold spec")
        group = _get_field(obj, "group_spheres")
        if not isinstance(group, (list, tuple)):
            raise ValidationError("group_spheres must be a list")
        return BundleSpec(base, tuple(group))
    if kind == "config_space":
        base = parse_manifold_spec(_get_field(obj, "base"))
        if not isinstance(base, ConnSumSpec):
            raise ValidationError("config_space base must be a connected_sum spec")
        return ConfigSpec(base, _get_int(obj, "points"))
    raise ValidationError("unknown manifold spec type: %r" % (kind,))


def decompose_spec(spec, cap=DEFAULT_CAP):
    """Decompose any manifold spec; config specs return a list of
    expressions, everything else a single expression."""
    if isinstance(spec, PDSpec):
        return decompose_general(spec, cap)
    if isinstance(spec, FourManifoldSpec):
        return decompose_four_manifold(spec, cap)
    if isinstance(spec, WallSpec):
        return decompose_wall(spec, cap)
    if isinstance(spec, ConnSumSpec):
        return decompose_conn_sum(spec, cap)
    if isinstance(spec, BundleSpec):
        return decompose_bundle(spec.base, spec.group_spheres, cap)
    if isinstance(spec, ConfigSpec):
        return decompose_config(spec.base, spec.points, cap)
    raise UsageError("cannot decompose object of kind %s" % type(spec).__name__)
